"""Dense linear algebra over a prime field F_p on numpy int64 arrays.

Entries are kept reduced to [0, p).  Products of blocks go through float64
BLAS whenever the inner dimension is small enough for every partial sum to
stay below 2**53; otherwise an exact int64 (or object) product is used.

The reduced row echelon form follows a fixed pivot rule: the pivot of each
row is its first nonzero column, rows are processed top to bottom, so the
result depends only on the row space.
"""
import numpy as np

_FLOAT_EXACT = 2 ** 53
_INT_EXACT = 2 ** 62
_SMALL = 32


def as_mod(a, p):
    """Copy `a` into an int64 array reduced mod p."""
    a = np.asarray(a)
    if a.dtype == object:
        return np.array([[int(x) % p for x in row] for row in a], dtype=np.int64).reshape(a.shape)
    return np.mod(a.astype(np.int64, copy=False), p)


def matmul(a, b, p):
    """(a @ b) mod p for reduced int64 arrays."""
    m, k = a.shape
    n = b.shape[1]
    if k == 0 or m == 0 or n == 0:
        return np.zeros((m, n), dtype=np.int64)
    bound = (p - 1) ** 2
    if k * bound < _FLOAT_EXACT:
        c = a.astype(np.float64) @ b.astype(np.float64)
        return np.fmod(c, p).astype(np.int64)
    if bound < _INT_EXACT:
        step = max(1, _INT_EXACT // bound)
        out = np.zeros((m, n), dtype=np.int64)
        for s in range(0, k, step):
            out = (out + a[:, s:s + step] @ b[s:s + step]) % p
        return out
    prod = a.astype(object) @ b.astype(object)
    return np.array(prod % p, dtype=np.int64)


def inv_mod(x, p):
    return pow(int(x), -1, p)


def _rref_small(a, p):
    """Gauss-Jordan on a few rows; returns (rows, pivots) without zero rows."""
    a = a.copy()
    m, n = a.shape
    pivots = []
    r = 0
    col = 0
    while r < m and col < n:
        nz = np.flatnonzero(a[r:, col:].any(axis=0))
        if nz.size == 0:
            break
        c = col + int(nz[0])
        i = r + int(np.flatnonzero(a[r:, c])[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = inv_mod(a[r, c], p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            f = a[others, c:c + 1]
            a[others] = (a[others] - f * a[r]) % p
        pivots.append(c)
        r += 1
        col = c + 1
    return a[:r], pivots


class RowSpace:
    """Row space over F_p held as a reduced row echelon basis.

    Rows can be added in blocks; the basis stays fully reduced, so the
    basis after any sequence of insertions equals the RCF of everything
    inserted so far.
    """

    def __init__(self, ncols, p):
        self.ncols = ncols
        self.p = p
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots = np.zeros(0, dtype=np.int64)

    @property
    def rank(self):
        return self.basis.shape[0]

    def copy(self):
        other = RowSpace(self.ncols, self.p)
        other.basis = self.basis.copy()
        other.pivots = self.pivots.copy()
        return other

    def reduce(self, rows):
        """Remainders of `rows` after elimination against the basis."""
        rows = np.mod(np.asarray(rows, dtype=np.int64), self.p)
        if self.rank == 0 or rows.shape[0] == 0:
            return rows
        coef = rows[:, self.pivots]
        return (rows - matmul(coef, self.basis, self.p)) % self.p

    def contains(self, rows):
        return not self.reduce(rows).any()

    def insert(self, rows):
        """Add rows to the space; returns the increase in rank."""
        rows = np.atleast_2d(rows)
        if rows.shape[0] == 0:
            return 0
        rem = self.reduce(rows)
        keep = rem.any(axis=1)
        if not keep.any():
            return 0
        new, newpiv = rref(rem[keep], self.p)
        if not newpiv:
            return 0
        newpiv = np.asarray(newpiv, dtype=np.int64)
        p = self.p
        if self.rank:
            coef = self.basis[:, newpiv]
            if coef.any():
                self.basis = (self.basis - matmul(coef, new, p)) % p
            basis = np.vstack([self.basis, new])
            pivots = np.concatenate([self.pivots, newpiv])
        else:
            basis, pivots = new, newpiv
        order = np.argsort(pivots, kind="stable")
        self.basis = basis[order]
        self.pivots = pivots[order]
        return len(newpiv)


def rref(a, p):
    """Reduced row echelon form mod p with zero rows removed.

    Returns (rows, pivot_columns).  Large inputs are split in halves: the
    top half is reduced recursively and the bottom half is inserted into
    its row space, so almost all work is block matrix products.
    """
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    m = a.shape[0]
    if m <= _SMALL:
        return _rref_small(a, p)
    h = m // 2
    top, piv = rref(a[:h], p)
    space = RowSpace(a.shape[1], p)
    space.basis = top
    space.pivots = np.asarray(piv, dtype=np.int64)
    space.insert(a[h:])
    return space.basis, [int(c) for c in space.pivots]


def rank(a, p):
    return len(rref(a, p)[1])


def nullspace_from_rref(r, pivots, ncols, p):
    """Canonical right nullspace basis from an RREF.

    Free variables are set to the standard basis vectors in column order and
    the leading variables solved for; the result is already in RCF up to
    row order, and is returned sorted by pivot.
    """
    pivots = list(pivots)
    free = [c for c in range(ncols) if c not in set(pivots)]
    k = np.zeros((len(free), ncols), dtype=np.int64)
    if not free:
        return k
    k[np.arange(len(free)), free] = 1
    if pivots:
        k[:, pivots] = (-r[:, free].T) % p
    return rref(k, p)[0]


def nullspace(a, p):
    a = np.asarray(a)
    r, piv = rref(a, p)
    return nullspace_from_rref(r, piv, a.shape[1], p)


def left_nullity(blocks, p):
    """Dimension of {v : v @ X = 0} for X the vertical stack of `blocks`."""
    x = np.vstack(blocks)
    return x.shape[0] - rank(x, p)


def inverse(a, p):
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    n = a.shape[0]
    aug = np.hstack([a, np.eye(n, dtype=np.int64)])
    r, piv = rref(aug, p)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular mod %d" % p)
    return r[:, n:]


def symmetric(a, p):
    """Symmetric representatives in (-p/2, p/2]."""
    a = np.asarray(a, dtype=np.int64) % p
    return np.where(a > p // 2, a - p, a)
