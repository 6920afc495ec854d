"""Partitions, permutations and the natural representations of S_n.

Permutations are 0-based image tuples: sigma[i] is the image of i.
Composition is right to left, (s*t)(i) = s[t[i]], and S_n acts on
monomials by renaming variables, so R(s*t) = R(s) @ R(t).

The natural representation of [lambda] uses Clifton's method: with
standard tableaux T_1..T_d (sorted by column word) and
f(S, T) = coefficient of the tabloid {S} in the polytabloid e_T,
B(s)[k, j] = f(T_k, s T_j) and R(s) = B(id)^{-1} B(s).
"""
from collections import OrderedDict
from itertools import combinations, permutations
from math import factorial, prod

import flint
import numpy as np

from .linalg import modp


# -- partitions ---------------------------------------------------------------

def partitions(n, maxpart=None):
    """Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return out


def parse_partition(text):
    """'4,2,1' -> (4, 2, 1); also accepts exponents '6,1^4'."""
    parts = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if "^" in tok:
            a, e = tok.split("^")
            parts.extend([int(a)] * int(e))
        else:
            parts.append(int(tok))
    if not parts or any(x <= 0 for x in parts):
        raise ValueError("bad partition %r" % text)
    lam = tuple(sorted(parts, reverse=True))
    if list(lam) != parts:
        raise ValueError("partition parts must be weakly decreasing: %r" % text)
    return lam


def partition_label(lam):
    if all(x < 10 for x in lam):
        return "".join(str(x) for x in lam)
    return ",".join(str(x) for x in lam)


def conjugate(lam):
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def hooks(lam):
    lc = conjugate(lam)
    return [[lam[i] - j + lc[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def irreducible_dimension(lam):
    n = sum(lam)
    return factorial(n) // prod(h for row in hooks(lam) for h in row)


def standard_tableaux(lam):
    """Standard tableaux of shape lam (entries 0..n-1) as tuples of rows,
    sorted lexicographically by column word (columns left to right, each
    read top to bottom)."""
    n = sum(lam)
    out = []

    def place(rows, k):
        if k == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(rows, k + 1)
                rows[i].pop()

    place([[] for _ in lam], 0)
    out.sort(key=column_word)
    return out


def column_word(t):
    width = len(t[0])
    return tuple(t[i][j] for j in range(width) for i in range(len(t)) if j < len(t[i]))


# -- permutations ---------------------------------------------------------------

def identity(n):
    return tuple(range(n))


def compose(s, t):
    """(s*t)(i) = s(t(i))."""
    return tuple(s[i] for i in t)


def inverse(s):
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def sign(s):
    s = list(s)
    sgn = 1
    seen = [False] * len(s)
    for i in range(len(s)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = s[j]
                length += 1
            if length % 2 == 0:
                sgn = -sgn
    return sgn


def parse_permutation(text):
    """One-line 1-based notation '2 1 3' or '2,1,3' -> 0-based tuple."""
    vals = [int(x) - 1 for x in text.replace(",", " ").split()]
    if sorted(vals) != list(range(len(vals))):
        raise ValueError("not a permutation: %r" % text)
    return tuple(vals)


def lex_rank(perms):
    """Lexicographic rank of each row of an (m, n) array of permutations."""
    perms = np.asarray(perms, dtype=np.int64)
    m, n = perms.shape
    less = (perms[:, None, :] < perms[:, :, None])  # [r, i, j]: w_j < w_i
    upper = np.triu(np.ones((n, n), dtype=bool), 1)
    lehmer = (less & upper).sum(axis=2)
    weights = np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)
    return lehmer @ weights


def all_permutations(n):
    return np.array(list(permutations(range(n))), dtype=np.int64)


def multiset_permutations(mults):
    """All distinct arrangements of the multiset with letter i repeated
    mults[i] times, in lexicographic order."""
    counts = list(mults)
    n = sum(counts)
    out = []
    cur = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                cur.append(i)
                rec()
                cur.pop()
                counts[i] += 1

    rec()
    return out


# -- representation matrices ----------------------------------------------------

class RepMatrixProvider:
    """Natural representation matrices of [lam], exact (p None) or mod p.

    Exact matrices are int64 arrays; modular ones are int64 arrays reduced
    to [0, p).  Computed matrices are memoized up to `memo_bytes`.
    """

    def __init__(self, lam, p=None, memo_bytes=256 << 20):
        self.lam = tuple(lam)
        self.n = sum(lam)
        self.p = p
        self.tableaux = standard_tableaux(self.lam)
        self.dim = len(self.tableaux)
        d, n = self.dim, self.n
        self.row_of = np.zeros((d, n), dtype=np.int64)
        self.col_of = np.zeros((d, n), dtype=np.int64)
        for k, t in enumerate(self.tableaux):
            for i, row in enumerate(t):
                for j, v in enumerate(row):
                    self.row_of[k, v] = i
                    self.col_of[k, v] = j
        pairs = np.array(list(combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
        self._pv, self._pw = pairs[:, 0], pairs[:, 1]
        self._same_row = (self.row_of[:, self._pv] == self.row_of[:, self._pw]).astype(np.float64)
        self._row_order = np.sign(self.row_of[:, self._pw] - self.row_of[:, self._pv]).astype(np.float64)
        b0 = self.clifton_matrix(identity(n))
        self._b0inv = self._invert(b0)
        self._memo = OrderedDict()
        self._memo_limit = max(16, memo_bytes // max(1, d * d * 8))

    def _invert(self, b0):
        if self.p is None:
            inv = flint.fmpz_mat(b0.tolist()).inv()
            num, den = inv.numer_denom()
            den = int(den)
            vals = np.array([[int(x) for x in row] for row in num.tolist()], dtype=object)
            if any(v % den for v in vals.flat):
                raise ArithmeticError("B(id) is not unimodular")
            return (vals // den).astype(np.int64)
        return modp.inverse(b0 % self.p, self.p)

    def clifton_matrix(self, s):
        """B(s)[k, j] = f(T_k, s T_j) with entries in {0, 1, -1}."""
        sinv = np.asarray(inverse(s), dtype=np.int64)
        rows = self.row_of[:, sinv]
        cols = self.col_of[:, sinv]
        same_col = (cols[:, self._pv] == cols[:, self._pw])
        conflict = self._same_row @ same_col.astype(np.float64).T
        order = np.sign(rows[:, self._pw] - rows[:, self._pv]) * same_col
        agree = self._row_order @ order.astype(np.float64).T
        npairs = same_col.sum(axis=1)
        discord = (npairs[None, :] - agree.astype(np.int64)) // 2
        b = np.where(discord % 2 == 0, 1, -1)
        b[conflict > 0] = 0
        return b.astype(np.int64)

    def matrix(self, s):
        s = tuple(int(x) for x in s)
        if len(s) != self.n:
            raise ValueError("permutation of %d points for a partition of %d" % (len(s), self.n))
        hit = self._memo.get(s)
        if hit is not None:
            self._memo.move_to_end(s)
            return hit
        b = self.clifton_matrix(s)
        if self.p is None:
            r = self._b0inv @ b
        else:
            r = modp.matmul(self._b0inv, b % self.p, self.p)
        r.setflags(write=False)
        self._memo[s] = r
        if len(self._memo) > self._memo_limit:
            self._memo.popitem(last=False)
        return r

    def element(self, terms):
        """R of a group-algebra element given as (perm, coeff) pairs."""
        d = self.dim
        out = np.zeros((d, d), dtype=np.int64)
        for s, c in terms:
            c = int(c)
            if c:
                out += c * self.matrix(s)
                if self.p is not None:
                    out %= self.p
        if self.p is not None:
            out %= self.p
        return out


def rep_matrix(lam, s, p=None):
    return RepMatrixProvider(lam, p).matrix(s)


# -- linearization ---------------------------------------------------------------

def _block_positions(blocks):
    out, start = [], 0
    for b in blocks:
        out.append(list(range(start, start + b)))
        start += b
    return out


def _transposition(n, i, j):
    s = list(range(n))
    s[i], s[j] = j, i
    return tuple(s)


def symmetric_group_sum(provider, positions, signed=False):
    """sum over permutations s of `positions` of (sign(s)) R(s), via the
    coset factorization sum_{S_m} = (sum_j (j m)) * sum_{S_{m-1}}."""
    n, d, p = provider.n, provider.dim, provider.p
    total = np.eye(d, dtype=np.int64)
    for m in range(1, len(positions)):
        coset = np.eye(d, dtype=np.int64)
        for j in range(m):
            t = provider.matrix(_transposition(n, positions[j], positions[m]))
            coset = coset - t if signed else coset + t
        total = coset @ total if p is None else modp.matmul(coset % p, total, p)
    return total if p is None else total % p


def linearization_matrix(blocks, lam, mode="symmetric", split=1, provider=None, p=None):
    """Sum of R(s) over the Young subgroup of `blocks`.

    mode 'symmetric' or 'alternating' (signed) applies to every block;
    'mixed' makes blocks[:split] symmetric and blocks[split:] one alternating
    group on their union (the product of the two factors).
    """
    if sum(blocks) != sum(lam):
        raise ValueError("blocks must sum to the degree of the partition")
    if provider is None:
        provider = RepMatrixProvider(lam, p)
    pp = provider.p
    pos = _block_positions(blocks)
    if mode == "mixed":
        alt = [x for blk in pos[split:] for x in blk]
        groups = [(blk, False) for blk in pos[:split]] + [(alt, True)]
    elif mode in ("symmetric", "alternating"):
        groups = [(blk, mode == "alternating") for blk in pos]
    else:
        raise ValueError("unknown linearization mode %r" % mode)
    out = np.eye(provider.dim, dtype=np.int64)
    for positions, signed in groups:
        if len(positions) < 2:
            continue
        f = symmetric_group_sum(provider, positions, signed)
        out = out @ f if pp is None else modp.matmul(out, f, pp)
    return out


def young_subgroup(blocks):
    """Elements of the Young subgroup as (perm, sign) pairs."""
    n = sum(blocks)
    pos = _block_positions(blocks)
    out = [(identity(n), 1)]
    for blk in pos:
        nxt = []
        for s, sg in out:
            for img in permutations(blk):
                t = list(s)
                for a, b in zip(blk, img):
                    t[a] = b
                nxt.append((tuple(t), sg * sign(tuple(img[i] - blk[0] for i in range(len(blk))))))
        out = nxt
    return out


def basic_linearization(letters, blocks):
    """Replace the occurrences of letter i, left to right, by the increasing
    variable indices of block i."""
    pos = _block_positions(blocks)
    used = [0] * len(blocks)
    out = []
    for x in letters:
        if used[x] >= blocks[x]:
            raise ValueError("letter multiplicities do not match the blocks")
        out.append(pos[x][used[x]])
        used[x] += 1
    if used != list(blocks):
        raise ValueError("letter multiplicities do not match the blocks")
    return tuple(out)
