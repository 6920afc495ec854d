"""Integer lattices: Hermite normal form with transform, LLL, basis size.

The elimination itself is delegated to FLINT (python-flint); this module
fixes the contracts and provides exact checks of the results.
"""
from fractions import Fraction
from math import gcd, log10

import flint


def to_fmpz(a):
    a = [[int(x) for x in row] for row in a]
    if not a:
        return flint.fmpz_mat(0, 0)
    return flint.fmpz_mat(a)


def to_lists(m):
    return [[int(x) for x in row] for row in m.tolist()]


def hermite_with_transform(a):
    """HNF of the transpose of `a` together with a unimodular transform.

    Returns (h, u, rank) as integer lists with u @ a.T == h, h in row
    Hermite form (zero rows last).  The last cols(a) - rank rows of u are a
    lattice basis of the integer right nullspace of a.
    """
    a = [[int(x) for x in row] for row in a]
    at = flint.fmpz_mat(a).transpose() if a else flint.fmpz_mat(0, 0)
    if at.nrows() == 0:
        return [], [], 0
    h, u = at.hnf(transform=True)
    h = to_lists(h)
    u = to_lists(u)
    rank = sum(1 for row in h if any(row))
    return h, u, rank


def integer_nullspace(a):
    """Lattice basis of {x in Z^n : a x = 0} from the HNF transform."""
    h, u, rank = hermite_with_transform(a)
    return u[rank:]


def is_hermite_form(h):
    """Row Hermite form: positive pivots moving right, entries above each
    pivot reduced into [0, pivot), zero rows at the bottom."""
    last = -1
    seen_zero = False
    for i, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        c = nz[0]
        if c <= last or row[c] <= 0:
            return False
        for k in range(i):
            if not 0 <= h[k][c] < row[c]:
                return False
        last = c
    return True


def check_lll_delta(delta):
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("LLL parameter must lie in (1/4, 1), got %s" % delta)
    return delta


def lll_reduce(basis, delta=Fraction(3, 4)):
    """delta-LLL reduction of the rows of `basis` (list of integer vectors)."""
    delta = check_lll_delta(delta)
    if not basis:
        return []
    m = to_fmpz(basis)
    out = m.lll(delta=float(delta))
    return to_lists(out)


def _gram_fflu(basis):
    b = to_fmpz(basis)
    g = b * b.transpose()
    P, L, D, U = g.fflu()
    if not P.is_one():
        raise ValueError("basis rows are linearly dependent")
    return to_lists(U)


def gram_schmidt_data(basis):
    """Exact (mu, |b*_i|^2) of the Gram-Schmidt process via fraction-free LU
    of the Gram matrix."""
    u = _gram_fflu(basis)
    n = len(u)
    d = [u[i][i] for i in range(n)]
    mu = [[Fraction(u[j][i], d[j]) for j in range(i)] for i in range(n)]
    norms = [Fraction(d[i], d[i - 1] if i else 1) for i in range(n)]
    return mu, norms


def lll_violations(basis, delta=Fraction(3, 4), eta=Fraction(1, 2)):
    """Count pairs failing size reduction (|mu| > eta) and indices failing
    the Lovasz condition; exact arithmetic."""
    delta = Fraction(delta)
    eta = Fraction(eta)
    if not basis:
        return 0, 0
    u = _gram_fflu(basis)
    n = len(u)
    d = [u[i][i] for i in range(n)]
    size_bad = 0
    for j in range(n):
        dj = d[j]
        row = u[j]
        for i in range(j + 1, n):
            if abs(Fraction(row[i], dj)) > eta:
                size_bad += 1
    lovasz_bad = 0
    for i in range(1, n):
        prev = d[i - 2] if i >= 2 else 1
        bstar_prev = Fraction(d[i - 1], prev)
        bstar = Fraction(d[i], d[i - 1])
        mu = Fraction(u[i - 1][i], d[i - 1])
        if bstar < (delta - mu * mu) * bstar_prev:
            lovasz_bad += 1
    return size_bad, lovasz_bad


def hermite_basis(basis):
    """Row HNF with zero rows dropped; equal results mean equal lattices."""
    if not basis:
        return []
    h = to_lists(to_fmpz(basis).hnf())
    return [row for row in h if any(row)]


def same_lattice(b1, b2):
    return hermite_basis(b1) == hermite_basis(b2)


def lattice_basis_size(basis):
    """Sum over rows of log10 of the Euclidean length."""
    total = 0.0
    for v in basis:
        s = sum(int(x) * int(x) for x in v)
        if s == 0:
            raise ValueError("zero vector in lattice basis")
        total += 0.5 * log10(s)
    return total


def primitive(v):
    """Divide an integer vector by the gcd of its entries; sign untouched."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g <= 1:
        return [int(x) for x in v]
    return [int(x) // g for x in v]


def sort_by_length(vectors):
    """Stable sort by (squared length, number of nonzeros, entries)."""
    return sorted(vectors, key=lambda v: (sum(int(x) ** 2 for x in v),
                                           sum(1 for x in v if x), tuple(v)))


def unimodular(u):
    """|det u| == 1, by FLINT's exact determinant."""
    return abs(int(to_fmpz(u).det())) == 1


def int_matmul(a, b):
    return to_lists(to_fmpz(a) * to_fmpz(b))

