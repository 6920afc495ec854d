"""Finite dimensional associative algebras given by structure constants on a
basis of standard monomials, and their Wedderburn analysis: radical, center,
central idempotents, simple ideals and matrix units."""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt

import sympy as sp

from ..linalg.fields import (QuadraticNumber, field_nullspace, field_rank, field_rref,
                             field_solve, squarefree_part, to_field)
from ..ncgroebner import NCPolynomial, format_polynomial


class ExtensionRequired(ArithmeticError):
    """Splitting the center needs a quadratic extension of Q."""


class UnsupportedExtension(ArithmeticError):
    """A cubic or higher irreducible factor, or a second quadratic field."""


class FiniteAlgebra:
    """Algebra with basis `words` (words[0] is the identity) and
    products b_i b_j = sum_k table[i][j][k] b_k over Q or Q(sqrt D)."""

    def __init__(self, words, table, D=None):
        self.words = list(words)
        self.D = D
        d = len(self.words)
        self.table = [[[to_field(table[i][j][k], D) for k in range(d)] for j in range(d)]
                      for i in range(d)]
        self._sparse = [[[(k, c) for k, c in enumerate(self.table[i][j]) if c] for j in range(d)]
                        for i in range(d)]

    @property
    def dim(self):
        return len(self.words)

    @property
    def field_name(self):
        return "Q" if self.D is None else "Q(sqrt(%d))" % self.D

    def scalar(self, v):
        return to_field(v, self.D)

    def zero(self):
        return [self.scalar(0)] * self.dim

    def basis_element(self, i):
        v = self.zero()
        v[i] = self.scalar(1)
        return v

    def one(self):
        return self.basis_element(0)

    def element(self, terms):
        """Element from {word: coefficient}; words must be basis words."""
        v = self.zero()
        idx = {w: i for i, w in enumerate(self.words)}
        for w, c in terms.items():
            v[idx[w]] = v[idx[w]] + self.scalar(c)
        return v

    def mul(self, x, y):
        out = self.zero()
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                ab = a * b
                for k, c in self._sparse[i][j]:
                    out[k] = out[k] + ab * c
        return out

    def add(self, x, y):
        return [a + b for a, b in zip(x, y)]

    def sub(self, x, y):
        return [a - b for a, b in zip(x, y)]

    def scale(self, k, x):
        k = self.scalar(k)
        return [k * a for a in x]

    def extend(self, D):
        """The same algebra with scalars in Q(sqrt D)."""
        if self.D is not None and self.D != D:
            raise UnsupportedExtension("already working over Q(sqrt %d)" % self.D)
        return FiniteAlgebra(self.words, self.table, D)

    def is_associative(self):
        d = self.dim
        for i, j, k in product(range(d), repeat=3):
            bi, bj, bk = self.basis_element(i), self.basis_element(j), self.basis_element(k)
            if self.mul(self.mul(bi, bj), bk) != self.mul(bi, self.mul(bj, bk)):
                return False
        return True

    def is_unital(self):
        one = self.one()
        return all(self.mul(one, self.basis_element(i)) == self.basis_element(i) ==
                   self.mul(self.basis_element(i), one) for i in range(self.dim))

    def format(self, x):
        """Highest basis word first, as in '-a^2ba + a'."""
        terms = [(w, c.x if isinstance(c, QuadraticNumber) and c.is_rational() else c)
                 for w, c in zip(self.words, x) if c]
        return format_polynomial(terms[::-1])

    def product_string(self, i, j):
        return self.format(self.table[i][j])


def multiplication_table(gb, monomials):
    """Structure constants from normal forms of products of standard
    monomials; `monomials` must start with the empty word."""
    words = list(monomials)
    if not words or words[0] != "":
        raise ValueError("the basis must start with the identity")
    idx = {w: i for i, w in enumerate(words)}
    d = len(words)
    table = []
    for u in words:
        row = []
        for v in words:
            nf = gb.normal_form(NCPolynomial({u + v: 1}, gb.order))
            vec = [Fraction(0)] * d
            for w, c in nf.terms.items():
                vec[idx[w]] = c
            row.append(vec)
        table.append(row)
    return FiniteAlgebra(words, table)


# -- radical and center ---------------------------------------------------------

def dickson_matrix(a):
    """Delta_ij = sum_k sum_l c_ji^k c_kl^l."""
    d = a.dim
    tr = [sum((a.table[k][l][l] for l in range(d)), a.scalar(0)) for k in range(d)]
    return [[sum((a.table[j][i][k] * tr[k] for k in range(d)), a.scalar(0)) for j in range(d)]
            for i in range(d)]


def dickson_radical(a):
    """(Dickson matrix, basis of its nullspace = the radical)."""
    delta = dickson_matrix(a)
    return delta, field_nullspace(delta, a.dim)


def is_semisimple(a):
    return field_rank(dickson_matrix(a), a.dim) == a.dim


def center(a):
    """RCF basis of {x : x b_j = b_j x for all j}."""
    d = a.dim
    rows = []
    for j in range(d):
        for k in range(d):
            row = [a.table[i][j][k] - a.table[j][i][k] for i in range(d)]
            if any(row):
                rows.append(row)
    if not rows:
        return [a.basis_element(i) for i in range(d)]
    return field_nullspace(rows, d)


def span_basis(vectors, ncols):
    vs = [v for v in vectors if any(v)]
    if not vs:
        return []
    return field_rref(vs, ncols)[0]


# -- minimal polynomials and factorization -------------------------------------

def minimal_polynomial(a, x, e=None):
    """Monic coefficients [c_0, ..., c_k = 1] of the minimal polynomial of x
    in the algebra with identity e (default 1), from the first linear
    dependence among e, x, x^2, ..."""
    if e is None:
        e = a.one()
    powers = [e]
    while True:
        nxt = a.mul(powers[-1], x)
        cols = [list(col) for col in zip(*powers)]
        sol = field_solve(cols, nxt)
        if sol is not None:
            return [-c for c in sol] + [a.scalar(1)]
        powers.append(nxt)
        if len(powers) > a.dim + 1:
            raise ArithmeticError("no dependence among powers")


def evaluate(a, coeffs, x, e):
    """sum c_i x^i with x^0 = e (Horner)."""
    r = a.scale(coeffs[-1], e)
    for c in reversed(coeffs[:-1]):
        r = a.add(a.mul(r, x), a.scale(c, e))
    return r


_T = sp.Symbol("t")


def _to_sympy(c, D):
    if isinstance(c, QuadraticNumber):
        return sp.Rational(c.x.numerator, c.x.denominator) + \
            sp.Rational(c.y.numerator, c.y.denominator) * sp.sqrt(c.D)
    c = Fraction(c)
    return sp.Rational(c.numerator, c.denominator)


def _rational(v):
    v = sp.nsimplify(v)
    if not v.is_Rational:
        raise UnsupportedExtension("coefficient %s outside the field" % v)
    return Fraction(int(v.p), int(v.q))


def _from_sympy(c, D):
    c = sp.expand(c)
    if D is None:
        return _rational(c)
    if D < 0:
        x = _rational(sp.re(c))
        y = _rational(sp.simplify(sp.im(c) / sp.sqrt(-D)))
    else:
        y = _rational(c.coeff(sp.sqrt(D)))
        x = _rational(sp.expand(c - y * sp.sqrt(D)))
    return QuadraticNumber(x, y, D)


def factor_polynomial(coeffs, D=None):
    """Monic irreducible factors with multiplicities over Q or Q(sqrt D);
    each factor as a coefficient list (constant term first)."""
    expr = sum(_to_sympy(c, D) * _T ** i for i, c in enumerate(coeffs))
    kw = {"extension": sp.sqrt(D)} if D is not None else {}
    _, facs = sp.factor_list(sp.expand(expr), _T, **kw)
    out = []
    for f, mult in facs:
        poly = sp.Poly(f, _T)
        lc = poly.LC()
        cs = [_from_sympy(sp.expand(c / lc), D) for c in reversed(poly.all_coeffs())]
        if D is not None:
            cs = [to_field(c, D) for c in cs]
        out.append((cs, mult))
    out.sort(key=lambda fm: (len(fm[0]), [str(c) for c in fm[0]]))
    return out


def _poly_mul(p, q):
    out = [p[0] * 0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return out


# -- splitting the center -------------------------------------------------------

@dataclass
class IdempotentDecomposition:
    algebra: FiniteAlgebra
    idempotents: list
    ideal_dims: list
    extension: object = None      # D when a quadratic field was adjoined
    steps: list = field(default_factory=list)

    @property
    def field_name(self):
        return self.algebra.field_name

    def verify(self):
        """e^2 = e, e_i e_j = 0, sum = 1, each e central; exact."""
        a = self.algebra
        es = self.idempotents
        total = a.zero()
        for i, e in enumerate(es):
            total = a.add(total, e)
            for j, f in enumerate(es):
                prod = a.mul(e, f)
                if prod != (e if i == j else a.zero()):
                    return False
            for k in range(a.dim):
                b = a.basis_element(k)
                if a.mul(e, b) != a.mul(b, e):
                    return False
        return total == a.one()

    def strings(self):
        return [self.algebra.format(e) for e in self.idempotents]


def _component_idempotents(a, x, e, factors):
    """Orthogonal idempotents below e, one per coprime factor of the minimal
    polynomial of x: e_i is the identity of the ideal generated by
    y_i = prod_{j != i} f_j(x)."""
    out = []
    for i, (fi, _) in enumerate(factors):
        h = [a.scalar(1)]
        for j, (fj, _) in enumerate(factors):
            if j != i:
                h = _poly_mul(h, fj)
        y = evaluate(a, h, x, e)
        gens = [y]
        for _ in range(len(fi) - 2):
            gens.append(a.mul(gens[-1], x))
        cols = [list(col) for col in zip(*[a.mul(g, y) for g in gens])]
        sol = field_solve(cols, y)
        if sol is None:
            raise ArithmeticError("component ideal has no identity")
        ei = a.zero()
        for c, g in zip(sol, gens):
            ei = a.add(ei, a.scale(c, g))
        out.append(ei)
    return out


def _candidates(a, zbasis, e):
    """Central elements below e that are not multiples of e."""
    ez = span_basis([a.mul(e, z) for z in zbasis], a.dim)
    cands = [v for v in ez if field_rank([v, e], a.dim) == 2]
    cands += [a.add(u, v) for i, u in enumerate(cands) for v in cands[i + 1:]]
    return ez, cands


def split_center(a, allow_extension=False, max_extension_steps=1):
    """Orthogonal primitive central idempotents summing to 1.

    Repeatedly split an idempotent e by the factorization of the minimal
    polynomial of a central element of eA.  When every candidate has an
    irreducible quadratic minimal polynomial, adjoin the square root of its
    discriminant (once) and carry on over the larger field.
    """
    zbasis = center(a)
    work = [a.one()]
    done = []
    steps = []
    extension = None
    while work:
        e = work.pop(0)
        ez, cands = _candidates(a, zbasis, e)
        if len(ez) <= 1:
            done.append(e)
            continue
        split = None
        stuck = None
        for x in cands:
            mp = minimal_polynomial(a, x, e)
            facs = factor_polynomial(mp, a.D)
            if any(m > 1 for _, m in facs):
                raise ArithmeticError("repeated factor in a minimal polynomial: not semisimple")
            if len(facs) > 1:
                split = (x, mp, facs)
                break
            if stuck is None:
                stuck = mp
        if split is not None:
            x, mp, facs = split
            parts = _component_idempotents(a, x, e, facs)
            steps.append({"e": a.format(e), "x": a.format(x), "minpoly": [str(c) for c in mp],
                          "factors": len(facs)})
            work = parts + work
            continue
        deg = len(stuck) - 1
        if deg != 2:
            raise UnsupportedExtension("irreducible factor of degree %d" % deg)
        disc = stuck[1] * stuck[1] - 4 * stuck[0]
        if a.D is not None:
            raise UnsupportedExtension("a second quadratic extension would be needed")
        if not allow_extension:
            raise ExtensionRequired("minimal polynomial %s is an irreducible quadratic" %
                                    [str(c) for c in stuck])
        disc = Fraction(disc)
        D, _ = squarefree_part(disc.numerator * disc.denominator)
        extension = D
        steps.append({"extend": D})
        a = a.extend(D)
        zbasis = [[to_field(c, D) for c in v] for v in zbasis]
        work = [[to_field(c, D) for c in v] for v in [e] + work]
        done = [[to_field(c, D) for c in v] for v in done]
    dims = [simple_ideal_dimension(a, e) for e in done]
    order = sorted(range(len(done)), key=lambda i: dims[i])
    return IdempotentDecomposition(a, [done[i] for i in order], [dims[i] for i in order],
                                   extension, steps)


def simple_ideal_dimension(a, e):
    """Dimension of the two-sided ideal generated by a central e, i.e. eA."""
    return len(span_basis([a.mul(e, a.basis_element(i)) for i in range(a.dim)], a.dim))


def simple_ideal_dimensions(a, decomposition):
    return [simple_ideal_dimension(a, e) for e in decomposition.idempotents]


# -- matrix units -----------------------------------------------------------------

@dataclass
class MatrixUnitMap:
    algebra: FiniteAlgebra
    idempotent: list
    size: int
    generator: str
    left_basis: list
    units: dict          # (i, j) -> element, 1-based

    def verify(self):
        a = self.algebra
        m = self.size
        total = a.zero()
        for i in range(1, m + 1):
            total = a.add(total, self.units[(i, i)])
        if total != self.idempotent:
            return False
        for (i, j), x in self.units.items():
            for (k, l), y in self.units.items():
                want = self.units[(i, l)] if j == k else a.zero()
                if a.mul(x, y) != want:
                    return False
        return True

    def strings(self):
        m = self.size
        return [self.algebra.format(self.units[(i, j)]) for i in range(1, m + 1)
                for j in range(1, m + 1)]


def _left_ideal(a, v, m):
    """First linearly independent elements among b_i v (basis order), if
    the left ideal Av has dimension m."""
    chosen = []
    for i in range(a.dim):
        w = a.mul(a.basis_element(i), v)
        if any(w) and field_rank(chosen + [w], a.dim) > len(chosen):
            chosen.append(w)
            if len(chosen) > m:
                return None
    return chosen if len(chosen) == m else None


def matrix_unit_isomorphism(a, e):
    """Matrix units of the simple ideal eA = M_m: E_ij e_k = delta_jk e_i on
    a minimal left ideal with basis e_1..e_m."""
    ideal = span_basis([a.mul(e, a.basis_element(i)) for i in range(a.dim)], a.dim)
    n = len(ideal)
    m = isqrt(n)
    if m * m != n:
        raise ArithmeticError("ideal dimension %d is not a square" % n)
    if m == 1:
        return MatrixUnitMap(a, e, 1, a.format(e), [e], {(1, 1): e})

    def in_ideal(v):
        return field_rank(ideal + [v], a.dim) == n

    cands = [(a.words[i], a.basis_element(i)) for i in range(1, a.dim)
             if in_ideal(a.basis_element(i))]
    cands += [(a.format(v), v) for v in ideal]
    cands += [(a.format(a.mul(e, a.basis_element(i))), a.mul(e, a.basis_element(i)))
              for i in range(a.dim)]
    for label, v in cands:
        basis = _left_ideal(a, v, m)
        if basis is None:
            continue
        units = {}
        ok = True
        # E = sum c_t ideal[t]; E e_k = delta_jk e_i is linear in c
        acts = [[a.mul(g, ek) for ek in basis] for g in ideal]
        rows = []
        for k in range(m):
            for coord in range(a.dim):
                rows.append([acts[t][k][coord] for t in range(n)])
        for i in range(m):
            for j in range(m):
                rhs = []
                for k in range(m):
                    target = basis[i] if k == j else a.zero()
                    rhs.extend(target)
                sol = field_solve(rows, rhs)
                if sol is None:
                    ok = False
                    break
                x = a.zero()
                for c, g in zip(sol, ideal):
                    x = a.add(x, a.scale(c, g))
                units[(i + 1, j + 1)] = x
            if not ok:
                break
        if ok:
            out = MatrixUnitMap(a, e, m, label, basis, units)
            if out.verify():
                return out
    raise ArithmeticError("no %d-dimensional left ideal found" % m)
