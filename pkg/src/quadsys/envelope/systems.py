"""Finite quadruple systems given by matrices closed under the (anti-)tetrad,
and the presentations of their universal associative envelopes."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
import re

import numpy as np

from ..free_algebra import OperationKind
from ..linalg.fields import field_solve
from ..ncgroebner import MonomialOrder, NCPolynomial, self_reduce

LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass
class QuadSystem:
    """Subspace of a matrix algebra with basis `matrices` (integer arrays),
    closed under {x,y,z,w} = xyzw + eps * wzyx."""
    name: str
    op: OperationKind
    matrices: list

    def __post_init__(self):
        self.op = OperationKind.parse(self.op)
        self.matrices = [np.asarray(m, dtype=np.int64) for m in self.matrices]
        self._flat = [[Fraction(int(x)) for x in m.ravel()] for m in self.matrices]
        self._cache = {}

    @property
    def dim(self):
        return len(self.matrices)

    @property
    def labels(self):
        return LETTERS[:self.dim]

    def matrix_product(self, idx):
        x, y, z, w = (self.matrices[i] for i in idx)
        return x @ y @ z @ w + self.op.eps * (w @ z @ y @ x)

    def coordinates(self, mat):
        """Coordinates of a matrix in the basis; error if outside the span."""
        cols = list(zip(*self._flat))
        rhs = [Fraction(int(v)) for v in np.asarray(mat).ravel()]
        x = field_solve([list(c) for c in cols], rhs)
        if x is None:
            raise ArithmeticError("%s is not closed under the operation" % self.name)
        return x

    def product(self, i, j, k, l):
        key = (i, j, k, l)
        if key not in self._cache:
            m = self.matrix_product(key)
            self._cache[key] = self.coordinates(m) if m.any() else [Fraction(0)] * self.dim
        return self._cache[key]

    def nonzero_products(self):
        out = {}
        for idx in product(range(self.dim), repeat=4):
            v = self.product(*idx)
            if any(v):
                out[idx] = v
        return out

    def is_reversal_symmetric(self):
        """{x,y,z,w} = eps * {w,z,y,x} for all basis quadruples."""
        for idx in product(range(self.dim), repeat=4):
            a = self.product(*idx)
            b = self.product(*idx[::-1])
            if any(x != self.op.eps * y for x, y in zip(a, b)):
                return False
        return True


def _unit(n, i, j):
    m = np.zeros((n, n), dtype=np.int64)
    m[i, j] = 1
    return m


def _full(n):
    return [_unit(n, i, j) for i in range(n) for j in range(n)]


def _symmetric(n):
    out = [_unit(n, i, i) for i in range(n)]
    out += [_unit(n, i, j) + _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    return out


def _skew(n):
    return [_unit(n, j, i) - _unit(n, i, j) for i in range(n) for j in range(i + 1, n)]


def _embed(size, r0, c0, block):
    m = np.zeros((size, size), dtype=np.int64)
    m[r0:r0 + block.shape[0], c0:c0 + block.shape[1]] = block
    return m


def _pqr_blocks(p, q, r):
    """Offsets of the blocks M_pr (top right), M_qp, M_rq."""
    return {"pr": (0, p + q), "qp": (p, 0), "rq": (p + q, p)}


def _family_C(p, q, r):
    n = p + q + r
    off = _pqr_blocks(p, q, r)
    out = []
    for key, rows, cols in (("qp", q, p), ("rq", r, q), ("pr", p, r)):
        r0, c0 = off[key]
        for i in range(rows):
            for j in range(cols):
                out.append(_embed(n, r0 + i, c0 + j, np.ones((1, 1), dtype=np.int64)))
    return out


def _family_D(p, q, sign):
    """M_pr = sign * M_qp^t, M_rq symmetric (sign +1) or skew (-1)."""
    n = p + 2 * q
    off = _pqr_blocks(p, q, q)
    out = []
    for i in range(q):
        for j in range(p):
            m = _embed(n, off["qp"][0] + i, off["qp"][1] + j, np.ones((1, 1), dtype=np.int64))
            m[off["pr"][0] + j, off["pr"][1] + i] = sign
            out.append(m)
    inner = _symmetric(q) if sign > 0 else _skew(q)
    for b in inner:
        out.append(_embed(n, off["rq"][0], off["rq"][1], b))
    return out


FAMILY_DIMENSIONS = {
    ("A", 1): lambda n: n * n,
    ("B", 1): lambda n: n * (n + 1) // 2,
    ("C", 1): lambda p, q, r: p * q + q * r + r * p,
    ("D", 1): lambda p, q: p * q + q * (q + 1) // 2,
    ("A", -1): lambda n: n * n,
    ("B", -1): lambda n: n * (n - 1) // 2,
    ("C", -1): lambda p, q, r: p * q + q * r + r * p,
    ("D", -1): lambda p, q: p * q + q * (q - 1) // 2,
}


def family(kind, params, minus=False):
    """The system A_n, B_n, C_pqr or D_pq (anti-tetrad versions with
    `minus`), with the matrix basis used throughout the package."""
    kind = kind.upper()
    params = tuple(int(x) for x in params)
    if any(x < 1 for x in params):
        raise ValueError("family parameters must be positive")
    sign = -1 if minus else 1
    op = OperationKind.ANTI if minus else OperationKind.TETRAD
    name = kind + ("-" if minus else "") + "".join(str(x) for x in params)
    if kind == "A" and len(params) == 1:
        mats = _full(params[0])
    elif kind == "B" and len(params) == 1:
        mats = _skew(params[0]) if minus else _symmetric(params[0])
    elif kind == "C" and len(params) == 3:
        p, q, r = params
        if p < q or p < r:
            raise ValueError("C_pqr requires p >= q, r")
        mats = _family_C(p, q, r)
    elif kind == "D" and len(params) == 2:
        mats = _family_D(params[0], params[1], sign)
    else:
        raise ValueError("unknown family %s with parameters %s" % (kind, params))
    if not mats:
        raise ValueError("%s is the zero system" % name)
    expected = FAMILY_DIMENSIONS[(kind, sign)](*params)
    assert len(mats) == expected
    return QuadSystem(name, op, mats)


_NAME = re.compile(r"^([ABCDabcd])(-?)((?:\d+,)*\d+)$")


def parse_system_name(text):
    """'D11', 'C-111', 'A-2', 'B2', 'D-21'; parameters are single digits
    unless comma separated ('C2,1,1')."""
    m = _NAME.match(text.strip().replace("⁻", "-").replace("_", ""))
    if not m:
        raise ValueError("cannot parse system name %r" % text)
    kind, minus, digits = m.groups()
    kind = kind.upper()
    params = digits.split(",") if "," in digits else list(digits)
    if kind in "AB" and "," not in digits:
        params = [digits]
    return family(kind, params, bool(minus))


def relations(system):
    """Ideal generators w + eps*reverse(w) - {w} for words w in the basis
    letters, one per pair {w, reverse(w)}, self-reduced."""
    order = MonomialOrder(system.labels)
    labels = system.labels
    eps = system.op.eps
    out = []
    seen = set()
    for idx in product(range(system.dim), repeat=4):
        rev = idx[::-1]
        if rev in seen:
            continue
        seen.add(idx)
        w = "".join(labels[i] for i in idx)
        terms = {}
        terms[w] = terms.get(w, 0) + 1
        rw = w[::-1]
        terms[rw] = terms.get(rw, 0) + eps
        for k, c in enumerate(system.product(*idx)):
            if c:
                terms[labels[k]] = terms.get(labels[k], 0) - c
        poly = NCPolynomial(terms, order)
        if poly:
            out.append(poly)
    return self_reduce(out)


def relation_count(m, op):
    """(m^4 + m^2)/2 for the tetrad, (m^4 - m^2)/2 for the anti-tetrad."""
    op = OperationKind.parse(op)
    return (m ** 4 + op.eps * m ** 2) // 2
