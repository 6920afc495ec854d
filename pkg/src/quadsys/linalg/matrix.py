"""Scalar domains and a small exact matrix type with text serialization."""
from dataclasses import dataclass, field
from fractions import Fraction
import re

import numpy as np

from . import modp
from .fields import QuadraticNumber, field_nullspace, field_rref, is_squarefree


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class ScalarDomain:
    """modular (p), rational, or quadratic (D)."""
    kind: str
    p: int = 0
    D: int = 0

    def __post_init__(self):
        if self.kind == "modular":
            if not is_prime(self.p):
                raise ValueError("modulus %d is not prime" % self.p)
        elif self.kind == "quadratic":
            if self.D in (0, 1) or not is_squarefree(self.D):
                raise ValueError("D=%d must be squarefree and not 0 or 1" % self.D)
        elif self.kind != "rational":
            raise ValueError("unknown scalar domain %r" % self.kind)

    @classmethod
    def modular(cls, p=101):
        return cls("modular", p=p)

    @classmethod
    def rational(cls):
        return cls("rational")

    @classmethod
    def quadratic(cls, D):
        return cls("quadratic", D=D)

    def coerce(self, v):
        if self.kind == "modular":
            if isinstance(v, Fraction):
                return v.numerator * pow(v.denominator, -1, self.p) % self.p
            return int(v) % self.p
        if self.kind == "rational":
            return Fraction(v)
        if isinstance(v, QuadraticNumber):
            return v
        return QuadraticNumber(v, 0, self.D)

    def __str__(self):
        if self.kind == "modular":
            return "F%d" % self.p
        if self.kind == "rational":
            return "Q"
        return "Q(sqrt(%d))" % self.D


RATIONAL = ScalarDomain("rational")


@dataclass
class ExactMatrix:
    domain: ScalarDomain
    rows: list = field(default_factory=list)
    ncols: int = 0

    @classmethod
    def from_rows(cls, rows, domain=RATIONAL, ncols=None):
        rows = [[domain.coerce(v) for v in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(domain, rows, ncols)

    @classmethod
    def from_array(cls, a, p):
        a = np.asarray(a)
        return cls(ScalarDomain.modular(p), [[int(x) for x in r] for r in a], a.shape[1])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def to_array(self):
        if self.domain.kind != "modular":
            raise TypeError("only modular matrices convert to arrays")
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.domain == other.domain
                and self.ncols == other.ncols and self.rows == other.rows)

    def dumps(self):
        return dumps(self)


def row_canonical_form(m):
    """(rcf, rank) with zero rows removed."""
    if m.domain.kind == "modular":
        r, piv = modp.rref(m.to_array(), m.domain.p)
        return ExactMatrix.from_array(r.reshape(len(piv), m.ncols), m.domain.p), len(piv)
    r, piv = field_rref(m.rows, m.ncols)
    return ExactMatrix(m.domain, r, m.ncols), len(piv)


def nullspace_basis(m):
    """RCF basis of the right nullspace of m."""
    if m.domain.kind == "modular":
        k = modp.nullspace(m.to_array(), m.domain.p)
        return ExactMatrix(m.domain, [[int(x) for x in r] for r in k], m.ncols)
    zero = m.domain.coerce(0)
    rows = m.rows if m.rows else [[zero] * m.ncols]
    return ExactMatrix(m.domain, field_nullspace(rows, m.ncols), m.ncols)


def _fmt(v):
    if isinstance(v, QuadraticNumber):
        return "%s+%s*sqrt(%d)" % (v.x, v.y, v.D)
    return str(v)


def dumps(m):
    lines = ["%d %d %s" % (m.nrows, m.ncols, m.domain)]
    for r in m.rows:
        lines.append(" ".join(_fmt(v) for v in r))
    return "\n".join(lines) + "\n"


_QUAD = re.compile(r"^([^+*]+?)\+(-?[^*]+)\*sqrt\((-?\d+)\)$")


def _parse_domain(s):
    if s == "Q":
        return RATIONAL
    if s.startswith("F"):
        return ScalarDomain.modular(int(s[1:]))
    mt = re.match(r"^Q\(sqrt\((-?\d+)\)\)$", s)
    if mt:
        return ScalarDomain.quadratic(int(mt.group(1)))
    raise ValueError("unknown domain %r" % s)


def _parse_entry(tok, dom):
    if dom.kind == "quadratic":
        mt = _QUAD.match(tok)
        if mt:
            return QuadraticNumber(Fraction(mt.group(1)), Fraction(mt.group(2)), int(mt.group(3)))
        return QuadraticNumber(Fraction(tok), 0, dom.D)
    if dom.kind == "modular":
        return int(tok) % dom.p
    return Fraction(tok)


def loads(text):
    lines = [ln for ln in text.strip().splitlines()]
    nrows, ncols, dom = lines[0].split()
    nrows, ncols = int(nrows), int(ncols)
    dom = _parse_domain(dom)
    rows = [[_parse_entry(t, dom) for t in ln.split()] for ln in lines[1:1 + nrows]]
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise ValueError("matrix text does not match its header")
    return ExactMatrix(dom, rows, ncols)
