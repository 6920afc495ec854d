"""Exact scalars: rationals (fractions.Fraction) and the quadratic fields Q(sqrt D),
plus Gauss-Jordan elimination over any field whose elements support
+, -, *, / and comparison with 0.
"""
from fractions import Fraction
from math import isqrt


def is_squarefree(d):
    d = abs(d)
    if d == 0:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def squarefree_part(n):
    """(s, f) with n = s * f**2 and s squarefree."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, f, k = 1, 1, 2
    while k * k <= n:
        while n % (k * k) == 0:
            n //= k * k
            f *= k
        if n % k == 0:
            n //= k
            s *= k
        k += 1
    return sign * s * n, f


class QuadraticNumber:
    """x + y*sqrt(D) with rational x, y and a fixed squarefree D."""

    __slots__ = ("x", "y", "D")

    def __init__(self, x, y=0, D=-3):
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.D = D

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.D != self.D:
                raise ValueError("mixing Q(sqrt %d) and Q(sqrt %d)" % (self.D, other.D))
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.D)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.x + o.x, self.y + o.y, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.x, -self.y, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.x - o.x, self.y - o.y, self.D)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.x * o.x + self.D * self.y * o.y,
                               self.x * o.y + self.y * o.x, self.D)

    __rmul__ = __mul__

    def norm(self):
        return self.x * self.x - self.D * self.y * self.y

    def conjugate(self):
        return QuadraticNumber(self.x, -self.y, self.D)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt %d)" % self.D)
        return QuadraticNumber(self.x / n, -self.y / n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return self.x == other.x and self.y == other.y and self.D == other.D
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.D))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def is_rational(self):
        return self.y == 0

    def __repr__(self):
        return "QuadraticNumber(%s, %s, D=%d)" % (self.x, self.y, self.D)

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        sign = "-" if self.y < 0 else "+"
        y = "" if abs(self.y) == 1 else "%s*" % abs(self.y)
        if self.x == 0:
            return "%s%ssqrt(%d)" % ("-" if self.y < 0 else "", y, self.D)
        return "%s%s%ssqrt(%d)" % (self.x, sign, y, self.D)


def sqrt_element(D):
    return QuadraticNumber(0, 1, D)


def to_field(v, D=None):
    """Lift an int/Fraction/QuadraticNumber into Q (D None) or Q(sqrt D)."""
    if D is None:
        if isinstance(v, QuadraticNumber):
            if v.y:
                raise ValueError("irrational value in a rational context")
            return v.x
        return Fraction(v)
    if isinstance(v, QuadraticNumber):
        if v.D != D:
            if v.y:
                raise ValueError("incompatible quadratic fields")
            return QuadraticNumber(v.x, 0, D)
        return v
    return QuadraticNumber(v, 0, D)


def field_rref(rows, ncols=None):
    """Gauss-Jordan over an exact field; returns (rcf_rows, pivots).

    Pivot rule: first nonzero column, rows top-down.  Input rows are lists of
    field elements; they are copied.
    """
    a = [list(r) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    m = len(a)
    for c in range(ncols):
        if r == m:
            break
        i = next((i for i in range(r, m) if a[i][c]), None)
        if i is None:
            continue
        a[r], a[i] = a[i], a[r]
        piv = a[r][c]
        if piv != 1:
            inv = 1 / piv
            a[r] = [x * inv for x in a[r]]
        row = a[r]
        nzcols = [j for j in range(c, ncols) if row[j]]
        for k in range(m):
            if k != r:
                f = a[k][c]
                if f:
                    rk = a[k]
                    for j in nzcols:
                        rk[j] = rk[j] - f * row[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def field_nullspace(rows, ncols):
    """Canonical right nullspace basis (RCF) over an exact field."""
    r, pivots = field_rref(rows, ncols)
    zero = _zero_like(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = zero + 1
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][f]
        basis.append(v)
    if not basis:
        return []
    return field_rref(basis, ncols)[0]


def field_rank(rows, ncols=None):
    return len(field_rref(rows, ncols)[1])


def field_solve(rows, rhs):
    """One solution x of A x = rhs (A given by rows), or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    r, pivots = field_rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    zero = _zero_like(rows)
    x = [zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = r[i][n]
    return x


def _zero_like(rows):
    for row in rows:
        for v in row:
            if isinstance(v, QuadraticNumber):
                return QuadraticNumber(0, 0, v.D)
    return Fraction(0)


def isqrt_exact(n):
    r = isqrt(n)
    return r if r * r == n else None
