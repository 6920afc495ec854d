"""Recover small rationals from their residues modulo a prime."""
from fractions import Fraction
from math import gcd, isqrt

from .integer import primitive


class ReconstructionError(ValueError):
    pass


def wang(r, p, bound=None):
    """Rational n/d with n = r*d mod p, |n|, d <= sqrt(p/2); None if none."""
    r %= p
    if bound is None:
        bound = isqrt(p // 2)
    r0, r1 = p, r
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _small(x, p):
    x %= p
    return x - p if x > p // 2 else x


def common_denominator(residues, p, max_den=None, bound=None):
    """Smallest d <= max_den such that every d*r is a small residue.

    Residues of i/d sit near the fractions (i mod d)/d of p, which is the
    clustering the detection exploits.  Returns None when no denominator
    is found or when two denominators both fit (ambiguous).
    """
    if bound is None:
        bound = isqrt(p // 2)
    if max_den is None:
        max_den = bound
    fits = []
    for d in range(1, max_den + 1):
        if all(abs(_small(d * r, p)) <= bound for r in residues):
            fits.append(d)
            if len(fits) > 1:
                break
    if len(fits) == 1:
        return fits[0]
    if len(fits) > 1 and all(f % fits[0] == 0 for f in fits):
        return fits[0]
    return None


def rational_reconstruct(residues, p, check=None, max_den=None):
    """Rational vector from residues mod p.

    A common denominator is tried first (clustering); when that is
    ambiguous each entry goes through Wang's extended-Euclid
    reconstruction.  `check`, a pair (residues_q, q), re-reduces the
    answer modulo an independent prime q.
    """
    residues = [int(r) % p for r in residues]
    bound = isqrt(p // 2)
    d = common_denominator(residues, p, max_den=max_den, bound=bound)
    if d is not None:
        out = [Fraction(_small(d * r, p), d) for r in residues]
    else:
        out = []
        for r in residues:
            x = wang(r, p, bound)
            if x is None:
                raise ReconstructionError("no rational with small height matches %d mod %d" % (r, p))
            out.append(x)
    for x, r in zip(out, residues):
        if (x.numerator - r * x.denominator) % p:
            raise ReconstructionError("reconstruction does not re-reduce mod %d" % p)
    if check is not None:
        res_q, q = check
        for x, r in zip(out, res_q):
            if x.denominator % q == 0 or (x.numerator - int(r) * x.denominator) % q:
                raise ReconstructionError("reconstruction fails verification mod %d" % q)
    return out


def integral_multiple(vec):
    """Shortest integer multiple of a rational vector (lcm of denominators,
    then divide by the gcd of the numerators)."""
    den = 1
    for x in vec:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(Fraction(x) * den) for x in vec])


def normalize_modular_identity(residues, p):
    """Symmetric representatives, doubled when a half-integer (p+-1)/2
    appears, as integers."""
    half = {(p - 1) // 2, (p + 1) // 2}
    scale = 2 if any(int(r) % p in half for r in residues) else 1
    return [_small(scale * int(r), p) for r in residues]
