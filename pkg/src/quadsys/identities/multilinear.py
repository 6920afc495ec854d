"""All multilinear identities of a degree from the kernel of the expansion
matrix, and S_n-module generators extracted from them."""
from dataclasses import dataclass

import numpy as np

from .. import free_algebra as fa
from ..free_algebra import MultilinearIdentity
from ..linalg import modp
from ..linalg.reconstruct import normalize_modular_identity
from .modules import GeneratorSet, ModuleTracker, extract_module_generators, minimize_generator_set


@dataclass
class IdentitySpace:
    degree: int
    op: fa.OperationKind
    p: int
    rank: int
    nullspace: np.ndarray   # RCF basis of the kernel, mod p
    columns: list           # (type, perm) per column

    @property
    def nullity(self):
        return len(self.nullspace)

    def identities(self):
        """Kernel rows as integer identities: symmetric representatives,
        doubled when a half-integer residue appears."""
        out = []
        for row in self.nullspace:
            coeffs = normalize_modular_identity(row.tolist(), self.p)
            terms = [(t, w, c) for (t, w), c in zip(self.columns, coeffs) if c]
            out.append(MultilinearIdentity(self.degree, self.op, terms))
        return out


def all_identities(degree, op, p=101):
    """Canonical basis of the kernel of the expansion map modulo p."""
    op = fa.OperationKind.parse(op)
    mat = fa.expansion_matrix(degree, op, p)
    rows, pivots = modp.rref(mat, p)
    null = modp.nullspace_from_rref(rows, pivots, mat.shape[1], p)
    return IdentitySpace(degree, op, p, len(pivots), null, fa.multilinear_monomials(degree, op))


def sort_candidates(identities):
    """Increasing Euclidean length of the coefficient vector, then number of
    terms, then lex on the terms."""
    return sorted(identities, key=lambda x: (sum(c * c for _, _, c in x.terms), len(x.terms),
                                             [(t, w, c) for t, w, c in x.terms]))


def is_symmetry_instance(ident):
    """Degree 4: m - eps * reverse(m) for a single monomial m."""
    if ident.degree != 4 or len(ident.terms) != 2:
        return False
    (_, w1, c1), (_, w2, c2) = ident.terms
    return tuple(reversed(w1)) == w2 and c2 == -ident.op.eps * c1


@dataclass
class MultilinearResult:
    space: IdentitySpace
    extracted: GeneratorSet
    minimal: GeneratorSet


def multilinear_generators(degree, op, p=101, minimize=True):
    """Kernel, greedy generators (sorted candidates) and a minimal subset."""
    op = fa.OperationKind.parse(op)
    space = all_identities(degree, op, p)
    if degree == 4:
        # no association-type symmetries to factor out; every kernel vector
        # is an instance of the symmetry of the operation
        gs = GeneratorSet([], 0, [])
        return MultilinearResult(space, gs, gs)
    cands = sort_candidates(space.identities())
    tracker = ModuleTracker(degree, op, p)
    gs = extract_module_generators(cands, degree, op, p, target=space.nullity, tracker=tracker)
    small = gs
    if minimize:
        small = minimize_generator_set(gs, degree, op, gs.module_dim, p, tracker.fresh())
    return MultilinearResult(space, gs, small)
