"""Nonlinear identities from integer lattices.

The kernel of a multihomogeneous expansion matrix is computed over Z:
keep a basis of pivot columns, take the HNF transform of the reduced
matrix, and shorten the kernel basis with LLL.  The resulting vectors,
sorted by length, are the candidate identities.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import time

import numpy as np

from .. import free_algebra as fa
from ..linalg import integer as zi
from ..linalg import modp
from ..symmetric_group import RepMatrixProvider, partitions
from .core import NonlinearIdentity, identity_rows
from .modules import GeneratorSet, ModuleTracker, minimize_generator_set
from .reports import old_space

# pivot columns are found modulo this prime; the integer kernel is then
# checked against the full matrix, so a bad prime cannot go unnoticed
PIVOT_PRIME = 32003
DEFAULT_DELTAS = (Fraction(3, 4), Fraction(99, 100))


def column_basis(mat, p=PIVOT_PRIME):
    """Indices of the pivot columns of the RCF of `mat` modulo p."""
    _, pivots = modp.rref(np.asarray(mat, dtype=np.int64) % p, p)
    return [int(j) for j in pivots]


@dataclass
class KernelLattice:
    """Integer left kernel {x : x E = 0} of an expansion matrix E together
    with the size of each successive basis."""
    rank: int
    basis: list
    sizes: list = field(default_factory=list)   # (label, size)
    hermite: tuple = None                          # (reduced matrix, h, u)


def left_kernel_lattice(mat, deltas=DEFAULT_DELTAS, keep_hermite=False):
    mat = np.asarray(mat, dtype=np.int64)
    pivots = column_basis(mat)
    reduced = mat[:, pivots]
    h, u, rank = zi.hermite_with_transform(reduced.T)
    if rank != len(pivots):
        raise ArithmeticError("rank over Z (%d) differs from the modular rank (%d)" % (rank, len(pivots)))
    basis = u[rank:]
    if basis:
        check = zi.to_fmpz(basis) * zi.to_fmpz(mat.tolist())
        if not check.is_zero():
            raise ArithmeticError("kernel basis does not annihilate the expansion matrix")
    out = KernelLattice(rank, basis, [("hnf", zi.lattice_basis_size(basis))] if basis else [])
    if keep_hermite:
        out.hermite = (reduced, h, u)
    for delta in deltas:
        if not basis:
            break
        basis = zi.lll_reduce(basis, delta)
        out.sizes.append(("lll %s" % Fraction(delta), zi.lattice_basis_size(basis)))
    out.basis = basis
    return out


def _normal_sign(v):
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


def candidate_order(vectors):
    """Increasing Euclidean length, then number of terms, then lex."""
    vs = [_normal_sign([int(x) for x in v]) for v in vectors]
    return sorted(vs, key=lambda v: (sum(x * x for x in v), sum(1 for x in v if x), tuple(v)))


@dataclass
class SpecialCandidates:
    mults: tuple
    op: fa.OperationKind
    increasing: tuple
    nwords: int
    nmonomials: int
    rank: int
    nullity: int
    sizes: list
    identities: list

    def coefficient_set(self):
        return sorted({c for ident in self.identities for _, _, c in ident.terms})


def nonlinear_special_candidates(mults, op, increasing=(), deltas=DEFAULT_DELTAS, mode=None):
    """Candidates for identities of the given multidegree, shortest first.

    With `increasing` letters the monomials stand for their alternating sums
    over those letters, and the identities linearize in 'mixed' mode.
    """
    op = fa.OperationKind.parse(op)
    mults = tuple(mults)
    if sum(mults) not in (7, 10):
        raise ValueError("multidegrees of total degree 7 or 10 are supported")
    mat, mons, words = fa.multihomogeneous_expansion_matrix(mults, op, increasing)
    if mode is None:
        mode = "mixed" if increasing else "symmetric"
    degree = sum(mults)
    if not mons:
        return SpecialCandidates(mults, op, tuple(increasing), len(words), 0, 0, 0, [], [])
    lat = left_kernel_lattice(mat, deltas)
    idents = []
    for v in candidate_order(lat.basis):
        terms = [(t, w, c) for (t, w), c in zip(mons, v) if c]
        idents.append(NonlinearIdentity(degree, op, mults, terms, mode))
    return SpecialCandidates(mults, op, tuple(increasing), len(words), len(mons), lat.rank,
                             len(mons) - lat.rank, lat.sizes, idents)


# -- confirming new identities in one component -------------------------------

@dataclass
class ComponentState:
    """Row space of the known identities in the component [lam]."""
    degree: int
    op: fa.OperationKind
    lam: tuple
    provider: RepMatrixProvider
    space: object
    ranks: list
    lin_cache: dict = field(default_factory=dict)


def component_state(degree, op, lam, p=101, generators=None):
    op = fa.OperationKind.parse(op)
    provider = RepMatrixProvider(tuple(lam), p)
    space, symm = old_space(degree, op, provider, generators)
    return ComponentState(degree, op, tuple(lam), provider, space, [symm, space.rank])


def confirm_special(candidate, lam, state, commit=True):
    """True iff the linearized candidate is not in the row space of the
    state for [lam]; the row space is enlarged when `commit`."""
    if tuple(lam) != state.lam:
        raise ValueError("state belongs to partition %s" % (state.lam,))
    rows = identity_rows(candidate, state.provider, state.lin_cache)
    if not commit:
        return bool(state.space.reduce(rows).any())
    gain = state.space.insert(rows)
    if gain:
        state.ranks.append(state.space.rank)
    return gain > 0


@dataclass
class SpecialSearch:
    candidates: SpecialCandidates
    ranks: list
    confirmed: list


def find_special_identities(mults, op, lam, increasing=None, p=101, deltas=DEFAULT_DELTAS):
    """Candidates for a multidegree, filtered against Old(10) in [lam]."""
    mults = tuple(mults)
    if increasing is None:
        increasing = tuple(i for i in range(1, len(mults)) if mults[i] == 1) if mults[0] > 1 else ()
    cands = nonlinear_special_candidates(mults, op, increasing, deltas)
    state = component_state(sum(mults), op, lam, p)
    confirmed = [c for c in cands.identities if confirm_special(c, lam, state)]
    return SpecialSearch(cands, list(state.ranks), confirmed)


# -- degree 7 generators from all multidegrees --------------------------------

@dataclass
class MultidegreeRow:
    lam: tuple
    words: int
    monomials: int
    rank: int
    nullity: int
    generators: int
    seconds: float = 0.0


def nonlinear_generators(op, degree=7, p=101, deltas=DEFAULT_DELTAS, target=None, progress=None):
    """For every partition of the degree except 1^n, take the candidates of
    that multidegree in order and keep those that enlarge the module
    generated so far.  Returns (rows, GeneratorSet, tracker)."""
    op = fa.OperationKind.parse(op)
    tracker = ModuleTracker(degree, op, p)
    rows = []
    kept, labels = [], []
    for lam in partitions(degree)[:-1]:
        start = time.time()
        cands = nonlinear_special_candidates(lam, op, (), deltas)
        g = 0
        for i, ident in enumerate(cands.identities):
            if target is not None and tracker.dimension() >= target:
                break
            if tracker.increase(ident) > 0:
                kept.append(ident)
                labels.append((lam, i))
                g += 1
        row = MultidegreeRow(lam, cands.nwords, cands.nmonomials, cands.rank, cands.nullity, g,
                             time.time() - start)
        rows.append(row)
        if progress:
            progress(row)
    return rows, GeneratorSet(kept, tracker.dimension(), labels), tracker


def minimal_nonlinear_generators(op, degree=7, p=101, deltas=DEFAULT_DELTAS, progress=None):
    rows, gs, tracker = nonlinear_generators(op, degree, p, deltas, progress=progress)
    small = minimize_generator_set(gs, degree, op, gs.module_dim, p, tracker.fresh())
    return rows, gs, small
