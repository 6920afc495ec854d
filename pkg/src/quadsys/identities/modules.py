"""S_n-modules of identities, tracked one isotypic component at a time.

The submodule of (F S_n)^t generated by a set of identities has, in the
component [lambda], multiplicity equal to the rank of the stacked block
rows [R(I_1) ... R(I_t)].  Its dimension is sum d_lambda * rank.  All
module dimensions here are taken modulo the symmetries of the association
types, i.e. inside Quad(n).
"""
from dataclasses import dataclass, field

import numpy as np

from .. import free_algebra as fa
from ..linalg import modp
from ..linalg.modp import RowSpace
from ..symmetric_group import RepMatrixProvider, partitions
from .core import identity_rows, n_types


class ModuleTracker:
    def __init__(self, degree, op, p=101, lams=None, providers=None):
        self.degree = degree
        self.op = fa.OperationKind.parse(op)
        self.p = p
        self.lams = list(lams) if lams is not None else partitions(degree)
        self.providers = providers or {}
        self.lin_cache = {}
        self.spaces = {}
        t = n_types(degree)
        for lam in self.lams:
            if lam not in self.providers:
                self.providers[lam] = RepMatrixProvider(lam, p)
            self.spaces[lam] = RowSpace(t * self.providers[lam].dim, p)
        for s in fa.type_symmetries(degree, self.op):
            self.add(s)
        self.base = {lam: sp.rank for lam, sp in self.spaces.items()}

    def rows(self, ident):
        return {lam: identity_rows(ident, self.providers[lam], self.lin_cache) for lam in self.lams}

    def increase(self, ident, commit=True, rows=None):
        """Dimension gained by adding the identity (inserted if `commit`);
        without commit, the number of components where it is new."""
        if rows is None:
            rows = self.rows(ident)
        gain = 0
        for lam in self.lams:
            sp = self.spaces[lam]
            if commit:
                gain += sp.insert(rows[lam]) * self.providers[lam].dim
            else:
                rem = sp.reduce(rows[lam])
                if rem.any():
                    gain += 1
        return gain

    def add(self, ident):
        return self.increase(ident, commit=True)

    def contains(self, ident):
        return self.increase(ident, commit=False) == 0

    def multiplicities(self):
        return {lam: self.spaces[lam].rank - self.base[lam] for lam in self.lams}

    def dimension(self):
        return sum((self.spaces[lam].rank - self.base[lam]) * self.providers[lam].dim
                   for lam in self.lams)

    def fresh(self):
        """A tracker holding only the symmetries, sharing providers."""
        out = ModuleTracker.__new__(ModuleTracker)
        out.degree, out.op, out.p, out.lams = self.degree, self.op, self.p, self.lams
        out.providers, out.lin_cache = self.providers, self.lin_cache
        out.spaces = {}
        out.base = dict(self.base)
        t = n_types(self.degree)
        for lam in self.lams:
            out.spaces[lam] = RowSpace(t * self.providers[lam].dim, self.p)
        for s in fa.type_symmetries(self.degree, self.op):
            out.add(s)
        return out


@dataclass
class GeneratorSet:
    """Identities in extraction order with the dimension of the module they
    generate (inside Quad(n))."""
    identities: list = field(default_factory=list)
    module_dim: int = 0
    labels: list = field(default_factory=list)

    def __len__(self):
        return len(self.identities)


def module_dimension(identities, degree, op, p=101, tracker=None, row_cache=None):
    """Dimension of the module generated by `identities` modulo symmetries.

    Block rows are cached per identity (by id) in `row_cache`; each
    component's rank comes from one elimination of the stacked rows.
    """
    tr = tracker if tracker is not None else ModuleTracker(degree, op, p)
    if row_cache is None:
        row_cache = {}
    if "symmetries" not in row_cache:
        sym = [tr.rows(s) for s in fa.type_symmetries(degree, tr.op)]
        row_cache["symmetries"] = {lam: np.vstack([r[lam] for r in sym]) for lam in tr.lams}
    for ident in identities:
        if id(ident) not in row_cache:
            row_cache[id(ident)] = tr.rows(ident)
    total = 0
    for lam in tr.lams:
        mats = [row_cache["symmetries"][lam]] + [row_cache[id(x)][lam] for x in identities]
        r = modp.rank(np.vstack(mats), tr.p)
        total += (r - tr.base[lam]) * tr.providers[lam].dim
    return total


def extract_module_generators(candidates, degree, op, p=101, target=None, tracker=None):
    """Greedy filter: keep a candidate iff it is not in the module generated
    by the symmetries and the candidates kept so far.  Stops early once
    `target` is reached (no later candidate can increase the dimension)."""
    tr = tracker if tracker is not None else ModuleTracker(degree, op, p)
    kept = []
    labels = []
    for i, ident in enumerate(candidates):
        if target is not None and tr.dimension() >= target:
            break
        if tr.increase(ident) > 0:
            kept.append(ident)
            labels.append(i)
    return GeneratorSet(kept, tr.dimension(), labels)


def minimize_generator_set(gs, degree, op, target_dim=None, p=101, tracker=None):
    """Back-to-front elimination: drop a member whenever the others still
    generate a module of dimension target_dim."""
    if target_dim is None:
        target_dim = gs.module_dim
    base = tracker if tracker is not None else ModuleTracker(degree, op, p)
    cache = {}
    current = list(gs.identities)
    labels = list(gs.labels) if gs.labels else list(range(len(current)))
    i = len(current) - 1
    while i >= 0:
        rest = current[:i] + current[i + 1:]
        if module_dimension(rest, degree, op, p, base, cache) >= target_dim:
            current = rest
            labels = labels[:i] + labels[i + 1:]
        i -= 1
    return GeneratorSet(current, module_dimension(current, degree, op, p, base, cache), labels)
