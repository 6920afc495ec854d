"""Per-partition multiplicities of symmetric, lifted and all identities."""
from dataclasses import asdict, dataclass
import time

import numpy as np

from .. import free_algebra as fa
from .. import known_identities
from ..linalg import modp
from ..linalg.modp import RowSpace
from ..symmetric_group import RepMatrixProvider, irreducible_dimension, partitions
from .core import expansion_rows, identity_from_text, identity_rows, lift_identity, n_types

STRETCH_DIM = 350


@dataclass
class PartitionReport:
    """Multiplicities of [lambda] in the symmetries, the symmetries plus
    liftings (old), the kernel of the expansion map (null) and the quotient
    (new).  `rank` is the rank of the expansion map in this component."""
    lam: tuple
    dim: int
    symm: int
    old: int
    rank: int
    null: int
    new: int
    seconds: float = 0.0

    def as_dict(self):
        out = asdict(self)
        out["lam"] = list(self.lam)
        return out


def default_generators(op, degree=7):
    op = fa.OperationKind.parse(op)
    texts = known_identities.TETRAD_DEGREE7 if op is fa.TETRAD else known_identities.ANTI_DEGREE7
    return [identity_from_text(s, op) for s in texts]


def required_partitions(degree, stretch=False):
    lams = partitions(degree)
    if stretch:
        return lams
    return [lam for lam in lams if irreducible_dimension(lam) <= STRETCH_DIM]


def old_space(degree, op, provider, generators=None):
    """Row space of the symmetries (and, in degree 10, the liftings of the
    degree-7 generators) in one component; returns (space, symm rank)."""
    op = fa.OperationKind.parse(op)
    space = RowSpace(n_types(degree) * provider.dim, provider.p)
    for s in fa.type_symmetries(degree, op):
        space.insert(identity_rows(s, provider))
    symm = space.rank
    if degree == 10:
        if generators is None:
            generators = default_generators(op)
        for g in generators:
            for lifted in lift_identity(g):
                space.insert(identity_rows(lifted, provider))
    return space, symm


def partition_report(degree, op, lam, p=101, generators=None, check_inclusion=True,
                     provider=None):
    """Ranks in the isotypic component [lam].

    Degree 7: symm = rank of the symmetries, null = t*d - rank of the
    expansion blocks, new = null - symm.  Degree 10: the symmetries are
    followed by the liftings of the degree-7 generators; new = null - old.
    """
    op = fa.OperationKind.parse(op)
    if degree not in (7, 10):
        raise ValueError("reports are defined for degrees 7 and 10")
    start = time.time()
    lam = tuple(lam)
    if provider is None:
        provider = RepMatrixProvider(lam, p)
    d = provider.dim
    t = n_types(degree)
    space, symm = old_space(degree, op, provider, generators)
    old = space.rank
    x = expansion_rows(degree, op, provider)
    rank = modp.rank(x, p)
    null = t * d - rank
    if check_inclusion and old:
        if modp.matmul(space.basis, x, p).any():
            raise ArithmeticError("old identities do not vanish under expansion for %s" % (lam,))
    return PartitionReport(lam, d, symm, old, rank, null, null - old, time.time() - start)


def _report_job(args):
    degree, op, lam, p = args
    return partition_report(degree, op, lam, p)


def partition_table(degree, op, p=101, lams=None, stretch=False, workers=1, progress=None):
    """Reports for several partitions, in the given order.  `workers` > 1
    runs partitions in separate processes; output order is unchanged."""
    if lams is None:
        lams = partitions(degree) if degree == 7 else required_partitions(degree, stretch)
    jobs = [(degree, fa.OperationKind.parse(op).value, tuple(lam), p) for lam in lams]
    out = []
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        # largest components first keeps the pool busy; results are re-sorted
        order = sorted(range(len(jobs)), key=lambda i: -irreducible_dimension(jobs[i][2]))
        with ProcessPoolExecutor(workers) as ex:
            results = dict(zip(order, ex.map(_report_job, [jobs[i] for i in order])))
        for i in range(len(jobs)):
            out.append(results[i])
            if progress:
                progress(results[i])
        return out
    for job in jobs:
        rep = _report_job(job)
        if progress:
            progress(rep)
        out.append(rep)
    return out


def format_table(reports, degree):
    lines = []
    if degree == 7:
        lines.append("%-10s %5s %5s %5s %5s %5s" % ("lambda", "d", "symm", "rank", "null", "new"))
        for r in reports:
            lines.append("%-10s %5d %5d %5d %5d %5d" % (_label(r.lam), r.dim, r.symm, r.rank, r.null, r.new))
    else:
        lines.append("%-14s %5s %6s %6s %6s %6s %5s" % ("lambda", "d", "symm", "lift", "rank", "null", "new"))
        for r in reports:
            lines.append("%-14s %5d %6d %6d %6d %6d %5d" % (_label(r.lam), r.dim, r.symm, r.old,
                                                            r.rank, r.null, r.new))
    return "\n".join(lines)


def _label(lam):
    return ",".join(str(x) for x in lam)


def multiplicity_check(reports):
    """sum d * (null - symm) over all partitions: the dimension of the kernel
    of the expansion map modulo the symmetries."""
    return sum(r.dim * (r.null - r.symm) for r in reports)


def table_arrays(reports):
    return np.array([[r.symm, r.old, r.rank, r.null, r.new] for r in reports], dtype=np.int64)
