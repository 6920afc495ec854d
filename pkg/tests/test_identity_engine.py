from fractions import Fraction

import numpy as np
import pytest

from quadsys import free_algebra as fa
from quadsys import known_identities as known
from quadsys.identities import (NonlinearIdentity, all_identities, default_generators,
                                identity_from_text, is_symmetry_instance, lift_identity,
                                module_dimension, partition_report, partition_table,
                                required_partitions, verify_alternating, verify_identity)
from quadsys.identities.nonlinear import candidate_order, left_kernel_lattice
from quadsys.identities.reports import multiplicity_check
from quadsys.linalg import integer as zi
from quadsys.symmetric_group import irreducible_dimension

from golden_tables import ANTI10, TETRAD10


def test_degree4_kernel_is_the_symmetry():
    for op in ("tetrad", "anti"):
        space = all_identities(4, op)
        assert space.rank == 12 and space.nullity == 12
        assert all(is_symmetry_instance(x) for x in space.identities())


@pytest.mark.parametrize("op,texts", [("tetrad", known.TETRAD_DEGREE7), ("anti", known.ANTI_DEGREE7)])
def test_degree7_generators_expand_to_zero(op, texts):
    for text in texts:
        ident = identity_from_text(text, op)
        assert ident.degree == 7
        assert verify_identity(ident)


def test_perturbed_identity_fails():
    text = known.TETRAD_DEGREE7[0].replace("- {g,{b,a,d,c},f,e}", "+ {g,{b,a,d,c},f,e}")
    assert not verify_identity(identity_from_text(text, "tetrad"))


def test_nonlinear_anti_generators_expand_to_zero():
    for text, mults in known.ANTI_DEGREE7_NONLINEAR:
        assert verify_identity(identity_from_text(text, "anti", mults))


def test_liftings_are_identities():
    g = default_generators("anti")[0]
    lifted = lift_identity(g)
    assert len(lifted) == 9
    for x in lifted:
        assert x.degree == 10 and verify_identity(x)


def test_degree7_tables_sum_to_kernel_dimension():
    # sum over partitions of d * (null - symm) is the nullity of the expansion map
    for op, nullity in (("tetrad", 2520), ("anti", 2521)):
        reps = partition_table(7, op)
        assert multiplicity_check(reps) == nullity


def test_small_degree10_rows():
    rows = {r[0]: r for r in TETRAD10}
    for lam in [(10,), (9, 1), (8, 2)]:
        rep = partition_report(10, "tetrad", lam)
        assert (rep.dim, rep.symm, rep.old, rep.rank, rep.null, rep.new) == rows[lam][1:]
    rows = {r[0]: r for r in ANTI10}
    rep = partition_report(10, "anti", (8, 2))
    assert (rep.dim, rep.symm, rep.old, rep.rank, rep.null, rep.new) == rows[(8, 2)][1:]
    assert rep.new == 1


def test_required_partitions_count():
    req = required_partitions(10)
    assert len(req) == 34
    assert all(irreducible_dimension(l) <= 350 for l in req)


def test_module_dimension_of_symmetric_sum():
    # {a,b,c,d} - {d,c,b,a} generates nothing new modulo the symmetry itself
    assert module_dimension(fa.type_symmetries(7, "tetrad")[:1], 7, "tetrad") == 0


def test_special_identities_alternate_to_zero():
    for text, mults in known.TETRAD_DEGREE10_SPECIAL[:2]:
        ident = identity_from_text(text, "tetrad", mults, mode="mixed")
        letters = [i for i in range(1, len(mults)) if mults[i] == 1]
        assert verify_alternating(ident, letters)


def test_kernel_lattice_small():
    mat, mons, words = fa.multihomogeneous_expansion_matrix((4, 3), "tetrad")
    lat = left_kernel_lattice(mat)
    assert len(lat.basis) == len(mons) - lat.rank
    check = zi.int_matmul(lat.basis, mat.tolist())
    assert not any(any(r) for r in check)
    assert [s[0] for s in lat.sizes] == ["hnf", "lll 3/4", "lll 99/100"]
    assert lat.sizes[-1][1] <= lat.sizes[0][1]
    assert zi.lll_violations(lat.basis, Fraction(99, 100), Fraction(51, 100))[1] == 0


def test_candidate_order():
    vs = candidate_order([[0, -2, 1], [1, 0, 0], [0, 1, 1]])
    assert vs == [[1, 0, 0], [0, 1, 1], [0, 2, -1]]
