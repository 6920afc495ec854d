"""Envelope of a named system with its Wedderburn analysis, as a plain dict."""
from dataclasses import dataclass
import logging

from ..ncgroebner import (graded_dimensions, groebner_basis, is_finite_quotient,
                          standard_monomials)
from .algebra import (ExtensionRequired, center, is_semisimple, matrix_unit_isomorphism,
                      multiplication_table, split_center)
from .systems import QuadSystem, parse_system_name, relations

log = logging.getLogger(__name__)

# graded dimensions are reported up to this degree when no bound is given
DEFAULT_GRADED_DEGREE = 12


@dataclass
class Envelope:
    system: QuadSystem
    relations: list
    gb: object
    finite: bool
    monomials: list = None       # finite case
    graded: list = None          # infinite case, degrees 0..bound

    @property
    def dim(self):
        return len(self.monomials) if self.finite else None


def envelope(system, degree_bound=None):
    """Groebner basis of the relations, then either the standard monomials
    (finite quotient) or the graded dimensions up to the bound."""
    if isinstance(system, str):
        system = parse_system_name(system)
    rels = relations(system)
    gb = groebner_basis(rels, degree_bound=degree_bound)
    if is_finite_quotient(gb):
        return Envelope(system, rels, gb, True, monomials=standard_monomials(gb))
    bound = degree_bound if degree_bound is not None else DEFAULT_GRADED_DEGREE
    return Envelope(system, rels, gb, False, graded=graded_dimensions(gb, bound))


def analyze(system, degree_bound=None, extend=False, units=False):
    """Report dict: envelope, semisimplicity, center, central idempotents
    and the dimensions of the simple ideals they generate."""
    env = envelope(system, degree_bound)
    j = env.system
    out = {
        "system": j.name,
        "op": j.op.value,
        "relations": len(env.relations),
        "groebner": env.gb.strings(),
        "status": env.gb.status,
        "finite": env.finite,
        "dim": env.dim,
    }
    if not env.finite:
        out["graded_dims"] = env.graded
        return out
    if not env.gb.complete:
        return out
    alg = multiplication_table(env.gb, env.monomials)
    out["monomials"] = [w or "1" for w in env.monomials]
    out["associative"] = alg.is_associative()
    out["semisimple"] = is_semisimple(alg)
    out["center_dim"] = len(center(alg))
    out["field"] = "Q"
    if not out["semisimple"]:
        return out
    try:
        dec = split_center(alg, allow_extension=extend)
    except ExtensionRequired as exc:
        out["extension_required"] = str(exc)
        return out
    out["field"] = dec.field_name
    out["idempotents"] = dec.strings()
    out["ideal_dims"] = dec.ideal_dims
    out["idempotents_verified"] = dec.verify()
    if units:
        maps = []
        for e in dec.idempotents:
            mu = matrix_unit_isomorphism(dec.algebra, e)
            maps.append({"size": mu.size, "generator": mu.generator, "units": mu.strings(),
                         "verified": mu.verify()})
        out["matrix_units"] = maps
    return out
