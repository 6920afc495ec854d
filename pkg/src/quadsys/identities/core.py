"""Identities as elements of (F S_n)^t and their images under the natural
representations."""
from dataclasses import dataclass, field

import numpy as np

from .. import free_algebra as fa
from ..free_algebra import MultilinearIdentity, OperationKind
from ..linalg import modp
from ..symmetric_group import basic_linearization, linearization_matrix


@dataclass
class NonlinearIdentity:
    """Multihomogeneous identity: terms (type, letter sequence, coeff).

    `mults[i]` is the multiplicity of letter i.  `mode` says how the
    identity is linearized: 'symmetric' over each block of repeated
    letters, or 'mixed' (symmetric in letter 0, alternating in the rest,
    for identities stated as alternating sums).
    """
    degree: int
    op: OperationKind
    mults: tuple
    terms: list = field(default_factory=list)
    mode: str = "symmetric"

    def __post_init__(self):
        self.op = OperationKind.parse(self.op)
        self.mults = tuple(self.mults)
        merged = {}
        for t, w, c in self.terms:
            key = (int(t), tuple(int(x) for x in w))
            merged[key] = merged.get(key, 0) + c
        self.terms = [(t, w, c) for (t, w), c in sorted(merged.items()) if c]

    def __len__(self):
        return len(self.terms)

    def as_polynomial(self):
        return {(t, w): c for t, w, c in self.terms}

    def linearized_terms(self):
        return [(t, basic_linearization(w, self.mults), c) for t, w, c in self.terms]

    def __str__(self):
        return fa.polynomial_str(self.as_polynomial(), self.degree, self.op)


def identity_from_text(text, op, mults=None, mode="symmetric"):
    """Parse bracket notation into a (straightened) identity.

    Without `mults` the identity must be multilinear in a, b, c, ...
    """
    op = OperationKind.parse(op)
    terms = fa.parse_polynomial(text.replace("−", "-"))
    degree = fa.degree_of(terms[0][1])
    poly = fa.straighten_polynomial(terms, op)
    if mults is None:
        return MultilinearIdentity(degree, op, [(t, w, c) for (t, w), c in poly.items()])
    return NonlinearIdentity(degree, op, mults, [(t, w, c) for (t, w), c in poly.items()], mode)


def expand_identity(ident):
    return fa.expand(ident.as_polynomial(), ident.op)


def verify_identity(ident, op=None):
    """True iff the full expansion over Z is zero.

    Accepts identities, straightened polynomial dicts (with op) or text.
    """
    if isinstance(ident, str):
        ident = identity_from_text(ident, op, mults=())
        return not expand_identity(ident)
    if isinstance(ident, dict):
        return not fa.expand(ident, op)
    return not expand_identity(ident)


def verify_alternating(ident, letters):
    """True iff the alternating sum over permutations of `letters` of the
    expansion is zero (used for identities stated as such sums)."""
    from itertools import permutations
    from ..symmetric_group import sign
    e = expand_identity(ident)
    letters = list(letters)
    total = {}
    for perm in permutations(range(len(letters))):
        sg = sign(perm)
        ren = {letters[i]: letters[perm[i]] for i in range(len(letters))}
        for w, c in e.items():
            w2 = tuple(ren.get(x, x) for x in w)
            total[w2] = total.get(w2, 0) + sg * c
    return not any(total.values())


# -- lifting -----------------------------------------------------------------

def _substitute(tree, var, node):
    if fa.is_leaf(tree):
        return node if tree == var else tree
    return tuple(_substitute(c, var, node) for c in tree)


def lift_identity(ident):
    """Liftings of a degree n-3 identity to degree n: each variable x_i
    replaced by {x_i, x_n-2, x_n-1, x_n}, plus the two embeddings
    {I, ., ., .} and {., I, ., .} (the others follow by symmetry)."""
    m = ident.degree
    n = m + 3
    extra = (m, m + 1, m + 2)
    op = ident.op
    trees = [(fa.monomial(m, t, w), c) for t, w, c in ident.terms]
    maps = [lambda tr, i=i: _substitute(tr, i, (i,) + extra) for i in range(m)]
    maps.append(lambda tr: (tr,) + extra)
    maps.append(lambda tr: (extra[0], tr, extra[1], extra[2]))
    out = []
    for f in maps:
        terms = []
        for tr, c in trees:
            for (t, w), s in fa.straighten(f(tr), op).items():
                terms.append((t, w, c * s))
        out.append(MultilinearIdentity(n, op, terms))
    return out


# -- images in the natural representations -------------------------------------

def n_types(degree):
    return len(fa.association_types(degree))


def identity_rows(ident, provider, lin_cache=None):
    """Block row [R(I_1) ... R(I_t)] (mod p) of an identity; nonlinear
    identities are linearized and multiplied by their linearization
    matrix."""
    p = provider.p
    d = provider.dim
    t = n_types(ident.degree)
    out = np.zeros((d, t * d), dtype=np.int64)
    if isinstance(ident, NonlinearIdentity):
        terms = ident.linearized_terms()
    else:
        terms = ident.terms
    for k, w, c in terms:
        blk = out[:, k * d:(k + 1) * d]
        blk += (int(c) % p) * provider.matrix(w)
        blk %= p
    if isinstance(ident, NonlinearIdentity):
        key = (ident.mults, provider.lam, ident.mode)
        lm = None if lin_cache is None else lin_cache.get(key)
        if lm is None:
            lm = linearization_matrix(ident.mults, provider.lam, ident.mode, 1, provider)
            if lin_cache is not None:
                lin_cache[key] = lm
        out = modp.matmul(lm, out, p)
    return out


def expansion_rows(degree, op, provider):
    """Stacked R(E_1); ...; R(E_t): the expansion map in one isotypic
    component, t*d x d."""
    blocks = [provider.element(fa.expansion_block(degree, t, op)) for t in range(n_types(degree))]
    return np.vstack(blocks)
