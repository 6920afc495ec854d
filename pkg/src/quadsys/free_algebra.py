"""Nested quaternary monomials, straightening, and the expansion map into the
free associative algebra.

A monomial is a tree: a leaf is an int (a variable or letter index), an
inner node is a 4-tuple of subtrees.  An association type is the tree
whose leaves are the slots 0..n-1 in order; a multilinear monomial of
type t is t with slot k relabelled by perm[k].
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import json
import re

import numpy as np

from .symmetric_group import all_permutations, lex_rank, multiset_permutations


class OperationKind(Enum):
    TETRAD = "tetrad"
    ANTI = "anti"

    @property
    def eps(self):
        """Sign picked up when the arguments of one node are reversed."""
        return 1 if self is OperationKind.TETRAD else -1

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        t = str(text).lower().replace("-", "_")
        if t in ("tetrad", "t", "plus"):
            return cls.TETRAD
        if t in ("anti", "anti_tetrad", "antitetrad", "minus"):
            return cls.ANTI
        raise ValueError("unknown operation %r" % text)


TETRAD = OperationKind.TETRAD
ANTI = OperationKind.ANTI

TYPE_TREES = {
    4: [(0, 1, 2, 3)],
    7: [((0, 1, 2, 3), 4, 5, 6),
        (0, (1, 2, 3, 4), 5, 6)],
    10: [(((0, 1, 2, 3), 4, 5, 6), 7, 8, 9),
         ((0, (1, 2, 3, 4), 5, 6), 7, 8, 9),
         (0, ((1, 2, 3, 4), 5, 6, 7), 8, 9),
         (0, (1, (2, 3, 4, 5), 6, 7), 8, 9),
         ((0, 1, 2, 3), (4, 5, 6, 7), 8, 9),
         ((0, 1, 2, 3), 4, (5, 6, 7, 8), 9),
         ((0, 1, 2, 3), 4, 5, (6, 7, 8, 9)),
         (0, (1, 2, 3, 4), (5, 6, 7, 8), 9)],
}

_LEAF = (1,)


def is_leaf(t):
    return isinstance(t, (int, np.integer))


def shape(t):
    """Shape key: inner nodes sort before leaves at the first difference."""
    if is_leaf(t):
        return _LEAF
    return (0,) + tuple(shape(c) for c in t)


def leaves(t):
    if is_leaf(t):
        return (int(t),)
    out = ()
    for c in t:
        out += leaves(c)
    return out


def degree_of(t):
    return len(leaves(t))


def relabel(t, labels):
    """Replace slot k of a type tree by labels[k]."""
    if is_leaf(t):
        return int(labels[t])
    return tuple(relabel(c, labels) for c in t)


def tree_str(t, op=TETRAD, names="abcdefghijklmnop"):
    if is_leaf(t):
        return names[t]
    lb, rb = ("{", "}") if op is TETRAD else ("[", "]")
    return lb + ",".join(tree_str(c, op, names) for c in t) + rb


def _canon(t, eps):
    """(sign, tree, flat, shape) of the straightened form of t."""
    if is_leaf(t):
        return 1, int(t), (int(t),), _LEAF
    parts = []
    sgn = 1
    for c in t:
        s, ct, fl, sh = _canon(c, eps)
        if s == 0:
            return 0, None, None, None
        sgn *= s
        parts.append((ct, fl, sh))
    fwd_key = (tuple(p[2] for p in parts), sum((p[1] for p in parts), ()))
    rev = parts[::-1]
    rev_key = (tuple(p[2] for p in rev), sum((p[1] for p in rev), ()))
    if rev_key < fwd_key:
        parts = rev
        sgn *= eps
        key = rev_key
    elif rev_key == fwd_key:
        if eps == -1:
            return 0, None, None, None
        key = fwd_key
    else:
        key = fwd_key
    tree = tuple(p[0] for p in parts)
    return sgn, tree, key[1], (0,) + key[0]


def straighten_tree(t, op):
    """(sign, canonical tree); sign 0 means the monomial is zero.

    At each node the children (already canonical) are kept or reversed:
    the orientation whose child shapes put an inner node first at the
    first difference wins; for equal shapes the lexicographically smaller
    flattened argument sequence wins.  Reversal costs a factor eps; an
    anti-tetrad node equal to its own reversal is zero.
    """
    op = OperationKind.parse(op)
    s, tree, _, _ = _canon(t, op.eps)
    return s, tree


_SHAPE_INDEX = {}
for _deg, _trees in TYPE_TREES.items():
    _SHAPE_INDEX[_deg] = {shape(t): i for i, t in enumerate(_trees)}


def association_types(degree):
    if degree not in TYPE_TREES:
        raise ValueError("unsupported degree %r (expected 4, 7 or 10)" % degree)
    return list(TYPE_TREES[degree])


def type_of(tree):
    """Index of the canonical association type with the same shape."""
    deg = degree_of(tree)
    return _SHAPE_INDEX[deg][shape(tree)]


def straighten(tree, op):
    """Straighten to {(type, args): sign}; empty dict for zero."""
    s, ct = straighten_tree(tree, op)
    if s == 0:
        return {}
    return {(type_of(ct), leaves(ct)): s}


def monomial(degree, t, args):
    return relabel(TYPE_TREES[degree][t], args)


def is_canonical(degree, t, args, op):
    s, ct = straighten_tree(monomial(degree, t, args), op)
    return s == 1 and leaves(ct) == tuple(args) and type_of(ct) == t


# -- expansion ----------------------------------------------------------------

def expand_tree(t, op):
    """Associative expansion {word tuple: coeff} of a nested monomial."""
    op = OperationKind.parse(op)
    if is_leaf(t):
        return {(int(t),): 1}
    parts = [expand_tree(c, op) for c in t]

    def product(seq):
        acc = {(): 1}
        for p in seq:
            nxt = {}
            for w1, c1 in acc.items():
                for w2, c2 in p.items():
                    w = w1 + w2
                    nxt[w] = nxt.get(w, 0) + c1 * c2
            acc = nxt
        return acc

    out = product(parts)
    for w, c in product(parts[::-1]).items():
        out[w] = out.get(w, 0) + op.eps * c
    return {w: c for w, c in out.items() if c}


_PATTERNS = {}


def expansion_pattern(degree, t, op):
    """Expansion of the type tree itself: list of (slot sequence, coeff)."""
    op = OperationKind.parse(op)
    key = (degree, t, op)
    if key not in _PATTERNS:
        e = expand_tree(TYPE_TREES[degree][t], op)
        _PATTERNS[key] = sorted(e.items())
    return _PATTERNS[key]


def expand(m, op):
    """Expansion of a monomial (type, args) or of a polynomial dict."""
    op = OperationKind.parse(op)
    if isinstance(m, dict):
        out = {}
        for (t, args), c in m.items():
            deg = len(args)
            for slots, e in expansion_pattern(deg, t, op):
                w = tuple(args[k] for k in slots)
                out[w] = out.get(w, 0) + c * e
        return {w: c for w, c in out.items() if c}
    t, args = m
    return expand({(t, tuple(args)): 1}, op)


def word_str(w, names="abcdefghijklmnop"):
    return "".join(names[x] for x in w)


# -- multilinear monomials and expansion matrices ----------------------------

def canonical_perms(degree, t, op):
    """Permutations w (lex order) for which type t relabelled by w is canonical."""
    op = OperationKind.parse(op)
    perms = all_permutations(degree)
    keep = [i for i, w in enumerate(perms) if is_canonical(degree, t, tuple(w), op)]
    return perms[keep]


def multilinear_monomials(degree, op, straightened=None):
    """Column labels of expansion_matrix: list of (t, perm)."""
    if straightened is None:
        straightened = degree != 4
    out = []
    for t in range(len(association_types(degree))):
        perms = canonical_perms(degree, t, op) if straightened else all_permutations(degree)
        out.extend((t, tuple(int(x) for x in w)) for w in perms)
    return out


def expansion_matrix(degree, op, p=None, straightened=None):
    """Rows: words (lex permutations); columns: multilinear monomials,
    type-major then lex.

    Columns are the canonical monomials, except in degree 4 where all 24
    monomials are used (the symmetry of the operation is what the kernel
    detects there).  Returned as an int64 array (reduced mod p if given).
    """
    op = OperationKind.parse(op)
    if degree not in (4, 7):
        raise ValueError("full expansion matrices are built for degrees 4 and 7")
    if straightened is None:
        straightened = degree != 4
    cols = []
    for t in range(len(association_types(degree))):
        perms = canonical_perms(degree, t, op) if straightened else all_permutations(degree)
        cols.append((t, perms))
    ncols = sum(len(w) for _, w in cols)
    nrows = int(np.prod(np.arange(1, degree + 1)))
    mat = np.zeros((nrows, ncols), dtype=np.int64)
    start = 0
    for t, perms in cols:
        idx = np.arange(len(perms)) + start
        for slots, c in expansion_pattern(degree, t, op):
            words = perms[:, list(slots)]
            rows = lex_rank(words)
            np.add.at(mat, (rows, idx), c)
        start += len(perms)
    if p is not None:
        mat %= p
    return mat


def expansion_block(degree, t, op):
    """E(type t) as a group-algebra element: list of (perm, coeff)."""
    return [(tuple(slots), c) for slots, c in expansion_pattern(degree, t, op)]


# -- symmetries of association types ------------------------------------------

def _palindromic_paths(t, path=()):
    """Paths to inner nodes whose child shapes read the same reversed,
    innermost first, left to right (post-order)."""
    if is_leaf(t):
        return []
    out = []
    for i, c in enumerate(t):
        out.extend(_palindromic_paths(c, path + (i,)))
    sh = [shape(c) for c in t]
    if sh == sh[::-1]:
        out.append(path)
    return out


def _reverse_at(t, path):
    if not path:
        return tuple(reversed(t))
    i = path[0]
    return tuple(_reverse_at(c, path[1:]) if k == i else c for k, c in enumerate(t))


def symmetry_monomials(degree, t):
    """For each palindromic node of type t, the slot permutation obtained by
    reversing that node."""
    tree = TYPE_TREES[degree][t]
    return [leaves(_reverse_at(tree, path)) for path in _palindromic_paths(tree)]


@dataclass
class MultilinearIdentity:
    """Element of (F S_n)^t: terms (type, perm, coeff) with 0-based perms."""
    degree: int
    op: OperationKind
    terms: list = field(default_factory=list)

    def __post_init__(self):
        self.op = OperationKind.parse(self.op)
        merged = {}
        for t, w, c in self.terms:
            key = (int(t), tuple(int(x) for x in w))
            merged[key] = merged.get(key, 0) + c
        self.terms = [(t, w, c) for (t, w), c in sorted(merged.items()) if c]

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def as_polynomial(self):
        return {(t, w): c for t, w, c in self.terms}

    def scaled(self, k):
        return MultilinearIdentity(self.degree, self.op, [(t, w, c * k) for t, w, c in self.terms])

    def to_json(self):
        return {"op": self.op.value, "degree": self.degree,
                "terms": [{"type": t, "perm": [x + 1 for x in w], "coeff": str(c)}
                          for t, w, c in self.terms]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        terms = []
        for term in obj["terms"]:
            c = Fraction(term["coeff"])
            if c.denominator == 1:
                c = c.numerator
            terms.append((term["type"], tuple(x - 1 for x in term["perm"]), c))
        return cls(obj["degree"], obj["op"], terms)

    def __str__(self):
        return polynomial_str({(t, w): c for t, w, c in self.terms}, self.degree, self.op)


def type_symmetries(degree, op):
    """The identities iota - tau (tetrad) / iota + tau (anti-tetrad), one per
    palindromic node, listed type by type."""
    op = OperationKind.parse(op)
    out = []
    ident = tuple(range(degree))
    for t in range(len(association_types(degree))):
        for w in symmetry_monomials(degree, t):
            out.append(MultilinearIdentity(degree, op, [(t, ident, 1), (t, w, -op.eps)]))
    return out


def monomial_count(degree, op):
    """Number of canonical multilinear monomials: n!/2^k per type with k
    palindromic nodes (anti-tetrad multilinear monomials are never zero)."""
    from math import factorial
    return sum(factorial(degree) // 2 ** len(_palindromic_paths(t)) for t in TYPE_TREES[degree])


def polynomial_str(poly, degree, op, names="abcdefghijklmnop"):
    parts = []
    for (t, w), c in sorted(poly.items()):
        s = tree_str(monomial(degree, t, w), op, names)
        if c == 1:
            parts.append("+ " + s)
        elif c == -1:
            parts.append("- " + s)
        elif c < 0:
            parts.append("- %s %s" % (-c, s))
        else:
            parts.append("+ %s %s" % (c, s))
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text or "0"


# -- nonlinear (multihomogeneous) monomials -----------------------------------

def multihomogeneous_monomials(mults, op, increasing=()):
    """Canonical monomials (type, letter sequence) of the given multidegree.

    Letters listed in `increasing` occur once each and must appear in
    increasing order in the flattened argument sequence.
    """
    op = OperationKind.parse(op)
    degree = sum(mults)
    inc = list(increasing)
    out = []
    for t in range(len(association_types(degree))):
        for w in multiset_permutations(mults):
            if inc:
                seq = [x for x in w if x in inc]
                if seq != sorted(seq):
                    continue
            if is_canonical(degree, t, w, op):
                out.append((t, w))
    return out


def multihomogeneous_expansion_matrix(mults, op, increasing=(), alternate=None):
    """Integer matrix with rows = canonical monomials, columns = arrangements
    of the multiset; returns (matrix, monomials, words).

    With `alternate` (default: whenever `increasing` is given) each row is
    the expansion of the alternating sum of the monomial over all orderings
    of the `increasing` letters.
    """
    from itertools import permutations
    from .symmetric_group import sign
    op = OperationKind.parse(op)
    if alternate is None:
        alternate = bool(increasing)
    mons = multihomogeneous_monomials(mults, op, increasing)
    words = multiset_permutations(mults)
    index = {w: i for i, w in enumerate(words)}
    mat = np.zeros((len(mons), len(words)), dtype=np.int64)
    degree = sum(mults)
    inc = list(increasing)
    renames = [(dict(zip(inc, img)), sign(tuple(inc.index(x) for x in img)))
               for img in permutations(inc)] if alternate else [({}, 1)]
    for r, (t, w) in enumerate(mons):
        for ren, sg in renames:
            v = tuple(ren.get(x, x) for x in w)
            for slots, c in expansion_pattern(degree, t, op):
                mat[r, index[tuple(v[k] for k in slots)]] += sg * c
    return mat, mons, words


# -- parsing bracket notation -------------------------------------------------

_TOKEN = re.compile(r"\s*([-+]|\d+|[{}\[\],]|[a-z])")


def parse_tree(text, letters="abcdefghijklmnop"):
    """'{{a,b,c,d},e,f,g}' (or square brackets) -> nested tuple of indices."""
    toks = _TOKEN.findall(text)
    pos = 0

    def node():
        nonlocal pos
        tok = toks[pos]
        if tok in "{[":
            close = "}" if tok == "{" else "]"
            pos += 1
            kids = [node()]
            while toks[pos] == ",":
                pos += 1
                kids.append(node())
            if toks[pos] != close or len(kids) != 4:
                raise ValueError("malformed monomial %r" % text)
            pos += 1
            return tuple(kids)
        pos += 1
        return letters.index(tok)

    out = node()
    if pos != len(toks):
        raise ValueError("trailing input in %r" % text)
    return out


def parse_polynomial(text, letters="abcdefghijklmnop"):
    """'{..} - 2 {..} + ...' -> list of (coeff, tree)."""
    terms = []
    depth = 0
    cur = ""
    sign = 1
    coeff = 1
    i = 0
    text = text.strip()
    while i < len(text):
        ch = text[i]
        if depth == 0 and ch in "+-":
            sign = 1 if ch == "+" else -1
            i += 1
            continue
        if depth == 0 and ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            coeff = int(text[i:j])
            i = j
            continue
        if depth == 0 and ch.isspace():
            i += 1
            continue
        if ch in "{[":
            depth += 1
        elif ch in "}]":
            depth -= 1
        cur += ch
        if depth == 0:
            terms.append((sign * coeff, parse_tree(cur, letters)))
            cur, sign, coeff = "", 1, 1
        i += 1
    if depth or cur.strip():
        raise ValueError("unbalanced brackets in %r" % text)
    return terms


def straighten_polynomial(terms, op):
    """Straighten a list of (coeff, tree) into {(type, args): coeff}."""
    out = {}
    for c, tree in terms:
        for key, s in straighten(tree, op).items():
            out[key] = out.get(key, 0) + c * s
    return {k: v for k, v in out.items() if v}
