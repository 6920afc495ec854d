"""Noncommutative Groebner bases in free associative algebras.

Words are Python strings over an ordered alphabet of single letters and
are compared by degree, then lexicographically in the alphabet order.
Polynomials map words to field elements (Fraction by default; any exact
field type with +, -, *, / works, e.g. QuadraticNumber).

Reduction is deterministic: the highest reducible term is rewritten first,
by the applicable rule with the lowest leading word, at its leftmost
occurrence.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
import heapq
import logging
import re

log = logging.getLogger(__name__)


class MonomialOrder:
    """Deglex order with the letters ranked as listed in `alphabet`."""

    def __init__(self, alphabet):
        self.alphabet = "".join(alphabet.split()) if " " in alphabet else alphabet
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("repeated letter in alphabet")
        self._table = str.maketrans({c: chr(0x4E00 + i) for i, c in enumerate(self.alphabet)})

    def key(self, word):
        return (len(word), word.translate(self._table))

    def leading(self, words):
        return max(words, key=self.key)

    def sorted(self, words, reverse=False):
        return sorted(words, key=self.key, reverse=reverse)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.alphabet == self.alphabet

    def __hash__(self):
        return hash(self.alphabet)

    def __repr__(self):
        return "MonomialOrder(%r)" % self.alphabet


# -- polynomials ----------------------------------------------------------------

class NCPolynomial:
    __slots__ = ("terms", "order", "_lm")

    def __init__(self, terms, order):
        self.terms = {w: c for w, c in terms.items() if c}
        self.order = order
        self._lm = None

    @classmethod
    def parse(cls, text, order):
        return cls(parse_terms(text, order.alphabet), order)

    @property
    def lm(self):
        if self._lm is None and self.terms:
            self._lm = self.order.leading(self.terms)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def monic(self):
        if not self.terms:
            return self
        c = self.lc
        if c == 1:
            return self
        return NCPolynomial({w: x / c for w, x in self.terms.items()}, self.order)

    def scaled(self, k):
        return NCPolynomial({w: k * x for w, x in self.terms.items()}, self.order)

    def multiply(self, left="", right=""):
        return NCPolynomial({left + w + right: c for w, c in self.terms.items()}, self.order)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPolynomial(out, self.order)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return NCPolynomial(out, self.order)

    def __neg__(self):
        return self.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            out = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    out[u + v] = out.get(u + v, 0) + a * b
            return NCPolynomial(out, self.order)
        return self.scaled(other)

    __rmul__ = scaled

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return [(w, self.terms[w]) for w in self.order.sorted(self.terms, reverse=True)]

    def __str__(self):
        return format_polynomial(self.sorted_terms())

    def __repr__(self):
        return "NCPolynomial(%r)" % str(self)


def format_word(w):
    """'aab' -> 'a^2b'; the empty word is '1'."""
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else "%s^%d" % (w[i], j - i))
        i = j
    return "".join(out)


def format_polynomial(terms):
    """Terms (word, coeff) in the given order as 'aba^2 + a^2ba - a'."""
    parts = []
    for w, c in terms:
        rational = not hasattr(c, "is_rational")
        neg = rational and c < 0
        mag = -c if neg else c
        if not rational:
            body = "(%s)" % c + (" " + format_word(w) if w else "")
        elif mag == 1:
            body = format_word(w)
        else:
            body = str(mag) + (" " + format_word(w) if w else "")
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:[A-Za-z](?:\^\d+)?)*)")


def parse_terms(text, alphabet):
    """'+abcd -dcba -c', 'aba^2 + a^2ba - a', '1/2 a^2 - 1' -> {word: Fraction}."""
    text = text.strip()
    out = {}
    pos = 0
    if not text or text == "0":
        return out
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial at %r" % text[pos:])
        sign, coeff, word = m.groups()
        if not coeff and not word:
            raise ValueError("empty term in %r" % text)
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        w = "".join(ch * int(e or 1) for ch, e in re.findall(r"([A-Za-z])(?:\^(\d+))?", word))
        bad = set(w) - set(alphabet)
        if bad:
            raise ValueError("letters %s not in alphabet %r" % ("".join(sorted(bad)), alphabet))
        out[w] = out.get(w, 0) + c
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return {w: c for w, c in out.items() if c}


def parse_presentation(text):
    """First line: alphabet in order; then one polynomial per line."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty presentation")
    order = MonomialOrder(lines[0].replace(" ", ""))
    return order, [NCPolynomial.parse(ln, order) for ln in lines[1:]]


# -- rules and reduction -----------------------------------------------------------

class Rule:
    """Monic polynomial used as lm -> -(tail)."""
    __slots__ = ("poly", "lm", "tail")

    def __init__(self, poly):
        poly = poly.monic()
        self.poly = poly
        self.lm = poly.lm
        self.tail = [(w, c) for w, c in poly.terms.items() if w != self.lm]

    def __repr__(self):
        return "Rule(%s)" % self.poly


def _as_rules(rules):
    out = []
    for r in rules:
        out.append(r if isinstance(r, Rule) else Rule(r))
    if out:
        order = out[0].poly.order
        out.sort(key=lambda r: order.key(r.lm))
    return out


def _find(word, rules):
    """Applicable rule with the lowest leading word, leftmost occurrence."""
    for r in rules:
        i = word.find(r.lm)
        if i >= 0:
            return r, i
    return None, -1


def normal_form(f, rules, trace=None):
    """Normal form of f modulo the rules (sorted internally by leading word).

    When `trace` is a list, each step (coeff, left, rule polynomial, right)
    is appended, so that f - NF(f) = sum coeff * left * rule * right.
    """
    if not f:
        return f
    order = f.order
    rules = _as_rules(rules)
    terms = dict(f.terms)
    heap = [(_neg_key(order, w), w) for w in terms]
    heapq.heapify(heap)
    done = {}
    while heap:
        _, w = heapq.heappop(heap)
        c = terms.pop(w, 0)
        if not c:
            continue
        r, i = _find(w, rules)
        if r is None:
            done[w] = c
            continue
        left, right = w[:i], w[i + len(r.lm):]
        if trace is not None:
            trace.append((c, left, r.poly, right))
        for t, tc in r.tail:
            u = left + t + right
            if u in terms:
                terms[u] -= c * tc
            else:
                terms[u] = -c * tc
                heapq.heappush(heap, (_neg_key(order, u), u))
    return NCPolynomial(done, order)


class _Neg:
    """Reverse the order of a key inside a min-heap."""
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def _neg_key(order, w):
    return _Neg(order.key(w))


def is_normal(f, rules):
    lms = [r.lm if isinstance(r, Rule) else r.lm for r in rules]
    return not any(lm in w for w in f.terms for lm in lms)


# -- compositions -------------------------------------------------------------------

def overlaps(u, v):
    """Lengths k of proper overlaps: suffix of u of length k = prefix of v."""
    return [k for k in range(1, min(len(u), len(v))) if u[-k:] == v[:k]]


def compositions(g, h):
    """All compositions of the monic polynomials g, h: proper overlaps
    LM(g) = xy, LM(h) = yz giving g z - x h, and inclusions LM(g) = x LM(h) z
    giving g - x h z (skipped when g is h)."""
    g, h = g.monic(), h.monic()
    u, v = g.lm, h.lm
    out = []
    for k in overlaps(u, v):
        out.append(g.multiply(right=v[k:]) - h.multiply(left=u[:-k]))
    if g != h and len(v) <= len(u):
        i = u.find(v)
        while i >= 0:
            out.append(g - h.multiply(left=u[:i], right=u[i + len(v):]))
            i = u.find(v, i + 1)
    return out


def composition_degree(g, h):
    """Length of the largest ambiguity word of the pair (g, h)."""
    u, v = g.lm, h.lm
    best = len(u) if v in u else 0
    for k in overlaps(u, v):
        best = max(best, len(u) + len(v) - k)
    return best


# -- self-reduction and completion -----------------------------------------------------

def self_reduce(polys):
    """Monic, sorted by leading word, no leading word divides a term of
    another element; iterated to a fixed point."""
    polys = [p.monic() for p in polys if p]
    if not polys:
        return []
    order = polys[0].order
    polys.sort(key=lambda p: order.key(p.lm))
    # first pass: each element against its predecessors
    out = []
    for p in polys:
        r = normal_form(p, out)
        if r:
            out.append(Rule(r))
            out.sort(key=lambda x: order.key(x.lm))
    current = [r.poly for r in out]
    while True:
        changed = False
        nxt = []
        for i, p in enumerate(current):
            others = current[:i] + current[i + 1:]
            r = normal_form(p, others).monic()
            if r != p:
                changed = True
            if r:
                nxt.append(r)
        nxt.sort(key=lambda p: order.key(p.lm))
        dedup = []
        for p in nxt:
            if not dedup or dedup[-1] != p:
                dedup.append(p)
        current = dedup
        if not changed:
            return current


@dataclass
class GroebnerBasis:
    rules: list
    order: MonomialOrder
    complete: bool
    degree_bound: object = None
    iterations: int = 0
    composition_counts: list = field(default_factory=list)

    @property
    def status(self):
        return "complete" if self.complete else "truncated at degree %s" % self.degree_bound

    def leading_words(self):
        return [r.lm for r in self.rules]

    def normal_form(self, f, trace=None):
        return normal_form(f, self.rules, trace)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def strings(self):
        return [str(r) for r in self.rules]


def groebner_basis(gens, degree_bound=None, max_iterations=None):
    """Completion by batches: all compositions of pairs (i, j) in lex order
    of indices are reduced against the current set; the distinct nonzero
    results are adjoined and the union self-reduced.  Stops when no
    composition survives, or reports truncation when compositions above
    `degree_bound` were skipped."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("no generators")
    order = gens[0].order
    current = self_reduce(gens)
    seen = set()
    iterations = 0
    counts = []
    skipped = False
    while True:
        iterations += 1
        new = []
        new_set = set()
        skipped = False
        rules = _as_rules(current)
        for i, g in enumerate(current):
            for j, h in enumerate(current):
                key = (g, h)
                if key in seen:
                    continue
                if degree_bound is not None and composition_degree(g, h) > degree_bound:
                    skipped = True
                    continue
                for s in compositions(g, h):
                    r = normal_form(s, rules)
                    if r:
                        r = r.monic()
                        if r not in new_set:
                            new_set.add(r)
                            new.append(r)
                seen.add(key)
        counts.append(len(new))
        log.info("iteration %d: %d rules, %d new compositions", iterations, len(current), len(new))
        if not new:
            break
        current = self_reduce(current + new)
        if max_iterations is not None and iterations >= max_iterations:
            skipped = True
            break
    return GroebnerBasis(current, order, not skipped, degree_bound, iterations, counts)


def all_compositions_reduce(gb, degree_bound=None):
    """Independent final check: every composition of every pair of rules
    (up to the bound) has normal form zero."""
    rules = _as_rules(gb.rules)
    for g in gb.rules:
        for h in gb.rules:
            if degree_bound is not None and composition_degree(g, h) > degree_bound:
                continue
            for s in compositions(g, h):
                if normal_form(s, rules):
                    return False
    return True


# -- standard monomials -----------------------------------------------------------------

class WordAutomaton:
    """Aho-Corasick automaton recognizing words that contain a leading word.
    Live states are those not yet containing any pattern."""

    def __init__(self, patterns, alphabet):
        self.alphabet = alphabet
        self.goto = [{}]
        self.dead = [False]
        for pat in patterns:
            s = 0
            for ch in pat:
                if ch not in self.goto[s]:
                    self.goto.append({})
                    self.dead.append(False)
                    self.goto[s][ch] = len(self.goto) - 1
                s = self.goto[s][ch]
            self.dead[s] = True
        fail = [0] * len(self.goto)
        self.delta = [dict() for _ in self.goto]
        queue = deque()
        for ch in alphabet:
            t = self.goto[0].get(ch)
            if t is None:
                self.delta[0][ch] = 0
            else:
                self.delta[0][ch] = t
                fail[t] = 0
                queue.append(t)
        while queue:
            s = queue.popleft()
            self.dead[s] = self.dead[s] or self.dead[fail[s]]
            for ch in alphabet:
                t = self.goto[s].get(ch)
                if t is None:
                    self.delta[s][ch] = self.delta[fail[s]][ch]
                else:
                    fail[t] = self.delta[fail[s]][ch]
                    self.delta[s][ch] = t
                    queue.append(t)

    def live_transitions(self, s):
        return [(ch, self.delta[s][ch]) for ch in self.alphabet if not self.dead[self.delta[s][ch]]]

    def is_finite(self):
        """No cycle among live states reachable from the start."""
        color = {}
        stack = [(0, iter(self.live_transitions(0)))]
        color[0] = 1
        while stack:
            s, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[s] = 2
                stack.pop()
                continue
            t = nxt[1]
            c = color.get(t, 0)
            if c == 1:
                return False
            if c == 0:
                color[t] = 1
                stack.append((t, iter(self.live_transitions(t))))
        return True

    def counts(self, up_to):
        """Number of live words of each length 0..up_to."""
        cur = {0: 1}
        out = [1]
        for _ in range(up_to):
            nxt = {}
            for s, k in cur.items():
                for _, t in self.live_transitions(s):
                    nxt[t] = nxt.get(t, 0) + k
            cur = nxt
            out.append(sum(cur.values()))
        return out

    def words(self, max_len=None):
        """Live words in deglex order (alphabet order within a length)."""
        out = []
        level = [("", 0)]
        n = 0
        while level and (max_len is None or n <= max_len):
            out.extend(w for w, _ in level)
            nxt = []
            for w, s in level:
                for ch, t in self.live_transitions(s):
                    nxt.append((w + ch, t))
            level = nxt
            n += 1
        return out


def _automaton(gb):
    return WordAutomaton(gb.leading_words(), gb.order.alphabet)


def is_finite_quotient(gb):
    return _automaton(gb).is_finite()


def standard_monomials(gb, degree_bound=None):
    """Words avoiding every leading word, deglex order.  A bound is needed
    when the quotient is infinite."""
    aut = _automaton(gb)
    if degree_bound is None and not aut.is_finite():
        raise ValueError("infinitely many standard monomials; give a degree bound")
    if not gb.complete and degree_bound is not None and gb.degree_bound is not None \
            and degree_bound > gb.degree_bound:
        raise ValueError("basis truncated at degree %d" % gb.degree_bound)
    return aut.words(degree_bound)


def graded_dimensions(gb, up_to):
    """Number of standard monomials in each degree 0..up_to."""
    if not gb.complete and gb.degree_bound is not None and up_to > gb.degree_bound:
        raise ValueError("basis truncated at degree %d" % gb.degree_bound)
    return _automaton(gb).counts(up_to)
