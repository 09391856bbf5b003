"""Executable Hopf algebra axiom checkers.

A ``HopfData`` bundles a finitely presented algebra with generator-level
coproduct, counit and (optionally partial) antipode assignments.  The
checkers evaluate the coassociativity, counit and antipode axioms on all
words up to a length bound, computing inside the tensor-square and
tensor-cube rewrite systems, and report exact witnesses on failure.
Structure maps extend multiplicatively (the antipode anti-multiplicatively),
so the generator- and relation-level checks are the decisive content; the
word sweep is a consistency net on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rewrite import (
    DEFAULT_BUDGET,
    NCPolynomial,
    RewriteSystem,
    apply_morphism,
)
from .scalars import RadicalScalar


class AntipodeMissing(Exception):
    """Antipode requested for a generator that has none assigned."""


@dataclass
class HopfData:
    """Presentation plus generator-level coalgebra structure.

    coproduct values live in the tensor square of ``rs`` (slot-0 index i,
    slot-1 index size+i); counit values are scalars; antipode values are
    polynomials over ``rs`` itself and may be missing for some generators.
    """

    rs: RewriteSystem
    coproduct: dict[int, NCPolynomial]
    counit: dict[int, RadicalScalar]
    antipode: dict[int, NCPolynomial] = field(default_factory=dict)

    def __post_init__(self):
        self._t2 = None
        self._t3 = None

    @property
    def t2(self) -> RewriteSystem:
        if self._t2 is None:
            self._t2 = self.rs.tensor_power(2)
        return self._t2

    @property
    def t3(self) -> RewriteSystem:
        if self._t3 is None:
            self._t3 = self.rs.tensor_power(3)
        return self._t3

    def delta(self, p: NCPolynomial, budget: int = DEFAULT_BUDGET) -> NCPolynomial:
        return apply_morphism(p, self.coproduct, self.t2, budget)

    def counit_of(self, p: NCPolynomial) -> RadicalScalar:
        total = RadicalScalar.zero()
        for w, c in p.terms.items():
            val = c
            for letter in w:
                val = val * self.counit[letter]
                if val.is_zero():
                    break
            total = total + val
        return total

    def antipode_of(self, p: NCPolynomial, budget: int = DEFAULT_BUDGET) -> NCPolynomial:
        out = NCPolynomial.zero()
        for w, c in p.terms.items():
            term = NCPolynomial.unit()
            for letter in reversed(w):
                img = self.antipode.get(letter)
                if img is None:
                    raise AntipodeMissing(self.rs.names[letter])
                term = self.rs.multiply(term, img, budget)
            out = out + term.scale(c)
        return self.rs.normal_form(out, budget)

    def missing_antipode_generators(self) -> list[str]:
        return [
            self.rs.names[i]
            for i in range(self.rs.size)
            if i not in self.antipode
        ]


@dataclass
class AxiomResult:
    """Outcome of one axiom sweep: pass/fail plus exact witnesses."""

    name: str
    ok: bool
    checked_words: int
    witnesses: list[tuple[str, str]] = field(default_factory=list)


def _split_t2_word(word, size: int):
    """Split a slot-sorted tensor-square word into its two slot parts."""
    u = tuple(i for i in word if i < size)
    v = tuple(i - size for i in word if i >= size)
    return u, v


def _iter_word_images(rs, gen_images, target, max_len, budget):
    """Yield (word, image-under-the-morphism) for all words up to max_len.

    The morphism is determined by its generator images; prefix results are
    reused, so each word costs a single multiplication in the target.
    """
    frontier = {(): NCPolynomial.unit()}
    for _ in range(max_len):
        nxt = {}
        for w, img in frontier.items():
            for i in range(rs.size):
                nxt[w + (i,)] = target.multiply(img, gen_images[i], budget)
        yield from nxt.items()
        frontier = nxt


class _DeltaMemo:
    """Memoized coproduct values on normal words, extended prefix by prefix."""

    def __init__(self, h: "HopfData", budget: int):
        self.h = h
        self.budget = budget
        self.cache: dict[tuple[int, ...], NCPolynomial] = {(): NCPolynomial.unit()}

    def __call__(self, word) -> NCPolynomial:
        cached = self.cache.get(word)
        if cached is None:
            prefix = self(word[:-1])
            cached = self.h.t2.multiply(
                prefix, self.h.coproduct[word[-1]], self.budget
            )
            self.cache[word] = cached
        return cached


def check_coassociativity(
    h: HopfData, max_len: int = 4, budget: int = DEFAULT_BUDGET
) -> AxiomResult:
    """(Delta x id) o Delta = (id x Delta) o Delta on words up to max_len.

    Slot-sorted concatenations of normal slot parts are already normal in
    the tensor systems, so applying Delta to one leg of a normal-formed
    coproduct is pure linear assembly over memoized coproduct values.
    """
    rs = h.rs
    g = rs.size
    delta = _DeltaMemo(h, budget)
    checked = 0
    witnesses = []
    for w in rs.iter_words(max_len):
        checked += 1
        dw = delta(w)
        lhs: dict[tuple[int, ...], RadicalScalar] = {}
        rhs: dict[tuple[int, ...], RadicalScalar] = {}
        for tw, c in dw.terms.items():
            u, v = _split_t2_word(tw, g)
            for tw2, c2 in delta(u).terms.items():
                key = tw2 + tuple(x + 2 * g for x in v)
                s = lhs.get(key)
                cc = c * c2
                s = cc if s is None else s + cc
                if s.is_zero():
                    lhs.pop(key, None)
                else:
                    lhs[key] = s
            for tw2, c2 in delta(v).terms.items():
                key = u + tuple(x + g for x in tw2)
                s = rhs.get(key)
                cc = c * c2
                s = cc if s is None else s + cc
                if s.is_zero():
                    rhs.pop(key, None)
                else:
                    rhs[key] = s
        if lhs != rhs:
            diff = NCPolynomial(lhs) - NCPolynomial(rhs)
            witnesses.append((rs.render(NCPolynomial.word(w)), h.t3.render(diff)))
    return AxiomResult("coassociativity", not witnesses, checked, witnesses)


def check_counit(
    h: HopfData, max_len: int = 4, budget: int = DEFAULT_BUDGET
) -> AxiomResult:
    """(eps x id) o Delta = id = (id x eps) o Delta on words up to max_len.

    The slot parts of a normal-formed coproduct are themselves normal, so
    collapsing one leg with the counit is linear assembly.
    """
    rs = h.rs
    g = rs.size
    delta = _DeltaMemo(h, budget)

    def eps_word(u) -> RadicalScalar:
        val = RadicalScalar.one()
        for letter in u:
            val = val * h.counit[letter]
            if val.is_zero():
                break
        return val

    checked = 0
    witnesses = []
    base_gen = {i: NCPolynomial.gen(i) for i in range(g)}
    bases = dict(_iter_word_images(rs, base_gen, rs, max_len, budget))
    for w in rs.iter_words(max_len):
        checked += 1
        dw = delta(w)
        left: dict[tuple[int, ...], RadicalScalar] = {}
        right: dict[tuple[int, ...], RadicalScalar] = {}
        for tw, c in dw.terms.items():
            u, v = _split_t2_word(tw, g)
            lc = c * eps_word(u)
            if not lc.is_zero():
                s = left.get(v)
                s = lc if s is None else s + lc
                if s.is_zero():
                    left.pop(v, None)
                else:
                    left[v] = s
            rc = c * eps_word(v)
            if not rc.is_zero():
                s = right.get(u)
                s = rc if s is None else s + rc
                if s.is_zero():
                    right.pop(u, None)
                else:
                    right[u] = s
        p = NCPolynomial.word(w)
        base = bases[w]
        dl = NCPolynomial(left) - base
        dr = NCPolynomial(right) - base
        if not dl.is_zero():
            witnesses.append((rs.render(p), rs.render(dl)))
        if not dr.is_zero():
            witnesses.append((rs.render(p), rs.render(dr)))
    return AxiomResult("counit", not witnesses, checked, witnesses)


def check_antipode(
    h: HopfData, max_len: int = 4, budget: int = DEFAULT_BUDGET
) -> AxiomResult:
    """mult o (S x id) o Delta = unit o eps = mult o (id x S) o Delta.

    Raises AntipodeMissing when some generator has no antipode assigned;
    callers that want a report instead should test
    ``missing_antipode_generators`` first.
    """
    missing = h.missing_antipode_generators()
    if missing:
        raise AntipodeMissing(", ".join(missing))
    rs = h.rs
    g = rs.size
    delta_gen = dict(h.coproduct)
    s_cache: dict[tuple[int, ...], NCPolynomial] = {}

    def s_of(word):
        cached = s_cache.get(word)
        if cached is None:
            cached = h.antipode_of(NCPolynomial.word(word), budget)
            s_cache[word] = cached
        return cached

    checked = 0
    witnesses = []
    for w, dw in _iter_word_images(rs, delta_gen, h.t2, max_len, budget):
        checked += 1
        p = NCPolynomial.word(w)
        left = NCPolynomial.zero()
        right = NCPolynomial.zero()
        for tw, c in dw.terms.items():
            u, v = _split_t2_word(tw, g)
            left = left + rs.multiply(s_of(u), NCPolynomial.word(v), budget).scale(c)
            right = right + rs.multiply(NCPolynomial.word(u), s_of(v), budget).scale(c)
        target = NCPolynomial({(): h.counit_of(p)})
        dl = rs.normal_form(left, budget) - target
        dr = rs.normal_form(right, budget) - target
        if not dl.is_zero():
            witnesses.append((rs.render(p), rs.render(dl)))
        if not dr.is_zero():
            witnesses.append((rs.render(p), rs.render(dr)))
    return AxiomResult("antipode", not witnesses, checked, witnesses)


def check_bialgebra_compatibility(
    h: HopfData, budget: int = DEFAULT_BUDGET
) -> AxiomResult:
    """Delta and eps respect every defining relation of the presentation.

    For each rule L -> R this compares Delta(L) with Delta(R) in the
    tensor square and eps(L) with eps(R) as scalars.
    """
    rs, t2 = h.rs, h.t2
    checked = 0
    witnesses = []
    for (a, b), variants in rs.rules.items():
        lhs_word = NCPolynomial.word((a, b))
        name = f"{rs.names[a]}*{rs.names[b]}"
        for rhs in variants:
            checked += 1
            d_l = h.delta(lhs_word, budget)
            d_r = h.delta(rhs, budget)
            diff = d_l - d_r
            if not diff.is_zero():
                witnesses.append((f"Delta({name})", t2.render(diff)))
            e_l = h.counit_of(lhs_word)
            e_r = h.counit_of(rhs)
            if not (e_l - e_r).is_zero():
                witnesses.append((f"eps({name})", str(e_l - e_r)))
    return AxiomResult("bialgebra_compatibility", not witnesses, checked, witnesses)
