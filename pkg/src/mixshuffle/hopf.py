"""Deconcatenation coproduct, counit, antipode and the bialgebra checker.

The coproduct and counit are the same for every product choice: rescaling
tensors of length n by lam**n commutes with deconcatenation, so the weight-lam
mixable algebra inherits the plain deconcatenation coalgebra.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Callable, Iterable, Mapping

from .errors import UnitLetterError
from .kernel import (EMPTY, Alphabet, Element, as_scalar, format_scalar, format_word, has_unit,
                     word_degree, word_key)
from .products import word_product
from .report import CheckReport

PRODUCTS = ("quasi-shuffle", "mixable")


class TensorSquare:
    """Finite exact-rational combination of word pairs ``u (x) v``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] | None = None):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for (u, v), c in items:
            key = (tuple(u), tuple(v))
            s = acc.get(key, 0) + as_scalar(c)
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        self._terms = acc

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorSquare):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return TensorSquare(list(self.items()) + list(other.items()))

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        return TensorSquare((k, c * s) for k, c in self.items())

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def sorted_terms(self):
        def key(kv):
            (u, v), _ = kv
            return (word_degree(u) + word_degree(v), word_key(u), word_key(v))
        return sorted(self._terms.items(), key=key)

    def __repr__(self):
        return f"TensorSquare({serialize_tensor(self)})"


def serialize_tensor(t: TensorSquare) -> str:
    if not t:
        return "0"
    parts = []
    for (u, v), c in t.sorted_terms():
        body = f"{format_word(u)}|{format_word(v)}"
        parts.append(body if c == 1 else f"{format_scalar(c)}*{body}")
    return " + ".join(parts)


def coproduct(w) -> TensorSquare:
    """Deconcatenation: sum of ``u (x) v`` over all splits ``uv = w``."""
    w = tuple(w)
    return TensorSquare(((w[:i], w[i:]), 1) for i in range(len(w) + 1))


def coproduct_element(e: Element, delta: Callable = coproduct) -> TensorSquare:
    acc: dict = {}
    for w, c in e.items():
        for key, d in delta(w).items():
            s = acc.get(key, 0) + c * d
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return TensorSquare(acc)


def counit(e: Element) -> Fraction:
    """Coefficient of the empty word."""
    return Fraction(e.coefficient(EMPTY))


def _product_for(product: str, alphabet: Alphabet, lam) -> Callable:
    if product not in PRODUCTS:
        raise ValueError(f"product must be one of {PRODUCTS}, got {product!r}")
    return word_product(product, alphabet, lam)


def _times(x: Element, y: Element, mult: Callable, alphabet) -> Element:
    acc: dict = {}
    for u, cu in x.items():
        for v, cv in y.items():
            for w, cw in mult(u, v).items():
                s = acc.get(w, 0) + cu * cv * cw
                if s:
                    acc[w] = s
                else:
                    del acc[w]
    return Element(acc, alphabet)


@lru_cache(maxsize=None)
def _antipode_word(w: tuple, product: str, lam: Fraction, alphabet: Alphabet) -> Element:
    # S(w) = -w - sum over proper splits uv = w of S(u) v
    if not w:
        return Element.one(alphabet)
    mult = _product_for(product, alphabet, lam)
    acc = Element.of(w, -1, alphabet)
    for i in range(1, len(w)):
        acc = acc - _times(_antipode_word(w[:i], product, lam, alphabet),
                           Element.of(w[i:], 1, alphabet), mult, alphabet)
    return acc


def antipode(e: Element, product: str, lam, alphabet: Alphabet) -> Element:
    """Antipode of the graded connected bialgebra (product, deconcatenation)."""
    lam = as_scalar(lam)
    if product == "quasi-shuffle":
        for w in e.words():
            if has_unit(w):
                raise UnitLetterError("quasi-shuffle antipode takes unit-free words")
    out: dict = {}
    for w, c in e.items():
        for v, d in _antipode_word(tuple(w), product, lam, alphabet).items():
            s = out.get(v, 0) + c * d
            if s:
                out[v] = s
            else:
                out.pop(v, None)
    return Element(out, alphabet)


def convolve(f: Callable, g: Callable, e: Element, product: str, lam, alphabet: Alphabet,
             delta: Callable = coproduct) -> Element:
    """(f * g)(e) = sum over the coproduct of e of f(u) . g(v)."""
    mult = _product_for(product, alphabet, as_scalar(lam))
    acc = Element.zero(alphabet)
    for (u, v), c in coproduct_element(e, delta).items():
        fu = f(Element.of(u, 1, alphabet))
        gv = g(Element.of(v, 1, alphabet))
        acc = acc + _times(fu, gv, mult, alphabet) * c
    return acc


def unit_counit(e: Element) -> Element:
    """u . epsilon: the element counit(e) times the empty word."""
    return Element.one(e.alphabet) * counit(e)


def basis_words(alphabet: Alphabet, degree_bound: int) -> list[tuple]:
    """Unit-free words of degree <= ``degree_bound`` in canonical order."""
    letters = alphabet.letters(degree_bound)
    out = [EMPTY]
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for w in frontier:
            d = word_degree(w)
            for l in letters:
                if d + l.degree <= degree_bound:
                    nxt.append(w + (l,))
        out.extend(nxt)
        frontier = nxt
    return sorted(out, key=word_key)


def check_bialgebra(product: str, lam, alphabet: Alphabet, degree_bound: int,
                    delta: Callable = coproduct) -> CheckReport:
    """Exhaustive Hopf-axiom check over unit-free words of degree <= bound.

    ``delta`` may be replaced (e.g. by a corrupted coproduct) for negative controls.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    lam = as_scalar(lam)
    mult = _product_for(product, alphabet, lam)
    words = basis_words(alphabet, degree_bound)
    report = CheckReport(f"product={product} lambda={lam} degree<={degree_bound}")

    def tensor_times(s: TensorSquare, t: TensorSquare) -> TensorSquare:
        acc = []
        for (u1, v1), c1 in s.items():
            for (u2, v2), c2 in t.items():
                left, right = mult(u1, u2), mult(v1, v2)
                for (x, cx), (y, cy) in cartesian(left.items(), right.items()):
                    acc.append(((x, y), c1 * c2 * cx * cy))
        return TensorSquare(acc)

    def triple(w, first: bool) -> dict:
        acc: dict = {}
        for (u, v), c in delta(w).items():
            inner = delta(u) if first else delta(v)
            for (p, q), d in inner.items():
                key = (p, q, v) if first else (u, p, q)
                acc[key] = acc.get(key, 0) + c * d
        return {k: c for k, c in acc.items() if c}

    witness = next((w for w in words if triple(w, True) != triple(w, False)), None)
    report.add("coassociativity", len(words), witness)

    def counit_ok(w):
        d = delta(w)
        left = Element(((v, c) for (u, v), c in d.items() if not u))
        right = Element(((u, c) for (u, v), c in d.items() if not v))
        target = Element.of(w)
        return left == target and right == target

    witness = next((w for w in words if not counit_ok(w)), None)
    report.add("counit", len(words), witness)

    pairs = [(a, b) for a in words for b in words
             if word_degree(a) + word_degree(b) <= degree_bound]
    witness = next(((a, b) for a, b in pairs
                    if coproduct_element(mult(a, b), delta) != tensor_times(delta(a), delta(b))), None)
    report.add("multiplicativity", len(pairs), witness)

    witness = next(((a, b) for a, b in pairs
                    if counit(mult(a, b)) != counit(Element.of(a)) * counit(Element.of(b))), None)
    report.add("counit-multiplicative", len(pairs), witness)

    witness = None if delta(EMPTY) == TensorSquare({(EMPTY, EMPTY): 1}) else (EMPTY,)
    report.add("unit", 1, witness)

    S = lambda x: antipode(x, product, lam, alphabet)
    ident = lambda x: x
    for name, f, g in (("antipode-left", S, ident), ("antipode-right", ident, S)):
        witness = None
        for w in words:
            e = Element.of(w, 1, alphabet)
            if convolve(f, g, e, product, lam, alphabet, delta) != unit_counit(e):
                witness = w
                break
        report.add(name, len(words), witness)
    return report


def graded_dimension(alphabet: Alphabet, degree: int) -> int:
    """Number of unit-free words of the given degree."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    counts = [1] + [0] * degree
    sizes = [len(alphabet.slice(d)) for d in range(degree + 1)]
    for n in range(1, degree + 1):
        counts[n] = sum(sizes[k] * counts[n - k] for k in range(1, n + 1))
    return counts[degree]
