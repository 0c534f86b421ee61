"""Shuffle, quasi-shuffle, mixable shuffle and augmented products.

Word-level functions take words (tuples of letters) and return an
:class:`~mixshuffle.kernel.Element`. Every product has an explicit
enumeration form and a head-letter recursion; each serves as the other's
oracle. The ``*_product`` wrappers extend bilinearly to elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable

from .errors import AlphabetMismatchError, EmptyWordError, UnitLetterError
from .kernel import ZERO, Alphabet, Element, as_scalar, has_unit

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class ShufflePattern:
    """An (m, n)-shuffle encoded as a LEFT/RIGHT sequence.

    Position ``k`` of the shuffled word takes the next unused letter of the
    left word when ``interleaving[k] == LEFT``, else of the right word.
    """

    interleaving: tuple

    @property
    def m(self) -> int:
        return self.interleaving.count(LEFT)

    @property
    def n(self) -> int:
        return self.interleaving.count(RIGHT)

    def permutation(self) -> tuple:
        """sigma as a 1-based tuple: sigma(k) is the source index at position k."""
        m = self.m
        left, right = 0, 0
        out = []
        for side in self.interleaving:
            if side == LEFT:
                left += 1
                out.append(left)
            else:
                right += 1
                out.append(m + right)
        return tuple(out)

    def admissible(self) -> tuple:
        """0-based positions k with a left letter at k and a right letter at k+1."""
        s = self.interleaving
        return tuple(k for k in range(len(s) - 1) if s[k] == LEFT and s[k + 1] == RIGHT)

    def apply(self, a, b) -> tuple:
        ia, ib = iter(a), iter(b)
        return tuple(next(ia) if side == LEFT else next(ib) for side in self.interleaving)


@dataclass(frozen=True)
class MixableShuffle:
    """A shuffle together with a set of admissible positions to merge."""

    pattern: ShufflePattern
    merges: frozenset

    def apply(self, a, b, alphabet: Alphabet):
        """The merged word, or ZERO when some merge brackets to zero."""
        u = self.pattern.apply(a, b)
        out = []
        k = 0
        while k < len(u):
            if k in self.merges:
                v = alphabet.multiply(u[k], u[k + 1])
                if v is ZERO:
                    return ZERO
                out.append(v)
                k += 2
            else:
                out.append(u[k])
                k += 1
        return tuple(out)


@lru_cache(maxsize=None)
def _patterns(m: int, n: int) -> tuple:
    out = []
    for lefts in combinations(range(m + n), m):
        s = [RIGHT] * (m + n)
        for k in lefts:
            s[k] = LEFT
        out.append(ShufflePattern(tuple(s)))
    return tuple(out)


def enumerate_shuffles(m: int, n: int) -> list[ShufflePattern]:
    """All (m, n)-shuffles, lexicographic with LEFT < RIGHT."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return list(_patterns(m, n))


@lru_cache(maxsize=None)
def _mixables(m: int, n: int) -> tuple:
    out = []
    for pattern in _patterns(m, n):
        adm = pattern.admissible()
        for mask in range(1 << len(adm)):
            merges = frozenset(k for j, k in enumerate(adm) if mask >> j & 1)
            out.append(MixableShuffle(pattern, merges))
    return tuple(out)


def enumerate_mixable_shuffles(m: int, n: int) -> list[MixableShuffle]:
    """All mixable (m, n)-shuffles; merge subsets in binary-counter order."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return list(_mixables(m, n))


# -- word-level products -------------------------------------------------------


def _add(acc: dict, word, coeff):
    c = acc.get(word)
    if c is None:
        acc[word] = coeff
        return
    c += coeff
    if c:
        acc[word] = c
    else:
        del acc[word]


def shuffle_explicit(a, b) -> Element:
    """Sum of all interleavings of ``a`` and ``b``."""
    a, b = tuple(a), tuple(b)
    acc: dict = {}
    for pattern in _patterns(len(a), len(b)):
        _add(acc, pattern.apply(a, b), 1)
    return Element._raw(acc, None)


@lru_cache(maxsize=1 << 16)
def _shuffle_rec(a: tuple, b: tuple) -> tuple:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict = {}
    for w, c in _shuffle_rec(a[1:], b):
        _add(acc, (a[0],) + w, c)
    for w, c in _shuffle_rec(a, b[1:]):
        _add(acc, (b[0],) + w, c)
    return tuple(acc.items())


def shuffle_recursive(a, b) -> Element:
    """Shuffle by the head-letter recursion."""
    return Element._raw(dict(_shuffle_rec(tuple(a), tuple(b))), None)


@lru_cache(maxsize=1 << 16)
def _quasi_rec(a: tuple, b: tuple, alphabet: Alphabet) -> tuple:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict = {}
    for w, c in _quasi_rec(a[1:], b, alphabet):
        _add(acc, (a[0],) + w, c)
    for w, c in _quasi_rec(a, b[1:], alphabet):
        _add(acc, (b[0],) + w, c)
    head = alphabet.raw_bracket(a[0], b[0])
    if head is not ZERO:
        for w, c in _quasi_rec(a[1:], b[1:], alphabet):
            _add(acc, (head,) + w, c)
    return tuple(acc.items())


def quasi_shuffle(a, b, alphabet: Alphabet) -> Element:
    """Hoffman's quasi-shuffle of two words over ``alphabet`` (no unit letters)."""
    a, b = tuple(a), tuple(b)
    if has_unit(a) or has_unit(b):
        raise UnitLetterError("quasi-shuffle operands may not contain the unit letter")
    return Element._raw(dict(_quasi_rec(a, b, alphabet)), alphabet)


def mixable_shuffle_explicit(a, b, lam, alphabet: Alphabet) -> Element:
    """Weight-``lam`` mixable shuffle by enumerating every (sigma, T)."""
    a, b = tuple(a), tuple(b)
    lam = as_scalar(lam)
    acc: dict = {}
    for mix in _mixables(len(a), len(b)):
        weight = lam ** len(mix.merges)
        if not weight:
            continue
        word = mix.apply(a, b, alphabet)
        if word is ZERO:
            continue
        _add(acc, word, weight)
    return Element._raw(acc, alphabet)


@lru_cache(maxsize=1 << 18)
def _mixable_rec(a: tuple, b: tuple, lam: Fraction, alphabet: Alphabet) -> tuple:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict = {}
    for w, c in _mixable_rec(a[1:], b, lam, alphabet):
        _add(acc, (a[0],) + w, c)
    # b1 leads the whole of a here, also when b has a single letter
    for w, c in _mixable_rec(a, b[1:], lam, alphabet):
        _add(acc, (b[0],) + w, c)
    if lam:
        head = alphabet.multiply(a[0], b[0])
        if head is not ZERO:
            for w, c in _mixable_rec(a[1:], b[1:], lam, alphabet):
                _add(acc, (head,) + w, lam * c)
    return tuple(acc.items())


def mixable_shuffle_recursive(a, b, lam, alphabet: Alphabet) -> Element:
    """Weight-``lam`` mixable shuffle by head recursion:

    a ◇ b = a1 (a' ◇ b) + b1 (a ◇ b') + lam [a1, b1] (a' ◇ b'),

    with the empty word as two-sided identity.
    """
    return Element._raw(dict(_mixable_rec(tuple(a), tuple(b), as_scalar(lam), alphabet)), alphabet)


def augmented_word_product(a, b, lam, alphabet: Alphabet) -> Element:
    """Product on the augmented algebra: multiply first slots, mix the tails."""
    a, b = tuple(a), tuple(b)
    if not a or not b:
        raise EmptyWordError("augmented product needs words of length >= 1")
    head = alphabet.multiply(a[0], b[0])
    if head is ZERO:
        return Element.zero(alphabet)
    tails = _mixable_rec(a[1:], b[1:], as_scalar(lam), alphabet)
    return Element._raw({(head,) + w: c for w, c in tails}, alphabet)


# -- bilinear extension --------------------------------------------------------


def bilinear(word_product: Callable, x: Element, y: Element, alphabet=None) -> Element:
    """Extend a word x word -> Element map bilinearly."""
    if not isinstance(x, Element) or not isinstance(y, Element):
        raise TypeError("bilinear products take Elements")
    ax, ay = x.alphabet, y.alphabet
    if ax is not None and ay is not None and ax != ay:
        raise AlphabetMismatchError(f"{ax!r} vs {ay!r}")
    alphabet = alphabet or ax or ay
    if ax is not None and alphabet != ax or ay is not None and alphabet != ay:
        raise AlphabetMismatchError(f"operands are not over {alphabet!r}")
    acc: dict = {}
    for u, cu in x.items():
        for v, cv in y.items():
            c = cu * cv
            if c == 1:
                for w, cw in word_product(u, v).items():
                    _add(acc, w, cw)
            else:
                for w, cw in word_product(u, v).items():
                    _add(acc, w, c * cw)
    return Element._raw(acc, alphabet)


def shuffle_product(x: Element, y: Element) -> Element:
    return bilinear(shuffle_recursive, x, y)


def quasi_shuffle_product(x: Element, y: Element, alphabet: Alphabet) -> Element:
    return bilinear(lambda u, v: quasi_shuffle(u, v, alphabet), x, y, alphabet)


def mixable_product(x: Element, y: Element, lam, alphabet: Alphabet) -> Element:
    lam = as_scalar(lam)
    return bilinear(lambda u, v: mixable_shuffle_recursive(u, v, lam, alphabet), x, y, alphabet)


def augmented_product(x: Element, y: Element, lam, alphabet: Alphabet) -> Element:
    """Bilinear product on the augmented algebra (all words of length >= 1)."""
    lam = as_scalar(lam)
    return bilinear(lambda u, v: augmented_word_product(u, v, lam, alphabet), x, y, alphabet)


def word_product(kind: str, alphabet: Alphabet, lam=1) -> Callable:
    """Word-level product selected by name.

    ``kind`` is ``"shuffle"``, ``"quasi-shuffle"``, ``"mixable"`` or
    ``"augmented"``; ``lam`` is used by the last two.
    """
    lam = as_scalar(lam)
    if kind == "shuffle":
        return lambda u, v: shuffle_recursive(u, v).with_alphabet(alphabet)
    if kind == "quasi-shuffle":
        return lambda u, v: quasi_shuffle(u, v, alphabet)
    if kind == "mixable":
        return lambda u, v: mixable_shuffle_recursive(u, v, lam, alphabet)
    if kind == "augmented":
        return lambda u, v: augmented_word_product(u, v, lam, alphabet)
    raise ValueError(f"unknown product {kind!r}")


def mixable_count(m: int, n: int) -> int:
    """Closed form for |mixable (m, n)-shuffles|: sum over k merges."""
    return sum(comb(m + n - k, k) * comb(m + n - 2 * k, m - k) for k in range(min(m, n) + 1))
