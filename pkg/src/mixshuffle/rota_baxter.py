"""Rota-Baxter operators, the identity checker, and the embeddings between
the shuffle algebras.

The augmented algebra stores ``a0 (x) a1 (x) ... (x) an`` as the word
``(a0, a1, ..., an)``; the first letter is the unitary-algebra slot.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .errors import EmptyWordError, UnitLetterError
from .kernel import UNIT, Element, Letter, as_scalar, has_unit


@dataclass
class RotaBaxterTrial:
    x: Element
    y: Element
    lhs: Element
    rhs: Element

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class RotaBaxterCheckReport:
    weight: Fraction
    trials: list[RotaBaxterTrial] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.trials)

    def failures(self) -> list[RotaBaxterTrial]:
        return [t for t in self.trials if not t.passed]


def P_A(e: Element) -> Element:
    """The free Rota-Baxter operator: ``a0 (x) a  ->  1_A (x) a0 (x) a``."""
    for w in e.words():
        if not w:
            raise EmptyWordError("P_A is defined on words of length >= 1")
    return e.map_words(lambda w: (UNIT,) + w)


def P_v(v: Letter, e: Element) -> Element:
    """Left concatenation by the letter ``v``; weight-zero operator for the shuffle."""
    if v == UNIT:
        raise UnitLetterError("P_v needs an alphabet letter, not the unit")
    for w in e.words():
        if has_unit(w):
            raise UnitLetterError(f"P_v acts on words without the unit letter, got {w!r}")
    return e.map_words(lambda w: (v,) + w)


def check_rota_baxter(operator: Callable[[Element], Element],
                      product: Callable[[Element, Element], Element],
                      weight, samples: Iterable[tuple]) -> RotaBaxterCheckReport:
    """Evaluate P(x)P(y) against P(xP(y)) + P(P(x)y) + weight*P(xy) per sample pair."""
    weight = as_scalar(weight)
    report = RotaBaxterCheckReport(weight)
    for x, y in samples:
        px, py = operator(x), operator(y)
        lhs = product(px, py)
        rhs = operator(product(x, py)) + operator(product(px, y))
        if weight:
            rhs = rhs + operator(product(x, y)) * weight
        report.trials.append(RotaBaxterTrial(x, y, lhs, rhs))
    return report


def embed_alpha(e: Element) -> Element:
    """``a -> 1_A (x) a`` from the mixable algebra into the augmented one."""
    return e.map_words(lambda w: (UNIT,) + w)


def embed_beta(e: Element) -> Element:
    """Inclusion of unit-free tensors followed by :func:`embed_alpha`."""
    for w in e.words():
        if has_unit(w):
            raise UnitLetterError(f"embed_beta expects unit-free words, got {w!r}")
    return embed_alpha(e)


def j_A(letter: Letter, alphabet=None) -> Element:
    """Canonical inclusion of the generating algebra: ``a -> a (x) 1``."""
    return Element.of((letter,), 1, alphabet)


def gamma_plus(n: int, alphabet=None) -> Element:
    """``1_k^{(x)n} -> 1_A^{(x)n}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Element.of((UNIT,) * n, 1, alphabet)


def gamma(n: int, alphabet=None) -> Element:
    """``1_k (x) 1_k^{(x)n} -> 1_A (x) 1_A^{(x)n}``, i.e. n + 1 unit letters."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Element.of((UNIT,) * (n + 1), 1, alphabet)
