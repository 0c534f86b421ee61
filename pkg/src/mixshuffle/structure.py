"""Structural maps and the unit-letter combinatorics of the augmented shuffle algebra.

Index sequences are tuples of nonnegative ints: entry 0 is the unit letter
``1_A`` and entry ``i > 0`` is the i-th letter of the alphabet's enumeration
(:meth:`Alphabet.y`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import comb
from typing import Iterable, Sequence

from .errors import EmptyInputError, UnitLetterError, ZeroEntryError, ZeroLambdaError
from .kernel import UNIT, Alphabet, Element, as_scalar, has_unit, linear_combination, word_key
from .linalg import bareiss_rank, null_vector, solve
from .products import mixable_shuffle_explicit, mixable_shuffle_recursive, shuffle_recursive
from .report import CheckReport


@dataclass
class RankReport:
    count: int
    rows: int
    cols: int
    rank: int
    witness: tuple | None = None
    window: str = ""

    @property
    def independent(self) -> bool:
        return self.rank == self.count


# -- Hoffman isomorphism and rescaling -----------------------------------------


def f_tilde(w) -> Element:
    """Word ``a1...an`` of the quasi-shuffle algebra to the tensor ``a1 (x) ... (x) an``."""
    if isinstance(w, Element):
        for word in w.words():
            if has_unit(word):
                raise UnitLetterError("f_tilde takes unit-free words")
        return w
    w = tuple(w)
    if has_unit(w):
        raise UnitLetterError("f_tilde takes unit-free words")
    return Element.of(w)


def g_rescale(e: Element, lam, inverse: bool = False) -> Element:
    """Scale each tensor of length n by lam**n (by lam**-n when ``inverse``)."""
    lam = as_scalar(lam)
    if inverse and not lam:
        raise ZeroLambdaError("g is not invertible at lambda = 0")
    for w in e.words():
        if has_unit(w):
            raise UnitLetterError("g acts on unit-free tensors")
    base = Fraction(1, 1) / lam if inverse else lam
    return Element(((w, c * base ** len(w)) for w, c in e.items()), e.alphabet)


# -- index sequences -----------------------------------------------------------


def y_word(index: Sequence[int], alphabet: Alphabet) -> tuple:
    """The word y_{i1} (x) ... (x) y_{ir}."""
    return tuple(alphabet.y(i) for i in index)


def ssupp(index: Sequence[int]) -> tuple:
    """Sequential support: the nonzero entries in order."""
    return tuple(i for i in index if i != 0)


def equivalent(i1: Sequence[int], i2: Sequence[int]) -> bool:
    """Same length and same sequential support."""
    return len(i1) == len(i2) and ssupp(i1) == ssupp(i2)


def one_shuffled(index: Sequence[int], alphabet: Alphabet) -> Element:
    """Sum of y_J over every J of the same length with the same sequential support."""
    index = tuple(index)
    support = ssupp(index)
    zeros = len(index) - len(support)
    word = shuffle_recursive((UNIT,) * zeros, y_word(support, alphabet))
    return Element({w: 1 for w in word.words()}, alphabet)


def unit_power_product(m: int, index: Sequence[int], lam, alphabet: Alphabet) -> Element:
    """Binomial expansion of ``1_A^{(x)m} ◇ y_I`` into shuffles.

    Returns sum_{i=0}^{m} lam^i C(len(I), i) (1_A^{(x)(m-i)} ш y_I).
    """
    index = tuple(index)
    if any(i == 0 for i in index):
        raise ZeroEntryError("index sequence must have all-positive entries")
    lam = as_scalar(lam)
    y = y_word(index, alphabet)
    r = len(index)
    parts = [(lam ** i * comb(r, i), shuffle_recursive((UNIT,) * (m - i), y))
             for i in range(m + 1)]
    return linear_combination(parts, alphabet)


def unit_power_mixable(m: int, index: Sequence[int], lam, alphabet: Alphabet,
                       explicit: bool = True) -> Element:
    """``1_A^{(x)m} ◇ y_I`` computed directly from the product."""
    y = y_word(tuple(index), alphabet)
    mix = mixable_shuffle_explicit if explicit else mixable_shuffle_recursive
    return mix((UNIT,) * m, y, lam, alphabet)


def positive_sequences(max_length: int, letters: int) -> list[tuple]:
    """All index sequences over 1..letters of length <= max_length (incl. the empty one)."""
    return [s for r in range(max_length + 1) for s in cartesian(range(1, letters + 1), repeat=r)]


# -- exact rank checks -----------------------------------------------------------


def _support(elements: Iterable[Element]) -> list[tuple]:
    words = set()
    for e in elements:
        words.update(e.words())
    return sorted(words, key=word_key)


def _columns(elements: Sequence[Element], support: Sequence[tuple]) -> list[list[Fraction]]:
    return [[e.coefficient(w) for w in support] for e in elements]


def check_linear_independence(elements: Sequence[Element], window: str = "") -> RankReport:
    """Exact rank of a list of elements; a dependency vector when deficient."""
    elements = list(elements)
    if not elements:
        raise EmptyInputError("need at least one element")
    support = _support(elements)
    cols = _columns(elements, support)
    rank = bareiss_rank(cols) if support else 0
    witness = None
    if rank < len(elements):
        witness = null_vector(cols)
    return RankReport(len(elements), len(support), len(elements), rank, witness, window)


def disjointness_generators(n_values: Iterable[int], sequences: Iterable[Sequence[int]],
                            lam, alphabet: Alphabet) -> list[tuple]:
    """``((n, I), 1_A^{(x)n} ◇ y_I)`` for every n and I given."""
    lam = as_scalar(lam)
    out = []
    for n in n_values:
        for seq in sequences:
            seq = tuple(seq)
            out.append(((n, seq), mixable_shuffle_recursive((UNIT,) * n, y_word(seq, alphabet), lam, alphabet)))
    return out


def check_linear_disjointness(n_values: Iterable[int], sequences: Iterable[Sequence[int]],
                              lam, alphabet: Alphabet) -> RankReport:
    """Full rank of the products ``1_A^{(x)n} ◇ y_I`` on a finite window.

    This is injectivity of the multiplication map from the tensor product of
    the unit-power algebra and the unit-free algebra, restricted to the window.
    """
    n_values, sequences = list(n_values), [tuple(s) for s in sequences]
    gens = disjointness_generators(n_values, sequences, lam, alphabet)
    window = (f"n<={max(n_values, default=0)} len(I)<={max(map(len, sequences), default=0)} "
              f"sequences={len(sequences)} lambda={as_scalar(lam)}")
    report = check_linear_independence([e for _, e in gens], window)
    if report.witness is not None:
        report.witness = tuple((key, c) for (key, _), c in zip(gens, report.witness) if c)
    return report


def check_one_shuffled_span(lam, alphabet: Alphabet, max_k: int, max_length: int, letters: int = 2,
                            generators: Sequence[Element] | None = None) -> CheckReport:
    """Both inclusions between the span of the products ``1_A^{(x)n} ◇ y_I``
    and the span of the one-shuffled elements ``1_A^{(x)k} ш y_I`` on a window.

    ``generators`` replaces the product set (negative controls).
    """
    lam = as_scalar(lam)
    sequences = positive_sequences(max_length, letters)
    one = {(k, s): one_shuffled((0,) * k + s, alphabet) for k in range(max_k + 1) for s in sequences}
    if generators is None:
        generators = [e for _, e in disjointness_generators(range(max_k + 1), sequences, lam, alphabet)]
    report = CheckReport(f"k<={max_k} len(I)<={max_length} letters={letters} lambda={lam}")

    one_list = list(one.values())
    support = _support(one_list + list(generators))
    one_cols = _columns(one_list, support)
    gen_cols = _columns(generators, support)

    witness = None
    for e, col in zip(generators, gen_cols):
        if solve(one_cols, col) is None:
            witness = e
            break
    report.add("products-in-one-shuffled-span", len(generators), witness)

    witness = None
    for key, col in zip(one, one_cols):
        if solve(gen_cols, col) is None:
            witness = key
            break
    report.add("one-shuffled-in-product-span", len(one_list), witness)

    # the product expands over one-shuffled elements with binomial weights
    witness = None
    for (k, s) in one:
        predicted = unit_power_product(k, s, lam, alphabet)
        direct = mixable_shuffle_recursive((UNIT,) * k, y_word(s, alphabet), lam, alphabet)
        if predicted != direct:
            witness = (k, s)
            break
    report.add("binomial-expansion", len(one), witness)
    return report
