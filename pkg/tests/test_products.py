from fractions import Fraction
from itertools import product as cartesian
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mixshuffle.errors import EmptyWordError, UnitLetterError
from mixshuffle.kernel import EMPTY, UNIT, Element, make_alphabet, parse_element
from mixshuffle.products import (
    LEFT, RIGHT, augmented_product, augmented_word_product, enumerate_mixable_shuffles,
    enumerate_shuffles, mixable_count, mixable_shuffle_explicit, mixable_shuffle_recursive,
    quasi_shuffle, shuffle_explicit, shuffle_recursive,
)

S = make_alphabet("stuffle")
z1, z2, z3 = S.letter("z1"), S.letter("z2"), S.letter("z3")


def E(text, alphabet=S):
    return parse_element(text, alphabet)


def words(letters, max_len):
    return [w for n in range(max_len + 1) for w in cartesian(letters, repeat=n)]


# enumerators

@pytest.mark.parametrize("m, n, count", [(1, 1, 2), (2, 1, 3), (0, 3, 1), (3, 3, 20)])
def test_shuffle_counts(m, n, count):
    assert len(enumerate_shuffles(m, n)) == count == comb(m + n, m)


def test_shuffle_pattern_is_a_shuffle_permutation():
    for m in range(4):
        for n in range(4):
            for p in enumerate_shuffles(m, n):
                sigma = p.permutation()
                inv = {v: i for i, v in enumerate(sigma)}
                assert sorted(sigma) == list(range(1, m + n + 1))
                assert all(inv[i] < inv[i + 1] for i in range(1, m))
                assert all(inv[i] < inv[i + 1] for i in range(m + 1, m + n))


@pytest.mark.parametrize("m, n, count", [(1, 1, 3), (2, 1, 5), (3, 0, 1), (0, 2, 1)])
def test_mixable_counts(m, n, count):
    assert len(enumerate_mixable_shuffles(m, n)) == count


def test_mixable_count_closed_form():
    for m in range(6):
        for n in range(6):
            assert len(enumerate_mixable_shuffles(m, n)) == mixable_count(m, n)


def test_merges_are_admissible_and_disjoint():
    for mix in enumerate_mixable_shuffles(3, 3):
        inter = mix.pattern.interleaving
        for k in mix.merges:
            assert inter[k] == LEFT and inter[k + 1] == RIGHT
        assert all(k + 1 not in mix.merges for k in mix.merges)


# shuffle

def test_shuffle_examples():
    assert shuffle_explicit((z1,), (z2,)) == E("[z1,z2] + [z2,z1]")
    assert shuffle_explicit((z1,), (z1, z2)) == E("2*[z1,z1,z2] + [z1,z2,z1]")
    assert shuffle_explicit(EMPTY, (z1, z2)) == E("[z1,z2]")
    assert shuffle_recursive((z1,), (z2,)) == E("[z1,z2] + [z2,z1]")
    assert shuffle_recursive((z1, z1), (z1,)) == E("3*[z1,z1,z1]")


def test_shuffle_coefficients_sum_to_binomial():
    for a in words((z1, z2), 3):
        for b in words((z1, z2), 3):
            total = sum(c for _, c in shuffle_recursive(a, b).items())
            assert total == comb(len(a) + len(b), len(a))


# quasi-shuffle

def test_quasi_shuffle_examples():
    assert quasi_shuffle((z1,), (z1,), S) == E("2*[z1,z1] + [z2]")
    Z = make_alphabet("zero", {"x": 1, "y": 2})
    x, y = Z.letter("x"), Z.letter("y")
    assert quasi_shuffle((x,), (y,), Z) == shuffle_explicit((x,), (y,)).with_alphabet(Z)
    assert quasi_shuffle(EMPTY, (z1, z2), S) == E("[z1,z2]")
    assert quasi_shuffle((z1, z2), EMPTY, S) == E("[z1,z2]")


def test_quasi_shuffle_rejects_unit():
    with pytest.raises(UnitLetterError):
        quasi_shuffle((UNIT,), (z1,), S)


# mixable shuffle

def test_mixable_examples():
    lam = Fraction(7, 3)
    assert mixable_shuffle_explicit((z1,), (z1,), lam, S) == E("2*[z1,z1] + 7/3*[z2]")
    assert mixable_shuffle_explicit((UNIT,), (z1,), lam, S) == E("[1,z1] + [z1,1] + 7/3*[z1]")
    expected = E("[1,1,z1] + [1,z1,1] + [z1,1,1] + 7/3*[1,z1] + 7/3*[z1,1]")
    assert mixable_shuffle_recursive((UNIT, UNIT), (z1,), lam, S) == expected
    assert mixable_shuffle_explicit((UNIT, UNIT), (z1,), lam, S) == expected
    assert mixable_shuffle_recursive((z1, z2), EMPTY, lam, S) == E("[z1,z2]")


def test_weight_zero_is_shuffle():
    for a in words((UNIT, z1, z2), 3):
        for b in words((UNIT, z1, z2), 3):
            assert mixable_shuffle_explicit(a, b, 0, S) == shuffle_explicit(a, b).with_alphabet(S)


@pytest.mark.parametrize("lam", [0, 1, -2, Fraction(3, 5)])
def test_recursion_matches_enumeration(lam):
    letters = (UNIT, z1)
    for a in words(letters, 4):
        for b in words(letters, 4):
            if len(a) + len(b) <= 6:
                assert mixable_shuffle_recursive(a, b, lam, S) == mixable_shuffle_explicit(a, b, lam, S)


def _printed_recursion(a, b, lam, alphabet):
    """The head recursion with the single-letter right factor transcribed as
    a1 (a' ◇ b1) + a1...am b1 + lam [a1,b1] a'."""
    if not a:
        return Element.of(b, 1, alphabet)
    if not b:
        return Element.of(a, 1, alphabet)
    if len(b) == 1 and len(a) >= 2:
        head = Element.of(a + b, 1, alphabet)
        rest = _printed_recursion(a[1:], b, lam, alphabet).map_words(lambda w: (a[0],) + w)
        merged = Element.of((alphabet.multiply(a[0], b[0]),) + a[1:], lam, alphabet)
        return rest + head + merged
    return mixable_shuffle_recursive(a, b, lam, alphabet)


def test_printed_single_letter_case_disagrees_with_enumeration():
    a, b = (z1, z2), (z3,)
    oracle = mixable_shuffle_explicit(a, b, 1, S)
    assert _printed_recursion(a, b, 1, S) != oracle
    assert mixable_shuffle_recursive(a, b, 1, S) == oracle
    # the disagreement is exactly b1 placed after a instead of before it
    assert _printed_recursion(a, b, 1, S) - oracle == E("[z1,z2,z3] - [z3,z1,z2]")


def test_weight_one_mixable_is_quasi_shuffle():
    for a in words((z1, z2), 3):
        for b in words((z1, z2), 3):
            assert mixable_shuffle_recursive(a, b, 1, S) == quasi_shuffle(a, b, S)


# augmented product

def test_augmented_examples():
    one = Element.of((UNIT,), 1, S)
    assert augmented_product(one, one, 5, S) == one
    assert augmented_product(E("[z1]"), E("[z2]"), 5, S) == E("[z3]")
    assert augmented_product(E("[1,z1]"), E("[1,z1]"), Fraction(1, 2), S) == E("2*[1,z1,z1] + 1/2*[1,z2]")


def test_augmented_rejects_empty_word():
    with pytest.raises(EmptyWordError):
        augmented_word_product(EMPTY, (UNIT,), 1, S)


def test_zero_bracket_kills_augmented_term():
    Z = make_alphabet("zero", {"x": 1})
    x = Z.letter("x")
    assert augmented_word_product((x,), (x, x), 1, Z) == Element.zero(Z)


# algebraic laws, property-based

LETTERS = (UNIT, z1, z2)
word = st.lists(st.sampled_from(LETTERS), max_size=3).map(tuple)
unit_free = st.lists(st.sampled_from((z1, z2)), max_size=3).map(tuple)
weights = st.sampled_from([0, 1, -1, 2, Fraction(3, 7)])


@settings(max_examples=60, deadline=None)
@given(word, word, word, weights)
def test_mixable_commutative_associative(a, b, c, lam):
    ab = mixable_shuffle_recursive(a, b, lam, S)
    assert ab == mixable_shuffle_recursive(b, a, lam, S)
    left = sum((mixable_shuffle_recursive(w, c, lam, S) * k for w, k in ab.items()), Element.zero(S))
    bc = mixable_shuffle_recursive(b, c, lam, S)
    right = sum((mixable_shuffle_recursive(a, w, lam, S) * k for w, k in bc.items()), Element.zero(S))
    assert left == right


@settings(max_examples=60, deadline=None)
@given(unit_free, unit_free, unit_free)
def test_quasi_shuffle_commutative_associative(a, b, c):
    ab = quasi_shuffle(a, b, S)
    assert ab == quasi_shuffle(b, a, S)
    left = sum((quasi_shuffle(w, c, S) * k for w, k in ab.items()), Element.zero(S))
    bc = quasi_shuffle(b, c, S)
    right = sum((quasi_shuffle(a, w, S) * k for w, k in bc.items()), Element.zero(S))
    assert left == right


@settings(max_examples=60, deadline=None)
@given(unit_free, unit_free, weights)
def test_products_are_graded(a, b, lam):
    deg = sum(l.degree for l in a + b)
    for w in mixable_shuffle_recursive(a, b, lam, S).words():
        assert sum(l.degree for l in w) == deg
    for w in quasi_shuffle(a, b, S).words():
        assert sum(l.degree for l in w) == deg
