from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mixshuffle.errors import UnitLetterError
from mixshuffle.hopf import (
    TensorSquare, antipode, basis_words, check_bialgebra, convolve, coproduct, counit,
    graded_dimension, serialize_tensor, unit_counit,
)
from mixshuffle.kernel import EMPTY, Element, make_alphabet, parse_element

S = make_alphabet("stuffle")
z1, z2 = S.letter("z1"), S.letter("z2")


def E(text):
    return parse_element(text, S)


def test_coproduct_examples():
    assert coproduct(EMPTY) == TensorSquare({(EMPTY, EMPTY): 1})
    assert coproduct((z1,)) == TensorSquare({(EMPTY, (z1,)): 1, ((z1,), EMPTY): 1})
    assert coproduct((z1, z2)) == TensorSquare(
        {(EMPTY, (z1, z2)): 1, ((z1,), (z2,)): 1, ((z1, z2), EMPTY): 1})
    assert serialize_tensor(coproduct((z1, z2))) == "[e]|[z1,z2] + [z1]|[z2] + [z1,z2]|[e]"


def test_counit_examples():
    assert counit(Element.one(S)) == 1
    assert counit(E("[z1]")) == 0
    assert counit(E("3*[e] + 2*[z1]")) == 3


def test_antipode_examples():
    assert antipode(Element.one(S), "quasi-shuffle", 1, S) == Element.one(S)
    assert antipode(E("[z1]"), "quasi-shuffle", 1, S) == E("-[z1]")
    assert antipode(E("[z3]"), "mixable", Fraction(2, 5), S) == E("-[z3]")
    assert antipode(E("[z1,z1]"), "quasi-shuffle", 1, S) == E("[z1,z1] + [z2]")
    assert antipode(E("[z1,z1]"), "mixable", 1, S) == E("[z1,z1] + [z2]")


def test_antipode_rejects_unit_for_quasi_shuffle():
    with pytest.raises(UnitLetterError):
        antipode(E("[1,z1]"), "quasi-shuffle", 1, S)


def test_convolution_examples():
    ident = lambda x: x
    assert convolve(ident, ident, E("[z1]"), "quasi-shuffle", 1, S) == E("2*[z1]")
    e = E("[z1,z2] - 3*[z2]")
    assert convolve(unit_counit, ident, e, "quasi-shuffle", 1, S) == e
    assert convolve(ident, unit_counit, e, "quasi-shuffle", 1, S) == e


def test_antipode_axiom_up_to_length_five():
    S_ = lambda x: antipode(x, "quasi-shuffle", 1, S)
    for w in basis_words(S, 5):
        e = Element.of(w, 1, S)
        assert convolve(S_, lambda x: x, e, "quasi-shuffle", 1, S) == unit_counit(e)


def test_quasi_shuffle_bialgebra():
    report = check_bialgebra("quasi-shuffle", 1, S, 5)
    assert report.passed, [r for r in report.rows if not r.passed]


@pytest.mark.parametrize("lam", [0, 1, -1, Fraction(3, 2)])
def test_mixable_bialgebra(lam):
    report = check_bialgebra("mixable", lam, S, 4)
    assert report.passed, [r for r in report.rows if not r.passed]


def test_corrupted_coproduct_breaks_multiplicativity():
    def outer_splits_only(w):
        w = tuple(w)
        if len(w) < 2:
            return coproduct(w)
        return TensorSquare({(EMPTY, w): 1, (w, EMPTY): 1})

    report = check_bialgebra("quasi-shuffle", 1, S, 3, delta=outer_splits_only)
    row = report.row("multiplicativity")
    assert not row.passed
    assert row.witness == ((z1,), (z1,))
    assert report.row("coassociativity").passed


@pytest.mark.parametrize("degree, count", [(0, 1), (1, 1), (2, 2), (4, 8), (6, 32)])
def test_graded_dimension(degree, count):
    assert graded_dimension(S, degree) == count
    assert sum(1 for w in basis_words(S, degree) if sum(l.degree for l in w) == degree) == count


unit_free = st.lists(st.sampled_from((z1, z2)), max_size=4).map(tuple)


@settings(max_examples=50, deadline=None)
@given(unit_free, st.sampled_from([1, -1, Fraction(3, 2), 2]))
def test_antipode_involution_and_rescaling(w, lam):
    e = Element.of(w, 1, S)
    assert antipode(antipode(e, "quasi-shuffle", 1, S), "quasi-shuffle", 1, S) == e
    # the rescaling map g conjugates the weight-lam antipode onto the weight-1 one
    g = lambda x: Element(((u, c * Fraction(lam) ** len(u)) for u, c in x.items()), S)
    assert g(antipode(e, "mixable", lam, S)) == antipode(g(e), "mixable", 1, S)
