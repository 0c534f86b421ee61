from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mixshuffle.errors import (
    AlphabetMismatchError, DuplicateLetterError, NonpositiveDegreeError, PairingConflictError,
    ParseError, UnknownLetterError,
)
from mixshuffle.kernel import (
    UNIT, ZERO, Element, Letter, as_scalar, bracket, canonical_serialize,
    check_hoffman_axioms, element_add, element_scale, element_sub, make_alphabet, parse_alphabet,
    parse_element,
)


def w(alphabet, *names):
    return alphabet.word(names)


# alphabets

def test_stuffle_rule(stuffle):
    z1, z2 = stuffle.letter("z1"), stuffle.letter("z2")
    assert z2.degree == 2
    assert bracket(z1, z2, stuffle) == stuffle.letter("z3")


def test_empty_table_is_zero_bracket():
    a = make_alphabet("table", {"x": 1})
    x = a.letter("x")
    assert bracket(x, x, a) is ZERO
    assert check_hoffman_axioms(a, 3).passed


def test_table_with_square_is_hoffman():
    a = make_alphabet("table", {"x": 1, "y": 2}, [("x", "x", "y")])
    report = check_hoffman_axioms(a, 4)
    assert report.passed, report.rows


def test_stuffle_axioms_bound_six(stuffle):
    assert check_hoffman_axioms(stuffle, 6).passed


def test_non_additive_bracket_fails_s3():
    a = make_alphabet("table", {"x": 1}, [("x", "x", "x")])
    report = check_hoffman_axioms(a, 2)
    assert not report.passed
    x = a.letter("x")
    assert report.row("S3").witness == (x, x)


def test_zero_alphabet_axioms(zero_xy):
    assert check_hoffman_axioms(zero_xy, 3).passed


def test_bracket_missing_entry_and_unit(stuffle):
    a = make_alphabet("table", {"x": 1, "y": 1})
    assert bracket(a.letter("x"), a.letter("y"), a) is ZERO
    z5 = stuffle.letter("z5")
    assert bracket(UNIT, z5, stuffle) == z5
    assert bracket(z5, UNIT, stuffle) == z5
    assert bracket(ZERO, z5, stuffle) is ZERO


@pytest.mark.parametrize("kwargs, error", [
    ({"letters": [("x", 1), ("x", 2)]}, DuplicateLetterError),
    ({"letters": {"x": 0}}, NonpositiveDegreeError),
    ({"letters": {"x": -1}}, NonpositiveDegreeError),
    ({"letters": {"x": 1, "y": 2}, "pairs": [("x", "x", "y"), ("x", "x", "0")]}, PairingConflictError),
    ({"letters": {"x": 1}, "pairs": [("x", "q", None)]}, UnknownLetterError),
    ({"letters": {"x": 1}, "pairs": [("x", "x", "q")]}, UnknownLetterError),
])
def test_make_alphabet_errors(kwargs, error):
    with pytest.raises(error) as info:
        make_alphabet("table", **kwargs)
    assert info.value.code == error.code


def test_unknown_stuffle_letter(stuffle):
    with pytest.raises(UnknownLetterError):
        stuffle.letter("x1")
    with pytest.raises(UnknownLetterError):
        stuffle.letter("z0")


def test_letters_are_interned(stuffle):
    assert stuffle.letter("z3") is Letter("z3", 3)
    assert Letter("z3", 3) != Letter("z3", 4)


def test_enumeration_order():
    a = make_alphabet("table", {"b": 2, "a": 2, "c": 1})
    assert [l.name for l in a.enumerate(3)] == ["c", "a", "b"]
    assert a.y(0) == UNIT


def test_pairing_file():
    text = """
    # two letters and a square
    letter x 1
    letter y 2
    pair x x = y
    """
    a = parse_alphabet(text)
    assert a == make_alphabet("table", {"x": 1, "y": 2}, [("x", "x", "y")])
    assert parse_alphabet("builtin stuffle") == make_alphabet("stuffle")


def test_pairing_file_position():
    with pytest.raises(ParseError) as info:
        parse_alphabet("letter x 1\nletter y zz\n")
    assert info.value.line == 2


# elements

def test_cancellation_and_scaling(stuffle):
    word = w(stuffle, "z1", "z2")
    assert element_add(Element.of(word, 2), Element.of(word, -2)) == Element.zero()
    assert not element_add(Element.of(word, 2), Element.of(word, -2))
    assert element_scale(Fraction(1, 3), Element.of(word, 3)) == Element.of(word)
    two = Element.of(word) + Element.of(w(stuffle, "z3"))
    assert len(two) == 2
    assert element_sub(two, two) == 0


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        Element.of((UNIT,), 0.5)


def test_alphabet_mismatch(stuffle, zero_xy):
    a = Element.of(w(stuffle, "z1"), 1, stuffle)
    b = Element.of(w(zero_xy, "x"), 1, zero_xy)
    with pytest.raises(AlphabetMismatchError):
        a + b


def test_serialize_examples(stuffle):
    assert canonical_serialize(Element.zero()) == "0"
    assert canonical_serialize(Element.of(w(stuffle, "z1", "z2"))) == "[z1,z2]"
    e = Element.of(w(stuffle, "z1", "z1"), 2) + Element.of(w(stuffle, "z2"))
    assert canonical_serialize(e) == "[z2] + 2*[z1,z1]"
    assert canonical_serialize(Element.one()) == "[e]"
    assert canonical_serialize(Element.of((UNIT, stuffle.letter("z1")), Fraction(-3, 4))) == "-3/4*[1,z1]"


def test_serialize_order_is_degree_then_length(stuffle):
    e = parse_element("[z1,z1,z1] + [z3] + [z1] + [e] + [z2,z1] + [z1,z2]", stuffle)
    assert canonical_serialize(e) == "[e] + [z1] + [z3] + [z1,z2] + [z2,z1] + [z1,z1,z1]"


def test_parse_errors(stuffle):
    for bad in ["[z1", "2*", "[z1,,z2]", "[q1]", "+", "[z1] [z2]"]:
        with pytest.raises((ParseError, UnknownLetterError)):
            parse_element(bad, stuffle)


letters = st.sampled_from(["1", "z1", "z2", "z3"])
words = st.lists(letters, max_size=4).map(tuple)
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=12).filter(bool)


@st.composite
def elements(draw, alphabet):
    terms = draw(st.lists(st.tuples(words, coeffs), max_size=5))
    return Element(((alphabet.word(n), c) for n, c in terms), alphabet)


STUFFLE = make_alphabet("stuffle")


@settings(max_examples=200)
@given(elements(STUFFLE))
def test_serialize_round_trip(e):
    assert parse_element(canonical_serialize(e), STUFFLE) == e


@given(elements(STUFFLE), elements(STUFFLE), elements(STUFFLE))
def test_module_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == Element.zero()
    assert (a + b) * Fraction(2, 3) == a * Fraction(2, 3) + b * Fraction(2, 3)


@given(st.binary(max_size=40))
def test_parser_never_crashes_on_bytes(data):
    text = data.decode("utf-8", errors="replace")
    try:
        parse_element(text, STUFFLE)
    except (ParseError, UnknownLetterError):
        pass
