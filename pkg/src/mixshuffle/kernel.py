"""Letters, graded alphabets with Hoffman pairings, words, and sparse exact-rational elements.

A word is a plain ``tuple`` of :class:`Letter`. The reserved letter :data:`UNIT`
(degree 0, printed ``1``) stands for the identity of the unitary algebra, so
words over the augmented alphabet and over the bare alphabet share one
representation. :data:`ZERO` is the absorbing value of the bracket.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .report import CheckReport
from .errors import (
    AlphabetMismatchError,
    DuplicateLetterError,
    NonpositiveDegreeError,
    PairingConflictError,
    ParseError,
    UnknownLetterError,
)

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_STUFFLE_RE = re.compile(r"z([1-9][0-9]*)\Z")
RESERVED_NAMES = frozenset({"1", "0", "e"})


class Letter:
    """A named generator of positive degree (the unit letter has degree 0).

    Letters are interned: constructing the same (name, degree) twice gives
    the same object, so equality and hashing are by identity.
    """

    __slots__ = ("name", "degree", "__weakref__")
    _interned: dict = {}

    def __new__(cls, name: str, degree: int):
        key = (name, degree)
        obj = cls._interned.get(key)
        if obj is None:
            obj = object.__new__(cls)
            object.__setattr__(obj, "name", name)
            object.__setattr__(obj, "degree", degree)
            cls._interned[key] = obj
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("Letter is immutable")

    def __lt__(self, other):
        return (self.name, self.degree) < (other.name, other.degree)

    def __reduce__(self):
        return (Letter, (self.name, self.degree))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __repr__(self):
        return self.name


class _Zero:
    """Absorbing bracket value; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()
UNIT = Letter("1", 0)


@lru_cache(maxsize=None)
def _z(n: int) -> Letter:
    return Letter(f"z{n}", n)

Word = tuple  # tuple[Letter, ...]
EMPTY: tuple = ()


def as_scalar(value):
    """Coerce an exact rational scalar; floats are refused.

    Integral values come back as ``int`` (much faster arithmetic than
    ``Fraction``), everything else as ``Fraction``.
    """
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise TypeError(f"exact rational scalar required, got {value!r}")
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def word_degree(word: Sequence[Letter]) -> int:
    return sum(letter.degree for letter in word)


def has_unit(word: Sequence[Letter]) -> bool:
    return any(letter is UNIT or letter == UNIT for letter in word)


def word_key(word: Sequence[Letter]):
    """Canonical order: degree, then length, then letter names."""
    return (word_degree(word), len(word), tuple(letter.name for letter in word))


# -- alphabets ----------------------------------------------------------------


class Alphabet:
    """A Hoffman set: degree-graded letters plus a commutative bracket.

    ``kind`` is one of ``"table"`` (finite, explicit pairing entries, unlisted
    pairs bracket to zero), ``"stuffle"`` (letters ``z1, z2, ...`` with
    ``[z_i, z_j] = z_{i+j}``) or ``"zero"`` (identically zero bracket, on an
    explicit finite letter set or on the ``z_n`` family when none is given).
    """

    def __init__(self, kind: str, letters: Iterable[Letter] = (), pairs: Mapping | None = None):
        if kind not in ("table", "stuffle", "zero"):
            raise ValueError(f"unknown alphabet kind {kind!r}")
        self.kind = kind
        self._letters = {letter.name: letter for letter in letters}
        self._pairs = dict(pairs or {})
        self._finite = kind == "table" or (kind == "zero" and bool(self._letters))
        self._key = (
            kind,
            tuple(sorted(self._letters.values())),
            tuple(sorted((tuple(sorted(k)), repr(v)) for k, v in self._pairs.items())),
        )
        self._hash = hash(self._key)

    # identity
    def __eq__(self, other):
        return self is other or (isinstance(other, Alphabet) and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.kind == "stuffle":
            return "Alphabet(stuffle)"
        if not self._finite:
            return "Alphabet(zero)"
        names = ", ".join(f"{l.name}:{l.degree}" for l in self.letters())
        return f"Alphabet({self.kind}; {names})"

    @property
    def is_finite(self) -> bool:
        return self._finite

    # letters
    def letter(self, name: str) -> Letter:
        if self._finite:
            try:
                return self._letters[name]
            except KeyError:
                raise UnknownLetterError(f"unknown letter {name!r}") from None
        m = _STUFFLE_RE.match(name)
        if not m:
            raise UnknownLetterError(f"unknown letter {name!r}")
        return _z(int(m.group(1)))

    def __contains__(self, letter) -> bool:
        if not isinstance(letter, Letter):
            return False
        try:
            return self.letter(letter.name) == letter
        except UnknownLetterError:
            return False

    def slice(self, degree: int) -> list[Letter]:
        """The finite set of letters of the given degree."""
        if degree < 1:
            return []
        if self._finite:
            return sorted(l for l in self._letters.values() if l.degree == degree)
        return [_z(degree)]

    def letters(self, max_degree: int | None = None) -> list[Letter]:
        """Letters ordered by (degree, name); rule alphabets need ``max_degree``."""
        if self._finite:
            out = sorted(self._letters.values(), key=lambda l: (l.degree, l.name))
            if max_degree is not None:
                out = [l for l in out if l.degree <= max_degree]
            return out
        if max_degree is None:
            raise ValueError("rule alphabets are infinite; pass max_degree")
        return [l for d in range(1, max_degree + 1) for l in self.slice(d)]

    def enumerate(self, count: int) -> list[Letter]:
        """The first ``count`` letters y_1, y_2, ... in (degree, name) order."""
        if self._finite:
            letters = self.letters()
            if count > len(letters):
                raise ValueError(f"alphabet has only {len(letters)} letters")
            return letters[:count]
        return [_z(n) for n in range(1, count + 1)]

    def y(self, index: int) -> Letter:
        """Letter with enumeration index ``index``; index 0 is the unit."""
        if index == 0:
            return UNIT
        return self.enumerate(index)[index - 1]

    def check_letter(self, letter) -> None:
        if letter is ZERO or letter == UNIT:
            return
        if letter not in self:
            raise UnknownLetterError(f"letter {letter!r} is not in {self!r}")

    # pairing
    def raw_bracket(self, a: Letter, b: Letter):
        """Bracket of two alphabet letters (no unit handling)."""
        if self.kind == "stuffle":
            return _z(a.degree + b.degree)
        if self.kind == "zero":
            return ZERO
        return self._pairs.get(frozenset((a.name, b.name)), ZERO)

    def multiply(self, a, b):
        """Product in the unitary algebra on basis letters: unit neutral, else bracket."""
        if a is ZERO or b is ZERO:
            return ZERO
        if a == UNIT:
            return b
        if b == UNIT:
            return a
        return self.raw_bracket(a, b)

    # words
    def word(self, names: Iterable[str]) -> tuple:
        return tuple(UNIT if n == "1" else self.letter(n) for n in names)

    def words(self, length: int, letters: Sequence[Letter]) -> Iterator[tuple]:
        return cartesian(letters, repeat=length)


def make_alphabet(kind: str = "table", letters: Mapping[str, int] | Iterable[tuple] | None = None,
                  pairs: Iterable[tuple] = ()) -> Alphabet:
    """Build an alphabet.

    ``letters`` maps names to degrees. ``pairs`` holds ``(a, b, c)`` triples
    where ``c`` is a letter name, ``None`` or ``"0"`` (zero bracket).
    """
    if kind == "stuffle":
        return Alphabet("stuffle")
    items = list(letters.items()) if isinstance(letters, Mapping) else list(letters or ())
    built: dict[str, Letter] = {}
    for name, degree in items:
        if not _NAME_RE.match(name) or name in RESERVED_NAMES:
            raise UnknownLetterError(f"invalid letter name {name!r}")
        if name in built:
            raise DuplicateLetterError(f"letter {name!r} declared twice")
        if not isinstance(degree, int) or degree < 1:
            raise NonpositiveDegreeError(f"letter {name!r} has degree {degree!r}; degrees must be >= 1")
        built[name] = Letter(name, degree)
    if kind == "zero":
        if pairs:
            raise PairingConflictError("zero-bracket alphabets take no pair entries")
        return Alphabet("zero", built.values())
    if kind != "table":
        raise ValueError(f"unknown alphabet kind {kind!r}")

    table: dict[frozenset, object] = {}
    for a, b, c in pairs:
        for n in (a, b):
            if n not in built:
                raise UnknownLetterError(f"pair refers to undeclared letter {n!r}")
        if c is None or c == "0" or c is ZERO:
            value = ZERO
        elif isinstance(c, Letter):
            value = built.get(c.name, None)
            if value != c:
                raise UnknownLetterError(f"pair value {c!r} is not a declared letter")
        elif c in built:
            value = built[c]
        else:
            raise UnknownLetterError(f"pair value {c!r} is not a declared letter")
        key = frozenset((a, b))
        if key in table and table[key] is not value and table[key] != value:
            raise PairingConflictError(f"conflicting entries for pair ({a}, {b}): {table[key]!r} vs {value!r}")
        table[key] = value
    return Alphabet("table", built.values(), {k: v for k, v in table.items() if v is not ZERO})


def bracket(a, b, alphabet: Alphabet):
    """Bracket/product of two basis values; ZERO absorbs and UNIT is neutral."""
    alphabet.check_letter(a)
    alphabet.check_letter(b)
    return alphabet.multiply(a, b)


def check_hoffman_axioms(alphabet: Alphabet, degree_bound: int) -> CheckReport:
    """Exhaustively check S0-S3 over letters of degree <= ``degree_bound``.

    S3 is read as: every nonzero bracket is degree-additive.
    """
    letters = alphabet.letters(degree_bound)
    values = letters + [ZERO]
    br = alphabet.multiply
    report = CheckReport(f"degree<={degree_bound}")

    witness = next(((a, ZERO) for a in values
                    if br(a, ZERO) is not ZERO or br(ZERO, a) is not ZERO), None)
    report.add("S0", 2 * len(values), witness)

    witness = next(((a, b) for a in values for b in values if br(a, b) != br(b, a)), None)
    report.add("S1", len(values) ** 2, witness)

    witness = next(((a, b, c) for a in values for b in values for c in values
                    if br(br(a, b), c) != br(a, br(b, c))), None)
    report.add("S2", len(values) ** 3, witness)

    nonzero = [(a, b, br(a, b)) for a in letters for b in letters]
    nonzero = [t for t in nonzero if t[2] is not ZERO]
    witness = next(((a, b) for a, b, v in nonzero if v.degree != a.degree + b.degree), None)
    report.add("S3", len(nonzero), witness)
    return report


# -- elements -----------------------------------------------------------------


class Element:
    """Finite exact-rational linear combination of words.

    Immutable by convention; zero coefficients are never stored. ``alphabet``
    is optional; when two operands both carry one they must agree.
    """

    __slots__ = ("_terms", "alphabet")

    def __init__(self, terms: Mapping | Iterable[tuple] | None = None, alphabet: Alphabet | None = None):
        acc: dict[tuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for word, coeff in items:
            word = tuple(word)
            c = acc.get(word, 0) + as_scalar(coeff)
            if c:
                acc[word] = c
            else:
                acc.pop(word, None)
        self._terms = acc
        self.alphabet = alphabet

    @classmethod
    def _raw(cls, terms: dict, alphabet):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.alphabet = alphabet
        return obj

    @classmethod
    def zero(cls, alphabet=None) -> Element:
        return cls._raw({}, alphabet)

    @classmethod
    def of(cls, word: Sequence[Letter], coeff=1, alphabet=None) -> Element:
        return cls({tuple(word): coeff}, alphabet)

    @classmethod
    def one(cls, alphabet=None) -> Element:
        return cls._raw({EMPTY: 1}, alphabet)

    # mapping-ish access
    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word) -> Fraction:
        return self._terms.get(tuple(word), 0)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __eq__(self, other):
        if isinstance(other, Element):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({EMPTY: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"Element({canonical_serialize(self)})"

    def __str__(self):
        return canonical_serialize(self)

    # arithmetic
    def _join_alphabet(self, other: Element):
        a, b = self.alphabet, other.alphabet
        if a is not None and b is not None and a is not b and a != b:
            raise AlphabetMismatchError(f"{a!r} vs {b!r}")
        return a if a is not None else b

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        alphabet = self._join_alphabet(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            if s is None:
                out[w] = c
                continue
            s += c
            if s:
                out[w] = s
            else:
                del out[w]
        return Element._raw(out, alphabet)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({w: -c for w, c in self._terms.items()}, self.alphabet)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        if isinstance(scalar, Element):
            return NotImplemented
        s = as_scalar(scalar)
        if not s:
            return Element._raw({}, self.alphabet)
        return Element._raw({w: c * s for w, c in self._terms.items()}, self.alphabet)

    __rmul__ = __mul__

    def map_words(self, fn: Callable[[tuple], tuple]) -> Element:
        """Linear extension of a word -> word map."""
        acc: dict = {}
        for w, c in self._terms.items():
            w = tuple(fn(w))
            total = acc.get(w)
            if total is None:
                acc[w] = c
                continue
            total += c
            if total:
                acc[w] = total
            else:
                del acc[w]
        return Element._raw(acc, self.alphabet)

    def with_alphabet(self, alphabet) -> Element:
        return Element._raw(dict(self._terms), alphabet)


def _coerce(value):
    if isinstance(value, Element):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Element({EMPTY: value})
    return NotImplemented


def linear_combination(pairs: Iterable[tuple], alphabet=None) -> Element:
    """Sum ``coeff * element`` over ``(coeff, element)`` pairs, in one pass."""
    acc: dict[tuple, Fraction] = {}
    for coeff, e in pairs:
        coeff = as_scalar(coeff)
        if not coeff:
            continue
        for w, c in e.items():
            s = acc.get(w, 0) + coeff * c
            if s:
                acc[w] = s
            else:
                del acc[w]
    return Element._raw(acc, alphabet)


def element_add(a: Element, b: Element) -> Element:
    return a + b


def element_sub(a: Element, b: Element) -> Element:
    return a - b


def element_scale(scalar, a: Element) -> Element:
    return a * scalar


# -- text format --------------------------------------------------------------


def format_scalar(c) -> str:
    c = as_scalar(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_word(word: Sequence[Letter]) -> str:
    if not word:
        return "[e]"
    return "[" + ",".join(letter.name for letter in word) + "]"


def format_term(word, coeff) -> str:
    return format_word(word) if coeff == 1 else f"{format_scalar(coeff)}*{format_word(word)}"


def canonical_serialize(e: Element) -> str:
    """Deterministic text: terms in (degree, length, names) order joined by `` + ``."""
    if not e:
        return "0"
    return " + ".join(format_term(w, c) for w, c in e.sorted_terms())


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[\[\],*+-]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", 1, pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_element(text: str, alphabet: Alphabet) -> Element:
    """Parse the canonical element format (``1*`` may be omitted; ``-`` allowed)."""
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i]

    def fail(expected):
        kind, val, pos = tokens[i]
        raise ParseError(f"unexpected {val or 'end of input'!r}", 1, pos + 1, expected)

    def scalar(tok):
        try:
            return Fraction(tok)
        except ZeroDivisionError:
            raise ParseError("zero denominator", 1, tokens[i][2] + 1) from None

    if peek()[0] == "num" and peek()[1] == "0" and tokens[1][0] == "end":
        return Element.zero(alphabet)

    acc: dict[tuple, Fraction] = {}
    sign = 1
    while True:
        coeff = Fraction(sign)
        if peek()[:2] == ("sym", "-"):
            coeff = -coeff
            i += 1
        if peek()[0] == "num":
            coeff *= scalar(peek()[1])
            i += 1
            if peek()[1] != "*":
                fail(["*"])
            i += 1
        if peek()[1] != "[":
            fail(["["])
        i += 1
        names = []
        if peek()[0] == "name" and peek()[1] == "e" and tokens[i + 1][1] == "]":
            i += 1
        else:
            while True:
                kind, val, pos = peek()
                if kind == "name" or (kind == "num" and val == "1"):
                    try:
                        names.append(UNIT if val == "1" else alphabet.letter(val))
                    except UnknownLetterError as exc:
                        raise UnknownLetterError(f"1:{pos + 1}: {exc}") from None
                    i += 1
                else:
                    fail(["<letter>", "1"])
                if peek()[1] == ",":
                    i += 1
                    continue
                break
        if peek()[1] != "]":
            fail(["]", ","])
        i += 1
        word = tuple(names)
        c = acc.get(word, 0) + coeff
        if c:
            acc[word] = c
        else:
            acc.pop(word, None)
        if peek()[0] == "end":
            break
        if peek()[1] == "+":
            sign = 1
        elif peek()[1] == "-":
            sign = -1
        else:
            fail(["+", "-", "<end>"])
        i += 1
    return Element._raw(acc, alphabet)


# -- pairing files ------------------------------------------------------------


def parse_alphabet(text: str) -> Alphabet:
    """Read the line-based pairing format.

    ``letter <name> <degree>``, ``pair <a> <b> = <c|0>``, ``builtin stuffle``
    and ``builtin zero [<name:degree> ...]``; ``#`` starts a comment.
    """
    letters: list[tuple[str, int]] = []
    pairs: list[tuple] = []
    builtin = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        head = fields[0]

        def bad(msg, col=1):
            return ParseError(msg, lineno, col)

        if head == "letter":
            if len(fields) != 3:
                raise bad("expected: letter <name> <degree>", 1)
            letters.append((fields[1], _parse_degree(fields[2], lineno, raw)))
        elif head == "pair":
            if len(fields) != 5 or fields[3] != "=":
                raise bad("expected: pair <a> <b> = <c>")
            pairs.append((fields[1], fields[2], None if fields[4] == "0" else fields[4]))
        elif head == "builtin":
            if builtin is not None:
                raise bad("only one builtin line is allowed")
            if len(fields) < 2 or fields[1] not in ("stuffle", "zero"):
                raise bad("expected: builtin stuffle | builtin zero <name:degree> ...", raw.find(head) + 9)
            if fields[1] == "stuffle" and len(fields) > 2:
                raise bad("builtin stuffle takes no arguments")
            builtin = fields[1]
            for item in fields[2:]:
                name, sep, deg = item.partition(":")
                if not sep:
                    raise bad(f"expected <name:degree>, got {item!r}", raw.find(item) + 1)
                letters.append((name, _parse_degree(deg, lineno, raw)))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, raw.find(head) + 1,
                             ["letter", "pair", "builtin"])
    if builtin == "stuffle":
        if letters or pairs:
            raise ParseError("builtin stuffle cannot be combined with letter/pair lines", 1, 1)
        return make_alphabet("stuffle")
    if builtin == "zero":
        if pairs:
            raise PairingConflictError("builtin zero cannot be combined with pair lines")
        return make_alphabet("zero", letters)
    return make_alphabet("table", letters, pairs)


def _parse_degree(token: str, lineno: int, raw: str) -> int:
    if not re.fullmatch(r"-?[0-9]+", token):
        raise ParseError(f"degree must be an integer, got {token!r}", lineno, raw.find(token) + 1)
    return int(token)


def load_alphabet(path) -> Alphabet:
    with open(path, encoding="utf-8") as fh:
        return parse_alphabet(fh.read())
