"""Expression mini-language: tokenizer, LL(1) parser and evaluator.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | atom
    atom    := NUMBER | word | NAME '(' args ')' | '(' ')' | '(' expr (',' expr)* ')'
    word    := '[' 'e' ']' | '[' item (',' item)* ']'
    item    := NAME | '1'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import AlgebraError, EvaluationError, ParseError, UnknownFunctionError, UnknownLetterError
from ..hopf import TensorSquare, antipode, coproduct_element, counit, serialize_tensor
from ..kernel import UNIT, Alphabet, Element, canonical_serialize, format_scalar, format_word
from ..products import augmented_product, bilinear, mixable_product, quasi_shuffle_product, shuffle_product
from ..rota_baxter import P_A, P_v
from ..structure import f_tilde, g_rescale, one_shuffled, ssupp

MAX_DEPTH = 200

# name -> arity
FUNCTIONS = {
    "sh": 2, "qsh": 2, "msh": 2, "aug": 2, "conc": 2,
    "P": 1, "Pv": 2, "coprod": 1, "counit": 1, "antipode": 1,
    "g": 1, "ginv": 1, "fwd": 1, "oneshuf": 1, "ssupp": 1,
}

_TOKEN = re.compile(r"(?P<num>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[\[\](),+*-])")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: tuple


@dataclass(frozen=True)
class WordLit:
    names: tuple
    pos: tuple


@dataclass(frozen=True)
class Name:
    name: str
    pos: tuple


@dataclass(frozen=True)
class Seq:
    items: tuple
    pos: tuple


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    pos: tuple


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: tuple


Expression = Union[Num, WordLit, Name, Seq, Call, Neg, BinOp]


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            col, i = col + 1, i + 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(), line, col))
        col += m.end() - i
        i = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected) -> ParseError:
        t = self.tok
        what = repr(t.text) if t.text else "end of input"
        return ParseError(f"unexpected {what}", t.line, t.col, expected)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "end":
            raise self.fail([text])
        t = self.tok
        self.i += 1
        return t

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            t = self.tok
            raise ParseError("expression nested too deeply", t.line, t.col)

    def expr(self):
        self.enter()
        node = self.term()
        while self.tok.kind == "sym" and self.tok.text in "+-":
            t = self.tok
            self.i += 1
            node = BinOp(t.text, node, self.term(), (t.line, t.col))
        self.depth -= 1
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "sym" and self.tok.text == "*":
            t = self.tok
            self.i += 1
            node = BinOp("*", node, self.unary(), (t.line, t.col))
        return node

    def unary(self):
        t = self.tok
        if t.kind == "sym" and t.text == "-":
            self.i += 1
            self.enter()
            node = Neg(self.unary(), (t.line, t.col))
            self.depth -= 1
            return node
        return self.atom()

    def atom(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "num":
            self.i += 1
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.line, t.col)
            return Num(Fraction(int(num), int(den or 1)), pos)
        if t.kind == "sym" and t.text == "[":
            return self.word()
        if t.kind == "name":
            self.i += 1
            if self.tok.text != "(":
                return Name(t.text, pos)
            if t.text not in FUNCTIONS:
                raise UnknownFunctionError(f"unknown function {t.text!r}", t.line, t.col, sorted(FUNCTIONS))
            self.i += 1
            args = []
            if self.tok.text != ")":
                args.append(self.expr())
                while self.tok.text == ",":
                    self.i += 1
                    args.append(self.expr())
            if self.tok.text != ")" or self.tok.kind == "end":
                raise self.fail([")", ","])
            self.i += 1
            if len(args) != FUNCTIONS[t.text]:
                raise ParseError(f"{t.text} takes {FUNCTIONS[t.text]} argument(s), got {len(args)}",
                                 t.line, t.col)
            return Call(t.text, tuple(args), pos)
        if t.kind == "sym" and t.text == "(":
            self.i += 1
            if self.tok.text == ")":
                self.i += 1
                return Seq((), pos)
            first = self.expr()
            if self.tok.text == ",":
                items = [first]
                while self.tok.text == ",":
                    self.i += 1
                    items.append(self.expr())
                self.expect(")")
                return Seq(tuple(items), pos)
            self.expect(")")
            return first
        raise self.fail(["<number>", "[", "(", "-", "<function>"])

    def word(self):
        t = self.expect("[")
        pos = (t.line, t.col)
        if self.tok.kind == "name" and self.tok.text == "e" and self.tokens[self.i + 1].text == "]":
            self.i += 2
            return WordLit((), pos)
        names = []
        while True:
            item = self.tok
            if item.kind == "name" or (item.kind == "num" and item.text == "1"):
                names.append((item.text, (item.line, item.col)))
                self.i += 1
            else:
                raise self.fail(["<letter>", "1"])
            if self.tok.text == ",":
                self.i += 1
                continue
            if self.tok.text == "]" and self.tok.kind == "sym":
                self.i += 1
                return WordLit(tuple(names), pos)
            raise self.fail(["]", ","])


def parse_expression(text) -> Expression:
    """Parse ``text`` (str or UTF-8 bytes). Raises :class:`ParseError` with a position."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 at byte {exc.start}", 1, exc.start + 1) from None
    parser = _Parser(tokenize(text))
    node = parser.expr()
    if parser.tok.kind != "end":
        raise parser.fail(["+", "-", "*", "<end>"])
    return node


# -- evaluation ----------------------------------------------------------------


def _at(pos, exc: AlgebraError) -> AlgebraError:
    if isinstance(exc, ParseError):
        return exc
    out = type(exc)(f"{pos[0]}:{pos[1]}: {exc}")
    out.pos = pos
    return out


class Evaluator:
    def __init__(self, alphabet: Alphabet, lam=Fraction(1)):
        self.alphabet = alphabet
        self.lam = Fraction(lam)

    def __call__(self, node):
        try:
            return self.eval(node)
        except RecursionError:
            raise EvaluationError("expression too deep to evaluate") from None

    def element(self, node) -> Element:
        v = self.eval(node)
        if isinstance(v, Fraction):
            return Element.one(self.alphabet) * v
        if not isinstance(v, Element):
            raise _at(node.pos, EvaluationError(f"expected an element, got {describe(v)}"))
        return v

    def word(self, node) -> tuple:
        e = self.element(node)
        if len(e) != 1 or next(iter(e.items()))[1] != 1:
            raise _at(node.pos, EvaluationError("expected a single word"))
        return next(iter(e.words()))

    def sequence(self, node) -> tuple:
        v = self.eval(node)
        if isinstance(v, Fraction):
            v = (v,)
        if not isinstance(v, tuple) or any(not isinstance(x, Fraction) or x.denominator != 1 or x < 0 for x in v):
            raise _at(node.pos, EvaluationError("expected an index sequence of nonnegative integers"))
        return tuple(int(x) for x in v)

    def eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, WordLit):
            letters = []
            for name, pos in node.names:
                if name == "1":
                    letters.append(UNIT)
                    continue
                try:
                    letters.append(self.alphabet.letter(name))
                except UnknownLetterError as exc:
                    raise _at(pos, exc) from None
            return Element.of(tuple(letters), 1, self.alphabet)
        if isinstance(node, Name):
            raise _at(node.pos, EvaluationError(f"bare name {node.name!r} outside Pv(...)"))
        if isinstance(node, Seq):
            return tuple(self.eval(item) for item in node.items)
        if isinstance(node, Neg):
            return self._scale(self.eval(node.operand), Fraction(-1), node.pos)
        if isinstance(node, BinOp):
            return self._binop(node)
        if isinstance(node, Call):
            try:
                return self._call(node)
            except AlgebraError as exc:
                raise _at(node.pos, exc) from None
        raise EvaluationError(f"cannot evaluate {node!r}")

    def _scale(self, v, s, pos):
        if isinstance(v, Fraction):
            return v * s
        if isinstance(v, (Element, TensorSquare)):
            return v * s
        raise _at(pos, EvaluationError(f"cannot scale {describe(v)}"))

    def _binop(self, node: BinOp):
        left, right = self.eval(node.left), self.eval(node.right)
        if node.op == "*":
            if isinstance(left, Fraction):
                return self._scale(right, left, node.pos)
            if isinstance(right, Fraction):
                return self._scale(left, right, node.pos)
            raise _at(node.pos, EvaluationError(
                f"'*' is scalar multiplication; use sh/qsh/msh/aug/conc for products of {describe(left)}s"))
        if node.op == "-":
            right = self._scale(right, Fraction(-1), node.pos)
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left + right
        if isinstance(left, TensorSquare) and isinstance(right, TensorSquare):
            return left + right
        if isinstance(left, (Element, Fraction)) and isinstance(right, (Element, Fraction)):
            try:
                return _as_element(left, self.alphabet) + _as_element(right, self.alphabet)
            except AlgebraError as exc:
                raise _at(node.pos, exc) from None
        raise _at(node.pos, EvaluationError(f"cannot add {describe(left)} and {describe(right)}"))

    def _call(self, node: Call):
        f, args, A, lam = node.func, node.args, self.alphabet, self.lam
        if f == "sh":
            return shuffle_product(self.element(args[0]), self.element(args[1])).with_alphabet(A)
        if f == "qsh":
            return quasi_shuffle_product(self.element(args[0]), self.element(args[1]), A)
        if f == "msh":
            return mixable_product(self.element(args[0]), self.element(args[1]), lam, A)
        if f == "aug":
            return augmented_product(self.element(args[0]), self.element(args[1]), lam, A)
        if f == "conc":
            return bilinear(lambda u, v: Element.of(u + v), self.element(args[0]), self.element(args[1]), A)
        if f == "P":
            return P_A(self.element(args[0]))
        if f == "Pv":
            head = args[0]
            if isinstance(head, Name):
                try:
                    letter = A.letter(head.name)
                except UnknownLetterError as exc:
                    raise _at(head.pos, exc) from None
            else:
                w = self.word(head)
                if len(w) != 1:
                    raise _at(head.pos, EvaluationError("Pv needs a single letter"))
                letter = w[0]
            return P_v(letter, self.element(args[1]))
        if f == "coprod":
            return coproduct_element(self.element(args[0]))
        if f == "counit":
            return counit(self.element(args[0]))
        if f == "antipode":
            return antipode(self.element(args[0]), "mixable", lam, A)
        if f == "g":
            return g_rescale(self.element(args[0]), lam)
        if f == "ginv":
            return g_rescale(self.element(args[0]), lam, inverse=True)
        if f == "fwd":
            return f_tilde(self.word(args[0])).with_alphabet(A)
        if f == "oneshuf":
            return one_shuffled(self.sequence(args[0]), A)
        if f == "ssupp":
            return tuple(Fraction(i) for i in ssupp(self.sequence(args[0])))
        raise UnknownFunctionError(f"unknown function {f!r}", *node.pos)


def _as_element(v, alphabet) -> Element:
    if isinstance(v, Fraction):
        return Element.one(alphabet) * v
    return v


def describe(v) -> str:
    if isinstance(v, Fraction):
        return "scalar"
    if isinstance(v, Element):
        return "element"
    if isinstance(v, TensorSquare):
        return "tensor"
    if isinstance(v, tuple):
        return "index sequence"
    return type(v).__name__


def evaluate(expr, alphabet: Alphabet, lam=Fraction(1)):
    """Evaluate a parsed expression (or source text) to an Element, scalar,
    TensorSquare, or index sequence (tuple of ints)."""
    if not isinstance(expr, (Num, WordLit, Name, Seq, Call, Neg, BinOp)):
        expr = parse_expression(expr)
    value = Evaluator(alphabet, lam)(expr)
    if isinstance(value, tuple) and all(isinstance(x, Fraction) and x.denominator == 1 for x in value):
        return tuple(int(x) for x in value)
    return value


def format_value(value, mode: str = "canonical") -> str:
    """Canonical one-line text, or a term-per-line table when ``mode == "tabular"``."""
    if mode == "tabular":
        if isinstance(value, Element):
            rows = [(format_scalar(c), format_word(w)) for w, c in value.sorted_terms()] or [("0", "")]
            width = max(len(r[0]) for r in rows)
            return "\n".join(f"{c:>{width}}  {w}".rstrip() for c, w in rows)
        if isinstance(value, TensorSquare):
            rows = [(format_scalar(c), f"{format_word(u)}|{format_word(v)}") for (u, v), c in value.sorted_terms()]
            rows = rows or [("0", "")]
            width = max(len(r[0]) for r in rows)
            return "\n".join(f"{c:>{width}}  {w}".rstrip() for c, w in rows)
    if isinstance(value, Element):
        return canonical_serialize(value)
    if isinstance(value, TensorSquare):
        return serialize_tensor(value)
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, tuple):
        return "(" + ",".join(str(format_value(x)) if isinstance(x, Fraction) else str(x) for x in value) + ")"
    raise TypeError(f"cannot format {value!r}")
