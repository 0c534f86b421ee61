"""The verification suite behind ``--verify``.

Each check returns ``(params, passed, witness)``. Rows are emitted in a
fixed order as tab-separated ``name  params  PASS|FAIL  witness`` lines.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable

from ..errors import ConfigError
from ..hopf import antipode, basis_words, check_bialgebra
from ..kernel import (UNIT, Alphabet, Element, check_hoffman_axioms, format_scalar, format_word,
                      make_alphabet, word_degree)
from ..products import (augmented_product, augmented_word_product, mixable_shuffle_explicit,
                        mixable_shuffle_recursive, quasi_shuffle, shuffle_explicit, shuffle_product,
                        shuffle_recursive)
from ..rota_baxter import P_A, P_v, check_rota_baxter, embed_alpha, gamma, gamma_plus
from ..structure import (check_linear_disjointness, check_linear_independence, check_one_shuffled_span,
                         disjointness_generators, g_rescale, one_shuffled, positive_sequences,
                         unit_power_mixable, unit_power_product)

SAMPLE_LIMIT = 10_000


@dataclass
class RunConfig:
    alphabet: Alphabet
    alphabet_source: str = "builtin:stuffle"
    lam: Fraction = Fraction(1)
    max_degree: int = 5
    max_length: int = 4
    seed: int = 0
    output: str = "canonical"
    negative_control: bool = False

    def __post_init__(self):
        if self.max_degree < 1 or self.max_length < 1:
            raise ConfigError("bounds must be positive")
        if self.output not in ("canonical", "tabular", "quiet"):
            raise ConfigError(f"unknown output mode {self.output!r}")
        self.lam = Fraction(self.lam)


@dataclass
class Row:
    name: str
    params: str
    passed: bool
    witness: str = ""


def fmt(obj) -> str:
    """Deterministic text for witnesses."""
    if obj is None:
        return ""
    if isinstance(obj, Element):
        return str(obj)
    if isinstance(obj, Fraction):
        return format_scalar(obj)
    if isinstance(obj, tuple) and obj and all(hasattr(x, "degree") for x in obj):
        return format_word(obj)
    if isinstance(obj, tuple):
        if not obj:
            return "[e]"
        return "(" + ", ".join(fmt(x) for x in obj) + ")"
    return str(obj)


def words_upto(letters, max_length: int, min_length: int = 0):
    return [w for n in range(min_length, max_length + 1) for w in cartesian(letters, repeat=n)]


def pairs_total(letters, max_total: int):
    words = words_upto(letters, max_total)
    return [(a, b) for a in words for b in words if len(a) + len(b) <= max_total]


def first_failure(items, predicate: Callable):
    for item in items:
        if not predicate(item):
            return item
    return None


class Suite:
    def __init__(self, config: RunConfig):
        self.c = config
        A = config.alphabet
        self.A = A
        count = min(2, len(A.letters())) if A.is_finite else 2
        self.two = A.enumerate(count)
        self.two_unit = [UNIT] + self.two
        self.degree_words = [w for w in basis_words(A, config.max_degree)]
        self.rng = random.Random(config.seed)

    def window2(self, length) -> str:
        return f"letters={','.join(l.name for l in self.two)} len<={length}"

    # --- kernel
    def hoffman(self):
        r = check_hoffman_axioms(self.A, self.c.max_degree)
        bad = next((row for row in r.rows if not row.passed), None)
        return f"degree<={self.c.max_degree}", r.passed, bad and f"{bad.name}: {fmt(bad.witness)}"

    # --- products
    def shuffle_equivalence(self):
        L = self.c.max_length + 3
        pairs = pairs_total(self.two, L)
        bad = first_failure(pairs, lambda p: shuffle_recursive(*p) == shuffle_explicit(*p))
        return self.window2(f"{L} (total)"), bad is None, fmt(bad)

    def mixable_equivalence(self):
        L = self.c.max_length + 2
        lam = self.c.lam
        pairs = pairs_total(self.two_unit, L)
        bad = first_failure(pairs, lambda p: mixable_shuffle_recursive(*p, lam, self.A)
                            == mixable_shuffle_explicit(*p, lam, self.A))
        return f"letters=1,{','.join(l.name for l in self.two)} len<={L} (total) lambda={lam}", bad is None, fmt(bad)

    def zero_bracket(self):
        Z = make_alphabet("zero", {l.name: l.degree for l in self.two})
        pairs = pairs_total(Z.letters(), self.c.max_length + 2)
        bad = first_failure(pairs, lambda p: quasi_shuffle(*p, Z) == shuffle_explicit(*p))
        return self.window2(f"{self.c.max_length + 2} (total)") + " bracket=0", bad is None, fmt(bad)

    def lambda_zero(self):
        pairs = pairs_total(self.two_unit, self.c.max_length + 2)
        bad = first_failure(pairs, lambda p: mixable_shuffle_explicit(*p, 0, self.A) == shuffle_explicit(*p))
        return f"len<={self.c.max_length + 2} (total) lambda=0", bad is None, fmt(bad)

    def _comm_assoc(self, mult, letters, params):
        L = self.c.max_length
        words = words_upto(letters, L)
        pairs = [(a, b) for a in words for b in words if len(a) + len(b) <= L]
        bad = first_failure(pairs, lambda p: mult(p[0], p[1]) == mult(p[1], p[0]))
        if bad is not None:
            return params, False, "commutativity " + fmt(bad)
        triples = [(a, b, c) for a in words for b in words for c in words if len(a) + len(b) + len(c) <= L]

        def assoc(t):
            a, b, c = t
            left = _extend(mult, _extend(mult, Element.of(a), Element.of(b)), Element.of(c))
            right = _extend(mult, Element.of(a), _extend(mult, Element.of(b), Element.of(c)))
            return left == right

        bad = first_failure(triples, assoc)
        return params, bad is None, bad and "associativity " + fmt(bad)

    def quasi_comm_assoc(self):
        return self._comm_assoc(lambda a, b: quasi_shuffle(a, b, self.A), self.two,
                                self.window2(f"{self.c.max_length} (total)"))

    def mixable_comm_assoc(self):
        lam = self.c.lam
        return self._comm_assoc(lambda a, b: mixable_shuffle_recursive(a, b, lam, self.A), self.two_unit,
                                f"letters=1,{','.join(l.name for l in self.two)} len<={self.c.max_length} "
                                f"(total) lambda={lam}")

    def augmented_comm_assoc(self):
        lam = self.c.lam
        L = self.c.max_length
        words = words_upto(self.two_unit, L, 1)
        mult = lambda a, b: augmented_word_product(a, b, lam, self.A)
        pairs = [(a, b) for a in words for b in words if len(a) + len(b) <= L + 1]
        bad = first_failure(pairs, lambda p: mult(p[0], p[1]) == mult(p[1], p[0]))
        params = f"letters=1,{','.join(l.name for l in self.two)} len<={L + 1} (total) lambda={lam}"
        if bad is not None:
            return params, False, "commutativity " + fmt(bad)
        triples = [(a, b, c) for a in words for b in words for c in words if len(a) + len(b) + len(c) <= L + 2]

        def assoc(t):
            a, b, c = (Element.of(x) for x in t)
            return (augmented_product(augmented_product(a, b, lam, self.A), c, lam, self.A)
                    == augmented_product(a, augmented_product(b, c, lam, self.A), lam, self.A))

        bad = first_failure(triples, assoc)
        return params, bad is None, bad and "associativity " + fmt(bad)

    def gradedness(self):
        D = self.c.max_degree
        lam = self.c.lam
        pairs = [(a, b) for a in self.degree_words for b in self.degree_words
                 if word_degree(a) + word_degree(b) <= D]

        def ok(p):
            d = word_degree(p[0]) + word_degree(p[1])
            for prod in (quasi_shuffle(*p, self.A), mixable_shuffle_recursive(*p, lam, self.A)):
                if any(word_degree(w) != d for w in prod.words()):
                    return False
            return True

        bad = first_failure(pairs, ok)
        return f"degree<={D} lambda={lam}", bad is None, fmt(bad)

    # --- Rota-Baxter
    def _samples(self, words):
        pairs = [(a, b) for a in words for b in words]
        if len(pairs) > SAMPLE_LIMIT:
            pairs = self.rng.sample(pairs, SAMPLE_LIMIT)
            return pairs, f"sampled {SAMPLE_LIMIT} of {len(words) ** 2} seed={self.c.seed}"
        return pairs, f"exhaustive {len(pairs)}"

    def rota_baxter_PA(self):
        lam = self.c.lam
        L = min(self.c.max_length, 4)
        words = words_upto(self.two_unit, L, 1)
        pairs, how = self._samples(words)
        prod = lambda x, y: augmented_product(x, y, lam, self.A)
        r = check_rota_baxter(P_A, prod, lam, ((Element.of(a, 1, self.A), Element.of(b, 1, self.A))
                                               for a, b in pairs))
        bad = r.failures()[:1]
        return (f"letters=1,{','.join(l.name for l in self.two)} len<={L} lambda={lam} {how}", r.passed,
                bad and fmt((bad[0].x, bad[0].y)))

    def _pv_check(self, weight):
        L = min(self.c.max_length, 4)
        words = words_upto(self.two, L)
        pairs, how = self._samples(words)
        v = self.two[0]
        r = check_rota_baxter(lambda e: P_v(v, e), shuffle_product, weight,
                              ((Element.of(a), Element.of(b)) for a, b in pairs))
        bad = r.failures()[:1]
        return (f"v={v.name} {self.window2(L)} weight={format_scalar(weight)} {how}", r.passed,
                bad and fmt((bad[0].x, bad[0].y)))

    def rota_baxter_Pv(self):
        return self._pv_check(Fraction(0))

    def rota_baxter_Pv_control(self):
        return self._pv_check(self.c.lam)

    def embeddings(self):
        lam = self.c.lam
        words = words_upto(self.two_unit, self.c.max_length)
        pairs = [(a, b) for a in words for b in words if len(a) + len(b) <= self.c.max_length]

        def ok(p):
            a, b = Element.of(p[0]), Element.of(p[1])
            lhs = embed_alpha(mixable_shuffle_recursive(p[0], p[1], lam, self.A))
            return lhs == augmented_product(embed_alpha(a), embed_alpha(b), lam, self.A)

        bad = first_failure(pairs, ok)
        if bad is None:
            bad = first_failure(range(9), lambda n: embed_alpha(gamma_plus(n)) == gamma(n))
            bad = None if bad is None else ("gamma", bad)
        return f"len<={self.c.max_length} (total) lambda={lam} gamma n<=8", bad is None, fmt(bad)

    # --- Hopf
    def bialgebra_quasi(self):
        r = check_bialgebra("quasi-shuffle", 1, self.A, self.c.max_degree)
        bad = next((row for row in r.rows if not row.passed), None)
        return f"degree<={self.c.max_degree}", r.passed, bad and f"{bad.name}: {fmt(bad.witness)}"

    def bialgebra_mixable(self):
        D = max(1, self.c.max_degree - 1)
        r = check_bialgebra("mixable", self.c.lam, self.A, D)
        bad = next((row for row in r.rows if not row.passed), None)
        return f"degree<={D} lambda={self.c.lam}", r.passed, bad and f"{bad.name}: {fmt(bad.witness)}"

    def antipode_involution(self):
        S = lambda e: antipode(e, "quasi-shuffle", 1, self.A)
        bad = first_failure(self.degree_words, lambda w: S(S(Element.of(w, 1, self.A))) == Element.of(w))
        return f"degree<={self.c.max_degree}", bad is None, fmt(bad)

    # --- structure
    def hoffman_isomorphism(self):
        D = self.c.max_degree
        pairs = [(a, b) for a in self.degree_words for b in self.degree_words
                 if word_degree(a) + word_degree(b) <= D]
        bad = first_failure(pairs, lambda p: quasi_shuffle(*p, self.A)
                            == mixable_shuffle_explicit(*p, 1, self.A))
        return f"degree<={D} pairs={len(pairs)}", bad is None, fmt(bad)

    def rescaling(self):
        lam = self.c.lam
        D = self.c.max_degree
        pairs = [(a, b) for a in self.degree_words for b in self.degree_words
                 if word_degree(a) + word_degree(b) <= D]
        if lam == 0:
            bad = first_failure(pairs, lambda p: mixable_shuffle_explicit(*p, 0, self.A) == shuffle_explicit(*p))
            return f"degree<={D} lambda=0 (shuffle case)", bad is None, fmt(bad)

        def ok(p):
            a, b = Element.of(p[0], 1, self.A), Element.of(p[1], 1, self.A)
            lhs = g_rescale(mixable_shuffle_explicit(*p, lam, self.A), lam)
            ga, gb = g_rescale(a, lam), g_rescale(b, lam)
            rhs = _extend(lambda u, v: mixable_shuffle_explicit(u, v, 1, self.A), ga, gb)
            return lhs == rhs and g_rescale(ga, lam, inverse=True) == a

        bad = first_failure(pairs, ok)
        return f"degree<={D} lambda={lam}", bad is None, fmt(bad)

    def unit_power_expansion(self):
        lam = self.c.lam
        M, R = min(self.c.max_length, 4), min(self.c.max_length, 3)
        cases = [(m, s) for m in range(M + 1) for s in positive_sequences(R, len(self.two))]
        bad = first_failure(cases, lambda c: unit_power_mixable(c[0], c[1], lam, self.A)
                            == unit_power_product(c[0], c[1], lam, self.A))
        return f"m<={M} len(I)<={R} letters={len(self.two)} lambda={lam}", bad is None, fmt(bad)

    def fixed_index_independence(self):
        N = self.c.max_length
        seq = tuple(range(1, len(self.two) + 1))
        gens = [e for _, e in disjointness_generators(range(N + 1), [seq], self.c.lam, self.A)]
        r = check_linear_independence(gens)
        return (f"I={fmt(seq)} n<={N} lambda={self.c.lam} rank={r.rank}/{r.count}", r.independent,
                r.witness and fmt(r.witness))

    def disjointness(self):
        N = self.c.max_length - 1
        r = check_linear_disjointness(range(N + 1), positive_sequences(2, len(self.two)), self.c.lam, self.A)
        return f"{r.window} rank={r.rank}/{r.count}", r.independent, r.witness and fmt(r.witness)

    def one_shuffled_span(self):
        K = self.c.max_length - 1
        r = check_one_shuffled_span(self.c.lam, self.A, K, 2, len(self.two))
        bad = next((row for row in r.rows if not row.passed), None)
        return r.window, r.passed, bad and f"{bad.name}: {fmt(bad.witness)}"

    def one_shuffled_example(self):
        y1, y2 = self.A.y(1), self.A.y(2)
        expected = Element({(y2, UNIT, y1): 1, (UNIT, y2, y1): 1, (y2, y1, UNIT): 1})
        got = one_shuffled((2, 0, 1), self.A)
        return "I=(2,0,1)", got == expected, "" if got == expected else str(got)


def _extend(mult, x: Element, y: Element) -> Element:
    acc = Element.zero()
    for u, cu in x.items():
        for v, cv in y.items():
            acc = acc + mult(u, v) * (cu * cv)
    return acc


CHECKS = [
    ("hoffman-axioms", "hoffman"),
    ("shuffle-recursive-vs-explicit", "shuffle_equivalence"),
    ("mixable-recursive-vs-explicit", "mixable_equivalence"),
    ("quasi-shuffle-zero-bracket", "zero_bracket"),
    ("mixable-weight-zero", "lambda_zero"),
    ("quasi-shuffle-comm-assoc", "quasi_comm_assoc"),
    ("mixable-comm-assoc", "mixable_comm_assoc"),
    ("augmented-comm-assoc", "augmented_comm_assoc"),
    ("gradedness", "gradedness"),
    ("rota-baxter-P_A", "rota_baxter_PA"),
    ("rota-baxter-P_v", "rota_baxter_Pv"),
    ("embeddings", "embeddings"),
    ("bialgebra-quasi-shuffle", "bialgebra_quasi"),
    ("bialgebra-mixable", "bialgebra_mixable"),
    ("antipode-involution", "antipode_involution"),
    ("quasi-equals-mixable-weight-1", "hoffman_isomorphism"),
    ("rescaling-isomorphism", "rescaling"),
    ("unit-power-expansion", "unit_power_expansion"),
    ("independence-fixed-I", "fixed_index_independence"),
    ("linear-disjointness", "disjointness"),
    ("one-shuffled-span", "one_shuffled_span"),
    ("one-shuffled-example", "one_shuffled_example"),
]

CONTROL_CHECKS = [
    ("control-P_v-weight-mismatch", "rota_baxter_Pv_control"),
]


def run_checks(config: RunConfig) -> list[Row]:
    suite = Suite(config)
    checks = CHECKS + (CONTROL_CHECKS if config.negative_control else [])
    rows = []
    for name, method in checks:
        params, passed, witness = getattr(suite, method)()
        rows.append(Row(name, params, bool(passed), witness or ""))
    return rows


def render(rows: list[Row], config: RunConfig, mode: str = "canonical") -> str:
    header = (f"# alphabet={config.alphabet_source} lambda={format_scalar(config.lam)} "
              f"max-degree={config.max_degree} max-length={config.max_length} seed={config.seed}")
    lines = [header]
    failed = sum(not r.passed for r in rows)
    summary = Row("summary", f"{len(rows)} checks, {failed} failed", failed == 0)
    if mode == "tabular":
        table = rows + [summary]
        w0 = max(len(r.name) for r in table)
        w1 = max(len(r.params) for r in table)
        for r in table:
            lines.append(f"{r.name:<{w0}}  {r.params:<{w1}}  {'PASS' if r.passed else 'FAIL'}  {r.witness}".rstrip())
    else:
        for r in rows + [summary]:
            lines.append("\t".join((r.name, r.params, "PASS" if r.passed else "FAIL", r.witness)))
    return "\n".join(lines) + "\n"


def run_verification_suite(config: RunConfig) -> tuple[int, str]:
    """Run every check; exit status 0 iff all pass, else 1."""
    rows = run_checks(config)
    status = 0 if all(r.passed for r in rows) else 1
    return status, render(rows, config, "tabular" if config.output == "tabular" else "canonical")
