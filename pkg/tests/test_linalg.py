from fractions import Fraction
from itertools import combinations, permutations

from hypothesis import given, settings, strategies as st

from mixshuffle.linalg import bareiss_rank, null_vector, rref, solve


def det(m):
    # Leibniz expansion; fine for the small sizes used here
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def naive_rank(m):
    rows, cols = len(m), len(m[0]) if m else 0
    for k in range(min(rows, cols), 0, -1):
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                if det([[m[i][j] for j in c] for i in r]):
                    return k
    return 0


entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_minors(m):
    assert bareiss_rank(m) == naive_rank(m)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_null_vector_is_a_dependency(columns):
    vec = null_vector(columns)
    height = len(columns[0])
    if vec is None:
        assert bareiss_rank(columns) == len(columns)
        return
    assert any(vec)
    assert all(x.denominator == 1 for x in vec)
    assert next(x for x in vec if x) > 0
    for i in range(height):
        assert sum(c * col[i] for c, col in zip(vec, columns)) == 0


@settings(max_examples=150, deadline=None)
@given(matrices, st.lists(entries, min_size=5, max_size=5))
def test_solve(columns, target):
    target = target[:len(columns[0])]
    x = solve(columns, target)
    consistent = bareiss_rank(columns + [target]) == bareiss_rank(columns)
    assert (x is not None) == consistent
    if x is not None:
        for i in range(len(target)):
            assert sum(c * col[i] for c, col in zip(x, columns)) == target[i]


def test_small_cases():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0]]) == 0
    assert null_vector([[1, 0], [2, 0]]) == (2, -1)
    red, pivots = rref([[2, 4], [1, 3]])
    assert pivots == [0, 1] and red == [[1, 0], [0, 1]]
