from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from gencartan.linalg import RankAccumulator, exact_rank_accumulate, hermite_rows, integer_kernel, rational_rank

small = st.integers(-4, 4)


def vec(*xs):
    return {i: Fraction(x) for i, x in enumerate(xs) if x}


def test_rank_examples():
    assert exact_rank_accumulate([])[1] == 0
    assert exact_rank_accumulate([vec(1, 0), vec(1, 1)])[1] == 2
    v, w = vec(1, 2, 0), vec(0, 1, 5)
    assert exact_rank_accumulate([v, {k: 2 * x for k, x in v.items()}, {0: 1, 1: 3, 2: 5}])[1] == 2


def test_accumulator_reports_relation():
    acc = RankAccumulator()
    assert acc.add(vec(1, 2)) is None
    assert acc.add(vec(0, 3)) is None
    rel = acc.add(vec(2, 7))
    assert rel is not None
    assert acc.rank == 2


@given(st.lists(st.lists(small, min_size=3, max_size=3), max_size=6))
def test_relations_are_true_dependencies(rows):
    acc = RankAccumulator()
    for i, r in enumerate(rows):
        rel = acc.add(vec(*r))
        if rel is not None:
            # the reported combination of earlier inputs and this one vanishes
            total = [Fraction(0)] * 3
            for j, c in rel.items():
                for t in range(3):
                    total[t] += c * rows[j][t]
            assert total == [0, 0, 0]
            assert rel.get(i, 0) != 0
    assert acc.rank == rational_rank(rows)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3))
def test_kernel_is_annihilated(rows):
    ker = integer_kernel(rows, 3)
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert len(ker) == 3 - rational_rank(rows)


@given(st.lists(st.lists(small, min_size=2, max_size=2), max_size=4), st.permutations(range(4)))
def test_hermite_form_is_order_independent(rows, perm):
    shuffled = [rows[i] for i in perm if i < len(rows)]
    assert hermite_rows(rows, 2) == hermite_rows(shuffled, 2)
