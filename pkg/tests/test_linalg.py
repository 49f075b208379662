"""Incremental exact row reduction: rank, nullspace, coordinates."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qpartition.linalg import Echelon, nullspace, rank

ONE = Fraction(1)

matrices = st.integers(1, 5).flatmap(
    lambda width: st.lists(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                 min_size=width, max_size=width),
        min_size=0, max_size=6).map(lambda rows: (width, rows)))


def sparse(row):
    return {c: v for c, v in enumerate(row) if v}


def mat_vec(rows, vec):
    return [sum(c * x for c, x in zip(row, vec)) for row in rows]


@given(matrices)
@settings(max_examples=120, deadline=None)
def test_rank_nullity(case):
    width, rows = case
    assert rank(rows, width, ONE) + len(nullspace(rows, width, ONE)) == width


@given(matrices)
@settings(max_examples=120, deadline=None)
def test_nullspace_vectors_annihilate(case):
    width, rows = case
    for vec in nullspace(rows, width, ONE):
        assert all(v == 0 for v in mat_vec(rows, vec))


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_nullspace_vectors_independent(case):
    width, rows = case
    basis = nullspace(rows, width, ONE)
    ech = Echelon(width, ONE)
    for vec in basis:
        assert ech.add(sparse(vec)) is not None


def test_reduce_residual_is_zero_for_members():
    ech = Echelon(4, ONE)
    ech.add(sparse([1, 2, 0, 1]))
    ech.add(sparse([0, 1, 1, 0]))
    member = [2, 5, 1, 2]  # first + 2 * (first row) etc, any combination
    res, _ = ech.reduce(sparse(member), None)
    assert not res
    res, _ = ech.reduce(sparse([0, 0, 0, 1]), None)
    assert res


def test_coordinates_recover_combination():
    rng = random.Random(7)
    width = 6
    rows = [[Fraction(rng.randint(-4, 4)) for _ in range(width)] for _ in range(4)]
    ech = Echelon(width, ONE)
    tags = []
    for t, row in enumerate(rows):
        if ech.add(sparse(row), tag=t) is not None:
            tags.append(t)
    coeffs = {t: Fraction(rng.randint(-3, 3)) for t in tags}
    target = [sum(coeffs[t] * rows[t][c] for t in tags) for c in range(width)]
    combo = ech.coordinates(sparse(target))
    assert combo is not None
    rebuilt = [Fraction(0)] * width
    for t, c in combo.items():
        for col in range(width):
            rebuilt[col] += c * rows[t][col]
    assert rebuilt == target


def test_coordinates_rejects_outsiders():
    ech = Echelon(3, ONE)
    ech.add(sparse([1, 1, 0]), tag='a')
    assert ech.coordinates(sparse([0, 0, 1])) is None


def test_duplicate_rows_do_not_raise_rank():
    ech = Echelon(3, ONE)
    assert ech.add(sparse([1, 2, 3])) is not None
    assert ech.add(sparse([2, 4, 6])) is None
    assert ech.rank == 1


def test_fully_reduced_invariant():
    # stored rows only touch their own pivot among pivot columns
    rng = random.Random(3)
    ech = Echelon(8, ONE)
    for _ in range(12):
        row = {c: Fraction(rng.randint(-3, 3)) for c in rng.sample(range(8), 4)}
        ech.add(row)
    for p, row in ech.rows.items():
        for p2 in ech.rows:
            if p2 != p:
                assert p2 not in row
        assert row.get(p) == ONE
