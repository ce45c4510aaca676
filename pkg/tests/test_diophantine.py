import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elastinv.diophantine import (CandidateTransvectant, DiophantineSystem, brute_force_irreducible,
                                  candidate_transvectants, irreducible_solutions)
from elastinv.errors import IncompleteSearchError


def test_single_equation_examples():
    assert irreducible_solutions(DiophantineSystem([[1, -1]])) == [(1, 1)]
    assert irreducible_solutions(DiophantineSystem([[1, 1, -1]])) == [(0, 1, 1), (1, 0, 1)]
    assert irreducible_solutions(DiophantineSystem([[2, -3]])) == [(3, 2)]
    # a free unknown is its own solution
    assert irreducible_solutions(DiophantineSystem([[0, 1, -1]])) == [(0, 1, 1), (1, 0, 0)]


def test_quadratic_pair_system():
    system = DiophantineSystem.gordan([2], [2])
    assert system.names == ("alpha1", "beta1", "u", "v", "r")
    sols = irreducible_solutions(system)
    assert (1, 1, 0, 0, 2) in sols
    assert (1, 0, 2, 0, 0) in sols and (0, 1, 0, 2, 0) in sols
    assert sols == brute_force_irreducible(system, 6)


def test_solutions_are_pairwise_incomparable():
    sols = irreducible_solutions(DiophantineSystem.gordan([2, 4], [4, 8]))
    assert all(DiophantineSystem.gordan([2, 4], [4, 8]).is_solution(x) for x in sols)
    for x, y in itertools.permutations(sols, 2):
        assert not all(a >= b for a, b in zip(x, y))


small_orders = st.lists(st.sampled_from([1, 2, 3]), min_size=1, max_size=2)


@settings(max_examples=15)
@given(small_orders, small_orders)
def test_matches_brute_force(a, b):
    system = DiophantineSystem.gordan(a, b)
    # r can reach lcm(a_i, b_j), so a product of the largest orders covers every component
    bound = max(a) * max(b)
    assert irreducible_solutions(system, cap=bound) == brute_force_irreducible(system, bound)


@settings(max_examples=20)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=2))
def test_random_systems_match_brute_force(rows):
    system = DiophantineSystem(rows)
    try:
        sols = irreducible_solutions(system, cap=6)
    except IncompleteSearchError:
        return
    assert sols == brute_force_irreducible(system, 6)


def test_cap_is_enforced():
    with pytest.raises(IncompleteSearchError):
        irreducible_solutions(DiophantineSystem([[5, -7]]), cap=4)
    assert irreducible_solutions(DiophantineSystem([[5, -7]]), cap=7) == [(7, 5)]


def test_system_validation():
    with pytest.raises(ValueError):
        DiophantineSystem([[1, 2], [3]])
    with pytest.raises(ValueError):
        DiophantineSystem([])
    with pytest.raises(ValueError):
        DiophantineSystem([[1, -1]], names=("x",))
    with pytest.raises(ValueError):
        DiophantineSystem.gordan([-1], [2])
    system = DiophantineSystem([[1, -1]])
    assert system.residual((3, 1)) == (2,)
    assert not system.is_solution((-1, -1))


def test_candidates():
    assert candidate_transvectants([], []) == []
    assert [str(c) for c in candidate_transvectants([0], [])] == ["(f1, 1)_0"]
    quartics = candidate_transvectants([4], [4])
    assert {c.r for c in quartics if c.alpha == (1,) and c.beta == (1,)} == {1, 2, 3, 4}  # r = 0 splits as f1 + g1
    assert CandidateTransvectant((1,), (1,), 4) in quartics
    assert str(CandidateTransvectant((2, 1), (0, 3), 5)) == "(f1^2.f2, g2^3)_5"
