from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from crnms.linalg import feasible_nonnegative, nullspace, rank, rref
from oracles import consistent_oracle, rank_oracle

small_ints = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == rank_oracle(m)


@given(matrices())
def test_integer_and_fraction_paths_agree(m):
    # Fraction entries force the rref path; ints take the fraction-free path.
    assert rank(m) == rank([[Fraction(v) for v in row] for row in m])


@given(matrices())
def test_nullspace_dimension_and_kernel(m):
    basis = nullspace(m)
    n = len(m[0])
    assert len(basis) == n - rank(m)
    for vec in basis:
        for row in m:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_rref_of_identity():
    reduced, pivots = rref([[2, 0], [0, 3]])
    assert reduced == [[1, 0], [0, 1]]
    assert pivots == [0, 1]


@given(st.lists(st.lists(small_ints, min_size=2, max_size=2), min_size=1, max_size=5))
def test_positive_dependency_matches_lp(vectors):
    # Gamma lam = 0 with lam >= 1, written as Gamma mu = -Gamma 1 with mu >= 0.
    gamma = [list(col) for col in zip(*vectors)]
    shift = [-sum(row) for row in gamma]
    mu = feasible_nonnegative(gamma, shift)
    assert (mu is not None) == consistent_oracle(vectors)
    if mu is not None:
        assert all(x >= 0 for x in mu)
        for row, b in zip(gamma, shift):
            assert sum(a * x for a, x in zip(row, mu)) == b


def test_infeasible_system():
    assert feasible_nonnegative([[1, 1]], [-1]) is None
