import pytest

from conftest import ambient
from oracles import brute_gaussian
from projspace.enumeration import (
    DomainError,
    enumerate_grassmannian,
    enumerate_projective_space,
    gaussian_binomial,
    projective_space_size,
)
from projspace.field import field_from_order
from projspace.subspace import EnumerationTooLarge, from_rows


def test_gaussian_binomial_examples():
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35


@pytest.mark.parametrize(
    "q, n, k",
    [(2, 3, 1), (2, 4, 2), (2, 4, 3), (2, 5, 2), (3, 2, 1), (3, 3, 1), (3, 3, 2), (4, 2, 1), (4, 3, 2), (5, 2, 1)],
)
def test_gaussian_binomial_against_span_oracle(q, n, k):
    assert gaussian_binomial(n, k, q) == brute_gaussian(field_from_order(q), n, k)


def test_gaussian_binomial_q_pascal():
    for q in (2, 3, 4, 5):
        for n in range(1, 9):
            for k in range(1, n):
                assert gaussian_binomial(n, k, q) == gaussian_binomial(n - 1, k - 1, q) + q**k * gaussian_binomial(
                    n - 1, k, q
                )


@pytest.mark.parametrize("args", [(3, 4, 2), (3, -1, 2), (3, 1, 1)])
def test_gaussian_binomial_domain(args):
    with pytest.raises(DomainError):
        gaussian_binomial(*args)


def test_lines_of_f2_2():
    A = ambient(2, 2)
    lines = list(enumerate_grassmannian(A, 1))
    assert set(lines) == {from_rows(A, [(0, 1)]), from_rows(A, [(1, 0)]), from_rows(A, [(1, 1)])}


def test_grassmannian_counts():
    assert sum(1 for _ in enumerate_grassmannian(ambient(2, 4), 2)) == 35
    assert len(list(enumerate_grassmannian(ambient(3, 2), 1))) == 4
    assert len(enumerate_grassmannian(ambient(3, 2), 1)) == 4


@pytest.mark.parametrize("n, expected", [(2, 5), (3, 16), (4, 67)])
def test_projective_space_sizes(n, expected):
    assert sum(1 for _ in enumerate_projective_space(ambient(2, n))) == expected
    assert projective_space_size(n, 2) == expected


def test_canonical_unique_increasing():
    for q in (2, 3, 4, 5):
        for n in range(1, 5):
            if projective_space_size(n, q) > 10**5:
                continue
            A = ambient(q, n)
            P = list(enumerate_projective_space(A))
            assert len(P) == len(set(P)) == projective_space_size(n, q)
            assert all(a < b for a, b in zip(P, P[1:]))
            for X in P:
                assert from_rows(A, X.basis) == X


def test_deterministic_order():
    A = ambient(3, 3)
    assert list(enumerate_projective_space(A)) == list(enumerate_projective_space(A))


def test_too_large():
    with pytest.raises(EnumerationTooLarge):
        enumerate_grassmannian(ambient(2, 12), 6)
    with pytest.raises(EnumerationTooLarge):
        next(enumerate_projective_space(ambient(3, 12)))
