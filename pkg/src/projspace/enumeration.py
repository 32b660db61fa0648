"""Streaming enumeration of Grassmannians P_q(n, k) and of P_q(n)."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from .subspace import AmbientSpace, EnumerationTooLarge, Subspace

MAX_ENUMERATION = 10**7


class DomainError(ValueError):
    pass


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n or q < 2:
        raise DomainError(f"need 0 <= k <= n and q >= 2, got n={n}, k={k}, q={q}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def projective_space_size(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


class GrassmannianIterator:
    """Yields each k-dimensional subspace once, in increasing canonical order.

    Pivot sets are visited in lexicographic order; within a pivot set the
    free entries count upward in base q, first free entry most significant.
    """

    def __init__(self, ambient: AmbientSpace, k: int):
        n, q = ambient.n, ambient.q
        self.count = gaussian_binomial(n, k, q)
        if self.count > MAX_ENUMERATION:
            raise EnumerationTooLarge(f"P_{q}({n},{k}) has {self.count} members")
        self.ambient = ambient
        self.k = k
        self._gen = self._generate()

    def _generate(self) -> Iterator[Subspace]:
        n, k, q = self.ambient.n, self.k, self.ambient.q
        for pivots in combinations(range(n), k):
            slots = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
            for values in product(range(q), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, c), v in zip(slots, values):
                    rows[r][c] = v
                yield Subspace(self.ambient, tuple(tuple(r) for r in rows))

    def __iter__(self):
        return self

    def __next__(self) -> Subspace:
        return next(self._gen)

    def __len__(self):
        return self.count


def enumerate_grassmannian(ambient: AmbientSpace, k: int) -> GrassmannianIterator:
    return GrassmannianIterator(ambient, k)


def enumerate_projective_space(ambient: AmbientSpace) -> Iterator[Subspace]:
    total = projective_space_size(ambient.n, ambient.q)
    if total > MAX_ENUMERATION:
        raise EnumerationTooLarge(f"P_{ambient.q}({ambient.n}) has {total} members")
    for k in range(ambient.n + 1):
        yield from GrassmannianIterator(ambient, k)
