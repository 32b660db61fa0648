"""Subspaces of F_q^n in canonical reduced row echelon form, and the subspace metric."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property, total_ordering
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from .field import FieldSpec

MAX_N = 12
MAX_VECTORS = 2**20

Row = Tuple[int, ...]


class SubspaceError(ValueError):
    pass


class MixedAmbient(SubspaceError):
    pass


class AmbientTooLarge(SubspaceError):
    pass


class EnumerationTooLarge(SubspaceError):
    pass


class NonCanonicalSubspace(SubspaceError):
    pass


@dataclass(frozen=True)
class AmbientSpace:
    field: FieldSpec
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SubspaceError(f"ambient dimension must be positive, got {self.n}")
        if self.n > MAX_N:
            raise AmbientTooLarge(f"n = {self.n} exceeds the cap of {MAX_N}")

    @property
    def q(self) -> int:
        return self.field.order

    def vector(self, coords: Iterable[int]) -> "Vector":
        return Vector(self, tuple(int(c) for c in coords))

    def unit(self, i: int) -> "Vector":
        return self.vector(1 if j == i else 0 for j in range(self.n))

    def zero(self) -> "Subspace":
        return Subspace(self, ())

    def full(self) -> "Subspace":
        return Subspace(self, tuple(self.unit(i).coords for i in range(self.n)))

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.field.to_json()}

    @classmethod
    def from_json(cls, doc: dict) -> "AmbientSpace":
        return cls(FieldSpec.from_json(doc["field"]), int(doc["n"]))

    def __str__(self):
        return f"{self.field}^{self.n}"


@dataclass(frozen=True)
class Vector:
    ambient: AmbientSpace
    coords: Row

    def __post_init__(self):
        if len(self.coords) != self.ambient.n:
            raise SubspaceError(f"vector length {len(self.coords)} != n = {self.ambient.n}")
        q = self.ambient.q
        if any(not 0 <= c < q for c in self.coords):
            raise SubspaceError(f"coordinates must be field indices in [0, {q})")

    def is_zero(self) -> bool:
        return not any(self.coords)


# ---------------------------------------------------------------------------
# Raw Gaussian elimination on tuples of field indices.


def rref_rows(F: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> List[List[int]]:
    """Nonzero rows of the reduced row echelon form, pivots normalised to 1."""
    mat = [list(r) for r in rows]
    add, mul, neg = F.add_table, F.mul_table, F.neg_table
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = F.inv(mat[rank][col])
        prow = [mul[inv][x] for x in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            c = mat[i][col]
            if i != rank and c:
                f = neg[c]
                row = mat[i]
                mat[i] = [add[x][mul[f][y]] for x, y in zip(row, prow)]
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank]


def nullspace(F: FieldSpec, matrix: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """Basis of {c : matrix . c = 0} as a list of length-ncols vectors."""
    red = rref_rows(F, matrix, ncols)
    pivots = [next(j for j, x in enumerate(r) if x) for r in red]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for row, pc in zip(red, pivots):
            vec[pc] = F.neg(row[f])
        basis.append(vec)
    return basis


def _is_rref(rows: Sequence[Row]) -> bool:
    last = -1
    pivots = []
    for r in rows:
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None or lead <= last or r[lead] != 1:
            return False
        pivots.append(lead)
        last = lead
    return all(other[pc] == 0 for i, pc in enumerate(pivots) for k, other in enumerate(rows) if k != i)


@total_ordering
@dataclass(frozen=True)
class Subspace:
    """A subspace held by its canonical RREF basis.

    Equality is basis equality. Ordering is by (dim, pivot columns,
    flattened basis), which is also the enumeration order.
    """

    ambient: AmbientSpace
    basis: Tuple[Row, ...]

    def __post_init__(self):
        n = self.ambient.n
        if any(len(r) != n for r in self.basis) or not _is_rref(self.basis):
            raise NonCanonicalSubspace("basis is not in reduced row echelon form")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    @cached_property
    def sort_key(self):
        return (self.dim, self.pivots, tuple(x for r in self.basis for x in r))

    def __lt__(self, other: "Subspace") -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.sort_key < other.sort_key

    def contains(self, v: Vector) -> bool:
        _same_ambient(self.ambient, v.ambient)
        red = rref_rows(self.ambient.field, list(self.basis) + [v.coords], self.ambient.n)
        return len(red) == self.dim

    def to_json(self) -> dict:
        return {"n": self.ambient.n, "field": self.ambient.field.to_json(), "basis": [list(r) for r in self.basis]}

    def __repr__(self):
        rows = ";".join(" ".join(str(x) for x in r) for r in self.basis)
        return f"Subspace<{self.ambient}, dim {self.dim}: [{rows}]>"


def _same_ambient(*ambients: AmbientSpace) -> AmbientSpace:
    first = ambients[0]
    if any(a != first for a in ambients[1:]):
        raise MixedAmbient("operands live in different ambient spaces")
    return first


def rref(rows: Sequence[Vector]) -> Tuple[Tuple[Row, ...], int]:
    """Canonical RREF of a list of vectors and its rank."""
    if not rows:
        return (), 0
    amb = _same_ambient(*(v.ambient for v in rows))
    red = rref_rows(amb.field, [v.coords for v in rows], amb.n)
    return tuple(tuple(r) for r in red), len(red)


def span(vectors: Iterable[Vector], ambient: Optional[AmbientSpace] = None) -> Subspace:
    vectors = list(vectors)
    if not vectors:
        if ambient is None:
            raise SubspaceError("span of no vectors needs an explicit ambient")
        return ambient.zero()
    amb = _same_ambient(*(v.ambient for v in vectors), *([ambient] if ambient else []))
    basis, _ = rref(vectors)
    return Subspace(amb, basis)


def from_rows(ambient: AmbientSpace, rows: Iterable[Sequence[int]]) -> Subspace:
    """Span of raw coordinate rows."""
    return span([ambient.vector(r) for r in rows], ambient)


def subspace_sum(X: Subspace, Y: Subspace) -> Subspace:
    amb = _same_ambient(X.ambient, Y.ambient)
    red = rref_rows(amb.field, X.basis + Y.basis, amb.n)
    return Subspace(amb, tuple(tuple(r) for r in red))


def subspace_intersect(X: Subspace, Y: Subspace) -> Subspace:
    # Coefficient vectors (a, b) with a.X + b.Y = 0 give a.X in both spaces.
    amb = _same_ambient(X.ambient, Y.ambient)
    if X.dim == 0 or Y.dim == 0:
        return amb.zero()
    F = amb.field
    stacked = X.basis + Y.basis
    transposed = [[row[j] for row in stacked] for j in range(amb.n)]
    kernel = nullspace(F, transposed, len(stacked))
    vecs = []
    for c in kernel:
        v = [0] * amb.n
        for coef, row in zip(c[: X.dim], X.basis):
            if coef:
                v = [F.add(x, F.mul(coef, y)) for x, y in zip(v, row)]
        vecs.append(v)
    red = rref_rows(F, vecs, amb.n)
    return Subspace(amb, tuple(tuple(r) for r in red))


def subspace_distance(X: Subspace, Y: Subspace) -> int:
    """d_S(X, Y) = dim X + dim Y - 2 dim(X & Y)."""
    return X.dim + Y.dim - 2 * subspace_intersect(X, Y).dim


def is_disjoint(X: Subspace, Y: Subspace) -> bool:
    return subspace_intersect(X, Y).dim == 0


def is_contained(X: Subspace, Y: Subspace) -> bool:
    return subspace_sum(X, Y).dim == Y.dim


def vectors_of(X: Subspace) -> List[Vector]:
    """Every member vector of X, each exactly once."""
    amb = X.ambient
    F = amb.field
    if amb.q**X.dim > MAX_VECTORS:
        raise EnumerationTooLarge(f"{amb.q}^{X.dim} vectors is too many to list")
    out = []
    for coeffs in product(range(amb.q), repeat=X.dim):
        v = [0] * amb.n
        for c, row in zip(coeffs, X.basis):
            if c:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, row)]
        out.append(Vector(amb, tuple(v)))
    return out


def subspace_from_json(doc: dict, strict: bool = True) -> Subspace:
    """Read a subspace document.

    Non-RREF input is rejected with NonCanonicalSubspace when ``strict``;
    otherwise it is re-canonicalised and a warning is issued.
    """
    amb = AmbientSpace.from_json(doc)
    rows = tuple(tuple(int(x) for x in r) for r in doc["basis"])
    try:
        return Subspace(amb, rows)
    except NonCanonicalSubspace:
        if strict:
            raise
        warnings.warn("subspace basis was not canonical; re-canonicalised", stacklevel=2)
        return from_rows(amb, rows)


def parse_vector(ambient: AmbientSpace, text: str) -> Vector:
    return ambient.vector(int(tok) for tok in text.split())


def parse_subspace(ambient: AmbientSpace, text: str) -> Subspace:
    """Span of semicolon-separated vectors, e.g. ``"1 0 0;0 1 1"``."""
    parts = [p for p in text.split(";") if p.strip()]
    return span([parse_vector(ambient, p) for p in parts], ambient)
