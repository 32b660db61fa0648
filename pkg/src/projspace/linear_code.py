"""Linear codes in P_q(n): codeword lists with an explicit Cayley table.

The operation is stored as a table of codeword indices because the
codeword set alone does not pin it down. Index 0 is always the trivial
space, so identity checks are positional.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .subspace import (
    AmbientSpace,
    Subspace,
    from_rows,
    is_contained,
    is_disjoint,
    span,
    subspace_distance,
    subspace_from_json,
    subspace_sum,
)

EXHAUSTIVE_LIMIT = 64
SAMPLE_TRIPLES = 10**6


class LinearCodeError(ValueError):
    pass


class MalformedCode(LinearCodeError):
    pass


class DependentBasis(LinearCodeError):
    pass


class WrongCount(LinearCodeError):
    pass


class FullSpaceAbsent(LinearCodeError):
    pass


class NotBasisDerived(LinearCodeError):
    pass


class BoundViolation(AssertionError):
    """A verified code with the full space broke |C_k| <= C(n, k)."""


@dataclass(frozen=True)
class LinearCode:
    ambient: AmbientSpace
    codewords: Tuple[Subspace, ...]
    table: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cws = tuple(self.codewords)
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "codewords", cws)
        object.__setattr__(self, "table", table)
        if not cws:
            raise MalformedCode("a code needs at least the trivial codeword")
        if any(c.ambient != self.ambient for c in cws):
            raise MalformedCode("codewords from a different ambient space")
        if cws[0].dim != 0:
            raise MalformedCode("codeword 0 must be the trivial space")
        if len(set(cws)) != len(cws):
            raise MalformedCode("codewords are not distinct")
        if len(table) != len(cws) or any(len(row) != len(cws) for row in table):
            raise MalformedCode(f"table must be {len(cws)}x{len(cws)}")

    @property
    def size(self) -> int:
        return len(self.codewords)

    def __len__(self):
        return len(self.codewords)

    @cached_property
    def _positions(self) -> Dict[Subspace, int]:
        return {c: i for i, c in enumerate(self.codewords)}

    def index_of(self, X: Subspace) -> Optional[int]:
        return self._positions.get(X)

    @property
    def full_index(self) -> Optional[int]:
        return self.index_of(self.ambient.full())

    def dims(self) -> List[int]:
        return [c.dim for c in self.codewords]

    @cached_property
    def _dist_cache(self) -> dict:
        return {}

    def distance(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        d = self._dist_cache.get(key)
        if d is None:
            d = subspace_distance(self.codewords[i], self.codewords[j])
            self._dist_cache[key] = d
        return d

    def with_table(self, table) -> "LinearCode":
        return LinearCode(self.ambient, self.codewords, table)

    def content_digest(self) -> str:
        payload = json.dumps(
            {"codewords": [[list(r) for r in c.basis] for c in self.codewords], "table": self.table},
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()

    def to_json(self, report: Optional["AxiomReport"] = None) -> dict:
        doc = {
            "ambient": self.ambient.to_json(),
            "codewords": [c.to_json() for c in self.codewords],
            "table": [list(row) for row in self.table],
        }
        if report is not None:
            doc["verified"] = report.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: dict, strict: bool = True) -> "LinearCode":
        amb = AmbientSpace.from_json(doc["ambient"])
        cws = [subspace_from_json(c, strict=strict) for c in doc["codewords"]]
        return cls(amb, tuple(cws), tuple(tuple(r) for r in doc["table"]))


@dataclass
class Verdict:
    """Outcome of one executable lemma check, with a witness when it fails."""

    ok: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.ok


@dataclass
class AxiomReport:
    closure_ok: bool = True
    associativity_ok: bool = True
    commutativity_ok: bool = True
    identity_ok: bool = True
    involution_ok: bool = True
    translation_invariance_ok: bool = True
    first_violation: Optional[dict] = None
    mode: str = "exhaustive"
    triples_checked: int = 0

    FLAGS = (
        "closure_ok",
        "identity_ok",
        "commutativity_ok",
        "involution_ok",
        "associativity_ok",
        "translation_invariance_ok",
    )

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) for f in self.FLAGS)

    def __bool__(self):
        return self.ok

    def _fail(self, flag: str, indices, values) -> None:
        setattr(self, flag, False)
        if self.first_violation is None:
            self.first_violation = {"axiom": flag[:-3], "indices": list(indices), "values": list(values)}

    def to_json(self) -> dict:
        doc = {f: getattr(self, f) for f in self.FLAGS}
        doc.update(all_ok=self.ok, mode=self.mode, triples_checked=self.triples_checked)
        doc["first_violation"] = self.first_violation
        return doc


def _triples(code: LinearCode, seed: int, sample_size: int, exhaustive_limit: int):
    size = code.size
    if size <= exhaustive_limit:
        return "exhaustive", product(range(size), repeat=3)
    rng = random.Random(int(code.content_digest(), 16) ^ seed)
    return "sampled", ((rng.randrange(size), rng.randrange(size), rng.randrange(size)) for _ in range(sample_size))


def verify_linear(
    code: LinearCode,
    seed: int = 0,
    sample_size: int = SAMPLE_TRIPLES,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> AxiomReport:
    """Check the four linear-code axioms literally against the table.

    Pair axioms are always exhaustive. Triple axioms (associativity and
    translation invariance of d_S) are exhaustive up to ``exhaustive_limit``
    codewords and otherwise run on a sample seeded from the code content.
    """
    t = code.table
    size = code.size
    report = AxiomReport()

    for i, j in product(range(size), repeat=2):
        if not 0 <= t[i][j] < size:
            report._fail("closure_ok", (i, j), (t[i][j],))
            break
    for j in range(size):
        if t[0][j] != j or t[j][0] != j:
            report._fail("identity_ok", (0, j), (t[0][j], t[j][0]))
            break
    for i, j in product(range(size), repeat=2):
        if t[i][j] != t[j][i]:
            report._fail("commutativity_ok", (i, j), (t[i][j], t[j][i]))
            break
    for i in range(size):
        if t[i][i] != 0:
            report._fail("involution_ok", (i, i), (t[i][i],))
            break

    if not report.closure_ok:
        # Triple axioms cannot be evaluated on out-of-range entries.
        report.associativity_ok = report.translation_invariance_ok = False
        return report

    mode, triples = _triples(code, seed, sample_size, exhaustive_limit)
    report.mode = mode
    if mode == "exhaustive":
        dist = [[code.distance(i, j) for j in range(size)] for i in range(size)]
        d = lambda i, j: dist[i][j]  # noqa: E731
    else:
        d = code.distance
    count = 0
    assoc_ok = trans_ok = True
    for i, j, k in triples:
        count += 1
        if assoc_ok:
            left, right = t[t[i][j]][k], t[i][t[j][k]]
            if left != right:
                report._fail("associativity_ok", (i, j, k), (left, right))
                assoc_ok = False
        if trans_ok:
            before, after = d(i, j), d(t[i][k], t[j][k])
            if before != after:
                report._fail("translation_invariance_ok", (i, j, k), (before, after))
                trans_ok = False
        if not (assoc_ok or trans_ok):
            break
    report.triples_checked = count
    return report


def boxplus(code: LinearCode, i: int, j: int) -> int:
    if not (0 <= i < code.size and 0 <= j < code.size):
        raise IndexError(f"codeword index out of range 0..{code.size - 1}")
    return code.table[i][j]


def derive_from_basis(basis: Sequence[Subspace]) -> LinearCode:
    """The code of spans of all subsets of n independent lines.

    Codeword i is the span of the lines whose bits are set in i, so the
    operation is XOR of indices.
    """
    basis = list(basis)
    if not basis:
        raise DependentBasis("empty basis")
    amb = basis[0].ambient
    n = amb.n
    if len(basis) != n or any(b.ambient != amb or b.dim != 1 for b in basis):
        raise DependentBasis(f"need exactly {n} one-dimensional subspaces of {amb}")
    if span([amb.vector(b.basis[0]) for b in basis]).dim != n:
        raise DependentBasis("the lines are linearly dependent")
    codewords = []
    for mask in range(1 << n):
        rows = [b.basis[0] for i, b in enumerate(basis) if mask >> i & 1]
        codewords.append(from_rows(amb, rows))
    if len(set(codewords)) != 1 << n:
        raise WrongCount(f"expected {1 << n} distinct codewords, got {len(set(codewords))}")
    table = tuple(tuple(i ^ j for j in range(1 << n)) for i in range(1 << n))
    return LinearCode(amb, tuple(codewords), table)


def derive_from_vectors(ambient: AmbientSpace, vectors: Sequence[Sequence[int]]) -> LinearCode:
    return derive_from_basis([from_rows(ambient, [v]) for v in vectors])


def check_dimension_rule(code: LinearCode) -> Verdict:
    """dim(X [+] Y) == d_S(X, Y) for every pair of codewords."""
    t, cw = code.table, code.codewords
    for i, j in product(range(code.size), repeat=2):
        d = code.distance(i, j)
        if cw[t[i][j]].dim != d:
            return Verdict(False, {"pair": [i, j], "dim": cw[t[i][j]].dim, "distance": d})
    return Verdict(True)


def check_disjoint_sum(code: LinearCode) -> Verdict:
    t, cw = code.table, code.codewords
    for i, j in product(range(code.size), repeat=2):
        if is_disjoint(cw[i], cw[j]) and cw[t[i][j]] != subspace_sum(cw[i], cw[j]):
            return Verdict(False, {"pair": [i, j], "product": t[i][j]})
    return Verdict(True)


def check_splitting(code: LinearCode) -> Verdict:
    """For X inside Y, Z = X [+] Y meets X trivially and X + Z = Y."""
    t, cw = code.table, code.codewords
    for i, j in product(range(code.size), repeat=2):
        X, Y = cw[i], cw[j]
        if not is_contained(X, Y):
            continue
        Z = cw[t[i][j]]
        if not is_disjoint(Z, X) or subspace_sum(X, Z) != Y:
            return Verdict(False, {"pair": [i, j], "split": t[i][j]})
    return Verdict(True)


def check_cyclic(code: LinearCode) -> Verdict:
    """X [+] Y = Z implies Z [+] Y = X and Z [+] X = Y."""
    t = code.table
    for i, j in product(range(code.size), repeat=2):
        z = t[i][j]
        if t[z][j] != i or t[z][i] != j:
            return Verdict(False, {"pair": [i, j], "product": z})
    return Verdict(True)


@dataclass
class OneDimensionalReport:
    indices: List[int]
    subspaces: List[Subspace]
    independent: bool
    spans_closed: bool
    witness: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.independent and self.spans_closed

    def __bool__(self):
        return self.ok


def one_dimensional_codewords(code: LinearCode) -> OneDimensionalReport:
    """The one-dimensional codewords, whether they are independent, and
    whether the span of every subset of them is again a codeword."""
    amb = code.ambient
    idx = [i for i, c in enumerate(code.codewords) if c.dim == 1]
    lines = [code.codewords[i] for i in idx]
    vecs = [amb.vector(c.basis[0]) for c in lines]
    independent = span(vecs, amb).dim == len(vecs)
    report = OneDimensionalReport(idx, lines, independent, True)
    if not independent:
        report.witness = {"dependent_lines": idx}
    for mask in range(1 << len(lines)):
        sub = span([v for k, v in enumerate(vecs) if mask >> k & 1], amb)
        if code.index_of(sub) is None:
            report.spans_closed = False
            report.witness = {"missing_span_of": [idx[k] for k in range(len(idx)) if mask >> k & 1]}
            break
    return report


def _closure(code: LinearCode, generators: Sequence[int]) -> set:
    group = {0}
    for g in generators:
        group |= {code.table[x][g] for x in group}
    return group


@dataclass
class BasisVerdict:
    derived: bool
    basis: Optional[List[Subspace]] = None
    basis_indices: Optional[List[int]] = None

    def __bool__(self):
        return self.derived


def is_derived_from_fixed_basis(code: LinearCode) -> BasisVerdict:
    """True when the code is generated by n of its one-dimensional codewords."""
    n = code.ambient.n
    idx = [i for i, c in enumerate(code.codewords) if c.dim == 1]
    if len(idx) != n:
        return BasisVerdict(False)
    if len(_closure(code, idx)) != code.size:
        return BasisVerdict(False)
    return BasisVerdict(True, [code.codewords[i] for i in idx], idx)


def phi_map(code: LinearCode) -> List[int]:
    """Index permutation i -> table[full][i]."""
    f = code.full_index
    if f is None:
        raise FullSpaceAbsent("the full space is not a codeword")
    return list(code.table[f])


def check_phi_pairing(code: LinearCode) -> Verdict:
    """phi is an involution exchanging dimensions k and n - k, and for
    C in C_k, D in C_{n-k}: C & D = 0 exactly when phi(C) = D."""
    pi = phi_map(code)
    n = code.ambient.n
    cw = code.codewords
    for i in range(code.size):
        if pi[pi[i]] != i:
            return Verdict(False, {"not_involution_at": i})
        if cw[pi[i]].dim != n - cw[i].dim:
            return Verdict(False, {"dimension_mismatch_at": i})
    for i, j in product(range(code.size), repeat=2):
        if cw[i].dim + cw[j].dim != n:
            continue
        if is_disjoint(cw[i], cw[j]) != (pi[i] == j):
            return Verdict(False, {"pair": [i, j]})
    return Verdict(True)


@dataclass
class DimensionProfile:
    counts: List[int]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def is_palindromic(self) -> bool:
        return self.counts == self.counts[::-1]

    def within_binomials(self) -> bool:
        n = len(self.counts) - 1
        return all(c <= comb(n, k) for k, c in enumerate(self.counts))

    def to_json(self) -> dict:
        return {"counts": list(self.counts), "total": self.total}


def dimension_profile(code: LinearCode, check_bound: bool = False) -> DimensionProfile:
    """Counts of codewords by dimension.

    With ``check_bound``, a code holding the full space must satisfy
    counts[k] <= C(n, k); the caller is responsible for having verified
    linearity first.
    """
    n = code.ambient.n
    counts = [0] * (n + 1)
    for c in code.codewords:
        counts[c.dim] += 1
    profile = DimensionProfile(counts)
    if check_bound and code.full_index is not None and not profile.within_binomials():
        raise BoundViolation(f"profile {counts} exceeds binomial coefficients")
    return profile


def basis_masks(code: LinearCode, basis_indices: Sequence[int]) -> List[int]:
    """For each codeword, the bitmask of basis lines it contains."""
    lines = [code.codewords[i] for i in basis_indices]
    return [sum(1 << k for k, L in enumerate(lines) if is_contained(L, c)) for c in code.codewords]


def boolean_lattice_isomorphism(code: LinearCode) -> bool:
    """Inclusion among codewords mirrors inclusion among basis subsets."""
    verdict = is_derived_from_fixed_basis(code)
    if not verdict:
        raise NotBasisDerived("code is not derived from a fixed basis")
    masks = basis_masks(code, verdict.basis_indices)
    if sorted(masks) != list(range(1 << code.ambient.n)):
        return False
    cw = code.codewords
    for i, j in product(range(code.size), repeat=2):
        if (masks[i] & ~masks[j] == 0) != is_contained(cw[i], cw[j]):
            return False
    return True

