"""Exhaustive search for linear codes, and instance verifiers built on it.

A linear code of size 2^r is an elementary abelian 2-group, so it can be
written as a labelling L of the bitmasks 0 .. 2^r - 1 by subspaces, with
XOR as the group operation. Translation invariance is then equivalent to

    d_S(L(a), L(b)) == dim L(a ^ b)    for all masks a, b,

which the search checks triple by triple as labels are placed.

Symmetry is broken by insisting on canonical generators: the generator at
bit j is the smallest codeword (in subspace order) outside the subgroup
spanned by the lower bits. Every (codeword set, operation) pair then has a
single labelling, and every prefix of a canonical labelling is canonical.
With ``require_full_space`` the full space is pinned to bit 0 and the rule
applies from bit 1 on.
"""

from __future__ import annotations

import logging
import os
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from .enumeration import enumerate_projective_space, projective_space_size
from .field import FieldSpec
from .linear_code import (
    FullSpaceAbsent,
    LinearCode,
    LinearCodeError,
    dimension_profile,
    is_derived_from_fixed_basis,
    phi_map,
    verify_linear,
)
from .subspace import (
    AmbientSpace,
    AmbientTooLarge,
    Subspace,
    is_disjoint,
    subspace_distance,
    subspace_sum,
)

log = logging.getLogger(__name__)

MAX_SEARCH_SUBSPACES = 10**5
DEFAULT_NODE_BUDGET = 10**8
NONLINEAR_EXHAUSTIVE_LIMIT = 64


class DimensionMismatch(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    pass


class _BudgetTripped(Exception):
    pass


@dataclass(frozen=True)
class SearchConfig:
    ambient: AmbientSpace
    require_full_space: bool = True
    max_group_rank: Optional[int] = None
    worker_count: int = 1
    node_budget: Optional[int] = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        total = projective_space_size(self.ambient.n, self.ambient.q)
        if total > MAX_SEARCH_SUBSPACES:
            raise AmbientTooLarge(f"P_{self.ambient.q}({self.ambient.n}) has {total} subspaces")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        if self.max_group_rank is not None and self.max_group_rank < (1 if self.require_full_space else 0):
            raise ValueError("max_group_rank too small for the requested search")

    @property
    def rank_cap(self) -> int:
        total = projective_space_size(self.ambient.n, self.ambient.q)
        cap = total.bit_length() - 1
        return cap if self.max_group_rank is None else min(cap, self.max_group_rank)

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "require_full_space": self.require_full_space,
            "max_group_rank": self.max_group_rank,
            "node_budget": self.node_budget,
        }


class Universe:
    """All of P_q(n) in canonical order, with cached pairwise distances."""

    def __init__(self, ambient: AmbientSpace):
        self.ambient = ambient
        self.subspaces: List[Subspace] = list(enumerate_projective_space(ambient))
        self.index = {s: i for i, s in enumerate(self.subspaces)}
        self.dims = [s.dim for s in self.subspaces]
        self.by_dim = [[i for i, d in enumerate(self.dims) if d == k] for k in range(ambient.n + 1)]
        self.full = self.index[ambient.full()]
        self._dist = {}
        self._sum = {}

    def __len__(self):
        return len(self.subspaces)

    def dist(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        d = self._dist.get(key)
        if d is None:
            d = subspace_distance(self.subspaces[i], self.subspaces[j])
            self._dist[key] = d
        return d

    def direct_sum(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        s = self._sum.get(key)
        if s is None:
            s = self.index[subspace_sum(self.subspaces[i], self.subspaces[j])]
            self._sum[key] = s
        return s


_UNIVERSES = {}


def _universe(ambient: AmbientSpace) -> Universe:
    u = _UNIVERSES.get(ambient)
    if u is None:
        u = _UNIVERSES[ambient] = Universe(ambient)
    return u


class _Engine:
    """Depth-first construction of canonical labellings."""

    def __init__(self, universe: Universe, pinned_full: bool, rank_cap: int, budget: Optional[int]):
        self.u = universe
        self.pinned = pinned_full
        self.first_free = 1 if pinned_full else 0
        self.rank_cap = rank_cap
        self.budget = budget
        self.nodes = 0
        self.labels: List[int] = [0]
        self.used = bytearray(len(universe))
        self.used[0] = 1
        if pinned_full:
            self._place(universe.full)

    def _place(self, idx: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetTripped
        self.labels.append(idx)
        self.used[idx] = 1

    def _unplace(self) -> None:
        self.used[self.labels.pop()] = 0

    @property
    def rank(self) -> int:
        return len(self.labels).bit_length() - 1

    def generator_choices(self) -> List[int]:
        rank = self.rank
        if rank >= self.rank_cap:
            return []
        floor = self.labels[1 << (rank - 1)] if rank - 1 >= self.first_free else 0
        return [g for g in range(floor + 1, len(self.u)) if not self.used[g]]

    def root(self) -> Tuple[int, ...]:
        return tuple(self.labels)

    def explore(self, first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        """Yield completed labellings below the current node.

        With ``first`` only the subtree whose next generator is ``first``
        is explored, and the current node itself is not yielded.
        """
        if first is None:
            yield tuple(self.labels)
            choices = self.generator_choices()
        else:
            choices = [first]
        for g in choices:
            self._place(g)
            yield from self._fill(g, 1)
            self._unplace()

    def _candidates(self, x: int, g: int, s: int) -> Sequence[int]:
        u = self.u
        ls = self.labels[s]
        target = u.dist(g, ls)
        ordered = (x.bit_length() - 1) >= self.first_free
        if target == u.dims[g] + u.dims[ls]:
            # Disjoint pair: the product is forced to be the direct sum.
            c = u.direct_sum(g, ls)
            return [c] if (not ordered or c > g) else []
        pool = u.by_dim[target]
        return pool[bisect_right(pool, g):] if ordered else pool

    def _fill(self, g: int, s: int) -> Iterator[Tuple[int, ...]]:
        top = len(self.labels) - 1  # == 2^rank - 1 after the generator
        half = 1 << (top.bit_length() - 1)
        if s == half:
            yield from self.explore()
            return
        x = half + s
        u = self.u
        labels = self.labels
        dims = u.dims
        checks = [(a, x ^ a) for a in range(1, x) if (x ^ a) < x and a < (x ^ a)]
        for c in self._candidates(x, g, s):
            if self.used[c]:
                continue
            ok = True
            dc = dims[c]
            for a, b in checks:
                # The triple {a, b, x}: every pair's distance is the third's dimension.
                la, lb = labels[a], labels[b]
                if u.dist(c, la) != dims[lb] or u.dist(c, lb) != dims[la] or u.dist(la, lb) != dc:
                    ok = False
                    break
            if not ok:
                continue
            self._place(c)
            yield from self._fill(g, s + 1)
            self._unplace()


def _labels_to_code(universe: Universe, labels: Sequence[int]) -> LinearCode:
    size = len(labels)
    table = tuple(tuple(i ^ j for j in range(size)) for i in range(size))
    return LinearCode(universe.ambient, tuple(universe.subspaces[i] for i in labels), table)


def _run_subtree(args) -> Tuple[List[Tuple[int, ...]], int, bool]:
    field_doc, n, pinned, rank_cap, budget, first = args
    universe = _universe(AmbientSpace(FieldSpec.from_json(field_doc), n))
    engine = _Engine(universe, pinned, rank_cap, budget)
    found = []
    try:
        for labels in engine.explore(first):
            found.append(labels)
    except _BudgetTripped:
        return found, engine.nodes, True
    return found, engine.nodes, False


class CodeStream:
    """Iterable over every linear code matching a config, one per codeword set.

    After iteration ``exhaustive`` tells whether the node budget held and
    ``nodes_explored`` counts placed labels.
    """

    def __init__(self, config: SearchConfig):
        self.config = config
        self.universe = _universe(config.ambient)
        self.nodes_explored = 0
        self.exhaustive: Optional[bool] = None

    def __iter__(self) -> Iterator[LinearCode]:
        cfg = self.config
        engine = _Engine(self.universe, cfg.require_full_space, cfg.rank_cap, cfg.node_budget)
        seen = set()
        self.exhaustive = False
        try:
            for labels in engine.explore():
                key = frozenset(labels)
                if key not in seen:
                    seen.add(key)
                    yield _labels_to_code(self.universe, labels)
                self.nodes_explored = engine.nodes
        except _BudgetTripped:
            self.nodes_explored = cfg.node_budget
            return
        self.nodes_explored = engine.nodes
        self.exhaustive = True


def enumerate_linear_codes(config: SearchConfig) -> CodeStream:
    return CodeStream(config)


@dataclass
class SearchResult:
    config: SearchConfig
    max_cardinality: int
    extremal_codes: List[LinearCode]
    all_extremal_basis_derived: bool
    nodes_explored: int
    exhaustive: bool
    codes_found: int
    size_histogram: dict = field(default_factory=dict)

    def to_json(self, seed: int = 0) -> dict:
        return {
            "config": self.config.to_json(),
            "max_cardinality": self.max_cardinality,
            "exhaustive": self.exhaustive,
            "nodes_explored": self.nodes_explored,
            "codes_found": self.codes_found,
            "size_histogram": {str(k): v for k, v in sorted(self.size_histogram.items())},
            "all_extremal_basis_derived": self.all_extremal_basis_derived,
            "extremal_count": len(self.extremal_codes),
            "extremal_codes": [c.to_json(verify_linear(c, seed=seed)) for c in self.extremal_codes],
        }


def _subtree_jobs(config: SearchConfig, universe: Universe):
    engine = _Engine(universe, config.require_full_space, config.rank_cap, None)
    return engine.root(), engine.generator_choices()


def run_search(config: SearchConfig) -> SearchResult:
    """Explore all canonical labellings and summarise the largest codes.

    The first free generator splits the tree into subtrees, run in order
    or in parallel; results merge in subtree order so the outcome does not
    depend on the worker count. If the budget trips inside a subtree, that
    subtree's codes are dropped and the result is marked non-exhaustive.
    """
    universe = _universe(config.ambient)
    root, firsts = _subtree_jobs(config, universe)
    budget = config.node_budget
    base_nodes = 1 if config.require_full_space else 0
    field_doc = config.ambient.field.to_json()
    n = config.ambient.n

    def job(first, remaining):
        cap = None if remaining is None else remaining + base_nodes
        return (field_doc, n, config.require_full_space, config.rank_cap, cap, first)

    labellings = [root]
    total = base_nodes
    exhaustive = True
    if config.worker_count > 1 and len(firsts) > 1:
        with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
            outcomes = list(pool.map(_run_subtree, [job(f, budget) for f in firsts]))
    else:
        outcomes = None
    for pos, first in enumerate(firsts):
        if outcomes is not None:
            found, nodes, tripped = outcomes[pos]
        else:
            remaining = None if budget is None else budget - total
            found, nodes, tripped = _run_subtree(job(first, remaining))
        # The pinned full space was counted at the root, not in the subtree.
        nodes -= base_nodes
        if tripped or (budget is not None and total + nodes > budget):
            exhaustive = False
            total = budget
            break
        total += nodes
        labellings.extend(found)
        log.info("subtree %d/%d done, %d nodes so far", pos + 1, len(firsts), total)

    by_set = {}
    for labels in labellings:
        by_set.setdefault(frozenset(labels), labels)
    histogram = {}
    max_size = 0
    for labels in by_set.values():
        size = len(labels)
        histogram[size] = histogram.get(size, 0) + 1
        max_size = max(max_size, size)
        if universe.full in labels:
            counts = [0] * (n + 1)
            for i in labels:
                counts[universe.dims[i]] += 1
            if any(c > comb(n, k) for k, c in enumerate(counts)):
                # Cross-check on the real code object before raising.
                dimension_profile(_labels_to_code(universe, labels), check_bound=True)
    extremal = sorted((l for l in by_set.values() if len(l) == max_size), key=lambda l: sorted(l))
    codes = [_labels_to_code(universe, l) for l in extremal]
    return SearchResult(
        config=config,
        max_cardinality=max_size,
        extremal_codes=codes,
        all_extremal_basis_derived=all(is_derived_from_fixed_basis(c).derived for c in codes),
        nodes_explored=total,
        exhaustive=exhaustive,
        codes_found=len(by_set),
        size_histogram=histogram,
    )


def max_linear_code_with_full_space(config: SearchConfig) -> SearchResult:
    if not config.require_full_space:
        raise ValueError("max_linear_code_with_full_space needs require_full_space=True")
    return run_search(config)


@dataclass
class NonlinearityRecord:
    q: int
    n: int
    size: int
    method: str
    nonlinear: bool
    reason: str
    nodes_explored: Optional[int] = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def verify_nonlinearity_of_full_projective_space(
    ambient: AmbientSpace, node_budget: Optional[int] = DEFAULT_NODE_BUDGET
) -> NonlinearityRecord:
    """Decide whether P_q(n) itself can carry a linear-code operation.

    A linear code is an elementary abelian 2-group, so a size that is not a
    power of two settles it. Otherwise every operation is searched for.
    """
    size = projective_space_size(ambient.n, ambient.q)
    if size & (size - 1):
        return NonlinearityRecord(
            ambient.q, ambient.n, size, "counting", True, f"|P| = {size} is not a power of 2"
        )
    if size > NONLINEAR_EXHAUSTIVE_LIMIT:
        raise AmbientTooLarge(f"|P| = {size} is too large for the exhaustive branch")
    rank = size.bit_length() - 1
    universe = _universe(ambient)
    engine = _Engine(universe, False, rank, node_budget)
    witness = None
    try:
        for labels in engine.explore():
            if len(labels) == size:
                witness = labels
                break
    except _BudgetTripped:
        raise BudgetExhausted("node budget exhausted before the exhaustive branch finished") from None
    if witness is not None:
        return NonlinearityRecord(
            ambient.q, ambient.n, size, "exhaustive", False, "found a valid operation on all of P", engine.nodes
        )
    return NonlinearityRecord(
        ambient.q, ambient.n, size, "exhaustive", True, "no operation on all of P satisfies the axioms", engine.nodes
    )


@dataclass(frozen=True)
class CrossFamilyInstance:
    ambient: AmbientSpace
    A: Tuple[Subspace, ...]
    B: Tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(self.B))
        if len(self.A) != len(self.B):
            raise DimensionMismatch(f"families have lengths {len(self.A)} and {len(self.B)}")
        if len({a.dim for a in self.A}) > 1 or len({b.dim for b in self.B}) > 1:
            raise DimensionMismatch("each family must have a uniform dimension")
        if any(x.ambient != self.ambient for x in self.A + self.B):
            raise DimensionMismatch("families live in a different ambient space")

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def r(self) -> Optional[int]:
        return self.A[0].dim if self.A else None

    @property
    def s(self) -> Optional[int]:
        return self.B[0].dim if self.B else None

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "A": [a.to_json() for a in self.A],
            "B": [b.to_json() for b in self.B],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CrossFamilyInstance":
        from .subspace import subspace_from_json

        amb = AmbientSpace.from_json(doc["ambient"])
        return cls(amb, tuple(subspace_from_json(a) for a in doc["A"]), tuple(subspace_from_json(b) for b in doc["B"]))


@dataclass
class LovaszVerdict:
    m: int
    r: Optional[int]
    s: Optional[int]
    bound: Optional[int]
    hypothesis_holds: bool
    bound_holds: bool
    contradiction: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def verify_lovasz(instance: CrossFamilyInstance) -> LovaszVerdict:
    """Check A_i & B_j = 0 <=> i == j over all pairs, and m <= C(r+s, s)."""
    m = instance.m
    witness = None
    hypothesis = True
    for i, a in enumerate(instance.A):
        for j, b in enumerate(instance.B):
            if is_disjoint(a, b) != (i == j):
                hypothesis = False
                witness = {"pair": [i, j], "disjoint": i != j}
                break
        if not hypothesis:
            break
    if m == 0:
        bound, bound_holds = None, True
    else:
        bound = comb(instance.r + instance.s, instance.s)
        bound_holds = m <= bound
    contradiction = hypothesis and not bound_holds
    if contradiction:
        log.error("CONTRADICTION: cross-intersecting families with m=%d exceed C(%d,%d)=%d",
                  m, instance.r + instance.s, instance.s, bound)
    return LovaszVerdict(m, instance.r, instance.s, bound, hypothesis, bound_holds, contradiction, witness)


def extract_cross_family(code: LinearCode, k: int) -> CrossFamilyInstance:
    """Pair each k-dimensional codeword with its image under the full-space shift."""
    if code.full_index is None:
        raise FullSpaceAbsent("the full space is not a codeword")
    n = code.ambient.n
    if not 0 <= k <= n:
        raise DimensionMismatch(f"k must lie in 0..{n}")
    pi = phi_map(code)
    order = sorted((i for i, c in enumerate(code.codewords) if c.dim == k), key=lambda i: code.codewords[i])
    A = tuple(code.codewords[i] for i in order)
    B = tuple(code.codewords[pi[i]] for i in order)
    if any(b.dim != n - k for b in B) or any(not is_disjoint(a, b) for a, b in zip(A, B)):
        raise LinearCodeError("shift by the full space does not pair complements; code is not linear")
    return CrossFamilyInstance(code.ambient, A, B)


def default_node_budget() -> int:
    env = os.environ.get("PROJSPACE_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET
