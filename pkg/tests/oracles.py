"""Brute-force oracles that avoid the library's elimination and search code.

Subspaces are handled here as explicit frozensets of coordinate tuples,
built by closing a generating set under addition and scaling.
"""

from __future__ import annotations

from itertools import combinations, product
from math import factorial, log

from projspace.field import FieldSpec


def all_vectors(F: FieldSpec, n: int):
    return list(product(range(F.order), repeat=n))


def closure_span(F: FieldSpec, n: int, gens) -> frozenset:
    members = {tuple([0] * n)}
    for g in gens:
        members = {
            tuple(F.add(x, F.mul(c, y)) for x, y in zip(v, g)) for v in members for c in range(F.order)
        }
    return frozenset(members)


def set_dim(F: FieldSpec, members: frozenset) -> int:
    return round(log(len(members), F.order))


def set_distance(F: FieldSpec, X: frozenset, Y: frozenset) -> int:
    return set_dim(F, X) + set_dim(F, Y) - 2 * set_dim(F, X & Y)


def brute_gaussian(F: FieldSpec, n: int, k: int) -> int:
    """Count distinct k-dimensional spans of k-tuples of vectors."""
    vecs = all_vectors(F, n)
    target = F.order**k
    seen = set()
    for gens in combinations(vecs, k):
        s = closure_span(F, n, gens)
        if len(s) == target:
            seen.add(s)
    return len(seen)


def all_subspace_sets(F: FieldSpec, n: int):
    seen = set()
    for k in range(n + 1):
        for gens in combinations(all_vectors(F, n), k):
            seen.add(closure_span(F, n, gens))
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def ordered_bases(F: FieldSpec, n: int):
    full = F.order**n
    for rows in product(all_vectors(F, n), repeat=n):
        if len(closure_span(F, n, rows)) == full:
            yield rows


def unordered_basis_count(F: FieldSpec, n: int) -> int:
    """|GL(n, q)| / n!, by counting ordered bases one by one."""
    count = sum(1 for _ in ordered_bases(F, n))
    assert count % factorial(n) == 0
    return count // factorial(n)


def basis_code_sets(F: FieldSpec, n: int) -> set:
    """Distinct codeword sets {span(S) : S subset of B} over all bases B."""
    out = set()
    for rows in ordered_bases(F, n):
        out.add(frozenset(closure_span(F, n, [rows[i] for i in range(n) if m >> i & 1]) for m in range(1 << n)))
    return out


def is_linear_table(F: FieldSpec, members, table) -> bool:
    """Definition-level check of a table over explicit vector sets."""
    size = len(members)
    idx = range(size)
    if any(table[0][j] != j for j in idx):
        return False
    if any(table[i][j] != table[j][i] for i in idx for j in idx):
        return False
    if any(table[i][i] != 0 for i in idx):
        return False
    for i, j, k in product(idx, repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            return False
        if set_distance(F, members[i], members[j]) != set_distance(F, members[table[i][k]], members[table[j][k]]):
            return False
    return True


def brute_force_linear_sets(F: FieldSpec, n: int, require_full: bool) -> set:
    """Every codeword set that admits at least one valid table, found by
    trying all symmetric tables with identity row and zero diagonal."""
    subspaces = all_subspace_sets(F, n)
    zero = subspaces[0]
    full = subspaces[-1]
    rest = [s for s in subspaces[1:] if not (require_full and s == full)]
    found = set()
    for r in range(len(rest) + 1):
        for chosen in combinations(rest, r):
            members = [zero] + ([full] if require_full else []) + list(chosen)
            size = len(members)
            slots = [(i, j) for i in range(1, size) for j in range(i + 1, size)]
            for values in product(range(size), repeat=len(slots)):
                table = [[0] * size for _ in range(size)]
                for j in range(size):
                    table[0][j] = table[j][0] = j
                for (i, j), v in zip(slots, values):
                    table[i][j] = table[j][i] = v
                if is_linear_table(F, members, table):
                    found.add(frozenset(members))
                    break
    return found


def gl_order(q: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out



def rref_count(q: int, n: int, k: int) -> int:
    """Number of k x n reduced echelon matrices: one term per pivot set,
    q to the power of the entries left free by that set."""
    total = 0
    for pivots in combinations(range(n), k):
        free = sum(sum(1 for c in range(p + 1, n) if c not in pivots) for p in pivots)
        total += q**free
    return total
