"""Finite groups as validated multiplication tables, Cayley relations with
a by-construction transitivity certificate, and brute-force automorphism
search for small relations.

The identity is always element 0.  The product convention is left-to-right:
table[g][h] is "g then h", and for permutation groups (g*h)(i) = h[g[i]].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .relation import Relation

BRUTE_LIMIT = 10
SYMMETRIC_LIMIT = 5


class GroupValidationError(ValueError):
    def __init__(self, kind: str, witness: tuple[int, ...] = ()):
        self.kind = kind
        self.witness = witness
        detail = f" at {witness}" if witness else ""
        super().__init__(f"{kind}{detail}")


@dataclass(frozen=True, slots=True)
class FiniteGroup:
    """Group of order n given by its full multiplication table."""

    n: int
    table: tuple[tuple[int, ...], ...]
    name: str = "G"

    identity = 0

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        return self.table[g].index(0)

    def product(self, elems: Iterable[int]) -> int:
        acc = 0
        for e in elems:
            acc = self.table[acc][e]
        return acc

    def elements(self) -> range:
        return range(self.n)


def group_from_table(
    table: Sequence[Sequence[int]], name: str = "G"
) -> FiniteGroup:
    """Validate and wrap a multiplication table.

    Checks: square with in-range entries, element 0 a two-sided identity,
    every row and column a permutation, associativity for all triples.
    """
    n = len(table)
    if n == 0:
        raise GroupValidationError("EmptyTable")
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
        raise GroupValidationError("MalformedTable")
    idx = np.arange(n)
    if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
        raise GroupValidationError("NoIdentityAtZero")
    if not (
        np.array_equal(np.sort(t, axis=1), np.tile(idx, (n, 1)))
        and np.array_equal(np.sort(t, axis=0), np.tile(idx[:, None], (1, n)))
    ):
        raise GroupValidationError("NotLatinSquare")
    lhs = t[t]  # lhs[g,h,k] = (g*h)*k
    rhs = t[:, t]  # rhs[g,h,k] = g*(h*k)
    if not np.array_equal(lhs, rhs):
        g, h, k = (int(v) for v in np.argwhere(lhs != rhs)[0])
        raise GroupValidationError("NotAssociative", (g, h, k))
    return FiniteGroup(n, tuple(tuple(int(v) for v in row) for row in t), name)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(table, f"Z{n}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Row-major pairing: element (a, b) has index a * g2.n + b."""
    n2 = g2.n
    size = g1.n * n2
    table = [[0] * size for _ in range(size)]
    for a1 in range(g1.n):
        for b1 in range(n2):
            row = table[a1 * n2 + b1]
            for a2 in range(g1.n):
                for b2 in range(n2):
                    row[a2 * n2 + b2] = g1.table[a1][a2] * n2 + g2.table[b1][b2]
    return group_from_table(table, f"{g1.name}x{g2.name}")


def dihedral(m: int) -> FiniteGroup:
    """Dihedral group of order 2m: rotations 0..m-1, reflections m..2m-1."""
    if m < 1:
        raise ValueError("dihedral parameter must be positive")
    size = 2 * m

    def mul(a: int, b: int) -> int:
        k1, f1 = a % m, a // m
        k2, f2 = b % m, b // m
        k = (k1 + (k2 if f1 == 0 else -k2)) % m
        return k + m * (f1 ^ f2)

    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    return group_from_table(table, f"D{m}")


def symmetric(m: int) -> FiniteGroup:
    """Symmetric group on m points; limited to m <= 5 (order 120)."""
    if not 1 <= m <= SYMMETRIC_LIMIT:
        raise ValueError(f"symmetric group limited to 1 <= m <= {SYMMETRIC_LIMIT}")
    perms = sorted(itertools.permutations(range(m)))  # identity sorts first
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(q[p[i]] for i in range(m))] for q in perms] for p in perms
    ]
    return group_from_table(table, f"S{m}")


def _invariant_factor_chains(n: int, max_factor: int | None = None) -> list[tuple[int, ...]]:
    """All chains d1 | d2 | ... | dk with product n and every di >= 2,
    listed with the largest factor last."""
    if n == 1:
        return [()]
    chains = []
    top = n if max_factor is None else min(n, max_factor)
    for d in range(2, top + 1):
        if n % d == 0:
            for rest in _invariant_factor_chains(n // d, d):
                if all(d % r == 0 for r in rest[-1:]):
                    chains.append(rest + (d,))
    return chains


def abelian_groups(order: int) -> list[FiniteGroup]:
    """All abelian groups of the given order, via invariant factors."""
    groups = []
    for chain in sorted(_invariant_factor_chains(order)):
        if not chain:
            groups.append(cyclic(1))
            continue
        g = cyclic(chain[0])
        for d in chain[1:]:
            g = direct_product(g, cyclic(d))
        groups.append(g)
    return groups


def group_catalog(
    abelian_max: int = 0, dihedral_max: int = 0, symmetric_max: int = 0
) -> list[FiniteGroup]:
    """Instance families for the verification harness: all abelian groups of
    order <= abelian_max, dihedral groups with parameter <= dihedral_max and
    symmetric groups on <= symmetric_max points, deduplicated by table."""
    groups: list[FiniteGroup] = []
    for order in range(1, abelian_max + 1):
        groups.extend(abelian_groups(order))
    for m in range(1, dihedral_max + 1):
        groups.append(dihedral(m))
    for m in range(3, symmetric_max + 1):
        groups.append(symmetric(m))
    seen: set[tuple[tuple[int, ...], ...]] = set()
    unique = []
    for g in groups:
        if g.table not in seen:
            seen.add(g.table)
            unique.append(g)
    return unique


def catalog_up_to_order(max_order: int) -> list[FiniteGroup]:
    """Catalog members whose order is at most max_order."""
    symmetric_max = max(m for m in range(2, SYMMETRIC_LIMIT + 1)
                        if math.factorial(m) <= max_order) if max_order >= 2 else 0
    return group_catalog(
        abelian_max=max_order,
        dihedral_max=max_order // 2,
        symmetric_max=symmetric_max,
    )


@dataclass(frozen=True, slots=True)
class GroupSubset:
    group: FiniteGroup
    members: frozenset[int]

    @classmethod
    def of(cls, group: FiniteGroup, members: Iterable[int]) -> "GroupSubset":
        ms = frozenset(members)
        for g in ms:
            if not 0 <= g < group.n:
                raise ValueError(f"element {g} out of range for order {group.n}")
        return cls(group, ms)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True, slots=True)
class TransitivityCertificate:
    """Record of why a relation is known to be point-transitive."""

    certified: bool
    method: str

    @classmethod
    def cayley(cls) -> "TransitivityCertificate":
        return cls(True, "cayley-left-translations")

    @classmethod
    def brute(cls) -> "TransitivityCertificate":
        return cls(True, "brute-orbit")

    @classmethod
    def none(cls) -> "TransitivityCertificate":
        return cls(False, "uncertified")


def cayley_relation(
    group: FiniteGroup, subset: GroupSubset | Iterable[int], reflexive: bool = False
) -> tuple[Relation, TransitivityCertificate]:
    """Relation with arcs (g, g*s) for s in the subset; loops added iff
    reflexive.  Left translations x -> h*x are automorphisms acting
    transitively, so the certificate holds by construction."""
    if not isinstance(subset, GroupSubset):
        subset = GroupSubset.of(group, subset)
    gens = subset.sorted_members()
    succ = []
    for g in range(group.n):
        bits = 1 << g if reflexive else 0
        for s in gens:
            bits |= 1 << group.table[g][s]
        succ.append(bits)
    return Relation(group.n, tuple(succ)), TransitivityCertificate.cayley()


def _search_automorphisms(
    rel: Relation, fixed_image_of_zero: int | None, find_all: bool
) -> list[tuple[int, ...]]:
    n = rel.n
    succ = rel.succ
    pred = rel.reverse().succ
    outdeg = [s.bit_count() for s in succ]
    indeg = [p.bit_count() for p in pred]
    sigma = [-1] * n
    results: list[tuple[int, ...]] = []

    def extend(k: int, used: int) -> bool:
        if k == n:
            results.append(tuple(sigma))
            return not find_all
        candidates = (
            [fixed_image_of_zero] if k == 0 and fixed_image_of_zero is not None
            else range(n)
        )
        for p in candidates:
            if used >> p & 1:
                continue
            if outdeg[k] != outdeg[p] or indeg[k] != indeg[p]:
                continue
            if (succ[k] >> k & 1) != (succ[p] >> p & 1):
                continue
            ok = True
            for j in range(k):
                q = sigma[j]
                if (succ[j] >> k & 1) != (succ[q] >> p & 1) or (
                    succ[k] >> j & 1
                ) != (succ[p] >> q & 1):
                    ok = False
                    break
            if ok:
                sigma[k] = p
                if extend(k + 1, used | 1 << p):
                    return True
                sigma[k] = -1
        return False

    extend(0, 0)
    return results


def automorphisms_brute(rel: Relation, limit: int = BRUTE_LIMIT) -> list[tuple[int, ...]]:
    """All arc-preserving vertex permutations, by backtracking search."""
    if rel.n > limit:
        raise ValueError(f"brute automorphism search refused: n={rel.n} > {limit}")
    return _search_automorphisms(rel, None, find_all=True)


def is_point_transitive_brute(rel: Relation, limit: int = BRUTE_LIMIT) -> bool:
    """True iff for every v some automorphism maps vertex 0 to v."""
    if rel.n > limit:
        raise ValueError(f"brute transitivity check refused: n={rel.n} > {limit}")
    if rel.n <= 1:
        return True
    return all(
        bool(_search_automorphisms(rel, v, find_all=False)) for v in range(1, rel.n)
    )


def orbit_of_zero(perms: Iterable[tuple[int, ...]], n: int) -> set[int]:
    """Orbit of vertex 0 under the group generated by the given permutations."""
    orbit = {0}
    frontier = [0]
    perms = list(perms)
    while frontier:
        v = frontier.pop()
        for p in perms:
            w = p[v]
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit
