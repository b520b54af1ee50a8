"""Connectivity kappa, fragments and atoms of a finite relation.

kappa(rel) is the minimum of |image(X) \\ X| over nonempty X with
X + image(X) != V; a minimizer is a fragment, a minimum-cardinality
fragment is an atom.  The engine is a unit-capacity maximum flow on the
vertex-split digraph, one flow per ordered (s, t) pair; the inclusion-
minimal optimal source side is read off residual reachability, which is
the bottom of the min-cut lattice and therefore recovers every atom.

fragments_oracle is the independent brute-force route (all 2^n - 1
subsets, numpy-vectorized); the two must agree and the tests insist on it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .relation import Relation, VertexSet, _iter_bits

ORACLE_LIMIT = 14


class AtomsUndefinedError(ValueError):
    """Raised when atoms are requested for a complete relation."""


@dataclass(frozen=True, slots=True)
class Fragment:
    """A vertex set X with its boundary image(X) \\ X and the boundary size."""

    set: VertexSet
    boundary: VertexSet
    value: int

    @classmethod
    def of(cls, rel: Relation, x: VertexSet) -> "Fragment":
        boundary = rel.image(x).difference(x)
        return cls(x, boundary, len(boundary))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.set), self.set.members())


@dataclass(frozen=True, slots=True)
class ConnectivityResult:
    kappa: int
    complete: bool
    witness: Fragment | None
    atom_size: int | None
    atoms: tuple[Fragment, ...]


class _FlowNet:
    """Unit-capacity flow network; vertex v splits into 2v (in) and 2v+1 (out)."""

    def __init__(self, rel: Relation):
        n = rel.n
        self.size = 2 * n
        self.head: list[list[int]] = [[] for _ in range(self.size)]
        self.to: list[int] = []
        self.cap: list[int] = []
        big = n + 1
        for v in range(n):
            self._add(2 * v, 2 * v + 1, 1)
        for u in range(n):
            for v in _iter_bits(rel.succ[u]):
                if u != v:  # loops never contribute to a boundary
                    self._add(2 * u + 1, 2 * v, big)

    def _add(self, a: int, b: int, c: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def max_flow(self, source: int, sink: int) -> int:
        flow = 0
        while True:
            parent_edge = [-1] * self.size
            parent_edge[source] = -2
            queue = deque([source])
            while queue:
                u = queue.popleft()
                if u == sink:
                    break
                for e in self.head[u]:
                    w = self.to[e]
                    if self.cap[e] > 0 and parent_edge[w] == -1:
                        parent_edge[w] = e
                        queue.append(w)
            if parent_edge[sink] == -1:
                return flow
            v = sink
            while v != source:
                e = parent_edge[v]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                v = self.to[e ^ 1]
            flow += 1

    def residual_reachable(self, source: int) -> set[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                w = self.to[e]
                if self.cap[e] > 0 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen


def min_separating_set(
    rel: Relation, s: int, t: int
) -> tuple[int, VertexSet] | None:
    """Minimum |image(X) \\ X| over X with s in X and t outside X + image(X),
    together with the inclusion-minimal optimal X.  None means inseparable
    (t is a successor of s, so no such X exists)."""
    if s == t:
        raise ValueError("source and target must differ")
    for v in (s, t):
        if not 0 <= v < rel.n:
            raise ValueError(f"vertex {v} out of range for n={rel.n}")
    if rel.succ[s] >> t & 1:
        return None
    net = _FlowNet(rel)
    value = net.max_flow(2 * s + 1, 2 * t)
    reach = net.residual_reachable(2 * s + 1)
    x_bits = 0
    for v in range(rel.n):
        if 2 * v + 1 in reach:
            x_bits |= 1 << v
    return value, VertexSet(rel.n, x_bits)


def kappa(rel: Relation) -> ConnectivityResult:
    """Exact connectivity with a witness fragment and all atoms.

    Sweeps all ordered (s, t) pairs; if every pair is inseparable the
    relation behaves as complete and kappa = n - 1 with atoms undefined.
    """
    n = rel.n
    if n < 2:
        raise ValueError("kappa requires at least 2 vertices")
    best: int | None = None
    minimal_sides: list[VertexSet] = []
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            result = min_separating_set(rel, s, t)
            if result is None:
                continue
            value, x_min = result
            if best is None or value < best:
                best = value
                minimal_sides = [x_min]
            elif value == best:
                minimal_sides.append(x_min)
    if best is None:
        return ConnectivityResult(n - 1, True, None, None, ())
    fragments = {x.bits: Fragment.of(rel, x) for x in minimal_sides}
    atom_size = min(len(f.set) for f in fragments.values())
    atoms = tuple(
        sorted(
            (f for f in fragments.values() if len(f.set) == atom_size),
            key=Fragment.sort_key,
        )
    )
    return ConnectivityResult(best, False, atoms[0], atom_size, atoms)


def fragments_oracle(
    rel: Relation, limit: int = ORACLE_LIMIT
) -> tuple[int, list[Fragment]]:
    """Brute-force route: enumerate every nonempty subset, keep all
    minimizers of the boundary size.  Complete-type relations (no feasible
    subset at all) give (n - 1, [])."""
    n = rel.n
    if n < 2:
        raise ValueError("oracle requires at least 2 vertices")
    if n > limit:
        raise ValueError(f"oracle refused: n={n} exceeds limit {limit}")
    count = 1 << n
    masks = np.arange(count, dtype=np.uint32)
    membership = (masks[:, None] >> np.arange(n)) & 1  # (2^n, n)
    adjacency = np.zeros((n, n), dtype=np.uint8)
    for u, v in rel.edges():
        adjacency[u, v] = 1
    images = (membership @ adjacency > 0).astype(np.uint8)
    feasible = (membership.any(axis=1)) & (~(membership | images).all(axis=1))
    if not feasible.any():
        return n - 1, []
    boundary_sizes = ((images == 1) & (membership == 0)).sum(axis=1)
    value = int(boundary_sizes[feasible].min())
    hits = np.nonzero(feasible & (boundary_sizes == value))[0]
    fragments = [Fragment.of(rel, VertexSet(n, int(m))) for m in hits]
    fragments.sort(key=Fragment.sort_key)
    return value, fragments


def atoms_oracle(rel: Relation, limit: int = ORACLE_LIMIT) -> tuple[int, list[Fragment]]:
    """(kappa, atoms) via the brute-force oracle; atoms empty when complete."""
    value, fragments = fragments_oracle(rel, limit)
    if not fragments:
        return value, []
    size = min(len(f.set) for f in fragments)
    return value, [f for f in fragments if len(f.set) == size]


def atom_containing(rel: Relation, v: int) -> Fragment | None:
    """Lexicographically least atom containing v, or None if no atom does."""
    if not 0 <= v < rel.n:
        raise ValueError(f"vertex {v} out of range for n={rel.n}")
    result = kappa(rel)
    if result.complete:
        raise AtomsUndefinedError("atoms are undefined for a complete relation")
    for atom in result.atoms:
        if v in atom.set:
            return atom
    return None


def _pairwise_disjoint(fragments: tuple[Fragment, ...]) -> bool:
    combined = 0
    for f in fragments:
        if combined & f.set.bits:
            return False
        combined |= f.set.bits
    return True


@dataclass(frozen=True, slots=True)
class AtomDisjointnessReport:
    forward_atoms: tuple[Fragment, ...]
    reverse_atoms: tuple[Fragment, ...]
    forward_disjoint: bool
    reverse_disjoint: bool

    @property
    def holds(self) -> bool:
        return self.forward_disjoint or self.reverse_disjoint


def _kappa_and_atoms(rel: Relation, engine: str) -> tuple[int, tuple[Fragment, ...]]:
    """(kappa, atoms); atoms empty for complete-type relations.  The oracle
    engine is only valid up to ORACLE_LIMIT vertices but much faster there."""
    if engine == "oracle":
        value, atoms = atoms_oracle(rel)
        return value, tuple(atoms)
    result = kappa(rel)
    return result.kappa, result.atoms


def check_atom_disjointness(rel: Relation, engine: str = "flow") -> AtomDisjointnessReport:
    """Atoms of rel and of its reverse; disjointness must hold on at least
    one side (a proven fact), so a double failure marks a bug upstream."""
    _, forward_atoms = _kappa_and_atoms(rel, engine)
    _, reverse_atoms = _kappa_and_atoms(rel.reverse(), engine)
    if not forward_atoms or not reverse_atoms:
        raise AtomsUndefinedError("atoms are undefined for a complete relation")
    return AtomDisjointnessReport(
        forward_atoms,
        reverse_atoms,
        _pairwise_disjoint(forward_atoms),
        _pairwise_disjoint(reverse_atoms),
    )


@dataclass(frozen=True, slots=True)
class PropositionReport:
    applicable: bool
    reason: str
    kappa: int | None = None
    atom: Fragment | None = None
    size_within_kappa: bool | None = None
    induced_transitive: bool | None = None

    @property
    def holds(self) -> bool:
        return bool(self.size_within_kappa and self.induced_transitive)


def check_proposition_basic(
    rel: Relation, certified: bool = False, engine: str = "flow"
) -> PropositionReport:
    """For a point-transitive relation with a(rel) <= a(reverse): the atom
    induces a point-transitive relation and |A| <= kappa."""
    from .groups import is_point_transitive_brute

    if not certified and not is_point_transitive_brute(rel):
        return PropositionReport(False, "not point-transitive")
    value, forward_atoms = _kappa_and_atoms(rel, engine)
    if not forward_atoms:
        return PropositionReport(False, "complete relation: no fragments")
    if value == 0:
        # disconnected: atoms are whole closed components, exceeding kappa=0
        return PropositionReport(False, "not connected")
    _, reverse_atoms = _kappa_and_atoms(rel.reverse(), engine)
    if not reverse_atoms:
        return PropositionReport(False, "reverse is complete: no fragments")
    if len(forward_atoms[0].set) > len(reverse_atoms[0].set):
        return PropositionReport(False, "hypothesis a(rel) <= a(reverse) fails")
    atom = forward_atoms[0]
    induced, _ = rel.restriction(atom.set)
    return PropositionReport(
        True,
        "applicable",
        kappa=value,
        atom=atom,
        size_within_kappa=len(atom.set) <= value,
        induced_transitive=is_point_transitive_brute(induced),
    )
