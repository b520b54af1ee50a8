"""Executable verification of the sphere-growth theorem and its corollaries.

Every claim checked here is a proven inequality, so on any certified
point-transitive instance a failed check is an implementation bug, never a
discovery.  Checks record lhs/rhs pairs with pass and tightness flags and
aggregate into machine-readable reports.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .groups import (
    FiniteGroup,
    GroupSubset,
    TransitivityCertificate,
    automorphisms_brute,
    cayley_relation,
    cyclic,
    dihedral,
    group_catalog,
    is_point_transitive_brute,
    orbit_of_zero,
    symmetric,
)
from .relation import INFINITE, Relation, VertexSet, _image_bits, _iter_bits


class BugError(RuntimeError):
    """A proven statement failed on a valid instance: implementation bug."""


@dataclass(frozen=True, slots=True)
class HypothesisWindow:
    """Largest prefix of radii j for which the j-ball around the vertex meets
    the reverse image only in the vertex itself."""

    vertex: int
    max_j: int


@dataclass(frozen=True, slots=True)
class CheckRecord:
    claim: str
    index: int  # the radius j, the girth g, or the witness length k
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "index": self.index,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "tight": self.tight,
        }


@dataclass(slots=True)
class VerificationReport:
    family: str
    descriptor: str
    params: dict
    r: int | None
    checks: list[CheckRecord] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    caveats: tuple[str, ...] = ()

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    @property
    def bug(self) -> bool:
        # violations on uncertified instances are caveats, not bugs
        return bool(self.failures) and not self.caveats

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "instance": self.descriptor,
            "params": self.params,
            "r": self.r,
            "checks": [c.to_dict() for c in self.checks],
            "witnesses": self.witnesses,
            "caveats": list(self.caveats),
        }


@dataclass(frozen=True, slots=True)
class ZeroProductWitness:
    """Sequence of subset elements whose left-to-right product is the
    identity, of minimal length k, with the guaranteed bound ceil(n/s)."""

    sequence: tuple[int, ...]
    k: int
    bound: int


def hypothesis_window(rel: Relation, v: int) -> HypothesisWindow:
    """Scan radii upward while ball(v, j) meets the reverse image of v only
    in v.  Stops at the first failure or at ball stabilization (capped at n).
    """
    if not rel.is_reflexive():
        raise ValueError("hypothesis window requires a reflexive relation")
    if not 0 <= v < rel.n:
        raise ValueError(f"vertex {v} out of range for n={rel.n}")
    rev_bits = 0
    for u in range(rel.n):
        if rel.succ[u] >> v & 1:
            rev_bits |= 1 << u
    ball = 1 << v
    max_j = 0
    for j in range(1, rel.n + 1):
        nxt = _image_bits(rel.succ, ball)
        if nxt & rev_bits != 1 << v:
            break
        max_j = j
        if nxt == ball:  # stabilized: the condition persists forever
            max_j = rel.n
            break
        ball = nxt
    return HypothesisWindow(v, max_j)


def _require_regular(rel: Relation) -> int:
    r = rel.regular_degree()
    if r is None:
        raise ValueError("relation is not regular (so not point-transitive)")
    return r


def _certificate_caveats(certificate: TransitivityCertificate) -> tuple[str, ...]:
    return () if certificate.certified else ("uncertified-transitivity",)


def check_main_theorem(
    rel: Relation,
    certificate: TransitivityCertificate,
    descriptor: str = "relation",
    family: str = "adhoc",
    params: dict | None = None,
    all_vertices: bool = False,
    bound_delta: int = 0,
) -> VerificationReport:
    """Sphere sizes within the hypothesis window must be at least r - 1.

    bound_delta shifts the required bound and exists only so the test suite
    can demonstrate that r - 1 is the exact constant (fault injection).
    """
    if not rel.is_reflexive():
        raise ValueError("the sphere bound assumes a reflexive relation")
    r = _require_regular(rel)
    report = VerificationReport(
        family, descriptor, params or {}, r, caveats=_certificate_caveats(certificate)
    )
    vertices = range(rel.n) if all_vertices else (0,)
    for v in vertices:
        window = hypothesis_window(rel, v)
        ball = rel.ball(v, 0)
        for j in range(1, window.max_j + 1):
            nxt = rel.image(ball)
            report.checks.append(
                CheckRecord("sphere-lower-bound", j, len(nxt) - len(ball), r - 1 + bound_delta)
            )
            ball = nxt
    return report


def check_ball_growth(
    rel: Relation,
    certificate: TransitivityCertificate,
    descriptor: str = "relation",
    family: str = "adhoc",
    params: dict | None = None,
    all_vertices: bool = False,
) -> VerificationReport:
    """Ball sizes within the hypothesis window must be at least 1 + (r-1)j."""
    if not rel.is_reflexive():
        raise ValueError("the ball growth bound assumes a reflexive relation")
    r = _require_regular(rel)
    report = VerificationReport(
        family, descriptor, params or {}, r, caveats=_certificate_caveats(certificate)
    )
    vertices = range(rel.n) if all_vertices else (0,)
    for v in vertices:
        window = hypothesis_window(rel, v)
        ball = rel.ball(v, 0)
        for j in range(0, window.max_j + 1):
            if j > 0:
                ball = rel.image(ball)
            report.checks.append(
                CheckRecord("ball-lower-bound", j, len(ball), 1 + (r - 1) * j)
            )
    return report


def check_girth_bound(
    rel: Relation,
    certificate: TransitivityCertificate,
    descriptor: str = "relation",
    family: str = "adhoc",
    params: dict | None = None,
) -> VerificationReport:
    """For a loopless point-transitive relation with finite girth g the
    order must be at least 1 + r(g-1).

    Internally retraces the reduction to the ball bound: adjoin all loops,
    then the (g-2)-ball around a vertex still meets the reverse image only
    in that vertex.
    """
    if rel.has_loop():
        raise ValueError("the girth bound assumes a loopless relation")
    r = _require_regular(rel)
    report = VerificationReport(
        family, descriptor, params or {}, r, caveats=_certificate_caveats(certificate)
    )
    g = rel.girth()
    if g == INFINITE:
        report.caveats = report.caveats + ("acyclic",)
        report.witnesses["girth"] = "infinite"
        return report
    g = int(g)
    report.witnesses["girth"] = g
    closed = rel.reflexive_closure()
    window = hypothesis_window(closed, 0)
    report.witnesses["window_max_j"] = window.max_j
    if certificate.certified and window.max_j < g - 2:
        raise BugError(
            f"{descriptor}: reflexive-closure window {window.max_j} below g-2={g - 2}"
        )
    report.checks.append(CheckRecord("girth-order-bound", g, rel.n, 1 + r * (g - 1)))
    return report


def _cayley_girth(group: FiniteGroup, gens: tuple[int, ...]) -> int:
    """Girth of the loopless Cayley relation, measured from the identity
    (valid by transitivity): least k with some k-term product equal to 1."""
    table = group.table
    bits = 0
    for s in gens:
        bits |= 1 << s
    for k in range(1, group.n + 1):
        if bits & 1:
            return k
        nxt = 0
        for g in _iter_bits(bits):
            row = table[g]
            for s in gens:
                nxt |= 1 << row[s]
        bits = nxt
    raise BugError(f"no product over {gens} returned to the identity in {group.name}")


def zero_product_witness(
    group: FiniteGroup, subset: GroupSubset | Iterable[int]
) -> ZeroProductWitness:
    """Shortest nonempty sequence over the subset whose left-to-right
    product is the identity, by breadth-first search in the loopless Cayley
    relation; its length is guaranteed to be at most ceil(n / |S|)."""
    if not isinstance(subset, GroupSubset):
        subset = GroupSubset.of(group, subset)
    gens = subset.sorted_members()
    if not gens:
        raise ValueError("subset must be nonempty")
    if group.identity in subset.members:
        raise ValueError("subset must exclude the identity")
    table = group.table
    parent: dict[int, tuple[int, int]] = {}
    dist = {0: 0}
    queue = deque([0])
    closing: tuple[int, int] | None = None
    while queue and closing is None:
        g = queue.popleft()
        row = table[g]
        for s in gens:
            h = row[s]
            if h == 0:  # BFS order makes the first return minimal
                closing = (g, s)
                break
            if h not in dist:
                dist[h] = dist[g] + 1
                parent[h] = (g, s)
                queue.append(h)
    if closing is None:
        raise BugError(f"identity unreachable over {gens} in {group.name}")
    g, last = closing
    sequence = [last]
    while g != 0:
        g, s = parent[g]
        sequence.append(s)
    sequence.reverse()
    k = len(sequence)
    bound = (group.n + len(gens) - 1) // len(gens)
    if group.product(sequence) != group.identity:
        raise BugError(f"witness {sequence} does not multiply to the identity")
    if k > bound:
        raise BugError(
            f"witness length {k} exceeds ceil({group.n}/{len(gens)}) = {bound}"
        )
    return ZeroProductWitness(tuple(sequence), k, bound)


def shortest_zero_product_oracle(
    group: FiniteGroup, subset: GroupSubset | Iterable[int], max_len: int
) -> int | None:
    """Exhaustive-enumeration oracle: least length <= max_len of a product
    equal to the identity, scanning all |S|^m sequences per length."""
    if not isinstance(subset, GroupSubset):
        subset = GroupSubset.of(group, subset)
    gens = subset.sorted_members()
    for m in range(1, max_len + 1):
        for seq in itertools.product(gens, repeat=m):
            if group.product(seq) == group.identity:
                return m
    return None


@dataclass(slots=True)
class LemmaPowersReport:
    automorphism_count: int
    all_preserve_power: bool
    power_transitive: bool

    @property
    def holds(self) -> bool:
        return self.all_preserve_power and self.power_transitive


def check_lemma_powers(rel: Relation, i: int, limit: int = 10) -> LemmaPowersReport:
    """Every automorphism of the relation is one of its i-th power, and the
    power inherits point-transitivity through the same orbit."""
    autos = automorphisms_brute(rel, limit)
    power = rel.power(i)
    preserve = all(
        all(power.succ[p[u]] >> p[v] & 1 for u, v in power.edges()) for p in autos
    )
    transitive = orbit_of_zero(autos, rel.n) == set(range(rel.n))
    return LemmaPowersReport(len(autos), preserve, transitive)


# ---------------------------------------------------------------------------
# Whole-group girth scan


@dataclass(slots=True)
class GirthScanResult:
    """Girth-bound verification over every nonempty generator subset of one
    group.

    Subsets containing an inverse pair (or an involution) have girth 2, where
    the bound 1 + r reduces to r <= n - 1 and holds for every subset; they
    are verified as one aggregate class.  The remaining, inverse-free subsets
    are checked one by one with a breadth-first girth computation.
    """

    group: str
    order: int
    total_subsets: int
    girth_two_subsets: int
    scanned_subsets: int
    tight_subsets: int
    failures: list[VerificationReport]

    @property
    def ok(self) -> bool:
        return not self.failures


def scan_girth_bound(group: FiniteGroup) -> GirthScanResult:
    n = group.n
    total = (1 << (n - 1)) - 1 if n > 1 else 0
    inverse = [group.inverse(g) for g in range(n)]
    pairs = [(g, inverse[g]) for g in range(1, n) if g < inverse[g]]
    inverse_free = 3 ** len(pairs) - 1
    tight = 0
    failures: list[VerificationReport] = []
    # girth-2 class: r <= n - 1 always; tight only for the full subset,
    # which always contains an inverse pair when n > 1.
    if n > 1:
        tight += 1
    scanned = 0
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        gens = tuple(
            sorted(p[c - 1] for p, c in zip(pairs, choice) if c)
        )
        if not gens:
            continue
        scanned += 1
        r = len(gens)
        g = _cayley_girth(group, gens)
        lhs, rhs = n, 1 + r * (g - 1)
        if lhs < rhs:
            report = VerificationReport(
                "girth-scan",
                f"Cay({group.name},{list(gens)})",
                {"group": group.name, "gens": list(gens)},
                r,
                [CheckRecord("girth-order-bound", g, lhs, rhs)],
            )
            failures.append(report)
        elif lhs == rhs:
            tight += 1
    return GirthScanResult(
        group.name, n, total, total - inverse_free, scanned, tight, failures
    )


# ---------------------------------------------------------------------------
# Family enumeration and the harness driver


def subsets_of(elements: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """All nonempty subsets in deterministic (size-lexicographic mask) order."""
    elems = tuple(elements)
    for mask in range(1, 1 << len(elems)):
        yield tuple(e for i, e in enumerate(elems) if mask >> i & 1)


def iter_group_instances(
    family: str, **params
) -> Iterator[tuple[str, FiniteGroup, tuple[int, ...]]]:
    """Yields (descriptor, group, generators) for the named built-in family."""
    if family == "circulants":
        max_n = params["max_n"]
        for n in range(2, max_n + 1):
            group = cyclic(n)
            for gens in subsets_of(range(1, n)):
                yield f"Cay(Z{n},{list(gens)})", group, gens
    elif family in ("cayley_abelian", "cayley_dihedral", "cayley_symmetric"):
        if family == "cayley_abelian":
            groups = group_catalog(abelian_max=params["max_order"])
        elif family == "cayley_dihedral":
            groups = [dihedral(m) for m in range(1, params["max_m"] + 1)]
        else:
            groups = [symmetric(params["m"])]
        for group in groups:
            for gens in subsets_of(range(1, group.n)):
                yield f"Cay({group.name},{list(gens)})", group, gens
    else:
        raise ValueError(f"unknown family: {family}")


ALL_CHECKS = ("main", "growth", "girth", "zerosum")

MAX_ENUMERATED_INSTANCES = 200_000


@dataclass(slots=True)
class FamilyRun:
    family: str
    params: dict
    reports: list[VerificationReport]
    girth_scans: list[GirthScanResult]
    summary: dict

    @property
    def ok(self) -> bool:
        return self.summary["bugs"] == 0


def _summarize(
    reports: list[VerificationReport], girth_scans: list[GirthScanResult]
) -> dict:
    checks = sum(len(r.checks) for r in reports)
    failures = sum(len(r.failures) for r in reports)
    bugs = sum(len(r.failures) for r in reports if r.bug)
    caveated = sum(1 for r in reports if r.caveats)
    tight_instances = 0
    for r in reports:
        growth = [c for c in r.checks if c.claim == "ball-lower-bound" and c.index >= 1]
        if growth and all(c.tight for c in growth) and growth[-1].index >= 2:
            tight_instances += 1
    tight_checks = sum(1 for r in reports for c in r.checks if c.tight and c.passed)
    scan_subsets = sum(s.total_subsets for s in girth_scans)
    scan_failures = sum(len(s.failures) for s in girth_scans)
    return {
        "instances": len(reports),
        "checks": checks,
        "failures": failures,
        "bugs": bugs + scan_failures,
        "caveated_instances": caveated,
        "tight_checks": tight_checks,
        "tight_growth_instances": tight_instances,
        "girth_scan_groups": len(girth_scans),
        "girth_scan_subsets": scan_subsets,
        "girth_scan_tight_subsets": sum(s.tight_subsets for s in girth_scans),
    }


def run_family(
    family: str,
    checks: Iterable[str] = ALL_CHECKS,
    all_vertices: bool = False,
    bound_delta: int = 0,
    max_instances: int = MAX_ENUMERATED_INSTANCES,
    files: Iterable[str] = (),
    brute_limit: int = 10,
    **params,
) -> FamilyRun:
    """Run the selected checks over every instance of a family.

    For built-in group families the girth bound is verified by the
    per-group scan (aggregate for the girth-2 class, explicit for the
    inverse-free subsets); the other checks enumerate subsets one by one.
    """
    selected = tuple(checks)
    for c in selected:
        if c not in ALL_CHECKS:
            raise ValueError(f"unknown check: {c}")
    reports: list[VerificationReport] = []
    girth_scans: list[GirthScanResult] = []
    if family == "from_files":
        from .fileio import read_relation

        for path in files:
            rel = read_relation(path)
            if rel.n <= brute_limit and is_point_transitive_brute(rel, brute_limit):
                certificate = TransitivityCertificate.brute()
            else:
                certificate = TransitivityCertificate.none()
            descriptor = str(path)
            reflexive = rel.reflexive_closure()
            if rel.remove_loops().regular_degree() is None:
                # the bounds are stated for a single out-degree, so a
                # non-regular input gets a caveated empty report per check
                for claim in selected:
                    if claim not in ("main", "growth", "girth"):
                        continue
                    reports.append(
                        VerificationReport(
                            family, descriptor, {}, None, caveats=("not-regular",)
                        )
                    )
                continue
            if "main" in selected:
                reports.append(
                    check_main_theorem(
                        reflexive, certificate, descriptor, family,
                        all_vertices=all_vertices, bound_delta=bound_delta,
                    )
                )
            if "growth" in selected:
                reports.append(
                    check_ball_growth(
                        reflexive, certificate, descriptor, family,
                        all_vertices=all_vertices,
                    )
                )
            if "girth" in selected:
                reports.append(
                    check_girth_bound(rel.remove_loops(), certificate, descriptor, family)
                )
    else:
        per_subset = tuple(c for c in selected if c in ("main", "growth", "zerosum"))
        seen_groups: dict[str, FiniteGroup] = {}
        count = 0
        for descriptor, group, gens in iter_group_instances(family, **params):
            if "girth" in selected and group.name not in seen_groups:
                seen_groups[group.name] = group
                girth_scans.append(scan_girth_bound(group))
            if not per_subset:
                continue
            count += 1
            if count > max_instances:
                raise ValueError(
                    f"family {family} exceeds {max_instances} enumerated instances"
                )
            certificate = TransitivityCertificate.cayley()
            info = {"group": group.name, "gens": list(gens)}
            if "main" in per_subset or "growth" in per_subset:
                reflexive, _ = cayley_relation(group, gens, reflexive=True)
                if "main" in per_subset:
                    reports.append(
                        check_main_theorem(
                            reflexive, certificate, descriptor, family, info,
                            all_vertices=all_vertices, bound_delta=bound_delta,
                        )
                    )
                if "growth" in per_subset:
                    reports.append(
                        check_ball_growth(
                            reflexive, certificate, descriptor, family, info,
                            all_vertices=all_vertices,
                        )
                    )
            if "zerosum" in per_subset:
                report = VerificationReport(family, descriptor, info, len(gens))
                try:
                    witness = zero_product_witness(group, gens)
                    report.checks.append(
                        CheckRecord("zero-product-bound", witness.k, witness.bound, witness.k)
                    )
                    report.witnesses["sequence"] = list(witness.sequence)
                except BugError as exc:
                    report.checks.append(CheckRecord("zero-product-bound", 0, -1, 0))
                    report.witnesses["error"] = str(exc)
                reports.append(report)
    return FamilyRun(family, dict(params), reports, girth_scans, _summarize(reports, girth_scans))
