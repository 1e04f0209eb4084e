"""Exhaustive search over connected isomorphism classes of small order.

Two enumeration strategies produce one representative per isomorphism
class of connected graphs:

* a vertex-augmentation fast path (default): every connected graph on n
  vertices arises from a connected graph on n - 1 vertices by attaching
  a new vertex to a nonempty neighbor set, so extending each (n-1)-class
  by every neighbor subset and deduplicating by canonical form covers
  all classes;
* a labeled sweep (oracle): iterate all 2^(n(n-1)/2) upper-triangle
  masks, skip masks already known via the permutation orbit of a found
  class, canonicalize the rest.

Both must agree exactly; the test suite pins the class counts.  On top
of the enumeration sit the constrained ABS maximizer, the extremal-
characterization verifier, and the exhaustive monotonicity checks.

Work is optionally spread over a process pool; results are merged by a
deterministic reduction (sets of canonical forms, sorted), so reports
are identical for any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass

from .extremal import complete_split, pendant_maximizer, turan
from .graphs import Graph, encode_graph6, from_triangle_mask
from .index import abs_index, edge_weight, gain_contrast, shift_gain
from .invariants import (
    GraphInvariants,
    canonical_form,
    graph_from_canonical_form,
)

DEFAULT_MAX_ORDER = 7
HARD_MAX_ORDER = 8
TIE_TOLERANCE = 1e-9

CONSTRAINT_KINDS = ("chromatic", "independence", "pendants", "none")

_class_cache: dict[int, tuple[bytes, ...]] = {}


def _check_order(n: int, allow_order_8: bool) -> None:
    cap = HARD_MAX_ORDER if allow_order_8 else DEFAULT_MAX_ORDER
    if not 1 <= n <= cap:
        hint = "" if allow_order_8 else " (n = 8 needs allow_order_8)"
        raise ValueError(f"order {n} outside the supported range 1..{cap}{hint}")


# -- augmentation fast path -------------------------------------------


def _augment_parent(args: tuple[int, tuple[int, ...]]) -> set[bytes]:
    parent_order, parent_rows = args
    n = parent_order + 1
    forms: set[bytes] = set()
    for nbrs in range(1, 1 << parent_order):
        rows = [
            row | ((nbrs >> v & 1) << parent_order)
            for v, row in enumerate(parent_rows)
        ]
        rows.append(nbrs)
        forms.add(canonical_form(Graph(n, tuple(rows))))
    return forms


def connected_class_forms(n: int, workers: int = 1) -> tuple[bytes, ...]:
    """Sorted canonical forms of all connected isomorphism classes."""
    _check_order(n, allow_order_8=True)
    cached = _class_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        forms = (canonical_form(Graph(1, (0,))),)
    else:
        parents = [
            graph_from_canonical_form(f) for f in connected_class_forms(n - 1, workers)
        ]
        jobs = [(g.order, g.rows) for g in parents]
        merged: set[bytes] = set()
        if workers > 1 and len(jobs) > 1:
            with multiprocessing.Pool(workers) as pool:
                for part in pool.imap_unordered(_augment_parent, jobs):
                    merged |= part
        else:
            for job in jobs:
                merged |= _augment_parent(job)
        forms = tuple(sorted(merged))
    _class_cache[n] = forms
    return forms


def enumerate_connected(
    n: int, workers: int = 1, allow_order_8: bool = False
) -> list[Graph]:
    """One canonically labeled representative per connected class."""
    _check_order(n, allow_order_8)
    return [graph_from_canonical_form(f) for f in connected_class_forms(n, workers)]


# -- labeled sweep oracle ---------------------------------------------


def _labeled_range(args: tuple[int, int, int]) -> set[bytes]:
    n, start, stop = args
    nbits = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        index_of = {}
        for k, (i, j) in enumerate(pairs):
            index_of[(i, j)] = k
            index_of[(j, i)] = k
        perm_maps.append(
            tuple(index_of[(perm[i], perm[j])] for (i, j) in pairs)
        )
    seen: set[int] = set()
    forms: set[bytes] = set()
    for mask in range(start, stop):
        if mask in seen:
            continue
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(n, tuple(rows))
        if not g.is_connected():
            continue
        forms.add(canonical_form(g))
        bits = [k for k in range(nbits) if mask >> k & 1]
        for pm in perm_maps:
            pmask = 0
            for k in bits:
                pmask |= 1 << pm[k]
            seen.add(pmask)
    return forms


def connected_class_forms_labeled(n: int, workers: int = 1) -> tuple[bytes, ...]:
    """Oracle enumeration by full labeled sweep; agrees with the fast path."""
    _check_order(n, allow_order_8=False)
    total = 1 << (n * (n - 1) // 2)
    if workers > 1:
        bounds = [total * i // workers for i in range(workers + 1)]
        jobs = [(n, bounds[i], bounds[i + 1]) for i in range(workers)]
        merged: set[bytes] = set()
        with multiprocessing.Pool(workers) as pool:
            for part in pool.imap_unordered(_labeled_range, jobs):
                merged |= part
        return tuple(sorted(merged))
    return tuple(sorted(_labeled_range((n, 0, total))))


# -- constrained maximization -----------------------------------------


@dataclass(frozen=True)
class Constraint:
    """A single-invariant restriction on connected graphs of one order."""

    order: int
    kind: str = "none"
    value: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in CONSTRAINT_KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if self.kind != "none" and self.value is None:
            raise ValueError(f"constraint kind {self.kind!r} needs a value")

    def admits(self, inv: GraphInvariants) -> bool:
        if self.kind == "chromatic":
            return inv.chromatic == self.value
        if self.kind == "independence":
            return inv.independence == self.value
        if self.kind == "pendants":
            return inv.pendants == self.value
        return True


@dataclass(frozen=True)
class SearchReport:
    """Result of a constrained exhaustive ABS maximization."""

    constraint: Constraint
    graph_count: int
    max_value: float | None
    maximizer_forms: tuple[bytes, ...]
    maximizer_graph6: tuple[str, ...]
    unique: bool
    construction_match: bool | None = None
    in_hypothesis: bool | None = None
    expected_graph6: str | None = None


def max_abs_under(
    constraint: Constraint, workers: int = 1, allow_order_8: bool = False
) -> SearchReport:
    """Exact maximum of the ABS index over the constrained classes.

    All graphs within TIE_TOLERANCE of the maximum are collected, so a
    false uniqueness claim would surface as multiple maximizers.
    """
    graphs = enumerate_connected(constraint.order, workers, allow_order_8)
    selected = [g for g in graphs if constraint.admits(GraphInvariants.of(g))]
    if not selected:
        return SearchReport(
            constraint=constraint,
            graph_count=0,
            max_value=None,
            maximizer_forms=(),
            maximizer_graph6=(),
            unique=False,
        )
    values = [(abs_index(g), g) for g in selected]
    best = max(v for v, _ in values)
    winners = sorted(
        (canonical_form(g) for v, g in values if best - v <= TIE_TOLERANCE)
    )
    return SearchReport(
        constraint=constraint,
        graph_count=len(selected),
        max_value=best,
        maximizer_forms=tuple(winners),
        maximizer_graph6=tuple(
            encode_graph6(graph_from_canonical_form(f)) for f in winners
        ),
        unique=len(winners) == 1,
    )


THEOREM_IDS = ("T1", "T2", "T3")


def _expected_maximizer(theorem: str, n: int, k: int) -> tuple[Graph, bool]:
    """The claimed extremal graph and whether (n, k) is in hypothesis range."""
    if theorem == "T1":
        return turan(n, k), n >= 5 and 3 <= k <= n - 1
    if theorem == "T2":
        return complete_split(n, k), 1 <= k <= n - 1
    if theorem == "T3":
        return pendant_maximizer(n, k), 1 <= k <= n - 1
    raise ValueError(f"unknown theorem id {theorem!r}; expected one of {THEOREM_IDS}")


_CONSTRAINT_OF_THEOREM = {"T1": "chromatic", "T2": "independence", "T3": "pendants"}


def verify_theorem(
    theorem: str, n: int, k: int, workers: int = 1, allow_order_8: bool = False
) -> SearchReport:
    """Exhaustively test one extremal characterization at one (n, k)."""
    expected, in_range = _expected_maximizer(theorem, n, k)
    constraint = Constraint(order=n, kind=_CONSTRAINT_OF_THEOREM[theorem], value=k)
    report = max_abs_under(constraint, workers, allow_order_8)
    match = report.maximizer_forms == (canonical_form(expected),)
    return SearchReport(
        constraint=report.constraint,
        graph_count=report.graph_count,
        max_value=report.max_value,
        maximizer_forms=report.maximizer_forms,
        maximizer_graph6=report.maximizer_graph6,
        unique=report.unique,
        construction_match=match,
        in_hypothesis=in_range,
        expected_graph6=encode_graph6(expected),
    )


# -- edge-addition monotonicity ---------------------------------------


@dataclass(frozen=True)
class EdgeAdditionReport:
    """Outcome of the exhaustive single-edge-addition increase check."""

    order: int
    passed: bool
    checks: int
    min_margin: float | None
    counterexample: str | None  # graph6 of the offending graph, if any


def check_edge_additions(n: int, workers: int = 1) -> EdgeAdditionReport:
    """Adding any edge to any connected class must strictly raise ABS."""
    if n > 6:
        raise ValueError(f"edge-addition sweep capped at n = 6, got {n}")
    min_margin = None
    checks = 0
    for g in enumerate_connected(n, workers):
        base = abs_index(g)
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                margin = abs_index(g.add_edge(u, v)) - base
                checks += 1
                if min_margin is None or margin < min_margin:
                    min_margin = margin
                if margin <= 0:
                    return EdgeAdditionReport(
                        n, False, checks, min_margin, encode_graph6(g)
                    )
    passed = min_margin is None or min_margin > 0
    return EdgeAdditionReport(n, passed, checks, min_margin, None)


# -- scalar finite-difference suites ----------------------------------


@dataclass(frozen=True)
class PropertyCheck:
    """One finite-difference property verdict over a grid."""

    name: str
    passed: bool
    checks: int
    min_margin: float


@dataclass(frozen=True)
class ScalarGrid:
    """Grids for the finite-difference projections of the scalar claims."""

    xy_points: tuple[float, ...] = tuple(1 + 0.5 * i for i in range(99))
    deltas: tuple[float, ...] = (0.5, 1.0, 2.0)
    shifts: tuple[float, ...] = (1.0, 2.0, 3.0)
    contrast_bounds: tuple[int, ...] = tuple(range(1, 21))
    contrast_x: tuple[float, ...] = tuple(float(x) for x in range(1, 51))


def check_scalar_properties(grid: ScalarGrid | None = None) -> list[PropertyCheck]:
    """Sign checks for the monotonicity/convexity claims on f, g and h.

    Strict positivity is required everywhere except the contrast check
    at equal bounds, where the function is identically zero.
    """
    grid = grid or ScalarGrid()
    results = []

    margins = []
    for d in grid.deltas:
        for x in grid.xy_points:
            for y in grid.xy_points:
                margins.append(edge_weight(x + d, y) - edge_weight(x, y))
    results.append(_verdict("edge_weight increasing in x", margins))

    dec_margins = []
    cvx_margins = []
    for s in grid.shifts:
        for d in grid.deltas:
            for x in grid.xy_points:
                for y in grid.xy_points:
                    g0 = shift_gain(s, x, y)
                    g1 = shift_gain(s, x + d, y)
                    g2 = shift_gain(s, x + 2 * d, y)
                    dec_margins.append(g0 - g1)
                    cvx_margins.append(g0 + g2 - 2 * g1)
    results.append(_verdict("shift_gain decreasing in x", dec_margins))
    results.append(_verdict("shift_gain convex in x", cvx_margins))

    # the contrast toward the smaller bound shrinks as x grows;
    # equivalently the reversed difference grows (the two are negatives)
    dec_contrast = []
    zero_ok = True
    zero_checks = 0
    for s in grid.shifts:
        for d in grid.deltas:
            for lo in grid.contrast_bounds:
                for hi in grid.contrast_bounds:
                    if hi < lo:
                        continue
                    for x in grid.contrast_x:
                        step = gain_contrast(s, lo, hi, x) - gain_contrast(
                            s, lo, hi, x + d
                        )
                        if lo == hi:
                            zero_checks += 1
                            zero_ok &= step == 0.0
                        else:
                            dec_contrast.append(step)
    results.append(_verdict("gain_contrast decreasing in x", dec_contrast))
    results.append(
        PropertyCheck(
            "gain_contrast constant at equal bounds", zero_ok, zero_checks, 0.0
        )
    )
    return results


def _verdict(name: str, margins: list[float]) -> PropertyCheck:
    m = min(margins)
    return PropertyCheck(name, m > 0, len(margins), m)
