"""The atom-bond sum-connectivity (ABS) index and its scalar kernel.

The per-edge summand sqrt((x + y - 2)/(x + y)) is exposed as
``edge_weight`` over real arguments >= 1, together with the two derived
scalar functions that drive the extremal arguments: the gain of the
weight under a shift of one argument, and the contrast of that gain
between two second arguments.  All arithmetic is double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph


def edge_weight(x: float, y: float) -> float:
    """sqrt((x + y - 2)/(x + y)) for x, y >= 1; lies in [0, 1)."""
    if x < 1 or y < 1:
        raise ValueError(f"edge_weight arguments must be >= 1, got ({x}, {y})")
    return math.sqrt((x + y - 2) / (x + y))


def shift_gain(s: float, x: float, y: float) -> float:
    """Increase of edge_weight when x grows by s > 0; strictly positive."""
    if s <= 0:
        raise ValueError(f"shift must be positive, got {s}")
    return edge_weight(x + s, y) - edge_weight(x, y)


def gain_contrast(s: float, lo: float, hi: float, x: float) -> float:
    """shift_gain at second argument lo minus shift_gain at hi, 1 <= lo <= hi."""
    if lo < 1 or lo > hi:
        raise ValueError(f"need 1 <= lo <= hi, got ({lo}, {hi})")
    return shift_gain(s, x, lo) - shift_gain(s, x, hi)


@dataclass(frozen=True)
class EdgeContribution:
    """One edge's summand in the ABS index."""

    edge: tuple[int, int]
    du: int
    dv: int
    value: float


def edge_contributions(g: Graph) -> list[EdgeContribution]:
    """Per-edge summands, in lexicographic edge order; they sum to abs_index."""
    degs = g.degrees()
    return [
        EdgeContribution((u, v), degs[u], degs[v], edge_weight(degs[u], degs[v]))
        for u, v in g.edges()
    ]


def abs_index(g: Graph) -> float:
    """Sum of edge_weight(d_u, d_v) over all edges; 0 for edgeless graphs.

    fsum makes the result independent of edge order, so isomorphic
    graphs get bit-identical values.
    """
    degs = g.degrees()
    return math.fsum(edge_weight(degs[u], degs[v]) for u, v in g.edges())
