"""Orbit graphs under the star action and increasing-string enumeration.

Orbits of the star action are only known to be finite in low rank, so the
breadth-first closure takes a mandatory vertex cap and reports truncation
instead of looping forever.  Increasing strings need no cap: every strictly
ascending chain of simple star reflections has length bounded by
(N + 1)·|sneg|, where N = n(n−1)/2 and sneg is the sum of the negative
coordinates, so the enumeration always terminates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import FormalCoordinates
from .weights import (
    Comparison,
    Weight,
    compare,
    maximal_info,
    raising_directions,
    star,
)


@dataclass(frozen=True)
class Edge:
    """Unordered star-neighbour pair, canonically oriented for output.

    ``source`` and ``target`` satisfy target = s_label * source, with the
    pair ordered so that the larger endpoint comes first when the two are
    comparable (ties and incomparable pairs are ordered by sort key).
    ``relation`` records how source compares to target.
    """

    source: Weight
    label: int
    target: Weight
    relation: Comparison


@dataclass(frozen=True)
class OrbitGraph:
    vertices: Tuple[Weight, ...]
    edges: Tuple[Edge, ...]
    truncated: bool

    def maximal_vertices(self) -> Tuple[Weight, ...]:
        return tuple(v for v in self.vertices if maximal_info(v).is_maximal)


def orbit(w: Weight, cap: int) -> OrbitGraph:
    """Breadth-first closure of {w} under all simple star reflections.

    Exploration stops, with ``truncated`` set, as soon as adding a vertex
    would push the count past ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    seen: Dict[Weight, None] = {w: None}
    frontier = [w]
    edges = {}
    truncated = False
    while frontier and not truncated:
        frontier.sort(key=lambda v: v.sort_key())
        next_frontier: List[Weight] = []
        for v in frontier:
            for i in range(1, w.n):
                u = star(i, v)
                if u not in seen:
                    if len(seen) + 1 > cap:
                        truncated = True
                        break
                    seen[u] = None
                    next_frontier.append(u)
                edges[_edge_key(v, i, u)] = None
            if truncated:
                break
        frontier = next_frontier
    vertices = tuple(sorted(seen, key=lambda v: v.sort_key()))
    edge_list = tuple(
        sorted(
            (_orient(a, i, b) for (a, i, b) in edges),
            key=lambda e: (e.source.sort_key(), e.label, e.target.sort_key()),
        )
    )
    return OrbitGraph(vertices, edge_list, truncated)


def _edge_key(v: Weight, i: int, u: Weight) -> Tuple[Weight, int, Weight]:
    a, b = sorted((v, u), key=lambda x: x.sort_key())
    return (a, i, b)


def _orient(a: Weight, i: int, b: Weight) -> Edge:
    c = compare(a, b)
    if c is Comparison.LESS:
        a, b, c = b, a, Comparison.GREATER
    return Edge(a, i, b, c)


@dataclass(frozen=True)
class IncreasingString:
    """A strictly ascending chain w = w_0 < w_1 < ... ending at a maximal weight."""

    weights: Tuple[Weight, ...]
    steps: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def top(self) -> Weight:
        return self.weights[-1]


def increasing_strings(w: Weight) -> List[IncreasingString]:
    """All maximal ascending paths from w; every path ends star-maximal."""
    out: List[IncreasingString] = []

    def walk(chain: List[Weight], steps: List[int]) -> None:
        ups = raising_directions(chain[-1])
        if not ups:
            out.append(IncreasingString(tuple(chain), tuple(steps)))
            return
        for i in ups:
            chain.append(star(i, chain[-1]))
            steps.append(i)
            walk(chain, steps)
            chain.pop()
            steps.pop()

    walk([w], [])
    out.sort(key=lambda s: (s.steps, s.top.sort_key()))
    return out


def chain_bound(w: Weight) -> int:
    """The quantity (N+1)·|sneg|, N = n(n−1)/2, sneg = sum of negative coords.

    Every ascending chain contains at most |sneg| shift steps, separated
    by runs of at most N plain swaps, so chain lengths never exceed this
    value by more than N; chains from weights without negative
    coordinates consist of swaps alone and have length at most N.

    Only defined for weights with purely rational coordinates; a formal
    parameter makes the negative-coordinate sum meaningless.
    """
    if any(not c.is_rational() for c in w.coords):
        raise FormalCoordinates(
            "chain bound needs rational coordinates; formal parameters present"
        )
    n = w.n
    big_n = n * (n - 1) // 2
    sneg = sum((c.rational for c in w.coords if c.rational < 0), start=0)
    return math.ceil((big_n + 1) * -sneg)
