"""Forward, reverse and exact shadows of a vertex set, plus thinness.

The reverse shadow of S holds the vertices that S cuts off from reaching T;
the forward shadow holds the vertices T can no longer reach.  A vertex is in
the exact variant only when S is additionally a minimal separator for it,
i.e. every member of S is doing work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Digraph, reachable_from, reaches_into, reverse
from .separators import is_minimal_separator


@dataclass(frozen=True)
class ShadowReport:
    forward: frozenset[int]
    reverse: frozenset[int]
    exact_forward: frozenset[int]
    exact_reverse: frozenset[int]


def shadow(g: Digraph, t: Iterable[int], s: Iterable[int]) -> ShadowReport:
    ts, ss = frozenset(t), frozenset(s)
    if ss & ts:
        raise ValueError("shadow set must be disjoint from the terminals")
    if ss & g.infinite:
        raise ValueError("shadow set must be disjoint from distinguished vertices")
    can_reach_t = reaches_into(g, ts, ss)
    reached_by_t = reachable_from(g, ts, ss)
    everything = frozenset(g.vertices())
    rev = everything - can_reach_t - ss
    fwd = everything - reached_by_t - ss
    grev = reverse(g)
    exact_rev = frozenset(v for v in rev if is_minimal_separator(g, {v}, ts, ss))
    exact_fwd = frozenset(v for v in fwd if is_minimal_separator(grev, {v}, ts, ss))
    return ShadowReport(fwd, rev, exact_fwd, exact_rev)


def is_thin(g: Digraph, t: Iterable[int], s: Iterable[int]) -> bool:
    """True iff no member of s is cut off from t by the remaining members."""
    ts, ss = frozenset(t), frozenset(s)
    for v in ss:
        if not reachable_from(g, {v}, ss - {v}) & ts:
            return False
    return True


def is_shadowless(g: Digraph, t: Iterable[int], s: Iterable[int]) -> bool:
    report = shadow(g, t, s)
    return not report.forward and not report.reverse
