"""Torso of a digraph on a vertex subset, and the instance reduction that
removes a candidate set by taking the torso on its complement."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Digraph, Instance


def torso(g: Digraph, c: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Graph on `c` with an edge (a, b) whenever g has an a->b path whose
    internal vertices avoid c.  Vertices are relabeled densely; the second
    return value maps new ids back to original ids.  Edge multiplicity is
    collapsed to one and self-loops are dropped (separation never needs
    either).
    """
    kept = sorted(set(c))
    for v in kept:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} out of range")
    keptset = set(kept)
    index = {old: new for new, old in enumerate(kept)}
    edges: set[tuple[int, int]] = set()
    for a in kept:
        # one pass from a: direct kept neighbors plus kept vertices reachable
        # through the removed region only
        seen_outside: set[int] = set()
        queue: deque[int] = deque()
        for w in g.successors(a):
            if w in keptset:
                if w != a:
                    edges.add((index[a], index[w]))
            elif w not in seen_outside:
                seen_outside.add(w)
                queue.append(w)
        while queue:
            u = queue.popleft()
            for w in g.successors(u):
                if w in keptset:
                    if w != a:
                        edges.add((index[a], index[w]))
                elif w not in seen_outside:
                    seen_outside.add(w)
                    queue.append(w)
    infinite = {index[v] for v in kept if v in g.infinite}
    return Digraph(len(kept), sorted(edges), infinite), tuple(kept)


@dataclass(frozen=True)
class Reduction:
    """A reduced instance together with the new-id -> original-id map."""

    instance: Instance
    to_original: tuple[int, ...]

    def lift(self, s: Iterable[int]) -> frozenset[int]:
        """Translate a solution of the reduced instance to original ids."""
        return frozenset(self.to_original[v] for v in s)


def reduce_instance(inst: Instance, z: Iterable[int]) -> Reduction:
    """Remove `z` by taking the torso on its complement; terminals and budget
    carry over."""
    zs = frozenset(z)
    if zs & inst.terminals:
        raise ValueError("removed set must not meet the terminals")
    kept = set(inst.graph.vertices()) - zs
    tg, mapping = torso(inst.graph, kept)
    index = {old: new for new, old in enumerate(mapping)}
    terminals = frozenset(index[t] for t in inst.terminals)
    return Reduction(Instance(tg, terminals, inst.budget), mapping)
