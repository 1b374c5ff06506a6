"""Named instance fixtures used by tests and the CLI generator."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Digraph, Instance


@dataclass(frozen=True)
class HubFanFixture:
    """The hub-and-fan graph with a_1..a_r feeding every terminal, b_i feeding
    a_i, and c_{i,j} feeding both a_i and a_j.  Its important-separator and
    exact-shadow structure is known in closed form, which makes it the main
    hand-checkable fixture.

    Layout: terminals 0..k-1, then a_1..a_r, then b_1..b_r, then c_{i,j}
    for 1 <= i < j <= r in lexicographic order.
    """

    r: int
    k: int
    instance: Instance

    def t(self, j: int) -> int:
        return j - 1

    def a(self, i: int) -> int:
        return self.k + i - 1

    def b(self, i: int) -> int:
        return self.k + self.r + i - 1

    def c(self, i: int, j: int) -> int:
        if not 1 <= i < j <= self.r:
            raise ValueError("need 1 <= i < j <= r")
        offset = 0
        for ii in range(1, self.r + 1):
            for jj in range(ii + 1, self.r + 1):
                if (ii, jj) == (i, j):
                    return self.k + 2 * self.r + offset
                offset += 1
        raise AssertionError


def hub_fan(r: int = 3, k: int = 2, budget: int = 2) -> HubFanFixture:
    if r < 1 or k < 1:
        raise ValueError("r and k must be positive")
    n = k + 2 * r + r * (r - 1) // 2
    terminals = frozenset(range(k))
    edges: list[tuple[int, int]] = []
    fx = HubFanFixture(r, k, Instance(Digraph(n, (), terminals), terminals, budget))
    for i in range(1, r + 1):
        for j in range(1, k + 1):
            edges.append((fx.a(i), fx.t(j)))
        edges.append((fx.b(i), fx.a(i)))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            edges.append((fx.c(i, j), fx.a(i)))
            edges.append((fx.c(i, j), fx.a(j)))
    inst = Instance(Digraph(n, edges, terminals), terminals, budget)
    return HubFanFixture(r, k, inst)


def two_cycle(budget: int = 2) -> Instance:
    """t1 -> x -> t2 and t2 -> y -> t1; the unique optimum cut is {x, y}."""
    t1, t2, x, y = 0, 1, 2, 3
    g = Digraph(4, [(t1, x), (x, t2), (t2, y), (y, t1)], {t1, t2})
    return Instance(g, frozenset({t1, t2}), budget)


def named_fixture(name: str) -> Instance:
    """Parse fixture names like "remark2:r=3,k=2" or "twocycle:p=2"."""
    head, _, rest = name.partition(":")
    params: dict[str, int] = {}
    if rest:
        for part in rest.split(","):
            key, _, value = part.partition("=")
            if not value:
                raise ValueError(f"malformed fixture parameter {part!r}")
            params[key.strip()] = int(value)
    if head == "remark2":
        inst = hub_fan(
            r=params.pop("r", 3), k=params.pop("k", 2), budget=params.pop("p", 2)
        ).instance
    elif head == "twocycle":
        inst = two_cycle(budget=params.pop("p", 2))
    else:
        raise ValueError(f"unknown fixture {head!r}")
    if params:
        raise ValueError(f"unknown fixture parameters {sorted(params)}")
    return inst
