"""Candidate-set sampling: the randomized draw over exact reverse shadows and
its deterministic replacement.

Both modes share the same universe: the distinct exact reverse shadows of the
important witness-T separators of size at most p.  The randomized draw picks
each shadow with a fair coin and returns the union.  The deterministic family
enumerates selections (h, H) where h is an injective indexing of the universe
(the smallest prime modulus at least its size, a member of the splitter
family) and H an index subset of size at most 2^p; rather than walking every
H, it emits exactly the selections induced by candidate member-unions W of at
most p deletable vertices, which is the sub-family the coverage guarantee
needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Instance
from .rng import SplitMix64
from .separators import build_collection, canonical_order
from .shadows import shadow


@dataclass(frozen=True)
class ModFunction:
    """x -> x mod q, a member of the prime-modulus splitter family."""

    modulus: int

    def __call__(self, x: int) -> int:
        return x % self.modulus


def _primes_upto(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def _next_prime(start: int) -> int:
    q = max(2, start)
    while True:
        if all(q % d for d in range(2, int(q**0.5) + 1)):
            return q
        q += 1


def splitter_family(n: int, r: int) -> list[ModFunction]:
    """Family of functions on [n] such that every r-subset has an injective
    member.

    Prime moduli up to max(r^2, 6) * ceil(log2 n) * r suffice by the usual
    counting argument (a colliding pair rules out only the prime divisors of
    its difference); a prime of at least n is appended so the property holds
    unconditionally.
    """
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    bound = max(r * r, 6) * max(1, math.ceil(math.log2(max(n, 2)))) * r
    moduli = _primes_upto(bound)
    if not moduli or moduli[-1] < n:
        moduli.append(_next_prime(n))
    return [ModFunction(q) for q in moduli]


def shadow_universe(inst: Instance) -> list[frozenset[int]]:
    """Distinct exact reverse shadows of the important-separator collection,
    in canonical order."""
    g, terms = inst.graph, inst.terminals
    seen: set[frozenset[int]] = set()
    for members in build_collection(inst).member_sets():
        seen.add(shadow(g, terms, members).exact_reverse)
    return sorted(seen, key=canonical_order)


@dataclass(frozen=True)
class RandomDraw:
    """A randomized selection with enough provenance to replay it."""

    z: frozenset[int]
    universe: tuple[frozenset[int], ...]
    coins: tuple[bool, ...]
    seed: int


def random_draw(inst: Instance, seed: int) -> RandomDraw:
    universe = tuple(shadow_universe(inst))
    rng = SplitMix64(seed)
    coins = tuple(rng.coin() for _ in universe)
    z: set[int] = set()
    for picked, members in zip(coins, universe):
        if picked:
            z |= members
    return RandomDraw(frozenset(z), universe, coins, seed)


def random_set(inst: Instance, seed: int) -> frozenset[int]:
    """Union of a fair-coin selection of exact reverse shadows."""
    return random_draw(inst, seed).z


@dataclass(frozen=True)
class CandidateFamily:
    """Ordered candidate sets with (function index, index subset) provenance."""

    candidates: tuple[frozenset[int], ...]
    provenance: tuple[tuple[int, tuple[int, ...]], ...]
    universe: tuple[frozenset[int], ...]

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self) -> int:
        return len(self.candidates)


def deterministic_sets(inst: Instance) -> CandidateFamily:
    """Deterministic candidate family covering every (thin S, Y) pair.

    For any thin S of size at most p, the selection that must appear is the
    union of the exact reverse shadows of collection members contained in S.
    Those members union to some W subseteq S with |W| <= p, and the members
    inside W are exactly the members inside S, so enumerating W over all
    deletable subsets of size at most p hits the required selection.
    """
    g = inst.graph
    collection = build_collection(inst)
    universe = shadow_universe(inst)
    index_of = {members: i for i, members in enumerate(universe)}
    member_shadows = [
        (entry.members, index_of[shadow(g, inst.terminals, entry.members).exact_reverse])
        for entry in collection.entries
    ]
    deletable = sorted(g.deletable() - inst.terminals)

    candidates: list[frozenset[int]] = []
    provenance: list[tuple[int, tuple[int, ...]]] = []
    seen: set[frozenset[int]] = set()
    for size in range(min(inst.budget, len(deletable)) + 1):
        for w in combinations(deletable, size):
            wset = frozenset(w)
            picked = sorted({i for members, i in member_shadows if members <= wset})
            z: set[int] = set()
            for i in picked:
                z |= universe[i]
            zset = frozenset(z)
            if zset not in seen:
                seen.add(zset)
                candidates.append(zset)
                provenance.append((0, tuple(picked)))
    return CandidateFamily(tuple(candidates), tuple(provenance), tuple(universe))
