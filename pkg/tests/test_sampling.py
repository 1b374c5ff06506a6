from itertools import combinations

import pytest

from conftest import random_digraph, subsets_upto
from dmwc.fixtures import hub_fan
from dmwc.graph import Digraph, Instance
from dmwc.sampling import (
    deterministic_sets,
    random_draw,
    random_set,
    shadow_universe,
    splitter_family,
)
from dmwc.separators import build_collection
from dmwc.shadows import is_thin, shadow


def test_splitter_identity_case():
    family = splitter_family(5, 5)
    m = list(range(5))
    assert any(len({f(x) for x in m}) == 5 for f in family)


def test_splitter_validates():
    with pytest.raises(ValueError):
        splitter_family(3, 4)
    with pytest.raises(ValueError):
        splitter_family(3, 0)


def test_splitter_exhaustive_n20_r3():
    family = splitter_family(20, 3)
    for m in combinations(range(20), 3):
        assert any(len({f(x) for x in m}) == 3 for f in family), m


def test_splitter_exhaustive_n50_r4():
    family = splitter_family(50, 4)
    for m in combinations(range(50), 4):
        assert any(len({f(x) for x in m}) == 4 for f in family), m


def test_random_set_trivial_cases():
    g = Digraph(2, [(0, 1)], {0, 1})
    inst = Instance(g, frozenset({0, 1}), 2)
    assert random_set(inst, 0) == frozenset()  # no non-terminal witnesses
    fx = hub_fan(3, 2)
    for seed in range(20):
        z = random_set(fx.instance, seed)
        assert not z & fx.instance.terminals


def test_random_draw_replays_from_provenance():
    fx = hub_fan(3, 2)
    for seed in range(10):
        draw = random_draw(fx.instance, seed)
        redo = frozenset()
        for picked, members in zip(draw.coins, draw.universe):
            if picked:
                redo |= members
        assert draw.z == redo
        assert random_set(fx.instance, seed) == draw.z
    # seeds are the only source of variation
    assert random_draw(fx.instance, 4).z == random_draw(fx.instance, 4).z


def test_shadow_universe_hub_fan():
    fx = hub_fan(3, 2)
    universe = shadow_universe(fx.instance)
    # singletons {a_i} shade {b_i}; pairs {a_i,a_j} shade exactly {c_ij}
    expected = {
        frozenset({fx.b(i)}) for i in (1, 2, 3)
    } | {
        frozenset({fx.c(i, j)}) for i, j in ((1, 2), (1, 3), (2, 3))
    }
    assert set(universe) == expected


def test_deterministic_family_trivial_cases():
    g = Digraph(2, [(0, 1)], {0, 1})
    inst = Instance(g, frozenset({0, 1}), 2)
    family = deterministic_sets(inst)
    assert list(family) == [frozenset()]
    fx = hub_fan(3, 2)
    for z in deterministic_sets(fx.instance):
        assert not z & fx.instance.terminals


def test_deterministic_family_hits_required_selection():
    fx = hub_fan(3, 2, budget=1)
    family = deterministic_sets(fx.instance)
    assert any(
        fx.b(1) in z and fx.a(1) not in z for z in family
    )  # pair S={a1}, Y={b1}


def test_candidates_are_shadow_unions():
    fx = hub_fan(3, 2)
    family = deterministic_sets(fx.instance)
    for z, (_, picked) in zip(family.candidates, family.provenance):
        redo = frozenset()
        for i in picked:
            redo |= family.universe[i]
        assert z == redo


def test_deterministic_family_is_stable():
    fx = hub_fan(3, 2)
    a = deterministic_sets(fx.instance)
    b = deterministic_sets(fx.instance)
    assert a.candidates == b.candidates
    assert a.provenance == b.provenance


def _coverage_pairs(inst):
    """Brute-force (thin S, Y) pairs the family must cover."""
    g = inst.graph
    coll = build_collection(inst).entries
    pool = sorted(g.deletable() - inst.terminals)
    for s in subsets_upto(pool, inst.budget):
        if not is_thin(g, inst.terminals, s):
            continue
        y = frozenset(
            w for e in coll if e.members <= s for w in e.witnesses
        )
        yield s, y


def test_deterministic_coverage_on_random_instances():
    for seed in range(12):
        g = Digraph(7, random_digraph(seed, 7, 0.3).edges, {0, 1})
        inst = Instance(g, frozenset({0, 1}), 2)
        family = list(deterministic_sets(inst))
        for s, y in _coverage_pairs(inst):
            assert any(not s & z and y <= z for z in family), (seed, s, y)


def test_randomized_coverage_has_positive_frequency():
    fx = hub_fan(3, 2, budget=1)
    inst = fx.instance
    s, y = frozenset({fx.a(1)}), frozenset({fx.b(1)})
    trials = 4 * 2 ** (2**1 + 1 * 4**1)  # ample at this scale
    hits = sum(
        1
        for seed in range(trials)
        if not s & random_set(inst, seed) and y <= random_set(inst, seed)
    )
    assert hits > 0


def test_exact_shadows_in_universe_match_direct_computation():
    for seed in range(8):
        g = Digraph(7, random_digraph(seed, 7, 0.35).edges, {0, 1})
        inst = Instance(g, frozenset({0, 1}), 2)
        direct = {
            shadow(g, inst.terminals, members).exact_reverse
            for members in build_collection(inst).member_sets()
        }
        assert set(shadow_universe(inst)) == direct
