from fractions import Fraction

import pytest

from kcut import (
    attack,
    breakpoints,
    components,
    max_flow_min_cut,
    oracle_min_kcut,
    oracle_strength,
    parse_graph,
    principal_sequence,
    strength,
)
from kcut.oracle import enum_partitions, oracle_attack_value

from conftest import edge_ids_of_partition, full_suite

F = Fraction


def test_max_flow_e1(e1):
    value, side = max_flow_min_cut(e1, 0, 1)
    assert value == 5 and side == {0}


def test_max_flow_tt_bridge(tt):
    value, side = max_flow_min_cut(tt, 0, 5)
    assert value == 1 and side == {0, 1, 2}


def test_max_flow_k4_brute(k4):
    value, _ = max_flow_min_cut(k4, 0, 1)
    # brute force over 2-partitions separating the terminals
    best = min(
        p.crossing_value
        for p in enum_partitions(k4)
        if p.part_count == 2 and (0 in p.parts[0]) != (1 in p.parts[0])
    )
    assert value == best == 3


def test_max_flow_rational_caps():
    g = parse_graph("p kcut 4 5\ne 1 2 1/3\ne 2 4 1/2\ne 1 3 3/4\ne 3 4 1/5\ne 1 4 2\n")
    value, _ = max_flow_min_cut(g, 0, 3)
    assert value == F(1, 3) + F(1, 5) + 2


def test_attack_fixtures(tt, c5):
    res = attack(tt, 1)
    assert res.value == 0
    assert res.argmin_min_parts.part_count == 1
    assert res.argmin_max_parts.parts == ((0, 1, 2), (3, 4, 5))
    res = attack(tt, 2)
    assert res.value == -3 and res.argmin_max_parts.part_count == 6
    res = attack(c5, 1)
    assert res.value == 0 and res.argmin_min_parts.part_count == 1


def test_attack_matches_bruteforce():
    bs = [F(0), F(1, 3), F(1), F(5, 4), F(3, 2), F(7, 3), F(5)]
    for name, g in full_suite()[:20]:
        for b in bs:
            res = attack(g, b)
            brute, coarse, fine = oracle_attack_value(g, b)
            assert res.value == brute, (name, b)
            assert res.argmin_min_parts == coarse, (name, b)
            assert res.argmin_max_parts == fine, (name, b)


def test_breakpoints_fixtures(tt, c5, e1):
    bps = breakpoints(tt)
    assert [bp.b for bp in bps] == [1, F(3, 2)]
    assert bps[0].before.part_count == 1
    assert bps[0].after.parts == ((0, 1, 2), (3, 4, 5))
    assert bps[1].before.parts == ((0, 1, 2), (3, 4, 5))
    assert bps[1].after.part_count == 6
    bps = breakpoints(c5)
    assert [bp.b for bp in bps] == [F(5, 4)]
    bps = breakpoints(e1)
    assert [bp.b for bp in bps] == [5]


def test_breakpoint_structure():
    for name, g in full_suite()[:18]:
        bps = breakpoints(g)
        assert len(bps) <= g.n - 1, name
        prev = None
        for bp in bps:
            # nested optimal edge sets: after strictly refines before
            a_before = set(edge_ids_of_partition(g, bp.before))
            a_after = set(edge_ids_of_partition(g, bp.after))
            assert a_before < a_after, name
            assert bp.before.part_count < bp.after.part_count, name
            if prev is not None:
                assert prev.b < bp.b, name
                assert prev.after == bp.before, name
            prev = bp


def test_attack_value_concave_piecewise():
    for name, g in full_suite()[:10]:
        bps = breakpoints(g)
        samples = [F(0)] + [bp.b for bp in bps] + [bps[-1].b + 1 if bps else F(1)]
        values = [attack(g, b).value for b in samples]
        # g is non-increasing in b
        assert all(v1 >= v2 for v1, v2 in zip(values, values[1:])), name


def test_strength_fixtures(tt, c5, k4):
    assert strength(tt) == oracle_strength(tt)
    assert strength(c5) == oracle_strength(c5)
    assert strength(k4) == oracle_strength(k4)


def test_strength_matches_oracle_on_suite():
    for name, g in full_suite()[:25]:
        assert strength(g) == oracle_strength(g), name


def test_psp_fixtures(tt, c5, k4):
    psp = principal_sequence(tt)
    assert psp.lambdas() == (1, F(3, 2))
    assert psp.kappas() == (2, 6)
    assert psp.levels[0].partition.parts == ((0, 1, 2), (3, 4, 5))
    assert len(psp.levels[0].b_edges) == 1
    assert len(psp.levels[1].b_edges) == 6
    assert principal_sequence(c5).lambdas() == (F(5, 4),)
    assert principal_sequence(k4).lambdas() == (2,)


def test_psp_invariants():
    for name, g in full_suite()[:25]:
        psp = principal_sequence(g)
        prev_parts = set(psp.p0.parts)
        prev_kappa = psp.p0.part_count
        prev_lam = None
        for level in psp.levels:
            # strict refinement
            for part in level.partition.parts:
                assert any(set(part) <= set(q) for q in prev_parts), name
            assert level.kappa > prev_kappa, name
            if prev_lam is not None:
                assert level.lam > prev_lam, name
            # A_i equals the crossing set of P_i
            assert level.a_edges == frozenset(
                edge_ids_of_partition(g, level.partition)
            ), name
            prev_parts = set(level.partition.parts)
            prev_kappa = level.kappa
            prev_lam = level.lam
        if psp.levels:
            assert psp.levels[-1].kappa == g.n, name
            assert psp.levels[-1].a_edges == frozenset(range(g.m)), name
        total = sum(
            level.kappa - psp.kappa_at(i) for i, level in enumerate(psp.levels)
        )
        assert total == g.n - psp.p0.part_count, name


def test_psp_matches_breakpoints():
    for name, g in full_suite()[:25]:
        psp = principal_sequence(g)
        bps = breakpoints(g)
        assert psp.lambdas() == tuple(bp.b for bp in bps), name
        for level, bp in zip(psp.levels, bps):
            assert level.partition == bp.after, name


def test_psp_split_inside_components():
    # each level's new edges lie inside the components split at that level
    for name, g in full_suite()[:25]:
        psp = principal_sequence(g)
        for level in psp.levels:
            allowed = set()
            for comp in level.split_components:
                comp_set = set(comp)
                for eid, e in enumerate(g.edges):
                    if e.u in comp_set and e.v in comp_set:
                        allowed.add(eid)
            assert set(level.b_edges) <= allowed, name


def test_attack_at_psp_critical_values():
    for name, g in full_suite()[:15]:
        psp = principal_sequence(g)
        for level in psp.levels:
            for b in (level.lam - F(1, 7), level.lam, level.lam + F(1, 7)):
                if b < 0:
                    continue
                res = attack(g, b)
                brute, _, _ = oracle_attack_value(g, b)
                assert res.value == brute, (name, b)


def test_single_vertex_psp():
    g = parse_graph("p kcut 1 0\n")
    psp = principal_sequence(g)
    assert psp.levels == ()
    assert psp.p0.part_count == 1


def test_disconnected_psp():
    g = parse_graph("p kcut 4 2\ne 1 2 3\ne 3 4 2\n")
    psp = principal_sequence(g)
    assert psp.p0.part_count == 2
    assert psp.lambdas() == (2, 3)
    assert psp.kappas() == (3, 4)


def test_zero_capacity_strength():
    g = parse_graph("p kcut 3 3\ne 1 2 0\ne 2 3 1\ne 1 3 1\n")
    sigma, part = strength(g)
    assert sigma == 1  # cheapest ratio cuts the zero edge plus one unit edge
    psp = principal_sequence(g)
    assert psp.lambdas()[0] == 1
