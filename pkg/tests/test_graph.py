import random
from fractions import Fraction

import pytest

from kcut import (
    CutResult,
    Graph,
    ParseError,
    components,
    contract,
    cut_of_partition,
    normalize_parallel,
    parse_graph,
    partition_from_blocks,
)
from kcut.graph import component_blocks

from conftest import TT_BRIDGE, full_suite


def test_parse_e1(e1):
    assert (e1.n, e1.m) == (2, 1)
    assert e1.edges[0].cap == 5


def test_parse_c5(c5):
    assert (c5.n, c5.m) == (5, 5)
    assert all(e.cap == 1 for e in c5.edges)


def test_parse_tt(tt):
    assert (tt.n, tt.m) == (6, 7)


def test_parse_comments_and_rationals():
    g = parse_graph("# header comment\np kcut 3 2\ne 1 2 0.5\n# mid comment\ne 2 3 7/3\n")
    assert g.edges[0].cap == Fraction(1, 2)
    assert g.edges[1].cap == Fraction(7, 3)


@pytest.mark.parametrize(
    "text,line",
    [
        ("p cut 2 1\ne 1 2 5\n", 1),  # malformed header
        ("p kcut 2 1\ne 1 3 5\n", 2),  # out-of-range vertex
        ("p kcut 2 1\ne 1 2 -3\n", 2),  # negative capacity
        ("p kcut 2 2\ne 1 2 5\n", 2),  # edge-count mismatch
        ("p kcut 2 1\ne 1 1 5\n", 2),  # self-loop
        ("p kcut 2 1\nq 1 2 5\n", 2),  # unknown record
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.line_no == line


def test_contract_bridge(tt):
    g2, vmap = contract(tt, [TT_BRIDGE])
    assert (g2.n, g2.m) == (5, 6)
    assert vmap[2] == vmap[3]  # bridge endpoints merged


def test_contract_all_cycle(c5):
    g2, _ = contract(c5, range(5))
    assert (g2.n, g2.m) == (1, 0)


def test_contract_k4_keeps_parallels(k4):
    g2, _ = contract(k4, [0])
    assert (g2.n, g2.m) == (3, 5)


def test_components(tt, c5, k4):
    p = components(tt, exclude_edges=[TT_BRIDGE])
    assert p.parts == ((0, 1, 2), (3, 4, 5))
    assert components(c5).part_count == 1
    assert components(k4, exclude_edges=range(6)).part_count == 4


def test_cut_of_partition_values(tt, c5, k4):
    assert cut_of_partition(tt, [[0, 1, 2], [3, 4, 5]]).value == 1
    assert cut_of_partition(c5, [[v] for v in range(5)]).value == 5
    assert cut_of_partition(k4, [[0], [1, 2, 3]]).value == 3


def test_cut_requires_partition(c5):
    with pytest.raises(ValueError):
        cut_of_partition(c5, [[0, 1], [1, 2, 3, 4]])
    with pytest.raises(ValueError):
        cut_of_partition(c5, [[0, 1]])


def test_canonicalization_idempotent():
    rng = random.Random(5)
    for name, g in full_suite()[:20]:
        blocks = [[] for _ in range(3)]
        for v in range(g.n):
            blocks[rng.randrange(3)].append(v)
        blocks = [b for b in blocks if b]
        p1 = partition_from_blocks(g, blocks)
        p2 = partition_from_blocks(g, p1.parts)
        assert p1 == p2


def test_crossing_equals_half_boundary_sum():
    for name, g in full_suite()[:20]:
        rng = random.Random(hash(name) & 0xFFFF)
        blocks: dict[int, list[int]] = {}
        for v in range(g.n):
            blocks.setdefault(rng.randrange(1 + g.n // 2), []).append(v)
        p = partition_from_blocks(g, blocks.values())
        total = Fraction(0)
        for part in p.parts:
            inside = set(part)
            for e in g.edges:
                if (e.u in inside) != (e.v in inside):
                    total += e.cap
        assert p.crossing_value == total / 2


def test_contract_components_commute():
    # the vertex-map blocks of contract(g, S) are the components of (V, S),
    # and pulling components(contract(g, S)) back through the map gives
    # components(g)
    rng = random.Random(11)
    for name, g in full_suite()[:20]:
        if g.m == 0:
            continue
        ids = [i for i in range(g.m) if rng.random() < 0.4]
        gc, vmap = contract(g, ids)
        s_blocks = component_blocks(
            g, exclude_edges=[i for i in range(g.m) if i not in ids]
        )
        assert {frozenset(b) for b in s_blocks} == {
            frozenset(v for v in range(g.n) if vmap[v] == b) for b in range(gc.n)
        }
        pulled = {
            frozenset(v for v in range(g.n) if vmap[v] in set(part))
            for part in components(gc).parts
        }
        assert pulled == {frozenset(p) for p in components(g).parts}


def test_normalize_parallel_preserves_cuts():
    g = parse_graph("p kcut 3 4\ne 1 2 2\ne 1 2 3\ne 2 3 1\ne 1 3 1/2\n")
    ng = normalize_parallel(g)
    assert ng.m == 3
    for blocks in ([[0], [1, 2]], [[0, 1], [2]], [[0], [1], [2]]):
        assert cut_of_partition(g, blocks).value == cut_of_partition(ng, blocks).value


def test_graph_json_roundtrip_shape(tt):
    from kcut.graph import graph_to_json

    data = graph_to_json(tt)
    assert data["n"] == 6 and data["m"] == 7
    assert data["edges"][6] == [3, 4, "1/1"]
