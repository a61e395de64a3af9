"""Global minimum cut via tree packings: minimum 1-respecting and
2-respecting cuts of a given spanning tree, and the full pipeline that packs
trees and scans every support tree.

A cut crossing a rooted spanning tree in exactly the edge pair {e, f} is
determined by the two subtrees below e and f: their symmetric combination
(union when incomparable, difference when nested) against the rest.  The
value follows by inclusion-exclusion from per-edge subtree cut values and a
pairwise cross term, an O(n^2)-pairs scan over a precomputed table.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (
    Graph,
    CutResult,
    component_blocks,
    components,
    cut_of_partition,
    partition_from_blocks,
)
from .oracle import partition_sort_key
from .packing import PackConfig, mwu_pack


@dataclass
class TreeCutTable:
    """Rooted spanning tree with subtree masks, subtree cut values, and
    cached pairwise cross terms.

    ``cut(i)`` is the capacity leaving the subtree below the i-th tree edge;
    ``pair_value(i, j)`` the capacity of the unique cut crossing the tree in
    exactly those two edges (None when that cut is empty on one side).
    """

    graph: Graph
    tree: tuple[int, ...]
    root: int = 0
    masks: list[int] = field(init=False)
    cuts: list[Fraction] = field(init=False)
    _cross: dict = field(init=False, default_factory=dict)

    def __post_init__(self):
        g = self.graph
        self.tree = tuple(self.tree)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for ti, eid in enumerate(self.tree):
            e = g.edges[eid]
            adj[e.u].append((e.v, ti))
            adj[e.v].append((e.u, ti))
        parent = [-1] * g.n
        parent_edge = [-1] * g.n  # tree index of the edge to the parent
        order = []
        seen = [False] * g.n
        seen[self.root] = True
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v, ti in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    parent_edge[v] = ti
                    queue.append(v)
        if not all(seen):
            raise ValueError("tree does not span the graph")
        subtree = [1 << v for v in range(g.n)]
        for u in reversed(order):
            if parent[u] >= 0:
                subtree[parent[u]] |= subtree[u]
        # mask below each tree edge = subtree of its child endpoint
        self.masks = [0] * len(self.tree)
        for v in range(g.n):
            if parent_edge[v] >= 0:
                self.masks[parent_edge[v]] = subtree[v]
        self.cuts = [self._boundary(mask) for mask in self.masks]

    def _boundary(self, mask: int) -> Fraction:
        total = Fraction(0)
        for e in self.graph.edges:
            if (mask >> e.u & 1) != (mask >> e.v & 1):
                total += e.cap
        return total

    def cut(self, i: int) -> Fraction:
        return self.cuts[i]

    def cross(self, i: int, j: int) -> Fraction:
        """Capacity between the two subtrees (incomparable pair), or between
        the inner subtree and the outside of the outer one (nested pair)."""
        if i > j:
            i, j = j, i
        key = (i, j)
        if key not in self._cross:
            a, b = self.masks[i], self.masks[j]
            if a & b == 0:
                total = Fraction(0)
                for e in self.graph.edges:
                    inu, inv = a >> e.u & 1, a >> e.v & 1
                    jnu, jnv = b >> e.u & 1, b >> e.v & 1
                    if (inu and jnv) or (inv and jnu):
                        total += e.cap
            else:
                inner, outer = (a, b) if a & b == a else (b, a)
                if inner | outer != outer:
                    raise AssertionError("subtree masks neither nested nor disjoint")
                total = Fraction(0)
                for e in self.graph.edges:
                    iu, iv = inner >> e.u & 1, inner >> e.v & 1
                    ou, ov = outer >> e.u & 1, outer >> e.v & 1
                    if iu and not ov:
                        total += e.cap
                    elif iv and not ou:
                        total += e.cap
            self._cross[key] = total
        return self._cross[key]

    def pair_mask(self, i: int, j: int) -> int:
        a, b = self.masks[i], self.masks[j]
        if a & b == 0:
            return a | b
        inner, outer = (a, b) if a & b == a else (b, a)
        return outer & ~inner

    def pair_value(self, i: int, j: int) -> Fraction:
        return self.cuts[i] + self.cuts[j] - 2 * self.cross(i, j)


def _mask_partition(g: Graph, mask: int):
    side = [v for v in range(g.n) if mask >> v & 1]
    rest = [v for v in range(g.n) if not mask >> v & 1]
    return partition_from_blocks(g, [side, rest])


def min_1respect(g: Graph, tree) -> CutResult:
    """Minimum cut among those crossing the tree in exactly one edge."""
    table = TreeCutTable(g, tuple(tree))
    best = min(table.cuts)
    parts = [_mask_partition(g, m) for m, c in zip(table.masks, table.cuts) if c == best]
    parts.sort(key=partition_sort_key)
    p = parts[0]
    return CutResult(p, best, p.part_count)


def min_2respect(g: Graph, tree) -> CutResult:
    """Minimum cut among those crossing the tree in at most two edges."""
    table = TreeCutTable(g, tuple(tree))
    nt = len(table.tree)
    best = None
    best_mask = None
    for i in range(nt):
        if best is None or table.cuts[i] < best:
            best = table.cuts[i]
            best_mask = table.masks[i]
    for i in range(nt):
        for j in range(i + 1, nt):
            v = table.pair_value(i, j)
            if v < best:
                best = v
                best_mask = table.pair_mask(i, j)
    # canonicalize ties at the winning value by partition order
    candidates = []
    for i in range(nt):
        if table.cuts[i] == best:
            candidates.append(table.masks[i])
    for i in range(nt):
        for j in range(i + 1, nt):
            if table.pair_value(i, j) == best:
                candidates.append(table.pair_mask(i, j))
    parts = [_mask_partition(g, m) for m in candidates]
    parts.sort(key=partition_sort_key)
    p = parts[0]
    return CutResult(p, best, p.part_count)


def global_mincut_detail(g: Graph, eps=Fraction(1, 6)):
    """Global mincut plus its witness: (cut, witness tree index, packing).

    Packs trees to within (1 - eps) of the strength and scans every support
    tree for its best 2-respecting cut.  For eps < 1/3 a positive weight
    fraction of the packing 2-respects each fixed minimum cut, so the scan
    is exhaustive without sampling.  Deterministic.
    """
    eps = Fraction(eps)
    if not eps < Fraction(1, 3):
        raise ValueError("eps must be below 1/3")
    if g.n < 2:
        raise ValueError("mincut needs at least two vertices")
    if not g.is_connected():
        raise ValueError("mincut is defined for connected graphs")
    zero = [i for i in range(g.m) if g.edges[i].cap == 0]
    if len(component_blocks(g, exclude_edges=zero)) > 1:
        # zero-capacity cut: the components of the positive part achieve 0
        return cut_of_partition(g, components(g, exclude_edges=zero)), None, None
    packing = mwu_pack(g, config=PackConfig(epsilon=eps))
    best: CutResult | None = None
    witness = None
    for idx, tree in enumerate(packing.support()):
        cut = min_2respect(g, tree)
        if (
            best is None
            or cut.value < best.value
            or (cut.value == best.value and partition_sort_key(cut.partition) < partition_sort_key(best.partition))
        ):
            best = cut
            witness = idx
    return best, witness, packing


def global_mincut(g: Graph, eps=Fraction(1, 6)) -> CutResult:
    """Global minimum cut via the packing-then-scan pipeline."""
    cut, _, _ = global_mincut_detail(g, eps)
    return cut
