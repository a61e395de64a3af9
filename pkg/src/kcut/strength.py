"""Exact graph strength, the attack function, its breakpoints, and the
principal sequence of partitions.

The attack value for parameter b is

    g(b) = min over partitions P of  c(E(P)) - b(|P| - 1).

Writing c(E(P)) = c(E) - sum of internal capacities, minimizing g(b) is a
partition minimization of the submodular part-cost f(S) = -c(E[S]) - b and
is solved exactly by incremental Dilworth truncation: insert vertices one at
a time, each step one exact min s-t cut in a small auxiliary network.

Ties are handled structurally rather than by perturbing the graph: the
oracle is evaluated at b - eps and b + eps over rationals with an
infinitesimal component, which yields the unique coarsest and finest optimal
partitions (the optimal partitions form a lattice under refinement).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .exact import Eps
from .flow import FlowNetwork
from .graph import (
    Graph,
    VertexPartition,
    component_blocks,
    crossing_edges,
    induced_subgraph,
    partition_from_blocks,
)


@dataclass(frozen=True)
class AttackResult:
    b: Fraction
    value: Fraction
    argmin_min_parts: VertexPartition
    argmin_max_parts: VertexPartition


@dataclass(frozen=True)
class Breakpoint:
    b: Fraction
    before: VertexPartition  # coarsest optimal at b (optimal just below)
    after: VertexPartition  # finest optimal at b (optimal just above)


@dataclass(frozen=True)
class PspLevel:
    lam: Fraction
    partition: VertexPartition  # P_i
    a_edges: frozenset[int]  # cumulative crossing edge ids, A_i = E(P_i)
    b_edges: frozenset[int]  # increment B_i = A_i \ A_{i-1}
    split_components: tuple[tuple[int, ...], ...]  # the C's split at this level
    kappa: int  # |P_i|


@dataclass(frozen=True)
class PrincipalSequence:
    graph: Graph
    p0: VertexPartition  # components of G
    levels: tuple[PspLevel, ...]

    def lambdas(self) -> tuple[Fraction, ...]:
        return tuple(level.lam for level in self.levels)

    def kappas(self) -> tuple[int, ...]:
        return tuple(level.kappa for level in self.levels)

    def kappa0(self) -> int:
        return self.p0.part_count

    def level_for_k(self, k: int) -> int:
        """Smallest level index j (1-based) with kappa_j >= k; 0 if kappa_0 >= k."""
        if self.p0.part_count >= k:
            return 0
        for j, level in enumerate(self.levels, start=1):
            if level.kappa >= k:
                return j
        raise ValueError(f"k={k} exceeds the final partition size")

    def partition_at(self, j: int) -> VertexPartition:
        return self.p0 if j == 0 else self.levels[j - 1].partition

    def a_edges_at(self, j: int) -> frozenset[int]:
        return frozenset() if j == 0 else self.levels[j - 1].a_edges

    def kappa_at(self, j: int) -> int:
        return self.p0.part_count if j == 0 else self.levels[j - 1].kappa


def _dilworth_partition(g: Graph, b):
    """One Dilworth-truncation sweep minimizing sum_S (-c(E[S]) - b) over
    partitions; returns (blocks, minimum).  ``b`` may carry an eps part."""
    n = g.n
    blocks: list[set[int]] = []
    x = [None] * n  # greedy labels, one per processed vertex
    adj = g.neighbors()
    zero = Eps(0) if isinstance(b, Eps) else Fraction(0)
    for j in range(n):
        if j == 0:
            x[0] = -b + zero
            blocks.append({0})
            continue
        # degrees within the processed prefix {0..j}
        deg = [Fraction(0)] * (j + 1)
        for v in range(j + 1):
            for w, eid in adj[v]:
                if w <= j:
                    deg[v] += g.edges[eid].cap
        # potentials: p_u = -deg(u)/2 - x_u for u < j; p_j enters as a constant
        net = FlowNetwork(j + 2, zero=zero)
        t = j + 1
        const = zero
        for u in range(j):
            p_u = -Fraction(deg[u], 2) - x[u]
            if p_u > zero:
                net.add_arc(u, t, p_u)
            elif p_u < zero:
                net.add_arc(j, u, -p_u)
                const = const + p_u
        for v in range(j + 1):
            for w, eid in adj[v]:
                if v < w <= j:
                    half = Fraction(g.edges[eid].cap, 2)
                    if half > 0:
                        net.add_undirected(v, w, half)
        flow = net.max_flow(j, t)
        side = net.residual_reachable(j)
        x[j] = flow + const - Fraction(deg[j], 2) - b
        merged = {j}
        rest = []
        for blk in blocks:
            if blk & side:
                merged |= blk
            else:
                rest.append(blk)
        rest.append(merged)
        blocks = rest
    total = x[0]
    for v in range(1, n):
        total = total + x[v]
    return blocks, total


def attack(g: Graph, b) -> AttackResult:
    """Exact minimizer of c(E(P)) - b(|P|-1), with both extreme argmins.

    Runs the truncation at b - eps (coarsest optimal partition) and b + eps
    (finest), so degenerate ties never require perturbing capacities.
    """
    b = Fraction(b)
    if b < 0:
        raise ValueError("attack parameter must be nonnegative")
    if g.n == 0:
        raise ValueError("empty graph")
    coarse_blocks, _ = _dilworth_partition(g, Eps(b, -1))
    fine_blocks, _ = _dilworth_partition(g, Eps(b, 1))
    coarse = partition_from_blocks(g, coarse_blocks)
    fine = partition_from_blocks(g, fine_blocks)
    value = coarse.crossing_value - b * (coarse.part_count - 1)
    fine_value = fine.crossing_value - b * (fine.part_count - 1)
    if value != fine_value:
        raise AssertionError("extreme argmins disagree on the attack value")
    return AttackResult(b, value, coarse, fine)


def _line(p: VertexPartition):
    """(constant, parts) so the partition's value at b is c - b*(parts-1)."""
    return (p.crossing_value, p.part_count)


def _line_value(line, b: Fraction) -> Fraction:
    c, parts = line
    return c - b * (parts - 1)


def breakpoints(g: Graph) -> tuple[Breakpoint, ...]:
    """All breakpoints of the attack function, by parametric line search.

    Each breakpoint carries the coarsest and finest optimal partitions at
    that b; between consecutive breakpoints the optimal line is unique up to
    value.  A connected graph has at most n - 1 breakpoints.
    """
    if g.n < 2:
        return ()
    found: list[Breakpoint] = []

    res_lo = attack(g, Fraction(0))
    b_hi = g.total_capacity() + 1
    res_hi = attack(g, b_hi)

    def search(b_lo, line_lo, b_hi, line_hi):
        if line_lo[1] == line_hi[1]:
            # same slope: both optimal on the whole bracket means same line
            if _line_value(line_lo, b_lo) != _line_value(line_hi, b_lo):
                raise AssertionError("parallel optimal lines with different values")
            return
        c1, k1 = line_lo
        c2, k2 = line_hi
        b_star = (c1 - c2) / Fraction(k1 - k2)
        res = attack(g, b_star)
        meet = _line_value(line_lo, b_star)
        if res.value == meet:
            found.append(Breakpoint(b_star, res.argmin_min_parts, res.argmin_max_parts))
        else:
            # b_star may itself be a breakpoint (probe landed on a kink):
            # distinct extreme argmins certify a slope change there
            if res.argmin_min_parts.part_count < res.argmin_max_parts.part_count:
                found.append(
                    Breakpoint(b_star, res.argmin_min_parts, res.argmin_max_parts)
                )
            search(b_lo, line_lo, b_star, _line(res.argmin_min_parts))
            search(b_star, _line(res.argmin_max_parts), b_hi, line_hi)

    search(Fraction(0), _line(res_lo.argmin_min_parts), b_hi, _line(res_hi.argmin_max_parts))
    found.sort(key=lambda bp: bp.b)
    return tuple(found)


@functools.lru_cache(maxsize=None)
def strength(g: Graph):
    """Exact strength and its finest attaining partition.

    The strength is the first breakpoint of the attack function; the
    partition is the maximum-part-count minimizer of c(E(P)) / (|P|-1),
    which is the finest optimal attack partition at b = strength.
    """
    if g.n < 2:
        raise ValueError("strength needs at least two vertices")
    if not g.is_connected():
        raise ValueError("strength is defined for connected graphs")
    # Dinkelbach-style ratio search: start from the singleton line.
    cval = g.total_capacity()
    parts = g.n
    for _ in range(4 * g.n + 8):
        b = cval / Fraction(parts - 1)
        res = attack(g, b)
        if res.value == 0:
            return b, res.argmin_max_parts
        best = res.argmin_max_parts
        cval, parts = best.crossing_value, best.part_count
    raise AssertionError("ratio search failed to converge")


@functools.lru_cache(maxsize=None)
def principal_sequence(g: Graph) -> PrincipalSequence:
    """The nested sequence of partitions from the recursive decomposition:
    repeatedly split every minimum-strength component by its minimum-strength
    partition (ties split simultaneously at one level).

    Critical values are strictly increasing and the final partition is all
    singletons.  Disconnected graphs are supported; level 0 is the component
    partition.
    """
    p0 = partition_from_blocks(g, component_blocks(g))
    levels: list[PspLevel] = []
    current: list[tuple[int, ...]] = list(p0.parts)
    a_edges: set[int] = set()
    strengths: dict[tuple[int, ...], tuple[Fraction, VertexPartition]] = {}

    def component_strength(part: tuple[int, ...]):
        if part not in strengths:
            sub, vmap, eids = induced_subgraph(g, part)
            sigma, q = strength(sub)
            inv = {i: v for v, i in vmap.items()}
            q_parts = tuple(tuple(sorted(inv[x] for x in blk)) for blk in q.parts)
            strengths[part] = (sigma, q_parts)
        return strengths[part]

    prev_lam = None
    while any(len(part) > 1 for part in current):
        lam = None
        for part in current:
            if len(part) < 2:
                continue
            sigma, _ = component_strength(part)
            if lam is None or sigma < lam:
                lam = sigma
        split_components = []
        next_parts: list[tuple[int, ...]] = []
        new_b: set[int] = set()
        for part in current:
            if len(part) >= 2 and component_strength(part)[0] == lam:
                _, q_parts = component_strength(part)
                split_components.append(part)
                next_parts.extend(q_parts)
            else:
                next_parts.append(part)
        partition = partition_from_blocks(g, next_parts)
        block = partition.block_of(g.n)
        a_now = set(crossing_edges(g, block))
        new_b = a_now - a_edges
        if prev_lam is not None and not lam > prev_lam:
            raise AssertionError("critical values must be strictly increasing")
        prev_lam = lam
        a_edges = a_now
        levels.append(
            PspLevel(
                lam=lam,
                partition=partition,
                a_edges=frozenset(a_edges),
                b_edges=frozenset(new_b),
                split_components=tuple(sorted(split_components)),
                kappa=partition.part_count,
            )
        )
        current = list(partition.parts)
    if levels and levels[-1].kappa != g.n:
        raise AssertionError("final partition must be all singletons")
    return PrincipalSequence(g, p0, tuple(levels))
