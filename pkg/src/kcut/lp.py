"""Closed-form primal and dual optima of the k-cut relaxation, built from the
principal sequence of partitions, with machine-checkable certificates.

For level index j (the smallest with kappa_j >= k) and
alpha = (k - kappa_{j-1}) / (kappa_j - kappa_{j-1}):

* primal: x = 1 on A_{j-1}, alpha on B_j, 0 elsewhere;
* dual: z adds (lambda_j/lambda_i - 1) c_e to every B_i edge with i < j, and
  y scales the ideal tree packing (one saturating packing per level) by
  lambda_j;
* both objectives equal cbar(A_{j-1}) + (k - kappa_{j-1}) lambda_j, which is
  also the Lagrangean bound max_b g(b) + b(k-1), maximized at b = lambda_j.

Disconnected graphs are supported throughout: constraints run over maximal
forests with right-hand side k - h for h components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    Graph,
    component_blocks,
    contract_partition,
    induced_subgraph,
)
from .packing import TreePacking, exact_pack, min_spanning_forest, saturating_pack
from .strength import PrincipalSequence, principal_sequence


@dataclass(frozen=True)
class PrimalSolution:
    k: int
    x: tuple[Fraction, ...]
    level_index: int  # j
    alpha: Fraction
    objective: Fraction


@dataclass(frozen=True)
class DualSolution:
    k: int
    z: tuple[Fraction, ...]
    total_y: Fraction  # sum of packing weights, lambda_j
    level_index: int
    objective: Fraction
    h: int
    packing: TreePacking | None  # explicit mode only


@dataclass(frozen=True)
class ComponentPacking:
    component: tuple[int, ...]
    quotient_parts: tuple[tuple[int, ...], ...]
    packing: TreePacking  # edge ids refer to the original graph


@dataclass(frozen=True)
class IdealLevel:
    lam: Fraction
    packings: tuple[ComponentPacking, ...]


@dataclass(frozen=True)
class IdealPacking:
    """Per-level saturating packings composing to the ideal distribution.

    A full support tree is the union of one tree from every component packing
    across all levels; the induced per-edge load is c(e)/lambda_i on level-i
    crossing edges.
    """

    graph: Graph
    levels: tuple[IdealLevel, ...]
    edge_level: tuple[int, ...]  # 1-based level whose B_i contains each edge

    def marginal_load(self, eid: int) -> Fraction:
        lam = self.levels[self.edge_level[eid] - 1].lam
        return self.graph.edges[eid].cap / lam

    def compose(self, pick=None) -> tuple[int, ...]:
        """Union of one support tree per component packing (default: first);
        always a maximal forest of the graph."""
        chosen: list[int] = []
        for li, level in enumerate(self.levels):
            for ci, comp in enumerate(level.packings):
                idx = 0 if pick is None else pick(li, ci, comp)
                chosen.extend(comp.packing.support()[idx])
        return tuple(sorted(chosen))


def _check_positive_strength(psp: PrincipalSequence) -> None:
    if psp.levels and psp.levels[0].lam <= 0:
        raise ValueError(
            "k-cut LP closed forms require every cut to have positive "
            "capacity (minimum component strength is 0)"
        )


def _cbar(g: Graph, edge_ids) -> Fraction:
    return sum((g.edges[i].cap for i in edge_ids), Fraction(0))


def lp_primal(psp: PrincipalSequence, k: int) -> PrimalSolution:
    """Optimal primal vector: 1 on A_{j-1}, alpha on B_j, 0 elsewhere."""
    g = psp.graph
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} out of range 2..{g.n}")
    _check_positive_strength(psp)
    h = psp.kappa0()
    if k <= h:
        return PrimalSolution(k, (Fraction(0),) * g.m, 0, Fraction(0), Fraction(0))
    j = psp.level_for_k(k)
    level = psp.levels[j - 1]
    kappa_prev = psp.kappa_at(j - 1)
    a_prev = psp.a_edges_at(j - 1)
    alpha = Fraction(k - kappa_prev, level.kappa - kappa_prev)
    x = [Fraction(0)] * g.m
    for eid in a_prev:
        x[eid] = Fraction(1)
    for eid in level.b_edges:
        x[eid] = alpha
    objective = _cbar(g, a_prev) + (k - kappa_prev) * level.lam
    got = sum((g.edges[i].cap * x[i] for i in range(g.m)), Fraction(0))
    if got != objective:
        raise AssertionError("primal objective mismatch")
    return PrimalSolution(k, tuple(x), j, alpha, objective)


def lagrangean_value(psp: PrincipalSequence, k: int):
    """max over b >= 0 of g(b) + b(k-1); the maximum sits at b = lambda_j and
    equals the LP optimum."""
    g = psp.graph
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} out of range 2..{g.n}")
    h = psp.kappa0()
    if k <= h:
        return Fraction(0), Fraction(0)
    j = psp.level_for_k(k)
    level = psp.levels[j - 1]
    kappa_prev = psp.kappa_at(j - 1)
    value = _cbar(g, psp.a_edges_at(j - 1)) + (k - kappa_prev) * level.lam
    return value, level.lam


def _restriction(partition, component) -> tuple[tuple[int, ...], ...]:
    comp = set(component)
    return tuple(p for p in partition.parts if p[0] in comp)


def ideal_packing(g: Graph, psp: PrincipalSequence | None = None) -> IdealPacking:
    """One saturating packing per split component per level.

    Level i's component C, contracted by its minimum-strength partition Q,
    is strength-tight with value lambda_i, so a packing with every crossing
    edge fully loaded exists; scaled by 1/lambda_i it is the level's tree
    distribution, inducing load c(e)/lambda_i on each crossing edge.
    """
    if psp is None:
        psp = principal_sequence(g)
    _check_positive_strength(psp)
    levels = []
    edge_level = [0] * g.m
    for idx, level in enumerate(psp.levels, start=1):
        comp_packs = []
        for comp in level.split_components:
            sub, vmap, sub_eids = induced_subgraph(g, comp)
            local_parts = [
                tuple(sorted(vmap[v] for v in part))
                for part in _restriction(level.partition, comp)
            ]
            quotient, _, kept = contract_partition(sub, local_parts)
            pack_local = saturating_pack(quotient, expected_value=level.lam)
            # translate quotient edge ids back to original ids
            to_orig = [sub_eids[kept[i]] for i in range(quotient.m)]
            trees = tuple(
                tuple(sorted(to_orig[i] for i in tree)) for tree in pack_local.trees
            )
            caps = {to_orig[i]: c for i, c in pack_local.caps.items()}
            pack = TreePacking(trees, pack_local.weights, caps)
            if pack.total_value != level.lam:
                raise AssertionError("saturating packing value != level lambda")
            comp_packs.append(
                ComponentPacking(tuple(comp), _restriction(level.partition, comp), pack)
            )
        for eid in level.b_edges:
            edge_level[eid] = idx
        levels.append(IdealLevel(level.lam, tuple(comp_packs)))
    if psp.levels and any(lv == 0 for lv in edge_level):
        raise AssertionError("every edge must appear in exactly one level")
    return IdealPacking(g, tuple(levels), tuple(edge_level))


def lp_dual(g: Graph, psp: PrincipalSequence | None = None, k: int = 2,
            explicit: bool = False) -> DualSolution:
    """Optimal dual: closed-form z plus a packing of value lambda_j in c+z.

    Lazy mode carries only the per-level marginals (enough for objective and
    feasibility checks); ``explicit=True`` materializes a basic optimal
    packing of value lambda_j against c+z by column generation, needed for
    complementary slackness and cut enumeration.
    """
    if psp is None:
        psp = principal_sequence(g)
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} out of range 2..{g.n}")
    _check_positive_strength(psp)
    h = psp.kappa0()
    if k <= h:
        packing = TreePacking((), (), {}) if explicit else None
        return DualSolution(k, (Fraction(0),) * g.m, Fraction(0), 0, Fraction(0), h, packing)
    j = psp.level_for_k(k)
    lam_j = psp.levels[j - 1].lam
    z = [Fraction(0)] * g.m
    for i in range(1, j):
        level = psp.levels[i - 1]
        ratio = lam_j / level.lam - 1
        for eid in level.b_edges:
            z[eid] = ratio * g.edges[eid].cap
    kappa_prev = psp.kappa_at(j - 1)
    objective = (k - kappa_prev) * lam_j + _cbar(g, psp.a_edges_at(j - 1))
    check = (k - h) * lam_j - sum(z, Fraction(0))
    if check != objective:
        raise AssertionError("dual objective mismatch")
    packing = None
    if explicit:
        caps = [g.edges[i].cap + z[i] for i in range(g.m)]
        packing = exact_pack(g, caps)
        if packing.total_value != lam_j:
            raise AssertionError("explicit dual packing value != lambda_j")
    return DualSolution(k, tuple(z), lam_j, j, objective, h, packing)


@dataclass(frozen=True)
class PrimalVerdict:
    feasible: bool
    bounds_ok: bool
    min_forest_weight: Fraction | None
    required: Fraction
    witness_forest: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.feasible and self.bounds_ok


def verify_primal(g: Graph, x, k: int) -> PrimalVerdict:
    """Check 0 <= x <= 1 and that every maximal forest carries weight at
    least k - h, by pricing a minimum spanning forest under x (exact)."""
    x = [Fraction(v) for v in x]
    if len(x) != g.m:
        raise ValueError("x length mismatch")
    bounds_ok = all(0 <= v <= 1 for v in x)
    h = len(component_blocks(g))
    required = Fraction(max(k - h, 0))
    if g.m == 0:
        return PrimalVerdict(required == 0, bounds_ok, None, required, None)
    forest = min_spanning_forest(g, x)
    weight = sum((x[i] for i in forest), Fraction(0))
    feasible = weight >= required
    return PrimalVerdict(
        feasible, bounds_ok, weight, required, None if feasible else forest
    )


@dataclass(frozen=True)
class DualVerdict:
    feasible: bool
    violations: tuple[tuple[int, Fraction, Fraction], ...]  # (edge, load, cap+z)
    messages: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.feasible


def verify_dual(g: Graph, dual: DualSolution) -> DualVerdict:
    """Exact feasibility of an explicit dual: loads <= c + z, y >= 0, z >= 0."""
    if dual.packing is None:
        raise ValueError("verify_dual needs an explicit packing")
    messages = []
    for eid in range(g.m):
        if dual.z[eid] < 0:
            messages.append(f"negative z on edge {eid}")
    for tree, w in zip(dual.packing.trees, dual.packing.weights):
        if w < 0:
            messages.append(f"negative weight on tree {tree}")
    bad = []
    loads = dual.packing.loads()
    for eid in range(g.m):
        load = loads.get(eid, Fraction(0))
        limit = g.edges[eid].cap + dual.z[eid]
        if load > limit:
            bad.append((eid, load, limit))
            messages.append(f"edge {eid} overloaded: {load} > {limit}")
    return DualVerdict(not messages, tuple(bad), tuple(messages))


@dataclass(frozen=True)
class CsVerdict:
    z_implies_tight_x: bool
    trees_tight: bool
    x_implies_tight_load: bool
    witnesses: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.z_implies_tight_x and self.trees_tight and self.x_implies_tight_load


def check_complementary_slackness(g: Graph, x, dual: DualSolution) -> CsVerdict:
    """The three tightness conditions certifying joint optimality:
    (1) z_e > 0 only with x_e = 1; (2) every support tree's x-weight equals
    k - h; (3) x_e > 0 only with load(e) = c_e + z_e.  All exact."""
    if dual.packing is None:
        raise ValueError("complementary slackness needs an explicit packing")
    x = [Fraction(v) for v in x]
    witnesses = []
    cond1 = True
    for eid in range(g.m):
        if dual.z[eid] > 0 and x[eid] != 1:
            cond1 = False
            witnesses.append(f"z>0 but x<1 on edge {eid}")
    cond2 = True
    target = Fraction(dual.k - dual.h)
    for tree, w in zip(dual.packing.trees, dual.packing.weights):
        if w > 0:
            s = sum((x[eid] for eid in tree), Fraction(0))
            if s != target:
                cond2 = False
                witnesses.append(f"support tree {tree} has x-weight {s} != {target}")
    cond3 = True
    loads = dual.packing.loads()
    for eid in range(g.m):
        if x[eid] > 0:
            load = loads.get(eid, Fraction(0))
            if load != g.edges[eid].cap + dual.z[eid]:
                cond3 = False
                witnesses.append(f"x>0 but load {load} not tight on edge {eid}")
    return CsVerdict(cond1, cond2, cond3, tuple(witnesses))
