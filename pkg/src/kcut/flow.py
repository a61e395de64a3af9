"""Exact maximum flow / minimum cut by shortest augmenting paths.

Works over any ordered field-like value type supporting +, -, and
comparisons (plain Fractions, or the infinitesimally perturbed rationals
from :mod:`kcut.exact` used by the parametric attack oracle).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graph import Graph


class FlowNetwork:
    def __init__(self, n: int, zero=Fraction(0)):
        self.n = n
        self.zero = zero
        self.adj: list[list[int]] = [[] for _ in range(n)]
        # arcs stored flat: to[i], cap[i]; arc i^1 is the reverse of arc i
        self.to: list[int] = []
        self.cap: list = []

    def add_arc(self, u: int, v: int, cap, rev_cap=None):
        if rev_cap is None:
            rev_cap = self.zero
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rev_cap)

    def add_undirected(self, u: int, v: int, cap):
        self.add_arc(u, v, cap, rev_cap=cap)

    def max_flow(self, s: int, t: int):
        """Edmonds-Karp; exact for any ordered value type."""
        total = self.zero
        zero = self.zero
        while True:
            prev_arc = [-1] * self.n
            prev_arc[s] = -2
            queue = deque([s])
            while queue and prev_arc[t] == -1:
                u = queue.popleft()
                for a in self.adj[u]:
                    v = self.to[a]
                    if prev_arc[v] == -1 and self.cap[a] > zero:
                        prev_arc[v] = a
                        queue.append(v)
            if prev_arc[t] == -1:
                return total
            # bottleneck along the path
            bottleneck = None
            v = t
            while v != s:
                a = prev_arc[v]
                if bottleneck is None or self.cap[a] < bottleneck:
                    bottleneck = self.cap[a]
                v = self.to[a ^ 1]
            v = t
            while v != s:
                a = prev_arc[v]
                self.cap[a] -= bottleneck
                self.cap[a ^ 1] += bottleneck
                v = self.to[a ^ 1]
            total = total + bottleneck

    def residual_reachable(self, s: int) -> frozenset[int]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        zero = self.zero
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if not seen[v] and self.cap[a] > zero:
                    seen[v] = True
                    queue.append(v)
        return frozenset(i for i in range(self.n) if seen[i])


def max_flow_min_cut(g: Graph, s: int, t: int, caps=None):
    """Exact max s-t flow value and the canonical minimum cut side.

    The returned vertex set is the s-side: everything reachable from s in
    the residual network.  ``caps`` optionally overrides edge capacities
    (aligned with g.edges).
    """
    if s == t:
        raise ValueError("s and t must differ")
    if caps is None:
        caps = [e.cap for e in g.edges]
    net = FlowNetwork(g.n)
    for e, c in zip(g.edges, caps):
        net.add_undirected(e.u, e.v, Fraction(c))
    value = net.max_flow(s, t)
    return value, net.residual_reachable(s)
