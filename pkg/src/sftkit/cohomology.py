"""Positivity of cohomology classes via node potentials.

A class [f] is positive exactly when every periodic orbit sum of f is
non-negative.  On the weighted transition graph of f this is negative-cycle
feasibility, so a shortest-path potential kappa yields the witness pair
(n, b) with  f = n + b - b o sigma,  n >= 0,  b = -kappa on blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cylinders import CylinderFunction, orbit_sum
from .errors import InvalidElement, NotPositiveClass
from .presentation import Presentation


@dataclass(frozen=True)
class Arc:
    source: object
    target: object
    weight: int
    tag: object = None


class WeightedTransitionGraph:
    """Finite weighted digraph; nodes and arcs may carry arbitrary tags."""

    def __init__(self, nodes, arcs):
        self.nodes = list(nodes)
        self.arcs = [a if isinstance(a, Arc) else Arc(*a) for a in arcs]
        node_set = set(self.nodes)
        for a in self.arcs:
            if a.source not in node_set or a.target not in node_set:
                raise ValueError(f"arc {a} uses unknown node")

    def __repr__(self):
        return f"WeightedTransitionGraph({len(self.nodes)} nodes, {len(self.arcs)} arcs)"


@dataclass(frozen=True)
class Potential:
    kappa: dict

    def slack(self, arc: Arc) -> int:
        return arc.weight + self.kappa[arc.source] - self.kappa[arc.target]

    def is_valid_for(self, W: WeightedTransitionGraph) -> bool:
        return all(self.slack(a) >= 0 for a in W.arcs)


@dataclass(frozen=True)
class NegativeCycleWitness:
    cycle: tuple  # consecutive arcs forming a closed path
    total: int

    def verify(self) -> bool:
        arcs = self.cycle
        if not arcs:
            return False
        closed = all(arcs[i].target == arcs[(i + 1) % len(arcs)].source
                     for i in range(len(arcs)))
        return closed and sum(a.weight for a in arcs) == self.total < 0

    def __str__(self):
        path = " ".join(str(a.tag if a.tag is not None else (a.source, a.target))
                        for a in self.cycle)
        return f"negative cycle (sum {self.total}): {path}"


@dataclass(frozen=True)
class PositivityCertificate:
    witness_b: CylinderFunction
    nonneg: CylinderFunction  # the n of f = n + b - b o sigma

    def verify(self, f: CylinderFunction) -> bool:
        n, b = self.nonneg, self.witness_b
        return n.is_nonnegative() and (n + b.coboundary()) == f


def transition_graph(P: Presentation, f: CylinderFunction) -> WeightedTransitionGraph:
    """Nodes are the m-blocks, arcs the (m+1)-blocks weighted by f, where
    m = max(depth(f) - 1, 1)."""
    m = max(f.depth - 1, 1)
    g = f.refine(m + 1)
    nodes = P.sorted_words(P.language(m))
    arcs = [Arc(w[:m], w[1:], g.table[w], w)
            for w in P.sorted_words(P.language(m + 1))]
    return WeightedTransitionGraph(nodes, arcs)


def find_potential(W: WeightedTransitionGraph):
    """A potential with  weight + kappa(source) - kappa(target) >= 0  on
    every arc, or a negative-cycle witness; exactly one of the two.

    Bellman-Ford from a virtual source with zero arcs to every node; the
    distances are the potential.  An arc that still relaxes after |nodes|
    rounds lies on a walk into a negative cycle, recovered through the
    predecessor links and then verified by substitution.
    """
    dist = {v: 0 for v in W.nodes}
    pred = {v: None for v in W.nodes}
    n = len(W.nodes)
    for _ in range(n):
        changed = False
        for a in W.arcs:
            d = dist[a.source] + a.weight
            if d < dist[a.target]:
                dist[a.target] = d
                pred[a.target] = a
                changed = True
        if not changed:
            return Potential(dict(dist))
    # one more full update round; anything that still relaxes hangs off a
    # negative cycle of the predecessor graph
    touched = None
    for a in W.arcs:
        d = dist[a.source] + a.weight
        if d < dist[a.target]:
            dist[a.target] = d
            pred[a.target] = a
            touched = a.target
    if touched is None:
        return Potential(dict(dist))
    v = touched
    for _ in range(n + 1):
        v = pred[v].source
    cycle = []
    u = v
    while True:
        arc = pred[u]
        cycle.append(arc)
        u = arc.source
        if u == v:
            break
    cycle.reverse()
    total = sum(c.weight for c in cycle)
    witness = NegativeCycleWitness(tuple(cycle), total)
    if not witness.verify():
        raise AssertionError("negative-cycle reconstruction failed")
    return witness


def class_is_positive(P: Presentation, f: CylinderFunction):
    """PositivityCertificate for [f] in the positive cone, or a
    NegativeCycleWitness showing it is not.

    The sign convention b = -kappa on m-blocks makes the certificate's
    identity read  f = n + b - b o sigma  with n >= 0 exactly.
    """
    W = transition_graph(P, f)
    m = max(f.depth - 1, 1)
    res = find_potential(W)
    if isinstance(res, NegativeCycleWitness):
        return res
    b = CylinderFunction(P, m, {w: -res.kappa[w] for w in W.nodes})
    n = f.refine(m + 1) - b + b.pullback()
    assert n.is_nonnegative(), "potential failed to produce n >= 0"
    return PositivityCertificate(b, n)


def decompose_positive(P: Presentation, f: CylinderFunction, lower=0):
    """The certificate pair (n, b) with b lifted above a lower bound.

    `lower` may be an int or a CylinderFunction; b is shifted by a constant
    so that b >= lower pointwise (a constant shift does not disturb the
    identity).  Raises NotPositiveClass when [f] is not positive.
    """
    res = class_is_positive(P, f)
    if isinstance(res, NegativeCycleWitness):
        raise NotPositiveClass(res)
    n, b = res.nonneg, res.witness_b
    if isinstance(lower, int):
        lower = CylinderFunction.constant(P, lower)
    gap = (lower - b).max_value()
    if gap > 0:
        b = b + gap
    return n, b


def groupoid_cocycle_eval(g: CylinderFunction, eta) -> int:
    """Value at eta of the groupoid cocycle induced by g.

    For eta = (x, r - s, y) with sigma^r x = sigma^s y the value is
    sum_{i<r} g(sigma^i x) - sum_{j<s} g(sigma^j y); independence of the
    witness pair follows from the witness identity and is re-checked here.
    """
    r, s = eta.witnesses
    x, y = eta.range_pt, eta.source_pt
    if x.shift(r) != y.shift(s):
        raise InvalidElement("witnesses do not verify")
    return (sum(g(x.shift(i)) for i in range(r))
            - sum(g(y.shift(j)) for j in range(s)))


def solve_coboundary(P: Presentation, f: CylinderFunction, max_depth: int):
    """A g with  f = g - g o sigma  of depth <= max_depth, or None.

    For each candidate depth D the equations g(s(w)) - g(r(w)) = f(w) over
    the (D+1)-block arcs form a difference system; a spanning-forest
    assignment either extends to a solution or exposes an inconsistency.
    Cycle sums of f must vanish for any solution to exist, which is checked
    first as a cheap obstruction.
    """
    for c in P.simple_cycles():
        if orbit_sum(f, c) != 0:
            return None
    for D in range(max(f.depth - 1, 0), max_depth + 1):
        g = _solve_difference_system(P, f, D)
        if g is not None:
            return g
    return None


def _solve_difference_system(P: Presentation, f: CylinderFunction, D: int):
    if f.depth > D + 1:
        return None  # the equations at this depth cannot express f
    width = max(D, 1)
    nodes = P.sorted_words(P.language(width))
    arcs = P.sorted_words(P.language(width + 1))
    fr = f.refine(D + 1)

    def src(w):
        return w[:width]

    def dst(w):
        return w[1:]

    neighbors = {v: [] for v in nodes}
    for w in arcs:
        val = fr.value_on(w)
        neighbors[src(w)].append((dst(w), -val))   # g(dst) = g(src) - f(w)
        neighbors[dst(w)].append((src(w), val))    # g(src) = g(dst) + f(w)

    g = {}
    for root in nodes:
        if root in g:
            continue
        g[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u, delta in neighbors[v]:
                val = g[v] + delta
                if u in g:
                    if g[u] != val:
                        return None
                else:
                    g[u] = val
                    stack.append(u)
    for w in arcs:
        if g[src(w)] - g[dst(w)] != fr.value_on(w):
            return None
    table = {v: g[v] for v in nodes}
    if D == 0 and len(set(table.values())) > 1:
        return None  # a depth-0 solution must be constant
    return CylinderFunction(P, D, table)
