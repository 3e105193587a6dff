"""Continuous orbit equivalence as explicit data.

An orbit equivalence is a concrete homeomorphism (prefix exchange, block
conjugacy, or composition) together with derived cocycle pairs (k, l) and
(k', l') witnessing the orbit-to-orbit identities.  Everything downstream
of a verified pair is assembled here: least-period preservation, the
strong-equivalence transfer function when one exists, and the executable
pipeline producing flow-map data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import decompose_positive, solve_coboundary
from .cylinders import CylinderFunction, orbit_sum
from .errors import (
    DepthExceeded,
    LeastPeriodViolation,
    NeedDepth,
)
from .maps import (
    PointMap,
    minimal_cocycle_on_cylinder,
    verify_cocycle_on_cylinder,
)
from .points import EvPerPoint
from .presentation import Presentation
from .suspension import FlowMapData


class OrbitEquivalence:
    """A homeomorphism with its inverse, checked to round-trip pointwise on
    eventually periodic completions of every cylinder at the map's own
    resolution."""

    def __init__(self, forward: PointMap, check_depth=None):
        self.forward = forward
        self.backward = forward.inverse()
        self.domain = forward.domain
        self.codomain = forward.codomain
        d = check_depth if check_depth is not None else max(
            forward.prefix_needed(1), 2)
        for P, f, g in [(self.domain, self.forward, self.backward),
                        (self.codomain, self.backward, self.forward)]:
            for w in P.sorted_words(P.language(d)):
                pre, cyc = P.complete_to_cycle_word(w)
                x = EvPerPoint.make(P, pre, cyc)
                if g(f(x)) != x:
                    raise ValueError(f"inverse fails at {x} (cylinder {w!r})")

    def inverse(self) -> "OrbitEquivalence":
        inv = OrbitEquivalence.__new__(OrbitEquivalence)
        inv.forward = self.backward
        inv.backward = self.forward
        inv.domain = self.codomain
        inv.codomain = self.domain
        return inv

    def compose(self, other: "OrbitEquivalence") -> "OrbitEquivalence":
        """self followed by other."""
        return OrbitEquivalence(self.forward.then(other.forward))

    def __call__(self, x):
        return self.forward(x)


@dataclass(frozen=True)
class CocyclePair:
    k: CylinderFunction
    l: CylinderFunction

    def __post_init__(self):
        if self.k.depth != self.l.depth:
            raise ValueError("k and l must share a depth")
        if not (self.k.is_nonnegative() and self.l.is_nonnegative()):
            raise ValueError("cocycle values must be non-negative")

    @property
    def depth(self):
        return self.k.depth

    def difference(self) -> CylinderFunction:
        return self.l - self.k


@dataclass
class COEReport:
    verified: bool
    depth: int
    failures: list = field(default_factory=list)
    least_period_preserving: bool = True
    lp_witnesses: list = field(default_factory=list)
    lp_checked_cycles: int = 0
    scoe_transfer: object = None

    def as_dict(self):
        return {
            "verified": self.verified,
            "depth": self.depth,
            "failures": [list(map(str, f)) for f in self.failures],
            "least_period_preserving": self.least_period_preserving,
            "lp_witnesses": [str(w) for w in self.lp_witnesses],
            "lp_checked_cycles": self.lp_checked_cycles,
            "strongly_coe": self.scoe_transfer is not None,
        }


def derive_cocycle_pair(h: OrbitEquivalence, max_depth: int = 12) -> CocyclePair:
    """Per-cylinder minimal (k, l) for the forward map, as cylinder
    functions of one uniform depth.

    Cylinders are refined adaptively until the symbolic images of x and
    sigma(x) are both determined; the minimal valid pair on each resolved
    cylinder is then constant on all of its refinements.
    """
    P = h.domain
    stages = h.forward.stages
    resolved = {}
    work = list(P.sorted_words(P.language(1)))
    while work:
        w = work.pop()
        try:
            resolved[w] = minimal_cocycle_on_cylinder(stages, w, P)
        except NeedDepth as e:
            if e.needed > max_depth:
                raise DepthExceeded(
                    f"cylinder {w!r} unresolved at depth {max_depth}")
            work.extend(P.extensions(w))
    depth = max(len(w) for w in resolved)
    ktab, ltab = {}, {}
    for w in P.language(depth):
        govern = next(w[:i] for i in range(1, depth + 1) if w[:i] in resolved)
        ktab[w], ltab[w] = resolved[govern]
    return CocyclePair(CylinderFunction(P, depth, ktab),
                       CylinderFunction(P, depth, ltab))


def _verify_pair_on(P: Presentation, pm: PointMap, pair: CocyclePair, slack=8):
    """Exhaustive symbolic Eq-check of a pair at its depth.

    Returns a list of failures (cylinder, reason, counterexample point).
    Cylinders are refined internally when the comparison needs more
    symbols; the pair's values stay those of the governing cylinder.
    """
    failures = []
    d = pair.depth
    for w0 in P.sorted_words(P.language(max(d, 1))):
        k, l = pair.k.value_on(w0), pair.l.value_on(w0)
        work = [w0]
        while work:
            w = work.pop()
            try:
                ok, reason = verify_cocycle_on_cylinder(pm.stages, w, P, k, l)
            except NeedDepth as e:
                if e.needed > len(w0) + slack:
                    failures.append((w0, "undetermined within slack", None))
                    continue
                work.extend(P.extensions(w))
                continue
            if not ok:
                failures.append((w, reason, _counterexample(P, pm, w, k, l)))
    return failures


def _counterexample(P, pm: PointMap, w, k, l):
    """A concrete eventually periodic point witnessing the failure, checked
    by evaluating both sides of the identity on it."""
    pre, cyc = P.complete_to_cycle_word(w)
    x = EvPerPoint.make(P, pre, cyc)
    lhs = pm(x.shift(1)).shift(k)
    rhs = pm(x).shift(l)
    if lhs != rhs:
        return x
    return None


def verify_coe(h: OrbitEquivalence, pair: CocyclePair, pair_prime: CocyclePair,
               max_cycle_len: int = 6, scoe_depth=None) -> COEReport:
    """Exhaustive symbolic verification of both cocycle identities, plus
    the least-period bookkeeping and optional strong-equivalence search."""
    failures = _verify_pair_on(h.domain, h.forward, pair)
    failures += [(w, f"[inverse] {r}", c) for (w, r, c) in
                 _verify_pair_on(h.codomain, h.backward, pair_prime)]
    report = COEReport(verified=not failures,
                       depth=max(pair.depth, pair_prime.depth),
                       failures=failures)
    ok, witnesses, checked = check_least_period_preserving(
        h, pair, max_cycle_len, with_count=True)
    report.least_period_preserving = ok
    report.lp_witnesses = witnesses
    report.lp_checked_cycles = checked
    if scoe_depth is not None:
        report.scoe_transfer = find_scoe_transfer(h, pair, scoe_depth)
    return report


def check_least_period_preserving(h: OrbitEquivalence, pair: CocyclePair,
                                  max_cycle_len: int = 6, with_count=False):
    """Compare lp(h(x)) with the (l - k) orbit sum on every periodic orbit
    of cycle length <= max_cycle_len (one representative per orbit)."""
    P = h.domain
    diff = pair.difference()
    witnesses = []
    cycles = P.cycles(max_cycle_len)
    for c in cycles:
        x = EvPerPoint.make(P, (), c)
        want = h(x).least_period()
        got = orbit_sum(diff, c)
        if want != got:
            witnesses.append((x, want, got))
    ok = not witnesses
    if with_count:
        return ok, witnesses, len(cycles)
    return ok, witnesses


def find_scoe_transfer(h: OrbitEquivalence, pair: CocyclePair,
                       max_depth: int = 8):
    """A transfer function b with l - k = 1 + b - b o sigma, or None.

    The orbit-sum obstruction (every cycle sum of l - k must equal the
    cycle length) is checked first inside the coboundary solver.
    """
    target = pair.difference() - 1
    return solve_coboundary(h.domain, target, max_depth)


def coe_to_flow_pipeline(h: OrbitEquivalence, max_depth: int = 12,
                         max_cycle_len: int = 6, scoe: bool = False,
                         scoe_depth: int = 8,
                         repair_lp: bool = False) -> FlowMapData:
    """Derive, verify, decompose: the executable route from an orbit
    equivalence to flow-map data.

    Raises DepthExceeded when derivation stalls, LeastPeriodViolation when
    the derived pairs fail the period bookkeeping (a repair search can be
    enabled), and NotPositiveClass if the class of l - k is not positive,
    which would contradict the existence theorem and is surfaced loudly.
    """
    pair = derive_cocycle_pair(h, max_depth)
    pair_prime = derive_cocycle_pair(h.inverse(), max_depth)
    report = verify_coe(h, pair, pair_prime, max_cycle_len)
    if not report.verified:
        raise AssertionError(
            f"derived pair failed its own verification: {report.failures[:2]}")
    if not report.least_period_preserving:
        if repair_lp:
            repaired = _repair_pair(h, pair, max_cycle_len)
            if repaired is None:
                raise LeastPeriodViolation(report.lp_witnesses)
            pair = repaired
        else:
            raise LeastPeriodViolation(report.lp_witnesses)

    shift_c = [0, 0]
    n = b = n_p = b_p = None
    if scoe:
        t = find_scoe_transfer(h, pair, scoe_depth)
        if t is not None:
            n = CylinderFunction.constant(h.domain, 1)
            b = t
        t2 = find_scoe_transfer(h.inverse(), pair_prime, scoe_depth)
        if t2 is not None:
            n_p = CylinderFunction.constant(h.codomain, 1)
            b_p = t2
    if n is None:
        n, b = decompose_positive(h.domain, pair.difference(), lower=pair.l)
    else:
        gap = (pair.l - b).max_value()
        if gap > 0:
            shift_c[0] = gap
            b = b + gap
    if n_p is None:
        n_p, b_p = decompose_positive(h.codomain, pair_prime.difference(),
                                      lower=pair_prime.l)
    else:
        gap = (pair_prime.l - b_p).max_value()
        if gap > 0:
            shift_c[1] = gap
            b_p = b_p + gap
    return FlowMapData(h.forward, pair.k, pair.l, pair_prime.k, pair_prime.l,
                       b, b_p, n, n_p, tuple(shift_c))


def _repair_pair(h: OrbitEquivalence, pair: CocyclePair, max_cycle_len,
                 max_bump: int = 3):
    """Best-effort search for a least-period preserving pair.

    One cylinder at a time, (k, l) is bumped by independent increments and
    the identity re-checked pointwise on eventually periodic completions;
    the symbolic comparison is conservative on shifts with isolated points,
    which is exactly where an alternative pair can exist.
    """
    P = h.domain
    d = pair.depth
    words = P.sorted_words(P.language(max(d, 1)))

    def pointwise_ok(cand):
        for w in words:
            pre, cyc = P.complete_to_cycle_word(w)
            x = EvPerPoint.make(P, pre, cyc)
            if h(x.shift(1)).shift(cand.k.value_on(w)) != \
                    h(x).shift(cand.l.value_on(w)):
                return False
        return True

    for ck in range(max_bump + 1):
        for cl in range(max_bump + 1):
            if ck == cl:
                continue
            for target in words:
                ktab = {w: pair.k.value_on(w) + (ck if w == target else 0)
                        for w in words}
                ltab = {w: pair.l.value_on(w) + (cl if w == target else 0)
                        for w in words}
                cand = CocyclePair(CylinderFunction(P, d, ktab),
                                   CylinderFunction(P, d, ltab))
                if not pointwise_ok(cand):
                    continue
                ok, _ = check_least_period_preserving(h, cand, max_cycle_len)
                if ok:
                    return cand
    return None
