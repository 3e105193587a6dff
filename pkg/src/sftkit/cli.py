"""Command line front end.

Exit codes: 0 success / verified, 1 verified false (counterexamples in the
output), 2 input error, 3 bound exceeded or inconclusive.  All output is
deterministic for fixed inputs and flags; --json emits sorted JSON.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import io as sio
from .cohomology import (
    NegativeCycleWitness,
    class_is_positive,
    find_potential,
    groupoid_cocycle_eval,
    transition_graph,
)
from .cylinders import CylinderFunction
from .errors import (
    DepthExceeded,
    LeastPeriodViolation,
    NotPositiveClass,
    ParseError,
    SftError,
)
from .flow import TowerSpec, bowen_franks, build_tower, graph_move
from .groupoid import compose, invert, make_element, unit
from .orbit import coe_to_flow_pipeline, derive_cocycle_pair, verify_coe
from .samples import random_bipoint, random_point
from .suspension import quarter_grid, verify_flow_claims

OK, FALSIFIED, INPUT_ERROR, INCONCLUSIVE = 0, 1, 2, 3


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)


def _load_fn(spec: str, P):
    if spec.startswith("const:"):
        return CylinderFunction.constant(P, int(spec.split(":", 1)[1]))
    if spec.startswith("file:"):
        spec = spec.split(":", 1)[1]
    return sio.read_cylinder_function(spec, P)


def cmd_invariants(args):
    P = sio.read_presentation(args.sft)
    rep = bowen_franks(P)
    _emit(args, {"snf": list(rep.snf_diagonal), "det": rep.det}, [str(rep)])
    return OK


def cmd_language(args):
    P = sio.read_presentation(args.sft)
    words = P.sorted_words(P.language(args.m))
    _emit(args, {"m": args.m, "words": [sio.format_word(P, w) for w in words]},
          [sio.format_word(P, w) for w in words])
    return OK


def cmd_tower(args):
    P = sio.read_presentation(args.sft)
    f = _load_fn(args.f, P)
    tower = build_tower(TowerSpec(P, f))
    text = sio.format_presentation(tower.presentation)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    lines = [] if args.out else [text.rstrip()]
    payload = {"vertices": len(tower.presentation.labels),
               "file": args.out or None}
    if args.check_invariants:
        before, after = bowen_franks(P), bowen_franks(tower.presentation)
        preserved = before == after
        payload.update({"det_before": before.det, "det_after": after.det,
                        "preserved": preserved})
        lines.append(f"det preserved: {str(preserved).lower()}")
        _emit(args, payload, lines)
        return OK if preserved else FALSIFIED
    _emit(args, payload, lines)
    return OK


def _parse_parts(P, text):
    return [[P.labels[int(i)] for i in part.split(",") if i != ""]
            for part in text.split(";")]


def cmd_move(args):
    P = sio.read_presentation(args.sft)
    vertex = P.labels[args.vertex]
    parts = _parse_parts(P, args.parts) if args.parts else None
    Q = graph_move(P, args.kind, vertex, parts)
    text = sio.format_presentation(Q)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        _emit(args, {"file": args.out, "vertices": len(Q.labels)},
              [f"wrote {args.out}"])
    else:
        _emit(args, {"vertices": len(Q.labels), "sft": text},
              [text.rstrip()])
    return OK


def cmd_potential(args):
    P = sio.read_presentation(args.sft)
    f = _load_fn(args.f, P)
    W = transition_graph(P, f)
    res = find_potential(W)
    if isinstance(res, NegativeCycleWitness):
        _emit(args, {"result": "negative-cycle", "sum": res.total,
                     "arcs": [sio.format_word(P, a.tag) for a in res.cycle]},
              [sio.format_negative_cycle(P, res).rstrip()])
        return FALSIFIED
    lines = [f"{sio.format_word(P, v)} {res.kappa[v]}"
             for v in P.sorted_words(res.kappa)]
    _emit(args, {"result": "potential",
                 "kappa": {sio.format_word(P, v): res.kappa[v]
                           for v in res.kappa}},
          ["potential"] + lines)
    return OK


def cmd_positive(args):
    P = sio.read_presentation(args.sft)
    f = _load_fn(args.f, P)
    res = class_is_positive(P, f)
    if isinstance(res, NegativeCycleWitness):
        _emit(args, {"result": "not-positive", "sum": res.total,
                     "arcs": [sio.format_word(P, a.tag) for a in res.cycle]},
              [sio.format_negative_cycle(P, res).rstrip()])
        return FALSIFIED
    assert res.verify(f)
    _emit(args, {"result": "positive",
                 "b": {sio.format_word(P, w): v
                       for w, v in res.witness_b.table.items()},
                 "n": {sio.format_word(P, w): v
                       for w, v in res.nonneg.table.items()}},
          [sio.format_certificate(P, res).rstrip()])
    return OK


def cmd_derive_cocycles(args):
    h = sio.read_orbit_equivalence(args.oe)
    pair = derive_cocycle_pair(h, args.depth)
    P = h.domain
    lines = [f"depth {pair.depth}"]
    for w in P.sorted_words(pair.k.table):
        lines.append(f"{sio.format_word(P, w)} k={pair.k.table[w]} "
                     f"l={pair.l.table[w]}")
    _emit(args, {"depth": pair.depth,
                 "k": {sio.format_word(P, w): v for w, v in pair.k.table.items()},
                 "l": {sio.format_word(P, w): v for w, v in pair.l.table.items()}},
          lines)
    return OK


def cmd_verify_coe(args):
    h = sio.read_orbit_equivalence(args.oe)
    pair = derive_cocycle_pair(h, args.depth)
    pair_prime = derive_cocycle_pair(h.inverse(), args.depth)
    rep = verify_coe(h, pair, pair_prime, args.max_cycle)
    ok = rep.verified and rep.least_period_preserving
    lines = [f"verified: {str(rep.verified).lower()}",
             f"least-period preserving: "
             f"{str(rep.least_period_preserving).lower()} "
             f"({rep.lp_checked_cycles} orbits)"]
    for w, reason, ce in rep.failures[:10]:
        lines.append(f"failure at {w}: {reason}"
                     + (f" (counterexample {ce})" if ce else ""))
    for x, want, got in rep.lp_witnesses[:10]:
        lines.append(f"period violated at {x}: lp(h(x))={want}, sum={got}")
    _emit(args, rep.as_dict(), lines)
    return OK if ok else FALSIFIED


def _claim_sample(h, seed, count):
    rng = random.Random(seed)
    return [random_bipoint(rng, h.domain) for _ in range(count)]


def cmd_pipeline(args):
    h = sio.read_orbit_equivalence(args.oe)
    D = coe_to_flow_pipeline(h, max_depth=args.depth,
                             max_cycle_len=args.max_cycle, scoe=args.scoe)
    sample = _claim_sample(h, args.seed, args.samples)
    rep = verify_flow_claims(D, sample)
    summary = {
        "cocycle_depth": D.k.depth,
        "n_max": D.n.max_value(),
        "b_shift_constants": list(D.shift_constants),
        "claims_checked": len(rep.results),
        "claims_failed": len(rep.failures),
        "inconclusive": len(rep.inconclusive),
        "results": rep.as_list() if args.json else None,
    }
    lines = [f"cocycle depth: {D.k.depth}",
             f"claims checked: {len(rep.results)}",
             f"claims failed: {len(rep.failures)}"]
    for r in rep.failures[:10]:
        lines.append(f"FAIL {r.claim} at {r.point} {r.parameters}: "
                     f"{r.lhs} != {r.rhs}")
    _emit(args, summary, lines)
    if rep.failures:
        return FALSIFIED
    if rep.inconclusive:
        return INCONCLUSIVE
    return OK


def cmd_verify_claims(args):
    h = sio.read_orbit_equivalence(args.oe)
    D = coe_to_flow_pipeline(h, max_depth=args.depth,
                             max_cycle_len=args.max_cycle)
    sample = _claim_sample(h, args.seed, args.samples)
    grid = quarter_grid(args.t_grid[0], args.t_grid[1])
    rep = verify_flow_claims(D, sample, j_range=tuple(args.j_range),
                             t_grid=grid)
    by_claim = {}
    for r in rep.results:
        s = by_claim.setdefault(r.claim, [0, 0])
        s[0] += 1
        s[1] += 0 if r.passed else 1
    lines = [f"{c}: {tot - bad}/{tot} pass" for c, (tot, bad)
             in sorted(by_claim.items())]
    _emit(args, {"claims": rep.as_list()}, lines)
    return OK if rep.all_pass() else FALSIFIED


def cmd_groupoid_check(args):
    P = sio.read_presentation(args.sft)
    rng = random.Random(args.seed)
    checks = {"axioms": 0, "cocycle": 0}
    for _ in range(args.samples):
        x = random_point(rng, P)
        # a composable triple through shifted tails of one orbit
        a = make_element(x, 1, x.shift(1))
        b = make_element(x.shift(1), 2, x.shift(3))
        c = make_element(x.shift(3), -3, x)
        ab_c = compose(compose(a, b), c)
        a_bc = compose(a, compose(b, c))
        assert ab_c == a_bc, "associativity failed"
        assert compose(a, invert(a)) == unit(x), "inverse law failed"
        assert compose(unit(x), a) == a, "left unit failed"
        checks["axioms"] += 1
        g = CylinderFunction(P, 1, {w: rng.randint(-2, 2)
                                    for w in P.language(1)})
        val = groupoid_cocycle_eval(g, compose(a, b))
        assert val == (groupoid_cocycle_eval(g, a)
                       + groupoid_cocycle_eval(g, b)), "additivity failed"
        assert groupoid_cocycle_eval(g, invert(a)) == \
            -groupoid_cocycle_eval(g, a), "inversion failed"
        db = g - g.pullback()
        assert groupoid_cocycle_eval(db, a) == g(a.range_pt) - g(a.source_pt)
        checks["cocycle"] += 1
    _emit(args, {"samples": args.samples, "checks": checks},
          [f"groupoid axioms: {checks['axioms']} samples ok",
           f"cocycle laws: {checks['cocycle']} samples ok"])
    return OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="sftkit",
        description="exact toolkit for shifts of finite type: cohomology "
                    "positivity, orbit-equivalence cocycles, and the "
                    "orbit-to-flow pipeline")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p = sub.add_parser("invariants", help="Smith form and det of I - A")
    p.add_argument("sft")
    common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("language", help="admissible words of a length")
    p.add_argument("sft")
    p.add_argument("-m", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_language)

    p = sub.add_parser("tower", help="build the discrete tower over a shift")
    p.add_argument("sft")
    p.add_argument("--f", required=True,
                   help="floor function: const:N or a fn file")
    p.add_argument("--check-invariants", action="store_true")
    p.add_argument("--out")
    common(p)
    p.set_defaults(fn=cmd_tower)

    p = sub.add_parser("move", help="graph moves (splits, attach-head)")
    p.add_argument("sft")
    p.add_argument("--kind", required=True,
                   choices=["out_split", "in_split", "attach_head"])
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--parts", help="e.g. '0,1;2' (vertex indices)")
    p.add_argument("--out")
    common(p)
    p.set_defaults(fn=cmd_move)

    p = sub.add_parser("potential", help="node potential or negative cycle")
    p.add_argument("sft")
    p.add_argument("--f", required=True)
    common(p)
    p.set_defaults(fn=cmd_potential)

    p = sub.add_parser("positive", help="positivity certificate for a class")
    p.add_argument("sft")
    p.add_argument("--f", required=True)
    common(p)
    p.set_defaults(fn=cmd_positive)

    p = sub.add_parser("derive-cocycles", help="minimal cocycle pair of an OE")
    p.add_argument("oe")
    p.add_argument("--depth", type=int, default=12)
    common(p)
    p.set_defaults(fn=cmd_derive_cocycles)

    p = sub.add_parser("verify-coe", help="verify the cocycle identities")
    p.add_argument("oe")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--max-cycle", type=int, default=6)
    common(p)
    p.set_defaults(fn=cmd_verify_coe)

    p = sub.add_parser("pipeline", help="orbit equivalence to flow data")
    p.add_argument("oe")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--max-cycle", type=int, default=6)
    p.add_argument("--scoe", action="store_true",
                   help="prefer the strong-equivalence decomposition")
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=cmd_pipeline)

    p = sub.add_parser("verify-claims", help="flow-claim report for an OE")
    p.add_argument("oe")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--max-cycle", type=int, default=6)
    p.add_argument("--j-range", type=int, nargs=2, default=[-4, 4])
    p.add_argument("--t-grid", type=int, nargs=2, default=[-2, 2],
                   help="quarter-step grid endpoints")
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=cmd_verify_claims)

    p = sub.add_parser("groupoid-check", help="groupoid axiom spot checks")
    p.add_argument("sft")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=cmd_groupoid_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except (DepthExceeded,) as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return INCONCLUSIVE
    except LeastPeriodViolation as e:
        print(f"verified false: {e}", file=sys.stderr)
        return FALSIFIED
    except NotPositiveClass as e:
        print(f"verified false: {e}", file=sys.stderr)
        return FALSIFIED
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except SftError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
