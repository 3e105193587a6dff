"""Text formats: presentations, cylinder functions, certificates, orbit
equivalences, and the point syntax used on the command line.

Presentation files::

    sft v1
    vertices 3
    edge 0 1
    # comments allowed

Cylinder functions::

    fn depth=2
    01 3

Words are vertex indices, written as plain digit strings when every index
is below ten and dot-separated otherwise.  Points read  prefix/cycle ;
two-sided points  leftcycle|middle|rightcycle@phase .
"""

from __future__ import annotations

import os

from .cylinders import CylinderFunction
from .cohomology import NegativeCycleWitness, PositivityCertificate
from .errors import ParseError
from .maps import prefix_exchange
from .orbit import OrbitEquivalence
from .points import BiPoint, EvPerPoint
from .presentation import Presentation, Word


def _lines(text, source):
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line


def parse_presentation(text: str, source="<sft>") -> Presentation:
    lines = list(_lines(text, source))
    if not lines or lines[0][1] != "sft v1":
        raise ParseError(source, 1, "expected header 'sft v1'")
    if len(lines) < 2 or not lines[1][1].startswith("vertices "):
        raise ParseError(source, lines[0][0], "expected 'vertices N'")
    try:
        n = int(lines[1][1].split()[1])
    except (IndexError, ValueError):
        raise ParseError(source, lines[1][0], "bad vertex count")
    edges = []
    for ln, line in lines[2:]:
        parts = line.split()
        if parts[0] != "edge" or len(parts) != 3:
            raise ParseError(source, ln, f"expected 'edge u v', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(source, ln, "edge endpoints must be integers")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(source, ln, "edge endpoint out of range")
        edges.append((u, v))
    try:
        return Presentation(range(n), edges)
    except Exception as e:
        raise ParseError(source, lines[-1][0] if lines else 1, str(e))


def format_presentation(P: Presentation) -> str:
    idx = {v: i for i, v in enumerate(P.labels)}
    out = ["sft v1", f"vertices {len(P.labels)}"]
    for a, b in sorted((idx[a], idx[b]) for a, b in P.edges):
        out.append(f"edge {a} {b}")
    return "\n".join(out) + "\n"


def format_word(P: Presentation, w: Word) -> str:
    idx = [P.index(s) for s in w]
    if all(i < 10 for i in idx):
        return "".join(map(str, idx)) if idx else "-"
    return ".".join(map(str, idx)) if idx else "-"


def parse_word(P: Presentation, text: str, source="<word>", ln=1) -> Word:
    text = text.strip()
    if text in ("", "-"):
        return ()
    if "." in text:
        parts = text.split(".")
    else:
        parts = list(text)
    try:
        idx = [int(p) for p in parts]
    except ValueError:
        raise ParseError(source, ln, f"bad word {text!r}")
    if any(not (0 <= i < len(P.labels)) for i in idx):
        raise ParseError(source, ln, f"symbol out of range in {text!r}")
    return tuple(P.labels[i] for i in idx)


def parse_cylinder_function(text: str, P: Presentation,
                            source="<fn>") -> CylinderFunction:
    lines = list(_lines(text, source))
    if not lines or not lines[0][1].startswith("fn depth="):
        raise ParseError(source, 1, "expected header 'fn depth=d'")
    try:
        depth = int(lines[0][1].split("=", 1)[1])
    except ValueError:
        raise ParseError(source, lines[0][0], "bad depth")
    table = {}
    for ln, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(source, ln, f"expected '<word> <int>', got {line!r}")
        w = parse_word(P, parts[0], source, ln)
        try:
            table[w] = int(parts[1])
        except ValueError:
            raise ParseError(source, ln, f"bad integer {parts[1]!r}")
    try:
        return CylinderFunction(P, depth, table)
    except Exception as e:
        raise ParseError(source, lines[0][0], str(e))


def format_cylinder_function(P: Presentation, f: CylinderFunction) -> str:
    out = [f"fn depth={f.depth}"]
    for w in P.sorted_words(f.table):
        out.append(f"{format_word(P, w)} {f.table[w]}")
    return "\n".join(out) + "\n"


def format_certificate(P: Presentation, cert: PositivityCertificate) -> str:
    return ("certificate positive\n"
            + "b:\n" + format_cylinder_function(P, cert.witness_b)
            + "n:\n" + format_cylinder_function(P, cert.nonneg))


def format_negative_cycle(P: Presentation, w: NegativeCycleWitness) -> str:
    arcs = " ".join(format_word(P, a.tag) if isinstance(a.tag, tuple)
                    else f"{a.source}->{a.target}" for a in w.cycle)
    return f"negative-cycle sum={w.total}\narcs {arcs}\n"


def parse_point(P: Presentation, text: str, source="<point>") -> EvPerPoint:
    if "/" not in text:
        raise ParseError(source, 1, "point syntax is prefix/cycle")
    pre, cyc = text.split("/", 1)
    return EvPerPoint.make(P, parse_word(P, pre, source),
                           parse_word(P, cyc, source))


def format_point(P: Presentation, p: EvPerPoint) -> str:
    return f"{format_word(P, p.prefix)}/{format_word(P, p.cycle)}"


def parse_bipoint(P: Presentation, text: str, source="<bipoint>") -> BiPoint:
    body, _, phase = text.partition("@")
    parts = body.split("|")
    if len(parts) != 3:
        raise ParseError(source, 1,
                         "two-sided syntax is leftcycle|middle|rightcycle@phase")
    lc, mid, rc = (parse_word(P, p, source) for p in parts)
    try:
        ph = int(phase) if phase else 0
    except ValueError:
        raise ParseError(source, 1, f"bad phase {phase!r}")
    return BiPoint.make(P, lc, mid, rc, ph)


def read_presentation(path: str) -> Presentation:
    with open(path) as fh:
        return parse_presentation(fh.read(), path)


def read_cylinder_function(path: str, P: Presentation) -> CylinderFunction:
    with open(path) as fh:
        return parse_cylinder_function(fh.read(), P, path)


def read_orbit_equivalence(path: str) -> OrbitEquivalence:
    """Orbit-equivalence files.

    ::

        oe v1
        domain golden.sft
        codomain golden.sft
        map 0 -> 10
        map 10 -> 0
        map 11 -> 11

    or a composition of two files::

        oe v1
        compose first.oe second.oe

    Paths are resolved relative to the file.
    """
    with open(path) as fh:
        text = fh.read()
    base = os.path.dirname(os.path.abspath(path))
    lines = list(_lines(text, path))
    if not lines or lines[0][1] != "oe v1":
        raise ParseError(path, 1, "expected header 'oe v1'")
    body = lines[1:]
    if body and body[0][1].startswith("compose "):
        parts = body[0][1].split()
        if len(parts) != 3:
            raise ParseError(path, body[0][0], "compose needs two files")
        first = read_orbit_equivalence(os.path.join(base, parts[1]))
        second = read_orbit_equivalence(os.path.join(base, parts[2]))
        return first.compose(second)
    domain = codomain = None
    pairs = []
    vmap_rows = []
    for ln, line in body:
        if line.startswith("domain "):
            domain = read_presentation(os.path.join(base, line.split(None, 1)[1]))
        elif line.startswith("codomain "):
            codomain = read_presentation(os.path.join(base, line.split(None, 1)[1]))
        elif line.startswith("map "):
            rest = line[4:]
            if "->" not in rest:
                raise ParseError(path, ln, "map syntax is 'map u -> v'")
            u, v = (s.strip() for s in rest.split("->", 1))
            pairs.append((ln, u, v))
        elif line.startswith("vmap "):
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(path, ln, "vmap syntax is 'vmap i j'")
            vmap_rows.append((ln, parts[1], parts[2]))
        else:
            raise ParseError(path, ln, f"unknown directive {line!r}")
    if domain is None or codomain is None:
        raise ParseError(path, 1, "need domain and codomain")
    pairing = {}
    for ln, u, v in pairs:
        pairing[parse_word(domain, u, path, ln)] = parse_word(codomain, v, path, ln)
    vertex_map = None
    if vmap_rows:
        vertex_map = {}
        for ln, i, j in vmap_rows:
            try:
                vertex_map[domain.labels[int(i)]] = codomain.labels[int(j)]
            except (ValueError, IndexError):
                raise ParseError(path, ln, f"bad vmap entry {i} {j}")
    elif domain != codomain:
        vertex_map = dict(zip(domain.labels, codomain.labels))
    try:
        pm = prefix_exchange(domain, pairing, codomain, vertex_map)
        return OrbitEquivalence(pm)
    except Exception as e:
        raise ParseError(path, 1, f"invalid orbit equivalence: {e}")


def format_orbit_equivalence(h: OrbitEquivalence, domain_file: str,
                             codomain_file: str) -> str:
    from .maps import PrefixExchangeStage
    st = h.forward.stages
    if len(st) != 1 or not isinstance(st[0], PrefixExchangeStage):
        raise ValueError("only single prefix exchanges serialize to oe files")
    P, Q = h.domain, h.codomain
    out = ["oe v1", f"domain {domain_file}", f"codomain {codomain_file}"]
    for u in sorted(st[0].pairing, key=P._sort_key):
        out.append(f"map {format_word(P, u)} -> "
                   f"{format_word(Q, st[0].pairing[u])}")
    return "\n".join(out) + "\n"
