"""Concrete homeomorphisms between vertex shifts.

Three generators are supported and freely composed:

* PrefixExchangeMap: a complete prefix code (u_i) of the domain is mapped
  onto a complete prefix code (v_i) of the codomain, h(u_i t) = v_i pi(t),
  where pi is a vertex correspondence (a graph isomorphism).
* SlidingBlockConjugacy: a block map with anticipation and no memory whose
  inverse is again a block map; these are exactly the one-sided
  conjugacies between vertex shifts.
* compositions of the above.

Besides acting on points, maps act /symbolically/ on cylinders: for every
point x in Z(w) the image h(x) has the shape  W . C(sigma^m(x))  where W is
an explicit word and C is a chain of block maps (block maps commute with
the shift, which is what keeps this calculus closed).  The symbolic form is
what makes cocycle derivation and verification exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCode, NeedDepth
from .points import EvPerPoint
from .presentation import Presentation, Word, word


class BlockStage:
    """Sliding block map with window size `window` and no memory."""

    def __init__(self, domain: Presentation, codomain: Presentation, table):
        self.domain = domain
        self.codomain = codomain
        table = {word(w): s for w, s in table.items()}
        widths = {len(w) for w in table}
        if len(widths) != 1:
            raise InvalidCode("block table keys must share one length")
        self.window = widths.pop()
        if set(table) != domain.language(self.window):
            raise InvalidCode("block table must cover the window language")
        self.table = table
        # local consistency: sliding the window along an admissible word
        # must produce admissible image words
        for w in domain.language(self.window + 1):
            a, b = table[w[:-1]], table[w[1:]]
            if not codomain.has_edge(a, b):
                raise InvalidCode(
                    f"image of {w!r} breaks admissibility: {a!r}->{b!r}")

    @property
    def anticipation(self):
        return self.window - 1

    def apply_word(self, w: Word) -> Word:
        if len(w) < self.window:
            return ()
        return tuple(self.table[w[i:i + self.window]]
                     for i in range(len(w) - self.window + 1))

    def apply_point(self, p: EvPerPoint) -> EvPerPoint:
        np_, nc = len(p.prefix), len(p.cycle)
        pre = tuple(self.table[p.word_range(n, n + self.window)]
                    for n in range(np_))
        cyc = tuple(self.table[p.word_range(n, n + self.window)]
                    for n in range(np_, np_ + nc))
        return EvPerPoint.make(self.codomain, pre, cyc)

    def __repr__(self):
        return f"BlockStage(window={self.window})"


def relabel_stage(domain: Presentation, codomain: Presentation, mapping) -> BlockStage:
    """1-block stage from a vertex bijection (must be a graph isomorphism)."""
    mapping = dict(mapping)
    if set(mapping) != set(domain.labels) or \
            set(mapping.values()) != set(codomain.labels):
        raise InvalidCode("vertex map must biject the vertex sets")
    for a, b in domain.edges:
        if not codomain.has_edge(mapping[a], mapping[b]):
            raise InvalidCode("vertex map is not a graph isomorphism")
    if len(domain.edges) != len(codomain.edges):
        raise InvalidCode("vertex map is not a graph isomorphism")
    return BlockStage(domain, codomain, {(a,): mapping[a] for a in domain.labels})


class PrefixExchangeStage:
    """h(u_i t) = v_i pi(t) for a paired pair of complete prefix codes."""

    def __init__(self, domain: Presentation, codomain: Presentation,
                 pairing, vertex_map=None):
        self.domain = domain
        self.codomain = codomain
        self.pairing = {word(u): word(v) for u, v in pairing.items()}
        if vertex_map is None:
            if domain != codomain:
                raise InvalidCode("vertex map required between distinct shifts")
            self.vertex_map = None
            self.pi_stage = None
            pi = {v: v for v in domain.labels}
        else:
            pi = dict(vertex_map)
            self.pi_stage = relabel_stage(domain, codomain, pi)
            self.vertex_map = pi
        _check_complete_prefix_code(domain, set(self.pairing))
        _check_complete_prefix_code(codomain, set(self.pairing.values()))
        if len(set(self.pairing.values())) != len(self.pairing):
            raise InvalidCode("pairing must be a bijection")
        for u, v in self.pairing.items():
            if bool(u) != bool(v):
                raise InvalidCode("empty word can only pair with empty word")
            if u and v:
                fu = frozenset(pi[s] for s in domain.follower_set(u[-1]))
                if fu != codomain.follower_set(v[-1]):
                    raise InvalidCode(
                        f"follower mismatch on {u!r} -> {v!r}")
        self.max_code_len = max(map(len, self.pairing), default=0)
        self._by_length = sorted(self.pairing, key=len)

    def lookup(self, sym):
        """Code word matching a point given by a symbol accessor."""
        for u in self._by_length:
            if all(sym(i) == u[i] for i in range(len(u))):
                return u
        raise InvalidCode("no code word matches; code is not complete")

    def map_tail_symbol(self, s):
        return s if self.vertex_map is None else self.vertex_map[s]

    def apply_point(self, p: EvPerPoint) -> EvPerPoint:
        u = self.lookup(p.symbol)
        v = self.pairing[u]
        t = p.shift(len(u))
        pre = v + tuple(self.map_tail_symbol(s) for s in t.prefix)
        cyc = tuple(self.map_tail_symbol(s) for s in t.cycle)
        return EvPerPoint.make(self.codomain, pre, cyc)

    def swapped(self) -> "PrefixExchangeStage":
        inv_pairing = {v: u for u, v in self.pairing.items()}
        inv_map = (None if self.vertex_map is None
                   else {b: a for a, b in self.vertex_map.items()})
        return PrefixExchangeStage(self.codomain, self.domain, inv_pairing, inv_map)

    def __repr__(self):
        pairs = ",".join(f"{''.join(map(str, u))}~{''.join(map(str, v))}"
                         for u, v in sorted(self.pairing.items()))
        return f"PrefixExchange({pairs})"


def _check_complete_prefix_code(P: Presentation, code):
    if not code:
        raise InvalidCode("empty code")
    if () in code:
        if len(code) > 1:
            raise InvalidCode("the empty word must be the only code word")
        return
    for u in code:
        if not P.is_admissible(u):
            raise InvalidCode(f"code word {u!r} not admissible")
    L = max(map(len, code))
    for w in P.language(L):
        hits = [u for u in code if w[:len(u)] == u]
        if len(hits) != 1:
            raise InvalidCode(
                f"cylinders do not partition the shift at {w!r} ({len(hits)} hits)")


class PointMap:
    """A homeomorphism given as a pipeline of stages, with its inverse."""

    def __init__(self, domain, codomain, stages, inverse_stages):
        self.domain = domain
        self.codomain = codomain
        self.stages = tuple(stages)
        self.inverse_stages = tuple(inverse_stages)

    def apply(self, p: EvPerPoint) -> EvPerPoint:
        for st in self.stages:
            p = st.apply_point(p)
        return p

    def __call__(self, p):
        return self.apply(p)

    def inverse(self) -> "PointMap":
        return PointMap(self.codomain, self.domain,
                        self.inverse_stages, self.stages)

    def then(self, other: "PointMap") -> "PointMap":
        if self.codomain != other.domain:
            raise InvalidCode("composition endpoints do not match")
        return PointMap(self.domain, other.codomain,
                        self.stages + other.stages,
                        other.inverse_stages + self.inverse_stages)

    def prefix_needed(self, m: int) -> int:
        """Input symbols sufficient to determine m output symbols."""
        need = m
        for st in reversed(self.stages):
            if isinstance(st, BlockStage):
                need += st.anticipation
            else:
                need += st.max_code_len
        return need

    def __repr__(self):
        return " . ".join(repr(s) for s in reversed(self.stages)) or "id"


def identity_map(P: Presentation) -> PointMap:
    return PointMap(P, P, (), ())


def apply_prefix_exchange(h: PointMap, p: EvPerPoint) -> EvPerPoint:
    """Image of a point under a map built from prefix exchanges."""
    return h.apply(p)


def prefix_exchange(P, pairing, codomain=None, vertex_map=None) -> PointMap:
    cod = codomain if codomain is not None else P
    st = PrefixExchangeStage(P, cod, pairing, vertex_map)
    return PointMap(P, cod, (st,), (st.swapped(),))


def sliding_block_conjugacy(domain, codomain, table, inverse_table) -> PointMap:
    """A block-map conjugacy; the inverse block map is part of the data and
    the round trips are verified exhaustively on windows."""
    fwd = BlockStage(domain, codomain, table)
    bwd = BlockStage(codomain, domain, inverse_table)
    for w in domain.language(fwd.window + bwd.window - 1):
        if bwd.apply_word(fwd.apply_word(w)) != (w[0],):
            raise InvalidCode(f"inverse fails on {w!r}")
    for w in codomain.language(fwd.window + bwd.window - 1):
        if fwd.apply_word(bwd.apply_word(w)) != (w[0],):
            raise InvalidCode(f"forward fails on inverse at {w!r}")
    return PointMap(domain, codomain, (fwd,), (bwd,))


def relabel_map(domain, codomain, mapping) -> PointMap:
    fwd = relabel_stage(domain, codomain, mapping)
    bwd = relabel_stage(codomain, domain, {b: a for a, b in dict(mapping).items()})
    return PointMap(domain, codomain, (fwd,), (bwd,))


# ---------------------------------------------------------------------------
# symbolic images over a cylinder
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymImage:
    """For all x in Z(base): the represented point is  W . chain(sigma^m x).

    `chain` is a tuple of BlockStage; block maps commute with the shift, so
    shifting and symbol lookup stay exact.
    """

    prefix: Word
    chain: tuple
    shift: int

    @property
    def offset(self) -> int:
        return len(self.prefix) - self.shift

    def shifted(self, k: int) -> "SymImage":
        if k <= len(self.prefix):
            return SymImage(self.prefix[k:], self.chain, self.shift)
        return SymImage((), self.chain, self.shift + k - len(self.prefix))

    def rebased(self, extra: int) -> "SymImage":
        """Reinterpret an image of sigma^extra(x) as an image over x."""
        return SymImage(self.prefix, self.chain, self.shift + extra)


def _chain_ant(chain) -> int:
    return sum(st.anticipation for st in chain)


def _chain_symbol(chain, base: Word, idx: int):
    """chain(x)[idx] for x in Z(base), or NeedDepth."""
    need = idx + 1 + _chain_ant(chain)
    if len(base) < need:
        raise NeedDepth(need)
    w = base
    for st in chain:
        w = st.apply_word(w)
    return w[idx]


def sym_symbol(S: SymImage, base: Word, i: int):
    """Symbol i of the represented point, for all x in Z(base)."""
    if i < len(S.prefix):
        return S.prefix[i]
    return _chain_symbol(S.chain, base, S.shift + i - len(S.prefix))


def image_form(stages, base: Word, P: Presentation) -> SymImage:
    """Symbolic image of every x in Z(base) under the stage pipeline.

    Raises NeedDepth(n) when Z(base) does not determine the image shape;
    retry with cylinders of length n.
    """
    W, chain, m = (), (), 0

    def sym(i):
        if i < len(W):
            return W[i]
        return _chain_symbol(chain, base, m + i - len(W))

    for st in stages:
        if isinstance(st, BlockStage):
            a = st.anticipation
            ext = W + tuple(_chain_symbol(chain, base, m + t) for t in range(a))
            W = tuple(st.table[ext[i:i + st.window]] for i in range(len(W)))
            chain = chain + (st,)
        else:
            u = st.lookup(sym)
            v = st.pairing[u]
            if len(u) <= len(W):
                rest = tuple(st.map_tail_symbol(s) for s in W[len(u):])
                W = v + rest
            else:
                m += len(u) - len(W)
                W = v
            if st.pi_stage is not None:
                chain = chain + (st.pi_stage,)
    return SymImage(W, chain, m)


def _chains_match(c1, c2) -> bool:
    return len(c1) == len(c2) and all(a is b for a, b in zip(c1, c2))


def sides_agree(S1: SymImage, S2: SymImage, base: Word):
    """Exact comparison of two symbolic tails over a common cylinder.

    Returns (True, None) when the represented points coincide for every
    x in Z(base); otherwise (False, reason).  Conservative: tails carried
    by different chains or at different alignments are reported unequal.
    """
    if not _chains_match(S1.chain, S2.chain):
        return False, "different tail transforms"
    if S1.offset != S2.offset:
        return False, f"misaligned tails ({S1.offset} vs {S2.offset})"
    for p in range(max(len(S1.prefix), len(S2.prefix))):
        a = sym_symbol(S1, base, p)
        b = sym_symbol(S2, base, p)
        if a != b:
            return False, f"symbols differ at position {p}: {a!r} vs {b!r}"
    return True, None


def minimal_cocycle_on_cylinder(stages, base: Word, P: Presentation):
    """Least (k, l) with sigma^k(h(sigma x)) = sigma^l(h(x)) on Z(base).

    The alignment of the two symbolic tails forces l - k; the least shift
    that clears every symbol mismatch gives minimality.  NeedDepth
    propagates when Z(base) is too coarse.
    """
    if len(base) < 1:
        raise NeedDepth(1)
    S_x = image_form(stages, base, P)
    try:
        S_sx = image_form(stages, base[1:], P).rebased(1)
    except NeedDepth as e:
        raise NeedDepth(e.needed + 1)
    delta = S_x.offset - S_sx.offset
    k0 = max(0, -delta)
    l0 = k0 + delta
    A = S_sx.shifted(k0)
    B = S_x.shifted(l0)
    if not _chains_match(A.chain, B.chain):
        raise InvalidCode("stage pipeline produced mismatched tail transforms")
    last_bad = -1
    for p in range(max(len(A.prefix), len(B.prefix))):
        a = _side_symbol(A, base, p)
        b = _side_symbol(B, base, p)
        if a != b:
            last_bad = p
    c = last_bad + 1
    return k0 + c, l0 + c


def _side_symbol(S: SymImage, base: Word, p: int):
    if p < len(S.prefix):
        return S.prefix[p]
    return _chain_symbol(S.chain, base, S.shift + p - len(S.prefix))


def verify_cocycle_on_cylinder(stages, base: Word, P: Presentation, k: int, l: int):
    """Check sigma^k(h(sigma x)) = sigma^l(h(x)) for all x in Z(base)."""
    S_x = image_form(stages, base, P)
    try:
        S_sx = image_form(stages, base[1:], P).rebased(1)
    except NeedDepth as e:
        raise NeedDepth(e.needed + 1)
    return sides_agree(S_sx.shifted(k), S_x.shifted(l), base)
