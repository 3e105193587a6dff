"""Locally constant integer-valued functions stored as tables on words.

A CylinderFunction of depth d takes its value from the first d symbols of a
point; the table is kept on admissible words of length max(d, 1) so that
depth 0 (constants) still has concrete entries.  Binary operations refine
both operands to the larger depth.
"""

from __future__ import annotations

from .errors import NotClosed, WordTooShort
from .points import EvPerPoint
from .presentation import Presentation, Word, word


class CylinderFunction:
    def __init__(self, presentation: Presentation, depth: int, table):
        if depth < 0:
            raise ValueError("depth must be >= 0")
        self.presentation = presentation
        self.depth = depth
        width = max(depth, 1)
        want = presentation.language(width)
        table = {word(w): int(v) for w, v in table.items()}
        if set(table) != want:
            missing = want - set(table)
            extra = set(table) - want
            raise ValueError(
                f"table must cover exactly the admissible {width}-words "
                f"(missing {sorted(missing)[:3]!r}, extra {sorted(extra)[:3]!r})")
        if depth == 0 and len(set(table.values())) > 1:
            raise ValueError("depth-0 function must be constant")
        self.table = table

    # -- constructors -----------------------------------------------------

    @staticmethod
    def constant(P: Presentation, value: int) -> "CylinderFunction":
        return CylinderFunction(P, 0, {w: value for w in P.language(1)})

    @staticmethod
    def from_values(P: Presentation, table) -> "CylinderFunction":
        """Depth inferred from the key length."""
        table = {word(w): v for w, v in table.items()}
        depth = len(next(iter(table)))
        return CylinderFunction(P, depth, table)

    # -- evaluation ----------------------------------------------------------

    def width(self) -> int:
        return max(self.depth, 1)

    def value_on(self, w: Word) -> int:
        """Value on the cylinder of w; w must carry at least depth symbols."""
        w = word(w)
        if len(w) < self.depth:
            raise WordTooShort(
                f"need {self.depth} symbols, got {len(w)} in {w!r}")
        if self.depth == 0:
            return next(iter(self.table.values()))
        return self.table[w[: self.width()]]

    def __call__(self, x) -> int:
        if isinstance(x, EvPerPoint):
            return self.value_on(x.symbols(self.width()))
        return self.value_on(x)

    # -- structure -----------------------------------------------------------

    def refine(self, depth: int) -> "CylinderFunction":
        if depth < self.depth:
            raise ValueError("can only refine to a larger depth")
        if depth == self.depth:
            return self
        table = {w: self.value_on(w)
                 for w in self.presentation.language(max(depth, 1))}
        return CylinderFunction(self.presentation, depth, table)

    def pullback(self) -> "CylinderFunction":
        """f o sigma, of depth d+1."""
        d1 = self.depth + 1
        table = {w: self.value_on(w[1:])
                 for w in self.presentation.language(max(d1, 1))}
        return CylinderFunction(self.presentation, d1, table)

    def coboundary(self) -> "CylinderFunction":
        """f - f o sigma, of depth d+1."""
        return self - self.pullback()

    def _binary(self, other, op):
        if isinstance(other, int):
            other = CylinderFunction.constant(self.presentation, other)
        if other.presentation != self.presentation:
            raise ValueError("operands live on different presentations")
        d = max(self.depth, other.depth)
        a, b = self.refine(d), other.refine(d)
        return CylinderFunction(
            self.presentation, d,
            {w: op(a.table[w], b.table[w]) for w in a.table})

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __neg__(self):
        return CylinderFunction(self.presentation, self.depth,
                                {w: -v for w, v in self.table.items()})

    def __eq__(self, other):
        if not isinstance(other, CylinderFunction):
            return NotImplemented
        if self.presentation != other.presentation:
            return False
        d = max(self.depth, other.depth)
        return self.refine(d).table == other.refine(d).table

    def __hash__(self):
        raise TypeError("CylinderFunction is not hashable")

    def min_value(self) -> int:
        return min(self.table.values())

    def max_value(self) -> int:
        return max(self.table.values())

    def is_nonnegative(self) -> bool:
        return self.min_value() >= 0

    def __repr__(self):
        return f"CylinderFunction(depth={self.depth}, {len(self.table)} words)"


def eval_cylinder(f: CylinderFunction, x) -> int:
    return f(x)


def pullback_and_coboundary(f: CylinderFunction):
    """(f o sigma, f - f o sigma), both of depth d+1."""
    fs = f.pullback()
    return fs, f.refine(f.depth + 1) - fs


def orbit_sum(f: CylinderFunction, cycle: Word) -> int:
    """Sum of f over the periodic orbit of cycle^infinity."""
    P = f.presentation
    cycle = word(cycle)
    if not cycle or not P.is_admissible(cycle) or not P.has_edge(cycle[-1], cycle[0]):
        raise NotClosed(f"{cycle!r} is not a closed admissible word")
    n = len(cycle)
    total = 0
    for i in range(n):
        w = tuple(cycle[(i + t) % n] for t in range(f.width()))
        total += f.value_on(w)
    return total
