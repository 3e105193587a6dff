"""Finitely represented points: eventually periodic one-sided points and
two-sided points with periodic tails.

Canonical forms make equality of represented sequences a structural
equality:

* EvPerPoint: the cycle is primitive and the prefix is as short as
  possible; the cycle's rotation is then forced by the point.
* BiPoint: both periodic tails are maximal (so the middle is minimal) and
  fully periodic points carry phase 0 with the cycle rotated accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InadmissibleWord,
    NegativeShiftOneSided,
    NotPeriodic,
)
from .presentation import Presentation, Word, word


def _primitive_root(c: Word) -> Word:
    n = len(c)
    for d in range(1, n + 1):
        if n % d == 0 and c == (c[:d] * (n // d)):
            return c[:d]
    return c


@dataclass(frozen=True)
class EvPerPoint:
    """The one-sided point prefix . cycle^infinity, in canonical form."""

    presentation: Presentation
    prefix: Word
    cycle: Word

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("cycle must be non-empty")

    # -- construction --------------------------------------------------

    @staticmethod
    def make(P: Presentation, prefix, cycle) -> "EvPerPoint":
        """Normalize an arbitrary (prefix, cycle) representation."""
        prefix, cycle = word(prefix), word(cycle)
        if not cycle:
            raise InadmissibleWord("cycle must be non-empty")
        if not P.is_admissible(prefix + cycle + cycle[:1]):
            raise InadmissibleWord(
                f"{prefix!r}.{cycle!r}^inf is not admissible")
        cycle = _primitive_root(cycle)
        while prefix and prefix[-1] == cycle[-1]:
            prefix = prefix[:-1]
            cycle = cycle[-1:] + cycle[:-1]
        return EvPerPoint(P, prefix, cycle)

    # -- sequence access ------------------------------------------------

    def symbol(self, i: int):
        if i < 0:
            raise IndexError("one-sided points have no negative coordinates")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def symbols(self, n: int) -> Word:
        return tuple(self.symbol(i) for i in range(n))

    def word_range(self, a: int, b: int) -> Word:
        return tuple(self.symbol(i) for i in range(a, b))

    def starts_with(self, w: Word) -> bool:
        return self.symbols(len(w)) == tuple(w)

    # -- dynamics ---------------------------------------------------------

    def shift(self, j: int = 1) -> "EvPerPoint":
        if j < 0:
            raise NegativeShiftOneSided("one-sided shift needs j >= 0")
        if j <= len(self.prefix):
            return EvPerPoint.make(self.presentation, self.prefix[j:], self.cycle)
        r = (j - len(self.prefix)) % len(self.cycle)
        return EvPerPoint.make(self.presentation, (), self.cycle[r:] + self.cycle[:r])

    def least_period(self) -> int:
        return len(self.cycle)

    def is_periodic(self) -> bool:
        return not self.prefix

    def __str__(self):
        pre = "".join(map(str, self.prefix))
        cyc = "".join(map(str, self.cycle))
        return f"{pre}/{cyc}"


def normalize_point(prefix, cycle, P: Presentation) -> EvPerPoint:
    return EvPerPoint.make(P, prefix, cycle)


def shift_point(p, j: int):
    """sigma^j on either kind of point (j >= 0 for one-sided)."""
    return p.shift(j)


def least_period(p) -> int:
    return p.least_period()


def is_isolated(P: Presentation, p: EvPerPoint) -> bool:
    """Whether some cylinder around p is a singleton.

    For a long enough prefix the terminal vertex sits on the cycle, so p is
    isolated exactly when every vertex reachable from the cycle has
    out-degree one (the continuation is then forced).
    """
    seen = set()
    stack = [p.cycle[-1]]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        nxt = P.out_neighbors(v)
        if len(nxt) != 1:
            return False
        stack.append(nxt[0])
    return True


@dataclass(frozen=True)
class BiPoint:
    """Two-sided point left_cycle^inf . middle . right_cycle^inf.

    Coordinate 0 of the point is the symbol at anchor position `phase`,
    where anchor position 0 is the first symbol of the middle (equivalently
    the start of the right-periodic tail when the middle is empty).
    """

    presentation: Presentation
    left_cycle: Word
    middle: Word
    right_cycle: Word
    phase: int = 0

    @staticmethod
    def make(P: Presentation, left_cycle, middle, right_cycle, phase=0) -> "BiPoint":
        lc, mid, rc = word(left_cycle), word(middle), word(right_cycle)
        if not lc or not rc:
            raise InadmissibleWord("both cycles must be non-empty")
        seq = lc + lc + mid + rc + rc
        if not P.is_admissible(seq):
            raise InadmissibleWord("bi-infinite representation not admissible")
        lc, rc = _primitive_root(lc), _primitive_root(rc)
        phase = int(phase)
        # grow the right tail leftward through the middle
        while mid and mid[-1] == rc[-1]:
            mid = mid[:-1]
            rc = rc[-1:] + rc[:-1]
        # grow the left tail rightward through the middle
        while mid and mid[0] == lc[0]:
            mid = mid[1:]
            lc = lc[1:] + lc[:1]
            phase -= 1
        if not mid:
            if lc == rc:
                # fully periodic: fold the phase into the cycle rotation
                p = len(rc)
                r = phase % p
                c = rc[r:] + rc[:r]
                return BiPoint(P, c, (), c, 0)
            # push the boundary left while the right tail extends; distinct
            # primitive cycles must disagree within lcm(|lc|,|rc|) rotations
            guard = len(lc) * len(rc)
            while lc[-1] == rc[-1] and guard > 0:
                rc = rc[-1:] + rc[:-1]
                lc = lc[-1:] + lc[:-1]
                phase += 1
                guard -= 1
        return BiPoint(P, lc, mid, rc, phase)

    @staticmethod
    def periodic(P: Presentation, cycle, phase=0) -> "BiPoint":
        c = word(cycle)
        return BiPoint.make(P, c, (), c, phase)

    # -- sequence access ----------------------------------------------------

    def _anchor_symbol(self, a: int):
        """Symbol at anchor position a (0 = first symbol of middle)."""
        if a < 0:
            return self.left_cycle[a % len(self.left_cycle)]
        if a < len(self.middle):
            return self.middle[a]
        return self.right_cycle[(a - len(self.middle)) % len(self.right_cycle)]

    def symbol(self, j: int):
        """Coordinate j of the point."""
        return self._anchor_symbol(j + self.phase)

    def word_range(self, a: int, b: int) -> Word:
        return tuple(self.symbol(j) for j in range(a, b))

    def tail(self, i: int) -> EvPerPoint:
        """The one-sided point x_[i, infinity)."""
        a = i + self.phase
        m = len(self.middle)
        if a >= m:
            q = len(self.right_cycle)
            r = (a - m) % q
            return EvPerPoint.make(self.presentation, (),
                                   self.right_cycle[r:] + self.right_cycle[:r])
        if a >= 0:
            return EvPerPoint.make(self.presentation, self.middle[a:],
                                   self.right_cycle)
        pre = tuple(self._anchor_symbol(t) for t in range(a, 0)) + self.middle
        return EvPerPoint.make(self.presentation, pre, self.right_cycle)

    # -- dynamics -------------------------------------------------------------

    def shift(self, j: int = 1) -> "BiPoint":
        return BiPoint.make(self.presentation, self.left_cycle, self.middle,
                            self.right_cycle, self.phase + j)

    def is_periodic(self) -> bool:
        return not self.middle and self.left_cycle == self.right_cycle

    def least_period(self) -> int:
        if not self.is_periodic():
            raise NotPeriodic("two-sided least period needs a periodic point")
        return len(self.right_cycle)

    def __str__(self):
        lc = "".join(map(str, self.left_cycle))
        mid = "".join(map(str, self.middle))
        rc = "".join(map(str, self.right_cycle))
        return f"{lc}|{mid}|{rc}@{self.phase}"


def two_sided_from_one_sided(P: Presentation, left_cycle, p: EvPerPoint,
                             phase=0) -> BiPoint:
    """BiPoint whose coordinates from the anchor rightward read p and whose
    left tail is left_cycle-periodic."""
    return BiPoint.make(P, left_cycle, p.prefix, p.cycle, phase)
