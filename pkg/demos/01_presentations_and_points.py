"""Presentations, words, and finitely represented points.

A shift of finite type is presented by a finite graph with no sinks or
sources; its points are infinite vertex walks.  Eventually periodic points
have exact finite representations (prefix, cycle) with a canonical form, so
equality of points is equality of data.
"""

from sftkit import (
    BiPoint,
    EvPerPoint,
    from_forbidden_words,
    golden_mean,
    is_isolated,
    word,
)
from sftkit.presentation import Presentation

print("-- the golden mean shift (no two consecutive 1s)")
gm = golden_mean()
print("adjacency:", gm.adjacency())
for m in (1, 2, 3):
    print(f"words of length {m}:", sorted("".join(map(str, w))
                                          for w in gm.language(m)))

print()
print("-- the same shift recovered from its forbidden word")
P, recoding = from_forbidden_words((0, 1), [word("11")])
print("vertices:", P.labels, " edges:", sorted(P.edges))

print()
print("-- canonical forms of eventually periodic points")
x = EvPerPoint.make(gm, word("100"), word("010"))
print("100/(010)^inf normalizes to", x)
print("its shift:", x.shift(1), " least period:", x.least_period())
same = EvPerPoint.make(gm, word("1000"), word("100"))
print("1000/(100)^inf is the same point:", same == x)

print()
print("-- isolated points need a cone of forced continuations")
P2 = Presentation([1, 2], [(1, 1), (1, 2), (2, 2)])
print("in 1->1, 1->2, 2->2:")
print("  2^inf isolated:", is_isolated(P2, EvPerPoint.make(P2, (), (2,))))
print("  1^inf isolated:", is_isolated(P2, EvPerPoint.make(P2, (), (1,))))

print()
print("-- two-sided points carry two periodic tails and a phase")
b = BiPoint.make(gm, word("0"), word("1"), word("01"), 0)
print("0^inf.1.(01)^inf =", b)
print("coordinates -3..5:", b.word_range(-3, 6))
print("shifted by 4:", b.shift(4))
print("tail from -2:", b.tail(-2))
