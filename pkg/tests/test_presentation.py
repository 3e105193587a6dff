import pytest

from sftkit import build_presentation, from_forbidden_words, word
from sftkit.errors import EmptyShift, SinkOrSourceAfterPruning, ZeroRowOrColumn
from sftkit.presentation import higher_block


def test_full_shift_accepted():
    P = build_presentation([[1, 1], [1, 1]])
    assert P.vertex_count == 2
    assert len(P.edges) == 4


def test_golden_mean_accepted():
    P = build_presentation([[1, 1], [1, 0]])
    assert (1, 1) not in P.edges


def test_no_zero_row_or_column():
    # rows (1,0),(1,1) and columns (1,1),(0,1) are all nonzero: accepted
    P = build_presentation([[1, 0], [1, 1]])
    assert P.vertex_count == 2
    with pytest.raises(ZeroRowOrColumn) as e:
        build_presentation([[0, 0], [1, 1]])
    assert e.value.kind == "row" and e.value.index == 0
    with pytest.raises(ZeroRowOrColumn):
        build_presentation([[1, 0], [1, 0]])


def test_rejects_non_binary():
    with pytest.raises(ValueError):
        build_presentation([[2, 0], [1, 1]])


def test_language_examples(full2, gm):
    assert {" ".join(map(str, w)) for w in full2.language(2)} == \
        {"0 0", "0 1", "1 0", "1 1"}
    assert gm.language(2) == {(0, 0), (0, 1), (1, 0)}
    assert gm.language(3) == {(0, 0, 0), (0, 0, 1), (0, 1, 0),
                              (1, 0, 0), (1, 0, 1)}


def test_language_is_factorial(gm, full3):
    for P in (gm, full3):
        for m in (2, 3, 4):
            shorter = P.language(m - 1)
            for w in P.language(m):
                assert w[:-1] in shorter and w[1:] in shorter


def test_forbidden_words_golden_mean():
    P, rec = from_forbidden_words((0, 1), [word("11")])
    assert set(P.labels) == {0, 1}
    assert P.edges == frozenset({(0, 0), (0, 1), (1, 0)})
    assert rec.block_length == 1


def test_forbidden_words_trivial():
    P, _ = from_forbidden_words(("a",), [])
    assert P.labels == ("a",)
    assert P.edges == frozenset({("a", "a")})


def test_forbidden_words_empty_shift():
    with pytest.raises(EmptyShift):
        from_forbidden_words((0, 1), [word("0"), word("1")])


def test_forbidden_words_source_detected():
    # forbidding 00 and 10 leaves points 01^inf and 1^inf: not shift-invariant
    with pytest.raises(SinkOrSourceAfterPruning):
        from_forbidden_words((0, 1), [word("00"), word("10")])


def test_forbidden_longer_words():
    # 11 can never continue, so pruning must remove it entirely
    P, rec = from_forbidden_words((0, 1), [word("110"), word("111")])
    assert rec.block_length == 2
    decoded = {rec.decode_word(w) for w in P.language(2)}
    assert word("110") not in decoded and word("111") not in decoded
    assert word("11") not in set(P.labels)


def test_higher_block_recoding(gm):
    Q, rec = higher_block(gm, 2)
    assert set(Q.labels) == gm.language(2)
    # edges overlap correctly
    for a, b in Q.edges:
        assert a[1:] == b[:-1]
    w = word("00101")
    assert rec.decode_word(rec.encode_word(w)) == w


def test_cycles_are_rotation_free(gm):
    cyc = gm.cycles(4)
    as_sets = {min(c[i:] + c[:i] for i in range(len(c))) for c in cyc}
    assert len(as_sets) == len(cyc)
    for c in cyc:
        assert gm.has_edge(c[-1], c[0])
