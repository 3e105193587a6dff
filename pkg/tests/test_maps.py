import pytest

from sftkit import (
    EvPerPoint,
    full_shift,
    golden_mean,
    prefix_exchange,
    relabel_map,
    sliding_block_conjugacy,
    word,
)
from sftkit.errors import InvalidCode
from sftkit.maps import (
    image_form,
    minimal_cocycle_on_cylinder,
    verify_cocycle_on_cylinder,
)


def test_prefix_exchange_point_examples(full2, std_exchange):
    h = std_exchange
    assert h(EvPerPoint.make(full2, (), (0,))) == \
        EvPerPoint.make(full2, (1,), (0,))
    assert h(EvPerPoint.make(full2, (), (1, 0))) == \
        EvPerPoint.make(full2, (), (0, 1))
    assert h(EvPerPoint.make(full2, (), (1,))) == \
        EvPerPoint.make(full2, (), (1,))


def test_prefix_exchange_is_bijective_on_samples(full2, std_exchange):
    h, hinv = std_exchange, std_exchange.inverse()
    pts = []
    for w in full2.language(4):
        pts.append(EvPerPoint.make(full2, w, (0,)))
        pts.append(EvPerPoint.make(full2, w, (0, 1)))
    images = set()
    for x in pts:
        y = h(x)
        assert hinv(y) == x
        images.add(y)
    assert len(images) == len(set(pts))


def test_prefix_exchange_rejects_bad_codes(full2, gm):
    with pytest.raises(InvalidCode):
        prefix_exchange(full2, {word("0"): word("0")})  # incomplete
    with pytest.raises(InvalidCode):
        prefix_exchange(full2, {word("0"): word("10"),
                                word("1"): word("0"),
                                word("11"): word("11")})  # 1 prefixes 11
    with pytest.raises(InvalidCode):
        # follower data broken on the golden mean: 1 has followers {0},
        # 0 has followers {0,1}
        prefix_exchange(gm, {word("0"): word("1"), word("1"): word("0")})


def test_golden_mean_prefix_exchange():
    # {00, 01, 10} is a complete prefix code; 00 and 10 share terminals
    gm = golden_mean()
    h = prefix_exchange(gm, {word("00"): word("10"),
                             word("01"): word("01"),
                             word("10"): word("00")})
    for pre, cyc in [((), (0,)), ((), (0, 1)), ((1,), (0,)), ((0, 0, 1), (0,))]:
        x = EvPerPoint.make(gm, pre, cyc)
        assert h.inverse()(h(x)) == x


def test_relabel_map(full2):
    Q = full_shift(2, labels=("a", "b"))
    h = relabel_map(full2, Q, {0: "a", 1: "b"})
    x = EvPerPoint.make(full2, (0,), (1, 0))
    assert h(x) == EvPerPoint.make(Q, ("a",), ("b", "a"))
    assert h.inverse()(h(x)) == x


def test_sliding_block_conjugacy_roundtrip(gm):
    # golden mean to its 2-block presentation
    from sftkit.presentation import higher_block
    Q, rec = higher_block(gm, 2)
    fwd = {w: w for w in gm.language(2)}
    bwd = {(q,): q[0] for q in Q.labels}
    h = sliding_block_conjugacy(gm, Q, fwd, bwd)
    x = EvPerPoint.make(gm, (1,), (0, 0, 1))
    y = h(x)
    assert y.presentation == Q
    assert h.inverse()(y) == x
    # conjugacy: h commutes with the shift
    assert h(x.shift(1)) == y.shift(1)


def test_sliding_block_rejects_non_inverse(full2):
    # the xor block map is two-to-one, so no inverse can verify
    fwd = {w: w[0] ^ w[1] for w in full2.language(2)}
    bwd = {(q,): q for q in full2.labels}
    with pytest.raises(InvalidCode):
        sliding_block_conjugacy(full2, full2, fwd, bwd)


def test_composition_acts_like_both(full2, std_exchange):
    h = std_exchange.then(std_exchange)
    for pre, cyc in [((), (0,)), ((1, 0), (0, 1)), ((), (1,))]:
        x = EvPerPoint.make(full2, pre, cyc)
        assert h(x) == std_exchange(std_exchange(x))
        assert h.inverse()(h(x)) == x


def test_minimal_cocycles_match_hand_values(full2, std_exchange):
    stages = std_exchange.stages
    assert minimal_cocycle_on_cylinder(stages, word("00"), full2) == (1, 2)
    assert minimal_cocycle_on_cylinder(stages, word("010"), full2) == (0, 3)
    assert minimal_cocycle_on_cylinder(stages, word("10"), full2) == (1, 0)
    assert minimal_cocycle_on_cylinder(stages, word("111"), full2) == (0, 1)


def test_verify_cocycle_detects_wrong_pair(full2, std_exchange):
    stages = std_exchange.stages
    ok, _ = verify_cocycle_on_cylinder(stages, word("111"), full2, 0, 1)
    assert ok
    bad, reason = verify_cocycle_on_cylinder(stages, word("111"), full2, 0, 2)
    assert not bad and reason


def test_identity_image_form(full2):
    S = image_form((), word("01"), full2)
    assert (S.prefix, S.chain, S.shift) == ((), (), 0)
