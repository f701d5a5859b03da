"""Ring arithmetic, Gray map, Lee weights."""

import random

import pytest

from leecode import (
    BinaryWord,
    BitVec,
    CodewordZ2u,
    MixedWord,
    Z2U_ELEMENTS,
    Z2uElement,
    gray_map_elem,
    gray_map_word,
    inner_product_mixed,
    lee_weight,
    parity_dot,
)


def test_bitvec_validation():
    with pytest.raises(ValueError):
        BitVec(0, 1)
    with pytest.raises(ValueError):
        BitVec(8, 3)
    with pytest.raises(ValueError):
        BitVec(-1, 3)
    with pytest.raises(ValueError):
        BitVec.from_coords([4], 3)
    with pytest.raises(ValueError):
        BitVec.from_coords([0], 3)


def test_bitvec_support_round_trip():
    v = BitVec.from_coords([1, 3], 3)
    assert v.bits == 0b101
    assert v.support() == (1, 3)
    assert v.weight() == 2
    assert (v ^ BitVec(0b001, 3)).bits == 0b100
    with pytest.raises(ValueError):
        v ^ BitVec(1, 2)


def test_parity_dot():
    assert parity_dot(BitVec(0b101, 3), BitVec(0b100, 3)) == 1
    assert parity_dot(BitVec(0b101, 3), BitVec(0b111, 3)) == 0
    assert parity_dot(BitVec(0, 3), BitVec(0b111, 3)) == 0
    with pytest.raises(ValueError):
        parity_dot(BitVec(1, 2), BitVec(1, 3))


def test_z2u_arithmetic():
    zero, one, u, one_u = Z2U_ELEMENTS
    assert u * u == zero  # u squared dies
    assert one_u * one_u == one  # (1+u)^2 = 1 + 2u + u^2 = 1
    assert one_u * u == u
    assert one + one == zero
    assert u + one == one_u
    assert [e.lee_weight() for e in Z2U_ELEMENTS] == [0, 1, 2, 1]
    with pytest.raises(ValueError):
        Z2uElement(2, 0)


def test_gray_map_elem_table():
    zero, one, u, one_u = Z2U_ELEMENTS
    assert gray_map_elem(zero) == (0, 0)
    assert gray_map_elem(one) == (0, 1)
    assert gray_map_elem(u) == (1, 1)
    assert gray_map_elem(one_u) == (1, 0)


def test_gray_map_word_example():
    # entries (1, u): Q = (1,0), R = (0,1); image is (r, q+r) = (0,1,1,1)
    w = CodewordZ2u(0b01, 0b10, 2)
    img = gray_map_word(w)
    assert img == BinaryWord(0b1110, 4)
    assert img.weight() == lee_weight(w) == 3


def test_lee_weight_frozen_example():
    # Q = (1,1,0), R = (0,1,1): wt_H(011) + wt_H(101) = 4
    w = CodewordZ2u(0b011, 0b110, 3)
    assert lee_weight(w) == 4


def test_lee_weight_matches_entrywise_sum():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(1, 40)
        w = CodewordZ2u(rng.getrandbits(n), rng.getrandbits(n), n)
        assert lee_weight(w) == sum(w.entry(i).lee_weight() for i in range(1, n + 1))


def test_gray_isometry_random_pairs():
    rng = random.Random(5)
    for n in (1, 7, 64):
        for _ in range(500):
            w1 = CodewordZ2u(rng.getrandbits(n), rng.getrandbits(n), n)
            w2 = CodewordZ2u(rng.getrandbits(n), rng.getrandbits(n), n)
            lhs = lee_weight(w1 - w2)
            rhs = (gray_map_word(w1).bits ^ gray_map_word(w2).bits).bit_count()
            assert lhs == rhs


def test_codeword_scalar_action():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randrange(1, 20)
        w = CodewordZ2u(rng.getrandbits(n), rng.getrandbits(n), n)
        for alpha in Z2U_ELEMENTS:
            for beta in Z2U_ELEMENTS:
                assert w.scale(alpha).scale(beta) == w.scale(alpha * beta)
        assert w.scale(Z2uElement(1, 0)) == w
        assert w.scale(Z2uElement(0, 0)).is_zero()
        # entrywise agreement with ring multiplication
        scaled = w.scale(Z2uElement(0, 1))
        for i in range(1, n + 1):
            assert scaled.entry(i) == Z2uElement(0, 1) * w.entry(i)


def test_mixed_word_scalar_action():
    rng = random.Random(7)
    m = 4
    for _ in range(200):
        a = MixedWord(
            BitVec(rng.getrandbits(m), m),
            BitVec(rng.getrandbits(m), m),
            BitVec(rng.getrandbits(m), m),
        )
        one_u = Z2uElement(1, 1)
        u = Z2uElement(0, 1)
        # u * (1+u) = u, so the actions must compose the same way
        assert a.scale(one_u).scale(u) == a.scale(u)
        assert a.scale(Z2uElement(1, 0)) == a
    with pytest.raises(ValueError):
        MixedWord(BitVec(0, 2), BitVec(0, 3), BitVec(0, 3))


def test_inner_product_mixed_definitional():
    rng = random.Random(8)
    m = 3
    for _ in range(100):
        bits = [BitVec(rng.getrandbits(m), m) for _ in range(6)]
        a = MixedWord(bits[0], bits[1], bits[2])
        t1, t2, t3 = bits[3], bits[4], bits[5]
        got = inner_product_mixed(a, t1, t2, t3)
        want_y = parity_dot(a.q, t2)
        want_z = parity_dot(a.p, t1) ^ parity_dot(a.q, t3) ^ parity_dot(a.r, t2)
        assert (got.y, got.z) == (want_y, want_z)
    with pytest.raises(ValueError):
        inner_product_mixed(
            MixedWord.zero(3), BitVec(0, 2), BitVec(0, 3), BitVec(0, 3)
        )


def test_codeword_validation():
    with pytest.raises(ValueError):
        CodewordZ2u(4, 0, 2)
    with pytest.raises(ValueError):
        CodewordZ2u(0, 0, 0)
    w = CodewordZ2u(0b01, 0b10, 2)
    with pytest.raises(ValueError):
        w.entry(3)
    with pytest.raises(ValueError):
        w + CodewordZ2u(0, 0, 3)
