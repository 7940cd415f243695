from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from artifact.partitions import partitions_of
from artifact.paths_h1 import (
    H1_IDENTITIES,
    KINDS,
    count_family,
    csyt_to_walk,
    dershowitz,
    dershowitz_inverse,
    enumerate_family,
    from_heights,
    h1_sides,
    heights,
    in_family,
    k_stat,
    matching_to_motzkin,
    motzkin_to_matching,
    psi,
    psi_inverse,
    reflection_count,
    special_involution,
    special_steps,
    verify_h1,
    walk_to_csyt,
)
from artifact.tableaux import SSYT, csyt_count, is_cylindric, standard_tableaux
from artifact.walks_matchings import Matching, ncnn_matchings, ncnn_prime

MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]

# a pair of length-26 paths in Mot2(3) exchanged by the involution
INVOLUTION_TOP = from_heights([0, 0, 1, 0, 0, 0, 1, 0, 1, 2, 3, 2, 1, 0, 0, 1, 0, 1, 2, 3, 2, 3, 3, 3, 2, 1, 0])
INVOLUTION_BOTTOM = from_heights([0, 0, 1, 0, 0, 1, 2, 3, 2, 3, 3, 2, 1, 0, 0, 1, 0, 1, 2, 3, 2, 3, 3, 3, 2, 1, 0])

# a length-26 Dyck prefix of height 6, its up-down image, and the folded Motzkin path
CHAIN_DP = from_heights([0, 1, 2, 1, 0, 1, 2, 3, 2, 3, 4, 5, 6, 5, 4, 3, 2, 3, 4, 3, 2, 1, 0, 1, 2, 1, 2])
CHAIN_GD = from_heights([0, 1, 0, -1, -2, -3, -2, -1, 0, 1, 0, -1, 0, 1, 2, 3, 2, 1, 2, 1, 0, 1, 0, -1, -2, -1, 0])
CHAIN_MOT = from_heights([0, 0, 0, 1, 2, 3, 2, 1, 0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 0, 0, 0, 0, 1, 2, 1, 0])


def test_small_counts():
    assert count_family("Mot", 3, 1) == 4
    assert set(enumerate_family("Mot", 3, 1)) == {"HHH", "HUD", "UDH", "UHD"}
    assert count_family("T", 2, 3) == 2
    assert count_family("DP", 3, 2) == 2
    assert count_family("Mot2_signed", 3, 1) == 2
    assert count_family("Mot1", 3, 1) == 3 == count_family("DP", 3, 3)


def test_unbounded_counts():
    for n, m in enumerate(MOTZKIN):
        assert count_family("Mot", n, n) == m
        assert count_family("DP", n, n + 1) == comb(n, n // 2)


@pytest.mark.parametrize("kind", KINDS)
def test_dp_matches_enumeration(kind):
    for n in range(11):
        for w in range(1, 5):
            assert count_family(kind, n, w) == count_family(kind, n, w, "enumerate")


def test_reflection_count():
    for n in range(15):
        for w in range(1, 6):
            assert reflection_count(n, w) == count_family("DP", n, w)


def test_h1_examples():
    assert h1_sides("DP_Mot2", 3, 1) == (2, 2)
    assert h1_sides("DP_Mot1", 3, 1) == (3, 3)


@pytest.mark.parametrize("which", H1_IDENTITIES)
def test_h1_identities(which):
    for n in range(13):
        for w in range(1, 4):
            assert verify_h1(which, n, w)


def test_csyt_walks():
    assert csyt_to_walk(((1,),), "triangle", 3) == "R"
    walks = {csyt_to_walk(T, "triangle", 3) for T in standard_tableaux((2,))} | {
        csyt_to_walk(T, "triangle", 3) for T in standard_tableaux((1, 1))
    }
    assert walks == set(enumerate_family("T", 2, 3))
    for n in range(9):
        for w in (1, 2, 3):
            seen_t, seen_dp = set(), set()
            for lam in partitions_of(n, max_len=3):
                for T in standard_tableaux(lam):
                    if is_cylindric(T, 3, w, SSYT):
                        p = csyt_to_walk(T, "triangle", w)
                        assert in_family("T", p, w)
                        assert walk_to_csyt(p, "triangle") == T
                        seen_t.add(p)
                    if len(lam) <= 2 and is_cylindric(T, 2, w, SSYT):
                        p = csyt_to_walk(T, "dyck_prefix", w)
                        assert in_family("DP", p, w)
                        assert walk_to_csyt(p, "dyck_prefix") == T
                        seen_dp.add(p)
            assert len(seen_t) == csyt_count(n, 3, w) == count_family("T", n, w)
            assert len(seen_dp) == csyt_count(n, 2, w) == count_family("DP", n, w)


def test_matching_paths():
    assert matching_to_motzkin(Matching(3, {(1, 2)})) == "UDH"
    assert matching_to_motzkin(Matching(3, set())) == "HHH"
    for n in range(9):
        for w in (1, 2, 3):
            for M in ncnn_matchings(n, 2, w + 1):
                p = matching_to_motzkin(M)
                assert in_family("Mot", p, w)
                assert motzkin_to_matching(p) == M
    for M, z in ncnn_prime(6, 1, 1):
        p = matching_to_motzkin(M)
        assert in_family("Mot2", p, 1)
        assert k_stat(p, 1) == z


def test_involution_examples():
    assert special_involution("HHH", 1) == "HHH"
    assert special_involution("UHD", 1) == "HUD"
    assert special_involution("HUD", 1) == "UHD"
    assert special_steps(INVOLUTION_TOP, 3) == [4, 21, 22]
    assert special_involution(INVOLUTION_TOP, 3) == INVOLUTION_BOTTOM
    assert special_involution(INVOLUTION_BOTTOM, 3) == INVOLUTION_TOP


def test_involution_properties():
    for n in range(13):
        for w in range(1, 4):
            fixed = set(enumerate_family("Mot3", n, w))
            for p in enumerate_family("Mot2", n, w):
                q = special_involution(p, w)
                assert in_family("Mot2", q, w)
                assert special_involution(q, w) == p
                assert (q == p) == (p in fixed)
                if q != p:
                    assert abs(k_stat(p, w) - k_stat(q, w)) == 1


def test_dershowitz_and_fold_examples():
    assert dershowitz("U") == "U"
    assert psi("UD") == "HH"
    assert dershowitz(CHAIN_DP) == CHAIN_GD
    assert psi(CHAIN_GD) == CHAIN_MOT
    assert in_family("Mot3", CHAIN_MOT, 3)
    assert dershowitz_inverse(CHAIN_GD, 6) == CHAIN_DP
    assert psi_inverse(CHAIN_MOT, 6) == CHAIN_GD
    assert {dershowitz(p) for p in enumerate_family("DP", 3, 2)} == set(enumerate_family("GD", 3, 2))
    assert len({psi(q) for q in enumerate_family("GD", 3, 3)}) == count_family("Mot1", 3, 1) == 3


def test_dershowitz_and_fold_bijective():
    for n in range(13):
        for w in range(1, 5):
            dps = list(enumerate_family("DP", n, w))
            images = [dershowitz(p) for p in dps]
            assert len(set(images)) == len(images)
            assert set(images) == set(enumerate_family("GD", n, w))
            assert all(dershowitz_inverse(q, w) == p for p, q in zip(dps, images))
            target = "Mot1" if w % 2 else "Mot3"
            folded = [psi(q) for q in images]
            assert len(set(folded)) == len(folded)
            assert set(folded) == set(enumerate_family(target, n, w // 2))
            assert all(psi_inverse(r, w) == q for q, r in zip(images, folded))


@settings(max_examples=100)
@given(st.lists(st.sampled_from("UDH"), max_size=20).map("".join))
def test_heights_round_trip(p):
    assert from_heights(heights(p)) == p
