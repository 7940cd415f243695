from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from artifact.growth import (
    backward_rule,
    forward_rule,
    greene_chains,
    growth_backward,
    growth_forward,
    matching_to_syt,
    matching_vt,
    ncnn_symmetry,
    square_cells,
    staircase_cells,
    staircase_labels,
    syt_chain,
    syt_matching,
    syt_to_matching,
    vt_matching,
)
from artifact.partitions import conjugate, contains, part, partitions_of
from artifact.tableaux import standard_tableaux
from artifact.walks_matchings import Matching, all_matchings, is_vt

HALF = Fraction(1, 2)
RUNNING_ODD = Matching(11, frozenset({(1, 6), (2, 5), (4, 10), (8, 9)}))
RUNNING_ODD_SYT = ((1, 2, 5, 6), (3, 7), (4, 9), (8, 10), (11,))
RUNNING_EVEN = Matching(10, frozenset({(1, 5), (2, 4), (3, 9), (7, 8)}))
RUNNING_EVEN_SYT = ((1, 2, 5, 6), (3, 7), (4, 9), (8, 10))

RUNNING_ODD_STAIRCASE = [
    (), (), (1,), (1,), (2,), (2,), (2,), (2,), (2, 1), (1, 1), (1, 1), (1,),
    (1,), (1,), (1,), (1,), (2,), (1,), (1,), (), (), (), (),
]
RUNNING_ODD_REDUCED = [(), (1,), (2,), (2,), (2, 1), (1, 1), (1,), (1,), (2,), (1,), (), ()]


@st.composite
def partial_permutations(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    xs = draw(st.permutations(range(1, n + 1)))[:k]
    ys = draw(st.permutations(range(1, n + 1)))[:k]
    return n, frozenset(zip(xs, ys))


def _grows_by_at_most_one(small, big):
    return contains(big, small) and sum(big) - sum(small) <= 1


def _square_boundary(g, n):
    boundary = {(x, n): g.labels[(x, n)] for x in range(n + 1)}
    boundary.update({(n, y): g.labels[(n, y)] for y in range(n + 1)})
    return boundary


def test_single_cell_and_empty():
    g = growth_forward(square_cells(1), {(1, 1)})
    assert g.labels[(1, 1)] == (1,)
    g = growth_forward(square_cells(4), set())
    assert all(lam == () for lam in g.labels.values())
    g = growth_backward(square_cells(3), {c: () for c in [(x, 3) for x in range(4)] + [(3, y) for y in range(4)]})
    assert not g.crosses


def test_local_rules_invert():
    shapes = [lam for k in range(5) for lam in partitions_of(k)]
    for rho in shapes:
        for mu in shapes:
            for nu in shapes:
                for cross in (False, True):
                    try:
                        lam = forward_rule(rho, mu, nu, cross)
                    except ValueError:
                        continue
                    if not (_grows_by_at_most_one(rho, mu) and _grows_by_at_most_one(rho, nu)):
                        continue
                    assert backward_rule(lam, mu, nu) == (rho, cross)


@settings(max_examples=200, deadline=None)
@given(partial_permutations())
def test_forward_then_backward_is_identity(config):
    n, crosses = config
    g = growth_forward(square_cells(n), crosses)
    back = growth_backward(square_cells(n), _square_boundary(g, n))
    assert back.crosses == crosses
    assert back.labels == g.labels


@settings(max_examples=100, deadline=None)
@given(partial_permutations(max_n=7))
def test_greene_chain_lengths(config):
    n, crosses = config
    g = growth_forward(square_cells(n), crosses)
    for x in range(n + 1):
        for y in range(n + 1):
            lam = g.labels[(x, y)]
            stats = greene_chains(crosses, (x, y))
            assert stats.ne_chain == part(lam, 1)
            assert stats.se_chain == len(lam)
            inside = [c for c in crosses if c[0] <= x and c[1] <= y]
            brute = max(
                (k for k in range(len(inside) + 1) for sub in combinations(sorted(inside), k)
                 if all(a[1] < b[1] for a, b in zip(sub, sub[1:]))),
                default=0,
            )
            assert stats.ne_chain == brute


def test_greene_examples():
    assert greene_chains({(1, 1), (2, 2)}, (2, 2)).ne_chain == 2
    assert greene_chains({(1, 2), (2, 1)}, (2, 2)).ne_chain == 1


def test_running_examples_square():
    assert syt_chain(RUNNING_ODD_SYT)[1:] == [
        (1,), (2,), (2, 1), (2, 1, 1), (3, 1, 1), (4, 1, 1), (4, 2, 1), (4, 2, 1, 1),
        (4, 2, 2, 1), (4, 2, 2, 2), (4, 2, 2, 2, 1),
    ]
    assert syt_to_matching(RUNNING_ODD_SYT) == RUNNING_ODD
    assert matching_to_syt(RUNNING_ODD) == RUNNING_ODD_SYT
    assert syt_matching(RUNNING_ODD_SYT, "odd", 2) == RUNNING_ODD
    assert syt_to_matching(RUNNING_EVEN_SYT) == RUNNING_EVEN
    assert syt_matching(RUNNING_EVEN, "even", 2) == RUNNING_EVEN_SYT
    with pytest.raises(ValueError):
        syt_matching(RUNNING_ODD_SYT, "odd", 1)


def test_running_examples_staircase():
    assert staircase_labels(RUNNING_ODD, keep_fixed=False) == RUNNING_ODD_STAIRCASE
    assert list(matching_vt(RUNNING_ODD, "odd")) == [conjugate(lam) for lam in RUNNING_ODD_REDUCED]
    assert vt_matching(matching_vt(RUNNING_ODD, "odd"), "odd") == RUNNING_ODD
    assert vt_matching(matching_vt(RUNNING_EVEN, "even"), "even") == RUNNING_EVEN
    assert matching_vt(Matching(2, frozenset()), "odd") == ((), (), ())


def test_symmetry_example():
    M = Matching(10, frozenset({(1, 10), (2, 6), (3, 8), (4, 9)}))
    image = Matching(10, frozenset({(1, 9), (2, 10), (3, 8), (4, 6)}))
    assert ncnn_symmetry(M) == image
    assert ncnn_symmetry(image) == M
    assert ncnn_symmetry(Matching(0, frozenset())) == Matching(0, frozenset())


def test_symmetry_exchanges_profiles():
    for n in range(8):
        for M in all_matchings(n):
            S = ncnn_symmetry(M)
            p, q = M.profile(), S.profile()
            assert ncnn_symmetry(S) == M
            assert (p.cross2, p.nest2) == (q.nest2, q.cross2)
            assert p.fixed == q.fixed
            assert p.half_crossing == q.half_nesting and p.half_nesting == q.half_crossing


def test_square_bijection_counts():
    motzkin = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    for n in range(10):
        no_two_nesting = [M for M in all_matchings(n) if M.profile().max_nesting < 2]
        images = {matching_to_syt(M) for M in no_two_nesting}
        three_rows = {T for lam in partitions_of(n, max_len=3) for T in standard_tableaux(lam)}
        assert images == three_rows
        assert len(images) == motzkin[n]


def test_square_round_trip():
    for n in range(9):
        for M in all_matchings(n):
            assert syt_to_matching(matching_to_syt(M)) == M


@pytest.mark.parametrize("parity", ["odd", "even"])
def test_staircase_round_trip_and_bounds(parity):
    for n in range(9):
        for M in all_matchings(n):
            T = matching_vt(M, parity)
            assert vt_matching(T, parity) == M
            rows = max(len(lam) for lam in T)
            nest2 = M.profile().nest2
            if parity == "odd":
                assert is_vt(T, max(rows, 1), n + 1)
                # no (h+1)-nesting <=> at most h rows
                assert rows == nest2 // 2
            else:
                # no (h+1/2)-nesting <=> at most h rows and no zero step on a shape with h rows
                for h in range(1, 5):
                    zero_on_edge = any(T[k] == T[k - 1] and len(T[k]) == h for k in range(1, len(T)))
                    assert (rows <= h and not zero_on_edge) == M.profile().nonnesting(h + HALF)


def test_staircase_cells_shape():
    assert staircase_cells(3) == {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)}
    assert staircase_cells(3, with_diagonal=False) == {(1, 1), (1, 2), (2, 1)}
