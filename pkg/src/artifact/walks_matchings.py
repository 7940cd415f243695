"""Vacillating tableaux, partial matchings with (half-)crossing and nesting
statistics, the growth-diagram bijection between them, and a Bessel-series count."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Sequence

from .partitions import add_cell, part, partition, remove_cell, size

VARIANTS = ("plain", "w_star", "h_star", "prime")


def doubled(r) -> int:
    """2r for an integer or half-integer r, given as int, float, Fraction or 'k/2' string."""
    if isinstance(r, str):
        r = Fraction(r)
    d = Fraction(r) * 2
    if d.denominator != 1:
        raise ValueError(f"{r} is not a half-integer")
    return int(d)


@dataclass(frozen=True)
class Matching:
    n: int
    arcs: frozenset

    def __post_init__(self):
        arcs = frozenset(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen = set()
        for i, j in arcs:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad arc {(i, j)}")
            if i in seen or j in seen:
                raise ValueError("arcs are not disjoint")
            seen.update((i, j))

    def fixed_points(self) -> list:
        used = {v for arc in self.arcs for v in arc}
        return [v for v in range(1, self.n + 1) if v not in used]

    def openers(self) -> set:
        return {i for i, _ in self.arcs}

    def closers(self) -> set:
        return {j for _, j in self.arcs}

    def profile(self) -> "CrossNestProfile":
        return crossing_nesting_profile(self)

    def to_dict(self) -> dict:
        return {"n": self.n, "arcs": sorted([list(a) for a in self.arcs])}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Matching":
        return cls(int(d["n"]), frozenset(tuple(a) for a in d["arcs"]))


def all_matchings(n: int) -> Iterator[Matching]:
    def rec(free: tuple, arcs: tuple):
        if not free:
            yield Matching(n, frozenset(arcs))
            return
        v, rest = free[0], free[1:]
        yield from rec(rest, arcs)
        for k, u in enumerate(rest):
            yield from rec(rest[:k] + rest[k + 1:], arcs + ((v, u),))

    yield from rec(tuple(range(1, n + 1)), ())


def _longest_nesting(arcs: Sequence[tuple]) -> int:
    """Largest set of pairwise nested arcs (nesting is transitive, so a chain DP)."""
    arcs = sorted(arcs)
    best = [1] * len(arcs)
    for b, (_, j2) in enumerate(arcs):
        for a in range(b):
            if j2 < arcs[a][1]:
                best[b] = max(best[b], best[a] + 1)
    return max(best, default=0)


def _longest_crossing(arcs: Sequence[tuple]) -> int:
    """Largest k with i_1 < ... < i_k < j_1 < ... < j_k, by subset search."""
    arcs = sorted(arcs)
    for k in range(len(arcs), 0, -1):
        for sub in combinations(arcs, k):
            closers = [j for _, j in sub]
            if sub[-1][0] < closers[0] and closers == sorted(closers):
                return k
    return 0


@dataclass(frozen=True)
class CrossNestProfile:
    max_crossing: int
    max_nesting: int
    half_crossing: tuple  # per fixed point v: largest k with a (k+1/2)-crossing around v
    half_nesting: tuple
    fixed: tuple

    @property
    def cross2(self) -> int:
        """Largest t with a t-crossing, doubled."""
        return max([2 * self.max_crossing] + [2 * k + 1 for k in self.half_crossing if k > 0])

    @property
    def nest2(self) -> int:
        return max([2 * self.max_nesting] + [2 * k + 1 for k in self.half_nesting if k > 0])

    def has_half_crossing(self, k: int) -> bool:
        return any(c >= k for c in self.half_crossing)

    def has_half_nesting(self, k: int) -> bool:
        return any(c >= k for c in self.half_nesting)

    def noncrossing(self, r) -> bool:
        return self.cross2 < doubled(r)

    def nonnesting(self, s) -> bool:
        return self.nest2 < doubled(s)

    def z(self, h: int, w: int) -> int:
        return sum(1 for c, d in zip(self.half_crossing, self.half_nesting) if c >= h and d >= w)

    def prime_ok(self, h: int, w: int) -> bool:
        return all((c >= h) == (d >= w) for c, d in zip(self.half_crossing, self.half_nesting))


def crossing_nesting_profile(M: Matching) -> CrossNestProfile:
    arcs = sorted(M.arcs)
    fixed = tuple(M.fixed_points())
    hc, hn = [], []
    for v in fixed:
        around = [a for a in arcs if a[0] < v < a[1]]
        hc.append(_longest_crossing(around))
        hn.append(_longest_nesting(around))
    return CrossNestProfile(_longest_crossing(arcs), _longest_nesting(arcs), tuple(hc), tuple(hn), fixed)


@lru_cache(maxsize=None)
def _profiles(n: int) -> tuple:
    return tuple((M, crossing_nesting_profile(M)) for M in all_matchings(n))


def ncnn_matchings(n: int, r, s) -> list:
    return [M for M, p in _profiles(n) if p.noncrossing(r) and p.nonnesting(s)]


def ncnn_count(n: int, r, s) -> int:
    return sum(1 for _, p in _profiles(n) if p.noncrossing(r) and p.nonnesting(s))


def ncnn_prime(n: int, h: int, w: int) -> list:
    return [
        (M, p.z(h, w))
        for M, p in _profiles(n)
        if p.noncrossing(h + 1) and p.nonnesting(w + 1) and p.prime_ok(h, w)
    ]


def ncnn_prime_signed(n: int, h: int, w: int) -> int:
    return sum((-1) ** z for _, z in ncnn_prime(n, h, w))


# vacillating tableaux


@dataclass(frozen=True)
class VacillatingTableau:
    chain: tuple
    h: int
    w: int
    variant: str = "plain"

    @property
    def n(self) -> int:
        return len(self.chain) - 1

    def walk(self) -> tuple:
        """The chain as points of Z^h."""
        return tuple(tuple(part(lam, i) for i in range(1, self.h + 1)) for lam in self.chain)

    def zero_steps(self) -> list:
        return [k for k in range(1, len(self.chain)) if self.chain[k] == self.chain[k - 1]]

    def z(self) -> int:
        return sum(1 for k in self.zero_steps() if part(self.chain[k], 1) == self.w)

    def to_json(self) -> str:
        return json.dumps(
            {"chain": [list(l) for l in self.chain], "h": self.h, "w": self.w, "variant": self.variant},
            sort_keys=True,
        )


def zero_step_allowed(lam: tuple, h: int, w: int, variant: str) -> bool:
    on_top = part(lam, 1) == w
    on_floor = part(lam, h) == 0
    if variant == "plain":
        return True
    if variant == "w_star":
        return not on_top
    if variant == "h_star":
        return on_floor
    if variant == "prime":
        return on_top != on_floor
    raise ValueError(f"unknown variant {variant}")


def _moves(lam: tuple, h: int, w: int, variant: str) -> list:
    out = []
    for r in range(1, h + 1):
        mu = add_cell(lam, r)
        if mu is not None and part(mu, 1) <= w:
            out.append(mu)
        mu = remove_cell(lam, r)
        if mu is not None:
            out.append(mu)
    if zero_step_allowed(lam, h, w, variant):
        out.append(lam)
    return out


def is_vt(chain: Sequence, h: int, w: int, variant: str = "plain") -> bool:
    chain = [partition(l) for l in chain]
    if not chain or chain[0] or chain[-1]:
        return False
    for lam in chain:
        if len(lam) > h or part(lam, 1) > w:
            return False
    for a, b in zip(chain, chain[1:]):
        if b not in _moves(a, h, w, variant):
            return False
    return True


def enumerate_vt(n: int, h: int, w: int, variant: str = "plain") -> Iterator[VacillatingTableau]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant}")

    def rec(chain: list):
        left = n + 1 - len(chain)
        lam = chain[-1]
        if left == 0:
            if not lam:
                yield VacillatingTableau(tuple(chain), h, w, variant)
            return
        for mu in _moves(lam, h, w, variant):
            if size(mu) <= left - 1:
                chain.append(mu)
                yield from rec(chain)
                chain.pop()

    yield from rec([()])


def _vt_dp(n: int, h: int, w: int, variant: str, signed: bool) -> int:
    states = {(): 1}
    for _ in range(n):
        nxt: dict = {}
        for lam, c in states.items():
            for mu in _moves(lam, h, w, variant):
                sign = -1 if signed and mu == lam and part(lam, 1) == w else 1
                nxt[mu] = nxt.get(mu, 0) + sign * c
        states = nxt
    return states.get((), 0)


def vt_count(n: int, h: int, w: int, variant: str = "plain") -> int:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant}")
    return _vt_dp(n, h, w, variant, signed=False)


def vt_signed_count(n: int, h: int, w: int, variant: str = "prime") -> int:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant}")
    return _vt_dp(n, h, w, variant, signed=True)


# the growth-diagram bijection between matchings and vacillating tableaux


def chen_phi(M: Matching, h: int, w: int) -> VacillatingTableau:
    """Matching with no (h+1)-crossing and no (w+1)-nesting -> VT_n(h, w)."""
    from .growth import even_labels

    p = crossing_nesting_profile(M)
    if not (p.noncrossing(h + 1) and p.nonnesting(w + 1)):
        raise ValueError("matching outside NCNN_n(h+1, w+1)")
    chain = tuple(even_labels(M, keep_fixed=False))
    return VacillatingTableau(chain, h, w)


def chen_phi_inverse(T: VacillatingTableau) -> Matching:
    from .growth import fill_odd_labels, staircase_to_matching

    if not is_vt(T.chain, T.h, T.w):
        raise ValueError("not a vacillating tableau in the box")
    n = T.n
    if n == 0:
        return Matching(0, frozenset())
    full = fill_odd_labels([partition(l) for l in T.chain], with_diagonal=False)
    M, fixed_cross = staircase_to_matching(full, n, False)
    if fixed_cross:
        raise AssertionError("diagonal cross in the odd pass")
    return M


def bullet_check(M: Matching, T: VacillatingTableau) -> bool:
    """Fixed points <-> zero steps, with the half-crossing and half-nesting refinements."""
    p = crossing_nesting_profile(M)
    if list(p.fixed) != T.zero_steps():
        return False
    for v, c, d in zip(p.fixed, p.half_crossing, p.half_nesting):
        lam = T.chain[v]
        if (c >= T.h) != (part(lam, T.h) > 0):
            return False
        if (d >= T.w) != (part(lam, 1) == T.w):
            return False
    return True


# counting correspondences


def _csyt(n: int, h: int, w: int) -> int:
    from .tableaux import csyt_count

    return csyt_count(n, h, w)


def correspondence_sides(which: str, n: int, h: int, w: int) -> tuple:
    half = Fraction(1, 2)
    csyt = {
        1: lambda: _csyt(n, 2 * h + 1, 2 * w + 1),
        2: lambda: _csyt(n, 2 * h + 1, 2 * w),
        3: lambda: _csyt(n, 2 * h, 2 * w + 1),
        4: lambda: _csyt(n, 2 * h, 2 * w),
    }
    vt = {
        1: lambda: vt_count(n, h, w, "plain"),
        2: lambda: vt_count(n, h, w, "w_star"),
        3: lambda: vt_count(n, h, w, "h_star"),
        4: lambda: vt_signed_count(n, h, w, "prime"),
    }
    ncnn = {
        1: lambda: ncnn_count(n, h + 1, w + 1),
        2: lambda: ncnn_count(n, h + 1, w + half),
        3: lambda: ncnn_count(n, h + half, w + 1),
        4: lambda: ncnn_prime_signed(n, h, w),
    }
    kinds = {"syt_VT": (csyt, vt), "NCNN_VT": (ncnn, vt), "syt_ncnn": (csyt, ncnn)}
    for prefix, (left, right) in kinds.items():
        if which.startswith(prefix) and which[len(prefix):] in ("1", "2", "3", "4"):
            k = int(which[len(prefix):])
            return left[k](), right[k]()
    raise ValueError(f"unknown correspondence {which}")


CORRESPONDENCES = tuple(f"{p}{k}" for p in ("syt_VT", "NCNN_VT", "syt_ncnn") for k in range(1, 5))


def verify_correspondences(which: str, n: int, h: int, w: int) -> bool:
    a, b = correspondence_sides(which, n, h, w)
    return a == b


# Bessel-series count


class _Series:
    """Power series in x with Fraction coefficients, truncated at degree `deg`."""

    def __init__(self, coeffs, deg: int):
        self.deg = deg
        self.c = [Fraction(0)] * (deg + 1)
        for k, v in enumerate(coeffs[: deg + 1]):
            self.c[k] = Fraction(v)

    def __add__(self, other):
        return _Series([a + b for a, b in zip(self.c, other.c)], self.deg)

    def __sub__(self, other):
        return _Series([a - b for a, b in zip(self.c, other.c)], self.deg)

    def __neg__(self):
        return _Series([-a for a in self.c], self.deg)

    def __mul__(self, other):
        out = [Fraction(0)] * (self.deg + 1)
        for i, a in enumerate(self.c):
            if a:
                for j in range(self.deg + 1 - i):
                    if other.c[j]:
                        out[i + j] += a * other.c[j]
        return _Series(out, self.deg)

    def is_zero(self) -> bool:
        return not any(self.c)


def bessel_i(alpha: int, deg: int) -> _Series:
    """I_alpha(2x) = sum_l x^(2l+alpha) / (l! (l+alpha)!), with I_{-alpha} = I_alpha."""
    alpha = abs(alpha)
    c = [Fraction(0)] * (deg + 1)
    l = 0
    while 2 * l + alpha <= deg:
        c[2 * l + alpha] = Fraction(1, factorial(l) * factorial(l + alpha))
        l += 1
    return _Series(c, deg)


def _series_det(matrix: list, deg: int) -> _Series:
    """Laplace expansion; sizes here are tiny."""
    m = len(matrix)
    if m == 0:
        return _Series([1], deg)
    if m == 1:
        return matrix[0][0]
    out = _Series([], deg)
    for j in range(m):
        if matrix[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _series_det(minor, deg)
        out = out + term if j % 2 == 0 else out - term
    return out


def ncnn_bessel_count(n: int, h: int, w: int) -> int:
    """|NCNN_n(h+1, w+1)| from the periodic Bessel determinant.

    The shifts k_i are independent, so each row is summed over its own k_i
    first and a single determinant is taken."""
    period = 2 * h + 2 * w + 2
    deg = n - n % 2
    total = Fraction(0)
    if deg == 0:
        return 1
    rows = []
    for i in range(1, h + 1):
        row = []
        for j in range(1, h + 1):
            acc = _Series([], deg)
            k = 0
            while True:
                added = False
                for kk in {k, -k}:
                    a, b = -i + j + period * kk, i + j + period * kk
                    if min(abs(a), abs(b)) <= deg:
                        acc = acc + bessel_i(a, deg) - bessel_i(b, deg)
                        added = True
                if not added:
                    break
                k += 1
            row.append(acc)
        rows.append(row)
    det = _series_det(rows, deg)
    for m in range(0, n // 2 + 1):
        total += comb(n, 2 * m) * factorial(2 * m) * det.c[2 * m]
    if total.denominator != 1:
        raise AssertionError("non-integral Bessel count")
    return int(total)
