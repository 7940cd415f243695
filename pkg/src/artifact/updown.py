"""Up-down tableaux with optional boundary marks, weighted lattice paths with
vertical / forward-diagonal / backward-diagonal steps, and checks that tie
their generating functions to the periodic F-determinants."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .epoly import EPoly, F, Fbar, XPoly, determinant, e_sum, monomial_expand
from .partitions import part, partition

MARKINGS = ("none", "h_star", "w_star", "both")


@dataclass(frozen=True)
class UpDownTableau:
    chain: tuple
    h: int
    w: int

    @property
    def n(self) -> int:
        return (len(self.chain) - 1) // 2

    def step_sizes(self) -> tuple:
        """d_i = -|lam^{2i-2}| + 2|lam^{2i-1}| - |lam^{2i}|."""
        c = self.chain
        return tuple(-sum(c[2 * i - 2]) + 2 * sum(c[2 * i - 1]) - sum(c[2 * i]) for i in range(1, self.n + 1))

    def to_json(self) -> str:
        return json.dumps([list(lam) for lam in self.chain])


@dataclass(frozen=True)
class MarkedUDT:
    base: UpDownTableau
    M1: frozenset = frozenset()
    M2: frozenset = frozenset()

    def sign(self) -> int:
        return -1 if len(self.M2) % 2 else 1

    def exponents(self) -> tuple:
        """Exponents of x: +1 for each j in M1, -1 for each j in M2."""
        d = list(self.base.step_sizes())
        for j in self.M1:
            d[j - 1] += 1
        for j in self.M2:
            d[j - 1] -= 1
        return tuple(d)


def vertical_strips_up(lam: Sequence[int], max_rows: int) -> Iterator[tuple]:
    """Partitions mu containing lam with mu/lam a vertical strip and at most max_rows rows."""
    rows = max_rows
    base = [part(lam, i) for i in range(1, rows + 1)]
    for add in itertools.product((0, 1), repeat=rows):
        mu = [b + a for a, b in zip(add, base)]
        if all(mu[i] >= mu[i + 1] for i in range(rows - 1)):
            yield partition(mu)


def vertical_strips_down(lam: Sequence[int]) -> Iterator[tuple]:
    """Partitions mu inside lam with lam/mu a vertical strip."""
    for sub in itertools.product((0, 1), repeat=len(lam)):
        mu = [p - s for p, s in zip(lam, sub)]
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield partition(mu)


def is_updown(chain: Sequence[Sequence[int]], h: int, w: int) -> bool:
    if len(chain) % 2 == 0 or chain[0] or chain[-1]:
        return False
    for t in range(1, len(chain)):
        a, b = chain[t - 1], chain[t]
        small, big = (a, b) if t % 2 else (b, a)
        rows = max(len(small), len(big))
        if any(not 0 <= part(big, i) - part(small, i) <= 1 for i in range(1, rows + 1)):
            return False
    if any(len(lam) > h for lam in chain):
        return False
    return all(part(chain[t], 1) <= w for t in range(0, len(chain), 2))


def _mark_options(odd_shape, h: int, w: int, marking: str):
    """Allowed (in M1, in M2) pairs at one odd position."""
    m1 = [False, True] if marking in ("h_star", "both") and part(odd_shape, h) == 0 else [False]
    m2 = [False, True] if marking in ("w_star", "both") and part(odd_shape, 1) == w + 1 else [False]
    return list(itertools.product(m1, m2))


def enumerate_udt(n: int, h: int, w: int, marking: str = "none") -> Iterator[tuple]:
    """Yield (MarkedUDT, sign, exponent tuple) over the (marked) family."""
    if marking not in MARKINGS:
        raise ValueError(f"unknown marking {marking!r}")

    def chains(prefix):
        level = (len(prefix) - 1) // 2
        if level == n:
            if not prefix[-1]:
                yield tuple(prefix)
            return
        for up in vertical_strips_up(prefix[-1], h):
            for down in vertical_strips_down(up):
                # each later level shrinks the first row by at most one cell
                if part(down, 1) <= min(w, n - level - 1):
                    yield from chains(prefix + [up, down])

    for chain in chains([()]):
        T = UpDownTableau(chain, h, w)
        odd = [chain[2 * j - 1] for j in range(1, n + 1)]
        per_level = [_mark_options(s, h, w, marking) for s in odd]
        for choice in itertools.product(*per_level):
            M1 = frozenset(j + 1 for j, (a, _) in enumerate(choice) if a)
            M2 = frozenset(j + 1 for j, (_, b) in enumerate(choice) if b)
            marked = MarkedUDT(T, M1, M2)
            yield marked, marked.sign(), marked.exponents()


def udt_weight_sum(n: int, h: int, w: int, marking: str = "none") -> XPoly:
    """Signed weight generating function, by a transfer over the even shapes."""
    if marking not in MARKINGS:
        raise ValueError(f"unknown marking {marking!r}")
    states = {(): XPoly.one(n)}
    for level in range(n):
        nxt: dict = {}
        for lam, poly in states.items():
            for up in vertical_strips_up(lam, h):
                for down in vertical_strips_down(up):
                    if part(down, 1) > w:
                        continue
                    d = -sum(lam) + 2 * sum(up) - sum(down)
                    step = XPoly(n)
                    for in1, in2 in _mark_options(up, h, w, marking):
                        key = [0] * n
                        key[level] = d + int(in1) - int(in2)
                        step = step + XPoly.monomial(key, -1 if in2 else 1)
                    nxt[down] = nxt.get(down, XPoly(n)) + poly.mul(step)
        states = nxt
    result = states.get((), XPoly(n))
    if any(min(k, default=0) < 0 for k in result):
        raise AssertionError("negative exponent survived in an up-down weight sum")
    return result


def udt_count(n: int, h: int, w: int) -> int:
    return sum(1 for _ in enumerate_udt(n, h, w))


# lattice paths with steps in S


REGIONS = ("plain", "right_marked", "left_marked", "both_marked")


def spath_weight_sum(region: str, i: int, j: int, two_n: int, a=None, b=None, N: int | None = None) -> XPoly:
    """Weight generating function of S-paths from (i, 0) to (j, two_n).

    `plain` uses the even-height window [a, b] (None for unbounded); the marked
    regions use the window [1, N] and add 1-branch marks (weight x_k) on the
    left, N-branch marks (weight -1/x_k) on the right, or both."""
    if two_n % 2:
        raise ValueError("paths end at an even height")
    n = two_n // 2
    if region != "plain":
        if N is None:
            raise ValueError("marked regions need N")
        a, b = 1, N
    left = region in ("left_marked", "both_marked")
    right = region in ("right_marked", "both_marked")
    lo = a if a is not None else min(i, j) - n - 1
    hi = b if b is not None else max(i, j) + n + 1
    if not (lo <= i <= hi and lo <= j <= hi):
        return XPoly(n)
    states = {i: XPoly.one(n)}
    for level in range(n):
        x_only = [0] * n
        x_only[level] = 1
        nxt: dict = {}
        for x, poly in states.items():
            for mid, w1 in ((x, 0), (x + 1, 1)):
                for end, w2 in ((mid, 0), (mid - 1, 1)):
                    if not lo <= end <= hi:
                        continue
                    key = [0] * n
                    key[level] = w1 + w2
                    step = XPoly.monomial(key)
                    if left and x == end == mid == 1:
                        step = step + XPoly.monomial(x_only)
                    if right and x == end == N and mid == N + 1:
                        step = step - XPoly.monomial(x_only)
                    nxt[end] = nxt.get(end, XPoly(n)) + poly.mul(step)
        states = nxt
    return states.get(j, XPoly(n))


def spath_kernel(region: str, i: int, j: int, N: int, n: int) -> EPoly:
    """The F-side of the path identities for paths in the window [1, N]."""
    if region == "plain":
        return F(j - i, 2 * N + 2, n) - F(i + j, 2 * N + 2, n)
    if region == "right_marked":
        return F(j - i, 2 * N + 1, n) - F(i + j, 2 * N + 1, n)
    if region == "left_marked":
        return Fbar(j - i, 2 * N + 1, n) + Fbar(i + j - 1, 2 * N + 1, n)
    if region == "both_marked":
        return Fbar(j - i, 2 * N, n) + Fbar(i + j - 1, 2 * N, n)
    raise ValueError(f"unknown region {region!r}")


def path_steps(xs: Sequence[int]) -> list:
    """Step letters v / f / b of the S-path through abscissas xs at heights 0, 1, 2, ..."""
    out = []
    for t in range(1, len(xs)):
        dx = xs[t] - xs[t - 1]
        if dx == 0:
            out.append("v")
        elif dx == 1 and t % 2 == 1:
            out.append("f")
        elif dx == -1 and t % 2 == 0:
            out.append("b")
        else:
            raise ValueError(f"illegal step at height {t}")
    return out


def path_weight(xs: Sequence[int]) -> tuple:
    """Exponent vector: every diagonal step between heights 2k-2 and 2k carries x_k."""
    n = (len(xs) - 1) // 2
    exps = [0] * n
    for t, s in enumerate(path_steps(xs), start=1):
        if s != "v":
            exps[(t - 1) // 2] += 1
    return tuple(exps)


def all_spaths(start: int, two_n: int) -> Iterator[tuple]:
    def grow(xs):
        if len(xs) == two_n + 1:
            yield tuple(xs)
            return
        t = len(xs)
        moves = (0, 1) if t % 2 == 1 else (0, -1)
        for dx in moves:
            yield from grow(xs + [xs[-1] + dx])

    yield from grow([start])


def modified_reflection(xs: Sequence[int], upto: int) -> tuple:
    """Apply the pairwise step swap vf <-> fv... to the prefix ending at even height `upto`:
    (f, v) <-> (v, b), while (v, v) and (f, b) stay. The prefix is re-anchored so
    that it still ends at xs[upto]."""
    steps = path_steps(xs[: upto + 1])
    swapped = []
    for k in range(0, len(steps), 2):
        pair = (steps[k], steps[k + 1])
        if pair == ("f", "v"):
            pair = ("v", "b")
        elif pair == ("v", "b"):
            pair = ("f", "v")
        swapped.extend(pair)
    disp = sum(1 if s == "f" else -1 if s == "b" else 0 for s in swapped)
    start = xs[upto] - disp
    out = [start]
    for s in swapped:
        out.append(out[-1] + (1 if s == "f" else -1 if s == "b" else 0))
    return tuple(out) + tuple(xs[upto + 1:])


def reflection_involution(xs: Sequence[int], N: int) -> tuple | None:
    """The involution on paths leaving the window [1, N] at an even height:
    reflect the prefix up to the highest even-height visit of x = 0 or x = N + 1.
    None when the path stays inside the window."""
    hits = [t for t in range(0, len(xs), 2) if xs[t] in (0, N + 1)]
    if not hits:
        return None
    return modified_reflection(xs, max(hits))


def in_window(xs: Sequence[int], a: int, b: int) -> bool:
    return all(a <= xs[t] <= b for t in range(0, len(xs), 2))


# determinant sides and the corollaries


def updown_determinant(which: str, h: int, w: int, n: int) -> EPoly:
    """The F-determinant whose expansion the (marked) up-down tableaux count."""
    one = EPoly.const(n, 1)
    if which in ("OT_L1", "none"):
        N = 2 * h + 2 * w + 2
        G = lambda i, j: F(j - i, N, n) - F(i + j, N, n)
    elif which in ("OT_L2", "w_star"):
        N = 2 * h + 2 * w + 1
        G = lambda i, j: F(j - i, N, n) - F(i + j, N, n)
    elif which in ("OT_L3", "h_star"):
        N = 2 * h + 2 * w + 1
        G = lambda i, j: Fbar(j - i, N, n) + Fbar(i + j - 1, N, n)
    elif which in ("OT_L4", "both"):
        N = 2 * h + 2 * w
        G = lambda i, j: Fbar(j - i, N, n) + Fbar(i + j - 1, N, n)
    else:
        raise ValueError(f"unknown determinant {which!r}")
    return determinant([[G(i, j) for j in range(1, h + 1)] for i in range(1, h + 1)], one)


THEOREM_MARKING = {"OT_L1": "none", "OT_L2": "w_star", "OT_L3": "h_star", "OT_L4": "both"}
COROLLARY_DET = {"Cor_L1": "OT_L1", "Cor_L2": "OT_L2", "Cor_L3": "OT_L3", "Cor_L4": "OT_L4"}


def _offsets(which: str, T: UpDownTableau, i: int) -> tuple:
    """Allowed values of m_i - d_i at level i of T."""
    c, h, w = T.chain, T.h, T.w
    before, odd, after = c[2 * i - 2], c[2 * i - 1], c[2 * i]
    zero_last = part(odd, h) == 0
    wide = part(odd, 1) == w + 1
    if which == "Cor_L1":
        return (0, 1)
    if which == "Cor_L2":
        if wide:
            return (1,)
        if part(before, 1) == part(odd, 1) == part(after, 1) == w:
            return (0,)
        return (0, 1)
    if which == "Cor_L3":
        return (0, 1) if zero_last else (0,)
    if which == "Cor_L4":
        if not zero_last and not wide:
            return (0,)
        if not zero_last:
            return (0, -1)
        if not wide:
            return (0, 1)
        return (1, -1)
    raise ValueError(f"unknown corollary {which!r}")


def corollary_counts(which: str, h: int, w: int, n: int) -> XPoly:
    """The tableau counts the corollary attaches to each coefficient, collected as a
    polynomial: T contributes to x^m whenever every d_i satisfies the level-i rule.
    For Cor_L4 the contribution is -1 when an odd number of levels have d_i = m_i + 1."""
    total: dict = {}
    for marked, _, _ in enumerate_udt(n, h, w):
        T = marked.base
        d = T.step_sizes()
        options = [_offsets(which, T, i) for i in range(1, n + 1)]
        for offs in itertools.product(*options):
            exps = tuple(di + o for di, o in zip(d, offs))
            sign = -1 if which == "Cor_L4" and sum(1 for o in offs if o == -1) % 2 else 1
            total[exps] = total.get(exps, 0) + sign
    return XPoly(n, total)


def corollary_count(which: str, h: int, w: int, exps: Sequence[int]) -> int:
    """The count attached to the single coefficient of x^exps."""
    return corollary_counts(which, h, w, len(exps)).coefficient(exps)


def corollary_polynomial(which: str, h: int, w: int, n: int) -> XPoly:
    det = updown_determinant(COROLLARY_DET[which], h, w, n)
    if which in ("Cor_L1", "Cor_L2"):
        det = e_sum(n) * det
    return monomial_expand(det)


def verify_updown(which: str, h: int, w: int, n: int) -> bool:
    if which in THEOREM_MARKING:
        if n == 0:
            return udt_weight_sum(0, h, w, THEOREM_MARKING[which]) == XPoly.one(0)
        det = monomial_expand(updown_determinant(which, h, w, n))
        return det == udt_weight_sum(n, h, w, THEOREM_MARKING[which])
    if which in COROLLARY_DET:
        if n == 0:
            # no variables: both sides are the empty product 1
            return corollary_counts(which, h, w, 0) == XPoly.one(0)
        return corollary_polynomial(which, h, w, n) == corollary_counts(which, h, w, n)
    raise ValueError(f"unknown check {which!r}")


# row-strict tableaux as nonintersecting lattice paths


def row_paths(T: Sequence[Sequence[int]], top: int) -> list:
    """Row i of a row-strict tableau becomes a north/east path from (1 - i, i - 1):
    its c-th east step (weight x_{t_c}) sits at height t_c + i - c - 1, and the
    path then rises vertically to height `top`. Returned as sets of lattice points."""
    paths = []
    for i, row in enumerate(T, start=1):
        x, y = 1 - i, i - 1
        pts = {(x, y)}
        for c, t in enumerate(row, start=1):
            target = t + i - c - 1
            if target < y:
                raise ValueError("row is not strictly increasing")
            for yy in range(y + 1, target + 1):
                pts.add((x, yy))
            y = target
            x += 1
            pts.add((x, y))
        for yy in range(y + 1, top + 1):
            pts.add((x, yy))
        paths.append(pts)
    return paths


def paths_nonintersecting(T: Sequence[Sequence[int]], h: int, w: int) -> tuple:
    """(paths pairwise disjoint, the shift of P_1 by (-h-w, h+w) misses P_h),
    compared below a common height well above every entry."""
    top = max((t for row in T for t in row), default=0) + 2 * (h + w) + len(T)
    rows = list(T) + [()] * (h - len(T))
    P = row_paths(rows, top)
    disjoint = all(not (P[a] & P[b]) for a in range(h) for b in range(a + 1, h))
    shifted = {(x - h - w, y + h + w) for x, y in P[0] if y + h + w <= top}
    return disjoint, not (shifted & P[h - 1])
