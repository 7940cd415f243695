"""Lattice-path families for one-row-pair cylindric tableaux: triangle walks,
bounded Motzkin paths and their restrictions, Dyck prefixes, up-down paths,
and the bijections and involution relating them.

Paths are step strings. Motzkin, Dyck and up-down paths use U, D, H; triangle
walks use R = (1,0), U = (0,1), B = (-1,-1)."""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .tableaux import SSYT, is_cylindric, shape_of

TRIANGLE_STEPS = {"R": (1, 0), "U": (0, 1), "B": (-1, -1)}
MOTZKIN_STEPS = {"U": 1, "D": -1, "H": 0}

KINDS = ("T", "Mot", "Mot_prime", "Mot1", "Mot2", "Mot3", "DP", "GD", "Mot2_signed")


def heights(p: str) -> list:
    out = [0]
    for s in p:
        out.append(out[-1] + MOTZKIN_STEPS[s])
    return out


def from_heights(hs: Sequence[int]) -> str:
    letters = {1: "U", -1: "D", 0: "H"}
    return "".join(letters[b - a] for a, b in zip(hs, hs[1:]))


def triangle_points(p: str) -> list:
    pts = [(0, 0)]
    for s in p:
        dx, dy = TRIANGLE_STEPS[s]
        x, y = pts[-1]
        pts.append((x + dx, y + dy))
    return pts


# membership


def is_triangle_walk(p: str, m: int) -> bool:
    return all(m >= x >= y >= 0 for x, y in triangle_points(p))


def is_motzkin(p: str, m: int) -> bool:
    hs = heights(p)
    return hs[-1] == 0 and all(0 <= y <= m for y in hs)


def horizontal_levels(p: str) -> list:
    hs = heights(p)
    return [hs[k] for k, s in enumerate(p) if s == "H"]


def k_stat(p: str, w: int) -> int:
    """Number of horizontal steps on the line x2 = w."""
    return sum(1 for y in horizontal_levels(p) if y == w)


def special_steps(p: str, w: int) -> list:
    """Indices j of special horizontal steps p_j -> p_{j+1} of a path in Mot2_n(w).

    A step on x2 = w is special. A step on x2 = 0 is special when every earlier
    horizontal step lies on x2 = 0, there are evenly many of them, and the
    steps right after it climb from 0 to w using only U and D."""
    hs = heights(p)
    n = len(p)
    out = []
    earlier_h = 0
    all_bottom = True
    for j, s in enumerate(p):
        if s != "H":
            continue
        if hs[j] == w:
            out.append(j)
        elif hs[j] == 0 and all_bottom and earlier_h % 2 == 0:
            for i in range(j + 1, n):
                if p[i] == "H":
                    break
                if hs[i + 1] == w:
                    out.append(j)
                    break
        earlier_h += 1
        if hs[j] != 0:
            all_bottom = False
    return out


def in_family(kind: str, p: str, bound: int) -> bool:
    if kind == "T":
        return is_triangle_walk(p, bound)
    if kind == "DP":
        hs = heights(p)
        return "H" not in p and all(0 <= y <= bound for y in hs)
    if kind == "GD":
        hs = heights(p)
        lo, hi = -(bound // 2), (bound + 1) // 2
        return "H" not in p and hs[-1] == (len(p) % 2) and all(lo <= y <= hi for y in hs)
    if not is_motzkin(p, bound):
        return False
    levels = horizontal_levels(p)
    if kind == "Mot":
        return True
    if kind == "Mot_prime":
        return bound not in levels
    if kind == "Mot1":
        return all(y == 0 for y in levels)
    if kind in ("Mot2", "Mot2_signed"):
        return all(y in (0, bound) for y in levels)
    if kind == "Mot3":
        return all(y in (0, bound) for y in levels) and not special_steps(p, bound)
    raise ValueError(f"unknown family {kind}")


def _alphabet(kind: str) -> str:
    if kind == "T":
        return "RUB"
    if kind in ("DP", "GD"):
        return "UD"
    return "UDH"


def enumerate_family(kind: str, n: int, bound: int) -> Iterator[str]:
    """Explicit enumeration with prefix pruning on the height or region bounds."""
    if kind not in KINDS:
        raise ValueError(f"unknown family {kind}")
    alphabet = _alphabet(kind)
    if kind == "GD":
        lo, hi = -(bound // 2), (bound + 1) // 2
    elif kind == "T":
        lo = hi = None
    else:
        lo, hi = 0, bound

    def rec(prefix: str, state):
        if len(prefix) == n:
            if in_family(kind, prefix, bound):
                yield prefix
            return
        for s in alphabet:
            if kind == "T":
                x, y = state
                dx, dy = TRIANGLE_STEPS[s]
                nxt = (x + dx, y + dy)
                if bound >= nxt[0] >= nxt[1] >= 0:
                    yield from rec(prefix + s, nxt)
            else:
                nxt = state + MOTZKIN_STEPS[s]
                if lo <= nxt <= hi and (kind in ("DP", "GD") or nxt <= n - len(prefix) - 1):
                    yield from rec(prefix + s, nxt)

    yield from rec("", (0, 0) if kind == "T" else 0)


def _count_dp(kind: str, n: int, w: int) -> int:
    """Transfer counts. Mot3 tracks the parity of horizontal steps and whether
    the current up/down run follows a bottom horizontal step that would become
    special on reaching height w."""
    if kind == "T":
        states = {(0, 0): 1}
        for _ in range(n):
            nxt: dict = {}
            for (x, y), c in states.items():
                for dx, dy in TRIANGLE_STEPS.values():
                    q = (x + dx, y + dy)
                    if w >= q[0] >= q[1] >= 0:
                        nxt[q] = nxt.get(q, 0) + c
            states = nxt
        return sum(states.values())
    if kind == "Mot3":
        states = {(0, 0, False): 1}
        for _ in range(n):
            nxt = {}
            for (y, parity, pending), c in states.items():
                for s, d in MOTZKIN_STEPS.items():
                    if s == "H":
                        if y != 0:
                            continue
                        key = (0, 1 - parity, parity == 0)
                    else:
                        y2 = y + d
                        if not 0 <= y2 <= w or (pending and y2 == w):
                            continue
                        key = (y2, parity, pending)
                    nxt[key] = nxt.get(key, 0) + c
            states = nxt
        return sum(c for (y, _, _), c in states.items() if y == 0)
    lo, hi = (-(w // 2), (w + 1) // 2) if kind == "GD" else (0, w)
    states = {0: 1}
    for _ in range(n):
        nxt = {}
        for y, c in states.items():
            for s, d in MOTZKIN_STEPS.items():
                y2 = y + d
                if not lo <= y2 <= hi:
                    continue
                weight = 1
                if s == "H":
                    if kind in ("DP", "GD"):
                        continue
                    if kind == "Mot_prime" and y == w:
                        continue
                    if kind == "Mot1" and y != 0:
                        continue
                    if kind in ("Mot2", "Mot2_signed") and y not in (0, w):
                        continue
                    if kind == "Mot2_signed" and y == w:
                        weight = -1
                nxt[y2] = nxt.get(y2, 0) + weight * c
        states = nxt
    if kind == "DP":
        return sum(states.values())
    if kind == "GD":
        return states.get(n % 2, 0)
    return states.get(0, 0)


def count_family(kind: str, n: int, bound: int, method: str = "dp") -> int:
    if kind not in KINDS:
        raise ValueError(f"unknown family {kind}")
    if method == "dp":
        return _count_dp(kind, n, bound)
    if method == "enumerate":
        if kind == "Mot2_signed":
            return sum((-1) ** k_stat(p, bound) for p in enumerate_family(kind, n, bound))
        return sum(1 for _ in enumerate_family(kind, n, bound))
    raise ValueError(f"unknown method {method}")


def reflection_count(n: int, w: int) -> int:
    """|DP_n(w)| as an alternating sum of binomials."""
    reach = 2 * n // (w + 2) + 1
    total = 0
    for j in range(-reach, reach + 1):
        k = (n + (w + 2) * j) // 2
        if 0 <= k <= n:
            total += (-1) ** abs(j) * comb(n, k)
    return total


# tableaux <-> walks


def csyt_to_walk(T: Sequence[Sequence[int]], target: str, w: int | None = None) -> str:
    """Row r of the entry i sets step i: rows 1/2/3 give R/U/B for a triangle
    walk, rows 1/2 give U/D for a Dyck prefix."""
    rows = {"triangle": 3, "dyck_prefix": 2}
    if target not in rows:
        raise ValueError(f"unknown target {target}")
    if len(T) > rows[target]:
        raise ValueError("wrong number of rows")
    if w is not None and T and not is_cylindric(T, rows[target], w, SSYT):
        raise ValueError("tableau is not cylindric for the given width")
    letters = "RUB" if target == "triangle" else "UD"
    where = {v: r for r, row in enumerate(T) for v in row}
    n = len(where)
    if sorted(where) != list(range(1, n + 1)):
        raise ValueError("not a standard filling")
    return "".join(letters[where[i]] for i in range(1, n + 1))


def walk_to_csyt(p: str, target: str) -> tuple:
    letters = "RUB" if target == "triangle" else "UD"
    rows: list = [[] for _ in letters]
    for i, s in enumerate(p, start=1):
        rows[letters.index(s)].append(i)
    while rows and not rows[-1]:
        rows.pop()
    T = tuple(tuple(r) for r in rows)
    shape = shape_of(T)
    if list(shape) != sorted(shape, reverse=True):
        raise ValueError("walk leaves the region")
    return T


# matchings <-> Motzkin paths


def matching_to_motzkin(M) -> str:
    if M.profile().max_crossing >= 2:
        raise ValueError("matching has a 2-crossing")
    opens, closes = M.openers(), M.closers()
    return "".join("U" if v in opens else "D" if v in closes else "H" for v in range(1, M.n + 1))


def motzkin_to_matching(p: str):
    from .walks_matchings import Matching

    stack: list = []
    arcs = set()
    for v, s in enumerate(p, start=1):
        if s == "U":
            stack.append(v)
        elif s == "D":
            if not stack:
                raise ValueError("path goes below the axis")
            arcs.add((stack.pop(), v))
    if stack:
        raise ValueError("path does not return to the axis")
    return Matching(len(p), frozenset(arcs))


# the sign-reversing involution on Mot2


def special_involution(p: str, w: int) -> str:
    """Swap the first special step between the two ends of an adjacent up/down
    run from height 0 to w; the run is reversed, which reflects it through its centre."""
    if not in_family("Mot2", p, w):
        raise ValueError("path is not in Mot2")
    specials = special_steps(p, w)
    if not specials:
        return p
    j = specials[0]
    hs = heights(p)
    if hs[j] == w:
        i = _last_zero_before(p, hs, j)
        run = p[i:j]
        return p[:i] + "H" + run[::-1] + p[j + 1:]
    i = j + 1
    while hs[i] != w:
        i += 1
    run = p[j + 1:i]
    return p[:j] + run[::-1] + "H" + p[i:]


def _last_zero_before(p: str, hs: list, j: int) -> int:
    """Largest i < j with height 0 at i and only U/D steps from i to j."""
    i = j
    while hs[i] != 0:
        if i == 0 or p[i - 1] == "H":
            raise AssertionError("no up/down run from height 0 before a top special step")
        i -= 1
    return i


# Dershowitz's bijection between bounded Dyck prefixes and up-down paths


def _ta_word(p: str, k2: int) -> str:
    """TA word relative to the line x2 = k2 / 2 (k2 odd)."""
    hs = heights(p)
    out = []
    for y, s in zip(hs, p):
        toward = (2 * y < k2) == (s == "U")
        out.append("T" if toward else "A")
    return "".join(out)


def _from_ta(word: str, k2: int) -> str:
    y = 0
    out = []
    for r in word:
        up = (2 * y < k2) == (r == "T")
        out.append("U" if up else "D")
        y += 1 if up else -1
    return "".join(out)


def _dershowitz_split(p: str) -> tuple:
    hs = heights(p)
    top = max(hs)
    k2 = 2 * ((top + 1) // 2) - 1
    j = hs.index(top // 2)
    return top, k2, j


def dershowitz(p: str) -> str:
    if "H" in p or min(heights(p)) < 0:
        raise ValueError("not a Dyck prefix")
    _, k2, j = _dershowitz_split(p)
    r = _ta_word(p, k2)
    return _from_ta(r[j:] + r[:j][::-1], 1)


def dershowitz_inverse(q: str, w: int) -> str:
    """Recover the Dyck prefix by trying every maximum height and split point."""
    n = len(q)
    word = _ta_word(q, 1)
    found = []
    for top in range(0, min(w, n) + 1):
        k2 = 2 * ((top + 1) // 2) - 1
        for j in range(0, n + 1):
            r = word[n - j:][::-1]
            r = r + word[: n - j]
            p = _from_ta(r, k2)
            hs = heights(p)
            if min(hs) >= 0 and max(hs) == top and hs.index(top // 2) == j:
                found.append(p)
    if len(found) != 1:
        raise ValueError(f"no unique preimage for {q}")
    return found[0]


# the folding map from up-down paths to Motzkin paths


def psi(p: str) -> str:
    hs = heights(p)
    return from_heights([y - 1 if y >= 1 else -y for y in hs])


def psi_inverse(q: str, bound: int) -> str:
    """Unfold by trying both lifts at each point; the up-down constraint fixes the choice."""
    hs = heights(q)
    lo, hi = -(bound // 2), (bound + 1) // 2
    cands = [[y + 1, -y] if y > 0 else [1, 0] for y in hs]
    paths = [[0]]
    for opts in cands[1:]:
        paths = [ps + [c] for ps in paths for c in set(opts) if abs(c - ps[-1]) == 1 and lo <= c <= hi]
    paths = [ps for ps in paths if ps[-1] == len(q) % 2]
    if len(paths) != 1:
        raise ValueError(f"no unique preimage for {q}")
    return from_heights(paths[0])


# count identities


H1_IDENTITIES = ("t_Mot1", "t_Mot2", "DP_Mot1", "DP_Mot2")


def h1_sides(which: str, n: int, w: int) -> tuple:
    if which == "t_Mot1":
        return count_family("T", n, 2 * w + 1), count_family("Mot", n, w)
    if which == "t_Mot2":
        return count_family("T", n, 2 * w), count_family("Mot_prime", n, w)
    if which == "DP_Mot1":
        return count_family("DP", n, 2 * w + 1), count_family("Mot1", n, w)
    if which == "DP_Mot2":
        return count_family("DP", n, 2 * w), count_family("Mot2_signed", n, w)
    raise ValueError(f"unknown identity {which}")


def verify_h1(which: str, n: int, w: int) -> bool:
    a, b = h1_sides(which, n, w)
    return a == b
