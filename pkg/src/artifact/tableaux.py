"""Cylindric tableaux, cylindric Schur functions, quantum Kostka numbers and
counts of cylindric standard Young tableaux."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .epoly import EPoly, XPoly, determinant, e
from .partitions import (
    INF,
    addable_rows,
    cylinder_column_length,
    in_family,
    part,
    partition,
    partitions_of,
    removable_rows,
)

SSYT = "SSYT"
RST = "RST"


def tableau(rows: Sequence[Sequence[int]]) -> tuple:
    rows = tuple(tuple(r) for r in rows if len(r))
    shape = tuple(len(r) for r in rows)
    partition(shape)
    return rows


def shape_of(T: Sequence[Sequence[int]]) -> tuple:
    return tuple(len(r) for r in T)


def content(T: Sequence[Sequence[int]]) -> tuple:
    """Multiplicities of 1, 2, ..., max entry."""
    top = max((x for r in T for x in r), default=0)
    counts = [0] * top
    for r in T:
        for x in r:
            counts[x - 1] += 1
    return tuple(counts)


def _rows_ok(T, strict: bool) -> bool:
    for r in T:
        for a, b in zip(r, r[1:]):
            if (a >= b) if strict else (a > b):
                return False
    return True


def _cols_ok(T, strict: bool) -> bool:
    for upper, lower in zip(T, T[1:]):
        for a, b in zip(upper, lower):
            if (a >= b) if strict else (a > b):
                return False
    return True


def is_valid(T, kind: str) -> bool:
    """SSYT: rows weak, columns strict. RST: rows strict, columns weak."""
    if kind == SSYT:
        return _rows_ok(T, False) and _cols_ok(T, True)
    if kind == RST:
        return _rows_ok(T, True) and _cols_ok(T, False)
    raise ValueError(f"unknown tableau kind {kind!r}")


def is_cylindric(T, h: int, w: int, kind: str) -> bool:
    """Overlay T with its copy translated h rows down and w columns left and
    check that the union is a valid filling of a skew shape."""
    T = tableau(T)
    if not is_valid(T, kind):
        raise ValueError("not a valid tableau of the requested kind")
    lam = shape_of(T)
    # the union is a skew shape exactly when lam lies in Par(h, w)
    if not in_family(lam, h, w):
        return False
    if len(lam) < h:
        # row h is empty, so nothing sits above the translated first row
        return True
    last, first = T[h - 1], T[0]
    for c in range(1, len(last) + 1):
        if c + w <= len(first):
            above, below = last[c - 1], first[c + w - 1]
            if (above >= below) if kind == SSYT else (above > below):
                return False
    return True


def enumerate_tableaux(shape: Sequence[int], kind: str, max_entry: int) -> Iterator[tuple]:
    """All tableaux of the given kind and straight shape with entries in 1..max_entry."""
    shape = tuple(shape)
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]
    row_strict = kind == RST
    if kind not in (SSYT, RST):
        raise ValueError(f"unknown tableau kind {kind!r}")

    def fill(idx: int):
        if idx == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1] + (1 if row_strict else 0))
        if i > 0:
            lo = max(lo, grid[i - 1][j] + (0 if row_strict else 1))
        for v in range(lo, max_entry + 1):
            grid[i][j] = v
            yield from fill(idx + 1)
        grid[i][j] = 0

    yield from fill(0)


def enumerate_cylindric(lam, h: int, w: int, kind: str, max_entry: int) -> Iterator[tuple]:
    lam = partition(lam)
    if not in_family(lam, h, w):
        return
    for T in enumerate_tableaux(lam, kind, max_entry):
        if is_cylindric(T, h, w, kind):
            yield T


def periodic_det_sum(lam: Sequence[int], m: int, period, n: int, cap: int | None = None, offsets=None):
    """sum over k in Z^m with k_1 + ... + k_m = 0 of det(e_{lam_i - i + j + period*k_i}).

    Expanded directly as sum_k sum_sigma sgn(sigma) prod_i e_{lam_i - i + sigma(i) + period*k_i},
    row by row, memoized on (row, unused columns, running sum of k). With
    period None only k = 0 contributes (the classical Jacobi-Trudi determinant).
    The range of each k_i is forced by 0 <= index <= n.
    """
    lam = tuple(part(lam, i) for i in range(1, m + 1)) if offsets is None else tuple(offsets)
    one = EPoly.const(n, 1, cap)
    zero = EPoly(n, {}, cap)
    if m == 0:
        return one

    def k_choices(i: int, j: int):
        base = lam[i] - (i + 1) + j
        if period is None:
            return [0] if 0 <= base <= n else []
        lo = -((base) // period)  # smallest k with base + period*k >= 0
        out = []
        k = lo
        while base + period * k <= n:
            out.append(k)
            k += 1
        return out

    gens = [e(k, n, cap) for k in range(n + 1)]
    memo: dict = {}

    def expand(row: int, cols: int, ksum: int):
        if row == m:
            return one if ksum == 0 else None
        key = (row, cols, ksum)
        if key in memo:
            return memo[key]
        total = None
        position = 0
        for c in range(m):
            if cols >> c & 1:
                sign = -1 if position % 2 else 1
                position += 1
                for k in k_choices(row, c + 1):
                    sub = expand(row + 1, cols & ~(1 << c), ksum + k)
                    if sub is None or not sub:
                        continue
                    idx = lam[row] - (row + 1) + (c + 1) + (0 if period is None else period * k)
                    term = gens[idx] * sub
                    if sign < 0:
                        term = -term
                    total = term if total is None else total + term
        memo[key] = total
        return total

    result = expand(0, (1 << m) - 1, 0)
    return zero if result is None else result


def cylindric_schur(lam, h: int, w: int, method: str, n: int, cap: int | None = None):
    """The cylindric Schur function attached to lam in Par(h, w), in n variables.

    tableaux: generating function of cylindric row-strict tableaux, as an XPoly.
    jacobi_trudi: the periodic determinant sum, as an EPoly.
    """
    lam = partition(lam)
    if not in_family(lam, h, w):
        raise ValueError(f"{lam} is not in Par({h},{w})")
    if method == "tableaux":
        total = XPoly(n)
        if cap is not None and sum(lam) > cap:
            return total
        for T in enumerate_cylindric(lam, h, w, RST, n):
            c = content(T)
            total = total + XPoly.monomial(tuple(c) + (0,) * (n - len(c)))
        return total
    if method == "jacobi_trudi":
        if cap is not None and sum(lam) > cap:
            return EPoly(n, {}, cap)
        return periodic_det_sum(lam, h, None if w == INF else h + w, n, cap)
    raise ValueError(f"unknown method {method!r}")


def classical_jacobi_trudi(lam, n: int, cap: int | None = None) -> EPoly:
    lam = partition(lam)
    m = len(lam)
    mat = [[e(lam[i] - i + j, n, cap) for j in range(m)] for i in range(m)]
    return determinant(mat, EPoly.const(n, 1, cap))


def quantum_kostka(lam, h: int, w: int, alpha: Sequence[int], method: str) -> int:
    lam = partition(lam)
    if not in_family(lam, h, w):
        raise ValueError(f"{lam} is not in Par({h},{w})")
    alpha = tuple(alpha)
    if method == "tableaux":
        if sum(alpha) != sum(lam):
            return 0
        return sum(1 for T in enumerate_cylindric(lam, h, w, RST, len(alpha)) if _padded_content(T, len(alpha)) == alpha)
    if method == "paths":
        return _kostka_paths(tuple(part(lam, i) for i in range(1, h + 1)), h, w, alpha)
    raise ValueError(f"unknown method {method!r}")


def _padded_content(T, length: int) -> tuple:
    c = content(T)
    return tuple(c) + (0,) * (length - len(c))


def _kostka_paths(target: tuple, h: int, w: int, alpha: tuple) -> int:
    """Walks in Z^h from 0 to target; step t adds 1 to alpha_t distinct coordinates;
    every point obeys x_1 >= ... >= x_h >= x_1 - w."""

    def ok(x):
        return all(x[i] >= x[i + 1] for i in range(h - 1)) and x[h - 1] >= x[0] - w

    @lru_cache(maxsize=None)
    def count(t: int, x: tuple) -> int:
        if t == len(alpha):
            return 1 if x == target else 0
        total = 0
        for rows in itertools.combinations(range(h), alpha[t]):
            y = list(x)
            for r in rows:
                y[r] += 1
            y = tuple(y)
            if ok(y) and all(a <= b for a, b in zip(y, target)):
                total += count(t + 1, y)
        return total

    return count(0, (0,) * h)


def cylinder_entry(T, h: int, w: int, row: int, col: int):
    """Entry of the periodic cylinder at (row, col), 1-based; None if empty.

    Cell (i + k h, j - k w) carries T(i, j)."""
    i = (row - 1) % h + 1
    k = (row - i) // h
    j = col + k * w
    if i <= len(T) and 1 <= j <= len(T[i - 1]):
        return T[i - 1][j - 1]
    return None


def transpose_tableau(T, h: int, w: int) -> tuple:
    """Tr(T; h, w): entry (a, b) is the cylinder entry at (b, a); the shape is Tr(shape; h, w)."""
    T = tableau(T)
    lam = shape_of(T)
    if not in_family(lam, h, w):
        raise ValueError("tableau shape not in Par(h, w)")
    rows = []
    for a in range(1, w + 1):
        length = cylinder_column_length(lam, h, w, a)
        rows.append(tuple(cylinder_entry(T, h, w, b, a) for b in range(1, length + 1)))
    return tableau(rows)


# counting cylindric standard Young tableaux


def csyt_count(n: int, h: int, w: int, method: str = "chain_dp") -> int:
    if n < 0 or h < 1 or w < 1:
        raise ValueError("need n >= 0 and h, w >= 1")
    if method == "chain_dp":
        return _csyt_chain_dp(n, h, w)
    if method == "brute":
        return sum(
            1
            for lam in partitions_of(n, max_len=h)
            for T in standard_tableaux(lam)
            if is_cylindric(T, h, w, SSYT)
        )
    if method == "factorial_formula":
        if h % 2 == 0 or w % 2 == 0:
            raise ValueError("the factorial-determinant formula is exposed for odd parameters only")
        return csyt_factorial_formula(n, h, w)
    raise ValueError(f"unknown method {method!r}")


def _csyt_chain_dp(n: int, h: int, w: int) -> int:
    @lru_cache(maxsize=None)
    def chains(steps: int, shape: tuple) -> int:
        if steps == 0:
            return 1
        total = 0
        for r in addable_rows(shape):
            if r > h:
                continue
            grown = list(shape)
            if r > len(grown):
                grown.append(1)
            else:
                grown[r - 1] += 1
            grown = tuple(grown)
            if in_family(grown, h, w):
                total += chains(steps - 1, grown)
        return total

    return chains(n, ())


def standard_tableaux(lam) -> Iterator[tuple]:
    """All standard Young tableaux of shape lam, by placing the largest entry at a corner."""
    lam = partition(lam)
    n = sum(lam)
    if n == 0:
        yield ()
        return
    for r in removable_rows(lam):
        smaller = list(lam)
        smaller[r - 1] -= 1
        for T in standard_tableaux(partition(smaller)):
            rows = [list(row) for row in T] + [[] for _ in range(len(lam) - len(T))]
            rows[r - 1].append(n)
            yield tuple(tuple(row) for row in rows)


def csyt_factorial_formula(n: int, h: int, w: int) -> int:
    """n! * sum over lam in Par(h, w) of size n and k in Z^h summing to 0 of
    det(1 / (lam_i - i + j + (h+w) k_i)!), with 1/a! = 0 for a < 0."""
    period = h + w
    total = Fraction(0)
    for lam in partitions_of(n, max_len=h):
        if not in_family(lam, h, w):
            continue
        lam_p = tuple(part(lam, i) for i in range(1, h + 1))
        ranges = []
        for i in range(h):
            ks = set()
            for j in range(1, h + 1):
                base = lam_p[i] - (i + 1) + j
                for k in range(-((base) // period), (n - base) // period + 1):
                    if 0 <= base + period * k <= n:
                        ks.add(k)
            ranges.append(sorted(ks))
        for ks in itertools.product(*ranges):
            if sum(ks) != 0:
                continue
            mat = [
                [_inv_fact(lam_p[i] - (i + 1) + j + period * ks[i]) for j in range(1, h + 1)]
                for i in range(h)
            ]
            total += determinant(mat, Fraction(1))
    result = total * factorial(n)
    if result.denominator != 1:
        raise ArithmeticError("factorial formula produced a non-integer")
    return int(result)


def _inv_fact(a: int) -> Fraction:
    return Fraction(1, factorial(a)) if a >= 0 else Fraction(0)


def to_json(T) -> str:
    return json.dumps([list(r) for r in T])
