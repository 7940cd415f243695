"""Integer partitions, the bounded families Par(h) and Par(h, w), and the cylindric transpose."""

from __future__ import annotations

import json
from typing import Iterator, Sequence

INF = float("inf")

Partition = tuple


def partition(parts: Sequence[int] = ()) -> tuple:
    """Canonical form: a tuple of positive parts, weakly decreasing (trailing zeros dropped)."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if 0 in parts:
        raise ValueError(f"zero part before a positive part: {parts}")
    return parts


def part(lam: Sequence[int], i: int) -> int:
    """lambda_i with 1-based i; zero past the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def padded(lam: Sequence[int], m: int) -> tuple:
    """The first m parts, zero-padded."""
    if len(lam) > m:
        raise ValueError(f"{tuple(lam)} has more than {m} parts")
    return tuple(lam) + (0,) * (m - len(lam))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def in_family(lam: Sequence[int], h: int, w=INF) -> bool:
    """Membership in Par(h, w): at most h parts and lambda_1 - lambda_h <= w."""
    if h < 1:
        raise ValueError("h must be positive")
    if len(lam) > h:
        return False
    return part(lam, 1) - part(lam, h) <= w


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[tuple]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(n - first, first, rest_len):
            yield (first,) + rest


def iter_family(h: int, w=INF, max_size: int = 0) -> Iterator[tuple]:
    """Every partition of Par(h, w) with size <= max_size, graded by size and
    in decreasing lexicographic order within a size."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    for n in range(max_size + 1):
        for lam in partitions_of(n, max_len=h):
            if in_family(lam, h, w):
                yield lam


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when mu is a subdiagram of lam."""
    return len(mu) <= len(lam) and all(part(lam, i) >= mu[i - 1] for i in range(1, len(mu) + 1))


def is_vertical_strip(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff mu is contained in lam and lam/mu has at most one cell per row."""
    rows = max(len(lam), len(mu))
    return all(0 <= part(lam, i) - part(mu, i) <= 1 for i in range(1, rows + 1))


def add_cell(lam: Sequence[int], row: int) -> tuple | None:
    """Add a cell at the end of a 1-based row; None if the result is not a partition."""
    lam = list(lam)
    if row == len(lam) + 1:
        lam.append(1)
    elif 1 <= row <= len(lam) and (row == 1 or lam[row - 2] > lam[row - 1]):
        lam[row - 1] += 1
    else:
        return None
    return tuple(lam)


def remove_cell(lam: Sequence[int], row: int) -> tuple | None:
    """Remove the last cell of a 1-based row; None if the result is not a partition."""
    if not 1 <= row <= len(lam) or part(lam, row + 1) == lam[row - 1]:
        return None
    lam = list(lam)
    lam[row - 1] -= 1
    return partition(lam)


def addable_rows(lam: Sequence[int]) -> list:
    return [r for r in range(1, len(lam) + 2) if r == 1 or part(lam, r - 1) > part(lam, r)]


def removable_rows(lam: Sequence[int]) -> list:
    return [r for r in range(1, len(lam) + 1) if part(lam, r + 1) < lam[r - 1]]


def cylinder_column_length(lam: Sequence[int], h: int, w: int, column: int) -> int:
    """Number of rows b >= 1 whose cylinder row reaches `column`.

    Row b = i + k*h of the cylinder holds columns 1 - k*w .. lam_i - k*w.
    Row lengths are weakly decreasing in b inside Par(h, w), so the count is the
    length of an initial segment of rows.
    """
    count = 0
    # the window is generous: lam_i - k*w >= column >= 1 needs k <= |lam| / w
    for k in range(0, size(lam) + h + w + 1):
        for i in range(1, h + 1):
            if part(lam, i) - k * w >= column:
                count += 1
            else:
                return count
    return count


def cyl_transpose(lam: Sequence[int], h: int, w: int) -> tuple:
    """The (h, w)-transpose Tr(lam; h, w), a partition in Par(w, h)."""
    if not in_family(lam, h, w):
        raise ValueError(f"{tuple(lam)} is not in Par({h},{w})")
    return partition(cylinder_column_length(lam, h, w, a) for a in range(1, w + 1))


def to_json(lam: Sequence[int]) -> str:
    return json.dumps(list(lam))


def from_json(text: str) -> tuple:
    return partition(json.loads(text))
