"""Fomin growth diagrams with the standard RSK local rules, and the matching /
tableau / vacillating-tableau bijections built from them.

Coordinates: corner (x, y) with x to the right and y upward; cell (a, b) is the
unit square with north-east corner (a, b). Forward passes start from empty
labels on the south and west boundary."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .partitions import add_cell, conjugate, part, partition, remove_cell, size


def _diff_row(big: tuple, small: tuple) -> int:
    """Row (1-based) of the single cell big / small."""
    for i in range(1, len(big) + 1):
        if part(big, i) != part(small, i):
            return i
    raise ValueError(f"{big} does not exceed {small} by one cell")


def _differ_by_at_most_one(a: tuple, b: tuple) -> bool:
    rows = max(len(a), len(b))
    diffs = [part(a, i) - part(b, i) for i in range(1, rows + 1)]
    return sum(abs(d) for d in diffs) <= 1


def forward_rule(rho: tuple, mu: tuple, nu: tuple, cross: bool) -> tuple:
    """North-east label from south-west rho, north-west mu, south-east nu and the cell's cross."""
    if cross:
        if not (rho == mu == nu):
            raise ValueError("a cross needs equal labels on its three lower corners")
        return add_cell(rho, 1)
    if mu != nu:
        if mu == rho:
            return nu
        if nu == rho:
            return mu
        rows = max(len(mu), len(nu))
        return partition(max(part(mu, i), part(nu, i)) for i in range(1, rows + 1))
    if mu == rho:
        return rho
    k = _diff_row(mu, rho)
    out = add_cell(mu, k + 1)
    if out is None:
        raise ValueError("inconsistent labels")
    return out


def backward_rule(lam: tuple, mu: tuple, nu: tuple) -> tuple:
    """(south-west label, cross) from north-east lam, north-west mu, south-east nu."""
    if mu != nu:
        if mu == lam:
            return nu, False
        if nu == lam:
            return mu, False
        rows = max(len(mu), len(nu))
        return partition(min(part(mu, i), part(nu, i)) for i in range(1, rows + 1)), False
    if mu == lam:
        return lam, False
    k = _diff_row(lam, mu)
    if k == 1:
        return mu, True
    out = remove_cell(mu, k - 1)
    if out is None:
        raise ValueError("inconsistent labels")
    return out, False


@dataclass
class GrowthDiagram:
    cells: frozenset
    crosses: frozenset
    labels: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "crosses": sorted([list(c) for c in self.crosses]),
                "labels": {f"{x},{y}": list(lam) for (x, y), lam in sorted(self.labels.items())},
            },
            sort_keys=True,
        )


def square_cells(width: int, height: int | None = None) -> frozenset:
    height = width if height is None else height
    return frozenset((a, b) for a in range(1, width + 1) for b in range(1, height + 1))


def staircase_cells(n: int, with_diagonal: bool = True) -> frozenset:
    """Cells with a + b <= n + 1, or a + b <= n without the diagonal cells."""
    top = n + 1 if with_diagonal else n
    return frozenset((a, b) for a in range(1, n + 1) for b in range(1, top + 1 - a))


def _odd_corner(k: int, n: int, with_diagonal: bool) -> tuple:
    """Corner between staircase labels 2k and 2k + 2: outer when the diagonal cells are present."""
    return (k + 1, n - k) if with_diagonal else (k, n - k - 1)


def _check_down_set(cells: frozenset):
    for a, b in cells:
        if (a > 1 and (a - 1, b) not in cells) or (b > 1 and (a, b - 1) not in cells):
            raise ValueError("region must be closed toward the south-west")


def growth_forward(cells: Iterable, crosses: Iterable) -> GrowthDiagram:
    cells = frozenset(cells)
    crosses = frozenset(crosses)
    _check_down_set(cells)
    if not crosses <= cells:
        raise ValueError("cross outside the region")
    rows = {}
    cols = {}
    for a, b in crosses:
        if a in cols or b in rows:
            raise ValueError("at most one cross per row and column")
        cols[a] = rows[b] = True
    labels: dict = {}
    for a, b in cells:
        for corner in ((a - 1, b - 1), (a - 1, b), (a, b - 1)):
            if corner[0] == 0 or corner[1] == 0:
                labels[corner] = ()
    for a, b in sorted(cells, key=lambda c: (c[0] + c[1], c[0])):
        labels[(a, b)] = forward_rule(labels[(a - 1, b - 1)], labels[(a - 1, b)], labels[(a, b - 1)], (a, b) in crosses)
    return GrowthDiagram(cells, crosses, labels)


def growth_backward(cells: Iterable, boundary: dict, forced: Iterable = ()) -> GrowthDiagram:
    """Recover crosses and inner labels from the labels on the north-east boundary.

    `forced` cells carry a cross whose three outer corners are kept as given:
    there the south-west label is set equal to the north-west one."""
    cells = frozenset(cells)
    forced = frozenset(forced)
    _check_down_set(cells)
    labels = dict(boundary)
    for corner, lam in labels.items():
        labels[corner] = partition(lam)
    crosses = set()
    for a, b in sorted(cells, key=lambda c: (c[0] + c[1], c[0]), reverse=True):
        try:
            lam, mu, nu = labels[(a, b)], labels[(a - 1, b)], labels[(a, b - 1)]
        except KeyError as exc:
            raise ValueError(f"missing boundary label near cell {(a, b)}") from exc
        for upper, lower in ((lam, mu), (lam, nu)):
            if not (_differ_by_at_most_one(upper, lower) and size(upper) >= size(lower)):
                raise ValueError(f"labels around cell {(a, b)} do not grow by at most one cell")
        if (a, b) in forced:
            if mu != nu:
                raise ValueError(f"forced cross at {(a, b)} needs equal west and south labels")
            rho, cross = mu, True
        else:
            rho, cross = backward_rule(lam, mu, nu)
        corner = (a - 1, b - 1)
        if corner in labels and labels[corner] != rho:
            raise ValueError(f"inconsistent label at {corner}")
        labels[corner] = rho
        if cross:
            crosses.add((a, b))
    for (x, y), lam in labels.items():
        if (x == 0 or y == 0) and lam:
            raise ValueError("south-west boundary does not come out empty")
    return GrowthDiagram(cells, frozenset(crosses), labels)


def longest_chains(crosses: Iterable, x: int, y: int) -> tuple:
    """(longest NE-chain, longest SE-chain) of crosses in cells south-west of corner (x, y)."""
    pts = sorted((a, b) for a, b in crosses if a <= x and b <= y)
    ne = [1] * len(pts)
    se = [1] * len(pts)
    for i, (a, b) in enumerate(pts):
        for j in range(i):
            c, d = pts[j]
            if c < a and d < b:
                ne[i] = max(ne[i], ne[j] + 1)
            if c < a and d > b:
                se[i] = max(se[i], se[j] + 1)
    return max(ne, default=0), max(se, default=0)


@dataclass(frozen=True)
class NEChainStats:
    ne_chain: int
    se_chain: int


def greene_chains(crosses: Iterable, corner: tuple) -> NEChainStats:
    return NEChainStats(*longest_chains(crosses, *corner))


# matchings in the square and in the staircase


def _matching_type():
    from .walks_matchings import Matching

    return Matching


def _square_crosses(M) -> set:
    """The involution of M, with both coordinates reversed (i -> n + 1 - i)."""
    n = M.n
    crosses = set()
    for i, j in M.arcs:
        crosses.add((n + 1 - i, n + 1 - j))
        crosses.add((n + 1 - j, n + 1 - i))
    for v in M.fixed_points():
        crosses.add((n + 1 - v, n + 1 - v))
    return crosses


def matching_to_syt(M) -> tuple:
    """Standard Young tableau whose chain of shapes is read off the top edge of the square."""
    n = M.n
    if n == 0:
        return ()
    g = growth_forward(square_cells(n), _square_crosses(M))
    chain = [g.labels[(x, n)] for x in range(n + 1)]
    if chain != [g.labels[(n, y)] for y in range(n + 1)]:
        raise AssertionError("square growth of an involution is not symmetric")
    return chain_to_syt(chain)


def chain_to_syt(chain: Sequence[tuple]) -> tuple:
    rows: list = []
    for t in range(1, len(chain)):
        r = _diff_row(chain[t], chain[t - 1])
        while len(rows) < r:
            rows.append([])
        rows[r - 1].append(t)
    return tuple(tuple(r) for r in rows)


def syt_chain(T: Sequence[Sequence[int]]) -> list:
    n = sum(len(r) for r in T)
    where = {}
    for i, row in enumerate(T, start=1):
        for v in row:
            where[v] = i
    if sorted(where) != list(range(1, n + 1)):
        raise ValueError("not a standard filling of 1..n")
    chain = [()]
    for t in range(1, n + 1):
        nxt = add_cell(chain[-1], where[t])
        if nxt is None:
            raise ValueError("not a standard Young tableau")
        chain.append(nxt)
    return chain


def syt_to_matching(T: Sequence[Sequence[int]]):
    """Backward growth from the tableau's chain placed on the top and right edges."""
    Matching = _matching_type()
    chain = syt_chain(T)
    n = len(chain) - 1
    if n == 0:
        return Matching(0, frozenset())
    boundary = {}
    for t in range(n + 1):
        boundary[(t, n)] = chain[t]
        boundary[(n, t)] = chain[t]
    g = growth_backward(square_cells(n), boundary)
    arcs = set()
    for a, b in g.crosses:
        i, j = n + 1 - a, n + 1 - b
        if i < j:
            arcs.add((i, j))
    M = Matching(n, frozenset(arcs))
    if _square_crosses(M) != set(g.crosses):
        raise AssertionError("backward growth did not return a symmetric configuration")
    return M


def syt_matching(obj, parity: str | None = None, h: int | None = None):
    """SYT -> matching, or matching -> SYT. With h given, check the row /
    nesting bounds of the odd (2h+1 rows, no (h+1)-nesting) or even
    (2h rows, no (h+1/2)-nesting) case."""
    Matching = _matching_type()
    if isinstance(obj, Matching):
        if h is not None:
            limit = 2 * h + 2 if parity == "odd" else 2 * h + 1
            if obj.profile().nest2 >= limit:
                raise ValueError("matching outside the nesting bound")
        return matching_to_syt(obj)
    if h is not None:
        rows = 2 * h + 1 if parity == "odd" else 2 * h
        if len(obj) > rows:
            raise ValueError("tableau has too many rows")
    return syt_to_matching(obj)


def _staircase_crosses(M, keep_fixed: bool) -> set:
    n = M.n
    crosses = {(i, n + 1 - j) for i, j in M.arcs}
    if keep_fixed:
        crosses |= {(v, n + 1 - v) for v in M.fixed_points()}
    return crosses


def staircase_labels(M, keep_fixed: bool) -> list:
    """The 2n + 1 labels along the staircase after a forward pass on the triangle."""
    n = M.n
    g = growth_forward(staircase_cells(n, keep_fixed), _staircase_crosses(M, keep_fixed))
    out = []
    for k in range(n + 1):
        out.append(g.labels.get((k, n - k), ()))
        if k < n:
            out.append(g.labels.get(_odd_corner(k, n, keep_fixed), ()))
    return out


def _staircase_boundary(labels: Sequence[tuple], n: int, with_diagonal: bool) -> dict:
    boundary = {}
    for k in range(n + 1):
        boundary[(k, n - k)] = labels[2 * k]
        if k < n:
            boundary[_odd_corner(k, n, with_diagonal)] = labels[2 * k + 1]
    return boundary


def staircase_to_matching(labels: Sequence[tuple], n: int, with_diagonal: bool, forced_fixed: Iterable = ()):
    """Backward pass on the triangle from its staircase labels."""
    Matching = _matching_type()
    forced = {(v, n + 1 - v) for v in forced_fixed}
    g = growth_backward(staircase_cells(n, with_diagonal), _staircase_boundary(labels, n, with_diagonal), forced)
    arcs = set()
    fixed_cross = set()
    for a, b in g.crosses:
        i, j = a, n + 1 - b
        if i == j:
            fixed_cross.add(i)
        else:
            arcs.add((i, j))
    return Matching(n, frozenset(arcs)), fixed_cross


def even_labels(M, keep_fixed: bool) -> list:
    return staircase_labels(M, keep_fixed)[::2]


def fill_odd_labels(evens: Sequence[tuple], with_diagonal: bool) -> list:
    """Rebuild the full staircase from its even-indexed labels.

    Without diagonal cells the odd label is the smaller neighbour (the common
    value when they agree). With them it is the larger neighbour, and agreement
    marks a fixed point whose diagonal cross adds a cell in the first row."""
    out = [evens[0]]
    for k in range(1, len(evens)):
        a, b = evens[k - 1], evens[k]
        if a == b:
            out.append(add_cell(a, 1) if with_diagonal else a)
        elif (size(a) < size(b)) != with_diagonal:
            out.append(a)
        else:
            out.append(b)
        out.append(b)
    return out


def matching_vt(M, parity: str) -> tuple:
    """Matching without an (h+1)-nesting (odd) or (h+1/2)-nesting (even) ->
    vacillating tableau with at most h rows, by the staircase pass and conjugation."""
    if parity not in ("odd", "even"):
        raise ValueError("parity is 'odd' or 'even'")
    evens = even_labels(M, keep_fixed=parity == "even")
    return tuple(conjugate(lam) for lam in evens)


def vt_matching(T: Sequence[Sequence[int]], parity: str):
    """Inverse of matching_vt."""
    if parity not in ("odd", "even"):
        raise ValueError("parity is 'odd' or 'even'")
    n = len(T) - 1
    evens = [conjugate(partition(lam)) for lam in T]
    even = parity == "even"
    full = fill_odd_labels(evens, with_diagonal=even)
    M, fixed_cross = staircase_to_matching(full, n, even)
    if even and set(fixed_cross) != set(M.fixed_points()):
        raise ValueError("zero steps and diagonal crosses disagree")
    if parity == "odd" and fixed_cross:
        raise ValueError("odd-mode tableau produced a diagonal cross")
    return M


def ncnn_symmetry(M):
    """Forward pass on the triangle with fixed points kept, conjugate the
    staircase, backward pass keeping the fixed-point crosses."""
    n = M.n
    if n == 0:
        return M
    labels = [conjugate(lam) for lam in staircase_labels(M, keep_fixed=True)]
    out, fixed_cross = staircase_to_matching(labels, n, True, M.fixed_points())
    if fixed_cross != set(M.fixed_points()):
        raise AssertionError("fixed points were not preserved")
    return out
