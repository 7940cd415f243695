"""Exact polynomials in the elementary symmetric generators e_1..e_n, with a
division-free determinant and Pfaffian toolkit.

An EPoly maps exponent vectors (m_1, ..., m_n), meaning e_1^m_1 ... e_n^m_n,
to Python integers. The grading is deg e_k = k; an optional degree cap drops
every term above it, eagerly, during arithmetic.
"""

from __future__ import annotations

import itertools
import json
from math import factorial
from typing import Callable, Sequence


def key_degree(key: Sequence[int]) -> int:
    return sum((k + 1) * m for k, m in enumerate(key))


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class EPoly:
    __slots__ = ("n", "terms", "cap")

    def __init__(self, n: int, terms: dict | None = None, cap: int | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.cap = cap
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != n:
                raise ValueError(f"exponent vector {key} does not have length {n}")
            if c and (cap is None or key_degree(key) <= cap):
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    # construction helpers

    @classmethod
    def const(cls, n: int, c: int, cap: int | None = None) -> "EPoly":
        return cls(n, {(0,) * n: c} if c else {}, cap)

    @classmethod
    def gen(cls, k: int, n: int, cap: int | None = None) -> "EPoly":
        """The generator e_k, with e_0 = 1 and e_k = 0 outside 0..n."""
        if k == 0:
            return cls.const(n, 1, cap)
        if k < 0 or k > n:
            return cls(n, {}, cap)
        key = [0] * n
        key[k - 1] = 1
        return cls(n, {tuple(key): 1}, cap)

    def with_cap(self, cap: int | None) -> "EPoly":
        return EPoly(self.n, self.terms, _min_cap(self.cap, cap))

    def _coerce(self, other) -> "EPoly":
        if isinstance(other, EPoly):
            if other.n != self.n:
                raise ValueError(f"mismatched variable counts {self.n} and {other.n}")
            return other
        if isinstance(other, int):
            return EPoly.const(self.n, other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return EPoly(self.n, terms, _min_cap(self.cap, other.cap))

    __radd__ = __add__

    def __neg__(self):
        return EPoly(self.n, {k: -c for k, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cap = _min_cap(self.cap, other.cap)
        out: dict = {}
        for k1, c1 in self.terms.items():
            d1 = key_degree(k1)
            for k2, c2 in other.terms.items():
                if cap is not None and d1 + key_degree(k2) > cap:
                    continue
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return EPoly(self.n, out, cap)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = EPoly.const(self.n, 1, self.cap)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = EPoly.const(self.n, other)
        if not isinstance(other, EPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key in self.sorted_keys():
            mono = "*".join(
                f"e{k + 1}" + (f"^{m}" if m > 1 else "") for k, m in enumerate(key) if m
            )
            c = self.terms[key]
            pieces.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(pieces)

    # inspection

    def sorted_keys(self) -> list:
        return sorted(self.terms, key=lambda k: (key_degree(k), k))

    def degree_part(self, d: int) -> "EPoly":
        return EPoly(self.n, {k: c for k, c in self.terms.items() if key_degree(k) == d}, self.cap)

    def degrees(self) -> set:
        return {key_degree(k) for k in self.terms}

    def truncate(self, cap: int) -> "EPoly":
        return self.with_cap(cap)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"e": list(k), "c": str(self.terms[k])} for k in self.sorted_keys()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "EPoly":
        return cls(data["n"], {tuple(t["e"]): int(t["c"]) for t in data["terms"]})


def first_difference(p: EPoly, q: EPoly):
    """First (key, p-coefficient, q-coefficient) in graded order where p and q differ."""
    keys = sorted(set(p.terms) | set(q.terms), key=lambda k: (key_degree(k), k))
    for k in keys:
        a, b = p.terms.get(k, 0), q.terms.get(k, 0)
        if a != b:
            return k, a, b
    return None


# generators


def e(k: int, n: int, cap: int | None = None) -> EPoly:
    return EPoly.gen(k, n, cap)


def f(r: int, n: int, cap: int | None = None) -> EPoly:
    """f_r = sum_i e_i e_{i+r}; zero unless |r| <= n."""
    total = EPoly(n, {}, cap)
    for i in range(0, n + 1):
        if 0 <= i + r <= n:
            total = total + e(i, n, cap) * e(i + r, n, cap)
    return total


def periodic_f(r: int, N: int, n: int, cap: int | None = None, signed: bool = False) -> EPoly:
    """F_{r,N} = sum_k f_{r+Nk}, or the signed F-bar with (-1)^k; only |r+Nk| <= n survive."""
    if N < 1:
        raise ValueError("period must be positive")
    total = EPoly(n, {}, cap)
    k_lo = -((n + r) // N) - 1
    k_hi = (n - r) // N + 1
    for k in range(k_lo, k_hi + 1):
        s = r + N * k
        if abs(s) <= n:
            term = f(s, n, cap)
            total = total - term if signed and k % 2 else total + term
    return total


def F(r: int, N: int, n: int, cap: int | None = None) -> EPoly:
    return periodic_f(r, N, n, cap)


def Fbar(r: int, N: int, n: int, cap: int | None = None) -> EPoly:
    return periodic_f(r, N, n, cap, signed=True)


def e_sum(n: int, cap: int | None = None) -> EPoly:
    """sum_{i >= 0} e_i."""
    total = EPoly(n, {}, cap)
    for i in range(n + 1):
        total = total + e(i, n, cap)
    return total


def e_alt(n: int, cap: int | None = None) -> EPoly:
    """sum_{i >= 0} (-1)^i e_i."""
    total = EPoly(n, {}, cap)
    for i in range(n + 1):
        total = total + e(i, n, cap) * (-1) ** i
    return total


GENERATORS = {
    "e": lambda params, n, cap: e(params[0], n, cap),
    "f": lambda params, n, cap: f(params[0], n, cap),
    "F": lambda params, n, cap: F(params[0], params[1], n, cap),
    "Fbar": lambda params, n, cap: Fbar(params[0], params[1], n, cap),
    "e_sum": lambda params, n, cap: e_sum(n, cap),
    "e_alt": lambda params, n, cap: e_alt(n, cap),
}


def generator(kind: str, params: Sequence[int], n: int, cap: int | None = None) -> EPoly:
    if kind not in GENERATORS:
        raise ValueError(f"unknown generator {kind!r}")
    return GENERATORS[kind](tuple(params), n, cap)


# determinants and Pfaffians, generic over any commutative ring whose
# elements support +, -, * and mix with Python ints


def _is_zero(x) -> bool:
    return not x


def determinant(matrix: Sequence[Sequence], one=1):
    """Division-free determinant by Laplace expansion along rows, memoized on
    the set of columns still available. The empty matrix has determinant `one`."""
    size_ = len(matrix)
    if any(len(row) != size_ for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if size_ == 0:
        return one
    memo: dict = {}

    def minor(row: int, cols: int):
        if row == size_:
            return one
        if cols in memo:
            return memo[cols]
        total = None
        sign = 1
        for c in range(size_):
            if cols >> c & 1:
                entry = matrix[row][c]
                if not _is_zero(entry):
                    sub = minor(row + 1, cols & ~(1 << c))
                    if not _is_zero(sub):
                        term = entry * sub
                        term = term if sign > 0 else -term
                        total = term if total is None else total + term
                sign = -sign
        result = 0 * one if total is None else total
        memo[cols] = result
        return result

    return minor(0, (1 << size_) - 1)


def is_skew(matrix: Sequence[Sequence]) -> bool:
    size_ = len(matrix)
    for i in range(size_):
        if len(matrix[i]) != size_ or not _is_zero(matrix[i][i]):
            return False
        for j in range(i + 1, size_):
            if matrix[i][j] != -matrix[j][i]:
                return False
    return True


def pfaffian(matrix: Sequence[Sequence], one=1, check: bool = True):
    """Division-free Pfaffian by expansion along the first remaining index,
    memoized on the remaining index set. Only the upper triangle is read."""
    size_ = len(matrix)
    if any(len(row) != size_ for row in matrix):
        raise ValueError("pfaffian needs a square matrix")
    if size_ % 2:
        raise ValueError("pfaffian needs an even-sized matrix")
    if check and not is_skew(matrix):
        raise ValueError("pfaffian needs a skew-symmetric matrix")
    return pfaffian_upper(lambda i, j: matrix[i][j], size_, one)


def pfaffian_upper(entry: Callable[[int, int], object], size_: int, one=1):
    """Pfaffian of the upper-triangular array entry(i, j), i < j, over 0..size-1."""
    if size_ % 2:
        raise ValueError("pfaffian needs an even size")
    memo: dict = {}

    def pf(rest: int):
        if rest == 0:
            return one
        if rest in memo:
            return memo[rest]
        first = (rest & -rest).bit_length() - 1
        rest1 = rest & ~(1 << first)
        total = None
        sign = 1
        for j in range(first + 1, size_):
            if rest1 >> j & 1:
                a = entry(first, j)
                if not _is_zero(a):
                    sub = pf(rest1 & ~(1 << j))
                    if not _is_zero(sub):
                        term = a * sub
                        term = term if sign > 0 else -term
                        total = term if total is None else total + term
                sign = -sign
        result = 0 * one if total is None else total
        memo[rest] = result
        return result

    return pf((1 << size_) - 1)


def submatrix(matrix, rows: Sequence[int], cols: Sequence[int]):
    return [[matrix[r][c] for c in cols] for r in rows]


def mat_mul(a, b, zero=0):
    inner = len(b)
    out = []
    for row in a:
        new_row = []
        for j in range(len(b[0]) if b else 0):
            total = zero
            for k in range(inner):
                if not _is_zero(row[k]) and not _is_zero(b[k][j]):
                    total = total + row[k] * b[k][j]
            new_row.append(total)
        out.append(new_row)
    return out


def transpose(matrix):
    return [list(col) for col in zip(*matrix)] if matrix else []


# coefficient extraction


def squarefree_coeff(p: EPoly) -> int:
    """Coefficient of x_1 x_2 ... x_n in the monomial expansion of p.

    A product e_1^m_1 ... e_n^m_n of total degree n contributes the multinomial
    n! / prod (k!)^m_k: choose which variables go to each factor."""
    n = p.n
    total = 0
    for key, c in p.terms.items():
        if key_degree(key) != n:
            continue
        denom = 1
        for k, m in enumerate(key):
            denom *= factorial(k + 1) ** m
        total += c * (factorial(n) // denom)
    return total


class XPoly(dict):
    """Laurent polynomial in x_1..x_n: exponent tuple -> integer coefficient."""

    def __init__(self, n: int, terms: dict | None = None):
        super().__init__()
        self.n = n
        for k, c in (terms or {}).items():
            if c:
                self[tuple(k)] = self.get(tuple(k), 0) + c
        for k in [k for k, c in self.items() if not c]:
            del self[k]

    def __add__(self, other: "XPoly") -> "XPoly":
        out = dict(self)
        for k, c in other.items():
            out[k] = out.get(k, 0) + c
        return XPoly(self.n, out)

    def __neg__(self):
        return XPoly(self.n, {k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other: "XPoly", cap: int | None = None) -> "XPoly":
        out: dict = {}
        for k1, c1 in self.items():
            for k2, c2 in other.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                if cap is not None and sum(key) > cap:
                    continue
                out[key] = out.get(key, 0) + c1 * c2
        return XPoly(self.n, out)

    def __mul__(self, other):
        return self.mul(other)

    def truncate(self, cap: int) -> "XPoly":
        return XPoly(self.n, {k: c for k, c in self.items() if sum(k) <= cap})

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.get(tuple(exponents), 0)

    @classmethod
    def one(cls, n: int) -> "XPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "XPoly":
        return cls(len(exponents), {tuple(exponents): coeff})


def elementary_x(k: int, n: int) -> XPoly:
    terms = {}
    for subset in itertools.combinations(range(n), k):
        key = [0] * n
        for i in subset:
            key[i] = 1
        terms[tuple(key)] = 1
    return XPoly(n, terms)


def monomial_expand(p: EPoly, cap: int | None = None) -> XPoly:
    """Expand every e-term into monomials in x_1..x_n, dropping total degree above cap."""
    n = p.n
    gens = [elementary_x(k, n) for k in range(1, n + 1)]
    power_cache: dict = {}

    def power(k: int, m: int) -> XPoly:
        if (k, m) not in power_cache:
            result = XPoly.one(n)
            for _ in range(m):
                result = result.mul(gens[k], cap)
            power_cache[(k, m)] = result
        return power_cache[(k, m)]

    total = XPoly(n)
    for key, c in p.terms.items():
        if cap is not None and key_degree(key) > cap:
            continue
        term = XPoly(n, {(0,) * n: c})
        for k, m in enumerate(key):
            if m:
                term = term.mul(power(k, m), cap)
        total = total + term
    return total


# Pfaffian-to-determinant reductions of Gordon type


def gordon_sides(z: Callable[[int], object], h: int, variant: str = "base", one=1):
    """Both sides of Pf_{2h}(z_{j-i}) = det_h(...) for an antisymmetric oracle z.

    base: entries z_{|j-i|+1} + z_{|j-i|+3} + ... + z_{i+j-1}
    var1: sum_{s=0}^{2min(i,j)-2} (-1)^s (z_{i+j-1-s} - z_{i+j-2-s})
    var2: sum_{s=0}^{2min(i,j)-2} (z_{i+j-1-s} + z_{i+j-2-s})
    var3: boundary-corrected differences z_{i+j-1} - z_{i+j-3} + z_{|j-i|+1} - z_{|j-i|-1}
    """
    pf_side = pfaffian_upper(lambda i, j: z(j - i), 2 * h, one)

    def entry(i: int, j: int):
        total = 0 * one
        if variant == "base":
            for t in range(abs(j - i) + 1, i + j, 2):
                total = total + z(t)
        elif variant == "var1":
            for s in range(0, 2 * min(i, j) - 1):
                term = z(i + j - 1 - s) - z(i + j - 2 - s)
                total = total + term if s % 2 == 0 else total - term
        elif variant == "var2":
            for s in range(0, 2 * min(i, j) - 1):
                total = total + z(i + j - 1 - s) + z(i + j - 2 - s)
        elif variant == "var3":
            if i == 1 and j == 1:
                total = z(1)
            elif j == 1:
                total = z(i) - z(i - 2)
            elif i == 1:
                total = z(j) - z(j - 2)
            else:
                d = abs(j - i)
                total = z(i + j - 1) - z(i + j - 3) + z(d + 1) - z(d - 1)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        return total

    det_side = determinant([[entry(i, j) for j in range(1, h + 1)] for i in range(1, h + 1)], one)
    return pf_side, det_side


def verify_gordon(z: Callable[[int], object], h: int, variant: str = "base", one=1) -> bool:
    pf_side, det_side = gordon_sides(z, h, variant, one)
    return pf_side == det_side


# minor summation


def minor_summation_sides(M, A, parity: str, one=1):
    """Both sides of the Ishikawa-Wakayama minor summation formula.

    even: M is m x p with m even, A is p x p skew;
          sum_K Pf(A_K^K) det(M_K) = Pf(M A M^t).
    odd:  M is m x p with m odd, A is (p+1) x (p+1) skew with index 0 as a border;
          sum_K Pf(A_{0 u K}) det(M_K) = Pf of the (m+1) x (m+1) matrix with
          entries (0, j) = sum_r a_{0 r} M_{j r} and (i, j) = sum_{r,s} a_{rs} M_{ir} M_{js}.
    """
    m = len(M)
    p = len(M[0]) if m else 0
    zero = 0 * one
    if parity == "even":
        if m % 2 or len(A) != p:
            raise ValueError("even minor summation needs m even and A of size p")
        lhs = zero
        for K in itertools.combinations(range(p), m):
            pf = pfaffian_upper(lambda i, j: A[K[i]][K[j]], m, one)
            if _is_zero(pf):
                continue
            lhs = lhs + pf * determinant(submatrix(M, range(m), K), one)
        compressed = mat_mul(mat_mul(M, A, zero), transpose(M), zero)
        rhs = pfaffian_upper(lambda i, j: compressed[i][j], m, one)
        return lhs, rhs
    if parity == "odd":
        if m % 2 == 0 or len(A) != p + 1:
            raise ValueError("odd minor summation needs m odd and A of size p + 1")
        lhs = zero
        for K in itertools.combinations(range(p), m):
            idx = (0,) + tuple(k + 1 for k in K)
            pf = pfaffian_upper(lambda i, j: A[idx[i]][idx[j]], m + 1, one)
            if _is_zero(pf):
                continue
            lhs = lhs + pf * determinant(submatrix(M, range(m), K), one)

        def entry(i: int, j: int):
            total = zero
            if i == 0:
                for r in range(p):
                    total = total + A[0][r + 1] * M[j - 1][r]
                return total
            for r in range(p):
                for s in range(p):
                    a = A[r + 1][s + 1]
                    if not _is_zero(a):
                        total = total + a * M[i - 1][r] * M[j - 1][s]
            return total

        rhs = pfaffian_upper(entry, m + 1, one)
        return lhs, rhs
    raise ValueError(f"unknown parity {parity!r}")


def verify_minor_summation(M, A, parity: str, one=1) -> bool:
    lhs, rhs = minor_summation_sides(M, A, parity, one)
    return lhs == rhs


def all_ones_skew(size_: int, one=1):
    """Skew matrix with every entry above the diagonal equal to one."""
    zero = 0 * one
    return [[one if i < j else (-one if i > j else zero) for j in range(size_)] for i in range(size_)]
