"""Exhaustive enumerators and generating polynomials.

Every search is a deterministic depth-first traversal, so streams are
reproducible. Counting paths reuse the same row transitions but memoize on
the previous row instead of materializing objects.
"""

from __future__ import annotations

import logging
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from typing import Iterator

from .algebra import ZERO, WeightPolynomial
from .objects import (
    Asm,
    AstTriangle,
    GogPentagon,
    GTPattern,
    MagogPentagon,
    column_profile,
    gog_is_forced,
    gog_row_length,
    magog_row_start,
    t_r,
    zero_margins,
    ColumnClass,
    Side,
)

log = logging.getLogger(__name__)

BRUTE_MAX_N = 6
BRUTE_HARD_MAX_N = 7


def check_brute_scope(n: int, what: str = "objects") -> None:
    if n > BRUTE_HARD_MAX_N:
        raise ValueError(f"brute-force enumeration of {what} is capped at n <= {BRUTE_HARD_MAX_N}")
    if n > BRUTE_MAX_N:
        warnings.warn(f"enumerating order-{n} {what}; this takes minutes", RuntimeWarning, stacklevel=3)


# ---------------------------------------------------------------------------
# Alternating sign triangles and matrices
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _row_options(seg: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All rows compatible with column partial sums ``seg`` (values 0/1).

    A row is admissible when column and row partial sums stay in {0, 1} and
    the row sums to 1. Returned in lexicographic order with the updated sums.
    """
    out = []
    width = len(seg)
    row = [0] * width

    def rec(c: int, s: int) -> None:
        if c == width:
            if s == 1:
                out.append((tuple(row), tuple(a + b for a, b in zip(seg, row))))
            return
        for x in (-1, 0, 1):
            if seg[c] + x not in (0, 1) or s + x not in (0, 1):
                continue
            row[c] = x
            rec(c + 1, s + x)
        row[c] = 0

    rec(0, 0)
    return tuple(out)


def _ast_rows(n: int, i: int, cols: tuple[int, ...], prefix: list) -> Iterator[tuple]:
    if i > n:
        yield tuple(prefix)
        return
    lo, hi = i - 1, 2 * n - i  # 0-based slice of absolute columns i..2n-i
    for row, new in _row_options(cols[lo:hi]):
        prefix.append(row)
        yield from _ast_rows(n, i + 1, cols[:lo] + new + cols[hi:], prefix)
        prefix.pop()


def _first_rows(n: int) -> list[tuple[int, ...]]:
    return [row for row, _ in _row_options((0,) * (2 * n - 1))]


def _ast_rows_from(n: int, first: tuple[int, ...]) -> Iterator[tuple]:
    yield from _ast_rows(n, 2, first, [first])


def enumerate_asts(n: int) -> Iterator[AstTriangle]:
    """Every AST of order ``n`` once, lexicographic by rows (top row first)."""
    if n < 1:
        raise ValueError("n must be positive")
    check_brute_scope(n, "ASTs")
    for first in _first_rows(n):
        for rows in _ast_rows_from(n, first):
            yield AstTriangle(n, rows)


def _ast_signature(t: AstTriangle) -> tuple[int, int, int]:
    prof = column_profile(t)
    r = 1
    labels = []
    for ci in prof.columns:
        if ci.side is Side.LEFT and ci.cls is ColumnClass.ONE_11:
            r += 1
        elif ci.side is Side.RIGHT and ci.cls is ColumnClass.ONE_10:
            r += 1
        if ci.side is not Side.CENTRAL and ci.cls is not ColumnClass.ALL_ZERO:
            labels.append(ci.label)
    return r, min(labels), max(labels)


def _census_branch(args) -> Counter:
    n, first = args
    return Counter(_ast_signature(AstTriangle(n, rows)) for rows in _ast_rows_from(n, first))


_CENSUS: dict[int, Counter] = {}


def ast_census(n: int, jobs: int = 1) -> Counter:
    """Multiset of ``(rho, l*, r*)`` over all order-``n`` ASTs (``n >= 2``).

    With ``jobs > 1`` the first-row branches run in a process pool; the
    merged counter is identical to the sequential one.
    """
    if n < 2:
        raise ValueError("windows need n >= 2")
    if n in _CENSUS:
        return _CENSUS[n]
    check_brute_scope(n, "ASTs")
    tasks = [(n, first) for first in _first_rows(n)]
    total = Counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_census_branch, tasks):
                total.update(part)
    else:
        for task in tasks:
            total.update(_census_branch(task))
    _CENSUS[n] = total
    return total


def asp_genpoly(n: int, l: int, r: int, jobs: int = 1) -> WeightPolynomial:
    """Sum of ``t**(rho-1)`` over ``(n, l, r)``-ASPs, by brute force."""
    if n < 2:
        raise ValueError("ASP windows need n >= 2")
    if not (0 <= l and r <= 2 * n - 3):
        raise ValueError(f"window [{l}, {r}] outside 0..{2 * n - 3}")
    if l > r:
        return ZERO
    coeffs = [0] * n
    for (p, lo, hi), c in ast_census(n, jobs).items():
        if l <= lo and hi <= r:
            coeffs[p - 1] += c
    return WeightPolynomial(coeffs)


def enumerate_asps(n: int, l: int, r: int) -> Iterator[AstTriangle]:
    for t in enumerate_asts(n):
        win = zero_margins(t)
        if win is not None and l <= win[0] and win[1] <= r:
            yield t


def _asm_rows(n: int, i: int, cols: tuple[int, ...], prefix: list) -> Iterator[tuple]:
    if i > n:
        yield tuple(prefix)
        return
    for row, new in _row_options(cols):
        prefix.append(row)
        yield from _asm_rows(n, i + 1, new, prefix)
        prefix.pop()


def enumerate_asms(n: int) -> Iterator[Asm]:
    """All ``n x n`` ASMs, lexicographic by rows.

    Rows are generated against the top-down column partial sums, which is the
    monotone-triangle (0/1 partial-sum matrix) state.
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_brute_scope(n, "ASMs")
    for rows in _asm_rows(n, 1, (0,) * n, []):
        yield Asm(n, rows)


def asm_count_tr_at_least(n: int, x: int) -> int:
    return sum(1 for a in enumerate_asms(n) if t_r(a) >= x)


# ---------------------------------------------------------------------------
# Magog pentagons
# ---------------------------------------------------------------------------


def _magog_row_choices(m: int, n: int, k: int, lam: int, p: int, prev: tuple[int, ...]):
    """Admissible values of ``a[p, 1..min(p,k)]`` given row ``p-1``.

    Each cell lies in ``[a[p-1,q], a[p-1,q-1]]`` (first cell bounded by
    ``m+p`` instead); cut cells are pinned to 1.
    """
    ranges = []
    for q in range(1, min(p, k) + 1):
        if p < magog_row_start(n, q, lam):
            ranges.append((1,))
            continue
        lo = prev[q - 1] if q <= len(prev) else 1
        hi = m + p if q == 1 else prev[q - 2]
        if lo > hi:
            return []
        ranges.append(range(lo, hi + 1))
    return product(*ranges)


def _magog_weight(n: int, k: int, second_last: tuple[int, ...], last: tuple[int, ...]) -> int:
    if n == 1:
        return 0
    return (n - 1) + sum(second_last[i] - last[i] for i in range(min(k, n - 1)))


def _check_magog_params(m: int, n: int, k: int, lam: int) -> None:
    if not (n >= 1 and 1 <= k <= n and lam >= 1 and m >= 0):
        raise ValueError(f"bad Magog parameters m={m} n={n} k={k} lambda={lam}")


def enumerate_magog(m: int, n: int, k: int, lam: int) -> Iterator[MagogPentagon]:
    """Stream all ``(m, n, k, lam)`` Magog pentagons."""
    _check_magog_params(m, n, k, lam)
    rows: list[tuple[int, ...]] = []

    def rec(p: int, prev: tuple[int, ...]):
        if p > n:
            disp = tuple(tuple(rows[pp - 1][q - 1] for pp in range(magog_row_start(n, q, lam), n + 1))
                         for q in range(1, k + 1))
            yield MagogPentagon(m, n, k, lam, disp)
            return
        for row in _magog_row_choices(m, n, k, lam, p, prev):
            rows.append(row)
            yield from rec(p + 1, row)
            rows.pop()

    yield from rec(1, ())


def magog_genpoly(m: int, n: int, k: int, lam: int) -> WeightPolynomial:
    """Sum of ``t**(tau-1)`` over ``(m, n, k, lam)`` Magog pentagons."""
    _check_magog_params(m, n, k, lam)

    @lru_cache(maxsize=None)
    def count(p: int, prev: tuple[int, ...]) -> WeightPolynomial:
        total = ZERO
        for row in _magog_row_choices(m, n, k, lam, p, prev):
            if p == n:
                w = _magog_weight(n, k, prev, row)
                if w < 0:
                    raise ValueError(f"tau - 1 = {w} < 0 occurs for m={m}; the generating polynomial "
                                     "needs non-negative exponents")
                total = total + WeightPolynomial.monomial(w)
            else:
                total = total + count(p + 1, row)
        return total

    if n == 1:
        return WeightPolynomial.monomial(0, sum(1 for _ in _magog_row_choices(m, 1, k, lam, 1, ())))
    return count(1, ())


def enumerate_gt(n: int) -> Iterator[GTPattern]:
    """All Gelfand-Tsetlin patterns of order ``n`` with ``a[k,1] <= k``."""
    _check_magog_params(0, n, n, 2 * n - 1)
    rows: list[tuple[int, ...]] = []

    def rec(p: int, prev: tuple[int, ...]):
        if p > n:
            yield GTPattern(n, tuple(rows))
            return
        for row in _magog_row_choices(0, n, n, 2 * n - 1, p, prev):
            rows.append(row)
            yield from rec(p + 1, row)
            rows.pop()

    yield from rec(1, ())


# ---------------------------------------------------------------------------
# Gog pentagons
# ---------------------------------------------------------------------------


def _gog_row_choices(m: int, n: int, k: int, l: int, i: int, prev: tuple[int, ...]):
    length = gog_row_length(n, k, i)
    ub = [0] * (length + 2)
    ub[length + 1] = 10 ** 9
    for j in range(length, 0, -1):
        u = ub[j + 1] - 1
        if j == k:
            u = min(u, m + k + i - 1)
        if i > 1 and j + 1 <= len(prev):
            u = min(u, prev[j])
        ub[j] = u
    row = [0] * length
    out = []

    def rec(j: int, left: int):
        if j > length:
            out.append(tuple(row))
            return
        lo = max(left + 1, prev[j - 1] if i > 1 else 1)
        if gog_is_forced(l, i, j):
            if lo <= j <= ub[j]:
                row[j - 1] = j
                rec(j + 1, j)
            return
        for v in range(lo, ub[j] + 1):
            row[j - 1] = v
            rec(j + 1, v)

    rec(1, 0)
    return out


def _check_gog_params(m: int, n: int, k: int, l: int) -> None:
    if not (n >= 1 and 1 <= k <= n and l >= 0 and m >= 0):
        raise ValueError(f"bad Gog parameters m={m} n={n} k={k} l={l}")


def enumerate_gog(m: int, n: int, k: int, l: int) -> Iterator[GogPentagon]:
    _check_gog_params(m, n, k, l)
    rows: list[tuple[int, ...]] = []

    def rec(i: int, prev: tuple[int, ...]):
        if i > n:
            free = tuple(tuple(v for j, v in enumerate(row, start=1) if not gog_is_forced(l, ii, j))
                         for ii, row in enumerate(rows, start=1))
            yield GogPentagon(m, n, k, l, free)
            return
        for row in _gog_row_choices(m, n, k, l, i, prev):
            rows.append(row)
            yield from rec(i + 1, row)
            rows.pop()

    yield from rec(1, ())


def gog_count(m: int, n: int, k: int, l: int) -> int:
    """Number of ``(m, n, k, l)`` Gog pentagons (``l = 0``: trapezoids)."""
    _check_gog_params(m, n, k, l)

    @lru_cache(maxsize=None)
    def count(i: int, prev: tuple[int, ...]) -> int:
        rows = _gog_row_choices(m, n, k, l, i, prev)
        if i == n:
            return len(rows)
        return sum(count(i + 1, row) for row in rows)

    return count(1, ())


def ast_count_formula(n: int) -> int:
    """``prod_{i<n} (3i+1)! / (n+i)!``, evaluated exactly."""
    from math import factorial

    num = 1
    den = 1
    for i in range(n):
        num *= factorial(3 * i + 1)
        den *= factorial(n + i)
    assert num % den == 0
    return num // den
