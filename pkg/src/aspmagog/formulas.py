"""Closed-form generating polynomials for alternating sign pentagons.

``detsum_genpoly`` sums lattice-path determinants over endpoint subsets,
``pfaffian_genpoly`` packs the same families into one Pfaffian, and
``ct_oracle`` expands the raw constant-term expression for small ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import ZERO, SkewMatrix, WeightPolynomial, binom, det, pfaffian


class ParamRangeError(ValueError):
    pass


def in_detsum_range(n: int, l: int, r: int) -> bool:
    return n >= 2 and 0 <= l <= n - 2 < r <= 2 * n - 3


def in_magog_range(n: int, l: int, r: int) -> bool:
    """Parameters where pentagons, path families and ASPs all correspond."""
    return in_detsum_range(n, l, r) and l + r < 2 * n - 2 and r - l > n - 3


def magog_grid(n: int) -> list[tuple[int, int]]:
    return [(l, r) for r in range(n - 1, 2 * n - 2) for l in range(0, n - 1) if in_magog_range(n, l, r)]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamRangeError(msg)


@dataclass(frozen=True)
class EntryParams:
    n: int
    l: int
    r: int
    e: int
    j: int

    def __post_init__(self):
        _require(1 <= self.e <= self.r + 1, f"endpoint index e={self.e} outside [1, {self.r + 1}]")
        _require(1 <= self.j <= self.n - 1, f"start index j={self.j} outside [1, {self.n - 1}]")


@lru_cache(maxsize=None)
def _entry(n: int, l: int, r: int, e: int, j: int) -> WeightPolynomial:
    a = j - 1
    north = binom(a, e - j) - binom(a, r - e - l + 2 * n - 1 - j)
    east = binom(a, e - 1 - j) - binom(a, r - e - l + 2 * n - j)
    return WeightPolynomial((east, north))


def entry(params: EntryParams) -> WeightPolynomial:
    """Weighted count of paths from start ``j`` to endpoint ``e`` above the line.

    ``t`` marks paths whose last step is north; each part is a difference of
    two binomials (a path count minus its reflected count).
    """
    p = params
    return _entry(p.n, p.l, p.r, p.e, p.j)


def entry_poly(n: int, l: int, r: int, e: int, j: int) -> WeightPolynomial:
    return entry(EntryParams(n, l, r, e, j))


def _entry_rows(n: int, l: int, r: int) -> list[list[WeightPolynomial]]:
    return [[_entry(n, l, r, e, j) for j in range(1, n)] for e in range(1, r + 2)]


def detsum_genpoly(n: int, l: int, r: int) -> WeightPolynomial:
    """Sum over ``e_1 < ... < e_{n-1}`` in ``[1, r+1]`` of ``det(entry(e_i, j))``.

    The coefficient of ``t**(p-1)`` counts ``(n, l, r)``-ASPs with ``rho = p``.
    """
    _require(in_detsum_range(n, l, r), f"need 0 <= l <= n-2 < r <= 2n-3, got n={n} l={l} r={r}")
    rows = _entry_rows(n, l, r)
    total = ZERO
    for es in combinations(range(r + 1), n - 1):
        total = total + det([rows[e] for e in es])
    return total


def pair_gf(n: int, l: int, r: int, i: int, j: int) -> WeightPolynomial:
    """Non-intersecting pairs from starts ``i < j`` to endpoints ``e_1 < e_2``."""
    _require(in_detsum_range(n, l, r), f"parameters out of range: n={n} l={l} r={r}")
    _require(1 <= i < j <= n - 1, f"need 1 <= i < j <= {n - 1}, got i={i} j={j}")
    total = ZERO
    for e1, e2 in combinations(range(1, r + 2), 2):
        total = total + (_entry(n, l, r, e1, i) * _entry(n, l, r, e2, j)
                         - _entry(n, l, r, e2, i) * _entry(n, l, r, e1, j))
    return total


def single_gf(n: int, l: int, r: int, j: int) -> WeightPolynomial:
    _require(in_detsum_range(n, l, r), f"parameters out of range: n={n} l={l} r={r}")
    _require(1 <= j <= n - 1, f"need 1 <= j <= {n - 1}, got j={j}")
    total = ZERO
    for e in range(1, r + 2):
        total = total + _entry(n, l, r, e, j)
    return total


def pfaffian_matrix(n: int, l: int, r: int) -> SkewMatrix:
    """Pair generating functions for starts ``1..n-1``; for even ``n`` a
    phantom last row/column holds the single-path generating functions."""
    size = n - 1 if n % 2 else n
    b = SkewMatrix(size)
    for i in range(1, n):
        for j in range(i + 1, n):
            b[i - 1, j - 1] = pair_gf(n, l, r, i, j)
    if n % 2 == 0:
        for j in range(1, n):
            b[j - 1, n - 1] = single_gf(n, l, r, j)
    return b


def pfaffian_genpoly(n: int, l: int, r: int) -> WeightPolynomial:
    """``t * Pf(B)``: the sum of ``t**tau`` over ``(0, n, r+2-n, r-l)`` Magog pentagons."""
    _require(in_magog_range(n, l, r),
             f"need 0 <= l <= n-2 < r <= 2n-3, l+r < 2n-2, r-l > n-3; got n={n} l={l} r={r}")
    return pfaffian(pfaffian_matrix(n, l, r)).shift(1)


# ---------------------------------------------------------------------------
# Constant-term oracle
# ---------------------------------------------------------------------------

CT_MAX_N = 4


class LaurentPoly:
    """Sparse Laurent polynomial; a term is ``exponent tuple -> int``.

    The last exponent slot is ``t``; the others are ``X_1 .. X_{n-1}``.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, nvars: int, exps: dict[int, int], coeff: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        for idx, v in exps.items():
            e[idx] = v
        return cls(nvars, {tuple(e): coeff})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + LaurentPoly(other.nvars, {e: -c for e, c in other.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    def coefficient_in_t(self, x_exps: tuple[int, ...]) -> WeightPolynomial:
        """Coefficient of ``X^x_exps`` as a polynomial in ``t``."""
        coeffs: dict[int, int] = {}
        for e, c in self.terms.items():
            if e[:-1] == x_exps:
                if e[-1] < 0:
                    raise ValueError("negative power of t")
                coeffs[e[-1]] = coeffs.get(e[-1], 0) + c
        if not coeffs:
            return ZERO
        return WeightPolynomial(coeffs.get(d, 0) for d in range(max(coeffs) + 1))


def ct_oracle(n: int, l: int, r: int) -> WeightPolynomial:
    """Constant term in ``X_1..X_{n-1}`` of

    ``sum_{l <= j_1 < ... < j_{n-1} <= r} prod_i (t + X_i) X_i^{-j_i}
    prod_{i<j} (1 + X_i + X_i X_j)(X_j - X_i)``

    expanded literally; exponential in ``n``, hence the cap.
    """
    if n > CT_MAX_N:
        raise ParamRangeError(f"ct_oracle is limited to n <= {CT_MAX_N} (got {n})")
    _require(n >= 2 and 0 <= l <= r <= 2 * n - 3, f"window out of range: n={n} l={l} r={r}")
    nv = n  # X_1..X_{n-1} then t
    tslot = n - 1
    kernel = LaurentPoly.monomial(nv, {})
    for i in range(n - 1):
        kernel = kernel * (LaurentPoly.monomial(nv, {tslot: 1}) + LaurentPoly.monomial(nv, {i: 1}))
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            factor = (LaurentPoly.monomial(nv, {}) + LaurentPoly.monomial(nv, {i: 1})
                      + LaurentPoly.monomial(nv, {i: 1, j: 1}))
            vdm = LaurentPoly.monomial(nv, {j: 1}) - LaurentPoly.monomial(nv, {i: 1})
            kernel = kernel * factor * vdm
    total = LaurentPoly(nv)
    for js in combinations(range(l, r + 1), n - 1):
        shift = LaurentPoly.monomial(nv, {i: -js[i] for i in range(n - 1)})
        total = total + kernel * shift
    return total.coefficient_in_t((0,) * (n - 1))
