"""Exact arithmetic kernel: integer polynomials in ``t``, determinants,
Pfaffians, binomials and trial-division factorization."""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, "WeightPolynomial"]


class WeightPolynomial:
    """Univariate polynomial in ``t`` with Python-int coefficients.

    ``coeffs[d]`` is the coefficient of ``t**d``. Trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``. Instances are immutable and
    hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("WeightPolynomial is immutable")

    def __reduce__(self):
        return (WeightPolynomial, (self.coeffs,))

    @classmethod
    def const(cls, c: int) -> "WeightPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "WeightPolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [c])

    @staticmethod
    def coerce(x: Scalar) -> "WeightPolynomial":
        if isinstance(x, WeightPolynomial):
            return x
        if isinstance(x, int):
            return WeightPolynomial((x,))
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = WeightPolynomial((other,))
        if not isinstance(other, WeightPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Scalar) -> "WeightPolynomial":
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        return WeightPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "WeightPolynomial":
        return WeightPolynomial(-a for a in self.coeffs)

    def __sub__(self, other: Scalar) -> "WeightPolynomial":
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        return WeightPolynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other: Scalar) -> "WeightPolynomial":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "WeightPolynomial":
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return WeightPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "WeightPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other: Scalar) -> "WeightPolynomial":
        """Quotient ``self / other``; raises ``ArithmeticError`` unless exact over Z."""
        other = self.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            if rem:
                raise ArithmeticError("inexact polynomial division")
            return ZERO
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            q = c // lead
            quot[k] = q
            if q:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= q * b
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return WeightPolynomial(quot)

    def shift(self, k: int) -> "WeightPolynomial":
        """Multiply by ``t**k``; negative ``k`` divides and requires the low coefficients to vanish."""
        if k >= 0:
            return WeightPolynomial((0,) * k + self.coeffs)
        if any(self.coeffs[:-k]):
            raise ArithmeticError("shift would drop non-zero coefficients")
        return WeightPolynomial(self.coeffs[-k:])

    def reversed(self, degree: int) -> "WeightPolynomial":
        """``t**degree * p(1/t)``."""
        if self.degree > degree:
            raise ValueError("degree bound below actual degree")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return WeightPolynomial(reversed(padded))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "WeightPolynomial":
        return cls(int(s) for s in data)

    def __repr__(self) -> str:
        return f"WeightPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


ZERO = WeightPolynomial()
ONE = WeightPolynomial((1,))
T = WeightPolynomial((0, 1))


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``b < 0`` or ``b > a``."""
    if a < 0:
        raise ValueError("binom requires a >= 0")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _cofactor_det(m: list[list[WeightPolynomial]]) -> WeightPolynomial:
    n = len(m)
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ZERO
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _cofactor_det(minor)
        total = total - term if j % 2 else total + term
    return total


def cofactor_det(matrix: Sequence[Sequence[Scalar]]) -> WeightPolynomial:
    """Determinant by Laplace expansion along the first row (exponential)."""
    m = [[WeightPolynomial.coerce(x) for x in row] for row in matrix]
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix is not square")
    return _cofactor_det(m)


def det(matrix: Sequence[Sequence[Scalar]]) -> WeightPolynomial:
    """Exact determinant over Z[t].

    Sizes up to 4 use cofactor expansion; larger matrices use Bareiss
    fraction-free elimination, whose divisions are exact in Z[t].
    """
    m = [[WeightPolynomial.coerce(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n <= 4:
        return _cofactor_det(m)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - mik * row_k[j]
                row_i[j] = num.exact_div(prev) if prev != ONE else num
            row_i[k] = ZERO
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


class SkewMatrix:
    """Skew-symmetric matrix stored by its strict upper triangle."""

    def __init__(self, size: int, upper: dict[tuple[int, int], Scalar] | None = None):
        if size < 0:
            raise ValueError("size must be non-negative")
        self.size = size
        self._upper: dict[tuple[int, int], WeightPolynomial] = {}
        for (i, j), v in (upper or {}).items():
            self[i, j] = v

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "SkewMatrix":
        n = len(rows)
        mat = cls(n)
        for i in range(n):
            if WeightPolynomial.coerce(rows[i][i]) != ZERO:
                raise ValueError("diagonal of a skew matrix must vanish")
            for j in range(i + 1, n):
                a = WeightPolynomial.coerce(rows[i][j])
                if WeightPolynomial.coerce(rows[j][i]) != -a:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not negatives")
                mat[i, j] = a
        return mat

    def __getitem__(self, key: tuple[int, int]) -> WeightPolynomial:
        i, j = key
        if i == j:
            return ZERO
        if i < j:
            return self._upper.get((i, j), ZERO)
        return -self._upper.get((j, i), ZERO)

    def __setitem__(self, key: tuple[int, int], value: Scalar) -> None:
        i, j = key
        if not (0 <= i < self.size and 0 <= j < self.size) or i == j:
            raise IndexError(key)
        v = WeightPolynomial.coerce(value)
        if i < j:
            self._upper[(i, j)] = v
        else:
            self._upper[(j, i)] = -v

    def rows(self) -> list[list[WeightPolynomial]]:
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]


def pfaffian(a: SkewMatrix) -> WeightPolynomial:
    """Pfaffian by first-row expansion, memoized on the remaining index set."""
    n = a.size
    if n % 2:
        raise ValueError(f"Pfaffian needs an even-size matrix, got {n}")

    @lru_cache(maxsize=None)
    def pf(mask: int) -> WeightPolynomial:
        if mask == 0:
            return ONE
        idx = [i for i in range(n) if mask >> i & 1]
        first = idx[0]
        rest = mask & ~(1 << first)
        total = ZERO
        for pos, j in enumerate(idx[1:]):
            entry = a[first, j]
            if entry.is_zero():
                continue
            term = entry * pf(rest & ~(1 << j))
            # partners alternate in sign, starting with +
            total = total - term if pos % 2 else total + term
        return total

    return pf((1 << n) - 1)


def factorize(v: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as sorted ``(prime, exponent)`` pairs."""
    if v < 1:
        raise ValueError("factorize needs a positive integer")
    out = []
    p = 2
    while p * p <= v:
        if v % p == 0:
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if v > 1:
        out.append((v, 1))
    return out


def format_factorization(v: int, sep: str = "*") -> str:
    """Render ``v`` as e.g. ``2^2*7``; ``0`` and ``1`` render as themselves."""
    if v == 0:
        return "0"
    if v == 1:
        return "1"
    return sep.join(f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(v))
