"""Validated combinatorial objects: alternating sign triangles and matrices,
Magog and Gog pentagons, Gelfand-Tsetlin patterns.

All indices follow the 1-based conventions used throughout the package:

* ``AstTriangle``: row ``i`` covers absolute columns ``i .. 2n-i``.
* ``MagogPentagon``: cell ``(p, q)`` sits in display row ``q``; display
  row ``q`` lists ``a[p, q]`` for increasing ``p``.
* ``GogPentagon``: cell ``(i, j)`` is row ``i``, column ``j`` of a
  left-justified triangle whose row ``i`` has ``n+1-i`` cells.
* ``GTPattern``: ``a[k, j]`` with ``j`` counted from the right of row ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence


class ValidationError(ValueError):
    """Raised when a candidate array violates a defining condition."""

    def __init__(self, condition: str, location=None, detail: str = ""):
        self.condition = condition
        self.location = location
        msg = condition
        if location is not None:
            msg += f" at {location}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


# ---------------------------------------------------------------------------
# Alternating sign triangles
# ---------------------------------------------------------------------------


class ColumnClass(enum.Enum):
    ALL_ZERO = "all_zero"
    ZERO_SUM = "zero_sum"
    ONE_10 = "one_10"
    ONE_11 = "one_11"


class Side(enum.Enum):
    LEFT = "left"
    CENTRAL = "central"
    RIGHT = "right"


@dataclass(frozen=True)
class AstTriangle:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, c: int) -> int:
        """Entry in row ``i`` and absolute column ``c``; 0 outside the triangle."""
        if i <= c <= 2 * self.n - i:
            return self.rows[i - 1][c - i]
        return 0

    def column(self, c: int) -> list[int]:
        n = self.n
        return [self.rows[i - 1][c - i] for i in range(1, min(c, 2 * n - c) + 1)]


def _check_alternating(seq: Sequence[int]) -> bool:
    # partial sums stay in {0, 1}: non-zeros alternate and the first is +1
    s = 0
    for x in seq:
        s += x
        if s not in (0, 1):
            return False
    return True


def validate_ast(rows: Sequence[Sequence[int]]) -> AstTriangle:
    """Check the three defining conditions and return an ``AstTriangle``."""
    n = len(rows)
    if n == 0:
        raise ValidationError("shape", None, "no rows")
    for i, row in enumerate(rows, start=1):
        if len(row) != 2 * (n - i) + 1:
            raise ValidationError("shape", (i,), f"row {i} has length {len(row)}, expected {2 * (n - i) + 1}")
        for c, x in enumerate(row, start=i):
            if x not in (-1, 0, 1):
                raise ValidationError("shape", (i, c), f"entry {x} not in {{-1,0,1}}")
    t = AstTriangle(n, tuple(tuple(int(x) for x in row) for row in rows))
    for i, row in enumerate(t.rows, start=1):
        nz = [x for x in row if x]
        if any(a == b for a, b in zip(nz, nz[1:])):
            raise ValidationError("alternation", (i,), "row non-zeros do not alternate")
    # sign conditions first, so a lone -1 is reported as such rather than as a bad sum
    for c in range(1, 2 * n):
        nz = [x for x in t.column(c) if x]
        if any(a == b for a, b in zip(nz, nz[1:])):
            raise ValidationError("alternation", (None, c), "column non-zeros do not alternate")
        if nz and nz[0] != 1:
            raise ValidationError("topmost-nonzero", (None, c), "topmost non-zero entry is -1")
    for i, row in enumerate(t.rows, start=1):
        if sum(row) != 1:
            raise ValidationError("row-sum", (i,), f"row sums to {sum(row)}")
    return t


def column_label(n: int, c: int) -> int | None:
    """Label 0..2n-3 of absolute column ``c``; ``None`` for the central column."""
    if c < n:
        return c - 1
    if c > n:
        return c - 2
    return None


def label_to_column(n: int, label: int) -> int:
    return label + 1 if label < n - 1 else label + 2


@dataclass(frozen=True)
class ColumnInfo:
    column: int
    label: int | None
    side: Side
    cls: ColumnClass
    total: int
    bottom: int


@dataclass(frozen=True)
class ColumnProfile:
    n: int
    columns: tuple[ColumnInfo, ...]

    def by_label(self, label: int) -> ColumnInfo:
        return self.columns[label_to_column(self.n, label) - 1]


def column_profile(t: AstTriangle) -> ColumnProfile:
    n = t.n
    infos = []
    for c in range(1, 2 * n):
        col = t.column(c)
        total = sum(col)
        bottom = col[-1]
        if not any(col):
            cls = ColumnClass.ALL_ZERO
        elif total == 0:
            cls = ColumnClass.ZERO_SUM
        elif bottom == 0:
            cls = ColumnClass.ONE_10
        else:
            cls = ColumnClass.ONE_11
        side = Side.LEFT if c < n else Side.RIGHT if c > n else Side.CENTRAL
        infos.append(ColumnInfo(c, column_label(n, c), side, cls, total, bottom))
    return ColumnProfile(n, tuple(infos))


def rho(t: AstTriangle) -> int:
    prof = column_profile(t)
    left11 = sum(1 for ci in prof.columns if ci.side is Side.LEFT and ci.cls is ColumnClass.ONE_11)
    right10 = sum(1 for ci in prof.columns if ci.side is Side.RIGHT and ci.cls is ColumnClass.ONE_10)
    return left11 + right10 + 1


def zero_margins(t: AstTriangle) -> tuple[int, int] | None:
    """Smallest and largest label of a non-zero non-central column.

    ``None`` (the empty window) for order 1, which has no non-central columns.
    """
    labels = [ci.label for ci in column_profile(t).columns
              if ci.side is not Side.CENTRAL and ci.cls is not ColumnClass.ALL_ZERO]
    if not labels:
        return None
    return min(labels), max(labels)


def is_asp(t: AstTriangle, l: int, r: int) -> bool:
    win = zero_margins(t)
    return win is not None and l <= win[0] and win[1] <= r


def reflect(t: AstTriangle) -> AstTriangle:
    return AstTriangle(t.n, tuple(tuple(reversed(row)) for row in t.rows))


# ---------------------------------------------------------------------------
# Magog trapezoids and pentagons
# ---------------------------------------------------------------------------


def magog_row_start(n: int, q: int, lam: int) -> int:
    """Smallest ``p`` kept in display row ``q``: the cell's diagonal
    ``n + 2q - 1 - p`` (counted from the top right) must not exceed ``lam``."""
    return max(q, n + 2 * q - 1 - lam)


def magog_cells(n: int, k: int, lam: int) -> list[tuple[int, int]]:
    return [(p, q) for q in range(1, k + 1) for p in range(magog_row_start(n, q, lam), n + 1)]


@dataclass(frozen=True)
class MagogPentagon:
    m: int
    n: int
    k: int
    lam: int
    rows: tuple[tuple[int, ...], ...]

    def entries(self) -> dict[tuple[int, int], int]:
        out = {}
        for q, row in enumerate(self.rows, start=1):
            start = magog_row_start(self.n, q, self.lam)
            for off, v in enumerate(row):
                out[(start + off, q)] = v
        return out

    def __getitem__(self, key: tuple[int, int]) -> int:
        p, q = key
        start = magog_row_start(self.n, q, self.lam)
        if not (1 <= q <= self.k and start <= p <= self.n):
            raise KeyError(key)
        return self.rows[q - 1][p - start]


def _check_magog_shape(m: int, n: int, k: int, lam: int) -> None:
    if not (n >= 1 and 1 <= k <= n and lam >= 1 and m >= 0):
        raise ValidationError("shape", None, f"bad parameters m={m} n={n} k={k} lambda={lam}")


def _magog_trapezoid_errors(m: int, n: int, k: int, a: Mapping[tuple[int, int], int]):
    for q in range(1, k + 1):
        for p in range(q, n + 1):
            v = a[(p, q)]
            if v < 1:
                return ValidationError("positivity", (p, q), f"entry {v}")
            if p < n and v > a[(p + 1, q)]:
                return ValidationError("row", (p, q), "rows must weakly increase")
            if q < k and p < n and v < a[(p + 1, q + 1)]:
                return ValidationError("display-column", (p, q), "display columns must weakly decrease")
    for p in range(1, n + 1):
        if a[(p, 1)] > m + p:
            return ValidationError("bound", (p, 1), f"{a[(p, 1)]} > {m + p}")
    return None


def magog_from_entries(m: int, n: int, k: int, lam: int,
                       entries: Mapping[tuple[int, int], int]) -> MagogPentagon:
    rows = tuple(tuple(entries[(p, q)] for p in range(magog_row_start(n, q, lam), n + 1))
                 for q in range(1, k + 1))
    return validate_magog(m, n, k, lam, rows)


def validate_magog(m: int, n: int, k: int, lam: int, rows: Sequence[Sequence[int]]) -> MagogPentagon:
    """Validate an ``(m, n, k, lam)`` pentagon given by its display rows."""
    _check_magog_shape(m, n, k, lam)
    if len(rows) != k:
        raise ValidationError("membership", None, f"expected {k} rows, got {len(rows)}")
    for q, row in enumerate(rows, start=1):
        want = n + 1 - magog_row_start(n, q, lam)
        if len(row) != max(want, 0):
            raise ValidationError("membership", (q,), f"row {q} has {len(row)} cells, expected {max(want, 0)}")
    p = MagogPentagon(m, n, k, lam, tuple(tuple(int(x) for x in row) for row in rows))
    for (pp, q), v in sorted(p.entries().items()):
        if v < 1:
            raise ValidationError("positivity", (pp, q), f"entry {v}")
    err = _magog_trapezoid_errors(m, n, k, _ones_completion(p))
    if err is not None:
        raise err
    return p


def _ones_completion(p: MagogPentagon) -> dict[tuple[int, int], int]:
    full = {(pp, q): 1 for q in range(1, p.k + 1) for pp in range(q, p.n + 1)}
    full.update(p.entries())
    return full


def complete_magog(p: MagogPentagon) -> MagogPentagon:
    """The full ``(m, n, k)`` trapezoid with every cut cell set to 1."""
    full = _ones_completion(p)
    rows = tuple(tuple(full[(pp, q)] for pp in range(q, p.n + 1)) for q in range(1, p.k + 1))
    return MagogPentagon(p.m, p.n, p.k, 2 * p.n - 1, rows)


def tau(p: MagogPentagon) -> int:
    full = _ones_completion(p)
    n = p.n
    # the cell (n-1, n) does not exist, so a full-height trapezoid stops at n-1
    return n + sum(full[(n - 1, i)] - full[(n, i)] for i in range(1, min(p.k, n - 1) + 1))


# ---------------------------------------------------------------------------
# Gog trapezoids and pentagons
# ---------------------------------------------------------------------------


def gog_row_length(n: int, k: int, i: int) -> int:
    return min(k, n + 1 - i)


def gog_is_forced(l: int, i: int, j: int) -> bool:
    return i + j <= l + 1


def gog_free_cells(n: int, k: int, l: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, gog_row_length(n, k, i) + 1)
            if not gog_is_forced(l, i, j)]


@dataclass(frozen=True)
class GogPentagon:
    """Gog pentagon; ``rows[i-1]`` holds the free cells of row ``i`` left to right."""

    m: int
    n: int
    k: int
    l: int
    rows: tuple[tuple[int, ...], ...]

    def completion(self) -> dict[tuple[int, int], int]:
        out = {}
        for i in range(1, self.n + 1):
            free = iter(self.rows[i - 1])
            for j in range(1, gog_row_length(self.n, self.k, i) + 1):
                out[(i, j)] = j if gog_is_forced(self.l, i, j) else next(free)
        return out

    def completed_rows(self) -> tuple[tuple[int, ...], ...]:
        a = self.completion()
        return tuple(tuple(a[(i, j)] for j in range(1, gog_row_length(self.n, self.k, i) + 1))
                     for i in range(1, self.n + 1))


def _gog_errors(m: int, n: int, k: int, a: Mapping[tuple[int, int], int]):
    for (i, j), v in sorted(a.items()):
        if v < 1:
            return ValidationError("positivity", (i, j), f"entry {v}")
        if (i, j + 1) in a and not v < a[(i, j + 1)]:
            return ValidationError("row", (i, j), "rows must strictly increase")
        if (i + 1, j) in a and v > a[(i + 1, j)]:
            return ValidationError("column", (i, j), "columns must weakly increase")
        if (i + 1, j) in a and (i, j + 1) in a and a[(i + 1, j)] > a[(i, j + 1)]:
            return ValidationError("diagonal", (i + 1, j), f"a[{i + 1},{j}] > a[{i},{j + 1}]")
    for i in range(1, n + 2 - k):
        if a[(i, k)] > m + k + i - 1:
            return ValidationError("bound", (i, k), f"{a[(i, k)]} > {m + k + i - 1}")
    return None


def validate_gog(m: int, n: int, k: int, l: int, rows: Sequence[Sequence[int]]) -> GogPentagon:
    """Validate an ``(m, n, k, l)`` Gog pentagon given by its free cells per row."""
    if not (n >= 1 and 1 <= k <= n and l >= 0 and m >= 0):
        raise ValidationError("shape", None, f"bad parameters m={m} n={n} k={k} l={l}")
    if len(rows) != n:
        raise ValidationError("membership", None, f"expected {n} rows, got {len(rows)}")
    for i, row in enumerate(rows, start=1):
        want = sum(1 for j in range(1, gog_row_length(n, k, i) + 1) if not gog_is_forced(l, i, j))
        if len(row) != want:
            raise ValidationError("membership", (i,), f"row {i} has {len(row)} free cells, expected {want}")
    g = GogPentagon(m, n, k, l, tuple(tuple(int(x) for x in row) for row in rows))
    err = _gog_errors(m, n, k, g.completion())
    if err is not None:
        raise err
    return g


def gog_from_completed(m: int, n: int, k: int, l: int, rows: Sequence[Sequence[int]]) -> GogPentagon:
    """Build a pentagon from a full trapezoid whose forced corner must match the pattern."""
    free = []
    for i, row in enumerate(rows, start=1):
        cells = []
        for j, v in enumerate(row, start=1):
            if gog_is_forced(l, i, j):
                if v != j:
                    raise ValidationError("pattern", (i, j), f"forced cell must be {j}, got {v}")
            else:
                cells.append(v)
        free.append(cells)
    return validate_gog(m, n, k, l, free)


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GTPattern:
    """``rows[k-1][j-1]`` is ``a[k, j]`` (``j`` counted from the right)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        k, j = key
        return self.rows[k - 1][j - 1]


def validate_gt(rows: Sequence[Sequence[int]]) -> GTPattern:
    n = len(rows)
    for k, row in enumerate(rows, start=1):
        if len(row) != k:
            raise ValidationError("shape", (k,), f"row {k} has {len(row)} entries")
    g = GTPattern(n, tuple(tuple(int(x) for x in row) for row in rows))
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            v = g[k, j]
            if v < 1:
                raise ValidationError("positivity", (k, j))
            if k < n and v > g[k + 1, j]:
                raise ValidationError("south-east", (k, j), "must weakly increase")
            if j > 1 and v > g[k - 1, j - 1]:
                raise ValidationError("north-east", (k, j), "must weakly increase")
        if g[k, 1] > k:
            raise ValidationError("bound", (k, 1), f"{g[k, 1]} > {k}")
    return g


# ---------------------------------------------------------------------------
# Alternating sign matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Asm:
    n: int
    rows: tuple[tuple[int, ...], ...]


def validate_asm(rows: Sequence[Sequence[int]]) -> Asm:
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValidationError("shape", None, "matrix must be square and non-empty")
    a = tuple(tuple(int(x) for x in r) for r in rows)
    for i, r in enumerate(a, start=1):
        if any(x not in (-1, 0, 1) for x in r):
            raise ValidationError("shape", (i,), "entries must be in {-1,0,1}")
        if not _check_alternating(r) or sum(r) != 1:
            raise ValidationError("row", (i,), "row must alternate and sum to 1")
    for j in range(n):
        col = [a[i][j] for i in range(n)]
        if not _check_alternating(col) or sum(col) != 1:
            raise ValidationError("column", (None, j + 1), "column must alternate and sum to 1")
    return Asm(n, a)


def t_r(a: Asm) -> int:
    """Number of leading all-zero south-east diagonals from the top-right corner."""
    n = a.n
    count = 0
    for m in range(1, n + 1):
        if any(a.rows[i - 1][n - m + i - 1] for i in range(1, m + 1)):
            break
        count += 1
    return count


def t_l(a: Asm) -> int:
    """Number of leading all-zero south-west diagonals from the top-left corner."""
    count = 0
    for m in range(1, a.n + 1):
        if any(a.rows[i - 1][m - i] for i in range(1, m + 1)):
            break
        count += 1
    return count


def rho_asm(a: Asm) -> int:
    return a.rows[0].index(1) + 1


def asm_to_gog(a: Asm) -> GogPentagon:
    """Monotone triangle of ``a``: row ``i`` lists the columns of the 1s in
    the sum of ASM rows ``i..n``."""
    n = a.n
    acc = [0] * n
    tri = []
    for i in range(n - 1, -1, -1):
        acc = [s + x for s, x in zip(acc, a.rows[i])]
        if any(s not in (0, 1) for s in acc):
            raise ValidationError("partial-sum", (i + 1,), "partial sums leave {0,1}")
        tri.append(tuple(j + 1 for j, s in enumerate(acc) if s))
    tri.reverse()
    return validate_gog(0, n, n, 0, tri)


def gog_to_asm(g: GogPentagon) -> Asm:
    if g.k != g.n:
        raise ValidationError("shape", None, "need a full (m, n, n) Gog trapezoid")
    n = g.n
    rows = g.completed_rows()
    ind = [[1 if j + 1 in set(r) else 0 for j in range(n)] for r in rows] + [[0] * n]
    return validate_asm([[ind[i][j] - ind[i + 1][j] for j in range(n)] for i in range(n)])


def has_top_right_pattern(g: GogPentagon, x: int) -> bool:
    """Row ``i <= x+1`` ends with ``n-x-1+i, ..., n``."""
    n = g.n
    rows = g.completed_rows()
    for i in range(1, x + 2):
        want = tuple(range(n - x - 1 + i, n + 1))
        if i > n or rows[i - 1][-len(want):] != want:
            return False
    return True


def has_top_left_pattern(g: GogPentagon, x: int) -> bool:
    """Row ``i <= x+1`` starts with ``1, ..., x+2-i``."""
    rows = g.completed_rows()
    for i in range(1, x + 2):
        want = tuple(range(1, x + 3 - i))
        if i > g.n or rows[i - 1][:len(want)] != want:
            return False
    return True


# ---------------------------------------------------------------------------
# Text serialization
# ---------------------------------------------------------------------------


def dumps(obj) -> str:
    """Canonical text form: a shape header line, then one line per row."""
    if isinstance(obj, AstTriangle):
        header = f"AST {obj.n}"
        rows = obj.rows
    elif isinstance(obj, MagogPentagon):
        header = f"MAGOG {obj.m} {obj.n} {obj.k} {obj.lam}"
        rows = obj.rows
    elif isinstance(obj, GogPentagon):
        header = f"GOG {obj.m} {obj.n} {obj.k} {obj.l}"
        rows = obj.rows
    elif isinstance(obj, GTPattern):
        header = f"GT {obj.n}"
        rows = [tuple(reversed(r)) for r in obj.rows]
    elif isinstance(obj, Asm):
        header = f"ASM {obj.n}"
        rows = obj.rows
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join([header] + [" ".join(str(x) for x in row) for row in rows]) + "\n"


def loads(text: str):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValidationError("shape", None, "empty input")
    head = lines[0].split()
    kind, params = head[0], [int(x) for x in head[1:]]
    rows = [[int(x) for x in line.split()] for line in lines[1:]]
    if kind == "AST":
        t = validate_ast(rows)
        if t.n != params[0]:
            raise ValidationError("shape", None, "header order mismatch")
        return t
    if kind == "MAGOG":
        return validate_magog(*params, rows)
    if kind == "GOG":
        return validate_gog(*params, rows)
    if kind == "GT":
        g = validate_gt([list(reversed(r)) for r in rows])
        if g.n != params[0]:
            raise ValidationError("shape", None, "header order mismatch")
        return g
    if kind == "ASM":
        a = validate_asm(rows)
        if a.n != params[0]:
            raise ValidationError("shape", None, "header order mismatch")
        return a
    raise ValidationError("shape", None, f"unknown object kind {kind!r}")

