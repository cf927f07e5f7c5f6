"""Lattice-path families and the bijection chain

    path tuple --shift--> kissing tuple --to_gt--> GT pattern --gt_to_magog--> Magog pentagon

Path ``j`` of an ``(n, l, r)`` tuple starts at ``S_j = (j, -2j)`` and ends at
some ``E_e = (e, -e)`` with ``1 <= e <= r+1``; the lowest path must stay
weakly above ``y = x + l - r - 2n + 1``. A tuple is weighted by ``t`` per path
that ends with a north step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .algebra import WeightPolynomial, det
from .formulas import ParamRangeError, _entry, in_magog_range
from .objects import (
    GTPattern,
    MagogPentagon,
    ValidationError,
    complete_magog,
    magog_row_start,
    validate_gt,
    validate_magog,
)

NORTH = "N"
EAST = "E"

Point = tuple[int, int]


@dataclass(frozen=True)
class LatticePath:
    start: Point
    steps: str

    def points(self) -> list[Point]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == NORTH:
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    @property
    def end(self) -> Point:
        e = self.steps.count(EAST)
        return self.start[0] + e, self.start[1] + len(self.steps) - e

    @property
    def ends_north(self) -> bool:
        return bool(self.steps) and self.steps[-1] == NORTH

    def translate(self, dx: int, dy: int) -> "LatticePath":
        return LatticePath((self.start[0] + dx, self.start[1] + dy), self.steps)

    def stays_above(self, offset: int) -> bool:
        """Every vertex satisfies ``y >= x + offset``."""
        return all(y >= x + offset for x, y in self.points())


@dataclass(frozen=True)
class PathTuple:
    n: int
    l: int
    r: int
    paths: tuple[LatticePath, ...]

    @property
    def weight(self) -> int:
        return sum(1 for p in self.paths if p.ends_north)

    @property
    def endpoints(self) -> tuple[int, ...]:
        return tuple(p.end[0] for p in self.paths)


@dataclass(frozen=True)
class KissingTuple:
    """Shifted family: path ``j`` starts at ``(0, -j)``."""

    n: int
    l: int
    r: int
    paths: tuple[LatticePath, ...]

    @property
    def weight(self) -> int:
        return sum(1 for p in self.paths if p.ends_north)


def start_point(j: int) -> Point:
    return (j, -2 * j)


def end_point(e: int) -> Point:
    return (e, -e)


def line_offset(n: int, l: int, r: int) -> int:
    """Offset ``c`` of the constraint line ``y = x + c``."""
    return l - r - 2 * n + 1


def paths_between(start: Point, end: Point) -> Iterator[LatticePath]:
    """All north/east paths from ``start`` to ``end``, east-first lexicographic."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return
    total = dx + dy
    for east_pos in combinations(range(total), dx):
        chosen = set(east_pos)
        yield LatticePath(start, "".join(EAST if i in chosen else NORTH for i in range(total)))


def brute_path_gf(n: int, l: int, r: int, j: int, e: int) -> WeightPolynomial:
    """Enumerate paths ``S_j -> E_e`` weakly above the line; ``t`` marks a final north step."""
    if not (1 <= j <= n - 1 and 1 <= e <= r + 1):
        raise ParamRangeError(f"need 1 <= j <= {n - 1}, 1 <= e <= {r + 1}")
    c = line_offset(n, l, r)
    north = east = 0
    for p in paths_between(start_point(j), end_point(e)):
        if p.stays_above(c):
            if p.ends_north:
                north += 1
            else:
                east += 1
    return WeightPolynomial((east, north))


def _candidate_paths(n: int, l: int, r: int, j: int, constrained: bool) -> list[LatticePath]:
    c = line_offset(n, l, r)
    out = []
    for e in range(j, min(2 * j, r + 1) + 1):
        for p in paths_between(start_point(j), end_point(e)):
            if not constrained or p.stays_above(c):
                out.append(p)
    return out


def _tuples(n: int, l: int, r: int, constrain_all: bool,
            endpoints: Sequence[int] | None = None) -> Iterator[PathTuple]:
    cands = []
    for j in range(1, n):
        ps = _candidate_paths(n, l, r, j, constrain_all or j == n - 1)
        if endpoints is not None:
            ps = [p for p in ps if p.end[0] == endpoints[j - 1]]
        cands.append(ps)
    chosen: list[LatticePath] = []
    occupied: set[Point] = set()

    def rec(j: int, last_e: int):
        if j == n:
            yield PathTuple(n, l, r, tuple(chosen))
            return
        for p in cands[j - 1]:
            if p.end[0] <= last_e:
                continue
            pts = p.points()
            if occupied.intersection(pts):
                continue
            chosen.append(p)
            occupied.update(pts)
            yield from rec(j + 1, p.end[0])
            occupied.difference_update(pts)
            chosen.pop()

    yield from rec(1, 0)


def _check_magog_range(n: int, l: int, r: int) -> None:
    if not in_magog_range(n, l, r):
        raise ParamRangeError(f"need 0 <= l <= n-2 < r <= 2n-3, l+r < 2n-2, r-l > n-3; got n={n} l={l} r={r}")


def enumerate_tuples(n: int, l: int, r: int, constrain_all: bool = False) -> Iterator[PathTuple]:
    """Vertex-disjoint path tuples with increasing endpoints.

    By default only the lowest path is checked against the line; with
    ``constrain_all`` every path must stay above it (the graph formulation).
    """
    _check_magog_range(n, l, r)
    yield from _tuples(n, l, r, constrain_all)


def tuples_genpoly(n: int, l: int, r: int) -> WeightPolynomial:
    coeffs = [0] * n
    for tup in enumerate_tuples(n, l, r):
        coeffs[tup.weight] += 1
    return WeightPolynomial(coeffs)


@dataclass(frozen=True)
class LgvReport:
    n: int
    l: int
    r: int
    endpoints: tuple[int, ...]
    determinant: WeightPolynomial
    brute: WeightPolynomial

    @property
    def passed(self) -> bool:
        return self.determinant == self.brute


def lgv_check(n: int, l: int, r: int, endpoints: Sequence[int]) -> LgvReport:
    """Compare the entry determinant with brute non-intersecting families pinned to ``endpoints``."""
    _check_magog_range(n, l, r)
    es = tuple(endpoints)
    if len(es) != n - 1 or any(a >= b for a, b in zip(es, es[1:])) or es[0] < 1 or es[-1] > r + 1:
        raise ParamRangeError(f"endpoints must be {n - 1} increasing values in [1, {r + 1}]")
    d = det([[_entry(n, l, r, e, j) for j in range(1, n)] for e in es])
    coeffs = [0] * n
    for tup in _tuples(n, l, r, True, es):
        coeffs[tup.weight] += 1
    return LgvReport(n, l, r, es, d, WeightPolynomial(coeffs))


# ---------------------------------------------------------------------------
# Shift to kissing tuples
# ---------------------------------------------------------------------------


def shift(tup: PathTuple) -> KissingTuple:
    return KissingTuple(tup.n, tup.l, tup.r,
                        tuple(p.translate(-j, j) for j, p in enumerate(tup.paths, start=1)))


def unshift(kt: KissingTuple) -> PathTuple:
    return PathTuple(kt.n, kt.l, kt.r,
                     tuple(p.translate(j, -j) for j, p in enumerate(kt.paths, start=1)))


def _x_by_antidiagonal(p: LatticePath) -> dict[int, int]:
    return {x + y: x for x, y in p.points()}


def is_kissing(paths: Sequence[LatticePath]) -> bool:
    """On every anti-diagonal ``x + y = d`` both paths meet, path ``j`` is
    weakly to the right of (hence weakly below) path ``j-1``."""
    for upper, lower in zip(paths, paths[1:]):
        xu = _x_by_antidiagonal(upper)
        for d, x in _x_by_antidiagonal(lower).items():
            if d in xu and x < xu[d]:
                return False
    return True


def shared_points(kt: KissingTuple) -> set[Point]:
    """Points touched by two consecutive shifted paths (diagnostic only)."""
    out: set[Point] = set()
    for a, b in zip(kt.paths, kt.paths[1:]):
        out |= set(a.points()) & set(b.points())
    return out


def validate_kissing(kt: KissingTuple) -> None:
    n, l, r = kt.n, kt.l, kt.r
    if len(kt.paths) != n - 1:
        raise ValidationError("shape", None, f"need {n - 1} paths")
    for j, p in enumerate(kt.paths, start=1):
        if p.start != (0, -j):
            raise ValidationError("start", (j,), f"path {j} starts at {p.start}")
        x, y = p.end
        if x + y != 0 or not 0 <= x <= r + 2 - n:
            raise ValidationError("end", (j,), f"path {j} ends at {p.end}")
    if not is_kissing(kt.paths):
        raise ValidationError("kissing", None, "a path rises above its predecessor")
    if not kt.paths[-1].stays_above(l - r - 1):
        raise ValidationError("line", (n - 1,), f"lowest path crosses y = x + {l - r - 1}")


# ---------------------------------------------------------------------------
# Kissing tuples <-> Gelfand-Tsetlin patterns
# ---------------------------------------------------------------------------
#
# Path m, rewritten in the pattern's coordinates, enters at row n-m and
# descends one row per step: a north step keeps its gap index, an east step
# moves it one slot left. The gap index g at row k means the path runs
# between a[k, g] (right) and a[k, g+1] (left). Label j fills every slot left
# of the path that entered at row j, smallest label winning; the rest get n.


def _gaps(p: LatticePath, m: int, n: int) -> dict[int, int]:
    g = 0
    out = {n - m: 0}
    for s, step in enumerate(p.steps, start=1):
        if step == EAST:
            g += 1
        out[n - m + s] = g
    return out


def to_gt(kt: KissingTuple) -> GTPattern:
    n = kt.n
    gaps = {m: _gaps(p, m, n) for m, p in enumerate(kt.paths, start=1)}
    rows = []
    for k in range(1, n + 1):
        row = []
        for i in range(1, k + 1):
            label = n
            for j in range(1, min(k, n - 1) + 1):
                if i > gaps[n - j][k]:
                    label = j
                    break
            row.append(label)
        rows.append(row)
    return validate_gt(rows)


def forced_ones_violation(g: GTPattern, n: int, l: int, r: int) -> tuple[int, int] | None:
    """First cell that should be 1 but is not, or ``None``.

    Cells on or left of south-east diagonal ``r+3-n`` and cells in columns
    ``>= r+1-l`` (both counted from the right) must equal 1.
    """
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            col = 2 * j - 1 + n - k
            if (j >= r + 3 - n or col >= r + 1 - l) and g[k, j] != 1:
                return (k, j)
    return None


def from_gt(g: GTPattern, n: int, l: int, r: int) -> KissingTuple:
    _check_magog_range(n, l, r)
    if g.n != n:
        raise ValidationError("shape", None, f"pattern has order {g.n}, expected {n}")
    bad = forced_ones_violation(g, n, l, r)
    if bad is not None:
        raise ValidationError("forced-ones", bad, "entry must be 1")
    paths = []
    for m in range(1, n):
        j = n - m
        steps = []
        prev = 0
        for k in range(j + 1, n + 1):
            cur = sum(1 for i in range(1, k + 1) if g[k, i] > j)
            if cur - prev not in (0, 1):
                raise ValidationError("interlacing", (k,), "label boundary jumps")
            steps.append(EAST if cur > prev else NORTH)
            prev = cur
        paths.append(LatticePath((0, -m), "".join(steps)))
    kt = KissingTuple(n, l, r, tuple(paths))
    validate_kissing(kt)
    return kt


def gt_weight(g: GTPattern, n: int, r: int) -> int:
    """``(n-1) + sum_{i <= r+2-n} (a[n-1,i] - a[n,i])``."""
    return (n - 1) + sum(g[n - 1, i] - g[n, i] for i in range(1, r + 3 - n))


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin patterns <-> Magog pentagons
# ---------------------------------------------------------------------------


def gt_to_magog(g: GTPattern, n: int, l: int, r: int) -> MagogPentagon:
    """Rotate and drop the cells forced to 1: an ``(0, n, r+2-n, r-l)`` pentagon."""
    _check_magog_range(n, l, r)
    bad = forced_ones_violation(g, n, l, r)
    if bad is not None:
        raise ValidationError("forced-ones", bad, "entry must be 1")
    k, lam = r + 2 - n, r - l
    rows = [[g[p, q] for p in range(magog_row_start(n, q, lam), n + 1)] for q in range(1, k + 1)]
    return validate_magog(0, n, k, lam, rows)


def magog_to_gt(mp: MagogPentagon) -> GTPattern:
    full = complete_magog(mp)
    n, k = mp.n, mp.k
    rows = []
    for p in range(1, n + 1):
        rows.append([full[p, q] if q <= k else 1 for q in range(1, p + 1)])
    return validate_gt(rows)


def magog_params(n: int, l: int, r: int) -> tuple[int, int, int, int]:
    return 0, n, r + 2 - n, r - l


def chain_forward(tup: PathTuple) -> MagogPentagon:
    return gt_to_magog(to_gt(shift(tup)), tup.n, tup.l, tup.r)


def chain_backward(mp: MagogPentagon, l: int, r: int) -> PathTuple:
    return unshift(from_gt(magog_to_gt(mp), mp.n, l, r))


# ---------------------------------------------------------------------------
# ASCII rendering (debug only)
# ---------------------------------------------------------------------------


def render_paths(paths: Iterable[LatticePath]) -> str:
    paths = list(paths)
    pts: dict[Point, str] = {}
    for idx, p in enumerate(paths, start=1):
        mark = str(idx % 10)
        for pt in p.points():
            pts[pt] = "*" if pt in pts and pts[pt] != mark else mark
    if not pts:
        return ""
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        lines.append(" ".join(pts.get((x, y), ".") for x in range(min(xs), max(xs) + 1)))
    return "\n".join(lines)


def render_gt(g: GTPattern) -> str:
    width = max(len(str(v)) for row in g.rows for v in row)
    lines = []
    for k, row in enumerate(g.rows, start=1):
        cells = " ".join(str(v).rjust(width) for v in reversed(row))
        lines.append(" " * ((g.n - k) * (width + 1) // 2) + cells)
    return "\n".join(lines)


# An order-10 tuple for (l, r) = (1, 12): four paths end with a north step.
WORKED_EXAMPLE = (10, 1, 12, ("N", "NE", "NEN", "ENNE", "ENNNE", "EENNNE",
                              "EEENNNN", "NEEENNNE", "EEENENNNN"))


def tuple_from_steps(n: int, l: int, r: int, steps: Sequence[str]) -> PathTuple:
    _check_magog_range(n, l, r)
    if len(steps) != n - 1:
        raise ValidationError("shape", None, f"need {n - 1} paths")
    return PathTuple(n, l, r, tuple(LatticePath(start_point(j), s) for j, s in enumerate(steps, start=1)))


def worked_example() -> PathTuple:
    n, l, r, steps = WORKED_EXAMPLE
    return tuple_from_steps(n, l, r, steps)
