"""Command-line front end.

Exit status: 0 on success, 1 when a verification cell fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Callable, Sequence

from . import bijections as bj
from .algebra import T, WeightPolynomial, format_factorization
from .enumeration import (
    BRUTE_MAX_N,
    asm_count_tr_at_least,
    asp_genpoly,
    ast_census,
    enumerate_asms,
    enumerate_asts,
    enumerate_gt,
    enumerate_magog,
    gog_count,
    magog_genpoly,
)
from .formulas import (
    CT_MAX_N,
    ParamRangeError,
    ct_oracle,
    detsum_genpoly,
    in_detsum_range,
    in_magog_range,
    pfaffian_genpoly,
    magog_grid,
)
from .objects import dumps, reflect, rho, rho_asm, tau
from .tables import ERRATA, PRINTED, parse_factorization

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MACHINE_SEP = "*"
PRETTY_SEP = "·"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class CellRecord:
    params: dict[str, Any]
    values: dict[str, Any]
    agree: bool
    note: str = ""


@dataclass
class VerificationReport:
    target: str
    scope: dict[str, Any]
    cells: list[CellRecord] = field(default_factory=list)
    errata: int = 0
    findings_only: bool = False

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for c in self.cells if c.agree)
        return {"checked": len(self.cells), "passed": passed,
                "failed": len(self.cells) - passed, "errata": self.errata}

    @property
    def ok(self) -> bool:
        return self.findings_only or self.summary["failed"] == 0


def _json_value(v: Any) -> Any:
    if isinstance(v, WeightPolynomial):
        return v.to_json()
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    return v


def _pretty_value(v: Any) -> str:
    return str(v)


def report_to_json(rep: VerificationReport) -> dict:
    return {
        "target": rep.target,
        "scope": rep.scope,
        "cells": [{"params": c.params,
                   "values": {k: _json_value(v) for k, v in c.values.items()},
                   "agree": c.agree,
                   **({"note": c.note} if c.note else {})} for c in rep.cells],
        "summary": rep.summary,
    }


def report_to_text(rep: VerificationReport) -> str:
    lines = []
    for c in rep.cells:
        if rep.findings_only:
            status = "equal" if c.agree else "UNEQUAL"
        else:
            status = "ok" if c.agree else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in c.params.items())
        values = "  ".join(f"{k}: {_pretty_value(v)}" for k, v in c.values.items())
        line = f"[{status}] {params}  {values}"
        if c.note:
            line += f"  ({c.note})"
        lines.append(line)
    s = rep.summary
    lines.append(f"{rep.target}: checked {s['checked']}, passed {s['passed']}, "
                 f"failed {s['failed']}, errata {s['errata']}")
    return "\n".join(lines)


def _run_cells(fn: Callable, tasks: Sequence[tuple], jobs: int) -> list:
    """Evaluate ``fn(*task)`` for every task; results keep task order."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_star_call, [(fn, t) for t in tasks]))
    return [fn(*t) for t in tasks]


def _star_call(arg):
    fn, task = arg
    return fn(*task)


def _all_equal(values: Sequence[Any]) -> bool:
    return all(v == values[0] for v in values[1:])


# ---------------------------------------------------------------------------
# Verification cells (module level so worker processes can import them)
# ---------------------------------------------------------------------------


def cell_main_theorem(n: int, l: int, r: int) -> CellRecord:
    vals: dict[str, Any] = {}
    if n <= BRUTE_MAX_N:
        vals["brute"] = asp_genpoly(n, l, r)
    vals["magog"] = magog_genpoly(0, n, r + 2 - n, r - l)
    vals["detsum"] = detsum_genpoly(n, l, r)
    vals["pfaffian/t"] = pfaffian_genpoly(n, l, r).exact_div(T)
    return CellRecord({"n": n, "l": l, "r": r}, vals, _all_equal(list(vals.values())))


def cell_pfaffian(n: int, l: int, r: int) -> CellRecord:
    vals = {"t*detsum": detsum_genpoly(n, l, r).shift(1), "pfaffian": pfaffian_genpoly(n, l, r)}
    return CellRecord({"n": n, "l": l, "r": r}, vals, _all_equal(list(vals.values())))


def cell_entry(n: int, l: int, r: int) -> CellRecord:
    from .formulas import entry_poly

    bad = []
    total = 0
    for j in range(1, n):
        for e in range(1, r + 2):
            total += 1
            if entry_poly(n, l, r, e, j) != bj.brute_path_gf(n, l, r, j, e):
                bad.append((j, e))
    return CellRecord({"n": n, "l": l, "r": r, "check": "entry"},
                      {"entries": total, "matching": total - len(bad)}, not bad,
                      f"mismatch at (j, e) = {bad}" if bad else "")


def cell_lgv(n: int, l: int, r: int, es: tuple[int, ...]) -> CellRecord:
    rep = bj.lgv_check(n, l, r, es)
    return CellRecord({"n": n, "l": l, "r": r, "endpoints": list(es)},
                      {"det": rep.determinant, "brute": rep.brute}, rep.passed)


def cell_bijection(n: int, l: int, r: int) -> CellRecord:
    tuples = list(bj.enumerate_tuples(n, l, r))
    images = set()
    round_trips = 0
    weight_ok = True
    tuple_weights: Counter = Counter()
    tau_weights: Counter = Counter()
    for tup in tuples:
        kt = bj.shift(tup)
        g = bj.to_gt(kt)
        mp = bj.gt_to_magog(g, n, l, r)
        images.add(mp)
        tuple_weights[tup.weight] += 1
        tau_weights[tau(mp) - 1] += 1
        weight_ok &= bj.gt_weight(g, n, r) == tup.weight
        if bj.chain_backward(mp, l, r) == tup and bj.unshift(kt) == tup:
            round_trips += 1
    pentagons = set(enumerate_magog(*bj.magog_params(n, l, r)))
    vals = {"tuples": len(tuples), "images": len(images), "pentagons": len(pentagons),
            "round trips": round_trips}
    agree = (_all_equal(list(vals.values())) and images == pentagons
             and tuple_weights == tau_weights and weight_ok)
    return CellRecord({"n": n, "l": l, "r": r}, vals, agree)


def cell_reflection(n: int) -> CellRecord:
    total = ok = 0
    for t in enumerate_asts(n):
        total += 1
        ok += rho(t) + rho(reflect(t)) == n + 1
    return CellRecord({"n": n, "check": "rho + rho(reflect) = n+1"},
                      {"asts": total, "satisfied": ok}, total == ok)


def cell_zero_asp(n: int, l: int, r: int) -> CellRecord:
    v = asp_genpoly(n, l, r)(1)
    return CellRecord({"n": n, "l": l, "r": r, "check": "no ASPs"}, {"brute": v, "expected": 0}, v == 0)


def cell_asm_corollary(n: int, r: int) -> CellRecord:
    x = 2 * n - 3 - r
    vals = {f"ASMs with T_R >= {x}": asm_count_tr_at_least(n, x), "ASPs (n,0,r)": asp_genpoly(n, 0, r)(1)}
    return CellRecord({"n": n, "r": r}, vals, _all_equal(list(vals.values())))


def cell_catalan(n: int) -> CellRecord:
    vals: dict[str, Any] = {"catalan": comb(2 * n, n) // (n + 1),
                            "detsum": detsum_genpoly(n, 0, n - 1)(1),
                            "magog": magog_genpoly(0, n, 1, n - 1)(1)}
    if n <= BRUTE_MAX_N:
        vals["brute"] = asp_genpoly(n, 0, n - 1)(1)
    return CellRecord({"n": n}, vals, _all_equal(list(vals.values())))


def cell_behrend(n: int, l: int, r: int) -> CellRecord:
    vals = {f"magog(0,{n},{r + 2 - n},{r - l})": magog_genpoly(0, n, r + 2 - n, r - l)(1),
            f"gog(0,{n},{r + 2 - n},{l + 1})": gog_count(0, n, r + 2 - n, l + 1)}
    return CellRecord({"n": n, "l": l, "r": r}, vals, _all_equal(list(vals.values())))


def behrend_grid(n: int) -> list[tuple[int, int]]:
    out = []
    for r in range(n - 1, 2 * n - 2):
        for l in range(1, n - 1):
            if l + r - 2 * n + 2 < 0 and 2 * n + r - l > 3 * (n - 1):
                out.append((l, r))
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-') if n != 'lam' else 'lambda'}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def _emit_count(args, obj: str, params: dict, count: int, genpoly: WeightPolynomial | None) -> None:
    if args.plain:
        if genpoly is not None:
            print(" ".join(str(c) for c in genpoly.to_json()) or "0")
        else:
            print(count)
        return
    out: dict[str, Any] = {"object": obj, "params": params}
    if genpoly is not None:
        out["genpoly"] = genpoly.to_json()
    out["count"] = str(count)
    out["factorization"] = format_factorization(count, MACHINE_SEP)
    print(json.dumps(out))


def _asp_poly(args) -> WeightPolynomial:
    n, l, r = args.n, args.l, args.r
    if n < 2:
        raise UsageError("ASP windows need n >= 2")
    if not (0 <= l and r <= 2 * n - 3):
        raise UsageError(f"window [{l}, {r}] outside 0..{2 * n - 3}")
    method = args.method or ("brute" if n <= BRUTE_MAX_N else "detsum")
    if method == "ct" and n > CT_MAX_N:
        raise UsageError(f"--method ct expands a Laurent polynomial exponentially; it is limited to n <= {CT_MAX_N}")
    if method == "brute":
        if n > BRUTE_MAX_N + 1:
            raise UsageError(f"--method brute is limited to n <= {BRUTE_MAX_N + 1}")
        return asp_genpoly(n, l, r, jobs=args.jobs)
    if method == "detsum":
        if not in_detsum_range(n, l, r):
            raise UsageError("--method detsum needs 0 <= l <= n-2 < r <= 2n-3")
        return detsum_genpoly(n, l, r)
    if method == "pfaffian":
        if not in_magog_range(n, l, r):
            raise UsageError("--method pfaffian needs 0 <= l <= n-2 < r <= 2n-3, l+r < 2n-2, r-l > n-3")
        return pfaffian_genpoly(n, l, r).exact_div(T)
    return ct_oracle(n, l, r)


def cmd_count(args) -> int:
    kind = args.object
    if kind == "asp":
        _need(args, "n", "l", "r")
        poly = _asp_poly(args)
        _emit_count(args, "asp", {"n": args.n, "l": args.l, "r": args.r}, poly(1), poly if args.by_rho else None)
    elif kind in ("ast", "asm"):
        _need(args, "n")
        if args.n < 1:
            raise UsageError("n must be positive")
        if args.n > BRUTE_MAX_N + 1:
            raise UsageError(f"{kind} enumeration is limited to n <= {BRUTE_MAX_N + 1}")
        coeffs = [0] * args.n
        if kind == "ast":
            if args.n >= 2:
                for (p, _, _), c in ast_census(args.n, args.jobs).items():
                    coeffs[p - 1] += c
            else:
                coeffs[0] = 1
        else:
            for a in enumerate_asms(args.n):
                coeffs[rho_asm(a) - 1] += 1
        poly = WeightPolynomial(coeffs)
        _emit_count(args, kind, {"n": args.n}, poly(1), poly if args.by_rho else None)
    elif kind == "gt":
        _need(args, "n")
        if not 1 <= args.n <= BRUTE_MAX_N + 1:
            raise UsageError(f"gt enumeration needs 1 <= n <= {BRUTE_MAX_N + 1}")
        _emit_count(args, "gt", {"n": args.n}, sum(1 for _ in enumerate_gt(args.n)), None)
    elif kind == "magog":
        _need(args, "n", "k", "lam")
        m = args.m or 0
        try:
            poly = magog_genpoly(m, args.n, args.k, args.lam)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit_count(args, "magog", {"m": m, "n": args.n, "k": args.k, "lambda": args.lam},
                    poly(1), poly if args.by_tau else None)
    elif kind == "gog":
        _need(args, "n", "k", "l")
        m = args.m or 0
        try:
            count = gog_count(m, args.n, args.k, args.l)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit_count(args, "gog", {"m": m, "n": args.n, "k": args.k, "l": args.l}, count, None)
    elif kind == "tuples":
        _need(args, "n", "l", "r")
        if not in_magog_range(args.n, args.l, args.r):
            raise UsageError("path tuples need 0 <= l <= n-2 < r <= 2n-3, l+r < 2n-2, r-l > n-3")
        poly = bj.tuples_genpoly(args.n, args.l, args.r)
        _emit_count(args, "tuples", {"n": args.n, "l": args.l, "r": args.r}, poly(1), poly if args.by_rho else None)
    return EXIT_OK


def _table_cell(n: int, l: int, r: int, cross: bool) -> dict[str, Any]:
    value = detsum_genpoly(n, l, r)(1)
    cell: dict[str, Any] = {"n": n, "r": r, "l": l, "computed": value}
    if cross:
        cell["brute"] = asp_genpoly(n, l, r)(1)
    return cell


def cmd_table(args) -> int:
    _need(args, "n")
    n = args.n
    if n < 2:
        raise UsageError("tables need n >= 2")
    if not 4 <= n <= 7 and not args.force:
        raise UsageError("tables are provided for 4 <= n <= 7; pass --force for other orders")
    cross = args.cross_check and n <= BRUTE_MAX_N
    grid = [(n, l, r, cross) for r in range(n - 1, 2 * n - 2) for l in range(0, n - 1)]
    cells = _run_cells(_table_cell, grid, args.jobs)
    printed = PRINTED.get(n, {})
    failed = 0
    errata = []
    for c in cells:
        key = (c["r"], c["l"])
        c["printed"] = printed.get(key)
        status = "ok"
        if "brute" in c and c["brute"] != c["computed"]:
            status = "MISMATCH"
        elif c["printed"] is not None and parse_factorization(c["printed"]) != c["computed"]:
            if ERRATA.get((n, c["r"], c["l"])) == c["computed"]:
                status = "ERRATUM"
                errata.append(c)
            else:
                status = "MISMATCH"
        elif c["printed"] is None:
            status = "unprinted"
        c["status"] = status
        failed += status == "MISMATCH"

    if args.json:
        out = [{"n": c["n"], "r": c["r"], "l": c["l"], "count": str(c["computed"]),
                "factorization": format_factorization(c["computed"], MACHINE_SEP),
                "printed": c["printed"], "status": c["status"],
                **({"brute": str(c["brute"])} if "brute" in c else {})} for c in cells]
        print(json.dumps({"n": n, "cells": out,
                          "summary": {"cells": len(cells), "mismatches": failed, "errata": len(errata)}},
                         indent=2))
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "r", "l", "count", "factorization", "printed", "brute", "status"])
        for c in cells:
            w.writerow([c["n"], c["r"], c["l"], c["computed"], format_factorization(c["computed"], MACHINE_SEP),
                        c["printed"] or "", c.get("brute", ""), c["status"]])
        sys.stdout.write(buf.getvalue())
    else:
        labels = {(c["r"], c["l"]): format_factorization(c["computed"], PRETTY_SEP) for c in cells}
        width = max(len(s) for s in labels.values())
        header = "r\\l " + " ".join(str(l).rjust(width) for l in range(n - 1))
        print(f"(n, l, r)-ASP counts, n = {n}")
        print(header)
        for r in range(n - 1, 2 * n - 2):
            print(str(r).rjust(3) + " " + " ".join(labels[(r, l)].rjust(width) for l in range(n - 1)))
        for c in errata:
            print(f"ERRATUM n={n} r={c['r']} l={c['l']}: printed {c['printed'].replace('*', PRETTY_SEP)}, "
                  f"computed {c['computed']} = {format_factorization(c['computed'], PRETTY_SEP)}")
        for c in cells:
            if c["status"] == "MISMATCH":
                print(f"MISMATCH n={n} r={c['r']} l={c['l']}: computed {c['computed']}, "
                      f"printed {c['printed']}, brute {c.get('brute')}")
        if args.cross_check and not cross:
            print(f"note: brute-force cross-check skipped for n > {BRUTE_MAX_N}")
    return EXIT_FAIL if failed else EXIT_OK


VERIFY_DEFAULT_MAX_N = {
    "main-theorem": 5, "pfaffian": 7, "lgv": 4, "bijection": 4,
    "reflection": 5, "asm-corollary": 5, "catalan": 7,
}


def build_verify_tasks(target: str, max_n: int) -> tuple[Callable, list[tuple]]:
    if target == "main-theorem":
        return cell_main_theorem, [(n, l, r) for n in range(2, max_n + 1) for l, r in magog_grid(n)]
    if target == "pfaffian":
        return cell_pfaffian, [(n, l, r) for n in range(2, max_n + 1) for l, r in magog_grid(n)]
    if target == "bijection":
        return cell_bijection, [(n, l, r) for n in range(2, max_n + 1) for l, r in magog_grid(n)]
    if target == "catalan":
        return cell_catalan, [(n,) for n in range(3, max_n + 1)]
    if target == "asm-corollary":
        return cell_asm_corollary, [(n, r) for n in range(2, max_n + 1) for r in range(0, 2 * n - 2)]
    raise UsageError(f"unknown verification target {target!r}")


def _verify_lgv(max_n: int, jobs: int) -> list[CellRecord]:
    entry_tasks = [(n, l, r) for n in range(2, max_n + 1) for l, r in magog_grid(n)]
    lgv_tasks = [(n, l, r, es) for n, l, r in entry_tasks for es in combinations(range(1, r + 2), n - 1)]
    return _run_cells(cell_entry, entry_tasks, jobs) + _run_cells(cell_lgv, lgv_tasks, jobs)


def _verify_reflection(max_n: int, jobs: int) -> list[CellRecord]:
    zero_tasks = [(n, l, r) for n in range(2, max_n + 1) for l in range(0, 2 * n - 2)
                  for r in range(l, 2 * n - 2) if r - l <= n - 3 and l + r < 2 * n - 3]
    return (_run_cells(cell_reflection, [(n,) for n in range(1, max_n + 1)], jobs)
            + _run_cells(cell_zero_asp, zero_tasks, jobs))


def run_verify(target: str, max_n: int | None = None, jobs: int = 1) -> VerificationReport:
    if target not in VERIFY_DEFAULT_MAX_N:
        raise UsageError(f"unknown verification target {target!r}; "
                         f"choose from {', '.join(VERIFY_DEFAULT_MAX_N)}")
    max_n = VERIFY_DEFAULT_MAX_N[target] if max_n is None else max_n
    if max_n < 2:
        raise UsageError("--max-n must be at least 2")
    brute_heavy = {"main-theorem", "bijection", "reflection", "asm-corollary", "lgv"}
    if target in brute_heavy and max_n > BRUTE_MAX_N:
        raise UsageError(f"{target} relies on exhaustive enumeration; --max-n is limited to {BRUTE_MAX_N}")
    rep = VerificationReport(target, {"max_n": max_n})
    if target == "lgv":
        rep.cells = _verify_lgv(max_n, jobs)
    elif target == "reflection":
        rep.cells = _verify_reflection(max_n, jobs)
    else:
        fn, tasks = build_verify_tasks(target, max_n)
        rep.cells = _run_cells(fn, tasks, jobs)
    return rep


def cmd_verify(args) -> int:
    rep = run_verify(args.target, args.max_n, args.jobs)
    print(json.dumps(report_to_json(rep), indent=2) if args.json else report_to_text(rep))
    return EXIT_OK if rep.ok else EXIT_FAIL


def run_behrend(max_n: int, jobs: int = 1) -> VerificationReport:
    if max_n < 2:
        raise UsageError("--max-n must be at least 2")
    tasks = [(n, l, r) for n in range(3, max_n + 1) for l, r in behrend_grid(n)]
    rep = VerificationReport("behrend", {"max_n": max_n}, findings_only=True)
    rep.cells = _run_cells(cell_behrend, tasks, jobs)
    return rep


def behrend_witnesses() -> list[CellRecord]:
    """Two cells just outside the sweep.

    (4, 2, 4) sits on the boundary l + r = 2n - 2 and still agrees (nine each);
    for n = 3 one Gog pentagon faces three Magog pentagons, so the range
    restriction cannot simply be dropped.
    """
    boundary = cell_behrend(4, 2, 4)
    boundary.params["note"] = "boundary"
    boundary.note = "l + r = 2n - 2"
    gog, magog = gog_count(0, 3, 2, 3), magog_genpoly(0, 3, 2, 1)(1)
    outside = CellRecord({"n": 3, "note": "outside range"},
                         {"gog(0,3,2,3)": gog, "magog(0,3,2,1)": magog},
                         gog == magog, "range restriction is necessary")
    return [boundary, outside]


def cmd_conjecture(args) -> int:
    if args.name != "behrend":
        raise UsageError(f"unknown conjecture {args.name!r}")
    rep = run_behrend(args.max_n or 6, args.jobs)
    extra = VerificationReport("behrend-witnesses", {}, behrend_witnesses(), findings_only=True)
    if args.json:
        out = report_to_json(rep)
        out["witnesses"] = report_to_json(extra)["cells"]
        print(json.dumps(out, indent=2))
    else:
        print(report_to_text(rep))
        print("witnesses outside the sweep:")
        print("\n".join(report_to_text(extra).splitlines()[:-1]))
    return EXIT_OK


def cmd_bijection_trace(args) -> int:
    if args.n is None:
        tup = bj.worked_example()
    else:
        _need(args, "n", "l", "r")
        if not in_magog_range(args.n, args.l, args.r):
            raise UsageError("path tuples need 0 <= l <= n-2 < r <= 2n-3, l+r < 2n-2, r-l > n-3")
        if args.n > BRUTE_MAX_N:
            raise UsageError(f"tuple enumeration is limited to n <= {BRUTE_MAX_N}")
        tuples = list(bj.enumerate_tuples(args.n, args.l, args.r))
        if not 0 <= args.index < len(tuples):
            raise UsageError(f"--index must lie in [0, {len(tuples) - 1}]")
        tup = tuples[args.index]
    kt = bj.shift(tup)
    g = bj.to_gt(kt)
    mp = bj.gt_to_magog(g, tup.n, tup.l, tup.r)
    if args.json:
        print(json.dumps({
            "params": {"n": tup.n, "l": tup.l, "r": tup.r},
            "paths": [p.steps for p in tup.paths],
            "endpoints": list(tup.endpoints),
            "weight": tup.weight,
            "kissing_starts": [list(p.start) for p in kt.paths],
            "gt": [list(reversed(row)) for row in g.rows],
            "magog": dumps(mp),
            "tau": tau(mp),
        }, indent=2))
        return EXIT_OK
    print(f"path tuple n={tup.n} l={tup.l} r={tup.r}, endpoints {list(tup.endpoints)}, weight {tup.weight}")
    for j, p in enumerate(tup.paths, start=1):
        print(f"  path {j}: {p.start} {p.steps or '(empty)'}")
    print("\nshifted (kissing) paths; * marks shared points:")
    print(bj.render_paths(kt.paths))
    print("\nGelfand-Tsetlin pattern:")
    print(bj.render_gt(g))
    print("\nMagog pentagon:")
    print(dumps(mp).rstrip())
    print(f"\ntau = {tau(mp)}, tau - 1 = {tau(mp) - 1}, north-ending paths = {tup.weight}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is unchanged)")
    p.add_argument("--json", action="store_true", help="machine-readable JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aspmagog", description="Count and cross-check ASPs and Magog/Gog pentagons.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count objects or evaluate a formula")
    c.add_argument("object", choices=["asp", "ast", "asm", "gt", "magog", "gog", "tuples"])
    for name in ("n", "l", "r", "k", "m"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--lambda", dest="lam", type=int)
    c.add_argument("--method", choices=["brute", "detsum", "pfaffian", "ct"])
    c.add_argument("--by-rho", action="store_true", help="report the polynomial sum of t^(rho-1)")
    c.add_argument("--by-tau", action="store_true", help="report the polynomial sum of t^(tau-1)")
    c.add_argument("--plain", action="store_true", help="bare integer (or coefficient list)")
    _common(c)
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="ASP count table with factorizations")
    t.add_argument("--n", type=int)
    t.add_argument("--cross-check", action="store_true", help="recount by brute force (n <= 6)")
    t.add_argument("--csv", action="store_true")
    t.add_argument("--force", action="store_true", help="allow orders outside 4..7")
    _common(t)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run an equality suite over a parameter grid")
    v.add_argument("target", choices=list(VERIFY_DEFAULT_MAX_N))
    v.add_argument("--max-n", type=int)
    _common(v)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("conjecture", help="compare Magog and Gog pentagon counts")
    k.add_argument("name", choices=["behrend"])
    k.add_argument("--max-n", type=int)
    _common(k)
    k.set_defaults(func=cmd_conjecture)

    b = sub.add_parser("bijection-trace", help="follow one path tuple to its Magog pentagon")
    for name in ("n", "l", "r"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--index", type=int, default=0, help="position in the tuple enumeration")
    _common(b)
    b.set_defaults(func=cmd_bijection_trace)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except (UsageError, ParamRangeError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
