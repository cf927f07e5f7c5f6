import csv
import io
import json
import subprocess
import sys

import pytest

from aspmagog.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCount:
    def test_asp_by_rho(self, capsys):
        code, out, _ = run(capsys, "count", "asp", "--n", "3", "--l", "0", "--r", "2", "--by-rho")
        assert code == 0
        data = json.loads(out)
        assert data == {"object": "asp", "params": {"n": 3, "l": 0, "r": 2},
                        "genpoly": ["1", "2", "2"], "count": "5", "factorization": "5"}

    @pytest.mark.parametrize("method", ["brute", "detsum", "pfaffian", "ct"])
    def test_methods_agree(self, capsys, method):
        code, out, _ = run(capsys, "count", "asp", "--n", "4", "--l", "1", "--r", "4", "--by-rho", "--method", method)
        assert code == 0
        data = json.loads(out)
        assert data["count"] == "28" and data["factorization"] == "2^2*7"

    def test_gog_unique(self, capsys):
        code, out, _ = run(capsys, "count", "gog", "--n", "3", "--k", "2", "--l", "3", "--plain")
        assert (code, out.strip()) == (0, "1")

    def test_magog_by_tau(self, capsys):
        code, out, _ = run(capsys, "count", "magog", "--n", "3", "--k", "1", "--lambda", "2", "--by-tau")
        assert code == 0 and json.loads(out)["genpoly"] == ["1", "2", "2"]

    def test_other_objects(self, capsys):
        assert run(capsys, "count", "ast", "--n", "5", "--plain")[1].strip() == "429"
        assert run(capsys, "count", "asm", "--n", "4", "--plain")[1].strip() == "42"
        assert run(capsys, "count", "gt", "--n", "4", "--plain")[1].strip() == "42"
        assert run(capsys, "count", "tuples", "--n", "3", "--l", "0", "--r", "2", "--by-rho", "--plain")[1].strip() == "1 2 2"
        _, out, _ = run(capsys, "count", "ast", "--n", "3", "--by-rho")
        assert json.loads(out)["genpoly"] == ["2", "3", "2"]

    @pytest.mark.parametrize("argv", [
        ["count", "asp", "--n", "1", "--l", "0", "--r", "0"],
        ["count", "asp", "--n", "5", "--l", "0", "--r", "4", "--method", "ct"],
        ["count", "asp", "--n", "4", "--l", "2", "--r", "5", "--method", "pfaffian"],
        ["count", "asp", "--n", "3", "--l", "0"],
        ["count", "magog", "--m", "1", "--n", "3", "--k", "2", "--lambda", "3"],
        ["count", "tuples", "--n", "4", "--l", "2", "--r", "5"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == "" and "error" in err

    def test_argparse_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "bogus"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["verify", "main-theorem", "--jobs", "0"])
        assert exc.value.code == 2


class TestTable:
    def test_n4_pretty(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "4")
        assert code == 0
        assert "ERRATUM n=4 r=5 l=1: printed 5·73, computed 35 = 5·7" in out
        assert "MISMATCH" not in out
        assert "2²" not in out and "2^2·7" in out

    def test_n6_json_with_cross_check(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "6", "--cross-check", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["summary"] == {"cells": 25, "mismatches": 0, "errata": 1}
        cell = next(c for c in data["cells"] if (c["r"], c["l"]) == (8, 3))
        assert cell["count"] == "1375" and cell["brute"] == "1375" and cell["status"] == "ERRATUM"
        assert cell["factorization"] == "5^3*11"
        corner = next(c for c in data["cells"] if (c["r"], c["l"]) == (7, 0))
        assert corner["factorization"] == "2*11*13*17"

    def test_n7_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "7", "--csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        cell = next(r for r in rows if (r["r"], r["l"]) == ("6", "0"))
        assert cell["count"] == "429" and cell["factorization"] == "3*11*13"
        assert all(r["status"] in ("ok", "unprinted") for r in rows)

    def test_range_guard(self, capsys):
        assert run(capsys, "table", "--n", "8")[0] == 2
        assert run(capsys, "table", "--n", "3", "--force")[0] == 0

    def test_mismatch_exits_1(self, capsys, monkeypatch):
        import aspmagog.cli as cli
        corrupted = {n: dict(cells) for n, cells in cli.PRINTED.items()}
        corrupted[4][(3, 0)] = "2*3"
        monkeypatch.setattr(cli, "PRINTED", corrupted)
        code, out, _ = run(capsys, "table", "--n", "4")
        assert code == 1 and "MISMATCH n=4 r=3 l=0" in out

    def test_jobs_do_not_change_output(self, capsys):
        one = run(capsys, "table", "--n", "5", "--cross-check", "--json")
        two = run(capsys, "table", "--n", "5", "--cross-check", "--json", "--jobs", "2")
        assert one == two


class TestVerify:
    @pytest.mark.parametrize("target", ["main-theorem", "pfaffian", "lgv", "bijection", "reflection",
                                        "asm-corollary", "catalan"])
    def test_targets_pass(self, capsys, target):
        max_n = {"pfaffian": "6", "catalan": "6"}.get(target, "4")
        code, out, _ = run(capsys, "verify", target, "--max-n", max_n, "--json")
        data = json.loads(out)
        assert code == 0 and data["summary"]["failed"] == 0 and data["summary"]["checked"] > 0

    def test_catalan_values(self, capsys):
        code, out, _ = run(capsys, "verify", "catalan", "--max-n", "7", "--json")
        cells = json.loads(out)["cells"]
        assert code == 0
        assert [c["params"]["n"] for c in cells] == [3, 4, 5, 6, 7]
        assert [c["values"]["detsum"] for c in cells] == ["5", "14", "42", "132", "429"]
        assert all(len(set(c["values"].values())) == 1 for c in cells)

    def test_text_report_and_determinism(self, capsys):
        a = run(capsys, "verify", "reflection", "--max-n", "4")
        b = run(capsys, "verify", "reflection", "--max-n", "4", "--jobs", "2")
        assert a == b and a[0] == 0

    def test_failed_cell_exits_1(self, capsys, monkeypatch):
        import aspmagog.cli as cli
        monkeypatch.setattr(cli, "cell_catalan", lambda n: cli.CellRecord({"n": n}, {"x": 1, "y": 2}, False))
        code, out, _ = run(capsys, "verify", "catalan", "--max-n", "4", "--json")
        assert code == 1 and json.loads(out)["summary"]["failed"] == 2

    def test_bad_max_n(self, capsys):
        assert run(capsys, "verify", "main-theorem", "--max-n", "9")[0] == 2


class TestConjecture:
    def test_behrend_json(self, capsys):
        code, out, _ = run(capsys, "conjecture", "behrend", "--max-n", "5", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["summary"]["failed"] == 0
        boundary, outside = data["witnesses"]
        assert boundary["agree"] and set(boundary["values"].values()) == {"9"}
        assert not outside["agree"]

    def test_behrend_text(self, capsys):
        code, out, _ = run(capsys, "conjecture", "behrend", "--max-n", "4")
        assert code == 0 and "witnesses outside the sweep" in out


class TestTrace:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "bijection-trace", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["params"] == {"n": 10, "l": 1, "r": 12}
        assert data["weight"] == 4 and data["tau"] == 5
        assert data["magog"].startswith("MAGOG 0 10 4 11\n1 2 2 4 5 6 7 7 8 9\n")
        assert data["gt"][-1] == [1, 1, 1, 1, 1, 1, 3, 5, 7, 9]

    def test_small_text(self, capsys):
        code, out, _ = run(capsys, "bijection-trace", "--n", "3", "--l", "0", "--r", "2", "--index", "4")
        assert code == 0 and "Magog pentagon:" in out and "tau =" in out

    def test_bad_index(self, capsys):
        assert run(capsys, "bijection-trace", "--n", "3", "--l", "0", "--r", "2", "--index", "5")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "aspmagog", "count", "gog", "--n", "4", "--k", "2", "--l", "3", "--plain"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "9"
