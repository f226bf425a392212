from __future__ import annotations

import json
import subprocess
import sys

import pytest

from unicore.cli import main
from unicore.graph import GraphClass, classify, parse_graph


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze_json(capsys, *argv: str) -> dict:
    code, out, _ = run(capsys, "analyze", "--json", *argv)
    assert code == 0
    return json.loads(out)


class TestAnalyze:
    def test_fig1(self, capsys):
        r = analyze_json(capsys, "--fixture", "fig1_G")
        assert (r["n"], r["alpha"], r["mu"], r["koenig_egervary"], r["core"]) == (7, 4, 3, True, ["a", "b", "c"])
        assert r["class"] == "Unicyclic"

    def test_fig2(self, capsys):
        r = analyze_json(capsys, "--fixture", "fig2_G")
        assert (r["alpha"], r["mu"], r["koenig_egervary"], r["core"]) == (5, 4, False, ["a", "b"])
        assert r["method"] == "StructuralDecomposition"
        assert r["certificate"] == {"x": ["a", "b"]}
        assert sorted(r["cycle"]) == ["c", "d", "t", "w", "y"]
        assert r["n1"] == ["x"]
        assert len(r["alpha_critical_cycle_edges"]) == 5

    def test_single_edge_file(self, capsys, tmp_path):
        path = tmp_path / "k2.txt"
        path.write_text("a b\n")
        r = analyze_json(capsys, str(path))
        assert (r["n"], r["alpha"], r["mu"], r["koenig_egervary"], r["core"]) == (2, 1, 1, True, [])
        assert r["cycle"] is r["n1"] is r["certificate"] is None

    def test_text_mirrors_json(self, capsys):
        _, text, _ = run(capsys, "analyze", "--fixture", "fig2_G")
        fields = dict(line.split(": ", 1) if ": " in line else (line.rstrip(":"), "") for line in text.splitlines())
        r = analyze_json(capsys, "--fixture", "fig2_G")
        assert set(fields) == set(r)
        assert fields["core"] == "a b"
        assert fields["koenig_egervary"] == "false"

    def test_json_byte_identical(self, capsys):
        first = run(capsys, "analyze", "--json", "--fixture", "fig2_G")
        second = run(capsys, "analyze", "--json", "--fixture", "fig2_G")
        assert first == second
        assert first[1] == json.dumps(json.loads(first[1]), sort_keys=True) + "\n"

    @pytest.mark.parametrize("method", ["structural", "deletion", "both"])
    def test_methods_agree_on_core(self, capsys, method):
        r = analyze_json(capsys, "--fixture", "fig2_G", "--method", method)
        assert r["core"] == ["a", "b"]

    def test_deletion_method_tag(self, capsys):
        assert analyze_json(capsys, "--fixture", "fig2_G", "--method", "deletion")["method"] == "VertexDeletion"

    def test_both_on_ke_graph(self, capsys):
        code, _, _ = run(capsys, "analyze", "--method", "both", "--fixture", "fig4_H2")
        assert code == 0


class TestExitCodes:
    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("a a\n")
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 1 and "error" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "analyze", str(tmp_path / "nope.txt"))[0] == 1

    def test_no_input(self, capsys):
        assert run(capsys, "analyze")[0] == 1

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["analyze", "--method", "bogus"])
        assert info.value.code == 1

    def test_unsupported_class(self, capsys, tmp_path):
        path = tmp_path / "k4.txt"
        path.write_text("a b\na c\na d\nb c\nb d\nc d\n")
        assert run(capsys, "analyze", str(path))[0] == 2

    def test_mismatch(self, capsys, monkeypatch):
        from unicore import cli
        from unicore.core import CoreResult, Method

        monkeypatch.setattr(
            cli, "cores_agree",
            lambda g: (False, CoreResult(frozenset("a"), Method.STRUCTURAL_DECOMPOSITION),
                       CoreResult(frozenset(), Method.VERTEX_DELETION)),
        )
        code, _, err = run(capsys, "analyze", "--method", "both", "--fixture", "fig2_G")
        assert code == 3 and "mismatch" in err


class TestCritical:
    def test_fig2(self, capsys):
        code, out, _ = run(capsys, "critical", "--fixture", "fig2_G")
        assert code == 0
        assert "critical: 5/5" in out.splitlines()
        assert "koenig_egervary: false" in out and "equivalence_holds: true" in out

    def test_c4(self, capsys, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("1 2\n2 3\n3 4\n4 1\n")
        code, out, _ = run(capsys, "critical", str(path))
        assert code == 0
        assert out.count("not-critical") == 4
        assert "critical: 0/4" in out and "koenig_egervary: true" in out

    def test_paw_json(self, capsys, tmp_path):
        path = tmp_path / "paw.txt"
        path.write_text("a b\nb c\nc a\na d\n")
        code, out, _ = run(capsys, "critical", "--json", str(path))
        r = json.loads(out)
        assert code == 0
        # alpha=2, mu=2, n=4: KE, and only bc is critical
        assert r["koenig_egervary"] is True and r["equivalence_holds"] is True
        assert [e for e in r["cycle_edges"] if e[2]] == [["b", "c", True]]
        assert r["total"] == 3

    def test_not_unicyclic(self, capsys, tmp_path):
        path = tmp_path / "p3.txt"
        path.write_text("a b\nb c\n")
        assert run(capsys, "critical", str(path))[0] == 2


class TestGen:
    def test_triangle(self, capsys):
        code, out, _ = run(capsys, "gen", "--kind", "unicyclic", "--n", "3", "--seed", "0")
        g = parse_graph(out)
        assert code == 0 and g.n == 3 and g.m == 3

    def test_single_vertex(self, capsys):
        _, out, _ = run(capsys, "gen", "--kind", "tree", "--n", "1", "--seed", "0")
        g = parse_graph(out)
        assert g.n == 1 and g.m == 0

    def test_round_trip(self, capsys, tmp_path):
        path = tmp_path / "u50.txt"
        assert run(capsys, "gen", "--kind", "unicyclic", "--n", "50", "--seed", "5", "--out", str(path))[0] == 0
        assert classify(parse_graph(path.read_text())) is GraphClass.UNICYCLIC
        r = analyze_json(capsys, str(path))
        assert r["class"] == "Unicyclic" and r["n"] == 50

    def test_header_records_provenance(self, capsys):
        _, out, _ = run(capsys, "gen", "--kind", "tree", "--n", "6", "--seed", "3")
        header = [line for line in out.splitlines() if line.startswith("#")]
        assert any("seed=3" in line for line in header)

    def test_bad_spec(self, capsys):
        assert run(capsys, "gen", "--kind", "unicyclic", "--n", "2")[0] == 1


class TestVerify:
    def test_forced_triangle(self, capsys):
        code, out, _ = run(capsys, "verify", "--count", "1", "--max-n", "3", "--kind", "unicyclic")
        assert code == 0
        assert "passed: 1" in out and "koenig_egervary: 0" in out

    def test_jobs_match_sequential(self, capsys):
        args = ["verify", "--count", "40", "--max-n", "12", "--seed", "11"]
        assert run(capsys, *args) == run(capsys, *args, "--jobs", "3")

    def test_oracle_limit_validated(self, capsys):
        assert run(capsys, "verify", "--oracle-limit", "25")[0] == 1
        assert run(capsys, "verify", "--count", "0")[0] == 1

    def test_env_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("UNICORE_ORACLE_LIMIT", "5")
        _, out, _ = run(capsys, "verify", "--count", "10", "--max-n", "8", "--kind", "tree", "--seed", "4")
        checked = int(next(l for l in out.splitlines() if l.startswith("oracle_checked")).split(": ")[1])
        assert checked < 10


def test_module_entry_point_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "unicore", "analyze", "--json", "-"],
        input="a b\nb c\n", capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["core"] == ["a", "c"]
