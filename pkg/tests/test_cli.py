"""CLI surface: exit codes, document round-trips, witness self-checks."""

import json

from accordions import accordion, graph_from_json, verify_witness, witness_from_json
from accordions.cli import main
from accordions.serialize import graph_to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_json_roundtrip(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "accordion", "--n", "10", "--k", "5")
        assert code == 0
        g = graph_from_json(out)
        assert g == accordion(10, 5)

    def test_dot(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "circulant", "--n", "4", "--a", "1", "--b", "3",
                               "--format", "dot")
        assert code == 0
        assert out.startswith("graph {")
        assert sum(1 for line in out.splitlines() if line.endswith(";") and "--" not in line) == 8

    def test_edgelist(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "torus", "--n1", "3", "--n2", "4",
                               "--format", "edgelist")
        assert code == 0
        assert len(out.splitlines()) == 24

    def test_cyl(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "cyl", "--n1", "4", "--n2", "5")
        assert code == 0
        assert graph_from_json(out).size == 36

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "accordion", "--n", "2", "--k", "1")
        assert code == 2 and "error" in err

    def test_missing_flags_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "accordion", "--n", "5")
        assert code == 2 and "--k" in err


class TestDecide:
    def test_acc_acc_yes(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "acc-acc", "--n", "14", "--k1", "4", "--k2", "6")
        assert code == 0
        assert "branch: case-minus" in out
        assert "isomorphic: yes" in out

    def test_acc_acc_no(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "acc-acc", "--n", "10", "--k1", "2", "--k2", "4")
        assert code == 1
        assert "isomorphic: no" in out

    def test_acc_acc_witness_verifies(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "acc-acc", "--n", "14", "--k1", "4", "--k2", "6",
                               "--witness")
        assert code == 0
        doc = next(line for line in out.splitlines() if line.startswith("witness: "))
        src, tgt, vm = witness_from_json(doc.removeprefix("witness: "))
        assert verify_witness(src, tgt, vm)

    def test_ci_acc_bipartite(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-acc", "--n", "4", "--a", "1", "--b", "3",
                               "--k", "2")
        assert code == 0
        assert "regime: bipartite" in out

    def test_ci_acc_search_k(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-acc", "--n", "3", "--a", "1", "--b", "2")
        assert code == 0
        assert "matched-k: 1" in out

    def test_ci_acc_search_k_absent(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-acc", "--n", "5", "--a", "1", "--b", "3")
        assert code == 1
        assert "matched-k: none" in out

    def test_ci_acc_both_even_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "decide", "ci-acc", "--n", "6", "--a", "2", "--b", "4",
                               "--k", "2")
        assert code == 2
        assert "disconnected" in err

    def test_ci_acc_witness(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-acc", "--n", "5", "--a", "3", "--b", "4",
                               "--k", "1", "--witness")
        assert code == 0
        doc = next(line for line in out.splitlines() if line.startswith("witness: "))
        src, tgt, vm = witness_from_json(doc.removeprefix("witness: "))
        assert verify_witness(src, tgt, vm)

    def test_ci_torus(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-torus", "--nprime", "12", "--a1", "3",
                               "--a2", "4", "--n1", "3", "--n2", "4")
        assert code == 0
        assert "isomorphic: yes" in out

    def test_ci_torus_invalid_factor(self, capsys):
        code, _, err = run_cli(capsys, "decide", "ci-torus", "--nprime", "12", "--a1", "2",
                               "--a2", "3", "--n1", "2", "--n2", "3")
        assert code == 2 and "error" in err

    def test_ci_torus_witness(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-torus", "--nprime", "12", "--a1", "3",
                               "--a2", "4", "--n1", "3", "--n2", "4", "--witness")
        assert code == 0
        doc = next(line for line in out.splitlines() if line.startswith("witness: "))
        src, tgt, vm = witness_from_json(doc.removeprefix("witness: "))
        assert verify_witness(src, tgt, vm)

    def test_ci_torus_scan(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "ci-torus", "--nprime", "12", "--a1", "3",
                               "--a2", "4")
        assert code == 0
        assert "factors: 3 x 4" in out

    def test_acc_circulant(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "acc-circulant", "--n", "8", "--k", "4")
        assert code == 1
        assert "clause: none" in out

    def test_bipartite_predicate(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "bipartite", "--family", "accordion",
                               "--n", "4", "--k", "2")
        assert code == 0
        assert "bipartite: yes" in out

    def test_connected_predicate(self, capsys):
        code, out, _ = run_cli(capsys, "decide", "connected", "--family", "circulant",
                               "--n", "6", "--a", "2", "--b", "4")
        assert code == 1
        assert "connected: no" in out

    def test_witness_flag_rejected_for_predicates(self, capsys):
        code, _, err = run_cli(capsys, "decide", "bipartite", "--family", "accordion",
                               "--n", "4", "--k", "2", "--witness")
        assert code == 2 and "--witness" in err


class TestOracleCmd:
    def test_isomorphic_pair(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        c = tmp_path / "c.json"
        from accordions import circulant

        a.write_text(graph_to_json(accordion(4, 2)))
        c.write_text(graph_to_json(circulant(4, 1, 3)))
        code, out, _ = run_cli(capsys, "oracle", str(c), str(a))
        assert code == 0
        src, tgt, vm = witness_from_json(out.splitlines()[1])
        assert verify_witness(src, tgt, vm)

    def test_same_file_twice(self, capsys, tmp_path):
        f = tmp_path / "g.json"
        f.write_text(graph_to_json(accordion(5, 2)))
        code, out, _ = run_cli(capsys, "oracle", str(f), str(f))
        assert code == 0

    def test_non_isomorphic(self, capsys, tmp_path):
        from accordions import Graph, cycle_graph

        f1 = tmp_path / "c6.json"
        f2 = tmp_path / "tri2.json"
        f1.write_text(graph_to_json(cycle_graph(6)))
        f2.write_text(graph_to_json(Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))))
        code, out, _ = run_cli(capsys, "oracle", str(f1), str(f2))
        assert code == 1
        assert "isomorphic: no" in out

    def test_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("nonsense")
        good = tmp_path / "good.json"
        good.write_text(graph_to_json(accordion(3, 1)))
        code, _, err = run_cli(capsys, "oracle", str(good), str(bad))
        assert code == 2 and "error" in err

    def test_missing_file(self, capsys, tmp_path):
        good = tmp_path / "good.json"
        good.write_text(graph_to_json(accordion(3, 1)))
        code, _, err = run_cli(capsys, "oracle", str(good), str(tmp_path / "absent.json"))
        assert code == 2

    def test_budget_env_override(self, capsys, tmp_path, monkeypatch):
        f = tmp_path / "g.json"
        f.write_text(graph_to_json(accordion(8, 3)))
        monkeypatch.setenv("ACCGRAPH_NODE_BUDGET", "1")
        code, _, err = run_cli(capsys, "oracle", str(f), str(f))
        assert code == 2
        assert "exceeded" in err.lower()


class TestCensusCmd:
    def test_small_run_passes(self, capsys, tmp_path):
        out_path = tmp_path / "rows.jsonl"
        code, out, _ = run_cli(capsys, "census", "--max-n", "4", "--max-torus", "12",
                               "--out", str(out_path))
        assert code == 0
        assert "result: PASS" in out
        lines = out_path.read_text().splitlines()
        rows = [json.loads(line) for line in lines[:-1]]
        assert all(row["agree"] for row in rows)
        summary = json.loads(lines[-1])["summary"]
        assert summary["rows"] == len(rows)
        assert any(
            row["kind"] == "ci-acc" and row["params"] == {"n": 3, "a": 1, "b": 2, "k": 1}
            and row["agree"]
            for row in rows
        )

    def test_invalid_max_n(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "census", "--max-n", "2",
                               "--out", str(tmp_path / "r.jsonl"))
        assert code == 2 and "error" in err
