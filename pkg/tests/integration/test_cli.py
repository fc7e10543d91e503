# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command-line integration tests."""

import logging

import pytest
from helpers import run_cli, run_json

import cli
from formats import read_graph, read_hypergraph
from instances import ScanReport, Violation, named

logger = logging.getLogger(__name__)


class TestCommands:
    """Integration tests for each subcommand."""

    def test_instance_and_solve(self, tmp_path, capsys):
        """A named instance is written and solved with a JSON run report."""
        path = tmp_path / "h8.hg"
        code, out, _ = run_cli(capsys, "instance", "h8", "-o", path)
        assert code == 0
        assert read_hypergraph(path) == named("h8")

        code, report = run_json(capsys, "solve", path)
        assert code == 0
        assert report["command"] == "solve"
        assert report["result"]["tau"] == 3
        assert list(report["inputs"]) == [str(path)]

    def test_solve_constraints(self, tmp_path, capsys):
        """Constrained and canonical solving are exposed."""
        path = tmp_path / "p.hg"
        path.write_text("4 2\n0 1\n2 3\n")
        code, report = run_json(capsys, "solve", path, "--include", "0,1")
        assert (code, report["result"]["tau"]) == (0, 3)
        code, report = run_json(capsys, "solve", path, "--forbid", "0,2")
        assert report["result"]["witness"] == [1, 3]
        code, report = run_json(capsys, "solve", path, "--canonical")
        assert report["result"]["witness"] == [0, 2]
        code, report = run_json(capsys, "solve", path, "--engine", "brute")
        assert (code, report["result"]["tau"]) == (0, 2)
        assert report["result"]["witness"] == [0, 2]

    def test_solve_engine_and_lists(self, tmp_path, capsys):
        """Constraints need the bnb engine, and vertex lists are comma-separated."""
        path = tmp_path / "p.hg"
        path.write_text("4 2\n0 1\n2 3\n")
        code, _, err = run_cli(capsys, "solve", path, "--engine", "brute", "--include", "0")
        assert code == 2
        assert "bnb engine" in err
        assert run_cli(capsys, "solve", path, "--include", "0,x")[0] == 2
        assert run_cli(capsys, "solve", path, "--engine", "sat")[0] == 2
        assert run_cli(capsys, "solve", path, "--include", "0", "1")[0] == 2

    def test_instance_text(self, capsys):
        """Without -o the instance is printed."""
        code, out, _ = run_cli(capsys, "instance", "h4")
        assert code == 0
        assert out == "4 1\n0 1 2 3\n"

    def test_bound_equality(self, tmp_path, capsys):
        """H8 meets the three-eighths bound with equality."""
        path = tmp_path / "h8.hg"
        run_cli(capsys, "instance", "h8", "-o", path)
        code, out, _ = run_cli(capsys, "bound", path, "--theorem", "t3")
        assert code == 0
        assert out.splitlines() == ["T3_three_eighths: 24 <= 24 holds (equality)"]

    def test_bound_hypothesis(self, tmp_path, capsys):
        """A failed hypothesis is a usage error."""
        path = tmp_path / "h6.hg"
        run_cli(capsys, "instance", "h6", "-o", path)
        code, _, err = run_cli(capsys, "bound", path, "--theorem", "t3")
        assert code == 2
        assert "3-regular" in err

    def test_certify(self, tmp_path, capsys):
        """Every applicable inequality is reported."""
        path = tmp_path / "h6.hg"
        run_cli(capsys, "instance", "h6", "-o", path)
        code, report = run_json(capsys, "certify", path)
        assert code == 0
        theorems = [r["theorem"] for r in report["result"]["reports"]]
        assert theorems == ["T1_phi", "T2_quarter_sixth", "CM_6tau", "TY_21"]
        cm = report["result"]["reports"][2]
        assert cm["equality_diagnosis"] == "all components H4/H6"

    def test_node_budget(self, tmp_path, capsys):
        """Running out of nodes is reported as unsupported."""
        path = tmp_path / "f7bar.hg"
        run_cli(capsys, "instance", "f7bar", "-o", path)
        code, _, err = run_cli(capsys, "--node-budget", 1, "solve", path)
        assert code == 3
        assert "node budget" in err

    def test_gen_b(self, tmp_path, capsys):
        """Members and certificates are written per order."""
        out = tmp_path / "b"
        code, report = run_json(capsys, "gen-b", "--max-n", 6, "--out", out)
        assert code == 0
        assert report["result"]["by_order"] == {"2": 1, "4": 1, "5": 1, "6": 2}
        assert len(list(out.glob("*.hg"))) == 5
        assert len(list(out.glob("*.cert"))) == 5

    def test_verify_lemma5(self, capsys):
        """Every member up to seven vertices passes."""
        code, report = run_json(capsys, "verify-lemma5", "--max-n", 7)
        assert code == 0
        assert (report["result"]["members"], report["result"]["failed"]) == (7, 0)

    def test_verify_lemma5_parallel(self, capsys):
        """Parallel verification gives the same reports."""
        _, serial = run_json(capsys, "verify-lemma5", "--max-n", 6)
        _, parallel = run_json(capsys, "verify-lemma5", "--max-n", 6, "--jobs", 2)
        assert serial["result"] == parallel["result"]

    def test_random(self, tmp_path, capsys):
        """Random instances are reproducible from the seed."""
        _, first = run_json(capsys, "random", "--n", 8, "--regular", 3, "--seed", 4)
        _, second = run_json(capsys, "random", "--n", 8, "--regular", 3, "--seed", 4)
        assert first["result"] == second["result"]
        assert first["result"]["m"] == 6

        path = tmp_path / "lin.hg"
        code, _, _ = run_cli(capsys, "random", "--n", 13, "--linear", "--seed", 1, "-o", path)
        assert code == 0
        assert read_hypergraph(path).n == 13

    def test_onh_and_gammat(self, tmp_path, capsys):
        """The neighborhood hypergraph and total domination of the Heawood complement."""
        graph = tmp_path / "hc.gr"
        run_cli(capsys, "instance", "heawood_complement", "-o", graph)
        assert read_graph(graph).number_of_edges() == 28

        onh_path = tmp_path / "hc.hg"
        code, report = run_json(capsys, "onh", graph, "-o", onh_path)
        assert code == 0
        assert (report["result"]["n"], report["result"]["m"]) == (14, 14)
        assert all(len(edge) == 4 for edge in read_hypergraph(onh_path).edges)

        code, report = run_json(capsys, "gammat", graph, "--pipeline")
        assert code == 0
        assert report["result"]["gamma_t"] == 6
        assert report["result"]["pipeline"]["size"] <= 6
        assert report["result"]["bound"]["equality_diagnosis"].startswith("isomorphic")

    def test_gammat_plain(self, tmp_path, capsys):
        """Without the pipeline only the value is computed."""
        graph = tmp_path / "c4.gr"
        graph.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
        code, out, _ = run_cli(capsys, "gammat", graph)
        assert (code, out) == (0, "gamma_t = 2\n")

    def test_scan(self, tmp_path, capsys):
        """A small scan reports its instances and writes artifacts only for violations."""
        code, report = run_json(capsys, "scan", "c2", "--n", 12, "--seeds", "0..9", "--out", tmp_path / "art")
        assert report["result"]["instances"] == 10
        flagged = report["result"]["violations"] or report["result"]["disagreements"]
        assert code == (1 if flagged else 0)
        assert (tmp_path / "art").exists() == bool(report["result"]["violations"])

    def test_scan_disagreement_fails(self, tmp_path, capsys, monkeypatch):
        """A solver disagreement is reported and fails the scan."""
        h8 = named("h8")
        disagreement = Violation(3, h8, 3, 2)
        scanned = ScanReport("c3", 1, disagreements=(disagreement,))
        monkeypatch.setattr(cli, "scan_conjectures", lambda *args, **kwargs: scanned)
        code, report = run_json(capsys, "scan", "c3", "--n", 8, "--seeds", "3..3", "--out", tmp_path / "art")
        assert code == 1
        assert report["result"]["disagreements"] == [{"seed": 3, "digest": h8.digest(), "tau": 3, "tau_bruteforce": 2}]
        assert not (tmp_path / "art").exists()


class TestUsage:
    """Integration tests for usage errors and exit codes."""

    def test_version(self, capsys):
        """--version exits cleanly."""
        code, out, _ = run_cli(capsys, "--version")
        assert code == 0
        assert out.startswith("transversal-lab ")

    def test_unknown_command(self, capsys):
        """Unknown commands are usage errors."""
        assert run_cli(capsys, "frobnicate")[0] == 2

    @pytest.mark.parametrize("seeds", ["5..1", "abc", "1-4"])
    def test_bad_seed_range(self, capsys, seeds):
        """Seed ranges must be A..B with A <= B."""
        assert run_cli(capsys, "scan", "c3", "--n", 10, "--seeds", seeds)[0] == 2

    def test_missing_file(self, tmp_path, capsys):
        """A missing input is a usage error."""
        code, _, err = run_cli(capsys, "solve", tmp_path / "missing.hg")
        assert code == 2
        assert "missing.hg" in err

    def test_malformed_file(self, tmp_path, capsys):
        """A malformed input names the offending line."""
        path = tmp_path / "bad.hg"
        path.write_text("3 1\n0 one\n")
        code, _, err = run_cli(capsys, "solve", path)
        assert code == 2
        assert "line 2" in err

    def test_unknown_instance(self, capsys):
        """Unknown instance names are usage errors."""
        assert run_cli(capsys, "instance", "h12")[0] == 2

    def test_invalid_environment(self, monkeypatch, capsys):
        """Invalid environment settings are usage errors."""
        monkeypatch.setenv("TRANSVERSAL_LAB_JOBS", "0")
        code, _, err = run_cli(capsys, "instance", "h2")
        assert code == 2
        assert "TRANSVERSAL_LAB_JOBS" in err

    def test_isolated_vertex(self, tmp_path, capsys):
        """Graphs with isolated vertices have no total dominating set."""
        path = tmp_path / "iso.gr"
        path.write_text("3 1\n0 1\n")
        assert run_cli(capsys, "gammat", path)[0] == 2

