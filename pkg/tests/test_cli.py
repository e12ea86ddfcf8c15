import json

import pytest

from kostant.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPlay:
    def test_a2_text_trace(self, capsys):
        code, out, _ = run(
            capsys, "play", "--type", "A2", "--active", "1,2", "--strategy", "lowest"
        )
        assert code == 0
        assert "step 1: fire 1 -> (1, 0)" in out
        assert "step 2: fire 2 -> (1, 2)" in out
        assert out.strip().endswith("terminal: (2, 2)")

    def test_json_trace(self, capsys):
        code, out, _ = run(
            capsys, "play", "--type", "A2", "--active", "1,2", "--emit", "json"
        )
        data = json.loads(out)
        assert data["final"] == [2, 2]
        assert data["moves"] == [1, 2, 1]

    def test_classical_initial(self, capsys):
        code, out, _ = run(
            capsys, "play", "--type", "F4", "--initial", "1,0,0,0"
        )
        assert code == 0
        assert out.strip().endswith("terminal: (2, 3, 4, 2)")

    def test_divergence_reported(self, capsys):
        spec = {
            "n": 5,
            "edges": [{"from": 1, "to": k} for k in (2, 3, 4, 5)],
            "label": "affine",
        }
        path = None
        import tempfile, os

        with tempfile.NamedTemporaryFile(
            "w", suffix=".json", delete=False
        ) as fh:
            json.dump(spec, fh)
            path = fh.name
        try:
            code, out, _ = run(
                capsys,
                "play",
                "--diagram-file",
                path,
                "--initial",
                "1,1,1,1,1",
                "--steps",
                "100",
            )
            assert code == 0
            assert "diverged" in out
        finally:
            os.unlink(path)

    def test_active_and_inactive_conflict(self, capsys):
        code, _, err = run(
            capsys, "play", "--type", "A2", "--active", "1", "--inactive", "2"
        )
        assert code == 2
        assert "not both" in err


class TestRoots:
    def test_text_listing(self, capsys):
        code, out, _ = run(capsys, "roots", "--type", "A2")
        assert code == 0
        assert "3 positive roots" in out

    def test_coroots_json(self, capsys):
        code, out, _ = run(
            capsys, "roots", "--type", "B2", "--coroots", "--emit", "json"
        )
        assert json.loads(out) == [[0, 1], [1, 0], [1, 1], [2, 1]]


class TestGraphAndDfa:
    def test_graph_dot(self, capsys):
        code, out, _ = run(
            capsys, "graph", "--type", "A2", "--active", "1,2", "--emit", "dot"
        )
        assert code == 0
        assert out.startswith("digraph")
        assert out.count("->") == 6  # one arrow per legal fire

    def test_dfa_dot_has_four_states(self, capsys):
        code, out, _ = run(
            capsys, "dfa", "--type", "A2", "--inactive", "1", "--emit", "dot"
        )
        assert out.count("label=") >= 4
        assert out.count("doublecircle") == 3

    def test_dfa_words(self, capsys):
        code, out, _ = run(
            capsys, "dfa", "--type", "A2", "--inactive", "1", "--emit", "words"
        )
        assert out.splitlines() == ["<empty>", "s2", "s2s1"]

    def test_dfa_json_minimized(self, capsys):
        code, out, _ = run(
            capsys,
            "dfa", "--type", "A3", "--active", "2", "--emit", "json", "--minimize",
        )
        data = json.loads(out)
        assert set(data) == {"states", "trap", "start", "delta", "accepting"}


class TestSyt:
    def test_sequence_to_tableau(self, capsys):
        code, out, _ = run(
            capsys, "syt", "--n", "4", "--k", "2", "--seq", "2,1,3,2"
        )
        assert out.splitlines() == ["1 3", "2 4"]

    def test_tableau_to_sequence(self, capsys):
        code, out, _ = run(
            capsys, "syt", "--n", "4", "--k", "2", "--tableau", "1,2;3,4"
        )
        assert out.strip() == "2,3,1,2"

    def test_count(self, capsys):
        code, out, _ = run(capsys, "syt", "--count", "3,2")
        assert out.strip() == "5"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "syt", "--list", "2,2")
        data = json.loads(out)
        assert sorted(t["rows"] for t in data) == [
            [[1, 2], [3, 4]],
            [[1, 3], [2, 4]],
        ]


class TestMukai:
    def test_datum(self, capsys):
        code, out, _ = run(
            capsys, "mukai", "--type", "A2", "--delta-p", "2"
        )
        data = json.loads(out)
        assert data["picard"] == 1
        assert data["index_gcd"] == 3
        assert data["mukai"]["holds"] is True

    def test_sweep_csv(self, capsys):
        code, out, _ = run(capsys, "mukai", "--sweep", "--max-rank", "2")
        lines = out.strip().splitlines()
        assert lines[0].startswith("diagram,label,")
        assert code == 0


class TestVerify:
    def test_bijection_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "bijection", "--max-rank", "2")
        assert code == 0
        assert "10 cases checked, ok" in out

    def test_root_counting_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "root-counting", "--max-rank", "3")
        assert code == 0
        assert "cases checked, ok" in out

    def test_syt_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "syt-bijection", "--max-n", "4")
        assert code == 0


class TestPlumbing:
    def test_usage_error_is_exit_two(self, capsys):
        code, _, err = run(capsys, "roots", "--type", "Z9")
        assert code == 2
        assert "error:" in err

    def test_out_writes_a_file(self, tmp_path, capsys):
        target = tmp_path / "roots.json"
        code, out, _ = run(
            capsys,
            "roots", "--type", "A2", "--emit", "json", "--out", str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text()) == [[0, 1], [1, 0], [1, 1]]

    def test_byte_determinism(self, capsys):
        _, first, _ = run(
            capsys, "play", "--type", "D4", "--active", "1,2,3,4",
            "--strategy", "random", "--seed", "42", "--emit", "json",
        )
        _, second, _ = run(
            capsys, "play", "--type", "D4", "--active", "1,2,3,4",
            "--strategy", "random", "--seed", "42", "--emit", "json",
        )
        assert first == second

    def test_diagram_file_roundtrip(self, tmp_path, capsys):
        from kostant.diagram import catalog_diagram

        path = tmp_path / "g2.json"
        path.write_text(catalog_diagram("G", 2).to_json())
        code, out, _ = run(capsys, "roots", "--diagram-file", str(path))
        assert code == 0
        assert "6 positive roots" in out
