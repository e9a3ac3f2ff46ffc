from __future__ import annotations

import json

import pytest

from shifted_crystals.cli import run


@pytest.fixture()
def invoke(capsys):
    def _invoke(*argv):
        status = run(list(argv))
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return _invoke


class TestApply:
    def test_primed_lowering(self, invoke):
        status, out, _ = invoke("apply", "--op", "F'", "--index", "1", "--word", "211", "--n", "2")
        assert (status, out) == (0, "212'\n")

    def test_undefined_reports_type(self, invoke):
        status, out, _ = invoke("apply", "--op", "F", "--index", "1", "--word", "2112", "--n", "2")
        assert (status, out) == (0, "undefined (type 5F at position 3)\n")

    def test_undefined_without_critical_substring(self, invoke):
        status, out, _ = invoke("apply", "--op", "F", "--index", "1", "--word", "2", "--n", "2")
        assert (status, out) == (0, "undefined (no critical substring)\n")

    def test_primed_undefined(self, invoke):
        status, out, _ = invoke("apply", "--op", "F'", "--index", "1", "--word", "212'2", "--n", "2")
        assert (status, out) == (0, "undefined (no qualifying representative)\n")

    def test_tableau_file(self, invoke, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("1 1\n2\n")
        status, out, _ = invoke("apply", "--op", "F'", "--index", "1", "--tableau-file", str(path), "--n", "2")
        assert (status, out) == (0, "1 2'\n2\n")

    def test_needs_word_or_file(self, invoke):
        status, _, err = invoke("apply", "--op", "F", "--index", "1", "--n", "2")
        assert status == 2 and "word" in err


class TestWalk:
    def test_trace(self, invoke):
        status, out, _ = invoke("walk", "--index", "1", "--word", "211'12'22'1'1'", "--n", "2")
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "2 (0,0)->(0,1) N"
        assert lines[-1] == "endpoint (3,2)"

    def test_golden(self, invoke):
        status, out, _ = invoke("walk", "--index", "1", "--word", "11", "--n", "2")
        assert out == "1 (0,0)->(1,0) E\n1 (1,0)->(2,0) E\nendpoint (2,0)\n"


class TestSmallVerbs:
    def test_std(self, invoke):
        status, out, _ = invoke("std", "--word", "3111'21'12'", "--n", "3")
        assert (status, out) == (0, "8 3 4 2 7 1 5 6\n")

    def test_eta(self, invoke):
        status, out, _ = invoke("eta", "--word", "33'122'132", "--n", "3")
        assert (status, out) == (0, "113223'1'2'\n")

    def test_enumerate(self, invoke):
        status, out, _ = invoke("enumerate", "--outer", "2,1", "--n", "2")
        assert (status, out) == (0, "211\n212'\n")

    def test_enumerate_json(self, invoke):
        status, out, _ = invoke("enumerate", "--outer", "2,1", "--n", "2", "--format", "json")
        data = json.loads(out)
        assert [d["word"] for d in data] == ["211", "212'"]
        assert data[0]["weight"] == [2, 1]

    def test_bad_shape_surfaces_library_error(self, invoke):
        status, _, err = invoke("enumerate", "--outer", "3,3", "--n", "2")
        assert status == 1 and "strict" in err


class TestGraphVerb:
    def test_text_summary(self, invoke):
        status, out, _ = invoke("graph", "--outer", "2,1", "--n", "2")
        lines = out.splitlines()
        assert lines[0] == "vertices 2 edges 1 components 1"
        assert "0 -1'-> 1" in lines

    def test_dot(self, invoke):
        status, out, _ = invoke("graph", "--outer", "2,1", "--n", "2", "--format", "dot")
        assert out.startswith("digraph crystal {")
        assert 'style=dashed' in out

    def test_json_and_out_file(self, invoke, tmp_path):
        path = tmp_path / "g.json"
        status, out, _ = invoke("graph", "--outer", "2,1", "--n", "2", "--format", "json", "--out", str(path))
        assert status == 0 and out == ""
        data = json.loads(path.read_text())
        assert len(data["vertices"]) == 2 and len(data["edges"]) == 1


class TestCheckVerb:
    def test_pass_exit_zero(self, invoke):
        status, out, _ = invoke("check", "--outer", "3,1", "--n", "3")
        assert status == 0
        assert "total violations: 0" in out

    def test_selected_axioms(self, invoke):
        status, out, _ = invoke("check", "--outer", "2,1", "--n", "2", "--axioms", "B1,K")
        assert status == 0
        assert "B1" in out and "A5" not in out

    def test_unknown_axiom(self, invoke):
        status, _, err = invoke("check", "--outer", "2,1", "--n", "2", "--axioms", "B9")
        assert status == 2

    def test_graph_file_round_trip(self, invoke, tmp_path, graph_cache):
        from shifted_crystals import export_json

        path = tmp_path / "g.json"
        path.write_text(export_json(graph_cache((3, 1), (), 3)))
        status, out, _ = invoke("check", "--graph-file", str(path))
        assert status == 0 and "total violations: 0" in out

    def test_violations_exit_one(self, invoke, tmp_path):
        bad = {
            "n": 2,
            "vertices": [{"id": 0, "word": None, "weight": [1, 0]}, {"id": 1, "word": None, "weight": [1, 0]}],
            "edges": [{"src": 0, "dst": 1, "index": 1, "primed": True}],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        status, out, _ = invoke("check", "--graph-file", str(path))
        assert status == 1
        assert "FAIL" in out

    def test_malformed_exit_two(self, invoke, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{oops")
        status, _, err = invoke("check", "--graph-file", str(path))
        assert status == 2


class TestExpandVerb:
    def test_golden(self, invoke):
        status, out, _ = invoke("expand", "--outer", "2,1", "--n", "2")
        assert (status, out) == (0, "[(2,1)] x1 ; identity OK\n")

    def test_json(self, invoke):
        status, out, _ = invoke("expand", "--outer", "3,1", "--inner", "2", "--n", "2", "--format", "json")
        data = json.loads(out)
        assert data["identity_ok"] is True
        assert sum(term["multiplicity"] for term in data["expansion"]) >= 2


class TestDeterminism:
    def test_byte_identical_reruns(self, invoke):
        first = invoke("graph", "--outer", "3,1", "--n", "3", "--format", "json")
        second = invoke("graph", "--outer", "3,1", "--n", "3", "--format", "json")
        assert first == second
