"""Command-line interface: formats, determinism, exit codes."""

import json
from xml.etree import ElementTree as ET

import pytest

from wittgrass.cli import RenderSpec, ascii_diagram, main
from wittgrass import FramedDiagram


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRenderSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            RenderSpec("pdf")
        with pytest.raises(ValueError):
            RenderSpec("svg", cell_size=2)
        with pytest.raises(ValueError):
            RenderSpec("ascii", cell_size=0)
        assert RenderSpec("ascii", cell_size=2).cell_size == 2

    def test_ascii_diagram(self):
        assert ascii_diagram(FramedDiagram(2, 3, (2, 0))) == "##.\n..."


class TestEnumerate:
    def test_ascii_golden(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--d", "2", "--e", "2")
        assert code == 0
        assert out == (
            "rows=(2, 2)\n##\n##\n\n"
            "rows=(2, 0)\n##\n..\n\n"
            "rows=(1, 1)\n#.\n#.\n\n"
            "rows=(0, 0)\n..\n..\n")

    def test_json_payload(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--d", "2", "--e", "2",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["frame"] == [2, 2]
        assert payload["count"] == 4
        assert payload["diagrams"][0]["rows"] == [2, 2]
        assert payload["diagrams"][0]["degree"] == {
            "shift": 0, "base": [], "twist": 0}

    def test_json_byte_stable(self, capsys):
        _, first, _ = run(capsys, "enumerate", "--d", "3", "--e", "3",
                          "--format", "json")
        _, second, _ = run(capsys, "enumerate", "--d", "3", "--e", "3",
                           "--format", "json")
        assert first == second

    def test_svg_parses(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--d", "2", "--e", "2",
                           "--format", "svg", "--annotate")
        assert code == 0
        root = ET.fromstring(out)
        assert root.tag.endswith("svg")
        ns = "{http://www.w3.org/2000/svg}"
        rects = root.findall(f".//{ns}rect")
        # 8 filled cells plus 4 frame outlines
        assert len(rects) == 12
        assert root.findall(f".//{ns}text")

    def test_svg_rejects_tiny_cells(self, capsys):
        code, _, err = run(capsys, "enumerate", "--d", "2", "--e", "2",
                           "--format", "svg", "--cell-size", "2")
        assert code == 2
        assert "cell_size" in err


class TestTable:
    def test_trivial_base_flag(self, capsys):
        code, out, _ = run(capsys, "table", "--d", "2", "--e", "2",
                           "--trivial-base")
        assert code == 0
        payload = json.loads(out)
        assert payload["trivial_base"] is True
        assert payload["total"] == 4
        assert {"shift": 2, "twist": 1, "rank": 2} in payload["ranks"]


class TestMaps:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "maps", "--d", "2", "--e", "2",
                           "--which", "bord")
        assert code == 0
        payload = json.loads(out)
        assert payload["source_frame"] == [1, 2]
        assert payload["target_frame"] == [2, 1]
        assert payload["matrix"] == [[0, 0], [0, 0]]

    def test_ascii_arrows(self, capsys):
        code, out, _ = run(capsys, "maps", "--d", "2", "--e", "2",
                           "--which", "iota", "--format", "ascii")
        assert code == 0
        assert "iota: F(2,1) -> F(2,2)" in out
        assert "(1, 1) -> (2, 2)" in out
        assert "(0, 0) -> (1, 1)" in out

    def test_point_frame_labels(self, capsys):
        code, out, _ = run(capsys, "maps", "--d", "1", "--e", "1",
                           "--which", "iota", "--format", "ascii")
        assert code == 0
        assert "pt1 -> (1,)" in out


class TestClassify:
    def test_single_diagram(self, capsys):
        code, out, _ = run(capsys, "classify", "--d", "3", "--e", "3",
                           "--rows", "3,1,1", "--format", "ascii")
        assert code == 0
        assert "class=RowColumnPlusBlocks" in out

    def test_rejects_non_even(self, capsys):
        code, _, err = run(capsys, "classify", "--d", "2", "--e", "2",
                           "--rows", "2,1")
        assert code == 2
        assert "error" in err

    def test_whole_frame_json(self, capsys):
        code, out, _ = run(capsys, "classify", "--d", "2", "--e", "2")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["classes"]) == 4


class TestCanonical:
    def test_payload(self, capsys):
        code, out, _ = run(capsys, "canonical", "--dvec", "1,3",
                           "--evec", "1,2", "--ambient", "6")
        assert code == 0
        payload = json.loads(out)
        assert payload["relative_dimension"] == 5
        assert {"gen": "TautDet", "index": 3, "coeff": 4} in payload["flag"]["terms"]

    def test_bad_tuples(self, capsys):
        code, _, err = run(capsys, "canonical", "--dvec", "3,1",
                           "--evec", "0,1", "--ambient", "6")
        assert code == 2
        assert "error" in err


class TestVerify:
    def test_single_scope(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "bord",
                           "--max-frame", "4")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["suites"]["bord"]["ok"] is True

    def test_all_scopes_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "all",
                           "--max-frame", "2")
        assert code == 0
        payload = json.loads(out)
        assert set(payload["suites"]) == {"exactness", "degrees", "cond-even",
                                          "bord", "duality", "induction"}


class TestUsage:
    def test_missing_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_choice_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--d", "2", "--e", "2", "--format", "png"])
        assert exc.value.code == 2
