from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from listcf import jsonio
from listcf.cli import main
from listcf.geometry import build_disc_hypergraph
from listcf.hypergraph import Hypergraph, verify_cf, verify_um
from listcf.jsonio import instance_from_json
from listcf.planar import grid_graph, paths_hypergraph
from listcf.svg import PALETTE, render


def gen(tmp_path, *args):
    out = tmp_path / "inst.json"
    assert main(["gen", *args, "--out", str(out)]) == 0
    return out


def color(inst, out, *args):
    code = main(["color", str(inst), "--out", str(out), *args])
    report = json.loads((out / "report.json").read_text())
    return code, report


def test_gen_examples(tmp_path):
    doc = json.loads(gen(tmp_path, "intervals", "--n", "7").read_text())
    assert doc == {"kind": "intervals", "n": 7}
    doc = json.loads(gen(tmp_path, "star", "--n", "5").read_text())
    assert doc["adj"] == [[1, 2, 3, 4], [0], [0], [0], [0]]
    doc = json.loads(gen(tmp_path, "points-discs", "--n", "8", "--seed", "1").read_text())
    assert len(doc["points"]) == 8
    build_disc_hypergraph(doc["points"])


def test_potential_H255(tmp_path):
    inst = gen(tmp_path, "intervals", "--n", "255")
    code, report = color(inst, tmp_path / "r", "-a", "potential")
    assert code == 0 and report["status"] == "ok"
    assert report["verdicts"]["um"] is True and report["verdicts"]["from_lists"] is True
    lists = json.loads((tmp_path / "r" / "lists.json").read_text())["lists"]
    assert all(len(lst) == 8 for lst in lists)
    trace = json.loads((tmp_path / "r" / "trace.json").read_text())
    assert trace["k"] == 2 and trace["iterations"]


def test_grid_separator(tmp_path):
    inst = gen(tmp_path, "grid", "--rows", "3", "--cols", "3")
    code, report = color(inst, tmp_path / "r", "-a", "separator", "--lists", "auto")
    assert code == 0
    assert report["verdicts"]["cf"] is True
    colors = json.loads((tmp_path / "r" / "coloring.json").read_text())["colors"]
    assert verify_cf(paths_hypergraph(grid_graph(3, 3)), colors)


def test_star_counterexample_is_infeasible(tmp_path):
    inst = gen(tmp_path, "star", "--n", "4")
    code, report = color(inst, tmp_path / "r", "-a", "potential", "--lists", "star:2")
    assert code == 3
    assert report["status"] == "infeasible" and report["error"].startswith("ListExhausted")
    assert report["trace"] == "trace.json"


@pytest.mark.parametrize("kind, algo, extra", [
    ("points-halfplanes", "potential", ["--n", "6", "--seed", "2"]),
    ("discs", "potential", ["--n", "6", "--seed", "2"]),
    ("intervals", "median", ["--n", "20"]),
    ("intervals", "few-edges", ["--n", "6"]),
    ("intervals", "refine", ["--n", "30"]),
    ("planar", "separator", ["--n", "12", "--seed", "3"]),
])
def test_algorithms_run(tmp_path, kind, algo, extra):
    inst = gen(tmp_path, kind, *extra)
    code, report = color(inst, tmp_path / "r", "-a", algo, "--seed", "5")
    assert code == 0, report
    verdicts = report["verdicts"]
    assert verdicts["from_lists"] is True
    key = "um" if algo in ("potential", "few-edges") else "cf"
    assert verdicts[key] is True


def test_reports_recomputed(tmp_path):
    # a coloring file tampered with after the run is judged on its contents
    inst = gen(tmp_path, "intervals", "--n", "3")
    (tmp_path / "c.json").write_text(json.dumps({"colors": [2, 1, 2]}))
    out = subprocess.run([sys.executable, "-m", "listcf", "verify", str(inst), str(tmp_path / "c.json")],
                         capture_output=True, text=True, check=True)
    verdicts = json.loads(out.stdout)
    assert verdicts["um"] is False and verdicts["um_witness"] == [0, 1, 2]
    assert verdicts["cf"] is True


def test_byte_identical(tmp_path):
    inst = gen(tmp_path, "points-discs", "--n", "7", "--seed", "4")
    color(inst, tmp_path / "a", "-a", "potential", "--seed", "1")
    color(inst, tmp_path / "b", "-a", "potential", "--seed", "1")
    for name in ("report.json", "coloring.json", "trace.json", "lists.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_timing_opt_in(tmp_path):
    inst = gen(tmp_path, "intervals", "--n", "5")
    _, report = color(inst, tmp_path / "r", "-a", "potential")
    assert "wall_time_s" not in report
    _, report = color(inst, tmp_path / "t", "-a", "potential", "--timing")
    assert report["wall_time_s"] >= 0


def test_exit_codes(tmp_path):
    assert main(["color", str(tmp_path / "missing.json"), "--out", str(tmp_path), "-a", "potential"]) == 2
    inst = gen(tmp_path, "intervals", "--n", "5")
    assert main(["color", str(inst), "--out", str(tmp_path / "x"), "-a", "separator"]) == 2
    big = gen(tmp_path, "planar", "--n", "20", "--seed", "1")
    assert main(["color", str(big), "--out", str(tmp_path / "y"), "-a", "potential"]) == 4
    assert main(["color", str(inst), "--out", str(tmp_path / "z"), "-a", "refine"]) == 2


def test_list_file_policy(tmp_path):
    inst = gen(tmp_path, "intervals", "--n", "3")
    lists = tmp_path / "lists.json"
    lists.write_text(json.dumps({"lists": [[1], [1], [1]]}))
    code, report = color(inst, tmp_path / "r", "-a", "potential", "--lists", f"file:{lists}")
    assert code == 3 and report["coloring"] is None


class TestPlot:
    def _svg(self, instance, colors):
        return ET.fromstring(render(instance_from_json(instance), colors))

    def test_two_discs(self):
        root = self._svg({"kind": "discs", "discs": [[0, 0, 25], [6, 0, 25]]}, [1, 2])
        circles = [e for e in root.iter() if e.tag.endswith("circle")]
        assert len(circles) == 2
        texts = [e.text for e in root.iter() if e.tag.endswith("text")]
        assert "color 1" in texts and "color 2" in texts

    def test_intervals(self):
        root = self._svg({"kind": "intervals", "n": 7}, [1, 2, 1, 3, 1, 2, 1])
        circles = [e for e in root.iter() if e.tag.endswith("circle")]
        assert len(circles) == 7
        assert circles[3].get("fill") == PALETTE[2]

    def test_grid(self, tmp_path):
        inst = gen(tmp_path, "grid", "--rows", "2", "--cols", "2")
        (tmp_path / "c.json").write_text(json.dumps({"colors": [1, 2, 3, 13]}))
        out = tmp_path / "g.svg"
        assert main(["plot", str(inst), str(tmp_path / "c.json"), "--out", str(out)]) == 0
        root = ET.fromstring(out.read_text())
        assert len([e for e in root.iter() if e.tag.endswith("line")]) == 4
        # palette cycles by color id
        fills = [e.get("fill") for e in root.iter() if e.tag.endswith("circle")]
        assert fills[3] == PALETTE[0]

    def test_unsupported(self, tmp_path):
        (tmp_path / "h.json").write_text(jsonio.dumps(jsonio.hypergraph_to_json(Hypergraph(2, [[0, 1]]))))
        (tmp_path / "c.json").write_text(json.dumps({"colors": [1, 2]}))
        assert main(["plot", str(tmp_path / "h.json"), str(tmp_path / "c.json")]) == 2


def test_json_roundtrip():
    H = Hypergraph(3, [[0, 2], [1]])
    assert jsonio.hypergraph_from_json(json.loads(jsonio.dumps(jsonio.hypergraph_to_json(H)))) == H
    fam = jsonio.lists_from_json({"lists": [[2, 1], [3]]})
    assert jsonio.lists_to_json(fam) == {"lists": [[1, 2], [3]]}
    assert jsonio.coloring_from_json({"colors": [1, 2]}) == (1, 2)
    assert verify_um(H, (1, 1, 2))
