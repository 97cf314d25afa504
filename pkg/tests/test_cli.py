import json
from fractions import Fraction

import pytest

from canon31.cli import run
from canon31.disk import remove_top_vertex
from canon31.generator import double_wheel, random_4ct
from canon31.ordering import compute_31_ordering
from canon31.rect_dual import build_rect_dual
from canon31.ri_drawing import build_ri_drawing
from canon31.serialize import (
    FormatError,
    disk_from_json,
    disk_to_json,
    drawing_from_json,
    drawing_to_json,
    dumps,
    frac_from_json,
    frac_to_json,
    graph_from_json,
    graph_to_json,
    layout_from_json,
    layout_to_json,
    ordering_from_json,
    ordering_to_json,
)
from graphs import k4, octahedron, stacked_octahedra


@pytest.fixture
def files(tmp_path):
    def put(name, g):
        p = tmp_path / name
        p.write_text(dumps(graph_to_json(g)))
        return str(p)

    return {
        "oct": put("octahedron.json", octahedron()),
        "k4": put("k4.json", k4()),
        "stacked": put("stacked.json", stacked_octahedra()),
        "rand": put("rand.json", random_4ct(25, 9)),
        "dir": tmp_path,
    }


# -- serialization -------------------------------------------------------------------

def test_round_trips():
    g = random_4ct(20, 1)
    assert graph_from_json(json.loads(dumps(graph_to_json(g)))) == g
    o = compute_31_ordering(g)
    assert ordering_from_json(json.loads(dumps(ordering_to_json(o)))) == o
    lay = build_rect_dual(g, o)
    back = layout_from_json(json.loads(dumps(layout_to_json(lay))))
    assert back.rects == lay.rects and back.bbox == lay.bbox
    dr = build_ri_drawing(g, o)
    assert drawing_from_json(json.loads(dumps(drawing_to_json(dr)))).points == dr.points
    d = remove_top_vertex(g)
    assert disk_from_json(json.loads(dumps(disk_to_json(d)))) == d


def test_rationals_lowest_terms():
    assert frac_to_json(Fraction(6, -4)) == [-3, 2]
    assert frac_from_json([4, 6]) == Fraction(2, 3)
    with pytest.raises(FormatError):
        frac_from_json([1, 0])
    with pytest.raises(FormatError):
        frac_from_json([1.5, 2])


def test_malformed_graph_rejected():
    with pytest.raises(FormatError):
        graph_from_json({"n": 2, "rotation": [[1]]})
    bad = graph_to_json(octahedron())
    bad["outer"] = [0, 2, 1]
    with pytest.raises(FormatError):
        graph_from_json(bad)


# -- command line ----------------------------------------------------------------------

def test_validate_exit_codes(files, capsys):
    assert run(["validate", files["oct"]]) == 0
    assert run(["validate", files["k4"]]) == 3
    assert run(["validate", files["stacked"]]) == 3
    assert "separating triangle" in capsys.readouterr().out
    assert run(["validate", str(files["dir"] / "missing.json")]) == 1


def test_validate_parallel_json(files, capsys):
    assert run(["--json-errors", "validate", "--jobs", "3", files["oct"], files["rand"], files["k4"]]) == 3
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["ok"] for r in rows] == [True, True, False]


def test_order_octahedron(files, capsys):
    assert run(["order", files["oct"]]) == 0
    cells = json.loads(capsys.readouterr().out)["cells"]
    assert len(cells) == 3
    assert [c["kind"] for c in cells] == ["base", "fan", "top"]


def test_order_rejects_k4(files, capsys):
    assert run(["--json-errors", "order", files["k4"]]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["code"] == 3 and err["error"] == "precondition"


def test_usage_errors(files):
    assert run([]) == 1
    assert run(["frobnicate"]) == 1
    assert run(["order"]) == 1
    bad = files["dir"] / "bad.json"
    bad.write_text("{not json")
    assert run(["order", str(bad)]) == 1


def test_pipelines_and_checks(files, tmp_path, capsys):
    o, rd, ri = (str(tmp_path / n) for n in ("o.json", "rd.json", "ri.json"))
    assert run(["order", files["rand"], "-o", o]) == 0
    assert run(["check-order", files["rand"], o]) == 0
    assert run(["rd", files["rand"], "--ordering", o, "-o", rd, "--svg", str(tmp_path / "rd.svg")]) == 0
    assert run(["check-rd", files["rand"], rd]) == 0
    assert run(["ri", files["rand"], "-o", ri, "--svg", str(tmp_path / "ri.svg"), "--overlays"]) == 0
    assert run(["check-ri", files["rand"], ri]) == 0
    assert (tmp_path / "rd.svg").read_text().startswith("<svg")
    assert "<svg" in (tmp_path / "ri.svg").read_text()
    assert run(["rd", files["rand"], "--integer", "-o", rd]) == 0
    assert run(["check-rd", files["rand"], rd]) == 0
    capsys.readouterr()

    # tamper with a point: verification fails with exit 2
    obj = json.loads((tmp_path / "ri.json").read_text())
    first, second = sorted(obj["points"], key=int)[:2]
    obj["points"][first] = obj["points"][second]
    (tmp_path / "ri.json").write_text(json.dumps(obj))
    assert run(["check-ri", files["rand"], ri]) == 2
    assert json.loads(capsys.readouterr().out)["ok"] is False


def test_invalid_supplied_ordering_rejected(files, tmp_path):
    o = tmp_path / "o.json"
    o.write_text(dumps(ordering_to_json(compute_31_ordering(random_4ct(25, 10)))))
    assert run(["rd", files["rand"], "--ordering", str(o)]) == 3
    assert run(["check-order", files["rand"], str(o)]) == 2


def test_gen(tmp_path, capsys):
    assert run(["gen", "--family", "double-wheel", "--cycle-len", "6"]) == 0
    assert graph_from_json(json.loads(capsys.readouterr().out)) == double_wheel(6)
    assert run(["gen", "--family", "double-wheel", "--cycle-len", "3"]) == 1
    out = tmp_path / "corpus"
    assert run(["gen", "--n", "8", "--n-max", "10", "--count", "4", "--seed", "2", "-o", str(out)]) == 0
    names = sorted(p.name for p in out.iterdir())
    assert len(names) == 4
    assert run(["validate", *(str(out / n) for n in names)]) == 0
    assert run(["gen", "--n", "5"]) == 1
