import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from conftest import SQUARE
from rguard.cli import SCHEMA, RunReport, run, solve_report
from rguard.generators import comb, random_domain
from rguard.pixelation import pixelate
from rguard.render import render_svg

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def square_file(tmp_path):
    p = tmp_path / "square.json"
    p.write_text(json.dumps({"vertices": SQUARE}))
    return p


def test_solve_square(square_file, capsys):
    assert run(["solve", str(square_file), "--no-timing"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == SCHEMA
    assert (data["m_h"], data["m_v"]) == (1, 1)
    assert data["point_guards"]["size"] == 1
    assert data["point_guards"]["points"] == [["1", "1"]]
    assert data["mhsc"]["guards"][0]["segment"] == ["0", "1", "2", "1"]
    assert all(data["verification"].values())
    assert "timings_ms" not in data


def test_solve_selected_parts_and_exact(tmp_path, capsys):
    p = tmp_path / "comb.json"
    p.write_text(comb(3).to_json())
    assert run(["solve", str(p), "--mvsc", "--exact", "point"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["m_v"] == 3 and "mhsc" not in data and "point_guards" not in data
    assert data["exact"]["optimum"] == 3
    assert "timings_ms" in data


def test_solve_output_is_byte_stable(square_file, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["solve", str(square_file), "--no-timing", "-o", str(a)]) == 0
    assert run(["solve", str(square_file), "--no-timing", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_report_round_trip():
    rep = solve_report(random_domain(16, 5), exact_kind="mhsc", timing=False)
    back = RunReport.from_json(rep.to_json())
    assert back == rep and back.ok
    assert back.to_json() == rep.to_json()


def test_report_rejects_unknown_schema():
    with pytest.raises(ValueError):
        RunReport.from_json('{"schema": "other", "input": {}}')


def test_invalid_input_exits_one(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"vertices": [[0,0],[1,1],[2,0]]}')
    assert run(["solve", str(p)]) == 1
    assert "NotOrthogonal" in capsys.readouterr().err
    assert run(["solve", str(tmp_path / "missing.json")]) == 1
    p.write_text("not json")
    assert run(["exact", str(p)]) == 1


def test_bad_arguments_exit_one(capsys):
    with pytest.raises(SystemExit) as err:
        run(["solve"])
    assert err.value.code == 1


def test_exact_cap_exceeded_is_input_error(tmp_path):
    p = tmp_path / "comb.json"
    p.write_text(comb(30).to_json())
    assert run(["exact", str(p), "--exact", "point"]) == 1


def test_exact_command(square_file, capsys):
    assert run(["exact", str(square_file), "--exact", "msc"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["optimum"] == 1 and data["kind"] == "msc"


def test_generate_round_trips(tmp_path, capsys):
    assert run(["generate", "--family", "random", "--k", "20", "--seed", "7"]) == 0
    assert json.loads(capsys.readouterr().out) == json.loads(random_domain(20, 7).to_json())
    out = tmp_path / "c.json"
    assert run(["generate", "--family", "comb", "--k", "4", "-o", str(out)]) == 0
    assert run(["solve", str(out), "--point-guards", "--no-timing"]) == 0


def test_generate_rejects_bad_parameters():
    assert run(["generate", "--family", "comb", "--k", "0"]) == 1


def test_render_square(square_file, capsys):
    assert run(["render", str(square_file)]) == 0
    root = ET.fromstring(capsys.readouterr().out.split("?>", 1)[1])
    assert root.tag == SVG + "svg"
    assert len(root.findall(f".//{SVG}circle")) == 1
    assert len(root.findall(f".//{SVG}polygon")) == 1


def test_render_options():
    d = comb(3)
    g = pixelate(d)
    bare = ET.fromstring(render_svg(d).split("?>", 1)[1])
    assert bare.findall(f".//{SVG}circle") == [] and bare.findall(f".//{SVG}line") == []
    full = render_svg(d, g, [(0, 0, 1, 0)], [(0, 0)])
    ET.fromstring(full.split("?>", 1)[1])
    assert full.count("<circle") == 1


def test_bench_json(capsys):
    assert run(["bench", "--min-k", "10", "--max-k", "100", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [(r["k"], r["m_h"], r["m_v"]) for r in rows] == [(10, 1, 10), (100, 1, 100)]


def test_bench_table(capsys):
    assert run(["bench", "--min-k", "10", "--max-k", "10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["k", "n", "m_h", "m_v", "ms"]
    assert lines[1].split()[:4] == ["10", "40", "1", "10"]


def test_module_entry_point(square_file):
    proc = subprocess.run([sys.executable, "-m", "rguard", "solve", str(square_file), "--no-timing"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["m_h"] == 1
