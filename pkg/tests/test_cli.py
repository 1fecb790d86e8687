"""The gm command: exit codes, formats, configuration precedence."""

import io
import json

from gmforge.cli import EXIT_OK, EXIT_USAGE, REPORT_SCHEMA, build_parser, resolve_config, run_command
from gmforge.arith import Ring
from gmforge.ideals import Ideal, write_ideal

from .conftest import twisted_cubic


def run(argv, env=None):
    buf = io.StringIO()
    code = run_command(argv, env=env or {}, out=buf)
    return code, buf.getvalue()


def test_selfcheck():
    code, out = run(["selfcheck"])
    assert code == EXIT_OK
    assert "status=pass" in out
    code, out = run(["selfcheck", "--format", "json"])
    rep = json.loads(out)
    assert rep["schema"] == REPORT_SCHEMA and rep["ok"]


def test_table1_text_and_json_agree():
    code, text = run(["table1"])
    assert code == EXIT_OK
    code, js = run(["table1", "--format", "json"])
    rows = json.loads(js)["results"]
    assert len(rows) == 9
    lines = {ln.split()[0]: ln.split() for ln in text.splitlines() if ln and ln.split()[0] in {r["name"] for r in rows}}
    for r in rows:
        cols = lines[r["name"]]
        assert int(cols[6]) == r["self_int"]
        assert int(cols[7]) == r["d"]
        assert cols[8] == r["label"]
    assert [r["status"] for r in rows].count("pass") == 8
    assert "8 pass" in text and "1 expected-discrepancy" in text


def test_usage_errors():
    assert run(["nonsense"])[0] == EXIT_USAGE
    assert run(["table1", "-p", "15"])[0] == EXIT_USAGE
    assert run(["table1"], env={"GMFORGE_PRIME": "abc"})[0] == EXIT_USAGE
    assert run(["recipe", "moon"])[0] == EXIT_USAGE
    assert run(["describe", "--fixture", "/no/such/file"])[0] == EXIT_USAGE


def test_config_precedence():
    ap = build_parser()
    env = {"GMFORGE_SEED": "5", "GMFORGE_PRIME": "101", "GMFORGE_FORMAT": "json"}
    cfg = resolve_config(ap.parse_args(["table1"]), {})
    assert (cfg.seed, cfg.prime, cfg.format) == (0, 31991, "text")
    cfg = resolve_config(ap.parse_args(["table1"]), env)
    assert (cfg.seed, cfg.prime, cfg.format) == (5, 101, "json")
    cfg = resolve_config(ap.parse_args(["--seed", "3", "table1", "-p", "103"]), env)
    assert (cfg.seed, cfg.prime) == (3, 103)
    cfg = resolve_config(ap.parse_args(["table1", "--seed", "4"]), env)
    assert cfg.seed == 4


def test_recipe_edge_json():
    code, out = run(["recipe", "edge", "--seed", "2", "--format", "json"])
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["config"]["seed"] == 2
    step = rep["results"][0]
    assert step["step"] == "edge" and step["ok"]
    assert step["objects"]["E'"]["degree"] == 7


def test_congruence_skips_without_stretch():
    code, out = run(["congruence"])
    assert code == EXIT_OK and "status=skipped" in out
    code, out = run(["congruence", "--fixture", "missing.ideal"])
    assert code == EXIT_OK and "skipped" in out


def test_congruence_on_fixture_file(tmp_path):
    R = Ring(4)
    path = tmp_path / "quadric.ideal"
    write_ideal(Ideal(R, [R.parse("x0*x1 - x2*x3")]), path)
    code, out = run(["congruence", "--fixture", str(path), "--format", "json"])
    assert code == EXIT_OK
    assert json.loads(out)["results"][0]["total"] == 2


def test_describe_ideal(tmp_path):
    path = tmp_path / "cubic.ideal"
    write_ideal(twisted_cubic().ideal, path)
    code, out = run(["describe", "--fixture", str(path)])
    assert code == EXIT_OK
    assert "curve in PP^3 of dimension 1 and degree 3" in out
    code, out = run(["describe", "--fixture", "cubic.ideal", "--fixtures", str(tmp_path), "--format", "json"])
    summ = json.loads(out)["results"][0]
    assert (summ["dim"], summ["degree"], summ["genus"]) == (1, 3, 0)


def test_export_then_describe(tmp_path):
    code, out = run(["export", "--out", str(tmp_path), "--until", "semple", "--seed", "1", "--m2"])
    assert code == EXIT_OK
    for name in ("Eprime", "E", "C", "B", "Y"):
        assert (tmp_path / f"{name}.ideal").exists()
        assert (tmp_path / f"{name}.m2").exists()
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["ok"]
    code, out = run(["describe", "--fixture", str(tmp_path / "Y.ideal"), "--format", "json"])
    summ = json.loads(out)["results"][0]
    assert (summ["ambient"], summ["dim"], summ["degree"]) == (8, 5, 5)
    code, out = run(["describe", "--fixture", str(tmp_path / "semple.map")])
    assert code == EXIT_OK
    assert "PP^5 to PP^8" in out and "degree 2" in out
