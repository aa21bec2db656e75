"""Command-line contract: exit codes, report formats, determinism."""

import json

import pytest
from click.testing import CliRunner

from entwine.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def h4_file(tmp_path, runner):
    path = tmp_path / "h4.json"
    res = runner.invoke(main, ["corpus", "h4", "-o", str(path)])
    assert res.exit_code == 0
    return str(path)


@pytest.fixture()
def yd_file(tmp_path, runner):
    path = tmp_path / "yd_h4.json"
    assert runner.invoke(main, ["corpus", "yd_h4", "-o", str(path)]).exit_code == 0
    return str(path)


def test_check_hopf_passes(runner, h4_file):
    res = runner.invoke(main, ["check", "hopf", h4_file])
    assert res.exit_code == 0
    assert "overall: pass" in res.output


def test_check_hopf_json_deterministic(runner, h4_file):
    res1 = runner.invoke(main, ["check", "hopf", h4_file, "--format", "json"])
    res2 = runner.invoke(main, ["check", "hopf", h4_file, "--format", "json"])
    assert res1.exit_code == 0
    assert res1.output == res2.output
    doc = json.loads(res1.output)
    assert doc["overall"] is True
    assert all(item["passed"] for item in doc["items"])


def test_check_multiple_files_in_order(runner, tmp_path):
    paths = []
    for name in ("h4", "kz2", "dual_kz2"):
        p = tmp_path / f"{name}.json"
        runner.invoke(main, ["corpus", name, "-o", str(p)])
        paths.append(str(p))
    res = runner.invoke(main, ["check", "hopf", *paths])
    assert res.exit_code == 0
    positions = [res.output.find(p) for p in paths]
    assert positions == sorted(positions) and -1 not in positions


def test_check_datum_and_dqg(runner, tmp_path, yd_file):
    res = runner.invoke(main, ["check", "entwining", yd_file])
    assert res.exit_code == 0
    res = runner.invoke(main, ["check", "datum", yd_file])
    assert res.exit_code == 0
    qp = tmp_path / "q.json"
    runner.invoke(main, ["corpus", "yd_dqg_h4", "-o", str(qp)])
    res = runner.invoke(main, ["check", "dqg", str(qp)])
    assert res.exit_code == 0


def test_check_module(runner, tmp_path, yd_file):
    from entwine import fileformat as ff
    from entwine.emodcat import std_module_CA
    from entwine.entwining import MonoidalEntwiningDatum

    datum = ff.load(yd_file)
    m = std_module_CA(MonoidalEntwiningDatum(datum))
    mp = tmp_path / "m.json"
    ff.save(m, mp)
    res = runner.invoke(main, ["check", "module", str(mp)])
    assert res.exit_code == 0


def test_check_pivotal_exit_codes(runner, tmp_path, yd_file):
    gp = tmp_path / "g2.json"
    up = tmp_path / "unit.json"
    runner.invoke(main, ["corpus", "g2_yd_h4", "-o", str(gp)])
    runner.invoke(main, ["corpus", "unit_morphism_yd_h4", "-o", str(up)])
    res = runner.invoke(main, ["check", "pivotal", "--datum", yd_file, "--morphism", str(gp)])
    assert res.exit_code == 0
    res = runner.invoke(
        main, ["check", "pivotal", "--datum", yd_file, "--morphism", str(up), "--format", "json"]
    )
    assert res.exit_code == 1
    doc = json.loads(res.output)
    failed = {it["axiom"]: it for it in doc["items"] if not it["passed"]}
    assert "P4_coaction_twist" in failed
    assert failed["P4_coaction_twist"]["witness"]["basis"] == [2]


def test_check_ribbon(runner, tmp_path):
    qp = tmp_path / "q.json"
    gp = tmp_path / "g.json"
    runner.invoke(main, ["corpus", "long_dqg_kz2", "-o", str(qp)])
    runner.invoke(main, ["corpus", "g_ribbon_long_kz2", "-o", str(gp)])
    res = runner.invoke(main, ["check", "ribbon", "--dqg", str(qp), "--morphism", str(gp)])
    assert res.exit_code == 0


def test_entwining_passes_but_datum_fails_for_hopf_module(runner, tmp_path):
    hp = tmp_path / "hm.json"
    runner.invoke(main, ["corpus", "hopfmod_h4", "-o", str(hp)])
    assert runner.invoke(main, ["check", "entwining", str(hp)]).exit_code == 0
    assert runner.invoke(main, ["check", "datum", str(hp)]).exit_code == 1


def test_parse_error_exit_2(runner, tmp_path, h4_file):
    trunc = tmp_path / "trunc.json"
    trunc.write_text(open(h4_file).read()[:60])
    res = runner.invoke(main, ["check", "hopf", str(trunc)])
    assert res.exit_code == 2
    res = runner.invoke(main, ["check", "hopf", str(tmp_path / "missing.json")])
    assert res.exit_code == 2


def test_usage_error_exit_2(runner):
    res = runner.invoke(main, ["check", "hopf"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["corpus", "not-a-name", "-o", "x.json"])
    assert res.exit_code == 2


def test_build_commands(runner, tmp_path, h4_file, yd_file):
    out = tmp_path / "out.json"
    res = runner.invoke(main, ["build", "double", "--hopf", h4_file, "-o", str(out)])
    assert res.exit_code == 0
    assert runner.invoke(main, ["check", "hopf", str(out)]).exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["metadata"]["construction"] == "drinfeld_double"
    assert "source_hash" in doc["metadata"]
    for sub, opts in (
        ("smash", ["--datum", yd_file]),
        ("cosmash", ["--datum", yd_file]),
        ("dual", ["--hopf", h4_file, "--twist", "op"]),
    ):
        res = runner.invoke(main, ["build", sub, *opts, "-o", str(out)])
        assert res.exit_code == 0, sub
        assert runner.invoke(main, ["check", "hopf", str(out)]).exit_code == 0, sub


def test_find_pivotal_machine_readable(runner, yd_file):
    res = runner.invoke(main, ["find", "pivotal", "--datum", yd_file])
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["status"] == "complete"
    assert len(doc["solutions"]) == 2
    assert "family" in doc


def test_find_ribbon(runner, tmp_path):
    qp = tmp_path / "q.json"
    runner.invoke(main, ["corpus", "long_dqg_kz2", "-o", str(qp)])
    res = runner.invoke(main, ["find", "ribbon", "--dqg", str(qp), "--max-params", "2"])
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["status"] in ("complete", "parametric", "undecided")


def test_report_round_trip(runner, tmp_path, h4_file):
    rep = tmp_path / "rep.json"
    res = runner.invoke(main, ["check", "hopf", h4_file, "--report-out", str(rep)])
    assert res.exit_code == 0
    res = runner.invoke(main, ["report", str(rep)])
    assert res.exit_code == 0
    assert res.output.strip().endswith("overall: pass")
    res = runner.invoke(main, ["report", str(rep), "--format", "json"])
    assert res.exit_code == 0
    assert json.loads(res.output)["overall"] is True


def test_multi_file_report_out_is_an_array(runner, tmp_path, h4_file):
    p2 = tmp_path / "kz2.json"
    runner.invoke(main, ["corpus", "kz2", "-o", str(p2)])
    rep = tmp_path / "reps.json"
    res = runner.invoke(main, ["check", "hopf", h4_file, str(p2), "--report-out", str(rep)])
    assert res.exit_code == 0
    doc = json.loads(rep.read_text())
    assert isinstance(doc, list) and len(doc) == 2
    assert {d["subject"] for d in doc} == {h4_file, str(p2)}
    res = runner.invoke(main, ["report", str(rep)])
    assert res.exit_code == 0
    assert res.output.count("overall: pass") == 2


def test_corpus_list(runner):
    res = runner.invoke(main, ["corpus-list"])
    assert res.exit_code == 0
    assert "h4" in res.output.split()


def test_threads_env(runner, tmp_path, monkeypatch, h4_file):
    monkeypatch.setenv("ENTWINE_THREADS", "2")
    p2 = tmp_path / "kz2.json"
    runner.invoke(main, ["corpus", "kz2", "-o", str(p2)])
    res = runner.invoke(main, ["check", "hopf", h4_file, str(p2)])
    assert res.exit_code == 0
    monkeypatch.setenv("ENTWINE_THREADS", "zebra")
    res = runner.invoke(main, ["check", "hopf", h4_file, str(p2)])
    assert res.exit_code == 2
