import json

import pytest

from quotcat.catfile import load_category, save_category
from quotcat.cli import main
from quotcat.clustergen import build_cluster_category


@pytest.fixture(scope="module")
def a3_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("cats") / "a3.json"
    save_category(build_cluster_category(3), str(path))
    return str(path)


def test_generate_counts(tmp_path, capsys):
    for n, count in ((2, 5), (3, 9), (4, 14)):
        out = tmp_path / f"a{n}.json"
        assert main(["generate", str(n), str(out)]) == 0
        P = load_category(str(out))
        assert P.n == count


def test_generate_invalid_n(tmp_path, capsys):
    assert main(["generate", "0", str(tmp_path / "x.json")]) == 2


def test_generate_orientation_and_field(tmp_path):
    out = tmp_path / "a3r.json"
    assert main(["generate", "3", str(out), "--orientation", ">>", "--field", "F101"]) == 0
    P = load_category(str(out))
    assert P.n == 9


def test_verify_cluster_tilting_all_pass(a3_path, tmp_path, capsys):
    out = tmp_path / "rep.json"
    code = main(
        ["verify", a3_path, "--T", "P1+P2+P3", "--scan-pairs-cap", "60", "--out", str(out)]
    )
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["overall"] == "pass"
    assert rep["clauses"]["cluster_tilting"]["all_regular_invertible"] is True
    assert rep["clauses"]["cluster_tilting"]["xt_equals_sigma_t"] is True
    capsys.readouterr()


def test_verify_two_summand_rigid(a3_path, tmp_path, capsys):
    out = tmp_path / "rep2.json"
    code = main(["verify", a3_path, "--T", "P1+P3", "--scan-pairs-cap", "60", "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["overall"] == "pass"
    ct = rep["clauses"]["cluster_tilting"]
    assert ct["is_cluster_tilting"] is False
    assert ct["all_regular_invertible"] is False
    assert "regular_noninvertible_witness" in ct
    capsys.readouterr()


def test_verify_not_rigid_distinct_status(a3_path, tmp_path, capsys):
    out = tmp_path / "rep3.json"
    code = main(["verify", a3_path, "--T", "P1+S2", "--out", str(out)])
    assert code == 1
    rep = json.loads(out.read_text())
    assert rep["clauses"]["rigidity"]["status"] == "fail"
    capsys.readouterr()


def test_verify_section6_subcat_fails_preabelian(a3_path, tmp_path, capsys):
    out = tmp_path / "rep6.json"
    code = main(
        ["verify", a3_path, "--subcat", "P1+P2+S2", "--scan-pairs-cap", "40", "--out", str(out)]
    )
    assert code == 1
    rep = json.loads(out.read_text())
    assert rep["clauses"]["preabelian"]["status"] == "fail"
    assert "P3 -> I2" in rep["clauses"]["preabelian"]["detail"]
    capsys.readouterr()


def test_verify_usage_errors(a3_path, capsys):
    assert main(["verify", a3_path]) == 2
    assert main(["verify", a3_path, "--T", "P1", "--subcat", "P2"]) == 2
    assert main(["verify", "/nonexistent.json", "--T", "P1"]) == 2
    capsys.readouterr()


def test_report_deterministic(a3_path, tmp_path, capsys):
    reports = []
    for name in ("r1.json", "r2.json"):
        out = tmp_path / name
        main(["verify", a3_path, "--T", "P2+SP1", "--scan-pairs-cap", "40", "--seed", "5", "--out", str(out)])
        rep = json.loads(out.read_text())
        rep.pop("timing_s")
        reports.append(rep)
    assert reports[0] == reports[1]
    capsys.readouterr()


def test_cotorsion_section6(a3_path, capsys):
    code = main(["cotorsion", a3_path, "P2+P3+SP3"])
    out = capsys.readouterr().out
    rep = json.loads(out)
    assert code == 0
    assert rep["V"] == ["P1", "P2", "S2"]
    assert rep["clauses"]["c_triangle_condition"]["status"] == "skipped"


def test_cotorsion_whole_category_against_zero(a3_path, capsys):
    # (C, 0) is a cotorsion pair
    code = main(["cotorsion", a3_path, "+".join(load_category(a3_path).objects), "--V", ""])
    rep = json.loads(capsys.readouterr().out)
    assert code == 0 and rep["overall"] == "pass"


def test_cotorsion_non_closed_fails(a3_path, capsys):
    # a non-rigid U is never the perp of its perp
    code = main(["cotorsion", a3_path, "P1+S2"])
    rep = json.loads(capsys.readouterr().out)
    assert code == 1
    assert rep["clauses"]["b_V_perp_equals_U"]["status"] == "fail"
    # an explicitly wrong V breaks clause (a)
    code = main(["cotorsion", a3_path, "P2+P3+SP3", "--V", "P1"])
    rep = json.loads(capsys.readouterr().out)
    assert code == 1
    assert rep["clauses"]["a_U_perp_equals_V"]["status"] == "fail"


def test_fraction_expressions(a3_path, capsys):
    code = main(
        [
            "fraction",
            a3_path,
            "P1+P3",
            "equal? [id, P1:P2:0] [id, P1:P2:0]",
            "compose [id, P2:P3:0] [id, P1:P2:0]",
            "invert id:P1",
        ]
    )
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert out[0] == "true"
    assert "P1" in out[1] and "P3" in out[1]


def test_fraction_parse_error_position(a3_path, capsys):
    code = main(["fraction", a3_path, "P1+P3", "equal? [id, WAT:P2:0]"])
    err = capsys.readouterr().err
    assert code == 2
    assert "position" in err


def test_fraction_not_regular_denominator(a3_path, capsys):
    code = main(["fraction", a3_path, "P1+P3", "[zero:P1:P1, id:P1]"])
    err = capsys.readouterr().err
    assert code == 1
    assert "regular" in err


def test_budget_config_file(a3_path, tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 9, "scan_pairs_cap": 30}))
    monkeypatch.setenv("QUOTCAT_CONFIG", str(cfg))
    out = tmp_path / "rep.json"
    assert main(["verify", a3_path, "--T", "P1+P2+P3", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["budgets"]["seed"] == 9
    assert rep["budgets"]["scan_pairs_cap"] == 30
    capsys.readouterr()


def test_fraction_kernel_and_cokernel_expressions(a3_path, capsys):
    code = main(
        [
            "fraction",
            a3_path,
            "P1+P3",
            "kernel [id, P2:P3:0]",
            "cokernel [id, P2:P3:0]",
        ]
    )
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert len(out) == 2 and all(line.startswith("[") for line in out)
