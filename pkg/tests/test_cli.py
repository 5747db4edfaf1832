import json

import pytest

from qkron import cli, dcb, pbw


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_text(capsys):
    code, out, _ = run(["compute", "1", "0", "1", "0"], capsys)
    assert code == 0
    assert out.strip() == "u3*u1 - (q^2)*u2^2"


def test_compute_identity(capsys):
    code, out, _ = run(["compute", "0", "0", "0", "0"], capsys)
    assert code == 0
    assert out.strip() == "1"


def test_compute_json_roundtrip(capsys):
    code, out, _ = run(["compute", "2", "0", "0", "1", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["a"] == [2, 0, 0, 1]
    elem = pbw.PbwElement.from_json_dict(data["element"])
    assert elem == dcb.b_element((2, 0, 0, 1))


def test_compute_q1_matches_polynomial_form(capsys):
    from qkron import classical

    code, out, _ = run(["compute", "3", "0", "0", "2", "--q1"], capsys)
    assert code == 0
    assert out.strip() == str(classical.polynomial_form(5))


def test_compute_dual_pbw(capsys):
    code, out, _ = run(["compute", "1", "0", "1", "0", "--dual-pbw"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert "E[1,0,1,0]: 1" in lines
    assert "E[0,2,0,0]: -q" in lines


def test_compute_malformed_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "1", "0", "0"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "1", "0", "0", "-1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_product_contains_expected_terms(capsys):
    code, out, _ = run(["product", "1", "0", "0", "0", "0", "0", "0", "1"], capsys)
    assert code == 0
    assert "B[1,0,0,1]" in out and "B[0,1,1,0]" in out
    # u3 * u0 = B[1,0,0,1] + q^2 B[0,1,1,0]
    code, out, _ = run(["product", "1", "0", "0", "0", "0", "0", "0", "1",
                        "--format", "json"], capsys)
    data = json.loads(out)
    terms = {tuple(t["c"]): t["coef"] for t in data["terms"]}
    assert terms == {(1, 0, 0, 1): "1", (0, 1, 1, 0): "q^2"}


def test_product_identity(capsys):
    code, out, _ = run(["product", "0", "0", "0", "0", "2", "0", "0", "1"], capsys)
    assert code == 0
    assert out.strip().endswith("B[2,0,0,1]")


def test_product_layer_cap(capsys):
    code, _, err = run(["product", "5", "0", "0", "0", "0", "0", "0", "5"], capsys)
    assert code == 3
    assert "max-layer" in err


def test_verify_bogus_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_recursions(capsys):
    code, out, _ = run(["verify", "recursions", "--n-max", "3"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["suites"][0]["suite"] == "recursions"
    assert all(e["ok"] for e in report["suites"][0]["entries"])


def test_verify_serre_report_schema(capsys):
    code, out, _ = run(["verify", "serre", "--seed", "5"], capsys)
    assert code == 0
    report = json.loads(out)
    entries = report["suites"][0]["entries"]
    assert len(entries) == 6
    assert all(set(e) == {"relation", "weight", "mode", "member"} for e in entries)


def test_verify_out_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(["verify", "pbw-expansion", "--n-max", "2", "--out", str(out_path)], capsys)
    assert code == 0
    assert out == ""
    report = json.loads(out_path.read_text())
    assert report["ok"] is True


def test_table_cluster(capsys):
    code, out, _ = run(["table", "cluster", "4..4"], capsys)
    assert code == 0
    assert "U3^2*U0 - 2*U3*U2*U1 + U2^3" in out


def test_table_layer(capsys):
    code, out, _ = run(["table", "layer", "2"], capsys)
    assert code == 0
    assert "B[1,0,1,0] = u3*u1 - (q^2)*u2^2" in out


def test_table_empty_range(capsys):
    code, out, _ = run(["table", "cluster", "6..4"], capsys)
    assert code == 0
    assert out.strip() == ""


def test_table_bad_range(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "cluster", "x..y"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_table_layer_cap(capsys):
    code, _, err = run(["table", "layer", "9", "--max-layer", "8"], capsys)
    assert code == 3
    assert "max-layer" in err


def test_verify_cache_dir(tmp_path, capsys):
    # in-process memoized layers would bypass the disk cache; start cold
    for k in (0, 1, 2):
        dcb._LAYER_TABLES.pop(k, None)
    code, out, _ = run(["verify", "layers", "--k-max", "2",
                        "--cache-dir", str(tmp_path)], capsys)
    assert code == 0
    assert (tmp_path / "layer_2.json").exists()
    import os

    os.environ.pop("QCA_CACHE_DIR", None)
    for k in (0, 1, 2):
        dcb._LAYER_TABLES.pop(k, None)


def test_verify_jobs_parallel(capsys):
    code, out, _ = run(["verify", "all", "--n-max", "2", "--k-max", "2", "--jobs", "2"], capsys)
    assert code == 0
    report = json.loads(out)
    assert [s["suite"] for s in report["suites"]] == list(cli.SUITES)


def test_latex_output(capsys):
    code, out, _ = run(["compute", "1", "0", "1", "0", "--format", "latex"], capsys)
    assert code == 0
    assert out.strip() == "u_3u_1-(q^{2})u_2^{2}"
