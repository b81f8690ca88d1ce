import csv
import json

import pytest

from kreinscan import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_gkdv_k1(capsys):
    code, out, _ = run(capsys, "classify", "--family", "gkdv", "--k", "1")
    assert code == 0
    assert "no candidates, dn <= 100" in out
    assert "necessary, not sufficient" in out


def test_classify_gkdv_k2(capsys):
    code, out, _ = run(capsys, "classify", "--family", "gkdv", "--k", "2")
    assert code == 0
    assert "Hopf candidates at dn = 3\n" in out
    assert "necessary, not sufficient" in out
    rows = list(csv.DictReader(line for line in out.splitlines() if not line.startswith("#")))
    [cand] = [r for r in rows if r["candidate"] == "true"]
    assert cand["dn"] == "3" and cand["class"] == "opposite" and cand["krein_product"] == "-1"


def test_classify_balanced(capsys):
    code, out, _ = run(capsys, "classify", "--family", "balanced", "--p", "2", "--q", "1", "--beta", "0.25")
    assert code == 0 and "Hopf candidates at dn = 2, 3" in out
    # beta = 0.2 is resonant: the dn = 3 root collides at the origin
    code, out, _ = run(capsys, "classify", "--family", "balanced", "--beta", "0.2", "--dn-max", "10")
    assert code == 0 and "no candidates, dn <= 10" in out
    assert "3,-0.2222222222222222,origin,-1.0,2.0,0.0,,false" in out


def test_classify_json(capsys, tmp_path):
    out_file = tmp_path / "c.json"
    code, out, _ = run(capsys, "classify", "--k", "2", "--dn-max", "5", "--format", "json", "--out", str(out_file))
    assert code == 0 and "Hopf candidates at dn = 3" in out
    data = json.loads(out_file.read_text())
    assert data["candidates"] == [3]
    assert len(data["records"]) == 5


def test_input_errors(capsys):
    assert run(capsys, "classify", "--k", "0")[0] == 2
    assert run(capsys, "classify", "--family", "custom")[0] == 2
    assert run(capsys, "classify", "--family", "custom", "--alpha-coeffs", "1,0")[0] == 2
    assert run(capsys, "classify", "--family", "balanced")[0] == 2
    assert run(capsys, "classify", "--family", "balanced", "--beta", "-1")[0] == 2
    assert run(capsys, "classify", "--tol", "0")[0] == 2
    assert run(capsys, "classify", "--family", "nope")[0] == 2
    assert run(capsys, "spectrum", "--mu", "0.7")[0] == 2
    assert run(capsys, "region", "--family", "gkdv")[0] == 2
    assert run(capsys, "region", "--beta-grid", "a:b:c")[0] == 2
    code, _, err = run(capsys, "classify", "--out", "/nonexistent/dir/x.csv")
    assert code == 2 and "/nonexistent/dir/x.csv" in err


def test_custom_family(capsys):
    code, out, _ = run(capsys, "classify", "--alpha-coeffs", "0,1", "--k", "2", "--dn-max", "6")
    assert code == 0 and "Hopf candidates at dn = 3" in out
    code, out, _ = run(capsys, "classify", "--alpha-coeffs", "-1/3,0,1", "--dn-max", "6")
    assert code == 0


def test_spectrum(capsys, tmp_path):
    code, out, _ = run(capsys, "spectrum", "--k", "2", "--mu", "-0.4", "--n-min", "4", "--n-max", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "mu_tilde,n,lambda_im"
    mu, n, lam = lines[1].split(",")
    x = 3.6
    assert (float(mu), int(n)) == (-0.4, 4) and float(lam) == pytest.approx(4 * x - x**3, abs=1e-12)


def test_spectrum_negative_mu_list_and_plot(capsys, tmp_path):
    png = tmp_path / "s.png"
    code, out, _ = run(capsys, "spectrum", "--mu", "-0.2,0.3", "--n-min", "-2", "--n-max", "2", "--plot", str(png))
    assert code == 0 and png.stat().st_size > 0
    assert len(out.splitlines()) == 1 + 2 * 5


def test_spectrum_empty_window(capsys):
    code, out, _ = run(capsys, "spectrum", "--n-min", "1", "--n-max", "0")
    assert code == 0 and out == "mu_tilde,n,lambda_im\n"


def test_region_files(capsys, tmp_path):
    out = tmp_path / "region.csv"
    png = tmp_path / "region.png"
    code, _, _ = run(capsys, "region", "--p", "2", "--q", "1", "--out", str(out), "--plot", str(png))
    assert code == 0 and png.stat().st_size > 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["dn", "beta", "regime"] and len(rows) == 1 + 200 * 12
    regimes = {(r[0], r[1]): r[2] for r in rows[1:]}
    assert regimes[("3", "0.2")] == "opposite"
    assert regimes[("3", "0.5")] == "none"
    th = (tmp_path / "region_thresholds.csv").read_text().splitlines()
    assert th[:4] == ["dn,beta0,beta_quarter", "1,0.6,0.8", "2,0.2,0.3", "3,0.1,0.3076923076923077"]


def test_region_json_flags(capsys):
    code, out, _ = run(capsys, "region", "--beta-grid", "0.1,0.2,0.25", "--dn-max", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    cell = next(c for c in data["cells"] if c["dn"] == 3 and c["beta"] == 0.2)
    assert cell["regime"] == "opposite" and cell["resonant"] and cell["origin_shifted"]
    assert cell["spectral_regime"] == "none"
    assert any(c["endpoint"] for c in data["cells"])


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# kawahara\nfamily = balanced\nbeta = 0.25\ndn_max = 5\n")
    code, out, _ = run(capsys, "classify", "--config", str(cfg))
    assert code == 0 and "Hopf candidates at dn = 2, 3" in out
    code, out, _ = run(capsys, "classify", "--config", str(cfg), "--beta", "0.9")
    assert code == 0 and "no candidates, dn <= 5" in out
    cfg.write_text("family balanced\n")
    assert run(capsys, "classify", "--config", str(cfg))[0] == 2
    assert run(capsys, "classify", "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", "--m-max", "12")
    assert code == 0
    assert out.count("no counterexample found") == 5


def test_verify_passes_and_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "verify", "--seed", "3", "--samples", "40", "--brute", "2", "--out", str(a))[0] == 0
    assert run(capsys, "verify", "--seed", "3", "--samples", "40", "--brute", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert "FAIL" not in a.read_text()


def test_outputs_byte_identical(capsys, tmp_path):
    files = []
    for name in ("x.csv", "y.csv"):
        path = tmp_path / name
        run(capsys, "region", "--seed", "1", "--dn-max", "3", "--beta-grid", "0.05:0.5:10", "--out", str(path))
        files.append(path.read_bytes())
    assert files[0] == files[1]


def test_verify_catches_sign_flip_in_s3(capsys, monkeypatch):
    import kreinscan.spoly as spoly

    original = spoly.s_poly

    def flipped(m):
        if m == 3:
            return spoly.SPolynomial(3, (1, -3))
        return original(m)

    monkeypatch.setattr(spoly, "s_poly", flipped)
    code, out, _ = run(capsys, "verify", "--samples", "30", "--brute", "1")
    assert code == 1
    assert "FAIL reduction identity" in out and "lhs=" in out


def test_fmt_round_trip():
    for x in (0.1, 1 / 3, 2.5458753860865775, -1e-300, 123456789.123456789):
        assert float(cli.fmt(x)) == x
    assert cli.fmt(None) == "" and cli.fmt(True) == "true" and cli.fmt(7) == "7"
