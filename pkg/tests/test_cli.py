import json
import os

import pytest

from pradical.certificates import comparable
from pradical.cli import main

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")
PAPER_G = os.path.join(FIXTURES, "paper-G.alg")
ALPHA4 = os.path.join(FIXTURES, "alpha4.hopf")


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_and_radical_on_file(capsys):
    code, out, err = run(["validate", PAPER_G], capsys)
    assert code == 0 and "verdict: pass" in out
    code, out, err = run(["radical", PAPER_G], capsys)
    assert code == 0 and "verdict: exact" in out and "radical dim 0" in out


def test_gallery_targets_and_listing(capsys):
    code, out, err = run(["gallery"], capsys)
    assert code == 0 and "paper-G@p=2" in out
    code, out, err = run(["gallery", "paper-G@p=2"], capsys)
    assert code == 0 and "verdict: pass" in out
    code, out, err = run(["radical", "gallery:paper-G@p=2"], capsys)
    assert code == 0 and "s4" in out and "verdict: exact" in out


def test_false_and_undecided_verdicts_exit_zero(capsys):
    code, out, err = run(["unipotent", "gallery:mu@2"], capsys)
    assert code == 0 and "verdict: false" in out
    code, out, err = run(["mult-type", "gallery:alpha@2"], capsys)
    assert code == 0 and "verdict: false" in out


def test_operational_failures_exit_nonzero(capsys, tmp_path):
    code, out, err = run(["radical", "no-such-target"], capsys)
    assert code == 1 and "error:" in err
    bad = tmp_path / "bad.alg"
    bad.write_text("FIELD GF(6)\nBASIS X\n")
    code, out, err = run(["radical", str(bad)], capsys)
    assert code == 1 and "error:" in err
    # Hopf cap exceeded is operational
    code, out, err = run(["validate", "env(paper-G@p=2)", "--hopf-cap", "4"],
                         capsys)
    assert code == 1 and "error:" in err


def test_certificates_are_deterministic(capsys, tmp_path):
    certs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, out, err = run(["radical", PAPER_G, "--json", str(path)],
                             capsys)
        assert code == 0
        certs.append(json.loads(path.read_text()))
    assert comparable(certs[0]) == comparable(certs[1])
    cert = certs[0]
    assert list(cert) == ["tool", "version", "operation", "input_digest",
                          "options", "verdict", "payload", "timing_ms"]
    assert cert["payload"]["strategy"] == "s4"


def test_series_verify_and_p_reductive(capsys):
    code, out, err = run(["series-verify", PAPER_G, "--chain", "X | X,Y"],
                         capsys)
    assert code == 0 and "mu-form, alpha-type, mu-form" in out
    code, out, err = run(["p-reductive", PAPER_G], capsys)
    assert code == 0 and "verdict: true" in out


def test_hopf_commands(capsys, tmp_path):
    code, out, err = run(["hopf-frobenius", ALPHA4, "r=1"], capsys)
    assert code == 0 and "kernel order 2" in out and "x_2" in out
    code, out, err = run(["hopf-dual", ALPHA4], capsys)
    assert code == 0 and "COMULT" in out
    # round-trip the emitted dual document
    dual_path = tmp_path / "dual.hopf"
    lines = [l for l in out.splitlines() if l and not l.startswith("verdict")]
    dual_path.write_text("\n".join(lines) + "\n")
    code, out, err = run(["validate", str(dual_path)], capsys)
    assert code == 0 and "verdict: pass" in out
    # directed union
    code, out, err = run(["hopf-union", ALPHA4, "--ideal", "x_2,x_3",
                          "--ideal", "x,x_2,x_3"], capsys)
    assert code == 0 and "verdict: true" in out
    # non-directed without force is an operational failure
    prod = tmp_path / "prod.hopf"
    from pradical.gallery import alpha_hopf, mu_hopf
    from pradical.hopf import tensor_product_hopf
    from pradical.textio import print_hopf
    prod.write_text(print_hopf(tensor_product_hopf(alpha_hopf(2, 1),
                                                   mu_hopf(2))))
    args = ["hopf-union", str(prod), "--ideal", "x_1,x_x",
            "--ideal", "b1_1 + b1_x,x_1 + x_x"]
    code, out, err = run(args, capsys)
    assert code == 1
    code, out, err = run(args + ["--force-nondirected"], capsys)
    assert code == 0 and "verdict: false" in out


def test_oracle_compare_dim2(capsys):
    code, out, err = run(["oracle-compare", "--dim", "2"], capsys)
    assert code == 0 and "verdict: agree" in out
