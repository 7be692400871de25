import math
import subprocess
import sys

import numpy as np
import pytest

from ballharm import HarmonicExpansion, reports, save_expansion
from ballharm.cli import main


@pytest.fixture
def const_file(tmp_path):
    path = tmp_path / "const.json"
    save_expansion(HarmonicExpansion(2, "full", [[1.0]]), path)
    return str(path)


def test_norm_constant_file(const_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(
        ["norm", "--input", const_file, "--p", "1", "--q", "1", "--alpha", "0",
         "--out", str(out)]
    )
    assert code == 0
    rep = reports.load_from(out)
    assert rep["command"] == "norm"
    assert rep["values"]["norm"] == pytest.approx(0.5, rel=1e-12)
    assert rep["values"]["pq_consistency"] <= 1e-10
    assert "norm = 0.5" in capsys.readouterr().out


def test_norm_report_roundtrips(const_file, tmp_path):
    out = tmp_path / "report.json"
    main(["norm", "--input", const_file, "--out", str(out)])
    text = out.read_text()
    assert reports.dumps(reports.loads(text)) == text
    assert list(reports.loads(text).keys()) == [
        "command", "version", "seed", "parameters", "tolerances", "values", "verdicts",
    ]


def test_norm_malformed_block_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "kind": "full", "coeffs": [[1.0], [1.0, 2.0, 3.0]]}')
    code = main(["norm", "--input", str(bad)])
    assert code == 2
    err = capsys.readouterr().err
    assert "block 1" in err and "d_1 = 2" in err


def test_norm_missing_file_exits_2(tmp_path):
    assert main(["norm", "--input", str(tmp_path / "nope.json")]) == 2


def test_norm_accuracy_failure_exits_3(tmp_path):
    rng = np.random.default_rng(5)
    from ballharm import sph_dim

    f = HarmonicExpansion(
        2, "full", [rng.standard_normal(sph_dim(2, k)) for k in range(17)]
    )
    path = tmp_path / "wiggly.json"
    save_expansion(f, path)
    # a 2-point radial rule cannot integrate a degree-16 expansion
    code = main(["norm", "--input", str(path), "--p", "2", "--q", "2", "--radial-N", "2"])
    assert code == 3


def test_kernel_writes_loadable_file(tmp_path):
    out = tmp_path / "kernel.json"
    code = main(
        ["kernel", "--dim", "3", "--m", "2", "--r-max", "0.8", "--tol", "1e-8",
         "--out", str(out)]
    )
    assert code == 0
    from ballharm import load_expansion

    k = load_expansion(out)
    assert k.kind == "zonal" and k.dim == 3
    assert k.coeffs[0] == pytest.approx(2.0 * 6.5625, rel=1e-12)  # 2 gamma_0(3, 2)


def test_kernel_eval_poisson_closed_form(capsys, tmp_path):
    out = tmp_path / "p.json"
    code = main(
        ["kernel", "--dim", "2", "--r-max", "0.6", "--tol", "1e-12",
         "--eval-r", "0.5", "--eval-t", "1.0", "--out", str(out)]
    )
    assert code == 0
    # the value printed on save goes only to the report; reload and check
    rep_code = main(["kernel", "--dim", "2", "--r-max", "0.6", "--tol", "1e-12",
                     "--eval-r", "0.5", "--eval-t", "1.0"])
    assert rep_code == 0
    text = capsys.readouterr().out
    payload = reports.loads(text[text.index("{"):])
    assert payload["values"]["value"] == pytest.approx(3.0, rel=1e-10)


def test_lemma_command(tmp_path):
    out = tmp_path / "lemma.json"
    code = main(["lemma", "--id", "4", "--dim", "3", "--m", "2", "--out", str(out)])
    assert code == 0
    rep = reports.load_from(out)
    assert rep["verdicts"]["pass"] is True
    assert rep["values"]["measured"]["max_rel_error"] <= 1e-10


def test_lemma_bad_id_exits_2():
    assert main(["lemma", "--id", "7"]) == 2


def test_lemma2_precondition_exits_2():
    assert main(["lemma", "--id", "2", "--alpha", "0.5", "--lam", "1.2"]) == 2


def test_mult_check_hypothesis_violation_quotes_constraint(capsys):
    code = main(["mult-check", "--alpha", "0.5", "--beta", "0.25", "--p", "1.5"])
    assert code == 2
    assert "0 < p <= 1" in capsys.readouterr().err


def test_mult_check_pass_and_exit_codes(tmp_path):
    out = tmp_path / "mc.json"
    code = main(
        ["mult-check", "--dim", "3", "--p", "1", "--m", "2",
         "--alpha", "0.25", "--beta", "0.5", "--multiplier", "finite:4",
         "--rho-levels", "8", "--out", str(out)]
    )
    assert code == 0
    rep = reports.load_from(out)
    assert rep["verdicts"]["equivalence"] == "PASS"
    assert rep["verdicts"]["condition2"] == "bounded"


def test_mult_check_multiplier_file(tmp_path):
    from ballharm import MultiplierSequence, save_multiplier

    mpath = tmp_path / "mult.json"
    save_multiplier(MultiplierSequence(3, "zonal", np.ones(6)), mpath)
    out = tmp_path / "mc.json"
    code = main(
        ["mult-check", "--dim", "3", "--p", "1", "--m", "2",
         "--alpha", "0.5", "--beta", "0.25", "--multiplier", str(mpath),
         "--rho-levels", "8", "--out", str(out)]
    )
    # a degree-5 multiplier is bounded for any weights: verdicts agree
    assert code == 0


def test_mult_check_reports_byte_identical(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        code = main(
            ["mult-check", "--dim", "3", "--p", "1", "--m", "2",
             "--alpha", "0.5", "--beta", "0.25", "--multiplier", "ones",
             "--rho-levels", "7", "--out", str(out)]
        )
        assert code == 0
        outs.append(out.read_text())
    assert outs[0] == outs[1]


def test_cli_entrypoint_subprocess(const_file):
    proc = subprocess.run(
        [sys.executable, "-m", "ballharm.cli", "norm", "--input", const_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "norm = 0.5" in proc.stdout


def test_unknown_arguments_exit_2():
    assert main(["norm", "--nope"]) == 2
    assert main(["mult-check", "--alpha", "0.5"]) == 2  # --beta missing
