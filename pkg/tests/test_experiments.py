import json
from fractions import Fraction

import numpy as np
import pytest

from shor_spectra.cli import main, parse_thetas
from shor_spectra.errors import ConfigError, InvalidThetaError, VerificationFailure
from shor_spectra.experiments import (
    ExperimentConfig,
    generic_state_index,
    resolve_thetas,
    run_fig1,
    run_fig23,
    run_verify,
)
from shor_spectra.operators import BlockSpec, block_operator_direct, hadamard_matrix
from shor_spectra.spectral_stats import eigendecompose_unitary


def test_published_thetas_normalized():
    turns = resolve_thetas(ExperimentConfig())
    assert turns == [Fraction(9, 14), 0, Fraction(1, 14), Fraction(3, 28), Fraction(1, 4)]


def test_theta_selectors():
    assert len(resolve_thetas(ExperimentConfig(thetas="all"))) == 28
    assert resolve_thetas(ExperimentConfig(N=31, thetas="seeds")) == [0, Fraction(1, 5)]
    assert resolve_thetas(ExperimentConfig(thetas=[36 * np.pi / 28])) == [Fraction(9, 14)]


def test_invalid_theta_suggests_nearest():
    with pytest.raises(InvalidThetaError, match="nearest valid angle is 2pi\\*1/28"):
        resolve_thetas(ExperimentConfig(thetas=[Fraction(1, 27)]))
    with pytest.raises(InvalidThetaError):
        resolve_thetas(ExperimentConfig(N=31, thetas="paper"))
    with pytest.raises(ConfigError):
        resolve_thetas(ExperimentConfig(thetas="bogus"))


def test_uniform_state_is_exact_eigenvector():
    # H|0> = F|0> and Lambda|0> = |0>, so the uniform vector is fixed by every block
    u = hadamard_matrix(6).entries[:, 0]
    for t in (Fraction(9, 14), Fraction(1, 4), Fraction(1, 3)):
        M = block_operator_direct(BlockSpec.from_turns(t, 6)).entries
        assert np.linalg.norm(M @ u - u) < 1e-13
        sp = eigendecompose_unitary(M)
        assert sp.eigenangles[0] < 1e-12
        assert np.allclose(np.abs(sp.eigenvectors[:, 0]), 1 / 8)
        assert generic_state_index(sp) == 1


def test_fig1_small(tmp_path):
    cfg = ExperimentConfig(n1=6, thetas=[Fraction(0)], output_dir=tmp_path)
    rep = run_fig1(cfg)
    assert rep.data["spacing_count"] == 63
    with open(tmp_path / "histogram.csv") as fh:
        assert fh.readline().strip() == "bin_center,density"
    assert (tmp_path / "spacings.csv").read_text().splitlines()[0] == "s"
    assert (tmp_path / "reference_curves.csv").read_text().startswith("s,cue,goe,poisson\n")
    assert "histogram.csv" in (tmp_path / "fig1.gp").read_text()
    report = json.loads((tmp_path / "fig1_report.json").read_text())
    assert set(report["ks"]) == {"cue", "goe", "poisson"}
    assert report["params"]["thetas"] == [{"turns": "0/1", "theta": 0.0}]
    rep = run_fig1(ExperimentConfig(n1=6, thetas=[Fraction(0)], include_wraparound=True, output_dir=tmp_path))
    assert rep.data["spacing_count"] == 64


def test_fig1_single_theta_n1_10(tmp_path):
    rep = run_fig1(ExperimentConfig(thetas=[Fraction(0)], output_dir=tmp_path))
    assert rep.data["spacing_count"] == 1023


def test_fig23_outputs(tmp_path):
    rep = run_fig23(ExperimentConfig(n1=8, output_dir=tmp_path))
    assert rep.data["params"]["state_index"] == 1
    assert rep.data["counts"]["intensities"] == 256
    assert rep.data["intensity_mean"] == pytest.approx(1.0, abs=1e-12)
    rows = (tmp_path / "cumulative.csv").read_text().splitlines()
    assert rows[0] == "x,xi" and rows[-1].endswith(",1")
    assert len((tmp_path / "intensity.csv").read_text().splitlines()) == 257
    # the uniform state is detected as far from exponential
    rep0 = run_fig23(ExperimentConfig(n1=8, eigenstate_index=(0, 0), output_dir=tmp_path))
    assert rep0.data["ks"]["exponential"] == pytest.approx(1 - np.exp(-1), abs=1e-9)
    with pytest.raises(ConfigError):
        run_fig23(ExperimentConfig(n1=8, eigenstate_index=(0, 999), output_dir=tmp_path))


@pytest.mark.parametrize("n1, N", [(3, 3), (2, 31), (4, 15)])
def test_verify_passes(n1, N, tmp_path):
    rep = run_verify(ExperimentConfig(n1=n1, N=N, output_dir=tmp_path))
    assert rep.data["passed"]


def test_verify_failure_is_reported(tmp_path, monkeypatch):
    import shor_spectra.experiments as ex
    monkeypatch.setattr(ex, "commutator_with_shift", lambda U, shape: 1.0)
    with pytest.raises(VerificationFailure) as info:
        run_verify(ExperimentConfig(n1=2, N=3, output_dir=tmp_path))
    assert "commutator_U_IdxS" in str(info.value)
    assert main(["verify", "--n1", "2", "-N", "3", "--out", str(tmp_path)]) == 3


def test_parse_thetas():
    assert parse_thetas("paper") == "paper"
    assert parse_thetas("-10/28, 0/1,7/28") == [Fraction(-5, 14), 0, Fraction(1, 4)]


def test_cli_orbits(capsys):
    assert main(["orbits", "--base", "2", "--modulus", "31"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == 5 and len(out["orbits"]) == 7
    assert out["orbits"][1] == {"seed": 1, "length": 5, "elements": [1, 2, 4, 8, 16]}


def test_cli_shift_spectrum(capsys):
    assert main(["shift-spectrum", "--modulus", "29"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out) == 28 and out[0]["multiplicity"] == 2 and out[0]["seeds"] == [0, 1]


def test_cli_thue_morse(capsys):
    assert main(["thue-morse", "--n1", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,re,im,intensity"
    assert lines[2].startswith("1,1,") and lines[2].endswith(",2")


def test_cli_config_errors(capsys, tmp_path):
    assert main(["fig1", "--thetas", "1/27", "--out", str(tmp_path)]) == 2
    assert "nearest valid angle" in capsys.readouterr().err
    assert main(["orbits", "--base", "3", "--modulus", "9"]) == 2


def test_cli_fig1_and_fig23(tmp_path, capsys):
    assert main(["fig1", "--n1", "6", "--thetas", "0/1,7/28", "--out", str(tmp_path)]) == 0
    assert json.loads(capsys.readouterr().out)["spacing_count"] == 126
    assert main(["fig23", "--n1", "6", "--thetas", "7/28", "--seed-index", "3", "--out", str(tmp_path)]) == 0
    assert json.loads(capsys.readouterr().out)["params"]["state_index"] == 3


def test_env_guard_maps_to_config_error(monkeypatch, tmp_path):
    monkeypatch.setenv("SHOR_SPECTRA_MAX_DIM", "16")
    assert main(["fig1", "--n1", "6", "--thetas", "0/1", "--out", str(tmp_path)]) == 2
