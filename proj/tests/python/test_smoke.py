import math
import os
import subprocess

import pytest

import blotto


@pytest.fixture
def cubic():
    return blotto.GameSpec("2", "1", ["0", "0", "0", "-1"])


def test_game_intervals(cubic):
    assert cubic.nu1 == "3/2"
    assert cubic.nu2 == "1"


def test_kernel(cubic):
    k = blotto.kernel(cubic)
    assert k["degree"] == 2
    assert k["coeffs"] == ["-1/4", "0", "-3"]


def test_basis_closed_form():
    b = blotto.basis("1", 2)
    row = b["normalized"][2]
    assert abs(row[0] + math.sqrt(5 / 8)) < 1e-10
    assert abs(row[2] - math.sqrt(45 / 8)) < 1e-10
    assert b["monic"][2] == ["-1/3", "0", "1"]


def test_solve_lp(cubic):
    rep = blotto.solve_lp(cubic, L=16)
    assert abs(rep["value"] + 3.25) < 1e-6
    assert rep["gap1"] <= 1e-6 and rep["gap2"] <= 1e-6
    assert rep["support_sizes"][0] <= 4 and rep["support_sizes"][1] <= 4


def test_solve_lp_exact(cubic):
    rep = blotto.solve_lp(cubic, L=8, exact_lp=True)
    assert rep["value"] == -3.25


def test_solve_symmetric(cubic):
    rep = blotto.solve_symmetric(cubic, L=8, K=1)
    assert abs(rep["value"] + 3.25) < 1e-9
    locs = [a["location"] for a in rep["strategy2"]["shifted"]]
    assert locs == ["-1", "1"]


def test_exact_payoff_and_verify(cubic):
    s1 = [("0", "1")]
    s2 = [("-1", "1/2"), ("1", "1/2")]
    assert blotto.exact_payoff(cubic, s1, s2) == "-13/4"
    r = blotto.verify(cubic, s1, s2)
    assert r["gap1"] <= 1e-9 and r["gap2"] <= 1e-9


def test_reduce(cubic):
    atoms = [(f"{i - 10}/10", "1/21") for i in range(21)]
    reduced = blotto.reduce(cubic, 2, atoms)
    assert len(reduced) <= 4
    assert blotto.exact_payoff(cubic, [("0", "1")], reduced) == blotto.exact_payoff(
        cubic, [("0", "1")], atoms
    )


def test_mc_check(cubic):
    estimate, stderr = blotto.mc_check(cubic, [("0", "1")], [("-1", "1/2"), ("1", "1/2")], 10000, 7)
    assert abs(estimate + 3.25) <= 4 * stderr + 1e-12


def test_bad_input_rejected():
    with pytest.raises(ValueError):
        blotto.GameSpec("-1", "0", ["0", "1"])


def test_cli_runs():
    cli = os.environ.get("BLOTTO_CLI")
    if not cli:
        pytest.skip("BLOTTO_CLI not set")
    out = subprocess.run([cli, "basis", "--nu", "1", "--max-degree", "2"], capture_output=True)
    assert out.returncode == 0
    assert b"sq_norms" in out.stdout
