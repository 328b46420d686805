import os
import pathlib

import pytest

import mwcomb

DATA = pathlib.Path(os.environ.get("MWCOMB_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))
EXAMPLE = (DATA / "st2_sp2.param").read_text()


def test_parse_and_render_round_trip():
    blocks = mwcomb.parse_parameter(EXAMPLE)
    assert [(b["a"], b["b"]) for b in blocks] == [(2, 1), (1, 2)]
    assert mwcomb.parse_parameter(mwcomb.render_parameter(EXAMPLE)) == blocks


def test_signs_of_worked_example():
    s = mwcomb.signs(EXAMPLE)
    assert s["z_W"] == 1
    assert s["z_U"] == -1
    assert s["half_sum_exponent"] == 9
    assert s["eval_at_z"]["U"] == 1
    assert s["eval_at_c2"]["U"] == -1


def test_dominate_and_resolve():
    d = mwcomb.dominate(EXAMPLE)
    assert d["E"] == [{"rho": "rho", "x": "3/2"}]
    r = mwcomb.resolve(EXAMPLE)
    assert {"coeff": 1, "word": ["[1/2..-1/2]rho", "[-1/2..1/2]rho"]} in r["expr"]
    assert mwcomb.resolve(EXAMPLE, "plus10")["expr"] == r["expr"]


def test_dual_and_complex():
    assert mwcomb.dual("{[2..0]rho}") == "{[2..2]rho, [1..1]rho, [0..0]rho}"
    assert mwcomb.check_nilpotent(5)
    assert mwcomb.check_theta_sign(5)
    assert mwcomb.subset_complex_homology({1, 2}, set(), {1}) == [0, 0, 0]


def test_beta():
    text = "cuspidal rho d=1\nblock rho 1 3\n"
    assert mwcomb.j_psi(text, "rho", 3) == (3, 2)
    assert mwcomb.beta_sign(text, "rho", 3) == -1


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        mwcomb.parse_parameter("cuspidal rho\nblock rho 0 1\n")
    code, out, err = mwcomb.run_cli(["classify", "/nonexistent"])
    assert code == 1
    assert "cannot open" in err
