import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bielliptic.cli import main, parse_poly, parse_value, ser
from bielliptic.qalg import INF, Poly

S52 = ["--s", "0,0,1", "--t", "-6,5,0"]
S53 = ["--s", "1,-1,0", "--t", "2,-3,0"]
S54 = ["--s", "1,-2,3", "--t", "-4,3,0"]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, out, err = run(argv)
    assert code == 0, err
    return json.loads(out)


class TestSerialization:
    @given(st.fractions(max_denominator=10**6) | st.just(INF))
    def test_round_trip_scalars(self, x):
        assert parse_value(ser(x)) == x

    @given(st.lists(st.fractions(max_denominator=100), max_size=6))
    def test_round_trip_polys(self, cs):
        p = Poly(cs)
        assert parse_poly(ser(p)) == p

    def test_no_floats(self):
        doc = run_json(["jfun", *S52, "--a", "1/3"])
        stack = [doc]
        while stack:
            x = stack.pop()
            assert not isinstance(x, float)
            if isinstance(x, dict):
                stack.extend(x.values())
            elif isinstance(x, list):
                stack.extend(x)


class TestCommands:
    def test_curve_info(self):
        doc = run_json(["curve-info", *S52])
        assert doc["j_base"] == "148176/25"
        assert doc["j_dual_base"] == "48384"
        assert run_json(["curve-info", *S53])["tau_check"] == ["-9", "-9", "1", "1"]

    def test_singular_exit_code(self):
        code, _, err = run(["curve-info", "--s", "0,0,0", "--t", "0,0,0"])
        assert code == 1 and "disc(tau)" in err

    @pytest.mark.parametrize("argv", [
        ["curve-info", "--s", "0,0,1/0", "--t", "1,2,3"],
        ["curve-info", "--s", "0,0", "--t", "1,2,3"],
        ["curve-info", "--s", "a,b,c", "--t", "1,2,3"],
        ["no-such-command"],
    ])
    def test_invalid_input(self, argv):
        assert run(argv)[0] == 1

    def test_nodes(self):
        doc = run_json(["nodes", *S52])
        assert {"a1": "-1/3", "a2": "5/6", "value": ["338688/169", "148176/25"]} in doc["nodes"]

    def test_nodes_seed_independent(self):
        assert run(["nodes", *S53, "--seed", "1"]) == run(["nodes", *S53, "--seed", "99"])

    def test_fiber(self):
        doc = run_json(["fiber", *S53, "--target", "21952/9"])
        assert doc["total"] == 12
        assert doc["side_F"] == ["-5", "-15/7", "-3/2", "-3/7", "3/5", "inf"]

    def test_contains(self):
        doc = run_json(["contains", *S52, "--u", "148176/25", "--v", "48384"])
        assert doc["contains"] is False
        doc = run_json(["contains", *S52, "--u", "48384", "--v", "148176/25"])
        assert doc["contains"] is True and doc["rational_witnesses"] == ["inf"]

    def test_symmetry(self):
        assert run_json(["symmetry", *S54])["image_symmetric"] is True

    def test_family_member_redirect(self):
        doc = run_json(["family-member", *S52, "--a", "inf"])
        assert doc["redirect"] == "dual_curve"
        assert run_json(["family-member", *S52, "--a", "2"])["c0"] == "7"

    def test_lattice_verify(self):
        doc = run_json(["lattice-verify"])
        assert doc["gram_matches_printed"] is True
        assert doc["c_Y_square"] == "4"
        assert doc["self_intersection_quadruple"] == ["0", "-4", "-1", "-2"]

    def test_sample_csv(self):
        code, out, _ = run(["sample", *S52, "--start", "0", "--stop", "1", "--step", "1/2", "--format", "csv"])
        assert code == 0
        assert out == "a,jF,jK\n0,1792,inf\n1/2,1792,3631696/2025\n1,1792,inf\n"

    def test_examples(self):
        code, out, _ = run(["examples"])
        assert code == 0
        lines = out.splitlines()
        assert not any(line.startswith("FAIL") for line in lines)
        assert sum(line.startswith("EXPECTED-DEVIATION") for line in lines) == 2

    def test_byte_stable(self):
        for argv in (["curve-info", *S54], ["jfun", *S53, "--ramification"], ["lattice-verify"]):
            assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bielliptic", "curve-info", *S52],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["j_base"] == "148176/25"
