import io
import json
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest

from exactdyn import baker, cli, grid, readout
from exactdyn.encoding import Encoding, encode_rational

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, golden",
    [
        (("--seed", "0", "encode", "--rational", "1/2"), "encode_half.txt"),
        (("--seed", "0", "sensitivity", "--eta", "1/10", "--a", "1/3", "--ap", "1"), "sensitivity_tenth.txt"),
        (("--seed", "0", "measured-succ", "--d", "3", "--readout", "0.000"), "measured_succ_first_cell.txt"),
    ],
)
def test_golden_outputs(argv, golden):
    code, out, err = run_cli(*argv)
    assert code == 0 and err == ""
    assert out.encode() == (GOLDEN / golden).read_bytes()


def test_output_is_deterministic():
    first = run_cli("--seed", "0", "limit-demo")
    second = run_cli("--seed", "0", "limit-demo")
    assert first == second


def test_exit_codes():
    assert run_cli("encode", "--rational", "1/2")[0] == 0
    assert run_cli("no-such-command")[0] == 1
    assert run_cli("encode")[0] == 1  # missing --rational
    assert run_cli("baker-step", "--x", "3/2")[0] == 2
    assert run_cli("--fuel", "4", "murec-eval", "--builtin", "addition", "3", "4")[0] == 3
    assert run_cli("decode", "--code", "3")[0] == 4


def test_errors_go_to_stderr():
    code, out, err = run_cli("decode", "--code", "3")
    assert code == 4 and out == "" and "denominator" in err


def test_encode_decode_translate_are_thin_adapters():
    q = Fraction(-22, 7)
    want = encode_rational(q, Encoding.ALTERNATIVE)
    code, out, _ = run_cli("encode", "--rational=-22/7", "--encoding", "alternative")
    assert code == 0 and out == f"code={want}\n"
    code, out, _ = run_cli("decode", "--code", str(want), "--encoding", "alternative")
    assert out == "rational=-22/7\n"
    code, out, _ = run_cli("translate", "--code", str(want), "--from", "alternative", "--to", "canonical")
    assert out == f"code={encode_rational(q, Encoding.CANONICAL)}\n"


def test_murec_eval_value_and_divergence():
    code, out, _ = run_cli("murec-eval", "--builtin", "multiplication", "6", "7")
    assert code == 0 and "value=42" in out
    code, out, _ = run_cli("--fuel", "1000", "murec-eval", "--builtin", "addition", "0", "999")
    assert code == 3
    assert "outcome=diverged" in out and "fuel_spent=1000" in out


def test_murec_eval_program_file(tmp_path):
    path = tmp_path / "id.rec"
    path.write_text("proj 1 1\n")
    code, out, _ = run_cli("murec-eval", "--program", str(path), "9")
    assert code == 0 and out.endswith("value=9\n")
    bad = tmp_path / "bad.rec"
    bad.write_text("(comp succ)\n")
    assert run_cli("murec-eval", "--program", str(bad), "9")[0] == 1
    assert run_cli("murec-eval", "--program", str(tmp_path / "nope.rec"), "9")[0] == 1


def test_baker_commands_match_library():
    code, out, _ = run_cli("baker-step", "--x", "3/4")
    assert out == "value=1/2\n"
    code, out, _ = run_cli("baker-orbit", "--x", "1/48", "--steps", "4")
    rows = [line.split("\t") for line in out.splitlines() if "\t" in line]
    assert [r[1] for r in rows] == ["1/48", "1/24", "1/12", "1/6", "1/3"]
    assert all(len(r) == 3 for r in rows)  # decimal column is on by default
    code, out, _ = run_cli("baker-approx", "--x", "1/4", "--steps", "2", "--epsilon", "1/100")
    assert "input_accuracy=1/400" in out and "value=1\n" in out


def test_grid_commands_match_library():
    code, out, _ = run_cli("grid-table", "--resolution", "2")
    assert out.splitlines()[1:] == ["0\t0", "1\t2", "2\t0"]
    orbit, entry, length = grid.orbit_with_cycle(grid.GridState(10, 3))
    code, out, _ = run_cli("grid-sim", "--resolution", "10", "--index", "3")
    assert f"cycle_entry={entry}" in out and f"cycle_length={length}" in out
    rows = [line.split("\t") for line in out.splitlines() if "\t" in line]
    assert [int(r[1]) for r in rows] == orbit


def test_measured_commands_match_library():
    m = readout.Readout(3, 999)
    code, out, _ = run_cli("measured-succ", "--d", "3", "--readout", "0.999")
    assert out == "readout=0.999\nsuccessors=" + ",".join(readout.successors(m).texts()) + "\n"
    want = readout.reach(readout.Readout(3, 0), 2).texts()
    code, out, _ = run_cli("measured-reach", "--d", "3", "--readout", "0.000", "--steps", "2")
    assert out.endswith("reachable=" + ",".join(want) + "\n")


def test_limit_demo_contents():
    code, out, _ = run_cli("limit-demo")
    assert code == 0
    assert "first_below_threshold=7" in out
    witness_rows = [line for line in out.splitlines() if line.startswith("witness\t")]
    assert len(witness_rows) == 6
    for line in witness_rows:
        assert line.split("\t")[-2] == "1"  # exact unit gap column


def test_structured_format_is_json():
    code, out, _ = run_cli("--format", "structured", "encode", "--rational", "1/2")
    doc = json.loads(out)
    assert doc == {"status": "ok", "payload": {"code": 12}}
    code, out, _ = run_cli("--format", "structured", "grid-table", "--resolution", "1")
    doc = json.loads(out)
    assert doc["rows"] == [["0", "0"], ["1", "0"]]


def test_decimals_column():
    code, out, _ = run_cli("--decimals", "3", "baker-step", "--x", "1/3")
    assert out == "value=2/3\nvalue_dec=0.666\n"


def test_sensitivity_payload_equals_witness():
    w = baker.sensitivity_witness(Fraction(1, 1000), Fraction(1, 3), Fraction(2, 3))
    code, out, _ = run_cli("sensitivity", "--eta", "1/1000", "--a", "1/3", "--ap", "2/3")
    lines = dict(line.split("=", 1) for line in out.splitlines())
    assert lines == {
        "x0": str(w.start_a),
        "x0p": str(w.start_b),
        "n": str(w.steps),
    }


def test_structured_decimals_on_scalars():
    code, out, _ = run_cli("--format", "structured", "--decimals", "2", "baker-step", "--x", "1/3")
    doc = json.loads(out)
    assert doc["payload"] == {"value": "2/3", "value_dec": "0.66"}


def test_structured_errors_go_in_the_document():
    code, out, _ = run_cli("--format", "structured", "decode", "--code", "3")
    assert code == 4
    doc = json.loads(out)
    assert doc["status"] == "not_a_code" and "denominator" in doc["message"]


def test_deeply_nested_program_is_a_usage_error(tmp_path):
    depth = 5000
    path = tmp_path / "deep.rec"
    path.write_text("(comp succ " * depth + "proj 1 1" + ")" * depth)
    code, out, err = run_cli("murec-eval", "--program", str(path), "0")
    assert code == 1 and "nested too deeply" in err


def test_invalid_grid_and_readout_are_domain_errors():
    assert run_cli("grid-sim", "--resolution", "10", "--index", "11")[0] == 2
    assert run_cli("grid-sim", "--resolution", "0", "--index", "0")[0] == 2
    assert run_cli("measured-succ", "--d", "3", "--readout", "0.0005")[0] == 2
    assert run_cli("measured-succ", "--d", "3", "--readout", "nonsense")[0] == 2


def test_negative_decimals_is_a_usage_error():
    assert run_cli("--decimals", "-1", "baker-step", "--x", "1/3")[0] == 1


def test_measured_reach_astronomical_steps():
    code, out, _ = run_cli("measured-reach", "--d", "2", "--readout", "0.25", "--steps", str(10**9))
    assert code == 0 and out.count(",") > 10  # large reachable set, instantly


def test_check_command_passes():
    code, out, _ = run_cli("check")
    assert code == 0
    assert "failed=0" in out
    assert "FAIL" not in out
