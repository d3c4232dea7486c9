import json

import pytest

from quasif.cli import build_parser, main, request_from_args, run
from quasif.commands.base import CommandRequest
from quasif.construct_enumerate import construct_of_type
from quasif.core_ideal import ideal_from_indices
from quasif.errors import UsageError
from quasif.io import IdealFile
from quasif.quasi_classify import quasi_type

J_GENS = "x1x2x4,x1x2x5,x1x4x5,x2x3x5,x3x4x5"


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_text(capsys):
    code, out, _ = invoke(capsys, "classify", "--gens", J_GENS, "--n", "5")
    assert code == 0
    assert "type: (0, 1, 0)" in out
    assert "f(δ_F): (5, 9, 5)" in out
    assert "f(δ_N): (5, 10, 5)" in out


def test_classify_not_quasi(capsys):
    code, out, _ = invoke(capsys, "classify", "--gens", "x1,x2x3", "--n", "3")
    assert code == 0
    assert "type: NotQuasi (" in out


def test_classify_json_round_trips_the_ideal(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "classify", "--gens", J_GENS, "--n", "5")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == [0, 1, 0]
    assert data["f_ideal"] is False
    assert IdealFile.model_validate(data).to_ideal() == ideal_from_indices(
        5, [[1, 2, 4], [1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 4, 5]]
    )


def test_format_after_the_subcommand(capsys):
    code, out, _ = invoke(capsys, "bounds", "--n", "8", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 8, "b_min": -26, "b_max": 4}


def test_classify_with_criteria(capsys):
    code, out, _ = invoke(capsys, "classify", "--gens", "x1x2,x3x4,x1x3", "--n", "4",
                          "--height-criterion", "--shadow-criterion")
    assert code == 0
    assert "height criterion: holds" in out
    assert "shadow criterion: holds" in out


def test_construct(capsys):
    code, out, _ = invoke(capsys, "construct", "--n", "8", "--b", "-6")
    assert code == 0
    assert "ideal (17 generators):" in out
    assert "type: (0, -6) (verified)" in out


def test_construct_with_explicit_choice(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "construct", "--n", "8", "--b", "-6",
                          "--A", "1,2,3,4", "--D", "x1x6,x2x7,x2x8,x3x7,x4x7")
    assert code == 0
    data = json.loads(out)
    assert data["D"] == [[1, 6], [2, 7], [2, 8], [3, 7], [4, 7]]
    assert len(data["W_A"]) == 12


def test_construct_inadmissible(capsys):
    code, out, err = invoke(capsys, "construct", "--n", "8", "--b", "3")
    assert code == 1
    assert out == ""
    assert err.startswith("InadmissibleType:")


def test_bounds(capsys):
    code, out, _ = invoke(capsys, "bounds", "--n", "8")
    assert code == 0
    assert out.strip() == "-26 <= b <= 4"


def test_domain_error_exit_code(capsys):
    code, _, err = invoke(capsys, "classify", "--gens", "x1x2", "--n", "3")
    assert code == 1
    assert err.startswith("UncoveredVertices:")


def test_usage_errors(capsys):
    code, _, err = invoke(capsys, "classify", "--gens", "x1x2")
    assert code == 2
    assert "UsageError" in err
    code, _, err = invoke(capsys, "perfect", "--n", "5")
    assert code == 2
    code, _, _ = invoke(capsys, "classify", "--n", "4")
    assert code == 2


def test_argparse_rejections():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["bounds"])
    assert info.value.code == 2


def test_input_and_gens_together(tmp_path):
    path = tmp_path / "ideal.json"
    path.write_text('{"n": 4, "generators": [[1, 2]]}')
    args = build_parser().parse_args(["classify", "--input", str(path), "--gens", "x1x2", "--n", "4"])
    with pytest.raises(UsageError):
        request_from_args(args)


def test_out_writes_a_file(capsys, tmp_path):
    target = tmp_path / "bounds.txt"
    code, out, _ = invoke(capsys, "--out", str(target), "bounds", "--n", "4")
    assert code == 0
    assert out == ""
    assert target.read_text() == "-4 <= b <= 2\n"


def test_file_input(capsys, tmp_path):
    as_json = tmp_path / "j.json"
    as_json.write_text(json.dumps({"n": 5, "generators": [[1, 2, 4], [1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 4, 5]]}))
    code, out, _ = invoke(capsys, "classify", "--input", str(as_json))
    assert code == 0
    assert "type: (0, 1, 0)" in out

    as_text = tmp_path / "j.txt"
    as_text.write_text("# J\nx1x2x4\nx1x2x5, x1x4x5\n[2,3,5]\nx3x4x5\n")
    code, out, _ = invoke(capsys, "classify", "--input", str(as_text), "--n", "5")
    assert code == 0
    assert "type: (0, 1, 0)" in out

    code, _, err = invoke(capsys, "classify", "--input", str(as_text))
    assert code == 1
    assert err.startswith("ParseError:")

    code, _, err = invoke(capsys, "classify", "--input", str(tmp_path / "missing.txt"), "--n", "5")
    assert code == 2


def test_fvector_of_a_complex_file(capsys, tmp_path):
    path = tmp_path / "cycle.json"
    path.write_text(json.dumps({"n": 4, "facets": [[1, 3], [1, 4], [2, 3], [2, 4]]}))
    code, out, _ = invoke(capsys, "fvector", "--input", str(path))
    assert code == 0
    assert "f: (4, 4)" in out
    code, out, _ = invoke(capsys, "complex", "--input", str(path), "--which", "nonface")
    assert code == 0
    assert out.strip() == "I_N: <x1x2, x3x4>"


def test_complex_ghost_vertices(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "complex", "--gens", "x1,x2x3", "--n", "3",
                          "--which", "nonface")
    assert code == 0
    data = json.loads(out)
    assert data["nonface"] == [[2], [3]]
    assert data["ghost_vertices"] == [1]
    code, out, _ = invoke(capsys, "complex", "--gens", "x1,x2x3", "--n", "3", "--which", "nonface")
    assert "ghost vertices: [1]" in out


def test_primes(capsys):
    code, out, _ = invoke(capsys, "primes", "--gens", "x1x2,x3x4,x1x3", "--n", "4", "--prime", "2,3")
    assert code == 0
    assert "(x2,x3) associated: yes" in out
    code, out, _ = invoke(capsys, "primes", "--gens", "x1x2,x3x4,x1x3", "--n", "4", "--prime", "(x1,x2)")
    assert "(x1,x2) associated: no" in out
    code, _, err = invoke(capsys, "primes", "--gens", "x1x2,x3x4,x1x3", "--n", "4", "--prime", "1")
    assert code == 1
    assert err.startswith("WrongHeight:")


def test_perfect(capsys):
    code, out, _ = invoke(capsys, "perfect", "--n", "4", "--check", "x1x2,x3x4")
    assert code == 0
    assert "upper perfect: True" in out
    assert "perfect: True" in out
    code, out, _ = invoke(capsys, "perfect", "--n", "6", "--number")
    assert "N(6,2) formula: 6" in out
    assert "N(6,2) search: 6" in out
    code, out, _ = invoke(capsys, "perfect", "--n", "9", "--number")
    assert code == 0
    assert "N(9,2) formula: 16" in out
    assert "N(9,2) search skipped" in out


def test_enumerate(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--n", "4", "--b", "-2", "--mod-symmetry")
    assert code == 0
    assert "count: 15" in out
    assert "orbits: 2" in out
    code, out, _ = invoke(capsys, "--format", "json", "enumerate", "--n", "4", "--b", "0", "--cap", "3")
    data = json.loads(out)
    assert data["count"] == 12
    assert data["truncated"] is True
    assert len(data["ideals"]) == 3
    code, _, err = invoke(capsys, "enumerate", "--n", "9", "--b", "0")
    assert code == 1
    assert err.startswith("SearchTooLarge:")


def test_hilbert(capsys):
    code, out, _ = invoke(capsys, "hilbert", "--gens", "x1x2,x3x4,x1x3x5,x2x4x5", "--n", "5")
    assert code == 0
    assert "H(2) = 13" in out
    assert "series: 1 + 5z/(1-z) + 8z^2/(1-z)^2 + 2z^3/(1-z)^3" in out
    assert "via f(δ_F) + type (0, 0, 0): agrees" in out


def test_hilbert_closed_form(capsys):
    gens = ",".join(f"x{i}x{j}" for i, j in [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
        (1, 6), (2, 7), (2, 8), (3, 7), (4, 7),
    ])
    code, out, _ = invoke(capsys, "hilbert", "--gens", gens, "--n", "8", "--closed-form")
    assert code == 0
    assert "closed form H(z) = 11*z - 3" in out
    assert "consistent: True" in out
    code, out, _ = invoke(capsys, "hilbert", "--gens", "x1x2x3", "--n", "3", "--closed-form")
    assert "closed form: not a degree-2 quasi f-ideal" in out


def test_verbose_flag(capsys):
    code, out, _ = invoke(capsys, "-v", "bounds", "--n", "5")
    assert code == 0
    assert out.strip() == "-8 <= b <= 2"


def test_run_is_a_thin_adapter():
    outcome = run(CommandRequest(command="construct", n=8, b=-6, format="json"))
    assert outcome.exit_code == 0
    data = json.loads(outcome.output)
    ideal = IdealFile.model_validate(data).to_ideal()
    assert ideal == construct_of_type(8, -6).ideal
    assert quasi_type(ideal).entries == (0, -6)


def test_run_unknown_command():
    outcome = run(CommandRequest(command="nope"))
    assert outcome.exit_code == 2
    assert outcome.diagnostics.startswith("UsageError:")


@pytest.mark.parametrize("command", ["fvector", "complex"])
def test_complex_file_without_facets(capsys, tmp_path, command):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"n": 3, "facets": []}))
    code, out, err = invoke(capsys, command, "--input", str(path))
    assert code == 1
    assert out == ""
    assert err.startswith("ParseError:")


def test_hilbert_negative_table_length(capsys):
    code, out, err = invoke(capsys, "hilbert", "--gens", "x1x2,x3x4", "--n", "4", "--function", "-1")
    assert code == 1
    assert out == ""
    assert err.startswith("NegativeDegree:")
