import json
from pathlib import Path

import pytest

from gradus.cli import main, parse, parse_polynomial, parse_relation, render_univariate, run, render_tsv
from gradus.errors import ProblemParseError
from gradus.ring import polynomial_ring

DATA = Path(__file__).parent / "data"


def write(tmp_path, text, name="p.problem"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def rows(out):
    return [line.split("\t") for line in out.splitlines()]


def value(out, command, key):
    for idx, cmd, k, v in rows(out):
        if cmd == command and k == key:
            return v
    raise KeyError((command, key))


def test_expression_parser():
    R = polynomial_ring(("x", "y"), (1, 2))
    x, y = R.gens()
    assert parse_polynomial("-(x+1)^2 + 2*x*(y - 3)", R) == -(x + 1) ** 2 + 2 * x * (y - 3)
    assert parse_polynomial("x^0", R) == R.const(1)
    v = parse_relation("x^2 - y*e2 + 3*x*(e1 + e2)", R, 2)
    assert v.component(0) == x**2 + 3 * x
    assert v.component(1) == 3 * x - y


@pytest.mark.parametrize("text, col", [
    ("x + * y", 5),
    ("x^y", 3),
    ("(x + y", 7),
    ("x y", 3),
    ("q + x", 1),
    ("2x", 2),
])
def test_expression_errors_have_columns(text, col):
    R = polynomial_ring(("x", "y"))
    with pytest.raises(ProblemParseError) as info:
        parse_polynomial(text, R, line=1)
    assert info.value.column == col


def test_marker_errors():
    R = polynomial_ring(("x", "y"))
    with pytest.raises(ProblemParseError):
        parse_relation("x*e1*e2", R, 2)
    with pytest.raises(ProblemParseError):
        parse_relation("e1^2", R, 1)
    with pytest.raises(ProblemParseError):
        parse_polynomial("x*e1", R)


def test_degree_example(tmp_path, capsys):
    path = write(tmp_path, "field Q\nring x:1 y:2\nmodule shifts 0\nrel x^2\ncmd degree\n")
    assert main(["run", path]) == 0
    assert value(capsys.readouterr().out, "degree", "degree") == "1"


def test_empty_module_block_is_the_ring(tmp_path, capsys):
    path = write(tmp_path, "ring x:1 y:2\ncmd degree\n")
    assert main(["run", path]) == 0
    out = capsys.readouterr().out
    assert value(out, "degree", "dim") == "2"
    assert value(out, "degree", "degree") == "1/2"


def test_zero_module_rendering(tmp_path, capsys):
    path = write(tmp_path, "ring x:1 y:2\nrel 1*e1\ncmd dim\ncmd degree\n")
    assert main(["run", path]) == 0
    out = capsys.readouterr().out
    assert value(out, "dim", "dim") == "-inf"
    assert value(out, "degree", "degree") == "0"


def test_golden_output_is_byte_identical(capsys):
    assert main(["run", str(DATA / "micro.problem")]) == 0
    first = capsys.readouterr().out
    assert main(["run", str(DATA / "micro.problem")]) == 0
    assert capsys.readouterr().out == first
    assert first == (DATA / "micro.tsv").read_text()


def test_verify_all_passes(capsys):
    main(["run", str(DATA / "micro.problem")])
    out = capsys.readouterr().out
    verdicts = {k: v for _, cmd, k, v in rows(out) if cmd == "verify" and k not in ("command", "status")}
    assert set(verdicts) == {"smoke", "koszul_samuel", "main_theorem", "euler_poincare", "decompose"}
    assert all(v.startswith("PASS") for v in verdicts.values())
    assert verdicts["decompose"] == "PASS: degree 1 = 1; multiplicity 2 = 2"


def test_non_monomial_decompose_is_skipped(tmp_path, capsys):
    path = write(tmp_path, "ring x:1 y:1\nrel x^2 - y^2\ncmd verify decompose\n")
    assert main(["run", path]) == 0
    captured = capsys.readouterr()
    assert value(captured.out, "verify", "decompose").startswith("SKIP")
    assert "skipped" in captured.err


def test_json_mirror(tmp_path, capsys):
    path = write(tmp_path, "ring x:1 y:2\nrel x^2\ncmd gsop seed=3\n")
    assert main(["run", path, "--json", "--window", "6"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["window_slack"] == 6
    (rep,) = payload["reports"]
    assert rep["command"] == "gsop" and dict(rep["results"])["seed"] == "3"


def test_seed_flag_is_echoed(tmp_path, capsys):
    path = write(tmp_path, "ring x:1 y:1\nrel x*y\ncmd gsop\n")
    assert main(["run", path, "--seed", "42"]) == 0
    assert value(capsys.readouterr().out, "gsop", "seed") == "42"


def test_timing_goes_to_stderr(tmp_path, capsys):
    path = write(tmp_path, "ring x:1\ncmd dim\n")
    main(["run", path])
    captured = capsys.readouterr()
    assert "s\n" in captured.err and "0." not in captured.out


def test_command_errors_are_isolated(tmp_path, capsys):
    text = "ring x:1 y:1\nrel x*y\nideal A = x\ncmd koszul xs=A\ncmd dim\n"
    assert main(["run", write(tmp_path, text)]) == 1
    out = capsys.readouterr().out
    assert value(out, "koszul", "status") == "error"
    assert value(out, "koszul", "error").startswith("NotGIODError")
    assert value(out, "dim", "dim") == "1"


def test_failed_verify_sets_exit_code(tmp_path, capsys, monkeypatch):
    from gradus import cli
    monkeypatch.setattr(cli.Session, "verify_smoke", lambda self: ("FAIL", "forced"))
    assert main(["run", write(tmp_path, "ring x:1\ncmd verify smoke\n")]) == 1
    assert value(capsys.readouterr().out, "verify", "status") == "fail"


@pytest.mark.parametrize("text, line, col", [
    ("ring x:1\nfoo bar\n", 2, 1),
    ("ring x:1 e1:1\n", 1, 10),
    ("ring x:1 y:0\n", 1, 12),
    ("ring x:1 x:1\n", 1, 10),
    ("ring x\n", 1, 6),
    ("field R\nring x:1\n", 1, 7),
    ("field Fp 9\nring x:1\n", 1, 10),
    ("rel x\n", 1, 1),
    ("ring x:1 y:2\nrel x + y\n", 2, 5),
    ("ring x:1\nrel x*e2\n", 2, 7),
    ("ring x:1\nmodule shifts 0 a\n", 2, 17),
    ("ring x:1\ncmd dim extra=1\n", 2, 9),
    ("ring x:1\ncmd samuel I=J\n", 2, 14),
    ("ring x:1\nideal J = x\ncmd samuel nmax=3\n", 3, 5),
    ("ring x:1\ncmd gsop seed=-1\n", 2, 15),
    ("ring x:1\ncmd verify everything\n", 2, 12),
    ("ring x:1 y:2\nideal J = x + y\n", 2, 11),
    ("ring x:1\nrel x\nmodule shifts 0\n", 3, 1),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ProblemParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_inhomogeneous_rel_reports_degrees():
    with pytest.raises(ProblemParseError, match=r"\[1, 2\]"):
        parse("ring x:1 y:2\nrel x + y\n")


def test_parse_errors_exit_two(tmp_path, capsys):
    assert main(["run", write(tmp_path, "ring x:1\ncmd nope\n")]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["run", str(tmp_path / "missing.problem")]) == 2


def test_comments_blank_lines_and_prime_field():
    problem = parse("# header\n\nfield Fp 7   # small prime\nring x:1 y:1\n\nrel 8*x*y\ncmd dim\n")
    assert problem.field.characteristic == 7
    assert problem.module.relations[0].component(0) == problem.ring.var(0) * problem.ring.var(1)
    reports = run(problem)
    assert "1\tdim\tdim\t1" in render_tsv(reports)


def test_rank_two_verify(tmp_path, capsys):
    text = ("field Q\nring x:1 y:1\nmodule shifts 0 1\n"
            "rel x*e2 - (x+y)^2*e1\nrel y^2*e2\ncmd verify all\n")
    assert main(["run", write(tmp_path, text)]) == 0
    out = capsys.readouterr().out
    assert value(out, "verify", "main_theorem").startswith("PASS")


def test_univariate_rendering():
    from fractions import Fraction
    assert render_univariate([0, Fraction(1, 2), Fraction(1, 2)]) == "1/2*n^2 + 1/2*n"
    assert render_univariate([Fraction(-3), 0, 1]) == "n^2 - 3"
    assert render_univariate([]) == "0"
