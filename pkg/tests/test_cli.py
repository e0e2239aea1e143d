import json
import subprocess
import sys

import pytest

from cwpoly.cli import main

from conftest import EXAMPLE_GENS, EXAMPLE_ORDER

FAT = ["construct", "fatpoints", "--sets", "1,2,3/1,3,4", "--k", "2,2", "--n", "4"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def example_file(tmp_path, capsys):
    path = tmp_path / "example.json"
    assert run(capsys, *FAT, "--out", str(path))[0] == 0
    return path


@pytest.fixture
def squares_file(tmp_path):
    path = tmp_path / "squares.txt"
    path.write_text("x1^2\nx2^2\n")
    return path


def test_construct_fatpoints(capsys):
    code, out, _ = run(capsys, *FAT)
    assert code == 0
    assert json.loads(out) == {"n": 4, "generators": [list(g) for g in sorted(EXAMPLE_GENS, key=lambda a: (sum(a), tuple(-x for x in a)))]}


def test_construct_text_format(capsys):
    code, out, _ = run(capsys, *FAT, "--format", "text")
    assert out.split() == ["x1^2", "x1*x3", "x3^2", "x1*x2*x4", "x2*x3*x4", "x2^2*x4^2"]


def test_order_split_strategy(capsys, example_file):
    code, out, _ = run(capsys, "order", str(example_file))
    res = json.loads(out)
    assert code == 0 and res["valid"]
    assert [tuple(u) for u in res["order"]] == EXAMPLE_ORDER
    code, out, _ = run(capsys, "order", str(example_file), "--strategy", "search", "--format", "text")
    assert code == 0 and len(out.split()) == 6


def test_check_modes(capsys, example_file, squares_file):
    assert run(capsys, "check", str(example_file))[0] == 0
    code, out, _ = run(capsys, "check", str(squares_file), "--mode", "polymatroidal")
    assert code == 1 and json.loads(out)["witness"] == {"u": [2, 0], "v": [0, 2], "i": 1, "degree": 2}
    code, out, _ = run(capsys, "check", str(example_file), "--mode", "exchange-bounded")
    res = json.loads(out)
    assert code == 0 and res["bounded"] and res["cap"] == 6
    code, out, _ = run(capsys, "check", str(squares_file), "--mode", "dual-bounded", "--format", "text")
    assert code == 1 and "not a decision procedure" in out and "witness" in out


def test_order_on_non_cwp(capsys, squares_file):
    code, out, _ = run(capsys, "order", str(squares_file))
    assert code == 1 and json.loads(out)["witness"]["i"] == 1
    code, out, _ = run(capsys, "order", str(squares_file), "--strategy", "search")
    assert code == 1 and json.loads(out)["status"] == "none found"


def test_verify_order(capsys, example_file, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("x1^2\nx1*x3\nx1*x2*x4\nx3^2\nx2*x3*x4\nx2^2*x4^2\n")
    assert run(capsys, "verify-order", str(example_file), str(good))[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("x3^2\nx1*x2*x4\nx1^2\nx1*x3\nx2*x3*x4\nx2^2*x4^2\n")
    code, out, _ = run(capsys, "verify-order", str(example_file), str(bad), "--format", "text")
    assert code == 1 and out.strip() == "invalid at position 2"
    short = tmp_path / "short.txt"
    short.write_text("x1^2\n")
    assert run(capsys, "verify-order", str(example_file), str(short))[0] == 2


def test_shell_and_convert(capsys, example_file, tmp_path):
    code, out, _ = run(capsys, "convert", str(example_file))
    assert code == 0
    mc_file = tmp_path / "mc.json"
    mc_file.write_text(out)
    code, out, _ = run(capsys, "shell", str(mc_file))
    assert code == 0 and [tuple(a) for a in json.loads(out)["order"]] == EXAMPLE_ORDER
    order = tmp_path / "order.json"
    order.write_text(json.dumps([list(a) for a in EXAMPLE_ORDER]))
    assert run(capsys, "shell", str(mc_file), "--action", "verify", "--order", str(order))[0] == 0
    code, out, _ = run(capsys, "convert", str(mc_file), "--to", "ideal")
    assert code == 0 and len(json.loads(out)["generators"]) == 6


def test_convert_restrict(capsys, tmp_path):
    f = tmp_path / "i.txt"
    f.write_text("x2^2\nx2*x4\n")
    code, out, _ = run(capsys, "convert", str(f), "--restrict")
    res = json.loads(out)
    assert code == 0 and res["support"] == [2, 4] and res["n"] == 2
    assert run(capsys, "convert", str(f))[0] == 2       # x1, x3 uncovered


@pytest.mark.parametrize("argv", [
    ["check"],
    ["check", "/nonexistent/file"],
    ["construct", "veronese", "--a", "1,1"],
    ["construct", "veronese", "--a", "1,x", "--d", "2"],
    ["experiment", "--target", "powers", "--trials", "0"],
    ["experiment"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_empty_input_is_usage_error(capsys, tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("")
    assert run(capsys, "check", str(f))[0] == 2


def test_fatpoint_union_warning(capsys):
    code, _, err = run(capsys, "construct", "fatpoints", "--sets", "1,2/2,3", "--k", "1,1", "--n", "4")
    assert code == 0 and "warning" in err


def test_output_is_deterministic(capsys, example_file):
    outs = [run(capsys, "order", str(example_file))[1] for _ in range(2)]
    assert outs[0] == outs[1]
    exps = [run(capsys, "experiment", "--target", "socle", "--trials", "5", "--seed", "3")[1]
            for _ in range(2)]
    assert exps[0] == exps[1]


def test_module_entry_point(example_file):
    proc = subprocess.run([sys.executable, "-m", "cwpoly", "check", str(example_file), "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("true")


def test_strategy_alias(capsys, example_file):
    a = run(capsys, "order", str(example_file), "--strategy", "split")
    b = run(capsys, "order", str(example_file), "--strategy", "paper")
    assert a == b and a[0] == 0
