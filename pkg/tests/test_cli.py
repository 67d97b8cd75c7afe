import json

import pytest

from kanlab import codiscrete_relabeling, minimal_interval
from kanlab.cli import main
from kanlab.fibration import synthesize_uniform_fib
from kanlab.serialize import (
    cubical_set_to_dict,
    filling_table_to_list,
    map_to_dict,
    save_cubical_set,
    save_json,
)


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    M = minimal_interval(2)
    save_cubical_set(M, root / "minimal.json")
    corrupt = cubical_set_to_dict(M)
    corrupt["actions"][0]["table"]["0,1"] = "1"
    save_json(corrupt, root / "corrupt.json")
    (root / "garbage.json").write_text("{nope")
    p = codiscrete_relabeling({"a0": "0", "a1": "1"}, 2)
    save_cubical_set(p.source, root / "Y.json")
    save_cubical_set(p.target, root / "X.json")
    save_json(map_to_dict(p, source="Y.json", target="X.json"), root / "map.json")
    save_json(filling_table_to_list(synthesize_uniform_fib(p)), root / "fibtable.json")
    return root


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_interval_codiscrete_sizes(capsys):
    code, out = run(capsys, "interval", "codiscrete", "--bound", "2")
    assert code == 0
    assert "dim 0: 2 cubes" in out
    assert "dim 1: 4 cubes" in out
    assert "dim 2: 16 cubes" in out
    assert "corners:" in out


def test_interval_minimal_sizes(capsys):
    code, out = run(capsys, "interval", "minimal", "--bound", "1")
    assert code == 0
    assert "dim 0: 2 cubes" in out
    assert "dim 1: 3 cubes" in out


def test_interval_bound_zero(capsys):
    code, out = run(capsys, "interval", "codiscrete", "--bound", "0")
    assert code == 0
    assert "dim 0: 2 cubes" in out


def test_interval_bound_above_three_fails(capsys):
    code, _ = run(capsys, "interval", "codiscrete", "--bound", "4")
    assert code == 1


def test_interval_writes_dot(capsys, tmp_path):
    target = tmp_path / "iv.gv"
    code, _ = run(capsys, "interval", "minimal", "--bound", "1", "--dot", str(target))
    assert code == 0
    assert target.read_text().startswith("digraph")


def test_check_valid_file(capsys, files):
    code, out = run(capsys, "check", str(files / "minimal.json"))
    assert code == 0 and "OK" in out


def test_check_corrupted_file(capsys, files):
    code, out = run(capsys, "check", str(files / "corrupt.json"))
    assert code == 1


def test_check_malformed_file(capsys, files):
    code, _ = run(capsys, "check", str(files / "garbage.json"))
    assert code == 2


def test_check_map_file(capsys, files):
    code, out = run(capsys, "check", str(files / "map.json"))
    assert code == 0 and "OK" in out


def test_kan_minimal_not_kan(capsys):
    code, out = run(capsys, "kan", "--builtin", "minimal-interval", "--bound", "2")
    assert code == 1
    assert "NOT KAN" in out
    assert "witness box" in out


def test_kan_codiscrete_synthesize_uniform(capsys, tmp_path):
    target = tmp_path / "table.json"
    code, out = run(
        capsys,
        "kan", "--builtin", "codiscrete-interval", "--bound", "2",
        "--uniform", "--synthesize", "--out", str(target),
    )
    assert code == 0
    assert "table written" in out
    assert "uniformity OK" in out
    assert len(json.loads(target.read_text())) == 44


def test_kan_checks_a_stored_table(capsys, tmp_path):
    target = tmp_path / "table.json"
    run(
        capsys,
        "kan", "--builtin", "codiscrete-interval", "--bound", "2",
        "--synthesize", "--out", str(target),
    )
    code, out = run(
        capsys,
        "kan", "--builtin", "codiscrete-interval", "--bound", "2",
        "--uniform", "--table", str(target),
    )
    assert code == 0
    assert "section OK, uniformity OK" in out


def test_kan_synthesize_minimal_is_nonexistent(capsys):
    code, out = run(
        capsys, "kan", "--builtin", "minimal-interval", "--bound", "2", "--synthesize"
    )
    assert code == 1
    assert "proven nonexistent" in out


def test_kan_budget_exhaustion_exit_code(capsys):
    code, _ = run(
        capsys,
        "kan", "--builtin", "codiscrete-interval", "--bound", "2",
        "--synthesize", "--budget", "0",
    )
    assert code == 3


def test_roundtrip_reports_box_count(capsys):
    code, out = run(capsys, "roundtrip", "--builtin", "codiscrete-interval", "--bound", "2")
    assert code == 0
    assert out.startswith("OK: ")
    assert "boxes checked" in out


def test_transport_prints_destination(capsys, files):
    code, out = run(
        capsys,
        "transport", "--map", str(files / "map.json"),
        "--table", str(files / "fibtable.json"),
        "--line", "0,1", "--point", "a0",
    )
    assert code == 0
    assert out.strip() == "a1"


def test_transport_fiber_mismatch_is_a_validation_error(capsys, files):
    code, _ = run(
        capsys,
        "transport", "--map", str(files / "map.json"),
        "--table", str(files / "fibtable.json"),
        "--line", "0,1", "--point", "a1",
    )
    assert code == 1


def test_fib_check_verdict(capsys, files):
    code, out = run(capsys, "fib-check", "--map", str(files / "map.json"))
    assert code == 0
    assert "KAN FIBRATION" in out


def test_fib_check_synthesize(capsys, files, tmp_path):
    target = tmp_path / "fib.json"
    code, out = run(
        capsys,
        "fib-check", "--map", str(files / "map.json"),
        "--synthesize", "--out", str(target),
    )
    assert code == 0
    assert "uniformity OK" in out
    assert target.exists()


def test_outputs_are_deterministic(capsys):
    _, out1 = run(capsys, "kan", "--builtin", "minimal-interval", "--bound", "2")
    _, out2 = run(capsys, "kan", "--builtin", "minimal-interval", "--bound", "2")
    assert out1 == out2


def test_env_var_overrides_default_bound(capsys, monkeypatch):
    monkeypatch.setenv("KANLAB_BOUND", "1")
    from kanlab.cli import build_parser

    args = build_parser().parse_args(["interval", "minimal"])
    assert args.bound == 1
