import json

import pytest

from main import RunConfig, parse_arguments, run
from scripts.config import AppConfig, OracleLimits
from scripts.errors import InputError
from scripts.generators.generators import GenSpec, generate
from scripts.geometry.box_io import write_boxes
from scripts.geometry.boxes import make_box, normalize


@pytest.fixture
def grid_file(tmp_path):
    path = tmp_path / "grid.boxes"
    assert run(["gen", "--family", "grid-disjoint", "--n", "9", "--d", "2", "--seed", "1", "--out", str(path)]) == 0
    return path


@pytest.fixture
def chain_file(tmp_path):
    path = tmp_path / "chain.boxes"
    write_boxes(path, generate(GenSpec(n=5, d=2, family="nested-chain")))
    return path


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.boxes"
    boxes = [make_box(0, [(0, 100)])] + [make_box(i + 1, [(4 * i + 1, 4 * i + 2)]) for i in range(6)]
    write_boxes(path, normalize(boxes))
    return path


def test_gen_writes_box_file(grid_file):
    lines = grid_file.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "2 9"
    assert len(lines) == 10


def test_gen_is_byte_identical(tmp_path, grid_file):
    other = tmp_path / "again.boxes"
    run(["gen", "--family", "grid-disjoint", "--n", "9", "--d", "2", "--seed", "1", "--out", str(other)])
    assert other.read_bytes() == grid_file.read_bytes()


def test_gen_invalid_dimension(capsys):
    assert run(["gen", "--d", "0"]) == 2
    assert "размерность" in capsys.readouterr().err


def test_color_disjoint_grid(grid_file, capsys):
    assert run(["color", str(grid_file), "--r", "1", "--k", "1"]) == 0
    captured = capsys.readouterr()
    assert "kind=coloring palette=1" in captured.err
    assert json.loads(captured.out)["palette"] == 1


def test_color_nested_chain_is_coloring(chain_file, capsys):
    assert run(["color", str(chain_file), "--r", "1", "--k", "2"]) == 0
    out = capsys.readouterr()
    assert "paper_bound=" in out.err
    assert "derived_bound=" in out.err
    assert "omega=5" in out.err


def test_color_induced_tree_exit_code_and_roundtrip(star_file, tmp_path, capsys):
    cert_path = tmp_path / "star.json"
    assert run(["color", str(star_file), "--r", "1", "--k", "2", "--out", str(cert_path)]) == 3
    assert "kind=induced_tree" in capsys.readouterr().out
    assert run(["verify", str(star_file), str(cert_path)]) == 0


def test_color_then_verify_random_instance(tmp_path):
    boxes_path = tmp_path / "random.boxes"
    cert_path = tmp_path / "random.json"
    assert run(["gen", "--n", "16", "--d", "2", "--seed", "11", "--out", str(boxes_path)]) == 0
    assert run(["color", str(boxes_path), "--r", "1", "--k", "2", "--out", str(cert_path)]) in (0, 3)
    assert run(["verify", str(boxes_path), str(cert_path)]) == 0


def test_color_output_independent_of_threads(tmp_path):
    boxes_path = tmp_path / "random.boxes"
    run(["gen", "--n", "14", "--d", "2", "--seed", "4", "--out", str(boxes_path)])
    outputs = []
    for threads in ("1", "4"):
        cert_path = tmp_path / f"cert{threads}.json"
        run(["color", str(boxes_path), "--r", "1", "--k", "2", "--threads", threads, "--out", str(cert_path)])
        outputs.append(cert_path.read_bytes())
    assert outputs[0] == outputs[1]


def test_verify_reports_conflicting_edge(chain_file, tmp_path, capsys):
    cert_path = tmp_path / "bad.json"
    colors = {str(i): 0 for i in range(5)}
    cert_path.write_text(json.dumps({"kind": "coloring", "palette": 1, "bound": 10, "colors": colors}))
    assert run(["verify", str(chain_file), str(cert_path)]) == 5
    assert "ребро 0-1" in capsys.readouterr().out


def test_verify_reports_planted_chord(star_file, tmp_path, capsys):
    cert_path = tmp_path / "chord.json"
    cert_path.write_text(json.dumps({"kind": "induced_tree", "r": 1, "k": 2, "map": {"0": 1, "1": 0, "2": 2}}))
    assert run(["verify", str(star_file), str(cert_path)]) == 5
    assert "хорда" in capsys.readouterr().out


def test_verify_mismatched_vertices(grid_file, tmp_path):
    cert_path = tmp_path / "short.json"
    cert_path.write_text(json.dumps({"kind": "coloring", "palette": 1, "bound": 1, "colors": {"0": 0}}))
    assert run(["verify", str(grid_file), str(cert_path)]) == 2


def test_oracle_values(chain_file, grid_file, capsys):
    assert run(["oracle", str(chain_file), "--stat", "omega"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert run(["oracle", str(chain_file), "--stat", "chi"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert run(["oracle", str(grid_file), "--stat", "alpha"]) == 0
    assert capsys.readouterr().out.strip() == "9"
    assert run(["oracle", str(grid_file), "--stat", "ehcheck"]) == 0
    assert "n=9 alpha^d*omega=81 9 <= 81: pass" in capsys.readouterr().out


def test_oracle_limit_exit_code(chain_file):
    assert run(["oracle", str(chain_file), "--stat", "chi", "--chi-limit", "3"]) == 4


def test_decompose_table(tmp_path, capsys):
    path = tmp_path / "pair.boxes"
    write_boxes(path, normalize([make_box(0, [(0, 2)]), make_box(1, [(1, 3)])]))
    assert run(["decompose", str(path)]) == 0
    out = capsys.readouterr().out
    rows = [line.split() for line in out.splitlines()[1:] if line.strip()]
    assert len(rows) == 4
    arcs = {row[0]: int(row[1]) for row in rows}
    assert arcs == {"C": 0, "c": 0, "L": 1, "R": 1}


def test_decompose_random_r3_all_flags_true(tmp_path, capsys):
    path = tmp_path / "r3.boxes"
    write_boxes(path, generate(GenSpec(n=10, d=3, seed=9)))
    csv_path = tmp_path / "table.csv"
    assert run(["decompose", str(path), "--out", str(csv_path)]) == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 65
    assert all(line.split(";")[2:] == ["True", "True", "True"] for line in lines[1:])


def test_decompose_over_limit_checks_acyclicity_only(tmp_path, capsys):
    path = tmp_path / "big.boxes"
    write_boxes(path, generate(GenSpec(n=8, d=1, seed=2)))
    assert run(["decompose", str(path), "--basic-limit", "4"]) == 0
    assert "только ацикличность" in capsys.readouterr().out


def test_missing_input_is_input_error(tmp_path):
    assert run(["oracle", str(tmp_path / "missing.boxes"), "--stat", "omega"]) == 2


def test_env_limits_and_flag_override(monkeypatch):
    monkeypatch.setenv(AppConfig.ENV_LIMITS, "omega=7,chi=9")
    args = parse_arguments(["oracle", "x.boxes", "--stat", "omega", "--chi-limit", "3"])
    config = RunConfig.from_args(args)
    assert config.limits == OracleLimits(omega=7, chi=3)


@pytest.mark.parametrize("raw", ["omega", "size=3", "omega=x", "omega=0"])
def test_env_limits_rejects_garbage(raw):
    with pytest.raises(InputError):
        OracleLimits.from_env({AppConfig.ENV_LIMITS: raw})


def test_run_config_invariants():
    with pytest.raises(InputError):
        RunConfig(command="color", limits=OracleLimits(), k=0)
    with pytest.raises(InputError):
        RunConfig(command="color", limits=OracleLimits(), r=-1)


def test_box_file_with_bad_bytes_is_input_error(tmp_path):
    path = tmp_path / "broken.boxes"
    path.write_bytes(b"1 1\n0 1\xff\n")
    assert run(["oracle", str(path), "--stat", "omega"]) == 2


def test_certificate_with_bad_bytes_is_input_error(grid_file, tmp_path):
    cert_path = tmp_path / "broken.json"
    cert_path.write_bytes(b'{"kind": "coloring\xff"}')
    assert run(["verify", str(grid_file), str(cert_path)]) == 2


def test_huge_tree_certificate_is_rejected_before_building(star_file, tmp_path):
    cert_path = tmp_path / "huge.json"
    cert_path.write_text(json.dumps({"kind": "induced_tree", "r": 9, "k": 12, "map": {"0": 0}}))
    assert run(["verify", str(star_file), str(cert_path)]) == 2
