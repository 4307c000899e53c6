import json

import pytest

from magicborders.cli import main
from magicborders.documents import parse_document
from magicborders.verify import BorderPlan, verify_border, verify_bordered

from goldens import (
    ORDER5_ALT_FRAME_TEXT,
    ORDER7_FRAME_TEXT,
    ORDER8_ALT_FRAME_TEXT,
    ORDER8_FRAME_TEXT,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_square_then_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--order", "9")
    assert code == 0
    doc = parse_document(out)
    assert verify_bordered(doc.as_square()).valid

    path = tmp_path / "square.txt"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path), "--bordered")
    assert code == 0 and out.strip() == "valid"


@pytest.mark.parametrize("fmt", ["grid", "csv", "json"])
def test_build_output_round_trips(capsys, fmt):
    code, out, _ = run(capsys, "build", "--order", "6", "--format", fmt)
    assert code == 0
    assert parse_document(out).as_square() is not None
    code, out2, _ = run(capsys, "build", "--order", "6", "--format", fmt)
    assert out == out2  # deterministic


def test_build_border_only_with_corners(capsys):
    code, out, _ = run(
        capsys, "build", "--order", "10", "--border-only", "--corners", "1,4",
        "--format", "json",
    )
    assert code == 0
    plan = parse_document(out)
    assert isinstance(plan, BorderPlan)
    assert (plan.v, plan.w) == (1, 4)
    assert verify_border(plan).valid


def test_build_border_only_grid_renders_a_frame(capsys):
    code, out, _ = run(capsys, "build", "--order", "8", "--border-only")
    assert code == 0
    frame = parse_document(out).as_frame()
    assert frame.n == 8


def test_infeasible_corners_exit_2(capsys):
    code, _, err = run(
        capsys, "build", "--order", "10", "--border-only", "--corners", "1,3"
    )
    assert code == 2
    assert "parity" in err or "odd and one even" in err


def test_corner_requests_at_odd_orders_exit_1(capsys):
    code, _, err = run(
        capsys, "build", "--order", "9", "--border-only", "--corners", "1,2"
    )
    assert code == 1 and "even" in err


def test_corners_without_border_only_exit_1(capsys):
    code, _, err = run(capsys, "build", "--order", "8", "--corners", "1,2")
    assert code == 1


def test_verify_reference_frames(capsys, tmp_path):
    for name, text in [
        ("ref8", ORDER8_FRAME_TEXT),
        ("alt5", ORDER5_ALT_FRAME_TEXT),
        ("alt8", ORDER8_ALT_FRAME_TEXT),
    ]:
        path = tmp_path / f"{name}.txt"
        path.write_text(text.strip() + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0 and out.strip() == "valid", name


def test_verify_flags_a_perturbed_frame(capsys, tmp_path):
    broken = ORDER7_FRAME_TEXT.replace("81", "82")
    path = tmp_path / "broken.txt"
    path.write_text(broken, encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "invalid" in out
    assert "top row" in out or "opposite-complement" in out


def test_verify_parse_failure_names_the_spot(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 2 x\n4 5 6\n7 8 9\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 1 and "line 1" in err


def test_enumerate_count_only_same_parity_is_zero(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--order", "4", "--corners", "1,3", "--count-only"
    )
    assert code == 0 and out.strip() == "0"


def test_enumerate_limit_one_yields_one_valid_plan(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--order", "4", "--corners", "1,2", "--limit", "1"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    plan = parse_document(lines[0])
    assert verify_border(plan).valid and (plan.v, plan.w) == (1, 2)


def test_enumerate_full_count_table_matches_fixture(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--order", "4", "--count-only")
    assert code == 0
    from pathlib import Path

    fixture = (Path(__file__).parent / "fixtures" / "omega4_counts.txt").read_text()
    assert out == fixture


def test_enumerate_budget_exhaustion_exits_3(capsys):
    code, _, err = run(
        capsys, "enumerate", "--order", "4", "--count-only", "--max-nodes", "5"
    )
    assert code == 3 and "budget" in err


def test_enumerate_warns_beyond_desk_scale(capsys):
    code, out, err = run(
        capsys, "enumerate", "--order", "8", "--corners", "1,2", "--limit", "1"
    )
    assert code == 0 and "warning" in err
    assert len(out.strip().splitlines()) == 1


def test_orbit_emits_eight_verified_plans(capsys, tmp_path):
    code, out, _ = run(
        capsys, "build", "--order", "4", "--border-only", "--format", "json"
    )
    plan = parse_document(out)
    path = tmp_path / "plan.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "orbit", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    images = [parse_document(line) for line in lines]
    assert images[0] == plan  # identity first
    for image in images:
        assert verify_border(image).valid
    assert len({(p.v, p.w) for p in images}) == 8


def test_orbit_accepts_frames_and_rejects_invalid_plans(capsys, tmp_path):
    frame_path = tmp_path / "frame.txt"
    frame_path.write_text(ORDER7_FRAME_TEXT, encoding="utf-8")
    code, out, _ = run(capsys, "orbit", str(frame_path))
    assert code == 0 and len(out.strip().splitlines()) == 8

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps({"n": 4, "v": 1, "w": 2, "b": [34, 33, 32, 8], "c": [6, 30, 29, 10]}),
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "orbit", str(bad))
    assert code == 1 and "invalid" in out


def test_tables_check_reports_and_passes(capsys):
    code, out, _ = run(capsys, "tables", "--check", "--m", "8", "--m", "12")
    assert code == 0
    assert "order-4 summary: 25 valid, 0 invalid" in out
    assert "1&2m+2 (v=1, w=18): repaired" in out
    assert "expected 505, got 504" in out
    assert "parameterized table at m=12: 20 entries" in out


def test_tables_without_check_is_informational(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0 and "--check" in out


def test_orbit_of_a_seed_plan(capsys, tmp_path):
    seed = json.dumps({"n": 4, "v": 1, "w": 2, "b": [34, 33, 32, 9], "c": [6, 30, 29, 10]})
    path = tmp_path / "seed.json"
    path.write_text(seed + "\n", encoding="utf-8")
    code, out, _ = run(capsys, "orbit", str(path))
    assert code == 0
    plans = [parse_document(line) for line in out.strip().splitlines()]
    assert len(plans) == 8
    assert all(verify_border(p).valid for p in plans)


def test_verify_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(ORDER8_FRAME_TEXT))
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out.strip() == "valid"


def test_build_writes_to_a_file(capsys, tmp_path):
    out_path = tmp_path / "square.csv"
    code, out, _ = run(
        capsys, "build", "--order", "6", "--format", "csv", "-o", str(out_path)
    )
    assert code == 0 and out == ""
    doc = parse_document(out_path.read_text(encoding="utf-8"))
    assert len(doc.as_square()) == 6


def test_enumerate_handles_odd_orders(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--order", "3", "--corners", "1,3", "--count-only"
    )
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(
        capsys, "enumerate", "--order", "3", "--corners", "1,2", "--count-only"
    )
    assert code == 0 and out.strip() == "0"


def test_bad_usage_exits_1(capsys):
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys, "build")[0] == 1  # missing --order
    assert run(capsys, "build", "--order", "8", "--border-only",
               "--corners", "nonsense")[0] == 1


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0 and "magicborder" in out
