"""Command layer: argument handling, file formats, exit codes, and the
byte-for-byte determinism of everything the CLI writes."""

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from catbound import (
    SegmentFamily,
    canonical_code,
    parse_tree,
    render_segments,
    render_tree,
    tree_to_segments,
)
from catbound.cli import main
from helpers import path_tree, star_tree


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# eval and table
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, want",
    [
        (("eval", "p", "--m", "50"), "18"),
        (("eval", "q", "--m", "20"), "10"),
        (("eval", "f", "--k", "10"), "49"),
        (("eval", "g", "--k", "26"), "420"),
        (("eval", "e-contract", "--k", "10"), "18"),
        (("eval", "e-induced", "--k", "15"), "55"),
    ],
)
def test_eval_values(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == want


def test_eval_wants_exactly_its_own_argument(capsys):
    code, _, err = run(capsys, "eval", "p", "--k", "5")
    assert code == 1 and "--m" in err
    code, _, err = run(capsys, "eval", "f", "--m", "5")
    assert code == 1 and "--k" in err
    code, _, err = run(capsys, "eval", "q", "--m", "3", "--k", "3")
    assert code == 1 and "only" in err


def test_eval_propagates_domain_errors(capsys):
    code, _, err = run(capsys, "eval", "p", "--m", "0")
    assert code == 1 and "error" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "q", "--from", "1", "--to", "6", "--csv")
    assert code == 0
    assert out == "m,q\n1,1\n2,2\n3,3\n4,4\n5,5\n6,5\n"


def test_table_is_deterministic(capsys):
    first = run(capsys, "table", "f", "--from", "1", "--to", "20")
    second = run(capsys, "table", "f", "--from", "1", "--to", "20")
    assert first == second and first[0] == 0


def test_table_range_check(capsys):
    code, _, err = run(capsys, "table", "p", "--from", "9", "--to", "3")
    assert code == 1 and "--from" in err


# ----------------------------------------------------------------------
# build and analyze
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, edges",
    [
        (("build", "rk", "--k", "7"), 10),
        (("build", "rdl", "--d", "4", "--l", "3"), 6),
        (("build", "bk", "--k", "6"), 11),
        (("build", "tk", "--k", "6"), 8),
    ],
)
def test_build_shapes(capsys, tmp_path, argv, edges):
    out_file = tmp_path / "t.txt"
    code, _, _ = run(capsys, *argv, "--out", str(out_file))
    assert code == 0
    assert parse_tree(out_file.read_text()).m == edges


def test_build_to_stdout(capsys):
    code, out, _ = run(capsys, "build", "rk", "--k", "1")
    assert code == 0 and out == "0 1\n"


def test_build_requires_its_parameters(capsys):
    code, _, err = run(capsys, "build", "rk")
    assert code == 1 and "--k" in err
    code, _, err = run(capsys, "build", "rdl", "--d", "4")
    assert code == 1 and "--l" in err


def test_analyze_reports_the_measurements(capsys, tmp_path):
    tree_file = tmp_path / "spider.txt"
    tree_file.write_text("0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n")
    code, out, _ = run(capsys, "analyze", "--tree", str(tree_file), "--witness")
    assert code == 0
    lines = dict(
        (line[:28].strip(), line[28:].strip()) for line in out.splitlines()
    )
    assert lines["vertices"] == "7"
    assert lines["edges"] == "6"
    assert lines["leaves"] == "3"
    assert lines["diameter"] == "4"
    assert lines["caterpillar"] == "no"
    assert lines["spider"] == "yes"
    assert lines["score by contraction"] == "5"
    assert lines["largest induced caterpillar"] == "5"
    assert "witness spine" in lines


def test_analyze_bad_file(capsys, tmp_path):
    missing = tmp_path / "nope.txt"
    code, _, err = run(capsys, "analyze", "--tree", str(missing))
    assert code == 1 and "cannot read" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    code, _, err = run(capsys, "analyze", "--tree", str(bad))
    assert code == 1 and "self-loop" in err


# ----------------------------------------------------------------------
# dual and path, chained through files
# ----------------------------------------------------------------------


def test_dual_round_trip(capsys, tmp_path):
    tree_file = tmp_path / "in.txt"
    seg_file = tmp_path / "fam.json"
    back_file = tmp_path / "out.txt"
    tree_file.write_text("0 1\n1 2\n1 3\n3 4\n")
    assert run(capsys, "dual", "to-segments", "--tree", str(tree_file), "--root", "2", "--out", str(seg_file))[0] == 0
    data = json.loads(seg_file.read_text())
    assert data["n"] == 4 and len(data["segments"]) == 4
    assert run(capsys, "dual", "to-tree", "--segments", str(seg_file), "--out", str(back_file))[0] == 0
    before = parse_tree(tree_file.read_text())
    after = parse_tree(back_file.read_text())
    assert canonical_code(before) == canonical_code(after)


def test_dual_argument_checks(capsys):
    code, _, err = run(capsys, "dual", "to-segments")
    assert code == 1 and "--tree" in err
    code, _, err = run(capsys, "dual", "to-tree")
    assert code == 1 and "--segments" in err


def test_path_commands_emit_valid_chains(capsys, tmp_path):
    seg_file = tmp_path / "fam.json"
    family = tree_to_segments(parse_tree("0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n"), 0)
    seg_file.write_text(json.dumps({"n": family.n, "segments": [list(p) for p in family.pairs]}))

    code, out, _ = run(capsys, "path", "among", "--segments", str(seg_file))
    assert code == 0
    chain = json.loads(out)
    assert chain["mode"] == "among"
    assert chain["segments"] == 5
    assert len(chain["endpoints"]) == 10

    code, out, _ = run(capsys, "path", "compatible", "--segments", str(seg_file))
    assert code == 0
    chain = json.loads(out)
    assert chain["segments"] == 5  # this family's best induced caterpillar


def test_path_rejects_malformed_family_files(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"n\": 2}")
    code, _, err = run(capsys, "path", "among", "--segments", str(bad))
    assert code == 1 and "segments" in err
    bad.write_text("not json")
    code, _, err = run(capsys, "path", "among", "--segments", str(bad))
    assert code == 1 and "JSON" in err


# ----------------------------------------------------------------------
# render
# ----------------------------------------------------------------------


def test_render_segments_is_deterministic_and_well_formed(tmp_path, capsys):
    seg_file = tmp_path / "fam.json"
    seg_file.write_text('{"n": 3, "segments": [[0, 5], [1, 4], [2, 3]]}')
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    for out in (first, second):
        assert run(capsys, "render", "--segments", str(seg_file), "--out", str(out))[0] == 0
    assert first.read_bytes() == second.read_bytes()
    root = ET.fromstring(first.read_text())
    assert root.tag.endswith("svg")


def test_render_overlays_a_path(tmp_path, capsys):
    seg_file = tmp_path / "fam.json"
    path_file = tmp_path / "chain.json"
    svg_file = tmp_path / "pic.svg"
    seg_file.write_text('{"n": 3, "segments": [[0, 5], [1, 4], [2, 3]]}')
    path_file.write_text('{"mode": "compatible", "endpoints": [0, 5, 1, 4]}')
    code, _, _ = run(capsys, "render", "--segments", str(seg_file), "--path", str(path_file), "--out", str(svg_file))
    assert code == 0
    assert "polyline" in svg_file.read_text()


def test_render_refuses_invalid_paths_with_exit_2(tmp_path, capsys):
    seg_file = tmp_path / "fam.json"
    path_file = tmp_path / "chain.json"
    seg_file.write_text('{"n": 3, "segments": [[0, 5], [1, 4], [2, 3]]}')
    path_file.write_text('{"mode": "compatible", "endpoints": [2, 3, 0, 5]}')
    code, _, err = run(capsys, "render", "--segments", str(seg_file), "--path", str(path_file), "--out", str(tmp_path / "x.svg"))
    assert code == 2 and "unused segment" in err


def test_render_tree_output(tmp_path, capsys):
    tree_file = tmp_path / "t.txt"
    tree_file.write_text("0 1\n1 2\n2 3\n")
    svg_file = tmp_path / "t.svg"
    assert run(capsys, "render", "--tree", str(tree_file), "--out", str(svg_file))[0] == 0
    root = ET.fromstring(svg_file.read_text())
    assert len(root.findall(".//{http://www.w3.org/2000/svg}circle")) == 4


def test_render_wants_exactly_one_input(capsys, tmp_path):
    code, _, err = run(capsys, "render", "--out", str(tmp_path / "x.svg"))
    assert code == 1 and "exactly one" in err


def test_render_functions_are_pure():
    family = SegmentFamily(2, ((0, 3), (1, 2)))
    assert render_segments(family) == render_segments(family)
    assert render_tree(path_tree(5)) == render_tree(path_tree(5))
    assert render_tree(star_tree(5)) == render_tree(star_tree(5))


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def test_verify_passes_and_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--max-edges", "4", "--max-k", "8", "--sweep", "500")
    assert code == 0
    assert out.rstrip().endswith("checks passed")


def test_verify_corruption_exits_two(capsys):
    code, out, _ = run(
        capsys, "verify", "--max-edges", "2", "--max-k", "10",
        "--sweep", "500", "--corrupt-f", "9",
    )
    assert code == 2
    assert "FAIL" in out


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "verify", "--max-edges", "3", "--max-k", "6", "--sweep", "500", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["failed"] == 0


# ----------------------------------------------------------------------
# process-level behavior
# ----------------------------------------------------------------------


def test_unknown_command_exits_one():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 1


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "catbound", "eval", "p", "--m", "8"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "6"
