import subprocess
import sys

import pytest

from graphlifts import fixtures
from graphlifts.cli import fixture_set, load_graph, main, matrix_problems, run_bundled_checks
from graphlifts.graphs import emit_edge_list, emit_graph6, from_edge_list, parse_graph6
from graphlifts.lifts import emit_signature


@pytest.fixture
def demo(tmp_path):
    paths = {}
    paths["g_edges"] = tmp_path / "g.edges"
    paths["g_edges"].write_text(emit_edge_list(fixtures.BASE_G))
    paths["h_g6"] = tmp_path / "h.g6"
    paths["h_g6"].write_text(emit_graph6(fixtures.BASE_H) + "\n")
    paths["sig_g"] = tmp_path / "sig_g.txt"
    paths["sig_g"].write_text(emit_signature(fixtures.EXAMPLE_SIGNATURE_G))
    paths["sig_z2"] = tmp_path / "sig_z2.txt"
    paths["sig_z2"].write_text(
        "group Z2\n1 2 : 1\n2 3 : 0\n2 4 : 1\n3 4 : 0\n3 5 : 1\n4 5 : 0\n5 6 : 1\n"
    )
    paths["tmp"] = tmp_path
    return paths


def test_load_graph_detects_format(demo):
    assert load_graph(str(demo["g_edges"])) == fixtures.BASE_G
    assert load_graph(str(demo["h_g6"])) == fixtures.BASE_H


def test_charpoly_command(demo, capsys):
    assert main(["charpoly", str(demo["g_edges"])]) == 0
    assert capsys.readouterr().out == "[1, 0, -7, -4, 7, 4, -1]\n"
    assert main(["charpoly", str(demo["h_g6"])]) == 0
    assert capsys.readouterr().out == "[1, 0, -7, -4, 7, 4, -1]\n"


def test_lift_command_formats(demo, capsys):
    assert main(["lift", "--graph", str(demo["g_edges"]), "--signature", str(demo["sig_g"])]) == 0
    g6_line = capsys.readouterr().out.strip()
    lifted = parse_graph6(g6_line)
    assert lifted.n == 18 and len(lifted.edges) == 21

    assert (
        main(["lift", "--graph", str(demo["g_edges"]), "--signature", str(demo["sig_g"]), "--out", "matrix"])
        == 0
    )
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 18
    matrix = [[int(v) for v in row.split()] for row in rows]
    assert matrix == [list(r) for r in fixtures.LIFT_MATRIX_G]

    assert (
        main(["lift", "--graph", str(demo["g_edges"]), "--signature", str(demo["sig_g"]), "--out", "edges"])
        == 0
    )
    out = capsys.readouterr().out
    assert out.startswith("18 21\n")


def test_cospectral_and_iso_exit_codes(demo, capsys, tmp_path):
    k3 = tmp_path / "k3.edges"
    k3.write_text(emit_edge_list(from_edge_list(3, [(1, 2), (2, 3), (1, 3)])))
    p3 = tmp_path / "p3.edges"
    p3.write_text(emit_edge_list(from_edge_list(3, [(1, 2), (2, 3)])))
    assert main(["cospectral", str(demo["g_edges"]), str(demo["h_g6"])]) == 0
    assert capsys.readouterr().out == "cospectral\n"
    assert main(["cospectral", str(k3), str(p3)]) == 1
    assert capsys.readouterr().out == "not cospectral\n"
    assert main(["iso", str(k3), str(p3)]) == 1
    assert capsys.readouterr().out == "not isomorphic\n"
    relabeled = tmp_path / "p3b.edges"
    relabeled.write_text("3 2\n1 3\n2 3\n")
    assert main(["iso", str(p3), str(relabeled)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "isomorphic"
    assert out[1].startswith("mapping: ")


def test_verify_mota_command(demo, capsys):
    assert main(["verify-mota", "--graph", str(demo["g_edges"]), "--signature", str(demo["sig_z2"])]) == 0
    out = capsys.readouterr().out
    assert "HOLDS" in out and out.count("[") == 2
    # non-abelian signature is an input error
    assert main(["verify-mota", "--graph", str(demo["g_edges"]), "--signature", str(demo["sig_g"])]) == 2


def test_search_command_output_format(demo, capsys):
    assert main(["search", "--fixture-pair", "--group", "Z2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2048
    first = lines[0].split()
    assert first[0] == "0" and first[1] == "0"
    assert lines[0].endswith(" 1 1")
    assert "[" in lines[0] and "]" in lines[0]


def test_search_emit_signatures(demo, capsys, tmp_path):
    outdir = tmp_path / "sigs"
    assert (
        main(
            [
                "search",
                "--fixture-pair",
                "--group",
                "Z2",
                "--filter-by-theorem",
                "--emit-signatures",
                str(outdir),
            ]
        )
        == 0
    )
    capsys.readouterr()
    names = sorted(p.name for p in outdir.iterdir())
    assert len(names) == 128
    assert names[0].startswith("g-") and names[-1].startswith("h-")
    text = (outdir / names[0]).read_text()
    assert text.startswith("group Z2\n")


def test_search_with_explicit_bases(demo, capsys, tmp_path):
    p4 = tmp_path / "p4.edges"
    p4.write_text(emit_edge_list(from_edge_list(4, [(1, 2), (2, 3), (3, 4)])))
    assert main(["search", "--base-g", str(p4), "--base-h", str(p4), "--group", "Z2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    # off the bundled pair the condition flag is a dash
    assert all(line.split()[-2] == "-" for line in lines)
    diag = [line for line in lines if line.split()[0] == line.split()[1]]
    assert all(line.endswith(" 0") for line in diag)


def test_usage_and_input_errors(demo, capsys, tmp_path):
    assert main(["charpoly", str(tmp_path / "missing.g6")]) == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("garbage\x01\n")
    assert main(["charpoly", str(bad)]) == 2
    assert main(["search", "--group", "Z2"]) == 2
    assert main(["search", "--fixture-pair", "--group", "S3"]) == 2
    assert main(["search", "--fixture-pair", "--group", "Z3", "--budget", "10"]) == 2
    p4 = tmp_path / "p4.edges"
    p4.write_text(emit_edge_list(from_edge_list(4, [(1, 2), (2, 3), (3, 4)])))
    assert main(["search", "--base-g", str(p4), "--base-h", str(p4), "--group", "Z2", "--filter-by-theorem"]) == 2
    capsys.readouterr()


def test_fixture_set_matrices_are_well_formed():
    fs = fixture_set()
    assert matrix_problems(fs.matrix_g) == []
    assert matrix_problems(fs.matrix_h) == []
    assert fs.g == fixtures.BASE_G and fs.h == fixtures.BASE_H


def test_matrix_problems_detects_defects():
    bad = [[0, 1], [0, 0]]
    assert any("asymmetric" in p for p in matrix_problems(bad))
    bad2 = [[1, 0], [0, 0]]
    assert any("diagonal" in p for p in matrix_problems(bad2))


def test_verify_paper_expected_pass_set(capsys):
    lines, ok = run_bundled_checks()
    assert ok
    tags = {}
    for line in lines:
        status, tag = line.split()[0], line.split()[1]
        tags.setdefault(tag, []).append(status)
    assert tags["(1)"] == ["PASS"]
    assert tags["(2)"] == ["PASS"]
    assert tags["(3)"] == ["PASS"]
    assert all(s == "INFO" for s in tags["(4)"])
    assert tags["(5)"] == ["INFO"]
    assert tags["(6)"] == ["PASS"]
    assert main(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4


def test_cli_determinism_across_jobs():
    cmd = [sys.executable, "-m", "graphlifts.cli", "search", "--fixture-pair", "--group", "Z2"]
    run1 = subprocess.run(cmd + ["--jobs", "1"], capture_output=True, timeout=300)
    run8 = subprocess.run(cmd + ["--jobs", "8"], capture_output=True, timeout=300)
    assert run1.returncode == run8.returncode == 0
    assert run1.stdout == run8.stdout
    assert len(run1.stdout.splitlines()) == 2048
