"""Command line interface, run in process through main(argv)."""

import json

import pytest

from gainarr.cli import main


def write_graph(tmp_path, text, name="g.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_chi_edgeless(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 2\n")
    code, doc = run_json(capsys, ["chi", path])
    assert code == 0
    assert doc["chiA"]["coeffs"] == [0, 0, 1]
    assert doc["chiB"]["coeffs"] == [1, -2, 1]
    assert doc["chiB"]["factored"] == "(t - 1)^2"
    assert doc["lemmaCheck"] is True
    assert doc["posetCheck"] is True


def test_chi_single_edge(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 2\nedge 1 2 0\n")
    code, doc = run_json(capsys, ["chi", path])
    assert code == 0
    assert doc["chiA"]["str"] == "t^2 - t"
    assert doc["chiB"]["factored"] == "(t - 1)(t - 2)"


def test_chi_unbalanced_triangle(tmp_path, capsys):
    text = "group Z\nvertices 3\nedge 1 2 0\nedge 1 3 0\nedge 2 3 1\n"
    code, doc = run_json(capsys, ["chi", write_graph(tmp_path, text)])
    assert code == 0
    assert doc["chiA"]["coeffs"] == [0, 3, -3, 1]
    assert doc["lemmaCheck"] is True


def test_chi_envelope_and_determinism(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 3\nedge 1 2 1\n")
    code, doc = run_json(capsys, ["chi", path])
    assert code == 0
    assert set(doc["bounds"]) == {"max_hyperplanes", "max_vertices", "node_cap"}
    assert "version" in doc and "seed" in doc
    main(["chi", path])
    first = capsys.readouterr().out
    main(["chi", path])
    second = capsys.readouterr().out
    assert first == second


def test_chi_poset_check_skipped_over_bound(tmp_path, capsys):
    # 3 vertices + 3 edges exceeds a max-hyperplanes of 4, so the poset
    # cross check is skipped rather than attempted
    text = "group Z\nvertices 3\nedge 1 2 0\nedge 1 3 0\nedge 2 3 1\n"
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["chi", path, "--max-hyperplanes", "4"])
    assert code == 0
    assert doc["posetCheck"] is None


def test_free_if_edges_negative_verdict(tmp_path, capsys):
    # complete zero layer on 3 vertices plus arcs 1->2, 2->3: not free
    text = (
        "group Z\nvertices 3\n"
        "edge 1 2 0\nedge 1 3 0\nedge 2 3 0\nedge 1 2 1\nedge 2 3 1\n"
    )
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["free", path, "--mode", "if-edges"])
    assert code == 0
    cert = doc["certificate"]
    assert cert["verdict"] is False
    assert doc["replay"] is None


def test_free_if_edges_positive_with_replay(tmp_path, capsys):
    text = "group Z\nvertices 3\nedge 1 2 0\nedge 1 3 0\nedge 2 3 0\n"
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["free", path, "--mode", "if-edges", "--kind", "bias"])
    assert code == 0
    cert = doc["certificate"]
    assert cert["verdict"] is True
    assert cert["exponents"] == [1, 2, 3]
    assert doc["replay"] is True


def test_free_signed_mode(tmp_path, capsys):
    # 4-cycle without a chord, one unbalanced: obstruction on both sides
    text = (
        "group F 2\nvertices 4\n"
        "edge 1 2 0\nedge 2 3 0\nedge 3 4 0\nedge 1 4 1\n"
    )
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["free", path, "--mode", "signed"])
    assert code == 0
    assert doc["verdict"] is False
    assert doc["agree"] is True
    assert doc["criterion"] == doc["dfBias"] == doc["dfCone"] is False
    assert doc["inducedUnbalancedCycle"] is True


def test_free_signed_mode_rejects_integer_gains(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 2\nedge 1 2 0\n")
    code = main(["free", path, "--mode", "signed"])
    err = capsys.readouterr().err
    assert code == 2
    assert "two-element group" in err


def test_free3_catalan(tmp_path, capsys):
    main(["family", "catalan", "--l", "3", "--m", "1"])
    text = capsys.readouterr().out
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["free3", path])
    assert code == 0
    assert doc["freeA"] is True and doc["freeB"] is True
    assert doc["detailCone"] == [1, 4, 5]
    assert doc["detailBias"] == [1, 5, 6]
    assert doc["exponentShift"] is True
    assert doc["chiA"]["factored"] == "t(t - 4)(t - 5)"


def test_free3_rejects_wrong_shape(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 2\nedge 1 2 0\n")
    code = main(["free3", path])
    assert code == 2
    assert "3 vertices" in capsys.readouterr().err


def test_signed_check_alias(tmp_path, capsys):
    text = "group F 2\nvertices 3\nedge 1 2 0\nedge 1 3 0\nedge 2 3 0\n"
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["signed-check", path])
    assert code == 0
    assert doc["verdict"] is True
    assert doc["balancedChordal"] is True


def test_family_round_trip(tmp_path, capsys):
    code = main(["family", "shi", "--l", "3", "--m", "1"])
    assert code == 0
    text = capsys.readouterr().out
    assert text.splitlines()[0] == "group Z"
    assert len([l for l in text.splitlines() if l.startswith("edge")]) == 6
    path = write_graph(tmp_path, text)
    code, doc = run_json(capsys, ["chi", path])
    assert code == 0
    assert doc["lemmaCheck"] is True


def test_parse_error_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 2\nedge 1 1 0\n")
    code = main(["chi", path])
    err = capsys.readouterr().err
    assert code == 2
    assert "loop edge" in err


def test_missing_file_exit_code(tmp_path, capsys):
    code = main(["chi", str(tmp_path / "absent.txt")])
    assert code == 2


def test_bound_exceeded_exit_code(tmp_path, capsys):
    text = "group Z\nvertices 4\nedge 1 2 0\n"
    path = write_graph(tmp_path, text)
    code = main(["chi", path, "--max-vertices", "3"])
    err = capsys.readouterr().err
    assert code == 3
    assert "bound exceeded" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["chi", "--frobnicate"])
    assert exc.value.code == 2


def test_reduction_warning_on_stderr(tmp_path, capsys):
    path = write_graph(tmp_path, "group F 2\nvertices 2\nedge 1 2 3\n")
    code = main(["chi", path])
    captured = capsys.readouterr()
    assert code == 0
    assert "reduced to 1 mod 2" in captured.err
    doc = json.loads(captured.out)
    assert doc["lemmaCheck"] is True


def test_tsv_output(tmp_path, capsys):
    path = write_graph(tmp_path, "group Z\nvertices 2\nedge 1 2 0\n")
    code = main(["chi", path, "--output", "tsv"])
    out = capsys.readouterr().out
    assert code == 0
    lines = dict(l.split("\t", 1) for l in out.strip().splitlines())
    assert lines["lemmaCheck"] == "true"
    assert json.loads(lines["chiA.coeffs"]) == [0, -1, 1]


def test_verify_families_suite(capsys):
    code = main(["verify", "--suite", "families"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert code == 0
    assert doc["passed"] is True
    assert doc["suite"] == "families"
    names = {row["name"] for row in doc["checks"]}
    assert "digraphs-exhaustive" in names
    main(["verify", "--suite", "families"])
    assert capsys.readouterr().out == out


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("gainarr ")
