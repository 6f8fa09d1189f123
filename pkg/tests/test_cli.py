"""Command-line contract: exit codes, report determinism, artifacts."""

import pytest

from sepcurve import cli, document_of_form, get_fixture, save_curve


def run(argv, capsys=None):
    """cli.main plus argparse's own SystemExit path; returns (code, stdout)."""
    try:
        code = cli.main(argv)
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr().out if capsys is not None else ""
    return code, out


def test_topology_fixture_ok(capsys):
    code, out = run(["topology", "fixture:circle"], capsys)
    assert code == 0
    assert "components    1" in out
    assert "pseudo-line   no" in out


def test_machine_format_tab_delimited(capsys):
    code, out = run(["topology", "fixture:cubic-oval", "--format", "machine"],
                    capsys)
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["command"] == "topology"
    assert rows["components"] == "2"
    assert rows["pseudo-line"] == "yes"


def test_report_byte_deterministic(capsys):
    a = run(["topology", "fixture:harnack-quartic", "--format", "machine"],
            capsys)
    b = run(["topology", "fixture:harnack-quartic", "--format", "machine"],
            capsys)
    assert a == b


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.curve"
    bad.write_text("format 1\ndegree 2\ncoeff 1 0 0 1 1\n")
    code, _ = run(["topology", str(bad)], capsys)
    assert code == 2


def test_singular_exit_3(tmp_path, capsys):
    from sepcurve import TernaryForm
    nodal = TernaryForm(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1,
                            (1, 1, 1): -3})
    path = tmp_path / "nodal.curve"
    save_curve(document_of_form(nodal), path)
    code, _ = run(["topology", str(path)], capsys)
    assert code == 3


def test_bad_args_exit_4(capsys):
    assert run(["topology", "fixture:nope"], capsys)[0] == 4
    assert run(["bounds"], capsys)[0] == 4
    assert run(["quintic", "fixture:circle"], capsys)[0] == 4
    assert run(["topology"], capsys)[0] == 4
    assert run(["pencil", "certify", "fixture:circle"], capsys)[0] == 4


def test_certify_interior_vs_exterior(capsys):
    code, out = run(["pencil", "certify", "fixture:circle",
                     "--degree", "1", "--points", "0,0"], capsys)
    assert code == 0
    assert "totally-real" in out

    code, out = run(["pencil", "certify", "fixture:circle",
                     "--degree", "1", "--points", "2,0"], capsys)
    assert code == 10
    assert "not-totally-real" in out
    assert "witness-parameter" in out


def test_certify_writes_artifacts(tmp_path, capsys):
    out_path = tmp_path / "run.cert"
    code, _ = run(["pencil", "certify", "fixture:circle", "--degree", "1",
                   "--points", "0,0", "--output", str(out_path),
                   "--format", "machine"], capsys)
    assert code == 0
    from sepcurve import parse_certificate
    cert, pencil = parse_certificate(out_path.read_text())
    assert cert.totally_real
    assert pencil.k == 1
    report = (tmp_path / "run.report").read_text()
    assert "verdict\ttotally-real\n" in report
    svg = (tmp_path / "run.svg").read_text()
    assert svg.lstrip().startswith("<?xml")
    assert 'version="1.1"' in svg


def test_pencil_build_round_trip(tmp_path, capsys):
    doc_path = tmp_path / "lines.pencil"
    code, _ = run(["pencil", "build", "fixture:circle", "--degree", "1",
                   "--points", "1/2,0", "--output", str(doc_path)], capsys)
    assert code == 0
    code, out = run(["pencil", "certify", "fixture:circle", "--degree", "1",
                     "--pencil", str(doc_path)], capsys)
    assert code == 0
    assert "totally-real" in out


def test_bounds_degree(capsys):
    code, out = run(["bounds", "--degree", "5", "--format", "machine"],
                    capsys)
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["genus"] == "6"
    assert rows["harnack-bound"] == "7"
    assert rows["m2-gabard-bound"] == "6"
    assert rows["m2-sepgon-range"] == "5,6"


def test_bounds_partition_cones(capsys):
    code, out = run(["bounds", "--genus", "6", "--partition", "4,2,2,2,2",
                     "--case", "g", "--format", "machine"], capsys)
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["cone-(4,3,3,3,3)"] == "not-member"
    assert rows["cone-(4,2,2,2,2)"] == "member"


def test_render_deterministic(tmp_path, capsys):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    for path in (a, b):
        code, _ = run(["render", "fixture:cubic-oval",
                       "--output", str(path)], capsys)
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    assert b'version="1.1"' in a.read_bytes()
