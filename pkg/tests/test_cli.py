"""Command-line behavior: exit codes, canonical JSON reports, determinism."""

import json
import subprocess
import sys


from nijleib.cli import EXIT_FAIL, EXIT_INVALID, EXIT_PASS, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fx(fixtures_dir, name):
    return str(fixtures_dir / name)


def test_verify_pass(capsys, fixtures_dir):
    code, out, err = run(capsys, "verify", fx(fixtures_dir, "loday2_classified.json"))
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["verdict"] == "pass"
    assert doc["checks"]["leibniz"] is True
    assert "tool_version" in doc


def test_verify_fail_with_certificate(capsys, fixtures_dir):
    code, out, err = run(capsys, "verify", fx(fixtures_dir, "loday2_nonnijenhuis.json"))
    assert code == EXIT_FAIL
    doc = json.loads(out)
    assert doc["verdict"] == "fail"
    cert = doc["counterexample"]
    assert cert["identity"] == "nijenhuis"
    assert cert["indices"]
    assert cert["residual"]


def test_verify_invalid_input(capsys, fixtures_dir):
    code, out, err = run(capsys, "verify", fx(fixtures_dir, "bad_rational.json"))
    assert code == EXIT_INVALID
    assert out == ""
    assert "error:" in err


def test_missing_file_is_invalid(capsys, fixtures_dir):
    code, _, err = run(capsys, "verify", fx(fixtures_dir, "no_such_file.json"))
    assert code == EXIT_INVALID
    assert "error:" in err


def test_verify_weighted_kind_requires_weight(capsys, fixtures_dir):
    code, _, err = run(
        capsys,
        "verify",
        fx(fixtures_dir, "loday2_classified.json"),
        "--kind",
        "rota_baxter_weighted",
    )
    assert code == EXIT_INVALID
    assert "--weight" in err


def test_induce_bracket_round_trips(capsys, fixtures_dir):
    code, out, _ = run(capsys, "induce", "bracket", fx(fixtures_dir, "loday2_classified.json"))
    assert code == EXIT_PASS
    doc = json.loads(out)
    # the classified operator leaves the loday2 bracket fixed
    assert doc["algebra"]["brackets"] == {"e2,e1": {"e1": "1"}, "e2,e2": {"e1": "1"}}


def test_induce_rep(capsys, fixtures_dir):
    code, out, _ = run(capsys, "induce", "rep", fx(fixtures_dir, "loday2_classified.json"))
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert len(doc["left"]) == 2 and len(doc["right"]) == 2


def test_cohomology_la(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "cohomology",
        fx(fixtures_dir, "loday2_classified.json"),
        "--complex",
        "la",
        "--max-degree",
        "2",
    )
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["degrees"][0]["H"] == 1
    assert doc["verdict"] == "pass"
    assert all(doc["junctions"])


def test_cohomology_nla_golden(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "cohomology",
        fx(fixtures_dir, "loday2_classified.json"),
        "--complex",
        "nla",
        "--max-degree",
        "3",
    )
    assert code == EXIT_PASS
    doc = json.loads(out)
    got = [(e["C"], e["H"]) for e in doc["degrees"]]
    assert got == [(2, 0), (6, 1), (12, 3), (24, 5)]
    assert doc["degree0_caveat"] is True


def test_search_grid_count(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "search",
        fx(fixtures_dir, "loday2_plain.json"),
        "--range",
        "-2..2",
    )
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["count"] == 39
    assert len(doc["operators"]) == 39


def test_search_guard_trips(capsys, fixtures_dir):
    code, _, err = run(
        capsys,
        "search",
        fx(fixtures_dir, "loday2_plain.json"),
        "--range",
        "-2..2",
        "--guard",
        "10",
    )
    assert code == EXIT_INVALID
    assert "error:" in err


def test_search_bad_range(capsys, fixtures_dir):
    code, _, err = run(
        capsys, "search", fx(fixtures_dir, "loday2_plain.json"), "--range", "2"
    )
    assert code == EXIT_INVALID
    assert "range" in err


def test_selfcheck_full_passes(capsys, fixtures_dir):
    code, out, _ = run(capsys, "selfcheck", fx(fixtures_dir, "loday2_classified.json"))
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["verdict"] == "pass"
    assert all(e["commutes"] for e in doc["chain_map_combined"])


def test_selfcheck_printed_reports_failure(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "selfcheck",
        fx(fixtures_dir, "loday2_classified.json"),
        "--phi",
        "printed",
    )
    assert code == EXIT_FAIL
    doc = json.loads(out)
    failing = [e for e in doc["chain_map_combined"] if not e["commutes"]]
    assert failing
    assert "counterexample" in failing[0]


def test_deform_check_pass(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "deform",
        "check",
        fx(fixtures_dir, "loday2_classified.json"),
        fx(fixtures_dir, "deformation_twisted.json"),
    )
    assert code == EXIT_PASS
    assert json.loads(out)["verdict"] == "pass"


def test_deform_twist_then_check(capsys, fixtures_dir, tmp_path):
    code, out, _ = run(
        capsys,
        "deform",
        "twist",
        fx(fixtures_dir, "loday2_classified.json"),
        fx(fixtures_dir, "deformation_trivial.json"),
        "--iso",
        fx(fixtures_dir, "iso_linear.json"),
    )
    assert code == EXIT_PASS
    twisted = tmp_path / "twisted.json"
    twisted.write_text(out)
    code2, out2, _ = run(
        capsys,
        "deform",
        "check",
        fx(fixtures_dir, "loday2_classified.json"),
        str(twisted),
    )
    assert code2 == EXIT_PASS


def test_deform_cocycle(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "deform",
        "cocycle",
        fx(fixtures_dir, "loday2_classified.json"),
        fx(fixtures_dir, "deformation_twisted.json"),
    )
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["is_cocycle"] is True


def test_extend_build_and_extract(capsys, fixtures_dir):
    bundle = fx(fixtures_dir, "loday2_classified.json")
    code, out, _ = run(capsys, "extend", "build", bundle, fx(fixtures_dir, "extension_cocycle.json"))
    assert code == EXIT_PASS
    assert json.loads(out)["total_dimension"] == 4

    code, out, _ = run(
        capsys, "extend", "extract", bundle, fx(fixtures_dir, "extension_cocycle.json")
    )
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert "psi" in doc and "chi" in doc


def test_extend_compare_via_corner(capsys, fixtures_dir):
    bundle = fx(fixtures_dir, "loday2_classified.json")
    code, out, _ = run(
        capsys,
        "extend",
        "compare",
        bundle,
        fx(fixtures_dir, "extension_related.json"),
        fx(fixtures_dir, "extension_cocycle.json"),
        "--corner",
        fx(fixtures_dir, "corner.json"),
    )
    assert code == EXIT_PASS
    assert json.loads(out)["equal"] is True


def test_extend_compare_requires_corner(capsys, fixtures_dir):
    bundle = fx(fixtures_dir, "loday2_classified.json")
    code, _, err = run(
        capsys,
        "extend",
        "compare",
        bundle,
        fx(fixtures_dir, "extension_related.json"),
        fx(fixtures_dir, "extension_cocycle.json"),
    )
    assert code == EXIT_INVALID
    assert "corner" in err


def run_proc(*argv):
    return subprocess.run(
        [sys.executable, "-m", "nijleib.cli", *argv],
        capture_output=True,
    )


def test_repeated_invocations_byte_identical(fixtures_dir):
    argv = [
        "cohomology",
        fx(fixtures_dir, "loday2_classified.json"),
        "--complex",
        "nla",
        "--max-degree",
        "2",
    ]
    first = run_proc(*argv)
    second = run_proc(*argv)
    assert first.returncode == second.returncode == EXIT_PASS
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n")


def test_entry_point_installed(fixtures_dir):
    proc = subprocess.run(
        ["nijleib", "verify", fx(fixtures_dir, "loday2_classified.json")],
        capture_output=True,
    )
    assert proc.returncode == EXIT_PASS
