"""End-to-end checks of the command line driver.

Each test invokes ``main`` with an argv list and inspects the exit code
plus the JSON report; the heavyweight suites (full invariance, the
curated lists over the big catalog) are covered by the acceptance run,
so this module sticks to the fast commands and the plumbing: exit
codes, fixture overrides, corruption handling, determinism.
"""

from __future__ import annotations

import json
import shutil
from pathlib import Path

from jetbrackets import cli
from jetbrackets.fixtures import fixture_path


def run_json(capsys, argv):
    rc = cli.main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return rc, json.loads(out)


def by_id(report):
    return {c["id"]: c for c in report["checks"]}


def test_euler_order_three_constants(capsys):
    rc, rep = run_json(capsys, ["euler", "--order", "3"])
    assert rc == 0
    checks = by_id(rep)
    assert checks["order3:quotient"]["status"] == "pass"
    assert "47/26" in checks["order3:quotient"]["detail"]
    assert "degree 11" in checks["order3:threshold"]["detail"]
    assert rep["totals"] == {"checks": 2, "pass": 2, "fail": 0}


def test_euler_order_four_report(capsys):
    rc, rep = run_json(capsys, ["euler", "--order", "4", "--degree", "9"])
    assert rc == 0
    checks = by_id(rep)
    assert checks["order4:quotient"]["detail"].startswith("1797/848")
    assert "degree 9" in checks["order4:threshold"]["detail"]
    assert "937/28800000" in checks["order4:fam1"]["detail"]
    assert checks["order4:degree-9"]["detail"].endswith("positive")
    assert rep["totals"]["fail"] == 0


def test_euler_order_five_reports_the_mismatch(capsys):
    rc, rep = run_json(capsys, ["euler", "--order", "5"])
    assert rc == 1
    checks = by_id(rep)
    failing = [c["id"] for c in rep["checks"] if c["status"] == "fail"]
    assert failing == ["order5:printed-totals"]
    assert "neither matches" in checks["order5:printed-totals"]["detail"]
    assert checks["order5:rowH-as-printed"]["status"] == "pass"
    assert checks["order5:quotient-bound"]["status"] == "pass"
    assert "1.88590" in checks["order5:totals"]["detail"]
    assert rep["totals"]["fail"] == 1


def test_catalog_row_counts(capsys):
    rc, rep = run_json(capsys, ["catalog"])
    assert rc == 0
    assert rep["totals"] == {"checks": 33, "pass": 33, "fail": 0}
    checks = by_id(rep)
    assert "25 base + 6 ghost" in checks["count"]["detail"]
    assert checks["entry:X27"]["paper_locator"] == "construct:ghost-quotient"

    rc, rep = run_json(capsys, ["catalog", "--nu", "3"])
    assert rc == 0
    assert rep["totals"]["checks"] == 18
    assert "16 base + 0 ghost" in by_id(rep)["count"]["detail"]

    rc, rep = run_json(capsys, ["catalog", "--kappa", "2"])
    assert rc == 0
    assert rep["totals"]["checks"] == 5


def test_groebner_certify_and_derive(capsys):
    rc, rep = run_json(capsys, ["groebner", "RESTRICTED21", "certify"])
    assert rc == 0
    assert "210 S-pairs" in rep["checks"][0]["detail"]

    rc, rep = run_json(capsys, ["groebner", "FULL26", "certify"])
    assert rc == 0
    assert "325 S-pairs" in rep["checks"][0]["detail"]

    rc, rep = run_json(capsys, ["groebner", "SYZ15", "derive"])
    assert rc == 0
    assert "26 elements" in rep["checks"][0]["detail"]

    rc, rep = run_json(capsys, ["groebner", "SYZ15", "membership"])
    assert rc == 0
    assert rep["totals"] == {"checks": 2, "pass": 2, "fail": 0}


def test_groebner_restricted_derivation_needs_saturation(capsys):
    rc, rep = run_json(capsys, ["groebner", "RESTRICTED21", "derive"])
    assert rc == 1
    detail = rep["checks"][0]["detail"]
    assert "23 elements" in detail and "21" in detail

    rc, rep = run_json(capsys, ["groebner", "RESTRICTED21", "membership"])
    assert rc == 0
    checks = by_id(rep)
    assert checks["saturate:cleared15-by-wronskian"]["status"] == "pass"


def test_staircase_components(capsys):
    rc, rep = run_json(capsys, ["staircase", "RESTRICTED21"])
    assert rc == 0
    assert rep["totals"] == {"checks": 9, "pass": 9, "fail": 0}

    rc, rep = run_json(capsys, ["staircase", "FULL26", "--max-fixed", "6"])
    assert rc == 0
    assert rep["totals"] == {"checks": 18, "pass": 18, "fail": 0}

    rc, rep = run_json(capsys, ["staircase", "TOY"])
    assert rc == 0
    assert "free=x" in rep["checks"][0]["detail"]


def test_verify_fast_suites(capsys):
    rc, rep = run_json(capsys, ["verify", "ranks"])
    assert rc == 0
    ranks = [c["detail"] for c in rep["checks"]]
    assert ["rank 4" in d or "rank 5" in d for d in ranks] == [True] * 4

    rc, rep = run_json(capsys, ["verify", "appendix3"])
    assert rc == 0
    assert by_id(rep)["wronskian:pair-combination"]["status"] == "pass"

    rc, rep = run_json(capsys, ["verify", "curated:ORDER4_NINE"])
    assert rc == 0
    assert rep["totals"] == {"checks": 9, "pass": 9, "fail": 0}

    rc, rep = run_json(capsys, ["verify", "invariance", "--nu", "3"])
    assert rc == 0
    assert rep["totals"] == {"checks": 16, "pass": 16, "fail": 0}


def test_bi_invariance_partitions_the_catalog(capsys):
    rc, rep = run_json(capsys, ["verify", "bi-invariance"])
    assert rc == 0
    checks = by_id(rep)
    assert rep["totals"]["checks"] == 31
    assert checks["unipotent:F16_11"]["status"] == "pass"
    assert checks["unipotent-moves:fp2"]["status"] == "pass"

    rc, rep = run_json(capsys, ["verify", "bi-invariance", "--nu", "3"])
    assert rc == 0
    assert by_id(rep)["unipotent:commutator"]["status"] == "pass"


def test_usage_and_fixture_errors(capsys):
    assert cli.main(["verify", "nosuch"]) == 2
    capsys.readouterr()
    assert cli.main(["groebner", "BOGUS", "certify"]) == 2
    capsys.readouterr()
    assert cli.main(["verify", "curated", "--fixtures", "/nonexistent-dir"]) == 2
    capsys.readouterr()
    assert cli.main(["euler", "--order", "4", "--pair-budget", "0"]) == 2
    capsys.readouterr()


def test_corrupted_fixture_fails_checks(tmp_path, capsys):
    src = fixture_path("syzygy_lists.txt")
    text = Path(src).read_text()
    broken = text.replace("3*Lambda3*Lambda3", "3*Lambda3*Lambda3 + Lambda3", 1)
    assert broken != text
    (tmp_path / "syzygy_lists.txt").write_text(broken)
    rc, rep = run_json(
        capsys,
        ["verify", "curated:ORDER4_NINE", "--fixtures", str(tmp_path)],
    )
    assert rc == 1
    assert rep["checks"][0]["status"] == "fail"
    assert rep["totals"]["fail"] == 1


def test_report_is_deterministic(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = cli.main(["verify", "ranks", "--out", str(out), "--json"])
    assert rc == 0
    stdout_one = capsys.readouterr().out
    first = out.read_bytes()
    assert json.loads(stdout_one) == json.loads(first.decode())
    rc = cli.main(["verify", "ranks", "--out", str(out)])
    assert rc == 0
    capsys.readouterr()
    assert out.read_bytes() == first


def test_fixture_override_round_trip(tmp_path, capsys):
    for name in ("groebner_bases.txt", "euler_families.txt"):
        shutil.copy(fixture_path(name), tmp_path / name)
    rc, rep = run_json(capsys, ["euler", "--order", "4", "--fixtures", str(tmp_path)])
    assert rc == 0
    assert rep["config"]["fixture_dir"] == str(tmp_path)


def test_text_rendering_marks_failures(capsys):
    rc = cli.main(["euler", "--order", "5"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAIL" in out
    assert out.strip().endswith("1 fail")
