"""Acceptance criteria, one test per criterion, at contractual sizes.

Every check is exact (canonical-form equality or equality of rationals);
there are no tolerances anywhere.  Each test prints a single PASS/FAIL
line (run with ``pytest -s`` to see them as they happen).
"""

import json
import subprocess
import sys

import pytest

from thompson.construct import random_element
from thompson.documents import dump_element, load_element
from thompson.suites import Report, run_suite


def _verdict(criterion: str, reports: list[Report] | None, extra_ok: bool = True) -> None:
    ok = extra_ok and all(r.passed for r in reports or [])
    print(f"{'PASS' if ok else 'FAIL'}  {criterion}")
    if not ok:
        for r in reports or []:
            for c in r.checks:
                if not c.passed:
                    pytest.fail(f"{criterion}: {r.suite}[base={r.base}] {c.name} {c.details}")
        pytest.fail(criterion)


def test_criterion_01_group_laws():
    reports = [run_suite("laws", base=n, seed=1, samples=1000) for n in (2, 3, 5)]
    for r in reports:
        assert int(r.checks[0].details["cases"]) == 1000
    _verdict("criterion 1: group laws and closure, 1000 elements per N in {2,3,5}", reports)


def test_criterion_02_inverse_oracle():
    reports = [run_suite("oracle", base=2, seed=2, samples=200)]
    assert int(reports[0].checks[0].details["cases"]) == 200
    _verdict("criterion 2: closed-form inverse oracle, 200 random parameter pairs", reports)


def test_criterion_03_conjugation_identity():
    reports = [run_suite("eq1", base=2, seed=3, samples=500)]
    for check in reports[0].checks:
        assert int(check.details["cases"]) == 500
    _verdict("criterion 3: boundary-invariant covariance, 500 pairs each side", reports)


def test_criterion_04_icc_witnesses():
    reports = [run_suite("icc", base=n, seed=4, samples=100, count=10) for n in (2, 3, 4)]
    for r in reports:
        coverage = next(c for c in r.checks if c.name == "branch_coverage")
        for branch, used in coverage.details.items():
            assert int(used) >= 10, (r.base, branch, used)
    _verdict("criterion 4: 10 distinct conjugates per element, all branches covered", reports)


def test_criterion_05_supported_elements():
    reports = [run_suite("lemma32", base=2, seed=5, samples=200)]
    _verdict("criterion 5: supported elements, 200 random intervals", reports)


def test_criterion_06_commuting_pairs():
    reports = [run_suite("prop33", base=2, seed=6, samples=100)]
    _verdict("criterion 6: commuting pairs against 100 random finite subsets", reports)


def test_criterion_07_presentation_relations():
    reports = [run_suite("relations", base=n, maxj=6) for n in (2, 3, 4)]
    _verdict("criterion 7: defining relations for N in {2,3,4}, 0 <= i < j <= 6", reports)


def test_criterion_08_abelianization():
    reports = [run_suite("phi", base=2, seed=8, samples=500)]
    _verdict("criterion 8: endpoint map additive, surjective, kernel exact", reports)


def test_criterion_09_semidirect():
    reports = [
        run_suite(
            "semidirect", base=2, seed=9, samples=500, action_samples=200, law_triples=100
        )
    ]
    _verdict("criterion 9: splitting round trips and action laws", reports)


def test_criterion_10_central_sequences():
    reports = [run_suite("central", base=n, seed=10) for n in (2, 3)]
    _verdict("criterion 10: central sequences commute eventually, action centrally free", reports)


def test_criterion_11_group_algebra():
    reports = [run_suite("algebra", base=2, seed=11, samples=100)]
    _verdict("criterion 11: trace, basis distances, traciality, norm cross-check", reports)


def test_criterion_12_cli_round_trip(tmp_path):
    ok = True
    for seed in range(500):
        f = random_element(2, 7, seed)
        ok = ok and load_element(dump_element(f)) == f
    assert ok

    doc = tmp_path / "el.json"
    run_cli = lambda *a: subprocess.run(
        [sys.executable, "-m", "thompson.cli", *a], capture_output=True, text=True
    )
    made = run_cli("word", "A(1/2,1) s^-1 x1", "--out", str(doc))
    assert made.returncode == 0

    plots = []
    for name in ("p1.svg", "p2.svg"):
        out = tmp_path / name
        result = run_cli("plot", str(doc), "--out", str(out))
        assert result.returncode == 0
        plots.append(out.read_bytes())
    assert plots[0] == plots[1]

    outputs = []
    for name in ("r1", "r2"):
        out = tmp_path / name
        result = run_cli(
            "check", "lemma32", "--seed", "12", "--samples", "40", "--out", str(out)
        )
        assert result.returncode == 0
        report = json.loads((out / "report.json").read_text())
        assert report["verdict"] == "pass"
        outputs.append(
            (
                result.stdout,
                (out / "report.json").read_bytes(),
                (out / "cases.tsv").read_bytes(),
                (out / "figure.svg").read_bytes(),
            )
        )
    assert outputs[0] == outputs[1]
    print("PASS  criterion 12: serialisation round trip, CLI determinism, stable plots")
