"""Tests for the check manifest, the report runner and report rendering."""

import json

import pytest

from ballq_verify.common.axioms import AXIOMS
from ballq_verify.common.results import Status
from ballq_verify.errors.exceptions import (
    BallqError,
    ManifestError,
    UnknownCheckError,
)
from ballq_verify.verifier import (
    CalculatorRegistry,
    ReportRunner,
    evaluate_check,
    exit_code,
    explain,
    format_json,
    format_text,
    get_manifest,
    load_manifest,
    parse_manifest,
    run_report,
    summary_line,
)

DISPUTED = ["sec5_3.proper_transform", "sec5_5.eq14.integrality"]


def small_manifest(**overrides):
    check = {
        "id": "toy.splittings",
        "scope": "coverings",
        "calculator": "coverings.degree_splittings",
        "params": {"total": 6},
        "anchor": 'toy, "d·k = 6"',
        "expected": {
            "value": [[1, 6], [2, 3], [3, 2], [6, 1]],
            "provenance": "DERIVED",
        },
        "axioms": ["classification"],
    }
    check.update(overrides)
    return {"checks": [check]}


@pytest.fixture(scope="module")
def full_report():
    return run_report("all", parallel=False)


class TestManifest:
    """Test cases for manifest loading and validation."""

    def test_shipped_manifest(self):
        """Every check names a registered calculator and declared axioms."""
        manifest = get_manifest()
        assert len(manifest.checks) == 56
        registered = set(CalculatorRegistry.list_calculators())
        for check in manifest.checks:
            assert check.calculator in registered, check.id
            assert check.anchor.strip()
            for axiom in check.axioms:
                assert axiom in AXIOMS

    def test_disputed_checks(self):
        """Only the two proper-transform steps are disputed."""
        disputed = sorted(c.id for c in get_manifest().checks if c.disputed)
        assert disputed == DISPUTED

    def test_alias_lookup(self):
        """Checks can be looked up by alias."""
        manifest = get_manifest()
        assert manifest.get("appII.57").id == "sec5_5.budget_57"

    def test_unknown_id(self):
        """Unknown ids list the valid ones."""
        with pytest.raises(UnknownCheckError) as exc_info:
            get_manifest().get("nope")
        assert "lemma2.h0" in exc_info.value.valid_ids

    def test_select_scope(self):
        """Scopes partition the manifest."""
        manifest = get_manifest()
        sizes = {
            scope: len(manifest.select(scope))
            for scope in (
                "reider", "singularities", "coverings", "appendix2", "registry"
            )
        }
        assert sizes == {
            "reider": 12,
            "singularities": 8,
            "coverings": 10,
            "appendix2": 18,
            "registry": 8,
        }
        assert sum(sizes.values()) == len(manifest.select("all"))
        with pytest.raises(ManifestError):
            manifest.select("elsewhere")

    def test_duplicate_ids(self):
        """An alias may not shadow another id."""
        data = small_manifest()
        clash = dict(data["checks"][0], id="toy.other", aliases=["toy.splittings"])
        data["checks"].append(clash)
        with pytest.raises(ManifestError):
            parse_manifest(data)

    def test_undeclared_axiom(self):
        """Axioms must come from the catalogue."""
        with pytest.raises(ManifestError):
            parse_manifest(small_manifest(axioms=["magic"]))

    def test_invalid_entries(self):
        """Empty anchors and unknown scopes are rejected."""
        with pytest.raises(ManifestError):
            parse_manifest(small_manifest(anchor="  "))
        with pytest.raises(ManifestError):
            parse_manifest(small_manifest(scope="all"))
        with pytest.raises(ManifestError):
            parse_manifest([])

    def test_load_from_file(self, temp_dir):
        """Override manifests are read from YAML."""
        path = temp_dir / "checks.yaml"
        path.write_text(
            "checks:\n"
            "  - id: toy.one\n"
            "    scope: reider\n"
            "    calculator: coverings.degree_splittings\n"
            "    params: {total: 1}\n"
            "    anchor: 'toy'\n"
            "    expected: {value: [[1, 1]], provenance: TRIVIAL}\n"
        )
        manifest = load_manifest(path)
        assert manifest.check_ids() == ["toy.one"]
        with pytest.raises(ManifestError):
            load_manifest(temp_dir / "missing.yaml")

    def test_unreadable_file(self, temp_dir):
        """Undecodable manifests fail with a BallqError."""
        path = temp_dir / "checks.yaml"
        path.write_bytes(b"checks: \xff\xfe\n")
        with pytest.raises(BallqError):
            load_manifest(path)


class TestRunner:
    """Test cases for evaluating checks."""

    def test_full_report(self, full_report):
        """No mismatches; exactly the disputed steps are FLAGGED."""
        assert len(full_report) == 56
        assert not [r.check_id for r in full_report if r.status is Status.MISMATCH]
        flagged = [r.check_id for r in full_report if r.status is Status.FLAGGED]
        assert flagged == DISPUTED

    def test_report_sorted(self, full_report):
        """Results are ordered by check id."""
        ids = [r.check_id for r in full_report]
        assert ids == sorted(ids)

    def test_parallel_matches_sequential(self, full_report):
        """Parallel evaluation gives the same results."""
        parallel = run_report("all", parallel=True, max_workers=4)
        assert [r.model_dump() for r in parallel] == [
            r.model_dump() for r in full_report
        ]

    def test_scoped_report(self):
        """A scope restricts the run."""
        results = run_report("registry", parallel=False)
        assert len(results) == 8
        assert all(r.scope == "registry" for r in results)

    def test_toy_manifest(self):
        """Custom manifests run through the same path."""
        manifest = parse_manifest(small_manifest())
        (result,) = run_report("all", manifest=manifest, parallel=False)
        assert result.status is Status.MATCH
        assert result.axioms_used == [AXIOMS["classification"]]
        assert result.paper_anchor == 'toy, "d·k = 6"'

    def test_wrong_expectation_is_mismatch(self):
        """A wrong printed value that is not disputed is a MISMATCH."""
        manifest = parse_manifest(
            small_manifest(expected={"value": [[1, 6]], "provenance": "PAPER"})
        )
        (result,) = run_report("all", manifest=manifest, parallel=False)
        assert result.status is Status.MISMATCH
        assert exit_code([result]) == 1

    def test_unknown_calculator(self):
        """An unregistered calculator yields a MISMATCH with the error noted."""
        manifest = parse_manifest(small_manifest(calculator="nope"))
        result = evaluate_check(manifest.checks[0])
        assert result.status is Status.MISMATCH
        assert result.computed is None
        assert result.notes[-1].startswith("error: ManifestError")

    def test_calculator_failure(self):
        """Calculator exceptions do not escape the runner."""
        manifest = parse_manifest(small_manifest(params={"total": 0}))
        result = evaluate_check(manifest.checks[0])
        assert result.status is Status.MISMATCH
        assert "ValidationError" in result.notes[-1]

    def test_empty_run(self):
        """No checks, no results."""
        assert ReportRunner(quiet=True).run([]) == []

    def test_calculators_are_logged(self):
        """Registered calculators are wrapped with call logging."""
        calculator = CalculatorRegistry.get_calculator("coverings.degree_splittings")
        assert calculator.__wrapped__.__name__ == calculator.__name__
        assert calculator(total=3).value == [[1, 3], [3, 1]]


class TestReportRendering:
    """Test cases for text and JSON output."""

    def test_summary_line(self, full_report):
        """Counts per status."""
        assert summary_line(full_report) == "56 checks: 54 MATCH, 2 FLAGGED, 0 MISMATCH"

    def test_text_report(self, full_report):
        """The table lists every check and ends with the summary."""
        text = format_text(full_report)
        assert "sec5_5.budget_57" in text
        assert text.rstrip().endswith("0 MISMATCH")

    def test_json_report(self, full_report):
        """Rationals are strings; statuses are names."""
        data = json.loads(format_json(full_report))
        assert len(data) == 56
        by_id = {item["check_id"]: item for item in data}
        assert by_id["sec5_3.proper_transform"]["status"] == "FLAGGED"
        assert by_id["sec5_3.proper_transform"]["computed"] == "0"
        assert by_id["appII.n0.integrality"]["computed"]["B.C1"] == ["4/3"]

    def test_json_schema(self, full_report):
        """Each record carries its anchor, provenance tag and cited axioms."""
        data = json.loads(format_json(full_report))
        assert set(data[0]) == {
            "check_id",
            "scope",
            "paper_anchor",
            "expected",
            "computed",
            "status",
            "axioms_used",
            "notes",
        }
        assert all(item["paper_anchor"].strip() for item in data)
        provenances = {item["expected"]["provenance"] for item in data}
        assert provenances == {"PAPER", "TRIVIAL", "DERIVED"}
        cited = {text for item in data for text in item["axioms_used"]}
        assert cited == set(AXIOMS.values())

    def test_exit_code(self, full_report):
        """FLAGGED fails only on request."""
        assert exit_code(full_report) == 0
        assert exit_code(full_report, fail_on_flagged=True) == 1


class TestExplain:
    """Test cases for derivation traces."""

    def test_explain_flagged_check(self):
        """The trace shows the standard coefficients and the status."""
        text = explain("sec5_3.proper_transform")
        assert "Calculator: hj.quotient_curve" in text
        assert "hyperbolicity:" in text
        assert "(2/3, 1/3)" in text
        assert text.endswith("Status: FLAGGED")

    def test_explain_case_a_intermediate(self):
        """The unreproduced B ∩ E3 = {O1, O2} step is stated in the trace."""
        text = explain("appII.case_a")
        assert "B ∩ E3 = {O1, O2} is not reproduced" in text
        assert text.endswith("Status: MATCH")

    def test_explain_by_alias(self):
        """Aliases resolve to their check."""
        assert explain("appII.57").startswith("sec5_5.budget_57 [coverings]")

    def test_explain_unknown(self):
        """Unknown ids raise with the valid list."""
        with pytest.raises(UnknownCheckError):
            explain("nope")
