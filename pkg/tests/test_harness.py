"""harness 子包：配置、输出模型、转换辅助函数与验证报告。"""

import io
import json

import pytest

from wonderful_braid.action.labelled import LabelledPartition
from wonderful_braid.cohomology.supermax import enumerate_supermax_basis
from wonderful_braid.cohomology.yuzvinsky import enumerate_yuz
from wonderful_braid.combinatorics.blocks import NestedSet, SetPartition
from wonderful_braid.errors import DomainError, InvalidObjectError
from wonderful_braid.harness.config import Settings, get_settings, reset_settings
from wonderful_braid.harness.helpers import (
    basis_payload,
    emit,
    load_json_arg,
    nested_frame,
    parse_nested,
    parse_partition,
    partition_payload,
    poly_payload,
    series_frame,
    series_payload,
)
from wonderful_braid.harness.models import CheckResult, VerificationReport
from wonderful_braid.harness.verify import CHECKS, check_action, check_bigpsi, check_maximal, run_checks
from wonderful_braid.series.egf import EgfSeries
from wonderful_braid.series.poly import POLY_RING, Q


class TestSettings:
    def test_defaults(self):
        settings = Settings.from_file(None)
        assert settings.truncation_order == 12
        assert settings.workers == 1
        assert settings.allow_trivial_meet is False
        assert settings.log_level == "info"

    def test_from_file(self, tmp_path):
        path = tmp_path / "braid.env"
        path.write_text(
            "# comment\n"
            "WONDERFUL_BRAID_TRUNCATION_ORDER=7\n"
            "WONDERFUL_BRAID_ALLOW_TRIVIAL_MEET=yes\n"
            "WONDERFUL_BRAID_LOG_LEVEL='debug'\n"
            "OTHER_KEY=1\n",
            encoding="utf-8",
        )
        settings = Settings.from_file(path)
        assert settings.truncation_order == 7
        assert settings.allow_trivial_meet is True
        assert settings.log_level == "debug"
        assert settings.verify_n_max == 6

    def test_missing_file(self, tmp_path):
        with pytest.raises(DomainError):
            Settings.from_file(tmp_path / "absent.env")

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "braid.env"
        path.write_text("WONDERFUL_BRAID_WORKERS=many\n", encoding="utf-8")
        with pytest.raises(DomainError):
            Settings.from_file(path)

    def test_singleton(self):
        first = get_settings()
        assert get_settings() is first
        custom = Settings(workers=3)
        reset_settings(custom)
        assert get_settings() is custom


class TestPayloads:
    def test_poly_payload(self):
        payload = poly_payload(1 + 5 * Q + Q**2)
        assert payload.vars == ["q", "y", "z"]
        assert [t.exp for t in payload.terms] == [[0, 0, 0], [1, 0, 0], [2, 0, 0]]
        assert [t.num for t in payload.terms] == ["1", "5", "1"]
        assert all(t.den == "1" for t in payload.terms)

    def test_series_payload_keeps_rationals(self):
        s = EgfSeries.from_egf([0, 1, 1], 2)
        payload = series_payload(s)
        assert payload.truncation_order == 2
        assert payload.coeffs[2].terms[0].den == "2"
        assert payload.coeffs[0].terms == []

    def test_partition_payload(self):
        p = SetPartition.of([[1, 2], [3, 4]], 4)
        assert partition_payload(p).labels is None
        lp = LabelledPartition.from_pairs([([1, 2, 3], 1), ([4, 5], 0)], 5)
        payload = partition_payload(lp)
        assert payload.blocks == [[1, 2, 3], [4, 5]]
        assert payload.labels == [1, 0]

    def test_basis_payload(self):
        top = enumerate_yuz("minimal", None, 4)[-1]
        payload = basis_payload(top)
        assert payload.support == [[1, 2, 3, 4]]
        assert payload.exponents == [2]
        assert payload.qdeg == 2
        element = next(e for e in enumerate_supermax_basis(4) if e.chain.links)
        assert basis_payload(element).deltas == [1]

    def test_emit_writes_one_line(self):
        out = io.StringIO()
        emit(poly_payload(POLY_RING.one), out)
        text = out.getvalue()
        assert text.endswith("\n")
        assert json.loads(text)["terms"][0]["num"] == "1"

    def test_frames(self):
        frame = series_frame(EgfSeries.from_coefficients([1, Q], 1))
        assert list(frame.columns) == ["n", "q", "y", "z", "num", "den"]
        assert len(frame) == 2
        nested = nested_frame([NestedSet.root(3)])
        assert nested.loc[0, "blocks"] == "[[1,2,3]]"


class TestInputParsing:
    def test_load_json_from_stdin(self):
        assert load_json_arg("-", io.StringIO("[[1, 2]]")) == [[1, 2]]

    def test_load_json_rejects_garbage(self):
        with pytest.raises(InvalidObjectError):
            load_json_arg("[[1, 2]")

    def test_parse_nested(self):
        s = parse_nested({"n": 4, "blocks": [[1, 2], [1, 2, 3, 4]]})
        assert s == NestedSet.of([[1, 2], [1, 2, 3, 4]], 4)
        assert parse_nested([[1, 2]], 4).n == 4
        with pytest.raises(InvalidObjectError):
            parse_nested([[1, 2]])

    def test_parse_partition_infers_ground(self):
        assert parse_partition([[1, 3], [2, 4]]).ground == 4
        assert parse_partition({"ground": 5, "blocks": [[1, 2], [3, 4, 5]]}).ground == 5


class TestVerify:
    def test_report_is_sorted(self):
        report = VerificationReport.from_checks([
            CheckResult(name="b", status="pass"),
            CheckResult(name="a", parameters={"n": 3}, status="pass"),
            CheckResult(name="a", parameters={"n": 2}, status="fail"),
        ])
        assert [(c.name, c.parameters.get("n")) for c in report.checks] == [("a", 2), ("a", 3), ("b", None)]
        assert report.overall is False

    def test_small_run_passes(self):
        report = run_checks(4, 5, names=["bijection", "minimal", "substitutions", "supermax"])
        assert report.overall
        assert {c.name for c in report.checks} >= {
            "bijection_count",
            "bijection_roundtrip",
            "minimal_phi_vs_basis",
            "minimal_printed",
            "supermax_substitution",
            "z_substitution_forms",
            "euler_secant",
        }

    def test_unknown_check(self):
        with pytest.raises(KeyError):
            run_checks(3, 4, names=["nonsense"])

    def test_every_check_is_registered(self):
        assert set(CHECKS) == {
            "action", "bigpsi", "bijection", "closure", "euler", "integrality",
            "labelled_partitions", "maximal", "minimal", "orbits", "substitutions",
            "supermax", "trees", "xi",
        }

    def test_corrupted_substitution_is_reported(self, monkeypatch, caplog):
        import wonderful_braid.genfun.supermax as supermax

        real = supermax.supermax_tables

        def corrupted(order):
            sub_y, sub_z = real(order)
            sub_y = dict(sub_y)
            sub_y[2] = POLY_RING.zero
            return sub_y, sub_z

        monkeypatch.setattr(supermax, "supermax_tables", corrupted)
        with caplog.at_level("WARNING", logger="wonderful_braid.verify"):
            report = run_checks(4, 4, names=["supermax"])
        assert not report.overall
        failed = [c for c in report.checks if c.status == "fail"]
        assert any(c.name == "supermax_substitution" and c.parameters == {"n": 4} for c in failed)
        assert "supermax_substitution" in caplog.text

    def test_failing_check_does_not_raise(self, monkeypatch):
        def broken(n_max, order):
            raise DomainError("boom")

        monkeypatch.setitem(CHECKS, "trees", broken)
        report = run_checks(3, 4, names=["trees"])
        assert report.overall is False
        assert report.checks[0].actual == "DomainError: boom"

    def test_unexpected_exception_is_recorded(self, monkeypatch, caplog):
        def broken(n_max, order):
            raise TypeError("boom")

        monkeypatch.setitem(CHECKS, "trees", broken)
        with caplog.at_level("ERROR", logger="wonderful_braid.verify"):
            report = run_checks(3, 4, names=["trees", "substitutions"])
        assert report.overall is False
        failed = [c for c in report.checks if c.status == "fail"]
        assert [(c.name, c.actual) for c in failed] == [("trees", "TypeError: boom")]
        assert any(c.name == "euler_secant" for c in report.checks)
        assert "trees" in caplog.text

    @pytest.mark.slow
    def test_action_composition_reaches_n_five(self):
        results = check_action(5, 0)
        composed = [c for c in results if c.name == "action_composition"]
        assert [c.parameters["n"] for c in composed] == [2, 3, 4, 5]
        assert all(c.status == "pass" for c in results)

    @pytest.mark.slow
    def test_maximal_palindromy_follows_n_max(self):
        results = check_maximal(6, 0)
        assert [c.parameters["n"] for c in results] == [2, 3, 4, 5, 6]
        assert all(c.status == "pass" for c in results)

    @pytest.mark.slow
    def test_bigpsi_extraction_reaches_n_seven(self):
        results = check_bigpsi(3, 4)
        head = results[0]
        assert head.name == "bigpsi_formula_vs_direct"
        assert head.parameters == {"order": 8}
        extracted = [c for c in results if c.name == "bigpsi_extraction"]
        assert [c.parameters["n"] for c in extracted] == [2, 3, 4, 5, 6, 7]
        assert all(c.status == "pass" for c in results)
