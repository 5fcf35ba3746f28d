"""命令行入口：子命令输出与退出码。"""

import json

import pytest

from wonderful_braid.harness.cli import main
from wonderful_braid.harness.config import get_settings


def _lines(capsys):
    return [line for line in capsys.readouterr().out.splitlines() if line]


class TestNested:
    @pytest.mark.parametrize("size, count", [(2, 10), (3, 15)])
    def test_count(self, capsys, size, count):
        assert main(["nested", "--n", "4", "--size", str(size), "--count"]) == 0
        assert _lines(capsys) == [str(count)]

    def test_json_lines(self, capsys):
        assert main(["nested", "--n", "3"]) == 0
        rows = [json.loads(line) for line in _lines(capsys)]
        assert len(rows) == 4
        assert {"n": 3, "blocks": [[1, 2, 3]]} in rows

    def test_depth_filter(self, capsys):
        assert main(["nested", "--n", "3", "--depth", "0", "--count"]) == 0
        assert _lines(capsys) == ["1"]

    def test_csv(self, capsys):
        assert main(["nested", "--n", "3", "--size", "2", "--format", "csv"]) == 0
        lines = _lines(capsys)
        assert lines[0] == "n,size,blocks"
        assert len(lines) == 4


class TestObjects:
    def test_bijection_forward(self, capsys):
        code = main(["bijection", "--n", "5", "--nested", "[[1,2,3,4,5],[1,2],[3,4],[3,4,5]]"])
        assert code == 0
        payload = json.loads(_lines(capsys)[0])
        assert payload["ground"] == 8
        assert payload["blocks"] == [[1, 2], [3, 4], [5, 7], [6, 8]]

    def test_bijection_inverse(self, capsys):
        assert main(["bijection", "--n", "5", "--partition", "[[1,2],[3,4],[5,7],[6,8]]"]) == 0
        payload = json.loads(_lines(capsys)[0])
        assert sorted(payload["blocks"]) == [[1, 2], [1, 2, 3, 4, 5], [3, 4], [3, 4, 5]]

    def test_bijection_needs_root(self, capsys):
        assert main(["bijection", "--n", "4", "--nested", "[[1,2]]"]) == 2

    def test_action_on_nested(self, capsys):
        assert main(["action", "--perm", "1 0 2 3 4", "--nested", "[[1,2,3,4],[1,2]]"]) == 0
        payload = json.loads(_lines(capsys)[0])
        assert payload["n"] == 4
        assert sorted(payload["blocks"]) == [[1, 2, 3, 4], [1, 3, 4]]

    def test_action_on_labelled(self, capsys):
        labelled = json.dumps([
            {"block": [1, 2, 3, 5], "label": 2},
            {"block": [4, 6, 7], "label": 1},
            {"block": [8, 9], "label": 0},
        ])
        assert main(["action", "--perm", "0 4 2 3 1 5 6 7 8 9", "--labelled", labelled]) == 0
        payload = json.loads(_lines(capsys)[0])
        assert payload["labels"] is not None
        assert [1, 6, 7] in payload["blocks"]

    def test_bad_permutation(self):
        assert main(["action", "--perm", "1 1 2", "--nested", "[[1,2]]"]) == 2


class TestCohomology:
    def test_poincare(self, capsys):
        assert main(["poincare", "--n", "5"]) == 0
        payload = json.loads(_lines(capsys)[0])
        assert [t["num"] for t in payload["terms"]] == ["1", "16", "16", "1"]
        assert [t["exp"][0] for t in payload["terms"]] == [0, 1, 2, 3]

    def test_poincare_supermaximal(self, capsys):
        assert main(["poincare", "--n", "4", "--model", "supermaximal"]) == 0
        payload = json.loads(_lines(capsys)[0])
        assert [t["num"] for t in payload["terms"]] == ["1", "20", "1"]

    def test_poincare_rejects_small_n(self):
        assert main(["poincare", "--n", "1"]) == 2

    def test_enumeration_bound(self, tmp_path):
        path = tmp_path / "braid.env"
        path.write_text("WONDERFUL_BRAID_ENUMERATION_BOUND=4\n", encoding="utf-8")
        assert main(["--config", str(path), "poincare", "--n", "5"]) == 2

    def test_basis(self, capsys):
        assert main(["basis", "--n", "4"]) == 0
        rows = [json.loads(line) for line in _lines(capsys)]
        assert len(rows) == 7
        assert sorted(r["qdeg"] for r in rows) == [0, 1, 1, 1, 1, 1, 2]

    def test_basis_background_only_for_minimal(self):
        assert main(["basis", "--n", "4", "--model", "maximal", "--background", "[[1,2,3,4]]"]) == 2


class TestSeriesAndOrbits:
    def test_series_compare(self, capsys):
        assert main(["series", "--name", "xi", "--order", "4", "--compare"]) == 0
        payload = json.loads(_lines(capsys)[0])
        assert payload["truncation_order"] == 4
        assert len(payload["coeffs"]) == 5

    def test_series_w_compare(self, capsys):
        assert main(["series", "--name", "w", "--order", "5", "--compare"]) == 0

    def test_closure(self, capsys):
        assert main(["closure", "--n", "4", "--count", "--compare"]) == 0
        assert _lines(capsys) == ["26"]

    def test_orbits(self, capsys):
        assert main(["orbits", "--n", "5", "--k", "3", "--mode", "extended"]) == 0
        assert _lines(capsys) == ["4"]

    def test_orbit_representatives(self, capsys):
        assert main(["orbits", "--n", "4", "--k", "1", "--representatives"]) == 0
        assert len(_lines(capsys)) == 2


class TestVerifyCommand:
    def test_small_run(self, capsys):
        argv = ["verify", "--n-max", "3", "--order", "4", "--check", "bijection", "--check", "minimal", "--no-progress"]
        assert main(argv) == 0
        report = json.loads(_lines(capsys)[0])
        assert report["overall"] is True
        assert {c["name"] for c in report["checks"]} >= {"bijection_count", "minimal_printed"}


class TestGlobalOptions:
    def test_missing_config(self, tmp_path):
        assert main(["--config", str(tmp_path / "absent.env"), "nested", "--n", "3"]) == 2

    def test_overrides_reach_settings(self, capsys):
        assert main(["--log-level", "warning", "--workers", "2", "nested", "--n", "3", "--count"]) == 0
        settings = get_settings()
        assert settings.log_level == "warning"
        assert settings.workers == 2

    def test_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["poincare"])
        assert exc.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "wonderful-braid" in capsys.readouterr().out
