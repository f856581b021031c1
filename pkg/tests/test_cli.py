import json
import subprocess
import sys

import pytest

from circleweights import FixedPointData, configfile
from circleweights.cli import main
from circleweights.hp2 import iter_params


def write_config(tmp_path, points, dimension=8, name="cfg.json"):
    path = tmp_path / name
    path.write_text(
        json.dumps({"dimension": dimension, "points": [{"weights": w, "sign": s} for w, s in points]})
    )
    return str(path)


STANDARD = [([4, 2, 1, 1], -1), ([4, 2, 3, 3], 1), ([1, 1, 3, 3], 1)]
SEMI = [([4, 1, 1, 2], -1), ([1, 2, 3, 4], 1), ([1, 2, 2, 3], 1)]


class TestConfigFile:
    def test_round_trip(self):
        d = FixedPointData.from_points(STANDARD)
        assert configfile.loads(configfile.dumps(d)) == d

    @pytest.mark.parametrize(
        "text,where",
        [
            ('{"dimension": 8, "points": [', "line 1"),
            ("[]", "top level"),
            ('{"points": []}', "dimension"),
            ('{"dimension": 7, "points": [{"weights": [1], "sign": 1}]}', "dimension"),
            ('{"dimension": 8, "points": []}', "points"),
            ('{"dimension": 8, "points": [{"weights": [1, 1, 1], "sign": 1}]}', "points[0].weights"),
            ('{"dimension": 8, "points": [{"weights": [1, 1, 0, 1], "sign": 1}]}', "points[0].weights[2]"),
            ('{"dimension": 8, "points": [{"weights": [1, 1, 1, 1], "sign": 0}]}', "points[0].sign"),
            ('{"dimension": 8, "points": [{"weights": [1, 1, 1, 1], "sign": 1, "x": 2}]}', "points[0]"),
            ('{"dimension": 8, "points": [], "extra": 1}', "top level"),
        ],
    )
    def test_errors_name_location(self, text, where):
        with pytest.raises(configfile.ConfigError) as exc:
            configfile.loads(text)
        assert str(exc.value).startswith(where)


class TestCheck:
    def test_standard(self, tmp_path, capsys):
        assert main(["check", write_config(tmp_path, STANDARD)]) == 0
        out = capsys.readouterr().out
        assert "p1_squared           4" in out
        assert "p2                   7" in out

    def test_json(self, tmp_path, capsys):
        assert main(["check", "--json", write_config(tmp_path, STANDARD)]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["admissible"] is True
        assert obj["pontryagin"] == {
            "unit_sum": "0",
            "p1_sum": "0",
            "p1_squared": "4",
            "p2": "7",
            "signature_candidate": "1",
        }

    def test_all_plus(self, tmp_path, capsys):
        pts = [(w, 1) for w, _ in STANDARD]
        assert main(["check", "--json", write_config(tmp_path, pts)]) == 1
        obj = json.loads(capsys.readouterr().out)
        failed = [c["name"] for c in obj["checks"] if not c["passed"]]
        assert failed[0] == "sign pattern"

    def test_malformed(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        assert main(["check", str(p)]) == 2

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "nope.json")]) == 2

    def test_wrong_dimension_is_input_error(self, tmp_path):
        assert main(["check", write_config(tmp_path, [([1, 1], 1), ([1, 1], -1)], dimension=4)]) == 2

    def test_rationals_printed_exactly(self, tmp_path, capsys):
        assert main(["check", write_config(tmp_path, [([1, 2, 3, 4], 1)])]) == 1
        assert "unit_sum             1/24" in capsys.readouterr().out


class TestHp2:
    def test_k_standard(self, capsys):
        assert main(["hp2", "--k", "0,1,3", "--family", "standard"]) == 0
        d = configfile.loads(capsys.readouterr().out)
        assert sorted(d.signs) == [-1, 1, 1]
        assert sorted(tuple(w) for w in d.weight_sets) == [(3, 3, 1, 1), (4, 2, 1, 1), (4, 3, 3, 2)]

    def test_k_semi(self, capsys):
        assert main(["hp2", "--k", "0,1,2", "--family", "semi"]) == 0
        out1 = capsys.readouterr().out
        assert main(["hp2", "--doubled", "1,3,5"]) == 0
        assert capsys.readouterr().out == out1

    def test_degenerate(self, capsys):
        assert main(["hp2", "--doubled", "0,2,2"]) == 2
        assert "0 <= d1 < d2 < d3" in capsys.readouterr().err

    def test_bad_flag_value(self):
        assert main(["hp2", "--doubled", "0,2"]) == 2

    def test_non_effective_note(self, capsys):
        assert main(["hp2", "--doubled", "2,6,10"]) == 0
        assert "(1, 3, 5)" in capsys.readouterr().err


class TestClassify:
    def test_standard(self, tmp_path, capsys):
        assert main(["classify", write_config(tmp_path, STANDARD)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "Standard, p = (0, 1, 3)"

    def test_semi(self, tmp_path, capsys):
        assert main(["classify", write_config(tmp_path, SEMI)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "SemiInteger, p = (1/2, 3/2, 5/2)"

    def test_inadmissible(self, tmp_path, capsys):
        pts = [([4, 2, 1, 1], 1), ([4, 2, 3, 3], 1), ([1, 1, 3, 3], -1)]
        assert main(["classify", write_config(tmp_path, pts)]) == 1
        assert "unit-class vanishing" in capsys.readouterr().out

    def test_violation_exit_code(self, tmp_path, monkeypatch):
        from circleweights import cli, verifier

        def boom(data):
            raise verifier.TheoremViolation("synthetic")

        monkeypatch.setattr(cli, "classify", boom)
        assert main(["classify", write_config(tmp_path, STANDARD)]) == 3

    def test_hp2_pipe_round_trip(self, tmp_path, capsys):
        for params in iter_params(24, effective_only=True):
            assert main(["hp2", "--doubled", ",".join(map(str, params.doubled))]) == 0
            path = tmp_path / "x.json"
            path.write_text(capsys.readouterr().out)
            assert main(["classify", "--json", str(path)]) == 0
            obj = json.loads(capsys.readouterr().out)
            assert tuple(obj["doubled"]) == params.doubled
            assert obj["family"] == str(params.family)


class TestSearch:
    def test_bound_three(self, capsys):
        assert main(["search", "--bound", "3", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["admissible"] >= 1
        assert obj["families"] == {"Standard": obj["admissible"], "SemiInteger": 0}
        assert obj["verified"] is True

    def test_bound_four_emit(self, tmp_path, capsys):
        emit = tmp_path / "found.json"
        assert main(["search", "--bound", "4", "--emit", str(emit)]) == 0
        assert "verification: PASS" in capsys.readouterr().out
        obj = json.loads(emit.read_text())
        assert [1, 3, 5] in [c["doubled"] for c in obj["configurations"]]
        for c in obj["configurations"]:
            configfile.parse_config({"dimension": c["dimension"], "points": c["points"]})

    def test_bound_one(self):
        assert main(["search", "--bound", "1"]) == 2

    def test_json_is_byte_stable(self, tmp_path):
        outs = []
        for i in range(2):
            emit = tmp_path / f"e{i}.json"
            r = subprocess.run(
                [sys.executable, "-m", "circleweights", "search", "--bound", "6", "--json", "--emit", str(emit)],
                capture_output=True,
                check=True,
            )
            outs.append((r.stdout, emit.read_bytes()))
        assert outs[0] == outs[1]
