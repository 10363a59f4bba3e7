import io
import json

import pytest

from tabalg.cli import main

WORKED_POINT = {
    "coords": [
        {"column": [1], "value": "1"},
        {"column": [2], "value": "2"},
        {"column": [1, 3], "value": "9"},
        {"column": [2, 3], "value": "18"},
        {"column": [3], "value": "3"},
        {"column": [1, 2], "value": "4"},
    ]
}


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGens:
    def test_human(self, capsys, monkeypatch):
        code, out, err = run(capsys, monkeypatch, ["gens", "3", "3"])
        assert code == 0 and err == ""
        lines = out.splitlines()
        assert lines[0] == "[1]"
        assert lines[2] == "[3] F"
        assert lines[-1] == "dimension 7"
        assert sum(1 for line in lines if line.endswith(" F")) == 3

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["gens", "2", "3", "--json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["krull_dimension"] == 6
        assert obj["f_part"] == [[3], [1, 2]]

    def test_deterministic(self, capsys, monkeypatch):
        _, first, _ = run(capsys, monkeypatch, ["gens", "4", "6", "--json"])
        _, second, _ = run(capsys, monkeypatch, ["gens", "4", "6", "--json"])
        assert first == second

    def test_bad_bounds_is_domain_error(self, capsys, monkeypatch):
        code, out, err = run(capsys, monkeypatch, ["gens", "3", "2"])
        assert code == 1
        assert err.startswith("error:")


class TestStar:
    PAIR = json.dumps(
        [{"rows": [[1, 1], [2, 3], [4]]}, {"rows": [[1, 2], [2], [3]]}]
    )

    def test_worked_product(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["star"], stdin=self.PAIR)
        assert code == 0
        assert out == "1 1 1 2\n2 2 3\n3 4\n"

    def test_json_output(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["star", "--json"], stdin=self.PAIR)
        assert json.loads(out) == {"rows": [[1, 1, 1, 2], [2, 2, 3], [3, 4]]}

    def test_empty_product(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["star"], stdin="[]")
        assert code == 0
        assert out == "(empty)\n"

    def test_row_bound_enforced(self, capsys, monkeypatch):
        payload = json.dumps([{"rows": [[1], [2]]}, {"rows": [[1], [2], [3]]}])
        code, _, err = run(capsys, monkeypatch, ["star", "--n", "2"], stdin=payload)
        assert code == 1 and "error:" in err

    def test_reads_from_file(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "pair.json"
        path.write_text(self.PAIR)
        code, out, _ = run(capsys, monkeypatch, ["star", "--in", str(path)])
        assert code == 0
        assert out.startswith("1 1 1 2")

    def test_missing_file_is_usage_error(self, capsys, monkeypatch, tmp_path):
        code, _, err = run(
            capsys, monkeypatch, ["star", "--in", str(tmp_path / "nope.json")]
        )
        assert code == 2 and err.startswith("usage error:")

    def test_malformed_json_is_usage_error(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["star"], stdin="{not json")
        assert code == 2 and err.startswith("usage error:")

    def test_wrong_shape_payload(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["star"], stdin='{"rows": []}')
        assert code == 2


class TestSigma:
    def test_all_methods(self, capsys, monkeypatch):
        for method in ("double_sum", "closed", "brute"):
            code, out, _ = run(
                capsys, monkeypatch, ["sigma", "2", "3", "--method", method]
            )
            assert code == 0 and out == "1\n"

    def test_default_method(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["sigma", "2", "4"])
        assert code == 0 and out == "5\n"

    def test_unknown_method_rejected(self, capsys, monkeypatch):
        with pytest.raises(SystemExit) as info:
            main(["sigma", "2", "3", "--method", "magic"])
        assert info.value.code == 2


class TestRelations:
    def test_human(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["relations", "2", "3"])
        assert code == 0
        assert out == "[2,3] * [1] = [1,3] * [2]\ncount 1\n"

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["relations", "2", "4", "--json"])
        rels = json.loads(out)
        assert len(rels) == 5
        assert all(set(r) == {"lhs", "rhs"} for r in rels)


class TestPlucker:
    def test_human(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["plucker-counts", "2", "4"])
        assert out == "grassmann 0 1\nincidence 4\ntotal 5\n"

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["plucker-counts", "2", "3", "--json"])
        assert json.loads(out) == {"grassmann": [0, 0], "incidence": 1, "total": 1}


class TestStraighten:
    def test_basic(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["straighten", "2", "3"], stdin="[[2,3],[1]]"
        )
        assert code == 0
        assert out == "1 2\n3\n"

    def test_seeded_deterministic(self, capsys, monkeypatch):
        word = json.dumps([[2, 4], [1, 3], [1], [3, 4], [2]])
        runs = {
            run(
                capsys,
                monkeypatch,
                ["straighten", "2", "4", "--seed", str(seed), "--json"],
                stdin=word,
            )[1]
            for seed in (0, 1, 2, 0)
        }
        assert len(runs) == 1  # every order reduces to the same normal form

    def test_bad_column_is_domain_error(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, monkeypatch, ["straighten", "2", "3"], stdin="[[3,1]]"
        )
        assert code == 1 and err.startswith("error:")


class TestSpectrumCommands:
    ALPHA = json.dumps({"alpha": [["1", "2", "3"], ["1", "4", "9"]]})

    def test_psi_worked_example(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["psi", "2", "3"], stdin=self.ALPHA)
        assert code == 0
        obj = json.loads(out)
        assert [c["value"] for c in obj["coords"]] == ["1", "2", "9", "18", "3", "4"]

    def test_psi_preimage_round_trip(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["psi-preimage", "2", "3"],
            stdin=json.dumps(WORKED_POINT),
        )
        assert code == 0
        assert json.loads(out) == {"alpha": [["1", "2", "3"], ["1", "4", "9"]]}

    def test_variety_check_valid(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["variety-check", "2", "3"],
            stdin=json.dumps(WORKED_POINT),
        )
        assert code == 0 and out == "valid\n"

    def test_variety_check_invalid(self, capsys, monkeypatch):
        bad = json.loads(json.dumps(WORKED_POINT))
        bad["coords"][3]["value"] = "19"
        code, out, _ = run(
            capsys, monkeypatch, ["variety-check", "2", "3"], stdin=json.dumps(bad)
        )
        assert code == 1
        assert out.startswith("invalid: [2,3] * [1]")

    def test_eval_worked_example(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "element": [{"coeff": "1", "tableau": {"rows": [[1, 2], [3]]}}],
                "point": WORKED_POINT,
            }
        )
        code, out, _ = run(capsys, monkeypatch, ["eval", "2", "3"], stdin=payload)
        assert code == 0 and out == "18\n"

    def test_open_member_point_route(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "element": [{"coeff": "1", "tableau": {"rows": [[1, 2], [3]]}}],
                "point": WORKED_POINT,
            }
        )
        code, out, _ = run(capsys, monkeypatch, ["open-member", "2", "3"], stdin=payload)
        assert code == 0 and out == "true\n"

    def test_open_member_alpha_route(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "element": [{"coeff": "1", "tableau": {"rows": [[1]]}}],
                "alpha": [["0", "2", "3"], ["1", "4", "9"]],
            }
        )
        code, out, _ = run(capsys, monkeypatch, ["open-member", "2", "3"], stdin=payload)
        assert code == 0 and out == "false\n"

    def test_open_member_needs_exactly_one_route(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "element": [],
                "point": WORKED_POINT,
                "alpha": [["1", "2", "3"], ["1", "4", "9"]],
            }
        )
        code, _, err = run(capsys, monkeypatch, ["open-member", "2", "3"], stdin=payload)
        assert code == 2 and err.startswith("usage error:")


class TestIdealAndDivide:
    def test_ideal_member(self, capsys, monkeypatch):
        element = json.dumps([{"coeff": "1", "tableau": {"rows": [[1, 2], [2]]}}])
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["ideal-member", "2", "3", "--shape", "1,1"],
            stdin=element,
        )
        assert code == 0 and out == "true\n"

    def test_ideal_nonmember(self, capsys, monkeypatch):
        element = json.dumps([{"coeff": "1", "tableau": {"rows": [[1, 1]]}}])
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["ideal-member", "2", "3", "--shape", "1,1"],
            stdin=element,
        )
        assert code == 0 and out == "false\n"

    def test_shape_flag_required(self, capsys, monkeypatch):
        with pytest.raises(SystemExit) as info:
            main(["ideal-member", "2", "3"])
        assert info.value.code == 2

    def test_divide_quotient(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "dividend": {"rows": [[1, 1, 2], [2, 3]]},
                "divisor": {"rows": [[1, 2], [3]]},
            }
        )
        code, out, _ = run(capsys, monkeypatch, ["divide"], stdin=payload)
        assert code == 0 and out == "1\n2\n"

    def test_divide_none(self, capsys, monkeypatch):
        payload = json.dumps(
            {"dividend": {"rows": [[1]]}, "divisor": {"rows": [[2]]}}
        )
        code, out, _ = run(capsys, monkeypatch, ["divide", "--json"], stdin=payload)
        assert code == 0 and json.loads(out) == {"quotient": None}


class TestCrystalCommands:
    def test_summary(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["crystal", "3", "2,1"])
        assert code == 0
        assert out.splitlines()[0] == "vertices 8"
        assert "source 1 1 | 2" in out

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["crystal", "2", "2", "--json"])
        obj = json.loads(out)
        assert len(obj["vertices"]) == 3
        assert len(obj["edges"]) == 2

    def test_dot(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["crystal", "2", "1,1", "--dot"])
        assert code == 0 and out.startswith("digraph")

    def test_embed_check_highest(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["embed-check", "3", "2,1", "1,1", "--mode", "highest"]
        )
        assert code == 0
        assert "violations 0" in out

    def test_embed_check_lowest_json(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["embed-check", "3", "2,1", "2,1", "--mode", "lowest", "--json"],
        )
        assert code == 0
        assert json.loads(out)["violations"] == []

    def test_embed_check_generic(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["embed-check", "3", "2,1", "2,1", "--mode", "generic"],
        )
        assert code == 0
        assert out == "checked 8\ncommuting 4\nnoncommuting 4\n"

    def test_gt_forward(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["gt", "3"], stdin='{"rows": [[1, 1], [2]]}'
        )
        assert code == 0 and out == "2\n2 1\n2 1 0\n"

    def test_gt_inverse(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["gt", "3", "--inverse"],
            stdin='{"pattern": [[2], [2, 1], [2, 1, 0]]}',
        )
        assert code == 0 and out == "1 1\n2\n"

    def test_gt_round_trip_via_json(self, capsys, monkeypatch):
        _, pattern, _ = run(
            capsys, monkeypatch, ["gt", "3", "--json"], stdin='{"rows": [[1, 3], [2]]}'
        )
        code, out, _ = run(
            capsys, monkeypatch, ["gt", "3", "--inverse", "--json"], stdin=pattern
        )
        assert code == 0 and json.loads(out) == {"rows": [[1, 3], [2]]}

    def test_gt_bad_pattern_is_domain_error(self, capsys, monkeypatch):
        code, _, err = run(
            capsys,
            monkeypatch,
            ["gt", "3", "--inverse"],
            stdin='{"pattern": [[2], [1, 0], [1, 0, 0]]}',
        )
        assert code == 1 and err.startswith("error:")


class TestUsageErrors:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as info:
            main(["conjugate", "2", "3"])
        assert info.value.code == 2

    def test_no_command(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_bad_shape_string(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["crystal", "3", "2,x"])
        assert code == 2 and err.startswith("usage error:")
