"""End-to-end command-line behavior via in-process dispatch."""

import json

from siegelalg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDims:
    def test_d6_json(self, capsys):
        code, out, err = run_cli(
            capsys, "dims", "--domain", "d6", "--v", "1,1,0", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["dims"]["total"] == 10
        assert doc["dims"]["g_1"] == 1
        assert doc["s"] == 1

    def test_ball_table(self, capsys):
        code, out, _ = run_cli(capsys, "dims", "--domain", "ball", "--n", "3")
        assert code == 0
        assert "total=15" in out

    def test_emit_bases_gated(self, capsys):
        code, out, _ = run_cli(
            capsys, "dims", "--domain", "d6", "--v", "1,1,0", "--format", "json"
        )
        assert "bases" not in json.loads(out)
        code, out, _ = run_cli(
            capsys,
            "dims", "--domain", "d6", "--v", "1,1,0", "--format", "json", "--emit-bases",
        )
        doc = json.loads(out)
        assert len(doc["bases"]["g_1"]) == 1
        assert doc["bases"]["g_1"][0]["b"] == [[[{"re": "0", "im": "0"}]] * 3]

    def test_table_and_json_agree(self, capsys):
        _, table_out, _ = run_cli(capsys, "dims", "--domain", "t3")
        _, json_out, _ = run_cli(capsys, "dims", "--domain", "t3", "--format", "json")
        doc = json.loads(json_out)
        assert f"total={doc['dims']['total']}" in table_out

    def test_bad_domain(self, capsys):
        code, _, err = run_cli(capsys, "dims", "--domain", "d9")
        assert code == 2
        assert "error" in err

    def test_missing_parameters(self, capsys):
        code, _, err = run_cli(capsys, "dims", "--domain", "d6")
        assert code == 2
        assert "--v" in err


class TestSpecFile:
    def test_roundtrip_custom_document(self, capsys, tmp_path):
        doc = {
            "n": 4,
            "k": 3,
            "cone": "omega3",
            "H": [[["1"]], [["1"]], [["0"]]],
        }
        path = tmp_path / "domain.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "dims", "--spec", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["dims"]["total"] == 10

    def test_incompatible_family_rejected_with_witness(self, capsys, tmp_path):
        doc = {
            "n": 4,
            "k": 2,
            "cone": "omega1",
            "H": [
                [["1", "0"], ["0", "-1"]],
                [["1", "0"], ["0", "1"]],
            ],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run_cli(capsys, "dims", "--spec", str(path))
        assert code == 2
        assert "w = (" in err

    def test_k_exceeding_n(self, capsys, tmp_path):
        doc = {"n": 2, "k": 3, "cone": "omega2", "H": [[], [], []]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run_cli(capsys, "dims", "--spec", str(path))
        assert code == 2

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "dims", "--spec", str(path))
        assert code == 2
        assert "JSON" in err


class TestHomogeneity:
    def test_not_transitive_exit_code(self, capsys):
        code, out, _ = run_cli(
            capsys, "homogeneity", "--domain", "d2", "--n", "4", "--format", "json"
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["verdict"] == "not-transitive"
        assert doc["a_part_dim"] == 1

    def test_open_orbits_exit_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "homogeneity", "--domain", "d6", "--v", "1,1,0", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "generically-open-orbits"


class TestBounds:
    def test_chain_json(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "bounds", "--n", "4", "--k", "3", "--s", "1", "--dim-g-omega", "4",
            "--g-one", "3", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["component_bound"] == "13"

    def test_sweep_table(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--sweep", "6")
        assert code == 0
        assert "margin" in out

    def test_sweep_json_margins_negative(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--sweep", "8", "--format", "json")
        assert code == 0
        margins = json.loads(out)["margins"]
        assert all(m["margin"].startswith("-") for m in margins)

    def test_missing_arguments(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--n", "4")
        assert code == 2


class TestConeInfo:
    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "cone-info", "--cone", "omega6", "--format", "json")
        doc = json.loads(out)
        assert doc["dim_g"] == 7
        assert doc["isotropy_bound"] == "7"

    def test_emit_bases(self, capsys):
        code, out, _ = run_cli(
            capsys, "cone-info", "--cone", "omega1", "--format", "json", "--emit-bases"
        )
        doc = json.loads(out)
        assert doc["g_basis"] == [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]]


class TestClassify:
    def test_table_contains_survivor(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "4")
        assert code == 0
        assert "B2xB1xB1" in out
        assert "14" in out

    def test_json_structure(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "3", "--format", "json")
        doc = json.loads(out)
        assert doc["target"] == 7
        totals = {e["label"]: e["total"] for e in doc["homogeneous"]}
        assert totals == {"B3": 15, "B2xB1": 11, "B1xB1xB1": 9, "T3": 10}

    def test_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--n", "9")
        assert code == 2


class TestVerifyPaper:
    def test_all_pass_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["failed"] == 0
        assert all(c["status"] == "pass" for c in doc["checks"])
