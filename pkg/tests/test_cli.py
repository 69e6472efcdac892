import json

import pytest

from invword.cli import main


@pytest.fixture
def bicyclic_file(tmp_path):
    path = tmp_path / "bicyclic.json"
    path.write_text(json.dumps({"alphabet": ["a"], "relations": [["a A", ""]]}))
    return str(path)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.json"
    path.write_text(
        json.dumps(
            {"vertices": ["a", "b", "c", "d"], "edges": [["a", "b"], ["b", "c"], ["c", "d"]]}
        )
    )
    return str(path)


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(
        json.dumps(
            {
                "group": {"alphabet": ["a", "z"], "relators": ["a z a Z A z A Z"]},
                "wset": ["a"],
                "stable": "t",
            }
        )
    )
    return str(path)


@pytest.fixture
def z3_file(tmp_path):
    path = tmp_path / "z3.json"
    path.write_text(
        json.dumps({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
    )
    return str(path)


class TestWordCommands:
    def test_reduce(self, capsys):
        assert main(["reduce", "a A z"]) == 0
        assert capsys.readouterr().out.strip() == "z"

    def test_inv(self, capsys):
        assert main(["inv", "a z"]) == 0
        assert capsys.readouterr().out.strip() == "Z A"

    def test_prefixes(self, capsys):
        assert main(["prefixes", "a b"]) == 0
        assert capsys.readouterr().out.splitlines() == ["1", "a", "a b"]

    def test_json_mode(self, capsys):
        assert main(["reduce", "a A z", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == [{"name": "z", "sign": 1}]

    def test_parse_error_exit_2(self, capsys):
        assert main(["reduce", "b", "--alphabet", "a,z"]) == 2
        assert "error" in capsys.readouterr().err


class TestFimCommands:
    def test_equal(self, capsys):
        assert main(["fim-eq", "a A a", "a"]) == 0
        assert capsys.readouterr().out.strip() == "equal"

    def test_not_equal(self, capsys):
        assert main(["fim-eq", "a A", "A a"]) == 1
        assert capsys.readouterr().out.strip() == "not-equal"

    def test_munn_dot(self, tmp_path, capsys):
        out = tmp_path / "tree.dot"
        assert main(["munn", "a A z", "--dot", str(out)]) == 0
        assert "vertices=3" in capsys.readouterr().out
        assert out.read_text().startswith("digraph")


class TestStephenCommands:
    def test_equal_exit_0(self, bicyclic_file, capsys):
        assert main(["stephen", bicyclic_file, "a A", "", "--rounds", "3", "--vertices", "1000"]) == 0
        assert capsys.readouterr().out.strip() == "equal"

    def test_unknown_exit_1(self, bicyclic_file, capsys):
        assert main(["stephen", bicyclic_file, "A a", "", "--rounds", "6", "--vertices", "500"]) == 1
        assert capsys.readouterr().out.strip() == "unknown"

    def test_trace_file(self, bicyclic_file, tmp_path):
        trace = tmp_path / "trace.json"
        main(["stephen", bicyclic_file, "a A", "", "--rounds", "3", "--vertices", "1000", "--trace", str(trace)])
        data = json.loads(trace.read_text())
        assert data[0]["round"] == 0

    def test_env_budget(self, bicyclic_file, capsys, monkeypatch):
        monkeypatch.setenv("INVWORD_BUDGET", "3:1000")
        assert main(["stephen", bicyclic_file, "a A", ""]) == 0

    def test_config_file(self, bicyclic_file, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"budget": "3:1000", "format": "json"}))
        assert main(["stephen", bicyclic_file, "a A", "", "--config", str(cfg)]) == 0
        assert json.loads(capsys.readouterr().out) == {"verdict": "equal"}

    def test_right_inv(self, bicyclic_file, capsys):
        assert main(["right-inv", bicyclic_file, "a", "--rounds", "5", "--vertices", "1000"]) == 0
        assert capsys.readouterr().out.strip() == "yes"

    def test_prefix_gens(self, bicyclic_file, capsys):
        assert main(["prefix-gens", bicyclic_file]) == 0
        assert capsys.readouterr().out.splitlines() == ["a", "a A"]


class TestRaagCommands:
    def test_nf(self, p4_file, capsys):
        assert main(["raag-nf", p4_file, "b a"]) == 0
        assert capsys.readouterr().out.strip() == "a b"

    def test_eq(self, p4_file, capsys):
        assert main(["raag-eq", p4_file, "a b", "b a"]) == 0
        assert main(["raag-eq", p4_file, "a d", "d a"]) == 1

    def test_parabolic_present(self, p4_file, capsys):
        assert main(["parabolic", p4_file, "d D a", "--delta", "a,b,c"]) == 0
        assert capsys.readouterr().out.strip() == "a"

    def test_parabolic_absent(self, p4_file, capsys):
        assert main(["parabolic", p4_file, "d", "--delta", "a,b,c"]) == 1
        assert capsys.readouterr().out.strip() == "absent"


class TestHnnCommands:
    def test_hnn_wp(self, capsys):
        assert main(["hnn-wp", "t a T t A T"]) == 0
        assert main(["hnn-wp", "t d T"]) == 1

    def test_theta(self, capsys):
        assert main(["theta", "b"]) == 0
        assert capsys.readouterr().out.strip() == "t a T"

    def test_one_relator(self, capsys):
        assert main(["one-relator-wp", "a z a Z A z A Z"]) == 0
        assert main(["one-relator-wp", "a"]) == 1


class TestAlgebraCommands:
    def test_fp_mul(self, z3_file, capsys):
        code = main(
            ["fp-mul", '[["t",1],["h",1],["t",-1]]', '[["t",1],["h",2],["t",-1]]',
             "--table", z3_file]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_key_claim(self, z3_file, capsys):
        assert main(["key-claim", "--table", z3_file, "--w", "1", "--h", "2"]) == 0
        assert "agree: True" in capsys.readouterr().out


class TestConstructCommands:
    def test_construct_writes_file(self, tmp_path, capsys):
        group = tmp_path / "group.json"
        group.write_text(json.dumps({"alphabet": ["a", "z"], "relators": ["a z a Z A z A Z"]}))
        wset = tmp_path / "wset.json"
        wset.write_text(json.dumps(["a"]))
        out = tmp_path / "compiled.json"
        assert main(["construct", str(group), str(wset), "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert "presentation" in data and "instance" in data

    def test_member_query_positive(self, instance_file, capsys):
        assert main(["member-query", instance_file, "a a a", "--budget", "6:200000"]) == 0
        assert "right-invertible: yes" in capsys.readouterr().out

    def test_member_query_negative(self, instance_file, capsys):
        assert main(["member-query", instance_file, "A", "--budget", "8:5000"]) == 1
        assert "unknown" in capsys.readouterr().out

    def test_member_query_bundle_only(self, instance_file, tmp_path, capsys):
        out = tmp_path / "bundle.json"
        assert main(["member-query", instance_file, "a", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["probe"] == "t a T"

    def test_certify(self, instance_file, capsys):
        assert main(["certify", instance_file, "a a a", "--factorization", "1,1,1"]) == 0
        assert main(["certify", instance_file, "A", "--factorization", "1"]) == 1

    def test_missing_file_exit_2(self, capsys):
        assert main(["stephen", "/nonexistent.json", "a", "b"]) == 2


class TestSuiteCommand:
    def test_single_quick_criterion(self, capsys):
        assert main(["suite", "--criteria", "5", "--scale", "quick"]) == 0
        out = capsys.readouterr().out
        assert "CRITERION  5: PASS" in out

    def test_writes_results(self, tmp_path):
        out = tmp_path / "suite"
        assert main(["suite", "--criteria", "5", "--scale", "quick", "--out", str(out)]) == 0
        results = json.loads((out / "results.json").read_text())
        assert results["criteria"][0]["number"] == 5
        assert (out / "artifacts" / "results.json").exists()
