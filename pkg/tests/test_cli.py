import json
import subprocess
import sys

import pytest

from pluckertree.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from pluckertree.tree import SNOWFLAKE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tree_info_json(capsys):
    code, out, _ = run(capsys, "tree-info", SNOWFLAKE)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["n"] == 6 and data["cherries"] == [[1, 2], [3, 4], [5, 6]]
    assert data["schemaVersion"] == 1 and data["seed"] == 0


def test_tree_info_text_and_file(tmp_path, capsys):
    f = tmp_path / "t.nwk"
    f.write_text("# a comment\n(((1,2),3),((4,5),6),((7,8),((9,10),((11,12),13))));\n")
    code, out, _ = run(capsys, "tree-info", str(f), "--format", "text")
    assert code == EXIT_OK
    assert "c_2 = 5" in out and "c_3 = 3" in out


def test_malformed_newick_exits_2(capsys):
    code, _, err = run(capsys, "tree-info", "((1,2),(3,4);")
    assert code == EXIT_INPUT
    assert "position" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "tree-info", "no/such/file.nwk")
    assert code == EXIT_INPUT and "no such file" in err


def test_generators(capsys):
    code, out, _ = run(capsys, "generators", SNOWFLAKE, "--secant", "2")
    data = json.loads(out)
    assert code == EXIT_OK and data["count"] == 1
    assert len(data["generators"][0]["terms"]) == 8
    code, out, _ = run(capsys, "generators", SNOWFLAKE, "--format", "text")
    assert len(out.splitlines()) == 15


def test_generators_bad_secant(capsys):
    assert run(capsys, "generators", SNOWFLAKE, "--secant", "0")[0] == EXIT_INPUT


def test_search_then_verify(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    code, _, _ = run(capsys, "draisma-search", SNOWFLAKE, "--out", str(cert))
    assert code == EXIT_OK
    data = json.loads(cert.read_text())
    assert (data["rank1"], data["rank2"]) == (7, 7)
    code, out, _ = run(capsys, "draisma-verify", str(cert))
    assert code == EXIT_OK and json.loads(out)["valid"]

    data["rank1"] = 9
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "draisma-verify", str(cert), "--format", "text")
    assert code == EXIT_FAIL and out.startswith("INVALID")


def test_verify_garbage(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "draisma-verify", str(bad))[0] == EXIT_INPUT


def test_search_failure_exit_1(capsys):
    code, _, err = run(capsys, "draisma-search", SNOWFLAKE, "--target", "18", "--max-iters", "20")
    assert code == EXIT_FAIL and "no witness" in err


def test_lift(capsys):
    code, out, _ = run(capsys, "draisma-lift", "(((1,2),7),((3,4),(5,6)));")
    # leaf 7 sits in a 3-cluster, not a cherry; bound 4n - 10 = 18
    assert code == EXIT_OK and json.loads(out)["bound"] == 18
    assert run(capsys, "draisma-lift", "((((1,2),3),4),(5,6));")[0] == EXIT_INPUT


def test_dimension(capsys):
    code, out, _ = run(capsys, "dimension", SNOWFLAKE, "--r", "2")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["jacobianDim"] == 14 and data["equalityVerdict"] == "equal"


def test_dimension_bad_prime(capsys):
    assert run(capsys, "dimension", SNOWFLAKE, "--prime", "1000003")[0] == EXIT_INPUT


def test_conjecture_sweep(capsys):
    code, out, _ = run(capsys, "conjecture-sweep", "--all-shapes", "6", "7", "--r", "2")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["disagreements"] == 0 and len(data["rows"]) == 4


def test_sweep_requires_trees(capsys):
    assert run(capsys, "conjecture-sweep")[0] == EXIT_INPUT


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "pluckertree.cli", "tree-info", SNOWFLAKE, "--format", "text"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("n = 6")


@pytest.mark.parametrize("argv", [[], ["bogus"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
