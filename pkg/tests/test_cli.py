import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from importlib import resources

import jsonschema
import pytest

from fusscat import cli
from fusscat.verify import CheckResult


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_examples():
    assert call("count", "ncp", "-p", "6", "-n", "2") == (0, "6\n", "")
    assert call("count", "chains", "-n", "2", "-m", "5")[1] == "6\n"
    assert call("count", "double", "-q", "1", "-n", "3")[1] == "5\n"
    assert call("count", "mtuple", "-m", "3", "-p", "2", "-n", "2")[1] == "6\n"
    assert call("count", "multiple", "-p", "2", "-n", "2")[1] == "3\n"
    assert call("count", "nc", "-n", "0")[1] == "1\n"


def test_triangle():
    code, out, _ = call("triangle", "-p", "3", "-n", "2")
    assert code == 0
    assert out.splitlines() == ["1", "0 1", "0 2 1"]


FAMILY_ARGS = [
    ("nc", "-n", "5"),
    ("ncp", "-p", "2", "-n", "4"),
    ("multiple", "-p", "2", "-n", "3"),
    ("chains", "-n", "4", "-m", "2"),
    ("double", "-q", "2", "-n", "2"),
    ("mtuple", "-m", "2", "-p", "1", "-n", "4"),
]


@pytest.mark.parametrize("args", FAMILY_ARGS)
def test_count_matches_enumerate(args):
    total = int(call("count", *args)[1])
    lines = call("enumerate", *args)[1].splitlines()
    assert len(lines) == total == len(set(lines))
    assert call("enumerate", *args) == call("enumerate", *args)


@pytest.mark.parametrize("args", FAMILY_ARGS)
def test_json_lines_match_schema(args):
    schema = json.loads(resources.files("fusscat").joinpath("schema/records.schema.json").read_text())
    code, out, _ = call("enumerate", *args, "--format", "json-lines")
    assert code == 0
    lines = out.splitlines()
    assert lines
    for line in lines:
        record = json.loads(line)
        jsonschema.validate(record, schema)
        assert record["family"] == args[0]


def test_json_lines_content():
    out = call("enumerate", "ncp", "-p", "2", "-n", "2", "--format", "json-lines")[1]
    assert [json.loads(x) for x in out.splitlines()] == [
        {"n": 4, "blocks": [[1, 2], [3, 4]], "family": "ncp"},
        {"n": 4, "blocks": [[1, 4], [2, 3]], "family": "ncp"},
    ]


def test_json_lines_chain_record():
    out = call("enumerate", "chains", "-n", "2", "-m", "2", "--format", "json-lines")[1]
    records = [json.loads(x) for x in out.splitlines()]
    assert records[0] == {"n": 2, "blocks": [[1], [2]], "family": "chains", "parts": [[[1], [2]], [[1], [2]]]}
    assert all(r["blocks"] == r["parts"][0] for r in records)


def test_biject_split_and_merge():
    code, out, _ = call("biject", "--direction", "split", stdin="1,2,7,12/3,4,5,6/8,9,10,11\n")
    assert (code, out) == (0, "1,4/2,3/5,6;1,4,5,6/2,3\n")
    code, out, _ = call("biject", "--direction", "merge", "-q", "2", stdin=out)
    assert out == "1,2,7,12/3,4,5,6/8,9,10,11\n"


def test_biject_other_directions():
    assert call("biject", "--direction", "unfold", "-m", "2", stdin="1,4/2,3\n")[1] == "1/2;1,2\n"
    assert call("biject", "--direction", "fold", "-m", "2", "-p", "1", stdin="1/2;1,2\n")[1] == "1,4/2,3\n"
    assert call("biject", "--direction", "mult2tuple", "-p", "2", stdin="1,2,3,4\n")[1] == "1,2;1,2\n"
    assert call("biject", "--direction", "tuple2mult", "-p", "2", stdin="1,2;1,2\n\n")[1] == "1,2,3,4\n"


def test_tree_commands():
    assert call("tree", "--to-tree", "-p", "3", stdin="1,2,3/4,5,6\n")[1] == "(**(***))\n"
    assert call("tree", "--to-partition", stdin="(**(***))\n")[1] == "1,2,3/4,5,6\n"
    outline = call("tree", "--outline", stdin="(**(***))\n")[1]
    assert outline.splitlines()[0].startswith("1")


def test_render_text_and_svg():
    code, out, _ = call("render", "1,4/2,3/5,6;1,4,5,6/2,3")
    assert code == 0 and "tie B1-B3 level 2" in out
    code, out, _ = call("render", "--format", "svg", "--comb", "3", stdin="1,2,3/4,5,6\n")
    assert code == 0
    root = ET.fromstring(out)
    assert root.tag.endswith("svg")
    code, _, err = call("render", "--format", "svg", "--comb", "4", "1,2,3/4,5,6")
    assert code == 1 and "comb" in err


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["count", "ncp", "-n", "2"], ""),
        (["count", "nc", "-n", "2", "-p", "2"], ""),
        (["count", "ncp", "-p", "0", "-n", "2"], ""),
        (["triangle", "-p", "0", "-n", "2"], ""),
        (["biject", "--direction", "split"], "1,3/2,4\n"),
        (["biject", "--direction", "merge"], "1/2;1,2\n"),
        (["tree", "--to-tree", "-p", "2"], "1,2,3\n"),
        (["tree", "--to-partition"], "(**\n"),
        (["render"], "1,1\n"),
    ],
)
def test_bad_input_exits_one(argv, stdin):
    code, out, err = call(*argv, stdin=stdin)
    assert code == 1 and err.startswith("fusscat:")


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as info:
        call("count", "bogus")
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        call()
    assert info.value.code == 1


def test_verify_small_passes():
    code, out, _ = call("verify", "--max-points", "0")
    assert code == 0
    assert "FAIL" not in out and "\033[" not in out
    assert out.splitlines()[-1].endswith("checks passed")


def test_verify_failure_exits_two(monkeypatch):
    broken = [CheckResult("1", "broken", 1, 2, 0.0), CheckResult("2", "fine", 3, 3, 0.0)]
    monkeypatch.setattr(cli, "verify_all", lambda max_points: broken)
    code, out, _ = call("verify")
    assert code == 2
    assert out.splitlines()[-1] == "1/2 checks passed"


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "fusscat", "count", "nc", "-n", "4"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "14\n"
