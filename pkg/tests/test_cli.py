import io
import json

import pytest

from conftest import k4_with_crossing
from oneplanar.builder import optimal_fixture
from oneplanar.cli import run
from oneplanar.fileformat import serialize_drawing, write_drawing


def structured(*argv):
    out = io.StringIO()
    argv = list(argv)
    argv.insert(1, "--format")
    argv.insert(2, "structured")
    status = run(argv, out)
    return status, json.loads(out.getvalue())


@pytest.fixture
def files(tmp_path):
    k4 = tmp_path / "k4.g"
    write_drawing(k4_with_crossing(), k4)
    cube = tmp_path / "cube-optimal.g"
    write_drawing(optimal_fixture("cube"), cube)
    return {"k4": str(k4), "cube": str(cube), "dir": tmp_path}


def test_check_extendable(files):
    status, rep = structured("check-extendable", "--n", "1", files["k4"])
    assert status == 0 and rep["result"]["extendable"] is True
    status, rep = structured("check-extendable", "--n", "3", files["cube"])
    assert status == 1 and len(rep["result"]["witness"]) == 3
    assert rep["command"] == "check-extendable"
    assert len(rep["input_digest"]) == 64


def test_audit_discharge(files):
    status, rep = structured("audit-discharge", files["cube"])
    assert status == 0
    assert rep["result"]["initial_total"] == rep["result"]["final_total"] == "-20"


def test_reports_are_deterministic(files):
    _, a = structured("stats", files["cube"])
    _, b = structured("stats", files["cube"])
    a.pop("timing_seconds"), b.pop("timing_seconds")
    assert a == b


def test_text_output(files):
    out = io.StringIO()
    assert run(["validate", files["cube"]], out) == 0
    assert "valid: true" in out.getvalue()


def test_other_commands(files):
    assert structured("validate", files["k4"])[0] == 0
    assert structured("check-critical", "--k", "4", files["cube"])[0] == 0
    status, rep = structured("check-critical", "--k", "2", files["k4"])
    assert status == 0
    status, rep = structured("count-pm", files["cube"])
    assert status == 0 and rep["result"]["perfect_matchings"] == 60
    status, rep = structured("find-barrier-cycles", "--max-len", "6", files["cube"])
    assert status == 0 and rep["result"]["count"] == 4
    assert structured("find-barrier-cycles", "--max-len", "4", files["cube"])[0] == 1
    status, rep = structured("witness-3ext", files["cube"])
    assert status == 0 and rep["result"]["residual_has_perfect_matching"] is False
    edges = [str(e) for e in rep["result"]["matching"]]
    status, rep = structured("classify-3matching", "--edges", *edges, files["cube"])
    assert status == 1 and rep["result"]["classification"] == "blocked_by_barrier"
    status, rep = structured("certify-non5ext", files["cube"])
    assert status == 0 and rep["result"]["kind"] == "order_bound"
    status, rep = structured("certify-non5ext", "--no-bounds", files["cube"])
    assert status == 0 and rep["result"]["kind"] == "dean"


def test_build_optimal(files):
    target = files["dir"] / "pdw4.g"
    status, rep = structured("build-optimal", "--generator", "pdw:4", "-o", str(target))
    assert status == 0 and rep["result"]["edges"] == 32
    assert target.read_text() == serialize_drawing(optimal_fixture("pseudo_double_wheel", 4))
    quad = files["dir"] / "quad.g"
    quad.write_text("graph 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n")
    status, rep = structured("build-optimal", "--from", str(quad))
    assert status == 2 and rep["result"]["error"] == "NotThreeConnected"


def test_errors_and_limits(files):
    bad = files["dir"] / "bad.g"
    bad.write_text("graph 3\ne 0 5\n")
    status, rep = structured("stats", str(bad))
    assert status == 2 and rep["result"]["error"] == "ParseError"
    assert structured("stats", str(files["dir"] / "missing.g"))[0] == 2
    assert structured("count-pm", "--max-nodes", "2", files["cube"])[0] == 3
    assert structured("find-barrier-cycles", "--max-len", "6", "--max-cycles", "2", files["cube"])[0] == 3
    assert run(["no-such-command"], io.StringIO()) == 2
    assert structured("check-extendable", "--n", "3", files["k4"])[0] == 2


def test_parallel_jobs_agree(files):
    _, one = structured("check-extendable", "--n", "3", files["cube"])
    _, many = structured("check-extendable", "--n", "3", "--jobs", "2", files["cube"])
    assert one["result"]["witness"] == many["result"]["witness"]
