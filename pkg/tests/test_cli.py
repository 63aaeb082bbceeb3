import json

from starq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_json(capsys):
    code, out = run(capsys, "classify", "(1,-1,1,-1)")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "bounded"
    assert payload["type"] == "2"


def test_classify_deterministic(capsys):
    _, first = run(capsys, "classify", "(c,-c,c)")
    _, second = run(capsys, "classify", "(c,-c,c)")
    assert first == second


def test_orbit_dot(capsys):
    code, out = run(capsys, "orbit", "(0,0,0)", "--dot")
    assert code == 0
    assert out.startswith("digraph orbit {")
    assert out.count("->") == 4


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "(3,2,1)")
    assert code == 0
    assert json.loads(out)["count"] == 5


def test_family_gl_dot(capsys):
    code, out = run(capsys, "family", "(c,0,0,0)", "--gl", "--dot")
    assert code == 0
    assert "style=dashed" in out


def test_jh_table(capsys):
    code, out = run(capsys, "jh", "--n", "4", "--c", "c", "--k", "3", "--table")
    assert code == 0
    assert "(-1,-1,-1,c+3)^2" in out


def test_domain_error_exit_code(capsys):
    code, out = run(capsys, "degree", "(3,2,1)")
    assert code == 1
    assert json.loads(out)["error"]["code"] == "wrong_type"


def test_usage_error_exit_code(capsys):
    code = main(["orbit"])  # missing weight
    capsys.readouterr()
    assert code == 2


def test_fock_check(capsys):
    code, out = run(capsys, "fock-check", "--n", "3", "--samples", "5",
                    "--checks", "degree,bracket")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True


def test_selftest_subset(capsys):
    code, out = run(capsys, "selftest", "--criteria", "2,3")
    assert code == 0
    assert "criterion  2 PASS" in out
    assert "criterion  3 PASS" in out
