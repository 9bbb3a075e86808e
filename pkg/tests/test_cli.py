import json

from quotient_forge import emit
from quotient_forge.cli import run
from quotient_forge.cyclic import validate_group
from quotient_forge.special import build_special_quiver
from quotient_forge.verify import k_theory_shadow


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_resolve_text(capsys):
    code, out = capture(capsys, ["resolve", "--r", "7", "--a", "2"])
    assert code == 0
    assert "ray pairs (beta, alpha): (7,0) (4,1) (1,2) (0,7)" in out
    assert "self-intersections: -2 -4" in out


def test_resolve_trivial(capsys):
    code, out = capture(capsys, ["resolve", "--r", "1", "--a", "0"])
    assert code == 0
    assert "exceptional curves: 0" in out


def test_invalid_group_exits_2(capsys):
    assert run(["resolve", "--r", "6", "--a", "2"]) == 2
    assert run(["resolve", "--r", "5", "--a", "7"]) == 2
    assert run(["sweep", "--max", "1"]) == 2


def test_unknown_flags_exit_2():
    assert run(["resolve", "--r", "7"]) == 2
    assert run(["bogus"]) == 2


def test_invariants(capsys):
    code, out = capture(capsys, ["invariants", "--r", "21", "--a", "13"])
    assert code == 0
    assert out.split() == ["x^21", "x^8y", "x^3y^3", "xy^8", "y^21"]


def test_specials_json(capsys):
    code, out = capture(capsys, ["specials", "--r", "21", "--a", "13", "--format", "json"])
    assert code == 0
    payload = emit.parse_json(out)
    assert payload["section_weights"] == [1, 2, 5, 13]
    assert payload["special_vertices"] == [20, 19, 16, 8]


def test_quiver_dot_shape(capsys):
    code, out = capture(capsys, ["quiver", "--r", "7", "--a", "2", "--format", "dot"])
    assert code == 0
    assert out.count("->") == 8
    assert out.count("shape=") == 3
    code, out = capture(capsys, ["mckay", "--r", "7", "--a", "2", "--format", "dot"])
    assert code == 0
    assert out.count("->") == 14
    assert out.count("shape=") == 7
    code, out = capture(capsys, ["quiver", "--r", "1", "--a", "0", "--format", "dot"])
    assert code == 0
    assert out.count("->") == 2 and "v0 -> v0" in out


def test_ideals_cas_matches_worked_example(capsys):
    code, out = capture(capsys, ["ideals", "--r", "7", "--a", "2", "--format", "cas"])
    assert code == 0
    assert "R = QQ[y1..y8];" in out
    assert "BQ = ideal(y4*y6, y1*y6, y1*y3);" in out
    assert "J = ideal(" in out and "IQ = ideal(" in out
    assert "saturate(J, BQ) == saturate(IQ, BQ)" in out


def test_verify_exit_zero(capsys):
    code, out = capture(capsys, ["verify", "--r", "7", "--a", "2"])
    assert code == 0
    assert "overall: pass" in out


def test_sweep_text(capsys):
    code, out = capture(capsys, ["sweep", "--max", "6"])
    assert code == 0
    assert "overall: pass" in out


def test_sweep_json(capsys):
    code, out = capture(capsys, ["sweep", "--max", "5", "--format", "json", "--seed", "3"])
    assert code == 0
    payload = emit.parse_json(out)
    assert payload["ok"] is True
    assert all(g["ok"] for g in payload["groups"])


def test_verify_trivial_group(capsys):
    code, out = capture(capsys, ["verify", "--r", "1", "--a", "0"])
    assert code == 0
    assert "degenerate" in out


def test_json_round_trip(capsys):
    for argv in (
        ["resolve", "--r", "21", "--a", "13", "--format", "json"],
        ["quiver", "--r", "7", "--a", "2", "--format", "json"],
        ["ideals", "--r", "5", "--a", "2", "--format", "json"],
        ["mckay", "--r", "5", "--a", "3", "--format", "json"],
    ):
        code, out = capture(capsys, argv)
        assert code == 0
        assert emit.parse_json(out) == json.loads(out)  # no big ints at this scale
        assert emit.parse_json(emit.to_json(emit.parse_json(out))) == emit.parse_json(out)


def test_big_integer_encoding():
    payload = {"value": 2**80, "small": 7, "list": [2**60, -(2**90)]}
    text = emit.to_json(payload)
    raw = json.loads(text)
    assert isinstance(raw["value"], str) and isinstance(raw["small"], int)
    assert emit.parse_json(text) == payload


def test_emitters_are_deterministic(capsys):
    outs = set()
    for _ in range(3):
        _, out = capture(capsys, ["ideals", "--r", "7", "--a", "2", "--format", "json"])
        outs.add(out)
    assert len(outs) == 1
    sq = build_special_quiver(validate_group(7, 2))
    assert emit.to_dot(sq.quiver) == emit.to_dot(sq.quiver)


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run(["verify", "--r", "2", "--a", "1", "--format", "json", "--out", str(target)])
    assert code == 0
    payload = emit.parse_json(target.read_text())
    assert payload["report"]["ok"] is True


def test_report_payload_shape():
    rep = k_theory_shadow(validate_group(7, 2))
    payload = emit.report_payload(rep)
    assert payload["ok"] is True
    assert {c["name"] for c in payload["claims"]} == {"vertex_count", "degree_matrix_identity"}


def test_cox_str():
    assert emit.cox_str((0, 0)) == "1"
    assert emit.cox_str((1, 0, 2)) == "x0x2^2"
    assert emit.var_monomial_str((1, 0, 2)) == "y1*y3^2"
    assert emit.var_monomial_str((0, 0)) == "1"
