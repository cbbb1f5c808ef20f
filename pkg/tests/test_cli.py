import json

import pytest

from kltangent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tangent_json_example(capsys):
    code, out, _ = run(capsys, "tangent", "A2", "--x", "1 2 1", "--w", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert [st["status"] for st in payload["statuses"]] == ["In", "Undetermined", "In"]
    assert sorted(w["coeffs"] for w in payload["kl_tangent_weights"]) == [[0, 1], [1, 0]]
    assert payload["complete"] is False
    assert payload["x_word"] == [1, 2, 1] and payload["w_word"] == [1]


def test_tangent_oracle_flag(capsys):
    code, out, _ = run(capsys, "tangent", "A2", "--x", "1 2 1", "--w", "1",
                       "--type-a-oracle", "--json")
    payload = json.loads(out)
    assert code == 0
    assert [st["status"] for st in payload["statuses"]] == ["In", "Out", "In"]
    assert payload["complete"] is True


def test_tangent_parabolic(capsys):
    code, out, _ = run(capsys, "tangent", "A2", "--x", "2 1", "--w", "1",
                       "--parabolic", "2", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["parabolic"] == [2]


def test_demazure_json(capsys):
    code, out, _ = run(capsys, "demazure", "A2", "1 1")
    payload = json.loads(out)
    assert code == 0
    assert payload["delta_word"] == [1] and payload["excess"] == 1


def test_kclass(capsys):
    code, out, _ = run(capsys, "kclass", "A2", "--x", "1 2 1", "--w", "1", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["kclass"] == [
        {"coeff": "-1", "exponent": [-1, -1]},
        {"coeff": "1", "exponent": [0, 0]},
    ]
    code, out, _ = run(capsys, "kclass", "A2", "--x", "1 2 1", "--w", "1")
    assert out.strip() == "1 - e^{-a1-a2}"
    # a non-reduced x word is canonicalized before the class is computed
    code, out, _ = run(capsys, "kclass", "A2", "--x", "1 1 1 2 1", "--w", "1", "--json")
    assert code == 0 and json.loads(out)["x_word"] == [1, 2, 1]


def test_subword_complex_json(capsys):
    code, out, _ = run(capsys, "subword-complex", "A2", "1 2 1", "1")
    payload = json.loads(out)
    assert code == 0
    assert payload["faces"] == [[], [1], [1, 2], [2], [2, 3], [3]]
    assert payload["facets"] == [[1, 2], [2, 3]]
    assert payload["boundary"] == [[], [1], [3]]
    assert payload["euler_reduced"] == 0 and payload["euler_interior"] == -1


def test_cominuscule(capsys):
    code, out, _ = run(capsys, "cominuscule", "D4", "--x", "2 1 3 4 2", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["cominuscule"] is False and payload["witness"] is None
    code, out, _ = run(capsys, "cominuscule", "A2", "--x", "1 2", "--json")
    payload = json.loads(out)
    assert payload["cominuscule"] is True and payload["witness"] == ["-1", "0"]


def test_json_round_trip_and_determinism(capsys):
    _, first, _ = run(capsys, "tangent", "B2", "--x", "1 2 1", "--w", "2", "--json")
    _, second, _ = run(capsys, "tangent", "B2", "--x", "1 2 1", "--w", "2", "--json")
    assert first == second  # identical invocations are bit-identical
    payload = json.loads(first)
    assert json.dumps(payload, sort_keys=True, ensure_ascii=False) == first.strip()


def test_domain_error_exit_code(capsys):
    code, out, _ = run(capsys, "tangent", "A2", "--x", "1", "--w", "1 2 1", "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "NotBelow"
    code, _, err = run(capsys, "tangent", "A2", "--x", "1", "--w", "1 2 1")
    assert code == 1 and "NotBelow" in err
    code, out, _ = run(capsys, "demazure", "Q7", "1")
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["tangent", "A2"])  # missing required --x/--w
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_verify_cli_small(capsys):
    code, out, err = run(capsys, "verify", "A2", "--random-cases", "50", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(not o["failures"] for o in payload["outcomes"])
    assert "euler-identity[A2]" in {o["suite"] for o in payload["outcomes"]}
    assert "cases" in err or err  # timing diagnostics go to stderr


def test_verify_rejects_huge_group(capsys):
    code, out, _ = run(capsys, "verify", "E8", "--json")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "GroupTooLarge"
