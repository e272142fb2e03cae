"""End-to-end tests of the command-line interface."""

import json
import subprocess
import sys

import pytest

from brauer import Check
from brauer.cli import run

IDENT1 = '{"k": 1, "l": 1, "pairs": [[0, 1]]}'
CROSS = '{"k": 2, "l": 2, "pairs": [[0, 3], [1, 2]]}'
EBAR = '{"k": 2, "l": 2, "pairs": [[0, 1], [2, 3]]}'
CAP = '{"k": 2, "l": 0, "pairs": [[0, 1]]}'
CUP = '{"k": 0, "l": 2, "pairs": [[0, 1]]}'


def invoke(capsys, *argv):
    rc = run(list(argv))
    out = capsys.readouterr().out
    return rc, out


def invoke_json(capsys, *argv):
    rc, out = invoke(capsys, *argv)
    return rc, json.loads(out)


class TestDiagramCommands:
    def test_compose(self, capsys):
        rc, payload = invoke_json(capsys, "compose", EBAR, EBAR)
        assert rc == 0
        assert payload == {
            "loops": 1,
            "diagram": {"k": 2, "l": 2, "pairs": [[0, 1], [2, 3]]},
        }

    def test_compose_closed_loop(self, capsys):
        rc, payload = invoke_json(capsys, "compose", CAP, CUP)
        assert rc == 0
        assert payload["loops"] == 1
        assert payload["diagram"] == {"k": 0, "l": 0, "pairs": []}

    def test_tensor(self, capsys):
        rc, payload = invoke_json(capsys, "tensor", IDENT1, IDENT1)
        assert rc == 0
        assert payload == {"diagram": {"k": 2, "l": 2, "pairs": [[0, 2], [1, 3]]}}

    def test_star(self, capsys):
        rc, payload = invoke_json(capsys, "star", '{"k": 2, "l": 2, "pairs": [[0, 2], [1, 3]]}')
        assert rc == 0
        assert payload == {"diagram": {"k": 2, "l": 2, "pairs": [[0, 2], [1, 3]]}}

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(CROSS)
        rc, payload = invoke_json(capsys, "star", "@%s" % path)
        assert rc == 0
        assert payload == {"diagram": json.loads(CROSS)}

    def test_missing_file_is_user_error(self, capsys):
        rc, _ = invoke(capsys, "star", "@/nonexistent/diagram.json")
        assert rc == 2

    def test_malformed_json_is_user_error(self, capsys):
        rc, _ = invoke(capsys, "compose", "{not json", EBAR)
        assert rc == 2

    def test_valency_mismatch_is_user_error(self, capsys):
        rc, _ = invoke(capsys, "compose", IDENT1, EBAR)
        assert rc == 2


class TestWordCommands:
    def test_eval_matches_grammar(self, capsys):
        rc, payload = invoke_json(capsys, "word-eval", "--domain", "2", "0:X:0")
        assert rc == 0
        assert payload == {"delta_power": 0, "diagram": json.loads(CROSS)}

    def test_eval_records_loops(self, capsys):
        rc, payload = invoke_json(capsys, "word-eval", "--domain", "2",
                                  "0:A:0; 0:U:0; 0:A:0")
        assert rc == 0
        assert payload["delta_power"] == 1
        assert payload["diagram"] == {"k": 2, "l": 0, "pairs": [[0, 1]]}

    def test_synth_round_trip(self, capsys):
        rc, payload = invoke_json(capsys, "word-synth", CROSS)
        assert rc == 0
        assert payload["domain"] == 2
        rc2, echo = invoke_json(capsys, "word-eval", "--domain",
                                str(payload["domain"]), payload["text"])
        assert rc2 == 0
        assert echo == {"delta_power": 0, "diagram": json.loads(CROSS)}

    def test_bad_layer_text_is_user_error(self, capsys):
        rc, _ = invoke(capsys, "word-eval", "--domain", "2", "0:Q:0")
        assert rc == 2


class TestElementCommands:
    def test_sigma(self, capsys):
        rc, payload = invoke_json(capsys, "sigma", "--eps", "1", "--r", "2")
        assert rc == 0
        assert payload["ring"] == "PolynomialsInDelta"
        assert payload["delta"] == "symbolic"
        coeffs = {json.dumps(t["diagram"], sort_keys=True): t["coeff"]
                  for t in payload["terms"]}
        assert sorted(coeffs.values()) == ["-1", "1"]

    def test_sigma_numeric_delta_and_modulus(self, capsys):
        rc, payload = invoke_json(capsys, "sigma", "--eps", "-1", "--r", "2",
                                  "--delta", "-2")
        assert rc == 0
        assert payload["ring"] == "Rationals"
        assert payload["delta"] == "-2"
        rc, payload = invoke_json(capsys, "sigma", "--eps", "-1", "--r", "2",
                                  "--delta", "3", "--modulus", "5")
        assert rc == 0
        assert payload["ring"] == "PrimeField(5)"

    def test_phi_degree_one(self, capsys):
        rc, payload = invoke_json(capsys, "phi", "--n", "1")
        assert rc == 0
        assert payload["k"] == payload["l"] == 2
        assert payload["delta"] == "-2"
        assert payload["ring"] == "Rationals"
        terms = {json.dumps(t["diagram"]["pairs"]): t["coeff"]
                 for t in payload["terms"]}
        assert terms == {
            "[[0, 1], [2, 3]]": "1",
            "[[0, 2], [1, 3]]": "1",
            "[[0, 3], [1, 2]]": "1",
        }

    def test_ep(self, capsys):
        rc, payload = invoke_json(capsys, "ep", "--m", "2", "--p", "1")
        assert rc == 0
        assert payload["k"] == payload["l"] == 3
        assert payload["delta"] == "2"

    def test_dpq(self, capsys):
        rc, payload = invoke_json(capsys, "dpq", "--n", "1", "--p", "1", "--q", "0")
        assert rc == 0
        assert payload["k"] == payload["l"] == 2
        assert payload["delta"] == "-2"
        assert all(t["coeff"] == "2" for t in payload["terms"])

    def test_bad_parameters_are_user_errors(self, capsys):
        assert invoke(capsys, "phi", "--n", "0")[0] == 2
        assert invoke(capsys, "ep", "--m", "2", "--p", "5")[0] == 2
        assert invoke(capsys, "dpq", "--n", "1", "--p", "0", "--q", "1")[0] == 2


class TestFunctorCommands:
    def test_functor_matrix_identity(self, capsys):
        rc, payload = invoke_json(capsys, "functor-matrix", "--family", "o",
                                  "--m", "2", IDENT1)
        assert rc == 0
        assert payload == {
            "rows": 2, "cols": 2, "ring": "Rationals",
            "entries": [[0, 0, "1"], [1, 1, "1"]],
        }

    def test_functor_matrix_of_morphism(self, capsys):
        morphism = json.dumps({
            "k": 2, "l": 2, "ring": "Rationals", "delta": "-2",
            "terms": [{"coeff": "1", "diagram": json.loads(EBAR)}],
        })
        rc, payload = invoke_json(capsys, "functor-matrix", "--family", "sp",
                                  "--n", "1", morphism)
        assert rc == 0
        assert payload["rows"] == payload["cols"] == 4
        assert len(payload["entries"]) == 4

    def test_trace(self, capsys):
        rc, payload = invoke_json(capsys, "trace", "--family", "o", "--m", "2", IDENT1)
        assert rc == 0
        assert payload == {"agree": True, "closure_trace": "2", "matrix_trace": "2"}

    def test_trace_rejects_rectangular(self, capsys):
        rc, _ = invoke(capsys, "trace", "--family", "o", "--m", "2", CAP)
        assert rc == 2

    def test_trace_reports_disagreement(self, capsys, monkeypatch):
        import brauer.cli as cli_mod

        monkeypatch.setattr(cli_mod, "trace_check", lambda d, spec: False)
        rc, payload = invoke_json(capsys, "trace", "--family", "o", "--m", "2", IDENT1)
        assert rc == 1
        assert payload["agree"] is False

    def test_rank(self, capsys):
        rc, payload = invoke_json(capsys, "rank", "--family", "sp", "--m", "2",
                                  "--k", "2", "--l", "2")
        assert rc == 0
        assert payload == {"rank": 2, "kernel_dim": 1}

    def test_kernel_with_basis(self, capsys):
        rc, payload = invoke_json(capsys, "kernel", "--family", "sp", "--m", "2",
                                  "--k", "2", "--l", "2")
        assert rc == 0
        assert payload["dimension"] == 1
        (elt,) = payload["basis"]
        coeffs = {json.dumps(t["diagram"]["pairs"]): t["coeff"]
                  for t in elt["terms"]}
        assert coeffs == {
            "[[0, 1], [2, 3]]": "1",
            "[[0, 2], [1, 3]]": "1",
            "[[0, 3], [1, 2]]": "1",
        }

    def test_kernel_no_basis(self, capsys):
        rc, payload = invoke_json(capsys, "kernel", "--family", "o", "--m", "2",
                                  "--k", "2", "--l", "2", "--no-basis")
        assert rc == 0
        assert payload == {"dimension": 0}

    def test_modulus_guard(self, capsys):
        rc, _ = invoke(capsys, "rank", "--family", "o", "--m", "3",
                       "--modulus", "3", "--k", "1", "--l", "1")
        assert rc == 2
        rc, payload = invoke_json(capsys, "rank", "--family", "o", "--m", "3",
                                  "--modulus", "3", "--allow-small-modulus",
                                  "--k", "1", "--l", "1")
        assert rc == 0
        assert payload["rank"] == 1


class TestIdealSpan:
    def test_named_generators(self, capsys):
        rc, payload = invoke_json(capsys, "ideal-span", "--family", "sp", "--m", "2",
                                  "--gen", "phi:1", "--r", "2")
        assert rc == 0
        assert payload == {"dimension": 1}
        rc, payload = invoke_json(capsys, "ideal-span", "--family", "o", "--m", "2",
                                  "--gen", "ep:2,1", "--r", "3")
        assert rc == 0
        assert payload == {"dimension": 5}

    def test_slice(self, capsys):
        rc, payload = invoke_json(capsys, "ideal-span", "--family", "sp", "--m", "2",
                                  "--slice", "3,1")
        assert rc == 0
        assert payload == {"dimension": 1}

    def test_requires_generator_or_slice(self, capsys):
        rc, _ = invoke(capsys, "ideal-span", "--family", "sp", "--m", "2")
        assert rc == 2


class TestVerify:
    def test_relations_suite_passes(self, capsys):
        rc, payload = invoke_json(capsys, "verify", "--suite", "relations")
        assert rc == 0
        assert payload["suite"] == "relations"
        assert payload["total"] == payload["passed"] > 0
        assert all(c["pass"] for c in payload["checks"])

    def test_pau_suite_restricted(self, capsys):
        rc, payload = invoke_json(capsys, "verify", "--suite", "pau",
                                  "--family", "sp", "--m", "2")
        assert rc == 0
        assert payload["passed"] == payload["total"]

    def test_failing_check_sets_exit_code(self, capsys, monkeypatch):
        import brauer.cli as cli_mod

        monkeypatch.setattr(
            cli_mod, "run_suite",
            lambda name, **kw: [Check(case="forced", passed=False,
                                      expected="0", computed="1")])
        rc, payload = invoke_json(capsys, "verify", "--suite", "relations")
        assert rc == 1
        assert payload["passed"] == 0


class TestHarness:
    def test_text_format(self, capsys):
        rc, out = invoke(capsys, "--format", "text", "rank", "--family", "sp",
                         "--m", "2", "--k", "2", "--l", "2")
        assert rc == 0
        assert "rank: 2" in out
        assert "kernel_dim: 1" in out

    def test_argparse_errors_exit_two(self, capsys):
        assert run(["no-such-command"]) == 2
        assert run(["sigma", "--r", "2"]) == 2  # missing --eps

    def test_output_is_deterministic(self, capsys):
        _, first = invoke(capsys, "kernel", "--family", "sp", "--m", "2",
                          "--k", "2", "--l", "2")
        _, second = invoke(capsys, "kernel", "--family", "sp", "--m", "2",
                           "--k", "2", "--l", "2")
        assert first == second

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "brauer.cli", "rank", "--family", "sp",
             "--m", "2", "--k", "2", "--l", "2"],
            capture_output=True, text=True, cwd="/root/pkg")
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {"rank": 2, "kernel_dim": 1}
