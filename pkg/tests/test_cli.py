import json
import math

import pytest


class TestShuffle:
    def test_reversal(self, run_cli):
        code, out, _ = run_cli("shuffle", "--deck", 6, "--word", "V")
        assert code == 0
        assert out == "5,4,3,2,1,0\n"

    def test_show_steps_left(self, run_cli):
        code, out, _ = run_cli("shuffle", "--deck", 6, "--word", "L", "--show-steps")
        assert code == 0
        assert out == "start: 0,1,2,3,4,5\nL: 4,2,0,5,3,1\n"

    def test_show_steps_right(self, run_cli):
        _, out, _ = run_cli("shuffle", "--deck", 6, "--word", "R", "--show-steps")
        assert out == "start: 0,1,2,3,4,5\nR: 5,3,1,4,2,0\n"

    def test_multi_step_word(self, run_cli):
        _, out, _ = run_cli("shuffle", "--deck", 6, "--word", "RL'V", "--show-steps")
        lines = out.splitlines()
        assert lines[0] == "start: 0,1,2,3,4,5"
        assert lines[1].startswith("R: ")
        assert lines[2].startswith("L': ")
        assert lines[3].startswith("V: ")

    def test_empty_word(self, run_cli):
        code, out, _ = run_cli("shuffle", "--deck", 6, "--word", "")
        assert code == 0
        assert out == "0,1,2,3,4,5\n"

    def test_json(self, run_cli):
        code, out, _ = run_cli("shuffle", "--deck", 6, "--word", "V", "--format", "json")
        payload = json.loads(out)
        assert payload == {"deck": 6, "word": "V", "arrangement": [5, 4, 3, 2, 1, 0]}

    def test_json_with_steps(self, run_cli):
        _, out, _ = run_cli(
            "shuffle", "--deck", 6, "--word", "L", "--show-steps", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["steps"] == [
            {"step": "start", "arrangement": [0, 1, 2, 3, 4, 5]},
            {"step": "L", "arrangement": [4, 2, 0, 5, 3, 1]},
        ]

    def test_odd_deck_is_usage_error(self, run_cli):
        code, _, err = run_cli("shuffle", "--deck", 7, "--word", "L")
        assert code == 2
        assert "error:" in err

    def test_bad_word_is_usage_error(self, run_cli):
        code, _, err = run_cli("shuffle", "--deck", 6, "--word", "LX")
        assert code == 2
        assert "error:" in err


class TestPerm:
    def test_images_default(self, run_cli):
        code, out, _ = run_cli("perm", "--deck", 6, "--symbol", "L")
        assert code == 0
        assert out == "2,5,1,4,0,3\n"

    def test_cycles(self, run_cli):
        _, out, _ = run_cli("perm", "--deck", 6, "--symbol", "L", "--format", "cycles")
        assert out == "(0 2 1 5 3 4)\n"

    def test_inverse_symbol(self, run_cli):
        _, out, _ = run_cli("perm", "--deck", 6, "--symbol", "L'")
        assert out == "4,2,0,5,3,1\n"

    def test_out_shuffle_fixes_endpoints(self, run_cli):
        # cards 0 and 7 are fixed, so they are absent from the cycle form
        _, out, _ = run_cli("perm", "--deck", 8, "--symbol", "O", "--format", "cycles")
        assert out.strip() == "(1 2 4)(3 6 5)"

    def test_multi_letter_symbol_rejected(self, run_cli):
        code, _, err = run_cli("perm", "--deck", 6, "--symbol", "LR")
        assert code == 2
        assert "single shuffle symbol" in err


class TestOrder:
    def test_standard_deck(self, run_cli):
        assert run_cli("order", "--deck", 52, "--symbol", "L")[1] == "52\n"
        assert run_cli("order", "--deck", 52, "--symbol", "R")[1] == "8\n"

    def test_cycle_fallback_for_faros(self, run_cli):
        assert run_cli("order", "--deck", 8, "--symbol", "I")[1] == "6\n"
        assert run_cli("order", "--deck", 8, "--symbol", "V")[1] == "2\n"
        assert run_cli("order", "--deck", 52, "--symbol", "L'")[1] == "52\n"

    def test_json(self, run_cli):
        _, out, _ = run_cli("order", "--deck", 52, "--symbol", "R", "--format", "json")
        assert json.loads(out) == {"deck": 52, "symbol": "R", "order": 8}


class TestSwap:
    def test_frozen_example(self, run_cli):
        code, out, _ = run_cli("swap", "--deck", 8, "--a", 0, "--b", 5)
        assert code == 0
        assert out == (
            "RLR\n"
            "start: 0,1,2,3,4,5,6,7\n"
            "R: 7,5,3,1,6,4,2,0\n"
            "L: 2,6,3,7,0,4,1,5\n"
            "R: 5,4,7,6,1,0,3,2\n"
        )

    def test_final_state_swaps_cards(self, run_cli):
        _, out, _ = run_cli("swap", "--deck", 16, "--a", 6, "--b", 11)
        assert out.splitlines()[0] == "LRLL"
        final = [int(x) for x in out.splitlines()[-1].split(": ")[1].split(",")]
        assert final[6] == 11 and final[11] == 6

    def test_json(self, run_cli):
        _, out, _ = run_cli("swap", "--deck", 8, "--a", 0, "--b", 5, "--format", "json")
        payload = json.loads(out)
        assert payload["word"] == "RLR"
        assert len(payload["steps"]) == 4
        assert payload["steps"][-1]["arrangement"][0] == 5

    def test_non_power_of_two_rejected(self, run_cli):
        code, _, err = run_cli("swap", "--deck", 6, "--a", 0, "--b", 1)
        assert code == 2
        assert "power-of-two" in err

    def test_position_out_of_range(self, run_cli):
        code, _, _ = run_cli("swap", "--deck", 8, "--a", 0, "--b", 8)
        assert code == 2


class TestElmsley:
    def test_frozen_example(self, run_cli):
        code, out, _ = run_cli("elmsley", "--deck", 8, "--target", 5)
        assert code == 0
        assert out == "IOI\n"

    def test_target_zero_gives_empty_word(self, run_cli):
        code, out, _ = run_cli("elmsley", "--deck", 8, "--target", 0)
        assert code == 0
        assert out == "\n"

    def test_show_steps(self, run_cli):
        _, out, _ = run_cli("elmsley", "--deck", 8, "--target", 5, "--show-steps")
        lines = out.splitlines()
        assert lines[0] == "IOI"
        assert lines[1] == "start: 0,1,2,3,4,5,6,7"
        assert len(lines) == 5
        final = [int(x) for x in lines[-1].split(": ")[1].split(",")]
        assert final[5] == 0

    def test_json(self, run_cli):
        _, out, _ = run_cli("elmsley", "--deck", 8, "--target", 5, "--format", "json")
        assert json.loads(out) == {"deck": 8, "target": 5, "word": "IOI"}

    def test_works_on_non_power_decks(self, run_cli):
        code, out, _ = run_cli("elmsley", "--deck", 52, "--target", 6)
        assert code == 0
        assert out == "IIO\n"

    def test_target_out_of_range(self, run_cli):
        assert run_cli("elmsley", "--deck", 8, "--target", 8)[0] == 2


class TestGroupOrder:
    def test_default_family(self, run_cli):
        assert run_cli("group-order", "--deck", 6)[1] == "48\n"
        assert run_cli("group-order", "--deck", 6, "--gens", "IO")[1] == "24\n"

    def test_engines_agree(self, run_cli):
        for engine in ("auto", "bfs", "schreier"):
            _, out, _ = run_cli("group-order", "--deck", 12, "--engine", engine)
            assert out == "7680\n"

    def test_custom_generators(self, run_cli):
        assert run_cli("group-order", "--deck", 6, "--gens", "V")[1] == "2\n"
        # LI evaluates to V, so the groups coincide
        assert run_cli("group-order", "--deck", 6, "--gens", "LI")[1] == "2\n"

    def test_big_deck_via_chain(self, run_cli):
        _, out, _ = run_cli("group-order", "--deck", 52, "--engine", "schreier")
        assert out.strip() == str(math.factorial(26) * 2**26)

    def test_json_reports_engine(self, run_cli):
        _, out, _ = run_cli("group-order", "--deck", 6, "--format", "json")
        payload = json.loads(out)
        assert payload == {"deck": 6, "gens": "LR", "engine_used": "schreier", "order": "48"}

    def test_bfs_cap_exhaustion_is_infeasible(self, run_cli):
        code, _, err = run_cli(
            "group-order", "--deck", 20, "--engine", "bfs", "--cap", 1000
        )
        assert code == 3
        assert "error:" in err

    def test_bad_generator_list(self, run_cli):
        assert run_cli("group-order", "--deck", 6, "--gens", "L,,R")[0] == 2

    def test_unknown_engine_is_usage_error(self, run_cli):
        assert run_cli("group-order", "--deck", 6, "--engine", "magic")[0] == 2


class TestGroupPredict:
    def test_text(self, run_cli):
        code, out, _ = run_cli("group-predict", "--deck", 24)
        assert code == 0
        assert out == (
            "case: special24\n"
            "order: 194641920 (2^11*95040)\n"
            "structure: Z_2^11 : M_12\n"
        )

    def test_perfect_family(self, run_cli):
        _, out, _ = run_cli("group-predict", "--deck", 14, "--family", "perfect")
        assert "order: 322560 (7!*2^6)" in out

    def test_json(self, run_cli):
        _, out, _ = run_cli("group-predict", "--deck", 6, "--format", "json")
        payload = json.loads(out)
        assert payload["case"] == "mod3"
        assert payload["order"] == "48"
        assert payload["order_factored"] == "3!*2^3"


class TestGroupMember:
    def test_reversal_outside_perfect_group(self, run_cli):
        code, out, _ = run_cli(
            "group-member", "--deck", 6, "--gens", "IO", "--perm", "5,4,3,2,1,0"
        )
        assert code == 0
        assert out == "false\n"

    def test_reversal_inside_perfect_group_at_twelve(self, run_cli):
        _, out, _ = run_cli(
            "group-member", "--deck", 12, "--gens", "IO",
            "--perm", ",".join(str(11 - i) for i in range(12)),
        )
        assert out == "true\n"

    def test_cycle_text_input(self, run_cli):
        _, out, _ = run_cli(
            "group-member", "--deck", 6, "--perm", "(0 5)(1 4)(2 3)"
        )
        assert out == "true\n"

    def test_json(self, run_cli):
        _, out, _ = run_cli(
            "group-member", "--deck", 6, "--gens", "IO",
            "--perm", "5,4,3,2,1,0", "--format", "json",
        )
        assert json.loads(out) == {"deck": 6, "gens": "IO", "member": False}

    def test_degree_mismatch(self, run_cli):
        code, _, err = run_cli("group-member", "--deck", 6, "--perm", "1,0")
        assert code == 2
        assert "degree" in err

    def test_malformed_permutation(self, run_cli):
        assert run_cli("group-member", "--deck", 6, "--perm", "nope")[0] == 2


class TestVerify:
    def test_small_sweep(self, run_cli):
        code, out, _ = run_cli("verify", "--min", 4, "--max", 8)
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "6 records, 6 match"
        assert all("match=yes" in line for line in lines[:-1])

    def test_report_file(self, run_cli, tmp_path):
        path = tmp_path / "report.json"
        code, _, _ = run_cli("verify", "--min", 2, "--max", 10, "--out", path)
        assert code == 0
        parsed = json.loads(path.read_text())
        assert len(parsed) == 10
        assert all(entry["match"] for entry in parsed)

    def test_json_format(self, run_cli):
        _, out, _ = run_cli("verify", "--min", 6, "--max", 6, "--format", "json")
        parsed = json.loads(out)
        assert [entry["family"] for entry in parsed] == ["perfect", "unshuffle"]
        assert parsed[1]["kernel_order_computed"] == "8"

    def test_infeasible_exit_code(self, run_cli):
        code, out, _ = run_cli(
            "verify", "--min", 18, "--max", 18, "--engine", "bfs", "--cap", 1000
        )
        assert code == 3
        assert "computed=?" in out
        assert "match=NO" in out

    def test_inverted_range_rejected(self, run_cli):
        assert run_cli("verify", "--min", 10, "--max", 8)[0] == 2

    def test_empty_range_rejected(self, run_cli):
        assert run_cli("verify", "--min", 3, "--max", 3)[0] == 2


class TestUsage:
    def test_no_arguments(self, run_cli):
        assert run_cli()[0] == 2

    def test_unknown_command(self, run_cli):
        assert run_cli("bogus")[0] == 2

    def test_missing_required_flag(self, run_cli):
        assert run_cli("shuffle", "--deck", 6)[0] == 2

    def test_help_exits_zero(self, run_cli):
        assert run_cli("--help")[0] == 0
