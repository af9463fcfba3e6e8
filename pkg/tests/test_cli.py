"""Command-line behavior: output lines, JSON mode, exit codes, artifacts."""

import json

import pytest

from ordered_ramsey.board import import_transcript
from ordered_ramsey.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestMatch:
    def test_blue_wins_in_three(self, capsys):
        code, out, _ = run(capsys, "match", "--red", "path:2", "--blue", "clique:3",
                           "--builder", "clique", "--painter", "all-blue")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "blue wins in 3"

    def test_cycle_biclique_within_twenty(self, capsys):
        code, out, _ = run(capsys, "match", "--red", "cycle:3",
                           "--blue", "biclique:2,2",
                           "--builder", "cycle-biclique", "--painter", "all-red")
        assert code == EXIT_OK
        turns = int(out.split(" wins in ")[1].split()[0])
        assert turns <= 20

    def test_seeded_random_turn_one(self, capsys):
        code, out, _ = run(capsys, "match", "--red", "path:2", "--blue", "path:2",
                           "--builder", "clique", "--painter", "random",
                           "--seed", "7")
        assert code == EXIT_OK and " wins in 1" in out

    def test_bound_lines_printed(self, capsys):
        _, out, _ = run(capsys, "match", "--red", "path:3", "--blue", "clique:3",
                        "--builder", "clique", "--painter", "degree-threshold")
        assert any("bound " in line for line in out.splitlines()[1:])

    def test_cap_exit_code(self, capsys):
        code, out, _ = run(capsys, "match", "--red", "clique:3", "--blue", "clique:3",
                           "--builder", "random", "--painter", "random",
                           "--seed", "1", "--cap", "2")
        assert code == EXIT_CAP and "turn cap 2 reached" in out

    def test_out_writes_importable_transcript(self, capsys, tmp_path):
        dest = tmp_path / "t.json"
        code, _, _ = run(capsys, "match", "--red", "path:2", "--blue", "clique:3",
                         "--builder", "clique", "--painter", "all-blue",
                         "--out", str(dest))
        assert code == EXIT_OK
        t = import_transcript(dest.read_bytes())
        assert t.winner == "b" and t.turns == 3

    def test_json_mode(self, capsys):
        _, out, _ = run(capsys, "match", "--red", "path:2", "--blue", "clique:3",
                        "--builder", "clique", "--painter", "all-blue", "--json")
        doc = json.loads(out)
        assert doc["transcript"]["winner"] == "b"
        assert doc["bounds"]

    def test_reproducible_from_printed_seed(self, capsys):
        argv = ("match", "--red", "path:3", "--blue", "clique:3",
                "--builder", "random", "--painter", "random",
                "--seed", "13", "--json")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


class TestSolve:
    def test_p2_p2(self, capsys):
        code, out, _ = run(capsys, "solve", "--red", "path:2", "--blue", "path:2",
                           "--board", "2")
        assert code == EXIT_OK and out.startswith("value = 1 ")

    def test_p2_k3(self, capsys):
        _, out, _ = run(capsys, "solve", "--red", "path:2", "--blue", "clique:3",
                        "--board", "3", "--json")
        doc = json.loads(out)
        assert doc["value"] == 3 and len(doc["principal_variation"]) == 3

    def test_p3_p3_frozen(self, capsys):
        _, out, _ = run(capsys, "solve", "--red", "path:3", "--blue", "path:3",
                        "--board", "5", "--json")
        assert json.loads(out)["value"] == 4

    def test_unsolvable_board_prints_unbounded(self, capsys):
        _, out, _ = run(capsys, "solve", "--red", "path:3", "--blue", "path:3",
                        "--board", "3")
        assert out.startswith("value = unbounded")

    def test_budget_exhaustion_nonzero(self, capsys):
        code, _, err = run(capsys, "solve", "--red", "clique:3", "--blue", "clique:3",
                           "--board", "5", "--budget", "5")
        assert code == 1 and "error" in err


class TestBounds:
    def test_star_pair_lower(self, capsys):
        _, out, _ = run(capsys, "bounds", "--red", "star:3,3", "--blue", "star:3,3",
                        "--json")
        doc = json.loads(out)
        lower = next(b for b in doc["bounds"] if b["name"] == "degree-threshold-lower")
        assert lower["value"] == [3, 2] and lower["integer_view"] == 2

    def test_star_pair_includes_reference_pair(self, capsys):
        _, out, _ = run(capsys, "bounds", "--red", "star:3,3", "--blue", "star:3,3",
                        "--json")
        names = [b["name"] for b in json.loads(out)["bounds"]]
        assert "sym-star-upper" in names and "sym-star-offline-lower" in names

    def test_human_lines(self, capsys):
        _, out, _ = run(capsys, "bounds", "--red", "path:3", "--blue", "clique:3")
        assert "leaf-recurrence-upper" in out


class TestRamsey:
    def test_p3_p3(self, capsys):
        code, out, _ = run(capsys, "ramsey", "--red", "path:3", "--blue", "path:3",
                           "--max-board", "6")
        assert code == EXIT_OK and out.strip() == "5"

    def test_not_found(self, capsys):
        code, _, err = run(capsys, "ramsey", "--red", "clique:3",
                           "--blue", "clique:3", "--max-board", "4")
        assert code == 1 and "not found" in err


class TestCompile:
    def test_p2_k3_compiles_to_three(self, capsys):
        code, out, _ = run(capsys, "compile", "--red", "path:2", "--blue", "clique:3",
                           "--builder", "clique")
        assert code == EXIT_OK and out.startswith("N = 3 ")
        assert "compiled replay verified" in out

    def test_tree_artifact(self, capsys, tmp_path):
        dest = tmp_path / "tree.json"
        run(capsys, "compile", "--red", "path:2", "--blue", "clique:3",
            "--builder", "clique", "--out", str(dest))
        doc = json.loads(dest.read_text())
        assert doc["board_size"] == 3
        assert any(n.get("winner") for n in doc["nodes"])


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("match", "--red", "path:2", "--blue", "clique:3",
             "--builder", "psychic", "--painter", "all-blue"),
            ("solve", "--red", "path:2", "--blue", "clique:3"),
            ("nonsense",),
            (),
        ],
    )
    def test_exit_64(self, capsys, argv):
        with pytest.raises(SystemExit) as exc:
            main(list(argv))
        assert exc.value.code == EXIT_USAGE

    def test_bad_spec_exits_64(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--red", "path:zero", "--blue", "path:2",
                  "--board", "2"])
        assert exc.value.code == EXIT_USAGE

    def test_builder_missing_seed(self, capsys):
        code = main(["match", "--red", "path:2", "--blue", "path:2",
                     "--builder", "random", "--painter", "all-red"])
        assert code == EXIT_USAGE
