import json

import pytest

from treelat.cli import main

from importlib import resources

CORPUS = str(resources.files("treelat").joinpath(
    "data/datum_33_sym3.txt"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestAnalyze:
    def test_corpus_file(self, capsys):
        code, out, _ = run(capsys, "analyze", CORPUS)
        assert code == 0
        assert "overall: Irreducible" in out
        assert "Sym3" in out

    def test_json_output_parses(self, capsys):
        code, out, _ = run(capsys, "analyze", CORPUS, "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["overall"] == "Irreducible"
        assert payload["f1"]["order"] == 6

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "analyze", "no-such-file.vh")
        assert code == 1
        assert "error" in err

    def test_invalid_datum(self, tmp_path, capsys):
        bad = tmp_path / "bad.vh"
        bad.write_text("[a]\nx involution\ny involution\n[b]\np involution\n"
                       "[squares]\nx p x p\n")
        code, _, err = run(capsys, "analyze", str(bad))
        assert code == 1
        assert "invalid datum" in err

    def test_cap_exceeded(self, monkeypatch, capsys):
        monkeypatch.setenv("TREELAT_ELEMENT_CAP", "5")
        code, _, err = run(capsys, "analyze", CORPUS)
        assert code == 2
        assert "cap" in err

    def test_bad_cap_value(self, monkeypatch, capsys):
        monkeypatch.setenv("TREELAT_ELEMENT_CAP", "-3")
        code, _, err = run(capsys, "analyze", CORPUS)
        assert code == 1


class TestVerdict:
    def test_symbolic_large_degree(self, capsys):
        code, out, _ = run(capsys, "verdict", "--d1", "11663", "--d2", "4",
                           "--f1", "Alt", "--f2", "Sym")
        assert code == 0
        assert "(ii)" in out and "972" in out

    def test_small_pair_irreducible(self, capsys):
        code, out, _ = run(capsys, "verdict", "--d1", "5", "--d2", "4",
                           "--f1", "Alt5@5", "--f2", "Sym4", "--json")
        assert code == 0
        assert json.loads(out)["status"] == "Irreducible"

    def test_cycle_notation_generators(self, capsys):
        code, out, _ = run(capsys, "verdict", "--d1", "5", "--d2", "3",
                           "--f1", "(0 1 2 3 4),(1 2 4 3)", "--f2", "Sym3",
                           "--json")
        assert code == 0
        payload = json.loads(out)
        # F20 at degree 5 is 2-transitive, so the hypotheses hold
        assert payload["status"] == "Irreducible"

    def test_exceptional_47_3(self, capsys):
        code, out, _ = run(capsys, "verdict", "--d1", "47", "--d2", "3",
                           "--f1", "Alt", "--f2", "Sym3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "ExceptionalCase"
        assert payload["matched_cases"][0]["case"] == "i"

    def test_hypothesis_failure_reported(self, capsys):
        code, out, _ = run(capsys, "verdict", "--d1", "7", "--d2", "3",
                           "--f1", "(0 1 2 3 4 5 6)", "--f2", "Sym3",
                           "--json")
        assert code == 0
        assert json.loads(out)["status"] == "HypothesesNotMet"

    def test_unknown_spec(self, capsys):
        code, _, err = run(capsys, "verdict", "--d1", "4", "--d2", "4",
                           "--f1", "Klein", "--f2", "Sym4")
        assert code == 1
        assert "unrecognized" in err


class TestTables:
    @pytest.mark.parametrize("table,rows", [
        ("two-transitive", 10), ("galois", 6), ("simple235", 3), ("lps", 7)])
    def test_row_counts_json(self, capsys, table, rows):
        code, out, _ = run(capsys, "tables", table, "--json")
        assert code == 0
        assert len(json.loads(out)) == rows

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "tables", "two-transitive")
        assert code == 0
        assert "Sym(6)" in out and "720" in out


class TestVerify:
    def test_wreath_bound(self, capsys):
        code, out, _ = run(capsys, "verify", "wreath-bound", "--d", "5")
        assert code == 0
        assert "PASS" in out

    def test_remark_small(self, capsys):
        code, out, _ = run(capsys, "verify", "remark-small")
        assert code == 0
        assert "(16, 3)" in out and "(60, 2)" in out

    def test_thompson(self, capsys):
        code, out, _ = run(capsys, "verify", "thompson")
        assert code == 0
        assert "122" in out

    def test_all_without_full(self, capsys):
        code, out, _ = run(capsys, "verify", "all")
        assert code == 0
        assert "PASS" in out
