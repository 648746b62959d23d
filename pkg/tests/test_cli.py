"""Command line tests: output formats and exit codes."""

import json

import pytest

from bibracket.main import main


def test_sequences_csv(capsys):
    """Test the d' sequence as CSV."""
    assert main(["sequences", "--max", "5", "--kind", "dprime", "--csv"]) == 0
    out = capsys.readouterr().out
    assert out == "k,dprime_k\n0,1\n1,0\n2,1\n3,2\n4,3\n5,6\n"


def test_sequences_latex(capsys):
    """Test several sequences as a LaTeX tabular."""
    assert main(["sequences", "--max", "4", "--kind", "gen", "--kind", "cds", "--latex"]) == 0
    out = capsys.readouterr().out
    assert r"$gen_k$ & 1 & 0 & 1 & 2 & 4 \\ \hline" in out
    assert r"$cds_k$ & 0 & 0 & 0 & 0 & 1 \\ \hline" in out


def test_eval_text(capsys):
    """Test the q-expansion of [2] as text."""
    assert main(["eval", "[2]", "--prec", "4"]) == 0
    out = capsys.readouterr().out
    assert "q + 3*q^2 + 4*q^3 + 7*q^4 + O(q^5)" in out


def test_eval_oracle_matches(capsys):
    """Test --oracle prints the same series."""
    assert main(["eval", "[2,1 | 1,0]", "--prec", "8"]) == 0
    fast = capsys.readouterr().out
    assert main(["eval", "[2,1 | 1,0]", "--prec", "8", "--oracle"]) == 0
    assert capsys.readouterr().out == fast


def test_product_json(capsys):
    """Test the stuffle product as a JSON report."""
    assert main(["product", "[2]", "[3]", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["command"] == "product"
    assert "-1/12 * [3]" in report["results"][0]["combination"]
    assert report["params"]["mode"] == "stuffle"


def test_shuffle_bracket_with_series(capsys):
    """Test a shuffle bracket and its series."""
    assert main(["bracket", "2,1", "--series", "--prec", "6"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("[2,1]^sh = ")
    assert "O(q^7)" in out


def test_pmap(capsys):
    """Test P([2]) = mb{1}{1}."""
    assert main(["pmap", "[2]"]) == 0
    assert "= [1 | 1]" in capsys.readouterr().out


def test_rankin_cohen_matches_cusp_bracket(capsys):
    """Test (G4, G4)_2 against its bracket form."""
    assert main(["rankin-cohen", "4", "4", "2", "--prec", "20"]) == 0
    assert "* C: yes" in capsys.readouterr().out


def test_verify_modular_suite(capsys):
    """Test the identity suite passes from the command line."""
    assert main(["verify", "modular-suite", "--prec", "30"]) == 0
    assert "10/10 identities hold" in capsys.readouterr().out


def test_dims_latex(capsys):
    """Test the dimension table as LaTeX."""
    assert main(["dims", "--max-weight", "3", "--prec", "20", "--latex"]) == 0
    out = capsys.readouterr().out
    assert r"\begin{tabular}" in out
    assert r"& 1 & 0 & 1 & 2 \\ \hline" in out


def test_ds_counts_json(capsys):
    """Test double shuffle counts as JSON rows."""
    assert main(["ds-counts", "--variant", "fds", "--max-weight", "5", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [row["fds_k"] for row in report["results"]] == [0, 0, 0, 1, 2]


def test_relations(capsys):
    """Test relations among shuffle brackets up to weight 4."""
    assert main(["relations", "--weight", "4", "--prec", "40"]) == 0
    out = capsys.readouterr().out
    assert "8 generators" in out
    assert "1 relations" in out


def test_express(capsys):
    """Test mb{2}{1} written in brackets, and an independent target."""
    assert main(["express", "[2 | 1]", "--weight", "3", "--max-depth", "2", "--prec", "30"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("[2 | 1] = ")
    assert main(["express", "[2]", "--weight", "1", "--prec", "30"]) == 0
    assert "independent" in capsys.readouterr().out


def test_bad_word_is_a_usage_error(capsys):
    """Test unparsable input exits with status 2."""
    assert main(["eval", "[2,"]) == 2
    assert "cannot parse" in capsys.readouterr().err


def test_zero_denominator_is_a_usage_error(capsys):
    """Test a coefficient 1/0 exits with status 2 instead of a traceback."""
    assert main(["eval", "1/0 * [2]"]) == 2
    assert "zero denominator" in capsys.readouterr().err


def test_low_precision_is_a_usage_error(capsys):
    """Test a precision below 4k exits with status 2."""
    assert main(["dims", "--max-weight", "5", "--prec", "10"]) == 2
    assert "too low" in capsys.readouterr().err


def test_missing_argument_exits():
    """Test argparse rejects a missing positional argument."""
    with pytest.raises(SystemExit) as exc:
        main(["eval"])
    assert exc.value.code == 2


def test_log_file_is_written(tmp_path, monkeypatch):
    """Test the app log is created in the configured directory."""
    from bibracket.config import get_settings

    monkeypatch.setenv("BIBRACKET_LOG_DIR", str(tmp_path))
    get_settings.cache_clear()
    assert main(["sequences", "--max", "2"]) == 0
    assert (tmp_path / "app.log").exists()
