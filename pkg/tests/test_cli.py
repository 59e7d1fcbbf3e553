import argparse
import json

import pytest

from dehngoeritz import cli
from dehngoeritz.analysis import analyze
from dehngoeritz.cli import RunConfig, main, parse_anchor, render_pretty
from dehngoeritz.dehn import DehnMatrix
from dehngoeritz.errors import DeterminantMismatchError
from dehngoeritz.goeritz import GoeritzMatrix
from dehngoeritz.pdcode import Checkerboard, parse_pd

from tests.knots import DEHN_8_19, KNOT_8_19, TREFOIL, TREFOIL_SUM


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


class TestRegionsCommand:
    def test_8_19_counts(self, capsys):
        report = run_json(capsys, "regions", KNOT_8_19)
        assert report["m"] == 10
        assert report["b"] == 5
        assert report["prime"] is True

    def test_trefoil_pretty(self, capsys):
        assert main(["regions", TREFOIL]) == 0
        out = capsys.readouterr().out
        assert "m: 5" in out
        assert "b: 3" in out

    def test_shade_option(self, capsys):
        report = run_json(capsys, "regions", TREFOIL, "--shade", "1")
        assert report["b"] == 2
        assert report["shaded"] == [1, 3]


class TestMatrixCommands:
    def test_dehn_json(self, capsys):
        report = run_json(capsys, "dehn", TREFOIL)
        assert report["matrix"][0] == [-1, 1, 0, 1, -1]
        assert report["b"] == 3

    def test_dehn_csv(self, capsys):
        assert main(["dehn", TREFOIL, "--format", "csv"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "-1,1,0,1,-1"

    def test_goeritz_has_indices(self, capsys):
        report = run_json(capsys, "goeritz", TREFOIL)
        assert report["matrix"] == [[-2, 1, 1], [1, -2, 1], [1, 1, -2]]
        assert len(report["indices"]) == 3

    def test_format_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("DEHNGOERITZ_FORMAT", "json")
        assert main(["goeritz", TREFOIL]) == 0
        assert json.loads(capsys.readouterr().out)["shaded_regions"] == [0, 2, 4]


class TestDetCommand:
    def test_8_19(self, capsys):
        assert run_json(capsys, "det", KNOT_8_19)["determinant"] == 3

    def test_unknot(self, capsys):
        report = run_json(capsys, "det", "unknot")
        assert report["determinant"] == 1
        assert report["deleted_index"] == 0

    def test_pretty(self, capsys):
        assert main(["det", TREFOIL]) == 0
        assert "determinant: 3" in capsys.readouterr().out


class TestReconstructCommand:
    def test_indexed(self, capsys):
        report = run_json(capsys, "reconstruct", TREFOIL)
        assert report["method"] == "indexed"
        assert report["right_block_zero"] is True

    def test_algebraic(self, capsys):
        report = run_json(capsys, "reconstruct", TREFOIL, "--method", "algebraic")
        assert report["method"] == "algebraic"
        assert report["right_block_zero"] is True

    def test_algebraic_with_anchor(self, capsys):
        report = run_json(
            capsys, "reconstruct", TREFOIL, "--method", "algebraic", "--anchor", "0:1"
        )
        assert report["right_block_zero"] is True

    @pytest.mark.parametrize("alias, method", [("thm1", "indexed"), ("thm2", "algebraic")])
    def test_older_method_names(self, capsys, alias, method):
        report = run_json(capsys, "reconstruct", TREFOIL, "--method", alias)
        assert report["method"] == method
        assert report["right_block_zero"] is True

    def test_anchor_on_unshaded_column(self, capsys):
        code = main(["reconstruct", TREFOIL, "--method", "algebraic", "--anchor", "4:0"])
        assert code == 3
        assert "ColumnOutOfRangeError" in capsys.readouterr().err

    def test_composite_refused(self, capsys):
        code = main(["reconstruct", TREFOIL_SUM, "--method", "algebraic"])
        assert code == 3
        assert "NotPrimeDiagramError" in capsys.readouterr().err


class TestCheckCommand:
    @pytest.mark.parametrize("pd", [KNOT_8_19, TREFOIL])
    def test_prime_diagram_verdicts(self, capsys, pd):
        report = run_json(capsys, "check", pd)
        assert report["indexed_exact_match"] is True
        assert report["algebraic_match_up_to_sign"] is True
        assert report["right_block_zero"] is True
        assert report["thm1_exact_match"] is True
        assert report["thm2_match_up_to_sign"] is True

    def test_composite_skips_algebraic(self, capsys):
        report = run_json(capsys, "check", TREFOIL_SUM)
        assert report["indexed_exact_match"] is True
        assert report["algebraic"] == "skipped: not prime"
        assert report["algebraic_match_up_to_sign"] is None
        assert report["thm2_match_up_to_sign"] is None

    def test_pretty(self, capsys):
        assert main(["check", TREFOIL]) == 0
        assert "indexed_exact_match: True" in capsys.readouterr().out


class TestColorableCommand:
    def test_8_19_mod_3(self, capsys):
        report = run_json(capsys, "colorable", KNOT_8_19, "-p", "3", "-p", "5")
        assert [row["colorable"] for row in report["rows"]] == [True, False]
        assert report["determinant"] == 3

    def test_name_from_file(self, capsys, tmp_path):
        path = tmp_path / "8_19.pd"
        path.write_text(KNOT_8_19 + "  # the (3,4) torus knot\n")
        report = run_json(capsys, "colorable", "--input", str(path), "-p", "3")
        assert report["name"] == "8_19"

    def test_needs_modulus(self):
        with pytest.raises(SystemExit):
            main(["colorable", TREFOIL])

    def test_csv_table(self, capsys):
        assert main(["colorable", TREFOIL, "-p", "3", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("modulus,colorings")
        assert lines[1].startswith("3,27,")


class TestErrors:
    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "broken.pd"
        path.write_text("X[1,2,3,4]\n")
        assert main(["dehn", "--input", str(path)]) == 2
        assert "BadIncidenceError" in capsys.readouterr().err

    def test_wrong_arity(self, capsys):
        assert main(["dehn", "X[1,2,3]"]) == 2
        assert "MalformedRecordError" in capsys.readouterr().err

    def test_link_rejected(self, capsys):
        assert main(["dehn", "X[4,1,3,2] X[2,3,1,4]"]) == 2
        assert "NotPlanarKnotError" in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        assert main(["dehn", "--input", str(tmp_path / "absent.pd")]) == 2

    def test_two_inputs(self, capsys, tmp_path):
        path = tmp_path / "trefoil.pd"
        path.write_text(TREFOIL)
        assert main(["dehn", TREFOIL, "--input", str(path)]) == 2

    def test_shade_out_of_range(self, capsys):
        assert main(["regions", TREFOIL, "--shade", "9"]) == 3
        assert "IndexOutOfRangeError" in capsys.readouterr().err


class TestHelpers:
    def test_parse_anchor(self):
        assert parse_anchor("3:7") == {3: 7}

    def test_parse_anchor_rejects(self):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_anchor("3-7")

    def test_run_config_needs_one_input(self):
        with pytest.raises(ValueError):
            RunConfig(command="dehn")

    def test_render_matrix(self):
        text = render_pretty({"matrix": DEHN_8_19[:1]})
        assert text.splitlines()[1].split() == [str(v) for v in DEHN_8_19[0]]


class TestJsonRoundTrip:
    def test_dehn_output_reloads(self, capsys):
        report = run_json(capsys, "dehn", KNOT_8_19)
        expected = analyze(parse_pd(KNOT_8_19)).dehn
        assert DehnMatrix.from_dict(report) == expected

    def test_goeritz_output_reloads(self, capsys):
        report = run_json(capsys, "goeritz", KNOT_8_19)
        expected = analyze(parse_pd(KNOT_8_19)).goeritz
        assert GoeritzMatrix.from_dict(report) == expected


class TestExitCodes:
    def test_not_utf8_input(self, capsys, tmp_path):
        path = tmp_path / "binary.pd"
        path.write_bytes(b"X[1,4,2,5] \xff\xfe X[3,6,4,1] X[5,2,6,3]")
        assert main(["dehn", "--input", str(path)]) == 2
        assert "MalformedRecordError" in capsys.readouterr().err

    def test_invariant_error(self, capsys, monkeypatch):
        def broken(cfg):
            raise DeterminantMismatchError("cofactors disagree")

        monkeypatch.setitem(cli.HANDLERS, "det", broken)
        assert main(["det", TREFOIL]) == 4
        assert "DeterminantMismatchError" in capsys.readouterr().err

    def test_model_check_inside_pipeline(self, capsys, monkeypatch):
        def broken(cfg):
            return Checkerboard(ordering=(0, 0, 1), b=1).dict()

        monkeypatch.setitem(cli.HANDLERS, "regions", broken)
        assert main(["regions", TREFOIL]) == 4
