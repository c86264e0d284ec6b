"""
Test suite for game files and JSON reports.
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from rank1eq.core.errors import GameFormatError, RankError
from rank1eq.core.models import MixedProfile
from rank1eq.formats import (
    CheckReport,
    EquilibriumReport,
    SubsetReport,
    format_game,
    format_rank_one,
    parse_game,
    read_game,
    write_game,
)
from rank1eq.generators import ex1, ex1_rank_one, ex3
from rank1eq.oracle import is_nash, qp_value
from rank1eq.solver import binsearch, enumerate_all

F = Fraction
DATA = Path(__file__).parent / "data"


class TestGameFiles:
    """Test cases for parsing and writing game files."""

    def test_read_with_factorization(self):
        """Test that the stored factorization is used as given."""
        game_file = read_game(DATA / "ex1.game")
        assert game_file.game == ex1()
        assert game_file.to_rank_one() == ex1_rank_one()

    def test_read_without_factorization(self):
        """Test that A + B is factored when no factorization is stored."""
        rank_one = read_game(DATA / "degenerate.game").to_rank_one()
        assert rank_one.a == (F(1), F(1))
        assert rank_one.b == (F(1), F(1))

    def test_rank_two_file(self):
        """Test that a rank-2 game has no rank-1 form."""
        game_file = read_game(DATA / "ex3.game")
        assert game_file.game == ex3()
        with pytest.raises(RankError):
            game_file.to_rank_one()

    def test_rationals_and_unicode_minus(self):
        """Test fractions, decimals and a unicode minus sign."""
        game = parse_game("1 2\n1/2 0.25\n\n−1 3\n").game
        assert game.A.row(0) == (F(1, 2), F(1, 4))
        assert game.B.row(0) == (F(-1), F(3))

    def test_write_then_read(self, tmp_path):
        """Test that a written file reads back to the same game."""
        path = tmp_path / "ex1.game"
        write_game(path, ex1(), ex1_rank_one().factorization)
        assert read_game(path).to_rank_one() == ex1_rank_one()

    def test_canonical_text(self):
        """Test the canonical layout of the worked example."""
        assert format_rank_one(ex1_rank_one()) == (DATA / "ex1.game").read_text()
        assert format_game(ex1()).splitlines()[0] == "2 2"

    @pytest.mark.parametrize("text,line", [
        ("2 x\n", 1),
        ("1 2\n1 2 3\n\n1 2\n", 2),
        ("1 2\n1 2\n\n1 2/0\n", 4),
        ("2 2\n1 0\n0 1\n\n1 0\n", 5),
        ("1 1\n1\n\n1\n# factorization: a = 1; b = 3\n", 5),
        ("1 1\n1\n\n1\n# factorization: a = 1\n", 5),
    ])
    def test_errors_carry_line(self, text, line):
        """Test that malformed input reports the offending line."""
        with pytest.raises(GameFormatError) as excinfo:
            parse_game(text)
        assert excinfo.value.line == line
        assert str(excinfo.value).startswith(f"line {line}:")

    def test_empty_file(self):
        """Test that a file without a header is rejected."""
        with pytest.raises(GameFormatError):
            parse_game("# only a comment\n")


class TestReports:
    """Test cases for the JSON report models."""

    def test_equilibrium_report(self):
        """Test that rationals are strings and lambda keeps its name."""
        record = binsearch(ex1_rank_one())
        data = json.loads(EquilibriumReport.from_record(record).to_json())
        assert data["command"] == "solve"
        assert data["lambda"] == str(record.lam)
        assert all(isinstance(v, str) for v in data["x"] + data["y"])

    def test_subset_report(self):
        """Test a subset of the worked example."""
        subset = enumerate_all(ex1_rank_one())[1]
        report = SubsetReport.from_subset(subset)
        assert report.kind == "interval"
        assert report.lambda_lower == report.lambda_upper == "-1/4"
        assert report.x_vertices == [["1/4", "3/4"]]
        assert report.rows == []
        assert report.cols == [0, 1]

    def test_check_report(self):
        """Test the certificates of a failed check."""
        game = ex3()
        profile = MixedProfile.of([0, 1], [1, 0])
        report = CheckReport.from_check(is_nash(game, profile), qp_value(game, profile))
        assert report.is_equilibrium is False
        assert report.qp_value == "-1"
        assert report.row.best_responses == [0]
        assert report.row.support_ok == [True, False]
