"""
Plain-text game files.

    m n
    <m rows of n rationals: A>
    <blank line>
    <m rows of n rationals: B>
    # factorization: a = a_1 ... a_m; b = b_1 ... b_n

The factorization line is optional; other lines starting with '#' are comments.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..core.errors import GameFormatError
from ..core.matrix import RankOneFactorization, RatMatrix
from ..core.models import Game, RankOneGame, as_rank_one
from ..core.rational import Vector, format_rational, parse_rational

_FACTORIZATION_TAG = "# factorization:"


@dataclass(frozen=True)
class GameFile:
    game: Game
    factorization: Optional[RankOneFactorization] = None

    def to_rank_one(self) -> RankOneGame:
        """Use the stored factorization, or factor A + B (RankError if rank > 1)."""
        if self.factorization is not None:
            return RankOneGame(self.game.A, self.factorization)
        return as_rank_one(self.game)


def _parse_row(text: str, width: int, line: int) -> List:
    parts = text.split()
    if len(parts) != width:
        raise GameFormatError(f"expected {width} entries, got {len(parts)}", line=line)
    try:
        return [parse_rational(p) for p in parts]
    except GameFormatError as e:
        raise GameFormatError(str(e), line=line) from e


def _parse_factorization(text: str, m: int, n: int, line: int) -> RankOneFactorization:
    body = text[len(_FACTORIZATION_TAG):]
    parts = {}
    for chunk in body.split(";"):
        if "=" not in chunk:
            raise GameFormatError(f"malformed factorization part {chunk.strip()!r}", line=line)
        key, values = chunk.split("=", 1)
        parts[key.strip()] = values
    if set(parts) != {"a", "b"}:
        raise GameFormatError("factorization needs exactly 'a = ...; b = ...'", line=line)
    a = tuple(_parse_row(parts["a"], m, line))
    b = tuple(_parse_row(parts["b"], n, line))
    return RankOneFactorization(a, b)


def parse_game(text: str) -> GameFile:
    """Parse game file text; errors carry the 1-based line number."""
    header: Optional[Tuple[int, int]] = None
    rows: List[Tuple[int, str]] = []
    factorization_line: Optional[Tuple[int, str]] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(_FACTORIZATION_TAG):
            factorization_line = (number, line)
            continue
        if line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise GameFormatError(f"header must be 'm n', got {line!r}", line=number)
            header = (int(parts[0]), int(parts[1]))
            if header[0] < 1 or header[1] < 1:
                raise GameFormatError("dimensions must be positive", line=number)
            continue
        rows.append((number, line))

    if header is None:
        raise GameFormatError("empty game file")
    m, n = header
    if len(rows) != 2 * m:
        last = rows[-1][0] if rows else None
        raise GameFormatError(f"expected {2 * m} matrix rows, got {len(rows)}", line=last)

    grid = [_parse_row(text_row, n, number) for number, text_row in rows]
    game = Game(RatMatrix.from_rows(grid[:m]), RatMatrix.from_rows(grid[m:]))

    factorization = None
    if factorization_line is not None:
        number, line = factorization_line
        factorization = _parse_factorization(line, m, n, number)
        if factorization.product() != game.payoff_sum:
            raise GameFormatError("factorization does not reproduce A + B", line=number)
    return GameFile(game, factorization)


def _format_values(values: Vector) -> str:
    return " ".join(format_rational(v) for v in values)


def format_game(game: Game, factorization: Optional[RankOneFactorization] = None) -> str:
    """Canonical text for a game; parse_game(format_game(g)) gives g back."""
    lines = [f"{game.m} {game.n}"]
    lines += [_format_values(game.A.row(i)) for i in range(game.m)]
    lines.append("")
    lines += [_format_values(game.B.row(i)) for i in range(game.m)]
    if factorization is not None:
        lines.append(f"{_FACTORIZATION_TAG} a = {_format_values(factorization.a)}; "
                     f"b = {_format_values(factorization.b)}")
    return "\n".join(lines) + "\n"


def format_rank_one(game: RankOneGame) -> str:
    return format_game(game.to_game(), game.factorization)


def read_game(path: Union[str, Path]) -> GameFile:
    return parse_game(Path(path).read_text(encoding="utf-8"))


def write_game(path: Union[str, Path], game: Game, factorization: Optional[RankOneFactorization] = None) -> None:
    Path(path).write_text(format_game(game, factorization), encoding="utf-8")
