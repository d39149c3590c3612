"""JSON codecs for games, weight matrices and rationals.

Game documents look like
    {"players": n, "strategies": [k1, ..., kn], "payoffs": [[k numbers] x n]}
with numbers given as integers, decimal literals or "p/q" strings.
"""

import json
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from src.core.errors import GameFormatError
from src.core.game import Game, GameSpace, from_table, to_table
from src.core.linalg import to_fraction


def encode_rational(x: Fraction) -> Union[int, str]:
    """Integers stay plain ints; everything else becomes "p/q"."""
    x = to_fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def decode_rational(value: Any) -> Fraction:
    """Read a JSON number or "p/q" string exactly; ValueError otherwise."""
    if isinstance(value, bool) or not isinstance(value, (int, str, Decimal, float, Fraction)):
        raise ValueError(f"{value!r} is not a number or 'p/q' string")
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"{value!r} is not a rational: {e}") from e


def _decode_rows(rows: Any) -> list[list[Fraction]]:
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ValueError("expected a list of lists")
    return [[decode_rational(x) for x in row] for row in rows]


class GameDocument(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    players: int
    strategies: list[int]
    payoffs: list[list[Fraction]]
    name: Optional[str] = None

    @field_validator("payoffs", mode="before")
    @classmethod
    def _rationals(cls, value):
        return _decode_rows(value)

    @model_validator(mode="after")
    def _shape(self):
        if self.players < 1:
            raise ValueError("players must be positive")
        if len(self.strategies) != self.players:
            raise ValueError(f"strategies lists {len(self.strategies)} counts for {self.players} players")
        if len(self.payoffs) != self.players:
            raise ValueError(f"payoffs has {len(self.payoffs)} rows for {self.players} players")
        k = 1
        for s in self.strategies:
            k *= s
        for i, row in enumerate(self.payoffs, start=1):
            if len(row) != k:
                raise ValueError(f"payoff row {i} has {len(row)} entries, expected {k}")
        return self


class WeightDocument(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    preset: Optional[Literal["standard", "candogan"]] = None
    dim: Optional[int] = None
    q: Optional[list[list[Fraction]]] = None

    @field_validator("q", mode="before")
    @classmethod
    def _rationals(cls, value):
        return None if value is None else _decode_rows(value)

    @model_validator(mode="after")
    def _either(self):
        if (self.preset is None) == (self.q is None):
            raise ValueError("give exactly one of 'preset' or 'q'")
        if self.q is not None:
            dim = len(self.q)
            if self.dim is not None and self.dim != dim:
                raise ValueError(f"dim {self.dim} does not match a {dim}-row matrix")
            if any(len(row) != dim for row in self.q):
                raise ValueError("q must be square")
        return self


def parse_json(text: str) -> Any:
    """json.loads with exact decimal literals and line-aware errors."""
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise GameFormatError(e.msg, line=e.lineno, column=e.colno) from e


def read_text(source: Union[str, Path]) -> str:
    """Read a file, or stdin when source is "-"."""
    if str(source) == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _validate(model: type[BaseModel], data: Any) -> BaseModel:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        details = "; ".join(f"{'.'.join(str(p) for p in err['loc']) or 'document'}: {err['msg']}" for err in e.errors())
        raise GameFormatError(f"invalid {model.__name__}: {details}") from e


def game_from_dict(data: Any) -> Game:
    """Validate a parsed game document and build the Game."""
    doc = _validate(GameDocument, data)
    return from_table(GameSpace(tuple(doc.strategies)), doc.payoffs, name=doc.name)


def game_to_dict(g: Game) -> dict:
    """Game document for g, rationals encoded with encode_rational."""
    data = {
        "players": g.space.n,
        "strategies": list(g.space.ks),
        "payoffs": [[encode_rational(x) for x in row] for row in to_table(g)],
    }
    if g.name:
        data["name"] = g.name
    return data


def load_game(source: Union[str, Path]) -> Game:
    """Read a game document from a path, or stdin for "-"."""
    return game_from_dict(parse_json(read_text(source)))


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2)


def weight_document(data: Any) -> WeightDocument:
    """Validate a parsed weight document."""
    return _validate(WeightDocument, data)
