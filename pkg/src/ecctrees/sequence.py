"""Eccentric sequences: parsing, the compact run-length view, and the
Lesniak-style validity test for tree eccentric sequences."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .tree import Tree, eccentricities


class SequenceError(ValueError):
    """Text does not describe a well-formed eccentric sequence."""


@dataclass(frozen=True)
class EccSequence:
    """Nondecreasing sequence of positive integers with a compact view.

    The compact view (b1, multiplicities m_1..m_l) requires the distinct
    values to be consecutive integers b1, b1+1, ..., b1+l-1, which holds for
    the eccentricity multiset of any connected graph.
    """

    raw: tuple[int, ...]

    def __post_init__(self):
        if not self.raw:
            raise SequenceError("empty sequence")
        if any(a < 1 for a in self.raw):
            raise SequenceError("entries must be positive integers")
        if any(a > b for a, b in zip(self.raw, self.raw[1:])):
            raise SequenceError("sequence must be nondecreasing")
        values = sorted(set(self.raw))
        for a, b in zip(values, values[1:]):
            if b != a + 1:
                raise SequenceError(
                    f"gap between eccentricities {a} and {b}: "
                    "impossible for a connected graph"
                )

    @property
    def n(self) -> int:
        return len(self.raw)

    @property
    def b1(self) -> int:
        """Smallest value (the radius, once validated)."""
        return self.raw[0]

    @property
    def bl(self) -> int:
        """Largest value (the diameter, once validated)."""
        return self.raw[-1]

    @property
    def l(self) -> int:
        """Number of distinct values."""
        return self.bl - self.b1 + 1

    @property
    def mult(self) -> tuple[int, ...]:
        """Multiplicities m_1..m_l of the distinct values b1..bl."""
        counts = [0] * self.l
        for a in self.raw:
            counts[a - self.b1] += 1
        return tuple(counts)

    @classmethod
    def from_compact(cls, b1: int, mult: tuple[int, ...] | list[int]) -> "EccSequence":
        if not mult or any(m < 1 for m in mult):
            raise SequenceError("multiplicities must be positive")
        raw = []
        for offset, m in enumerate(mult):
            raw.extend([b1 + offset] * m)
        return cls(tuple(raw))

    def compact_str(self) -> str:
        return ",".join(
            f"{self.b1 + j}^{m}" for j, m in enumerate(self.mult)
        )

    def raw_str(self) -> str:
        return ",".join(str(a) for a in self.raw)

    def to_json(self) -> str:
        return json.dumps({"b1": self.b1, "mult": list(self.mult)})

    @classmethod
    def from_json(cls, text: str) -> "EccSequence":
        obj = json.loads(text)
        return cls.from_compact(obj["b1"], tuple(obj["mult"]))


def parse_sequence(text: str) -> EccSequence:
    """Parse either a comma list "2,3,3,4,4" or compact form "2^1,3^2,4^2"."""
    text = text.strip()
    if not text:
        raise SequenceError("empty sequence")
    tokens = [tok.strip() for tok in text.split(",")]
    if any("^" in tok for tok in tokens):
        raw: list[int] = []
        prev_value: int | None = None
        for tok in tokens:
            try:
                value_s, mult_s = tok.split("^")
                value, mult = int(value_s), int(mult_s)
            except ValueError:
                raise SequenceError(f"bad compact token {tok!r}")
            if mult < 1:
                raise SequenceError(f"zero or negative multiplicity in {tok!r}")
            if prev_value is not None and value != prev_value + 1:
                raise SequenceError(
                    f"compact values must be consecutive, got {prev_value} then {value}"
                )
            prev_value = value
            raw.extend([value] * mult)
        return EccSequence(tuple(raw))
    try:
        raw_ints = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise SequenceError(f"non-integer token in {text!r}")
    return EccSequence(raw_ints)


def eccentric_sequence(t: Tree) -> EccSequence:
    """The nondecreasing sequence of all vertex eccentricities of t."""
    return EccSequence(tuple(sorted(eccentricities(t))))


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    reason: str | None = None  # one of "TooShort", "CondI", "CondII"

    def __bool__(self) -> bool:
        return self.valid


def validate_tree_sequence(s: EccSequence) -> ValidationResult:
    """Test whether s is the eccentric sequence of some tree (n > 2).

    Condition I: either the smallest value appears once and the largest equals
    twice the smallest, or it appears exactly twice and the largest equals
    twice the smallest minus one.  Condition II: every value strictly between
    the smallest and the largest, and the largest itself, appears at least
    twice.  Reasons are checked in the order TooShort, CondI, CondII.
    """
    if s.n <= 2:
        return ValidationResult(False, "TooShort")
    mult = s.mult
    cond_i = (mult[0] == 1 and s.bl == 2 * s.b1) or (
        mult[0] == 2 and s.bl == 2 * s.b1 - 1
    )
    if not cond_i:
        return ValidationResult(False, "CondI")
    if any(m < 2 for m in mult[1:]):
        return ValidationResult(False, "CondII")
    return ValidationResult(True)


class InvalidSequenceError(ValueError):
    """A valid tree eccentric sequence was required."""

    def __init__(self, s: EccSequence, result: ValidationResult):
        super().__init__(
            f"{s.compact_str()} is not a tree eccentric sequence ({result.reason})"
        )
        self.result = result


def require_valid(s: EccSequence) -> None:
    result = validate_tree_sequence(s)
    if not result:
        raise InvalidSequenceError(s, result)


def sequence_of_extremal_params(s: EccSequence) -> tuple[int, tuple[int, ...]]:
    """Parameters (q, t) of the extremal caterpillar for a valid sequence s.

    q is diameter-1 and t_j = m_{l+1-j} - 2 for j = 1..l-1: the largest
    multiplicity (minus 2) is attached closest to the path end.
    """
    require_valid(s)
    mult = s.mult
    q = s.bl - 1
    t = tuple(mult[s.l - j] - 2 for j in range(1, s.l))
    return q, t
