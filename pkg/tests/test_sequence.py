import json

import pytest

from ecctrees.enumeration import free_trees, valid_sequences
from ecctrees.sequence import (
    EccSequence,
    InvalidSequenceError,
    SequenceError,
    eccentric_sequence,
    parse_sequence,
    sequence_of_extremal_params,
    validate_tree_sequence,
)


class TestParse:
    def test_raw_list(self):
        s = parse_sequence("2,3,3,4,4")
        assert s.b1 == 2
        assert s.l == 3
        assert s.mult == (1, 2, 2)

    def test_compact_form(self):
        assert parse_sequence("2^1,3^2,4^2") == parse_sequence("2,3,3,4,4")

    def test_gap_rejected(self):
        with pytest.raises(SequenceError):
            parse_sequence("2,3,5")

    def test_decreasing_rejected(self):
        with pytest.raises(SequenceError):
            parse_sequence("3,2,2")

    def test_zero_multiplicity_rejected(self):
        with pytest.raises(SequenceError):
            parse_sequence("2^0,3^2")

    def test_non_consecutive_compact_rejected(self):
        with pytest.raises(SequenceError):
            parse_sequence("2^1,4^2")

    def test_non_integer_rejected(self):
        with pytest.raises(SequenceError):
            parse_sequence("2,x,3")

    def test_json_roundtrip(self):
        s = parse_sequence("2,3,3,4,4")
        assert json.loads(s.to_json()) == {"b1": 2, "mult": [1, 2, 2]}
        assert EccSequence.from_json(s.to_json()) == s


class TestValidate:
    @pytest.mark.parametrize("text", ["2,3,3,4,4", "2,2,3,3", "1,2,2,2"])
    def test_valid(self, text):
        assert validate_tree_sequence(parse_sequence(text)).valid

    def test_cond_ii(self):
        result = validate_tree_sequence(parse_sequence("2,3,4,4"))
        assert not result.valid
        assert result.reason == "CondII"

    def test_cond_i(self):
        result = validate_tree_sequence(parse_sequence("3,3,4,4"))
        assert not result.valid
        assert result.reason == "CondI"

    def test_too_short(self):
        result = validate_tree_sequence(parse_sequence("1,1"))
        assert result.reason == "TooShort"

    def test_round_trip_all_trees(self, small_free_trees):
        for n, trees in small_free_trees.items():
            if n <= 2:
                continue
            for t in trees:
                assert validate_tree_sequence(eccentric_sequence(t)).valid

    def test_completeness_up_to_10(self):
        """Valid iff some free tree realizes the sequence."""
        realized = set()
        for n in range(3, 11):
            for t in free_trees(n):
                realized.add(eccentric_sequence(t).raw)
        for n in range(3, 11):
            for raw in _all_candidate_sequences(n, max_value=9):
                s = EccSequence(raw)
                assert validate_tree_sequence(s).valid == (raw in realized), raw


def _all_candidate_sequences(n, max_value):
    """All nondecreasing gap-free sequences of length n with values <= max_value."""
    for lo in range(1, max_value + 1):
        for hi in range(lo, max_value + 1):
            span = hi - lo + 1
            if span > n:
                continue
            for mult in _compositions(n, span):
                raw = []
                for off, m in enumerate(mult):
                    raw.extend([lo + off] * m)
                yield tuple(raw)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class TestExtremalParams:
    @pytest.mark.parametrize(
        "text,q,t",
        [
            ("1,2,2,2", 1, (1,)),
            ("2,3,3,4,4,4,4", 3, (2, 0)),
            ("3,4,4,5,5,5,6,6,6,6", 5, (2, 1, 0)),
        ],
    )
    def test_examples(self, text, q, t):
        assert sequence_of_extremal_params(parse_sequence(text)) == (q, t)

    def test_invalid_rejected(self):
        with pytest.raises(InvalidSequenceError):
            sequence_of_extremal_params(parse_sequence("2,3,4,4"))

    def test_compact_constraints_for_all_valid(self):
        for s in valid_sequences(12):
            q, t = sequence_of_extremal_params(s)
            assert len(t) == s.l - 1
            assert all(tj >= 0 for tj in t)
            assert s.mult[0] in (1, 2)
            if s.mult[0] == 1:
                assert s.bl == 2 * s.b1
            else:
                assert s.bl == 2 * s.b1 - 1
