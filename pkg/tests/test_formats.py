import random

import pytest

from tempex import InputError, TargetSpec
from tempex.formats import (
    parse_hitting_set,
    parse_nonstrict,
    parse_set_cover,
    parse_strict,
    parse_targets,
    serialize_hitting_set,
    serialize_nonstrict,
    serialize_set_cover,
    serialize_strict,
    serialize_targets,
)

from helpers import sample_ns, sample_strict

STRICT_CANON = "STRICT 3 2\n1 0 1\n2 1 2\n"
NS_CANON = "NONSTRICT 4 2\nT 1: 0 1 | 2 3\nT 2: 0 2 | 1 3\n"


def test_strict_round_trip_canonical():
    g = parse_strict(STRICT_CANON)
    assert serialize_strict(g) == STRICT_CANON


def test_nonstrict_round_trip_canonical():
    g = parse_nonstrict(NS_CANON)
    assert serialize_nonstrict(g) == NS_CANON


def test_round_trip_random_instances():
    rnd = random.Random(13)
    for i in range(40):
        g = sample_strict(rnd, 700 + i)
        assert parse_strict(serialize_strict(g)) == g
        h = sample_ns(rnd, 800 + i)
        assert parse_nonstrict(serialize_nonstrict(h)) == h


def test_comments_and_blank_lines_ignored():
    text = "# a comment\nSTRICT 3 2\n\n1 0 1\n# another\n2 1 2\n"
    assert serialize_strict(parse_strict(text)) == STRICT_CANON


def test_duplicate_time_edge_is_parse_error():
    with pytest.raises(InputError):
        parse_strict("STRICT 3 2\n1 0 1\n1 0 1\n")


def test_unordered_endpoints_rejected():
    with pytest.raises(InputError):
        parse_strict("STRICT 3 1\n1 1 0\n")


def test_step_lines_must_ascend():
    with pytest.raises(InputError):
        parse_nonstrict("NONSTRICT 2 2\nT 2: 0 1\nT 1: 0 1\n")


def test_step_count_must_match_lifetime():
    with pytest.raises(InputError):
        parse_nonstrict("NONSTRICT 2 2\nT 1: 0 1\n")


@pytest.mark.parametrize(
    "text,variant",
    [
        ("X 0 2\n", "FIXED"),
        ("K 3\n", "COUNT"),
        ("SET 0 1\nSET 2\n", "SETS"),
        ("", "SETS"),  # no directives = empty family
    ],
)
def test_targets_parse(text, variant):
    spec = parse_targets(text)
    assert spec.variant == variant


def test_targets_round_trip():
    for spec in (
        TargetSpec.fixed_set({2, 0}),
        TargetSpec.count_k(4),
        TargetSpec.set_family([{1, 0}, {3}]),
    ):
        assert parse_targets(serialize_targets(spec)) == spec


def test_targets_reject_mixed_directives():
    with pytest.raises(InputError):
        parse_targets("X 0\nK 2\n")


def test_cover_sources_round_trip():
    hs = parse_hitting_set("HS 3 2 1\nSET 0 1\nSET 1 2\n")
    assert hs.n == 3 and hs.k == 1 and len(hs.sets) == 2
    assert parse_hitting_set(serialize_hitting_set(hs)) == hs
    sc = parse_set_cover("SC 2 2 1\nSET 0\nSET 1\n")
    assert parse_set_cover(serialize_set_cover(sc)) == sc


def test_set_cover_requires_full_coverage():
    with pytest.raises(InputError):
        parse_set_cover("SC 3 1 1\nSET 0\n")
