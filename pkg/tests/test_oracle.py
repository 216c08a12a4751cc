"""The set-level reference implementations and the instance generator."""

from fractions import Fraction
from itertools import islice

import pytest

import helpers
from softsets import (
    BoundExceeded,
    MAX_ENUM_ATTRIBUTES,
    MAX_ENUM_UNIVERSE,
    SoftSet,
    UniverseMismatch,
    complement,
    enumerate_soft_sets,
    intersection,
    oracle_complement,
    oracle_intersection,
    oracle_product,
    oracle_similarity,
    oracle_union,
    product,
    similarity,
    union,
)
from helpers import fam


class TestOracleAgreement:
    def test_complement(self, abc_f):
        assert oracle_complement(abc_f) == complement(abc_f)

    def test_union(self, abc_f, abc_g):
        got = oracle_union(abc_f, abc_g)
        assert got == union(abc_f, abc_g)
        assert got.attributes[0] == "(x,m)"

    def test_intersection(self, abc_f, abc_g):
        assert oracle_intersection(abc_f, abc_g) == intersection(abc_f, abc_g)

    def test_product(self, abc_f, abc_g):
        got = oracle_product(abc_f, abc_g)
        assert got == product(abc_f, abc_g)
        assert got.universe == product(abc_f, abc_g).universe

    def test_similarity_on_fixture_pairs(self, sim_pair, five_pair):
        assert oracle_similarity(*sim_pair) == Fraction(2, 3)
        assert oracle_similarity(*five_pair) == Fraction(3, 5)
        s, f = sim_pair
        assert oracle_similarity(s, f) == similarity(s, f)

    def test_oracles_enforce_the_universe_contract(self, abc_f):
        other = SoftSet(("a", "b"), ("x",), {"x": {"a"}})
        for op in (oracle_union, oracle_intersection, oracle_product, oracle_similarity):
            with pytest.raises(UniverseMismatch):
                op(abc_f, other)


class TestOracleValues:
    def test_union_family(self, abc_f, abc_g):
        got = oracle_union(abc_f, abc_g)
        assert got.tau() == fam(
            {"a", "b", "c"}, {"b", "c"}, {"a", "c"}, {"c"}, {"a"}
        )

    def test_product_builds_pair_elements(self, abc_f, abc_g):
        got = oracle_product(abc_f, abc_g)
        assert got.value("(z,m)") == frozenset({"(a,a)"})
        assert got.value("(x,m)") == frozenset({"(b,a)", "(c,a)"})


class TestEnumeration:
    def test_counts_follow_the_power_formula(self):
        for universe in helpers.UNIVERSES:
            for width in range(1, MAX_ENUM_ATTRIBUTES + 1):
                per_width = (2 ** len(universe)) ** width
                total = sum(
                    (2 ** len(universe)) ** k for k in range(1, width + 1)
                )
                got = helpers.all_soft_sets(universe, width)
                assert len(got) == total
                assert sum(1 for s in got if len(s.attributes) == width) == per_width

    def test_known_totals(self):
        assert len(helpers.all_soft_sets(("e1",), 3)) == 14
        assert len(helpers.all_soft_sets(("e1", "e2"), 3)) == 84
        assert len(helpers.all_soft_sets(("e1", "e2", "e3"), 3)) == 584

    def test_deterministic_prefix(self):
        first, second, third = islice(enumerate_soft_sets(("e1", "e2"), 1), 3)
        assert first.value("a1") == frozenset()
        assert second.value("a1") == frozenset({"e1"})
        assert third.value("a1") == frozenset({"e2"})

    def test_no_duplicates(self):
        sets = helpers.all_soft_sets(("e1", "e2"), 3)
        assert len(set(sets)) == len(sets)

    def test_every_member_lives_on_the_given_universe(self):
        for s in enumerate_soft_sets(("e1", "e2", "e3"), 2):
            assert s.universe == ("e1", "e2", "e3")
            assert 1 <= len(s.attributes) <= 2

    def test_bounds_are_enforced(self):
        too_big = tuple(f"e{i}" for i in range(MAX_ENUM_UNIVERSE + 1))
        with pytest.raises(BoundExceeded):
            list(enumerate_soft_sets(too_big, 1))
        with pytest.raises(BoundExceeded):
            list(enumerate_soft_sets(("e1",), 0))
        with pytest.raises(BoundExceeded):
            list(enumerate_soft_sets(("e1",), MAX_ENUM_ATTRIBUTES + 1))
