import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordcopies import (
    CubeSet,
    DimensionError,
    FinCof,
    FusionPreconditionError,
    IdealError,
    LayeredSet,
    OMEGA_OMEGA,
    SchemaError,
    cs_empty,
    cs_full,
    cs_is_empty,
    layered_from_json,
    layered_to_json,
    ls_diff,
    ls_fusion,
    ls_in_ideal,
    ls_is_reduction,
    ls_order_type,
    ls_s_set,
    ls_subset_ideal,
    ls_supp,
    ls_union,
    natset,
    natset_to_fincof,
    parse_ordinal,
)
from ordcopies.layered import s_set_natset
from ordcopies.verify import (
    check_fusion_claims,
    check_ideal_consistency,
    check_level_set_laws,
    random_fusion_instance,
    random_layered,
)

o = parse_ordinal

FULL = LayeredSet.full()
EMPTY = LayeredSet.empty()
EVEN_COLUMNS = LayeredSet.make((), (True, False))
EVENS = natset((), (True, False))


@st.composite
def layered_sets(draw, cyclic_tails=True):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_layered(random.Random(seed), cyclic_tails=cyclic_tails)


class TestFinCof:
    def test_membership(self):
        assert 3 in FinCof.finite({3, 5})
        assert 4 not in FinCof.finite({3, 5})
        assert 4 in FinCof.cofinite({3, 5})
        assert 3 not in FinCof.cofinite({3, 5})

    def test_complement_flips_kind(self):
        a = FinCof.finite({1, 2})
        assert a.complement() == FinCof.cofinite({1, 2})
        assert a.complement().complement() == a

    def test_algebra(self):
        a = FinCof.finite({1, 2, 3})
        b = FinCof.cofinite({2, 4})
        assert a.union(b) == FinCof.cofinite({4})
        assert a.inter(b) == FinCof.finite({1, 3})
        assert b.diff(a) == FinCof.cofinite({1, 2, 3, 4})
        assert a.subset(a.union(b))
        assert b.subset_star(FinCof.cofinite({9}))
        assert not FinCof.cofinite().subset_star(a)

    def test_minus_initial(self):
        assert FinCof.cofinite().minus_initial(3) == FinCof.cofinite({0, 1, 2})

    def test_natset_round_trip(self):
        for fc in (FinCof.finite({0, 4}), FinCof.cofinite({1, 2}), FinCof.finite()):
            assert natset_to_fincof(fc.to_natset()) == fc

    def test_json(self):
        a = FinCof.cofinite({5, 1})
        assert a.to_json() == {"kind": "cofinite", "exceptions": [1, 5]}
        assert FinCof.from_json(a.to_json()) == a
        with pytest.raises(SchemaError):
            FinCof.from_json({"kind": "open", "exceptions": []})


class TestRepresentation:
    def test_uniform_columns_become_flags(self):
        a = LayeredSet.make([cs_full(1), cs_empty(2)], "empty")
        assert a.prefix == (True,)

    def test_tail_absorbs_prefix(self):
        assert LayeredSet.make(["full", "full"], "full") == FULL

    def test_cyclic_tail_reduction(self):
        a = LayeredSet.make((), ("full", "empty", "full", "empty"))
        assert a == EVEN_COLUMNS

    def test_column_dimension_checked(self):
        with pytest.raises(DimensionError):
            LayeredSet.make([cs_full(2)], "empty")

    def test_prefix_cap(self):
        from ordcopies.errors import CapError

        with pytest.raises(CapError):
            LayeredSet.make(["empty"] * 30 + ["full"], "empty")


class TestLevelSets:
    def test_full_tower(self):
        for m in (0, 3, 7):
            assert ls_s_set(FULL, m) == FinCof.cofinite(range(m))

    def test_empty(self):
        assert ls_s_set(EMPTY, 3) == FinCof.finite()

    def test_single_full_column(self):
        a = LayeredSet.make(["empty"] * 5 + ["full"], "empty")
        assert ls_s_set(a, 3) == FinCof.finite({5})
        assert ls_s_set(a, 7) == FinCof.finite()

    def test_periodic_result_stays_exact(self):
        s = ls_s_set(EVEN_COLUMNS, 0)
        assert isinstance(s, CubeSet)
        assert s == EVENS

    @given(layered_sets(cyclic_tails=False))
    @settings(max_examples=60)
    def test_uniform_tails_give_fincof(self, a):
        for m in range(4):
            assert isinstance(ls_s_set(a, m), FinCof)

    def test_laws_sample(self):
        result = check_level_set_laws(samples=60)
        assert result.ok, result.detail


class TestSupport:
    def test_full(self):
        assert ls_supp(FULL) == FinCof.cofinite()

    def test_empty(self):
        assert ls_supp(EMPTY) == FinCof.finite()

    def test_point_column(self):
        point = CubeSet.node(
            [CubeSet.node([CubeSet.leaf(1)], [CubeSet.leaf(0)])], [cs_empty(1)]
        )
        a = LayeredSet.make([cs_empty(1), point], "empty")
        assert ls_supp(a) == FinCof.finite({1})


class TestIdealMembership:
    def test_prefix_only_set(self):
        assert ls_in_ideal(LayeredSet.make([cs_full(1), "full"], "empty"))

    def test_full_tower_positive(self):
        assert not ls_in_ideal(FULL)

    def test_full_tail_with_cleared_prefix(self):
        assert not ls_in_ideal(LayeredSet.make(["empty"] * 3, "full"))

    def test_consistency_sample(self):
        result = check_ideal_consistency(samples=80)
        assert result.ok, result.detail


class TestIdealInclusion:
    def test_pointwise_subset(self):
        a = LayeredSet.make(["full", "full"], "full")
        assert ls_subset_ideal(a, FULL)

    def test_full_vs_prefix_only(self):
        assert not ls_subset_ideal(FULL, LayeredSet.make(["full", "full"], "empty"))

    def test_one_column_difference(self):
        minus3 = LayeredSet.make(["full"] * 3 + ["empty"], "full")
        assert ls_subset_ideal(FULL, minus3)

    @given(layered_sets(), layered_sets())
    @settings(max_examples=60)
    def test_matches_level_set_witness(self, a, b):
        diff = ls_diff(a, b)
        bound = len(diff.prefix) + 2
        witnessed = any(cs_is_empty(s_set_natset(diff, m)) for m in range(bound))
        assert ls_subset_ideal(a, b) == witnessed


class TestReduction:
    def test_whole_line_reduces_full(self):
        assert ls_is_reduction(FinCof.cofinite(), FULL, 8)

    def test_evens_reduce_full(self):
        assert ls_is_reduction(EVENS, FULL, 10)

    def test_whole_line_fails_even_columns(self):
        assert not ls_is_reduction(FinCof.cofinite(), EVEN_COLUMNS, 1)

    def test_requires_positive_target(self):
        with pytest.raises(IdealError):
            ls_is_reduction(FinCof.cofinite(), EMPTY, 3)


class TestFusion:
    def test_all_full_r2(self):
        result = ls_fusion([FULL, FULL, FULL], FinCof.cofinite())
        assert result == LayeredSet.make(["empty", "empty"], "full")

    def test_single_full_with_evens(self):
        result = ls_fusion([FULL], EVENS)
        assert result == EVEN_COLUMNS

    def test_tail_of_line(self):
        result = ls_fusion([FULL, FULL], FinCof.cofinite(range(5)))
        assert result == LayeredSet.make(["empty"] * 5, "full")

    def test_rejects_finite_index(self):
        with pytest.raises(IdealError):
            ls_fusion([FULL], FinCof.finite({1, 2, 3}))

    def test_reports_ideal_input(self):
        with pytest.raises(FusionPreconditionError) as exc:
            ls_fusion([FULL, EMPTY], FinCof.cofinite())
        assert exc.value.n == 1

    def test_reports_failing_level(self):
        odd_columns = LayeredSet.make((), (False, True))
        with pytest.raises(FusionPreconditionError) as exc:
            ls_fusion([FULL, odd_columns], FinCof.cofinite())
        assert (exc.value.m, exc.value.n) == (0, 1)

    def test_claims_sample(self):
        result = check_fusion_claims(samples=40)
        assert result.ok, result.detail

    def test_output_positive_and_nested(self):
        rng = random.Random(7)
        for _ in range(20):
            sets, index = random_fusion_instance(rng)
            inner = ls_fusion(sets[:-1], index)
            outer = ls_fusion(sets, index)
            assert not ls_in_ideal(inner)
            assert not ls_in_ideal(outer)
            assert ls_subset_ideal(outer, inner)


class TestOrderType:
    def test_full_tower(self):
        assert ls_order_type(FULL) == OMEGA_OMEGA

    def test_two_full_columns(self):
        assert ls_order_type(LayeredSet.make(["full", "full"], "empty")) == o("w^(2)")

    def test_empty(self):
        assert ls_order_type(EMPTY) == 0

    @given(layered_sets())
    @settings(max_examples=80)
    def test_collapse_iff_positive(self, a):
        assert (ls_order_type(a) == OMEGA_OMEGA) == (not ls_in_ideal(a))


class TestJson:
    def test_schema_documents(self):
        doc = {"prefix": [], "tail": "full"}
        assert layered_from_json(doc) == FULL
        cyclic = {"prefix": [], "tail": ["full", "empty"]}
        assert layered_from_json(cyclic) == EVEN_COLUMNS

    def test_cube_columns(self):
        doc = {
            "prefix": [{"dim": 1, "prefix": [1], "cycle": [0]}],
            "tail": "empty",
        }
        a = layered_from_json(doc)
        assert ls_supp(a) == FinCof.finite({0})

    @given(layered_sets())
    @settings(max_examples=60)
    def test_round_trip(self, a):
        assert layered_from_json(layered_to_json(a)) == a

    def test_rejects(self):
        with pytest.raises(SchemaError):
            layered_from_json({"prefix": []})
        with pytest.raises(SchemaError):
            layered_from_json({"prefix": [], "tail": "sometimes"})
