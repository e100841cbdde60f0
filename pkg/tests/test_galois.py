import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgreflect import (
    SGR_TO_BAND,
    SGR_TO_SLAT,
    check_localization_condition,
    check_products_preserved,
    check_semi_left_exact,
    check_simple,
    check_stable_units_pair,
    connected_component,
    connected_components,
    enumerate_homomorphisms,
    fiber_injectivity_lemma,
    idempotents,
    is_connected,
    oracle_pullback_preserved,
    oracle_semi_left_exact,
    oracle_stable_units,
    point_map,
    pullback,
    reflect,
)
from sgreflect.errors import CorpusMissing, NotSurjective
from sgreflect.galois import PropertyReport

from conftest import EMPTY, L2, S2, T, Z2


def sle_counterexamples(members, V):
    out = []
    for C in members:
        rep = check_semi_left_exact(C, V)
        if not rep.verdict:
            out.append((C, rep))
    return out


@pytest.fixture(scope="module")
def band_witnesses(corpus4):
    return sle_counterexamples(corpus4, SGR_TO_BAND)


class TestConnectedComponents:
    def test_semilattice_has_singleton_fibers(self):
        comps = connected_components(S2, SGR_TO_SLAT)
        assert [(c.point, c.inclusion.map) for c in comps] == [(0, (0,)), (1, (1,))]

    def test_group_is_a_single_component(self):
        comps = connected_components(Z2, SGR_TO_SLAT)
        assert len(comps) == 1
        assert comps[0].carrier == Z2

    def test_left_zero_is_a_single_component(self):
        comps = connected_components(L2, SGR_TO_SLAT)
        assert len(comps) == 1
        assert comps[0].carrier == L2

    def test_component_equals_unit_point_pullback(self, corpus3):
        for V in (SGR_TO_SLAT, SGR_TO_BAND):
            for C in corpus3:
                r = reflect(C, V)
                for m in r.image.elements:
                    comp = connected_component(C, V, m)
                    cone = pullback(r.unit, point_map(r.image, m))
                    assert comp.carrier.table == cone.apex.table
                    assert comp.inclusion.map == cone.legs[0].map

    def test_fibers_partition_the_elements(self, corpus3):
        for V in (SGR_TO_SLAT, SGR_TO_BAND):
            for C in corpus3:
                seen = []
                for comp in connected_components(C, V):
                    seen.extend(comp.inclusion.map)
                assert sorted(seen) == list(C.elements)

    def test_point_out_of_range(self):
        with pytest.raises(ValueError):
            connected_component(Z2, SGR_TO_SLAT, 1)


class TestIsConnected:
    def test_group(self):
        assert is_connected(Z2, SGR_TO_SLAT)

    def test_empty_is_not_connected(self):
        assert not is_connected(EMPTY, SGR_TO_SLAT)

    def test_chain_is_not_connected(self):
        assert not is_connected(S2, SGR_TO_SLAT)


class TestSemiLeftExact:
    def test_group(self):
        assert check_semi_left_exact(Z2, SGR_TO_SLAT).verdict

    def test_semilattice(self):
        assert check_semi_left_exact(S2, SGR_TO_SLAT).verdict

    def test_band_reflection_has_an_order4_counterexample(self, band_witnesses):
        assert band_witnesses
        C, report = band_witnesses[0]
        assert C.order == 4
        witness = report.witnesses[0]
        assert witness["component_image_order"] > 1
        # The witness replays: its fiber really is a non-connected component.
        comp = connected_component(C, SGR_TO_BAND, witness["point"])
        assert not is_connected(comp.carrier, SGR_TO_BAND)

    def test_oracle_agreement_small(self, corpus2):
        for V in (SGR_TO_SLAT, SGR_TO_BAND):
            for C in corpus2:
                assert (check_semi_left_exact(C, V).verdict
                        == oracle_semi_left_exact(C, V, 2).verdict)

    def test_oracle_right_edge_mode_small(self, corpus2):
        for C in (Z2, S2, L2):
            for V in (SGR_TO_SLAT, SGR_TO_BAND):
                unit = oracle_semi_left_exact(C, V, 2).verdict
                right = oracle_semi_left_exact(C, V, 2, mode="right_edge").verdict
                assert unit == right

    def test_member_of_subvariety_is_trivially_preserved(self):
        assert oracle_semi_left_exact(S2, SGR_TO_SLAT, 2).verdict

    def test_bound_four_supported(self):
        assert oracle_semi_left_exact(Z2, SGR_TO_SLAT, 4).verdict

    def test_corpus_bound(self):
        with pytest.raises(CorpusMissing):
            oracle_semi_left_exact(Z2, SGR_TO_SLAT, 5)


class TestStableUnits:
    def test_group_pair(self):
        assert check_stable_units_pair(Z2, Z2, SGR_TO_SLAT).verdict

    def test_semilattice_pair(self):
        assert check_stable_units_pair(S2, S2, SGR_TO_SLAT).verdict

    def test_oracle_small(self):
        assert oracle_stable_units(S2, SGR_TO_SLAT, 2).verdict

    def test_oracle_agreement_small(self, corpus2):
        for V in (SGR_TO_SLAT, SGR_TO_BAND):
            for C in corpus2:
                pairwise = all(
                    check_stable_units_pair(C, D, V).verdict for D in corpus2)
                assert pairwise == oracle_stable_units(C, V, 2).verdict

    def test_terminal_leg_matches_sle_oracle(self, corpus2):
        # A pullback against the terminal member appears in both oracles.
        for C in corpus2:
            sle = oracle_semi_left_exact(C, SGR_TO_SLAT, 1).verdict
            su = oracle_stable_units(C, SGR_TO_SLAT, 1).verdict
            assert su == sle  # order <= 1 domain corpus is exactly the M corpus

    def test_m_base_mode_smoke(self):
        assert oracle_stable_units(Z2, SGR_TO_SLAT, 2, mode="m_base").verdict


class TestSimple:
    def test_identity_morphisms(self, corpus2):
        from sgreflect.core import Homomorphism

        for C in corpus2:
            assert check_simple(Homomorphism.identity(C), SGR_TO_SLAT).verdict

    def test_all_small_morphisms_simple_for_semilattice_reflection(self, corpus2):
        for A in corpus2:
            for B in corpus2:
                for f in enumerate_homomorphisms(A, B):
                    assert check_simple(f, SGR_TO_SLAT).verdict

    def test_band_witness_breaks_simplicity(self, band_witnesses):
        # Point the terminal object at an idempotent inside a non-connected
        # fiber; the comparison map cannot reflect to a bijection.
        C, report = band_witnesses[0]
        point = report.witnesses[0]["point"]
        unit = reflect(C, SGR_TO_BAND).unit
        bad = next(e for e in idempotents(C) if unit.map[e] == point)
        f = point_map(C, bad)
        assert not check_simple(f, SGR_TO_BAND).verdict


class TestLocalization:
    def test_identity_cospan_on_terminal(self):
        from sgreflect.core import Homomorphism

        i = Homomorphism.identity(T)
        assert check_localization_condition(i, i, SGR_TO_SLAT).verdict

    def test_disjoint_points_fail_with_empty_pullback(self):
        rep = check_localization_condition(
            point_map(S2, 0), point_map(S2, 1), SGR_TO_SLAT)
        assert not rep.verdict
        assert rep.witnesses[0]["empty"] is True

    def test_preservation_failure_at_order_two(self):
        # Two points into the left-zero semigroup: the pullback is empty but
        # both images reflect to the terminal, whose pullback is a point.
        rep = oracle_pullback_preserved(
            point_map(L2, 0), point_map(L2, 1), SGR_TO_SLAT)
        assert not rep.verdict
        w = rep.witnesses[0]
        assert w["pullback_image_order"] == 0
        assert w["image_pullback_order"] == 1

    def test_connected_component_pullbacks_satisfy_condition(self):
        # A nontrivial cospan passing the sufficient condition: the identity
        # cospan on a connected object pulls back to itself.
        from sgreflect.core import Homomorphism

        i = Homomorphism.identity(Z2)
        rep = check_localization_condition(i, i, SGR_TO_SLAT)
        assert rep.verdict
        assert oracle_pullback_preserved(i, i, SGR_TO_SLAT).verdict

    def test_identity_cospans_preserved(self, corpus2):
        from sgreflect.core import Homomorphism

        for C in corpus2:
            i = Homomorphism.identity(C)
            assert oracle_pullback_preserved(i, i, SGR_TO_SLAT).verdict

    def test_sufficient_condition_implies_preservation(self, corpus2):
        V = SGR_TO_SLAT
        implications = 0
        for C in corpus2:
            incoming = [f for A in corpus2 for f in enumerate_homomorphisms(A, C)]
            for f in incoming:
                for g in incoming:
                    if check_localization_condition(f, g, V).verdict:
                        implications += 1
                        assert oracle_pullback_preserved(f, g, V).verdict
        assert implications > 0

    def test_sufficient_condition_implies_preservation_exhaustive_order3(
            self, corpus3):
        # Every cospan among order <= 3 semigroups (~283k of them; roughly a
        # minute).  About a third satisfy the sufficient condition, and the
        # implication must never fail.
        V = SGR_TO_SLAT
        implications = 0
        for C in corpus3:
            incoming = [f for A in corpus3 for f in enumerate_homomorphisms(A, C)]
            for f in incoming:
                for g in incoming:
                    if check_localization_condition(f, g, V).verdict:
                        implications += 1
                        assert oracle_pullback_preserved(f, g, V).verdict
        assert implications > 0


class TestProductsPreserved:
    def test_terminal_factor(self, corpus2):
        for C in corpus2:
            assert check_products_preserved(C, T, SGR_TO_SLAT)
            assert check_products_preserved(T, C, SGR_TO_SLAT)

    def test_groups(self):
        assert check_products_preserved(Z2, Z2, SGR_TO_SLAT)

    def test_product_preservation_links_sle_and_stable_units(self, corpus3):
        hit = 0
        for V in (SGR_TO_SLAT, SGR_TO_BAND):
            all_products = all(
                check_products_preserved(C, D, V)
                for C in corpus3 for D in corpus3)
            if not all_products:
                continue
            hit += 1
            sle = all(check_semi_left_exact(C, V).verdict for C in corpus3)
            su = all(
                check_stable_units_pair(C, D, V).verdict
                for C in corpus3 for D in corpus3)
            assert sle == su
        assert hit  # the semilattice reflection preserves finite products


def _surjection(draw, n, m):
    tail = draw(st.lists(st.integers(0, m - 1), min_size=n - m, max_size=n - m))
    values = list(range(m)) + tail
    perm = draw(st.permutations(range(n)))
    return [values[p] for p in perm]


@st.composite
def surjection_pairs(draw):
    c = draw(st.integers(1, 6))
    b = draw(st.integers(c, 6))
    a = draw(st.integers(b, 6))
    f = _surjection(draw, a, b)
    g = _surjection(draw, b, c)
    return f, g, c


class TestFiberInjectivityLemma:
    def test_identity_functions(self):
        assert fiber_injectivity_lemma((0, 1, 2), (0, 1, 2), 3)

    def test_merging_second_function(self):
        # g is not injective and f does not collapse g's merged fiber:
        # both sides of the equivalence are false, so it still holds.
        assert fiber_injectivity_lemma((0, 1, 2), (0, 1, 1), 2)

    def test_rejects_non_surjection(self):
        with pytest.raises(NotSurjective):
            fiber_injectivity_lemma((0, 0), (0, 1), 2)
        with pytest.raises(NotSurjective):
            fiber_injectivity_lemma((0, 1), (0, 0), 2)

    @settings(max_examples=300, deadline=None)
    @given(surjection_pairs())
    def test_lemma_holds_for_random_surjections(self, fgc):
        f, g, c = fgc
        assert fiber_injectivity_lemma(f, g, c)


class TestPropertyReport:
    def test_false_verdict_requires_witness(self):
        with pytest.raises(ValueError):
            PropertyReport("slat", "semi_left_exact", False, [])

    def test_unknown_property_rejected(self):
        with pytest.raises(ValueError):
            PropertyReport("slat", "nonsense", True, [])
