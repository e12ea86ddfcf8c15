import pytest
from hypothesis import given, strategies as st

from kostant.diagram import catalog_diagram, custom_diagram, iter_catalog
from kostant.roots import (
    NonFiniteTypeError,
    NotCrystallographicError,
    height,
    highest_root,
    i_height,
    pairing,
    positive_coroots,
    positive_roots,
    reflect,
    roots_outside,
    roots_supported_on,
)
from kostant.weyl import WeylGroup

from oracles import positive_coroot_coefficients, positive_root_coefficients

EUCLIDEAN_CASES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4), ("B", 5),
    ("C", 3), ("C", 4), ("C", 5),
    ("D", 4), ("D", 5), ("F", 4), ("G", 2),
]

SMALL_DIAGRAMS = st.sampled_from(
    [(f, r) for f, r in EUCLIDEAN_CASES if r <= 4]
)


class TestPositiveRoots:
    def test_a2_has_the_three_expected_roots(self):
        assert positive_roots(catalog_diagram("A", 2)) == ((0, 1), (1, 0), (1, 1))

    def test_d4_has_twelve(self):
        assert len(positive_roots(catalog_diagram("D", 4))) == 12

    def test_f4_count_against_group_oracle(self):
        f4 = catalog_diagram("F", 4)
        roots = positive_roots(f4)
        assert len(roots) == 24
        W = WeylGroup(f4)
        assert len(W) == 1152
        assert W.longest_element().length == 24

    @pytest.mark.parametrize("family,rank", EUCLIDEAN_CASES)
    def test_matches_euclidean_coordinates(self, family, rank):
        computed = set(positive_roots(catalog_diagram(family, rank)))
        assert computed == positive_root_coefficients(family, rank)

    def test_sorted_by_height_then_lex(self):
        roots = positive_roots(catalog_diagram("B", 3))
        keys = [(height(r), r) for r in roots]
        assert keys == sorted(keys)

    def test_refuses_non_crystallographic(self):
        star = custom_diagram(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
        with pytest.raises(NotCrystallographicError):
            positive_roots(star)

    def test_cap_raises_non_finite_error(self):
        with pytest.raises(NonFiniteTypeError):
            positive_roots(catalog_diagram("F", 4), cap=5)


class TestPositiveCoroots:
    def test_a2_self_dual(self):
        a2 = catalog_diagram("A", 2)
        assert positive_coroots(a2) == positive_roots(a2)

    def test_b2_coroots_are_c2_roots(self):
        b2 = catalog_diagram("B", 2)
        assert set(positive_coroots(b2)) == {(1, 0), (0, 1), (1, 1), (2, 1)}

    def test_g2_has_six(self):
        assert len(positive_coroots(catalog_diagram("G", 2))) == 6

    @pytest.mark.parametrize("family,rank", EUCLIDEAN_CASES)
    def test_matches_euclidean_coordinates(self, family, rank):
        computed = set(positive_coroots(catalog_diagram(family, rank)))
        assert computed == positive_coroot_coefficients(family, rank)

    def test_equals_roots_of_dual(self):
        for d in iter_catalog(4):
            assert positive_coroots(d) == positive_roots(d.dual())


class TestHeights:
    def test_i_height_full(self):
        assert i_height((1, 1), {1, 2}) == 2

    def test_i_height_partial(self):
        assert i_height((1, 1), {1}) == 1
        assert i_height((0, 1), {1}) == 0

    def test_support_filters(self):
        roots = positive_roots(catalog_diagram("A", 3))
        inside = roots_supported_on(roots, {1, 2})
        outside = roots_outside(roots, {1, 2})
        assert set(inside) | set(outside) == set(roots)
        assert {(1, 0, 0), (0, 1, 0), (1, 1, 0)} == set(inside)


class TestReflections:
    def test_simple_root_goes_negative(self):
        a2 = catalog_diagram("A", 2).cartan()
        assert reflect(a2, (1, 0), 1) == (-1, 0)

    def test_s2_of_alpha1_in_a2(self):
        a2 = catalog_diagram("A", 2).cartan()
        assert reflect(a2, (1, 0), 2) == (1, 1)

    def test_double_application_returns(self):
        a2 = catalog_diagram("A", 2).cartan()
        assert reflect(a2, reflect(a2, (1, 1), 1), 1) == (1, 1)

    @given(SMALL_DIAGRAMS, st.data())
    def test_involution_on_arbitrary_vectors(self, case, data):
        family, rank = case
        cartan = catalog_diagram(family, rank).cartan()
        vec = tuple(
            data.draw(st.integers(min_value=-4, max_value=4), label="coeff")
            for _ in range(rank)
        )
        i = data.draw(st.integers(min_value=1, max_value=rank), label="vertex")
        assert reflect(cartan, reflect(cartan, vec, i), i) == vec

    def test_closure_stays_positive_except_the_simple_itself(self):
        for d in iter_catalog(4):
            cartan = d.cartan()
            pos = set(positive_roots(d))
            for root in pos:
                for i in range(1, d.n + 1):
                    image = reflect(cartan, root, i)
                    simple = tuple(int(j == i - 1) for j in range(d.n))
                    if root == simple:
                        assert image == tuple(-x for x in simple)
                    else:
                        assert image in pos

    def test_pairing_of_simple_with_own_coroot_is_two(self):
        for d in iter_catalog(4):
            cartan = d.cartan()
            for i in range(1, d.n + 1):
                simple = tuple(int(j == i - 1) for j in range(d.n))
                assert pairing(cartan, simple, i) == 2


class TestClassicalIdentities:
    def test_root_count_equals_longest_length_up_to_rank_six(self):
        for d in iter_catalog(6):
            W = WeylGroup(d)
            assert len(positive_roots(d)) == W.longest_element().length, d.label

    def test_pairing_sum_over_positive_roots_is_two(self):
        # for every simple root beta: sum over positive roots of the pairing
        for d in iter_catalog(6):
            cartan = d.cartan()
            roots = positive_roots(d)
            for beta in range(1, d.n + 1):
                assert sum(pairing(cartan, a, beta) for a in roots) == 2, (
                    d.label,
                    beta,
                )

    def test_root_strings_are_intervals(self):
        for d in iter_catalog(4):
            pos = positive_roots(d)
            full = {r for r in pos} | {tuple(-x for x in r) for r in pos}
            for alpha in full:
                for beta in full:
                    if beta == alpha or beta == tuple(-x for x in alpha):
                        continue
                    hits = [
                        k
                        for k in range(-6, 7)
                        if tuple(b + k * a for a, b in zip(alpha, beta)) in full
                    ]
                    assert hits == list(range(min(hits), max(hits) + 1)), (
                        d.label,
                        alpha,
                        beta,
                    )

    def test_highest_root_examples(self):
        assert highest_root(catalog_diagram("A", 2)) == (1, 1)
        assert highest_root(catalog_diagram("D", 4)) == (1, 2, 1, 1)
        assert highest_root(catalog_diagram("F", 4)) == (2, 3, 4, 2)
        assert highest_root(catalog_diagram("G", 2)) == (3, 2)
