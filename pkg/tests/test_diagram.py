import json

import pytest

from kostant.diagram import (
    CartanMatrix,
    DiagramError,
    catalog_diagram,
    custom_diagram,
    diagram_from_json,
    iter_catalog,
)


class TestCatalog:
    def test_a2_is_a_simply_laced_edge(self):
        d = catalog_diagram("A", 2)
        assert d.n == 2
        assert d.arrows(1, 2) == 1 and d.arrows(2, 1) == 1

    def test_f4_double_edge_points_long_to_short(self):
        d = catalog_diagram("F", 4)
        assert list(d.edge_pairs()) == [(1, 2), (2, 3), (3, 4)]
        # two arrows from the long vertex 2 into the short vertex 3
        assert d.arrows(2, 3) == 2 and d.arrows(3, 2) == 1
        assert d.arrows(1, 2) == d.arrows(2, 1) == 1
        assert d.ascii_art() == "o--o=>o--o"

    def test_g2_edge_product_is_three(self):
        d = catalog_diagram("G", 2)
        assert d.arrows(1, 2) * d.arrows(2, 1) == 3

    def test_bn_arrow_into_short_terminal_and_cn_reverse(self):
        b3 = catalog_diagram("B", 3)
        assert b3.arrows(2, 3) == 2 and b3.arrows(3, 2) == 1
        c3 = catalog_diagram("C", 3)
        assert c3.arrows(2, 3) == 1 and c3.arrows(3, 2) == 2
        assert c3.inbound == b3.dual().inbound

    def test_d4_center_is_vertex_two(self):
        d = catalog_diagram("D", 4)
        assert d.neighbors(2) == (1, 3, 4)

    def test_e_series_fork(self):
        e6 = catalog_diagram("E", 6)
        assert e6.neighbors(4) == (2, 3, 5)
        assert e6.neighbors(2) == (4,)

    @pytest.mark.parametrize(
        "family,rank",
        [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("Z", 2)],
    )
    def test_invalid_pairs_rejected(self, family, rank):
        with pytest.raises(DiagramError):
            catalog_diagram(family, rank)

    def test_iter_catalog_skips_c2(self):
        labels = [d.label for d in iter_catalog(4)]
        assert labels == [
            "A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4",
        ]


class TestCartan:
    def test_a2(self):
        assert catalog_diagram("A", 2).cartan().rows == ((2, -1), (-1, 2))

    def test_a1(self):
        assert catalog_diagram("A", 1).cartan().rows == ((2,),)

    def test_b2_rows_follow_the_arrow_convention(self):
        # vertex 1 long, double arrow 1 => 2, so <alpha_1, alpha_2^vee> = -2
        assert catalog_diagram("B", 2).cartan().rows == ((2, -2), (-1, 2))

    def test_f4(self):
        assert catalog_diagram("F", 4).cartan().rows == (
            (2, -1, 0, 0),
            (-1, 2, -2, 0),
            (0, -1, 2, -1),
            (0, 0, -1, 2),
        )

    def test_transpose_matches_dual_diagram(self):
        for d in iter_catalog(4):
            assert d.cartan().transpose().rows == d.dual().cartan().rows

    def test_entry_accessor_is_one_based(self):
        c = catalog_diagram("B", 2).cartan()
        assert c.entry(1, 2) == -2 and c.entry(2, 1) == -1

    def test_array_is_numpy(self):
        arr = catalog_diagram("A", 3).cartan().array
        assert arr.shape == (3, 3) and arr[0, 0] == 2

    def test_malformed_matrices_rejected(self):
        with pytest.raises(DiagramError):
            CartanMatrix(((2, -1), (0, 2)))  # asymmetric zero pattern
        with pytest.raises(DiagramError):
            CartanMatrix(((1,),))  # bad diagonal
        with pytest.raises(DiagramError):
            CartanMatrix(((2, 1), (1, 2)))  # positive off-diagonal


class TestCustom:
    def test_affine_star_accepted_but_not_crystallographic(self):
        star = custom_diagram(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
        assert star.n == 5
        assert star.neighbors(1) == (2, 3, 4, 5)
        assert not star.is_crystallographic

    def test_single_vertex_is_valid(self):
        d = custom_diagram(1, [])
        assert d.is_crystallographic

    def test_missing_reverse_edge_defaults_to_single_arrow(self):
        d = custom_diagram(2, [(1, 2, 1)])
        assert d.arrows(1, 2) == 1 and d.arrows(2, 1) == 1

    def test_self_loop_rejected(self):
        with pytest.raises(DiagramError):
            custom_diagram(2, [(1, 1, 1)])

    def test_one_sided_edge_rejected(self):
        with pytest.raises(DiagramError):
            custom_diagram(2, [(1, 2, 2), (2, 1, 0)])

    def test_duplicate_records_rejected(self):
        with pytest.raises(DiagramError):
            custom_diagram(2, [(1, 2, 1), (1, 2, 2)])

    def test_out_of_range_vertices_rejected(self):
        with pytest.raises(DiagramError):
            custom_diagram(2, [(1, 3, 1)])

    def test_relabeled_catalog_shape_counts_as_crystallographic(self):
        # the A3 path written out of index order
        d = custom_diagram(3, [(2, 1), (1, 3)])
        assert d.is_crystallographic

    def test_edge_product_above_three_flagged(self):
        d = custom_diagram(2, [(1, 2, 2), (2, 1, 2)])
        assert not d.is_crystallographic

    def test_all_catalog_diagrams_are_crystallographic(self):
        for d in iter_catalog(6):
            assert d.is_crystallographic, d.label


class TestSerialization:
    def test_json_round_trip(self):
        for d in iter_catalog(4):
            again = diagram_from_json(d.to_json())
            assert again == d

    def test_omitted_reverse_direction_defaults_to_one(self):
        d = diagram_from_json(
            json.dumps({"n": 2, "edges": [{"from": 1, "to": 2, "arrows": 2}], "label": "x"})
        )
        assert d.arrows(1, 2) == 2 and d.arrows(2, 1) == 1

    def test_malformed_json_rejected(self):
        with pytest.raises(DiagramError):
            diagram_from_json("{}")


class TestDual:
    def test_involution(self):
        for d in iter_catalog(4):
            assert d.dual().dual().inbound == d.inbound

    def test_b_and_c_swap_labels(self):
        assert catalog_diagram("B", 3).dual().label == "C3"
        assert catalog_diagram("C", 3).dual().label == "B3"

    def test_simply_laced_self_dual(self):
        d = catalog_diagram("D", 4)
        assert d.dual() == d
