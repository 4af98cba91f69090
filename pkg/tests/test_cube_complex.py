"""
Tests for the cube complex: cells, incidence, coloring.
"""

from math import comb

import pytest

from core.cube_complex import (
    Bicolor,
    CubeCell,
    Parity,
    cell_boundary,
    cell_count,
    cell_vertices,
    cofaces,
    contains,
    edge_between,
    edge_color,
    edge_endpoints,
    enumerate_cells,
    face_bicolor,
    hypercube_graph,
    opposite_facet,
    parse_cell,
    relabel_coordinates,
    square_corners,
    square_edges_at,
    squares_with_bicolor,
    vertex,
    vertex_parity,
)
from core.errors import DomainError


class TestCubeCell:
    """Tests for CubeCell construction and rendering."""

    def test_debug_form(self):
        """Test the debug string puts '*' at active coordinates."""
        f = CubeCell.from_coordinates(5, [1, 3], fixed=0b00010)
        assert str(f) == "2-face[n=5; active={1,3}; fixed=*0*10]"

    def test_parse_inverts_str(self):
        """Test parse_cell reads back the debug form."""
        f = CubeCell.from_coordinates(5, [1, 3], fixed=0b00010)
        assert parse_cell(str(f)) == f

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_parse_every_cell(self, n):
        """Test the debug form reads back to the same cell for every cell of H_n."""
        for k in range(n + 1):
            for c in enumerate_cells(n, k):
                assert parse_cell(str(c)) == c

    def test_parse_rejects_mismatched_stars(self):
        """Test active set and '*' positions must agree."""
        with pytest.raises(DomainError):
            parse_cell("2-face[n=5; active={1,3}; fixed=01*0*]")

    def test_fixed_bits_on_active_coordinate_rejected(self):
        """Test a fixed bit under an active coordinate is invalid."""
        with pytest.raises(DomainError):
            CubeCell(3, 0b100, 0b100)

    def test_dimension_cap(self):
        """Test n above the cap is refused."""
        with pytest.raises(DomainError):
            CubeCell(25, 0, 0)

    def test_vertex_from_string(self):
        """Test the leftmost character is coordinate 1."""
        v = vertex(4, "1000")
        assert v.bit(1) == 1
        assert v.bit(4) == 0


class TestEnumerateCells:
    """Tests for enumerate_cells and cell_count."""

    @pytest.mark.parametrize("n", range(2, 11))
    def test_counts(self, n):
        """Test C(n,k) * 2^(n-k) cells of each dimension."""
        for k in range(n + 1):
            assert len(enumerate_cells(n, k)) == comb(n, k) * 2 ** (n - k)
            assert cell_count(n, k) == comb(n, k) * 2 ** (n - k)

    def test_canonical_order(self):
        """Test cells come sorted by (active set, fixed word)."""
        cells = enumerate_cells(4, 2)
        assert cells == sorted(cells)
        assert cells[0].active == (1, 2)

    def test_squares_of_h3(self):
        """Test H_3 has six squares."""
        assert len(enumerate_cells(3, 2)) == 6

    def test_cell_count_at_cap(self):
        """Test counting works at the cap without enumeration."""
        assert cell_count(24, 0) == 2 ** 24

    def test_bad_k(self):
        """Test k outside 0..n is refused."""
        with pytest.raises(DomainError):
            enumerate_cells(3, 4)

    def test_bicolor_class_size(self):
        """Test each bicolor class has 2^(n-2) squares."""
        for n in range(3, 8):
            assert len(squares_with_bicolor(n, Bicolor(1, 2))) == 2 ** (n - 2)


class TestCellBoundary:
    """Tests for cell_boundary and related incidence."""

    def test_square_cyclic_order(self):
        """Test the four edges run c00 -> c10 -> c11 -> c01."""
        f = CubeCell.from_coordinates(3, [1, 2], fixed=0)
        edges = cell_boundary(f)
        assert [edge_color(e) for e in edges] == [1, 2, 1, 2]
        corners = square_corners(f)
        for k, e in enumerate(edges):
            assert set(edge_endpoints(e)) == {corners[k], corners[(k + 1) % 4]}

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_consecutive_edges_meet(self, n):
        """Test consecutive boundary edges of every square share a corner."""
        for f in enumerate_cells(n, 2):
            edges = cell_boundary(f)
            assert len(edges) == 4
            for k, e in enumerate(edges):
                nxt = edges[(k + 1) % 4]
                assert set(edge_endpoints(e)) & set(edge_endpoints(nxt))

    def test_vertex_has_no_boundary(self):
        """Test vertices are refused."""
        with pytest.raises(DomainError):
            cell_boundary(vertex(3, 0))

    def test_cube_boundary(self):
        """Test a 3-cell has 6 facets, all squares."""
        c = enumerate_cells(3, 3)[0]
        facets = cell_boundary(c)
        assert len(facets) == 6
        assert all(f.dim == 2 for f in facets)

    def test_boundary_is_contained(self):
        """Test every facet is a face of its cell."""
        for f in enumerate_cells(4, 2):
            assert all(contains(f, e) for e in cell_boundary(f))

    def test_square_edges_at_corner(self):
        """Test the two edges at a corner have the square's two colors."""
        f = CubeCell.from_coordinates(4, [2, 4], fixed=0b1000)
        v = square_corners(f)[2]
        a, b = square_edges_at(f, v)
        assert {edge_color(a), edge_color(b)} == {2, 4}
        assert v in edge_endpoints(a) and v in edge_endpoints(b)

    def test_edge_between(self):
        """Test the edge joining adjacent vertices."""
        u, w = vertex(3, "010"), vertex(3, "011")
        e = edge_between(u, w)
        assert edge_color(e) == 3
        assert edge_endpoints(e) == (u, w)

    def test_edge_between_non_adjacent(self):
        """Test non-adjacent vertices are refused."""
        with pytest.raises(DomainError):
            edge_between(vertex(3, "000"), vertex(3, "011"))

    def test_cell_vertices(self):
        """Test a square has 4 corner vertices."""
        f = enumerate_cells(5, 2)[7]
        assert sorted(square_corners(f)) == cell_vertices(f)


class TestCofaces:
    """Tests for cofaces and opposite_facet."""

    def test_vertex_facets(self):
        """Test n facets pass through every vertex of H_n."""
        assert len(cofaces(vertex(5, 0), 4)) == 5

    def test_two_facets_share_a_three_face(self):
        """Test a 3-face of H_5 lies in exactly two facets."""
        c = enumerate_cells(5, 3)[0]
        assert len(cofaces(c, 4)) == 2

    @pytest.mark.parametrize("n", range(2, 9))
    def test_edge_in_n_minus_one_squares(self, n):
        """Test every edge of H_n lies in exactly n-1 squares."""
        degree = {}
        for f in enumerate_cells(n, 2):
            for e in cell_boundary(f):
                degree[e] = degree.get(e, 0) + 1
        edges = enumerate_cells(n, 1)
        assert sorted(degree) == sorted(edges)
        for e in edges:
            assert degree[e] == n - 1
            assert len(cofaces(e, 2)) == n - 1

    def test_opposite_facet(self):
        """Test the opposite facet flips the fixed coordinate."""
        facet = CubeCell.from_coordinates(3, [1, 2], fixed=0)
        opposite = opposite_facet(facet)
        assert opposite.active == (1, 2)
        assert opposite.bit(3) == 1


class TestColoring:
    """Tests for edge_color, face_bicolor and vertex_parity."""

    def test_face_bicolor(self):
        """Test the bicolor of a square is its active pair."""
        f = CubeCell.from_coordinates(5, [2, 5], fixed=0)
        assert face_bicolor(f) == Bicolor(2, 5)

    def test_parity(self):
        """Test black vertices have an odd number of 1's."""
        assert vertex_parity(vertex(4, "0111")) == Parity.BLACK
        assert vertex_parity(vertex(4, "0110")) == Parity.WHITE

    def test_edge_color_needs_edge(self):
        """Test edge_color refuses squares."""
        with pytest.raises(DomainError):
            edge_color(enumerate_cells(3, 2)[0])

    def test_edges_join_opposite_parities(self):
        """Test Q_n is bipartite with the parity classes."""
        graph = hypercube_graph(4)
        assert graph.number_of_nodes() == 16
        assert graph.number_of_edges() == 32
        for u, w in graph.edges():
            assert graph.nodes[u]["parity"] != graph.nodes[w]["parity"]

    def test_relabel_preserves_parity(self):
        """Test a coordinate permutation keeps popcount."""
        mapping = (3, 1, 4, 2)
        for v in enumerate_cells(4, 0):
            assert vertex_parity(relabel_coordinates(v, mapping)) == vertex_parity(v)
