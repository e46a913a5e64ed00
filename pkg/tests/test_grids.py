"""Tests for gridded permutations: 0/±1 matrices, cell graphs, monotone and
geometric grid classes, drawings, and griddability evidence."""

import pytest

from permpat import (
    GRIDDABILITY_NOTE,
    GriddedPermutation,
    SizeGuardError,
    X_MATRIX,
    ZeroPmOneMatrix,
    all_matrices,
    avoiding,
    cell_graph,
    classify,
    drawing_coordinates,
    enumerate_grid,
    enumerate_members,
    geom_member,
    grid_member,
    griddability_evidence,
    matrix_from_json,
    matrix_from_rows_top_first,
    matrix_to_json,
    minimal_nonmembers,
    validate_gridded,
)


class TestMatrixConstruction:
    def test_rows_top_first_orientation(self):
        # Cartesian indexing: entry(col, row) with row 1 at the bottom
        m = matrix_from_rows_top_first([[-1, 1], [1, -1]])
        assert m.entry(1, 1) == 1
        assert m.entry(1, 2) == -1
        assert m.entry(2, 1) == -1
        assert m.entry(2, 2) == 1

    def test_x_matrix_is_that_shape(self):
        assert X_MATRIX == matrix_from_rows_top_first([[-1, 1], [1, -1]])
        assert X_MATRIX.nonzero_cells() == ((1, 1), (1, 2), (2, 1), (2, 2))

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            ZeroPmOneMatrix(1, 1, ((2,),))

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            ZeroPmOneMatrix(2, 1, ((1,),))
        with pytest.raises(ValueError):
            matrix_from_rows_top_first([[1, 1], [1]])
        with pytest.raises(ValueError):
            matrix_from_rows_top_first([])

    def test_entry_bounds(self):
        with pytest.raises(IndexError):
            X_MATRIX.entry(3, 1)
        with pytest.raises(IndexError):
            X_MATRIX.entry(1, 0)

    def test_json_roundtrip(self):
        data = matrix_to_json(X_MATRIX)
        assert data == {"cols": 2, "rows": 2, "entries": [[-1, 1], [1, -1]]}
        assert matrix_from_json(data) == X_MATRIX

    def test_json_accepts_string(self):
        text = '{"cols": 1, "rows": 1, "entries": [[-1]]}'
        assert matrix_from_json(text) == matrix_from_rows_top_first([[-1]])

    def test_json_shape_mismatch(self):
        with pytest.raises(ValueError):
            matrix_from_json({"cols": 3, "rows": 2, "entries": [[-1, 1], [1, -1]]})

    def test_all_matrices_counts(self):
        assert len(list(all_matrices(1, 1))) == 3
        # 1x1 (3) + 1x2 (9) + 2x1 (9) + 2x2 (81)
        assert len(list(all_matrices(2, 2))) == 102


class TestCellGraph:
    def test_x_matrix_gives_four_cycle(self):
        g = cell_graph(X_MATRIX)
        assert g.n == 4
        assert g.labels == ((1, 1), (1, 2), (2, 1), (2, 2))
        assert sorted(g.edges) == [(1, 2), (1, 3), (2, 4), (3, 4)]
        assert classify(g)["is_cycle"]

    def test_zero_cells_do_not_block_edges(self):
        g = cell_graph(matrix_from_rows_top_first([[1, 0, 1]]))
        assert g.n == 2
        assert sorted(g.edges) == [(1, 2)]

    def test_nonzero_cell_between_blocks_edge(self):
        g = cell_graph(matrix_from_rows_top_first([[1, 1, 1]]))
        assert sorted(g.edges) == [(1, 2), (2, 3)]

    def test_single_cell(self):
        g = cell_graph(matrix_from_rows_top_first([[-1]]))
        assert g.n == 1
        assert g.edges == frozenset()


class TestMonotoneGridding:
    def test_member_witness(self):
        gp = grid_member((3, 1, 4, 2), X_MATRIX)
        assert gp is not None
        assert gp.perm == (3, 1, 4, 2)
        assert validate_gridded(gp, X_MATRIX)

    def test_nonmember(self):
        assert grid_member((2, 1, 4, 3), X_MATRIX) is None

    def test_every_witness_validates(self):
        for n in range(1, 6):
            for pi in enumerate_grid(X_MATRIX, n, "monotone"):
                assert validate_gridded(grid_member(pi, X_MATRIX), X_MATRIX)

    def test_counts(self):
        got = [len(enumerate_grid(X_MATRIX, n, "monotone")) for n in range(1, 7)]
        assert got == [1, 2, 6, 22, 86, 340]

    def test_class_is_av_2143_3412(self):
        c = avoiding((2, 1, 4, 3), (3, 4, 1, 2))
        for n in range(1, 6):
            assert enumerate_grid(X_MATRIX, n, "monotone") == enumerate_members(c, n)

    def test_basis_recovered(self):
        found = minimal_nonmembers(
            lambda p: grid_member(p, X_MATRIX) is not None, 5
        )
        assert found == ((2, 1, 4, 3), (3, 4, 1, 2))

    def test_validate_rejects_garbled_cells(self):
        # column assignment must be weakly increasing with position
        gp = GriddedPermutation((1, 2), ((2, 2), (1, 1)))
        assert not validate_gridded(gp, X_MATRIX)

    def test_validate_rejects_zero_cell(self):
        m = matrix_from_rows_top_first([[0, 1]])
        gp = GriddedPermutation((1,), ((1, 1),))
        assert not validate_gridded(gp, m)

    def test_cells_length_checked(self):
        with pytest.raises(ValueError):
            GriddedPermutation((1, 2), ((1, 1),))


class TestGeometricGridding:
    def test_counts(self):
        got = [len(enumerate_grid(X_MATRIX, n, "geometric")) for n in range(1, 7)]
        assert got == [1, 2, 6, 20, 68, 232]

    def test_difference_at_four(self):
        mono = set(enumerate_grid(X_MATRIX, 4, "monotone"))
        geo = set(enumerate_grid(X_MATRIX, 4, "geometric"))
        assert mono - geo == {(2, 4, 1, 3), (3, 1, 4, 2)}
        assert geo <= mono

    def test_known_members_and_nonmembers(self):
        assert geom_member((1, 2, 3, 4), X_MATRIX) is not None
        assert geom_member((3, 1, 4, 2), X_MATRIX) is None
        assert geom_member((2, 4, 1, 3), X_MATRIX) is None
        assert geom_member((2, 1, 4, 3), X_MATRIX) is None

    def test_class_is_skew_merged_and_separable(self):
        c = avoiding((2, 1, 4, 3), (3, 4, 1, 2), (2, 4, 1, 3), (3, 1, 4, 2))
        for n in range(1, 6):
            assert enumerate_grid(X_MATRIX, n, "geometric") == enumerate_members(c, n)

    def test_basis_recovered(self):
        found = minimal_nonmembers(
            lambda p: geom_member(p, X_MATRIX) is not None, 5
        )
        assert found == (
            (2, 1, 4, 3),
            (2, 4, 1, 3),
            (3, 1, 4, 2),
            (3, 4, 1, 2),
        )

    def test_witness_gridding_validates(self):
        gp, params = geom_member((1, 3, 2), X_MATRIX)
        assert validate_gridded(gp, X_MATRIX)
        assert len(params) == 3

    def test_single_negative_cell(self):
        gp, params = geom_member((3, 2, 1), matrix_from_rows_top_first([[-1]]))
        assert gp.cells == ((1, 1), (1, 1), (1, 1))


class TestDrawings:
    def _assert_faithful(self, pi, m):
        gp, params = geom_member(pi, m)
        pts = drawing_coordinates(gp, m, params)
        for i in range(len(pi)):
            for j in range(i + 1, len(pi)):
                assert pts[i][0] < pts[j][0]
                assert (pts[i][1] < pts[j][1]) == (pi[i] < pi[j])

    def test_points_realize_the_permutation(self):
        self._assert_faithful((2, 1, 3), X_MATRIX)
        self._assert_faithful((1, 4, 2, 3), X_MATRIX)
        self._assert_faithful((4, 3, 2, 1), X_MATRIX)

    def test_parameters_stay_inside_cells(self):
        gp, params = geom_member((2, 1, 3), X_MATRIX)
        assert all(0 < t < 1 for t in params)


class TestBoundaryRegression:
    """Where monotone and geometric memberships first part ways, over every
    matrix with at most two columns and rows (frozen empirical data)."""

    @staticmethod
    def _first_difference(m, nmax):
        for n in range(1, nmax + 1):
            if enumerate_grid(m, n, "monotone") != enumerate_grid(m, n, "geometric"):
                return n
        return None

    def test_forest_matrices_agree(self):
        forest = [m for m in all_matrices(2, 2) if classify(cell_graph(m))["is_forest"]]
        assert len(forest) == 86
        for m in forest:
            assert self._first_difference(m, 4) is None

    def test_non_forest_boundary(self):
        nonforest = [
            m for m in all_matrices(2, 2) if not classify(cell_graph(m))["is_forest"]
        ]
        # only the all-nonzero 2x2 matrices have a cycle in the cell graph
        assert len(nonforest) == 16
        assert all(m.nonzero_cells() == ((1, 1), (1, 2), (2, 1), (2, 2)) for m in nonforest)
        profile = sorted(
            (
                sum(1 for col in m.signs for e in col if e == -1),
                self._first_difference(m, 5),
            )
            for m in nonforest
        )
        # exactly the six matrices with two -1 entries differ by length 5:
        # the two with -1 on a diagonal at length 4, the other four at 5
        assert profile == [
            (0, None),
            (1, None), (1, None), (1, None), (1, None),
            (2, 4), (2, 4), (2, 5), (2, 5), (2, 5), (2, 5),
            (3, None), (3, None), (3, None), (3, None),
            (4, None),
        ]

    def test_all_plus_first_differs_at_six(self):
        m = matrix_from_rows_top_first([[1, 1], [1, 1]])
        witness = (2, 4, 3, 6, 5, 1)
        assert grid_member(witness, m) is not None
        assert geom_member(witness, m) is None

    def test_all_minus_first_differs_at_six(self):
        m = matrix_from_rows_top_first([[-1, -1], [-1, -1]])
        witness = (1, 5, 6, 3, 4, 2)
        assert grid_member(witness, m) is not None
        assert geom_member(witness, m) is None

    def test_odd_minus_representative_agrees_at_six(self):
        m = matrix_from_rows_top_first([[1, 1], [1, -1]])
        assert enumerate_grid(m, 6, "monotone") == enumerate_grid(m, 6, "geometric")


class TestGriddabilityEvidence:
    def test_av321_chains(self):
        ev = griddability_evidence(avoiding((3, 2, 1)), 3)
        assert ev.depth == 3
        assert ev.sum_chain == (True, True, True)
        assert ev.skew_chain == (True, True, False)

    def test_note_takes_no_verdict(self):
        assert "No verdict" in GRIDDABILITY_NOTE
        assert "ambiguous" in GRIDDABILITY_NOTE
        assert griddability_evidence(avoiding((3, 2, 1)), 2).note == GRIDDABILITY_NOTE

    def test_depth_guard(self):
        with pytest.raises(SizeGuardError):
            griddability_evidence(avoiding((3, 2, 1)), 5)
        ev = griddability_evidence(avoiding((3, 2, 1)), 5, max_n=10)
        assert ev.sum_chain == (True,) * 5


class TestGuards:
    def test_enumerate_guard(self):
        with pytest.raises(SizeGuardError):
            enumerate_grid(X_MATRIX, 8, "monotone")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            enumerate_grid(X_MATRIX, 3, "affine")

    def test_grid_member_guard_and_override(self):
        long_identity = tuple(range(1, 14))
        with pytest.raises(SizeGuardError):
            grid_member(long_identity, X_MATRIX)
        assert grid_member(long_identity, X_MATRIX, max_n=13) is not None

    def test_geom_member_guard(self):
        with pytest.raises(SizeGuardError):
            geom_member(tuple(range(1, 12)), X_MATRIX)
