import pytest

from parsigame import (
    BadInput,
    IncidenceMatrix,
    TooLarge,
    build_game,
    build_incidence_matrix,
    coalition_of_player,
    determinant,
    determinant_by_triangularization,
    determinant_cofactor_oracle,
    enumerate_p_games,
    triangularization_coefficients,
    verify_block_structure,
)


def identity_matrix(n):
    return IncidenceMatrix.from_rows(
        [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    )


def test_coalition_rule_nine_players(game3122):
    assert coalition_of_player(game3122, 1) == frozenset({1, 4, 7, 8})
    assert coalition_of_player(game3122, 4) == frozenset({4, 5, 6, 9})
    # top player, odd h: the all-odd-types coalition includes the top
    assert coalition_of_player(game3122, 9) == frozenset({1, 2, 3, 5, 6, 9})


def test_coalition_rule_top_excluded_when_h_even(game3):
    assert coalition_of_player(game3, 4) == frozenset({1, 2, 3})
    assert coalition_of_player(game3, 1) == frozenset({1, 4})


def test_coalition_rule_five_players(game22):
    rows = [coalition_of_player(game22, j) for j in range(1, 6)]
    assert rows == [
        frozenset({1, 3, 4}),
        frozenset({2, 3, 4}),
        frozenset({3, 5}),
        frozenset({4, 5}),
        frozenset({1, 2, 5}),
    ]


def test_coalition_player_index_checked(game3):
    with pytest.raises(BadInput):
        coalition_of_player(game3, 0)
    with pytest.raises(BadInput):
        coalition_of_player(game3, 5)


def test_matrix_matches_golden(game3122, game3113, golden):
    assert build_incidence_matrix(game3122).to_text() + "\n" == golden("rep3122_a.txt")
    assert build_incidence_matrix(game3113).to_text() + "\n" == golden("rep3113_a.txt")


def test_matrix_rows_carry_their_coalitions(game3):
    matrix = build_incidence_matrix(game3)
    assert matrix.row_coalitions == (
        frozenset({1, 4}),
        frozenset({2, 4}),
        frozenset({3, 4}),
        frozenset({1, 2, 3}),
    )


def test_rows_weigh_exactly_the_quota():
    for n in range(4, 12):
        for rep in enumerate_p_games(n):
            game = build_game(rep)
            for coalition in build_incidence_matrix(game).row_coalitions:
                assert sum(game.player_weights[j - 1] for j in coalition) == game.quota


def test_block_structure_holds(game3122, game3113, game3, game22):
    for game in (game3122, game3113, game3, game22):
        assert verify_block_structure(build_incidence_matrix(game), game)


def test_block_structure_detects_tampering(game3122):
    rows = build_incidence_matrix(game3122).to_lists()
    rows[0][0] = 0
    assert not verify_block_structure(IncidenceMatrix.from_rows(rows), game3122)


def test_block_structure_all_enumerated():
    for n in range(4, 12):
        for rep in enumerate_p_games(n):
            game = build_game(rep)
            assert verify_block_structure(build_incidence_matrix(game), game)


def test_submatrix_is_upper_triangular():
    # deleting the last row and column leaves zeros under the diagonal
    for n in range(4, 12):
        for rep in enumerate_p_games(n):
            entries = build_incidence_matrix(build_game(rep)).entries
            for i in range(n - 1):
                assert entries[i][i] == 1
                assert all(entries[i][j] == 0 for j in range(i))


def test_determinant_known_values(game3122, game3113, game3):
    assert determinant(build_incidence_matrix(game3122)) == 26
    assert determinant(build_incidence_matrix(game3113)) == 25
    assert determinant(build_incidence_matrix(game3)) == -3


def test_determinant_identity_matrix():
    for n in (1, 3, 5):
        assert determinant(identity_matrix(n)) == 1


def test_determinant_singular_matrix_is_zero():
    rows = [[1, 1, 0], [1, 1, 0], [0, 0, 1]]
    assert determinant(IncidenceMatrix.from_rows(rows)) == 0


def test_cofactor_oracle(game3, game22):
    assert determinant_cofactor_oracle(build_incidence_matrix(game3)) == -3
    assert determinant_cofactor_oracle(build_incidence_matrix(game22)) == 5
    assert determinant_cofactor_oracle(identity_matrix(3)) == 1


def test_cofactor_oracle_cap(game3122):
    with pytest.raises(TooLarge):
        determinant_cofactor_oracle(build_incidence_matrix(game3122))


def test_triangularization_coefficients(game3122, game3):
    assert triangularization_coefficients(game3122) == (-1, -1, -1, 3, -4, -4, 11, 11)
    assert triangularization_coefficients(game3) == (-1, -1, -1)


def test_determinant_paths_agree():
    for n in range(4, 11):
        for rep in enumerate_p_games(n):
            game = build_game(rep)
            matrix = build_incidence_matrix(game)
            expected = game.quota * (-1) ** (game.h + 1)
            assert determinant(matrix) == expected
            assert determinant_by_triangularization(game) == expected
            if game.n <= 8:
                assert determinant_cofactor_oracle(matrix) == expected


def test_from_rows_validates():
    with pytest.raises(BadInput):
        IncidenceMatrix.from_rows([[1, 0], [1]])
    with pytest.raises(BadInput):
        IncidenceMatrix.from_rows([[2, 0], [0, 1]])
