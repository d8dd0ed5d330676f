"""Twin games: class-count reversal, cross-checked against matrix transposition.

Reversing the free type representation of a parsimonious game yields another
parsimonious game, its twin.  The same game arises by transposing the
incidence matrix: the transpose is the twin's incidence matrix with all but
the last player and coalition listed in reverse order, and undoing that
reversal (the modified transpose) restores the standard ordering.  Both
routes are computed here and must agree bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import FreeTypeRep, PGame, build_game
from .errors import TwinMismatch
from .incidence import IncidenceMatrix, build_incidence_matrix


@dataclass(frozen=True)
class TwinPair:
    """A game, its twin, and both transposition views of the incidence matrix."""

    game: PGame
    twin: PGame
    a_transposed: IncidenceMatrix
    a_tau: IncidenceMatrix


def twin_rep(rep: FreeTypeRep) -> FreeTypeRep:
    """Reverse the class counts; the end bounds are symmetric so no revalidation."""
    return FreeTypeRep(rep.counts[::-1])


def modified_transpose(matrix: IncidenceMatrix) -> IncidenceMatrix:
    """Transpose, then reverse the order of all but the last row and column."""
    n = matrix.n
    t = matrix.transpose().entries
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        for j in range(n - 1):
            rows[i][j] = t[n - 2 - i][n - 2 - j]
        rows[i][n - 1] = t[n - 2 - i][n - 1]
    for j in range(n - 1):
        rows[n - 1][j] = t[n - 1][n - 2 - j]
    rows[n - 1][n - 1] = t[n - 1][n - 1]
    return IncidenceMatrix.from_rows(rows)


def twin_game(game: PGame) -> TwinPair:
    """Build the twin by count reversal and verify the transposition route agrees."""
    twin = build_game(twin_rep(game.free_rep))
    matrix = build_incidence_matrix(game)
    a_transposed = matrix.transpose()
    a_tau = modified_transpose(matrix)
    if a_tau.entries != build_incidence_matrix(twin).entries:
        raise TwinMismatch(
            "modified transpose differs from the twin's incidence matrix"
        )
    return TwinPair(game=game, twin=twin, a_transposed=a_transposed, a_tau=a_tau)


def is_self_twin(game: PGame) -> bool:
    """True iff the game equals its own twin.

    Three equivalent criteria are evaluated and must agree: the class counts
    read the same in both directions, the twin's minimal homogeneous
    representation matches, and the modified transpose reproduces the
    incidence matrix itself.
    """
    palindrome = game.free_rep.is_palindrome()
    pair = twin_game(game)
    same_representation = (
        pair.twin.quota == game.quota
        and pair.twin.player_weights == game.player_weights
    )
    matrix = build_incidence_matrix(game)
    same_matrix = modified_transpose(matrix).entries == matrix.entries
    if not palindrome == same_representation == same_matrix:
        raise TwinMismatch("self-twin criteria disagree")
    return palindrome
