"""Incidence matrices over minimal winning coalitions, with exact determinants.

Row i of the incidence matrix is the minimal winning coalition associated
with player i: a non-top player brings along every heavier player whose type
parity differs from its own, and the top player's row is the coalition of all
odd-type players.  Column order is player order, so deleting the last row and
column leaves an upper triangular 0/1 matrix with unit diagonal.

The determinant of the incidence matrix of a parsimonious game is the quota
up to sign, det A = q * (-1)^(h+1).  Two independent integer-exact paths are
provided: fraction-free (Bareiss) elimination for arbitrary 0/1 matrices, and
a single row combination that triangularizes the matrix of a game directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import PGame, int64_checked
from .errors import BadInput, TheoremViolation


@dataclass(frozen=True)
class IncidenceMatrix:
    """Square 0/1 matrix; row i holds the coalition associated with player i."""

    entries: tuple[tuple[int, ...], ...]
    row_coalitions: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IncidenceMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        if any(len(row) != len(entries) for row in entries):
            raise BadInput("matrix must be square")
        if any(v not in (0, 1) for row in entries for v in row):
            raise BadInput("matrix entries must be 0 or 1")
        coalitions = tuple(
            frozenset(j + 1 for j, v in enumerate(row) if v) for row in entries
        )
        return cls(entries=entries, row_coalitions=coalitions)

    def transpose(self) -> "IncidenceMatrix":
        return IncidenceMatrix.from_rows(zip(*self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def to_text(self) -> str:
        """Space-separated 0/1 rows, one row per line."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)

    def __str__(self) -> str:
        return self.to_text()


def coalition_of_player(game: PGame, player: int) -> frozenset[int]:
    """The minimal winning coalition associated with a player (1-based index)."""
    if not 1 <= player <= game.n:
        raise BadInput(f"player index must be in 1..{game.n}, got {player}")
    t = game.player_type[player - 1]
    if t == game.h:
        return frozenset(
            k for k in range(1, game.n + 1) if game.player_type[k - 1] % 2 == 1
        )
    members = {player}
    for k in range(1, game.n + 1):
        s = game.player_type[k - 1]
        if s > t and (s - t) % 2 == 1:
            members.add(k)
    return frozenset(members)


def build_incidence_matrix(game: PGame) -> IncidenceMatrix:
    """Incidence matrix with rows ordered by associated player index."""
    rows = []
    for player in range(1, game.n + 1):
        coalition = coalition_of_player(game, player)
        rows.append([1 if j in coalition else 0 for j in range(1, game.n + 1)])
    return IncidenceMatrix.from_rows(rows)


def verify_block_structure(matrix: IncidenceMatrix, game: PGame) -> bool:
    """Check the type-block pattern of a game's incidence matrix.

    Grouping rows by coalition type and columns by player type: diagonal
    blocks below the top are identities, blocks under the diagonal are zero,
    blocks above it are all-one exactly when the two type indices have
    different parity, the top-player column follows the same parity rule,
    and the last row is all-one on odd-type columns and zero elsewhere.
    """
    if matrix.n != game.n:
        return False
    h = game.h
    entries = matrix.entries
    spans = {t: game.players_of_type(t) for t in range(1, h + 1)}
    for r in range(1, h + 1):
        for c in range(1, h + 1):
            if r == h:
                expected = 1 if c % 2 else 0
            elif c == h:
                expected = 1 if (r + h) % 2 else 0
            elif r == c:
                ok = all(
                    entries[i - 1][j - 1] == (1 if i == j else 0)
                    for i in spans[r]
                    for j in spans[c]
                )
                if not ok:
                    return False
                continue
            elif c < r:
                expected = 0
            else:
                expected = 1 if (r + c) % 2 else 0
            if any(
                entries[i - 1][j - 1] != expected for i in spans[r] for j in spans[c]
            ):
                return False
    return True


def determinant(matrix: IncidenceMatrix) -> int:
    """Exact determinant by fraction-free integer elimination."""
    n = matrix.n
    if n == 0:
        return 1
    a = [list(row) for row in matrix.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: prev divides the two-by-two minor
                a[i][j] = int64_checked(a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _last_row_combination(
    game: PGame, matrix: IncidenceMatrix | None = None
) -> tuple[IncidenceMatrix, tuple[int, ...], list[int]]:
    if matrix is None:
        matrix = build_incidence_matrix(game)
    n = game.n
    z = tuple(
        -game.player_weights[i] if game.player_type[i] % 2 else game.player_weights[i]
        for i in range(n - 1)
    )
    entries = matrix.entries
    transformed = [
        sum(z[i] * entries[i][j] for i in range(n - 1)) + entries[n - 1][j]
        for j in range(n)
    ]
    return matrix, z, transformed


def triangularization_coefficients(game: PGame) -> tuple[int, ...]:
    """Signed weights (z_1, ..., z_{n-1}) that triangularize the last row.

    z_i is the weight of player i, negated for odd types.  Adding the
    combination sum(z_i * row_i) to the last row must clear its first n - 1
    entries and leave q * (-1)^(h+1) in the corner; anything else means the
    construction upstream is broken.
    """
    _, z, transformed = _last_row_combination(game)
    if any(transformed[: game.n - 1]):
        raise TheoremViolation("row combination failed to clear the leading entries")
    expected = game.quota * (-1) ** (game.h + 1)
    if transformed[-1] != expected:
        raise TheoremViolation(
            f"triangularized corner is {transformed[-1]}, expected {expected}"
        )
    return z


def determinant_by_triangularization(game: PGame) -> int:
    """Exact determinant via the signed-weight row combination.

    Independent of the Bareiss path: it verifies that the first n - 1 rows
    form a unit upper triangular block and that the combination clears the
    last row, then reads the determinant off the remaining corner entry.
    """
    matrix, _, transformed = _last_row_combination(game)
    n = game.n
    entries = matrix.entries
    for i in range(n - 1):
        if entries[i][i] != 1:
            raise TheoremViolation(f"diagonal entry {i + 1} is not 1")
        if any(entries[i][j] for j in range(i)):
            raise TheoremViolation(f"row {i + 1} has entries below the diagonal")
    if any(transformed[: n - 1]):
        raise TheoremViolation("row combination failed to clear the leading entries")
    return transformed[-1]
