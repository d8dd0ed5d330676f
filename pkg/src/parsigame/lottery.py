"""Balanced lotteries over minimal winning coalitions, in exact rationals.

Drawing one minimal winning coalition at random and splitting the unit reward
inside it proportionally to weight is fair after the draw.  A balanced
lottery adds fairness before the draw: every player gets the same probability
pi of belonging to the drawn coalition, and the expected payoff of each
player then equals her normalized weight.  Every parsimonious game has
exactly one balanced lottery; its probabilities are the twin game's weights,
normalized by the total weight, with the non-top entries reversed.

Two routes are implemented: the closed form through the twin, and a direct
exact-rational solve of the balance equations that never looks at the twin.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import PGame
from .errors import BadInput, SingularSystem
from .twin import twin_game
from .incidence import build_incidence_matrix


@dataclass(frozen=True)
class BalancedLottery:
    """Coalition probabilities plus the common membership probability pi."""

    probs: tuple[Fraction, ...]
    pi: Fraction


def balanced_lottery(game: PGame) -> BalancedLottery:
    """Closed-form lottery from the twin's normalized weights."""
    twin = twin_game(game).twin
    scale = twin.total_weight
    below_top = [Fraction(w, scale) for w in reversed(twin.player_weights[:-1])]
    probs = tuple(below_top) + (Fraction(twin.player_weights[-1], scale),)
    return BalancedLottery(probs=probs, pi=Fraction(game.quota, game.total_weight))


def verify_balanced(game: PGame, lottery: BalancedLottery) -> bool:
    """True iff the probabilities sum to one and give every player membership pi."""
    if sum(lottery.probs) != 1:
        return False
    matrix = build_incidence_matrix(game)
    for j in range(game.n):
        membership = sum(p for p, row in zip(lottery.probs, matrix.entries) if row[j])
        if membership != lottery.pi:
            return False
    return True


def solve_balanced_system(game: PGame) -> BalancedLottery:
    """Solve the balance equations directly by exact rational elimination.

    Unknowns are the n coalition probabilities and pi; equations demand equal
    membership probability per player plus normalization.  Serves as the
    twin-free cross-check of balanced_lottery.
    """
    n = game.n
    entries = build_incidence_matrix(game).entries
    zero = Fraction(0)
    one = Fraction(1)
    rows = []
    for j in range(n):
        rows.append([Fraction(entries[i][j]) for i in range(n)] + [-one, zero])
    rows.append([one] * n + [zero, one])
    solution = _solve_unique(rows)
    return BalancedLottery(probs=tuple(solution[:n]), pi=solution[n])


def _solve_unique(rows: list[list[Fraction]]) -> list[Fraction]:
    # Gauss-Jordan on an augmented square system; pivot = first nonzero in
    # scan order (pivot choice cannot change an exact result).
    size = len(rows)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot_row is None:
            raise SingularSystem("no pivot available; balance system is degenerate")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        rows[col] = [value / pivot for value in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [rows[r][size] for r in range(size)]


def expected_payoffs(game: PGame, lottery: BalancedLottery) -> tuple[Fraction, ...]:
    """Expected share per player: weight over quota, times membership probability.

    Under the balanced lottery this reduces to weight over total weight.
    """
    return tuple(Fraction(w, game.quota) * lottery.pi for w in game.player_weights)


def simulate_lottery(game: PGame, draws: int, seed: int) -> dict:
    """Seeded Monte-Carlo run of the draw-and-split mechanism.

    Demonstration only: repeatedly draws a coalition under the balanced
    lottery and splits the unit reward inside it proportionally to weight.
    Tallies are exact; nothing downstream depends on this.
    """
    if draws < 1:
        raise BadInput("draws must be positive")
    lottery = balanced_lottery(game)
    matrix = build_incidence_matrix(game)
    rng = random.Random(seed)
    # probabilities share the denominator w(N), so these weights are exact ints
    weights = [int(p * game.total_weight) for p in lottery.probs]
    membership = [0] * game.n
    payoff = [Fraction(0)] * game.n
    for pick in rng.choices(range(game.n), weights=weights, k=draws):
        for player in matrix.row_coalitions[pick]:
            membership[player - 1] += 1
            payoff[player - 1] += Fraction(game.player_weights[player - 1], game.quota)
    return {
        "draws": draws,
        "seed": seed,
        "membership_counts": membership,
        "mean_payoffs": [total / draws for total in payoff],
        "pi": lottery.pi,
        "expected_payoffs": list(expected_payoffs(game, lottery)),
    }
