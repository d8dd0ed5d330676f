"""Construction and validation of parsimonious games.

A parsimonious game is a constant-sum homogeneous weighted majority game on
n >= 4 players with exactly n minimal winning coalitions, the smallest number
possible.  Its players fall into h weight classes ("types"): type 1 holds the
peons of weight 1, type h holds the single top player, and type weights
increase strictly.  The game is determined completely by the vector of class
sizes (x_1, ..., x_{h-1}); the top class always has size one and is dropped.

Given those counts the type weights follow the recursion

    w_1 = 1
    w_2 = x_1                                  (when h > 2)
    w_t = x_{t-1} * w_{t-1} + w_{t-2}          (3 <= t <= h-1)
    w_h = (x_{h-1} - 1) * w_{h-1} + w_{h-2}    (with w_0 = 0)

so for h = 2 the top weight is x_1 - 1.  The minimal winning quota is the
total weight of the odd-type players, which equals one plus the total weight
of the even-type players, and the grand total always satisfies w(N) = 2q - 1.

Everything here is exact integer arithmetic; values are kept inside the
signed 64-bit range and anything larger is rejected rather than accepted
silently.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadInput,
    BoundViolation,
    EmptyRep,
    NotParsimonious,
    Overflow,
    TheoremViolation,
    TooSmall,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def int64_checked(value: int) -> int:
    """Return value unchanged unless it left the signed 64-bit range."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise Overflow(f"value {value} exceeds the 64-bit integer range")
    return value


@dataclass(frozen=True)
class FreeTypeRep:
    """Class sizes (x_1, ..., x_{h-1}); the top class of size 1 is implicit."""

    counts: tuple[int, ...]

    @property
    def h(self) -> int:
        """Number of types, top included."""
        return len(self.counts) + 1

    @property
    def n(self) -> int:
        """Number of players, top included."""
        return 1 + sum(self.counts)

    def is_palindrome(self) -> bool:
        return self.counts == self.counts[::-1]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.counts)


def validate_free_type_rep(counts: Sequence[int]) -> FreeTypeRep:
    """Check the class-count bounds and wrap the counts; no normalization.

    The first and last counts must be at least 2, every interior count at
    least 1, and the implied player total at least 4.
    """
    xs = tuple(counts)
    if not all(isinstance(x, int) for x in xs):
        raise BadInput("class counts must be integers")
    if len(xs) == 0:
        raise EmptyRep("at least one class count is required")
    if any(x < 1 for x in xs):
        raise BoundViolation("every class count must be at least 1")
    if xs[0] < 2:
        raise BoundViolation("x_1 must be at least 2")
    if xs[-1] < 2:
        raise BoundViolation(f"x_{len(xs)} must be at least 2")
    rep = FreeTypeRep(xs)
    if rep.n < 4:
        raise TooSmall(f"need at least 4 players, got {rep.n}")
    return rep


def parse_free_rep(text: str) -> FreeTypeRep:
    """Parse a comma-separated count list such as "3,1,2,2" and validate it."""
    try:
        counts = [int(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise BadInput(f"cannot parse {text!r} as comma-separated integers") from exc
    return validate_free_type_rep(counts)


@dataclass(frozen=True)
class PGame:
    """A parsimonious game in its minimal homogeneous representation.

    Players are indexed 1..n in non-decreasing weight order, types 1..h in
    strictly increasing weight order; ``player_type[j - 1]`` is the type of
    player j.
    """

    free_rep: FreeTypeRep
    n: int
    h: int
    type_weights: tuple[int, ...]
    player_weights: tuple[int, ...]
    quota: int
    total_weight: int
    player_type: tuple[int, ...]

    @property
    def type_counts(self) -> tuple[int, ...]:
        """Class sizes including the top class."""
        return self.free_rep.counts + (1,)

    def weight_of_type(self, t: int) -> int:
        return self.type_weights[t - 1]

    def players_of_type(self, t: int) -> range:
        """1-based player indices of type t (a contiguous range)."""
        start = 1 + sum(self.type_counts[: t - 1])
        return range(start, start + self.type_counts[t - 1])

    @property
    def representation(self) -> str:
        """The game as "q; w_1, ..., w_n"."""
        return f"{self.quota}; " + ", ".join(str(w) for w in self.player_weights)


def build_game(rep: FreeTypeRep) -> PGame:
    """Build the full minimal homogeneous representation generated by rep."""
    x = rep.counts
    h = rep.h
    tw = [0] * (h + 1)  # tw[0] = 0 makes the recursion cover h = 2
    tw[1] = 1
    if h > 2:
        tw[2] = x[0]
    for t in range(3, h):
        tw[t] = int64_checked(x[t - 2] * tw[t - 1] + tw[t - 2])
    tw[h] = int64_checked((x[h - 2] - 1) * tw[h - 1] + tw[h - 2])

    counts = x + (1,)
    odd_side = 0
    even_side = 0
    for t in range(1, h + 1):
        term = int64_checked(counts[t - 1] * tw[t])
        if t % 2:
            odd_side = int64_checked(odd_side + term)
        else:
            even_side = int64_checked(even_side + term)
    if odd_side != 1 + even_side:
        raise TheoremViolation("the two quota expressions disagree; weight recursion is broken")
    quota = odd_side
    total = int64_checked(2 * quota - 1)

    player_weights: list[int] = []
    player_type: list[int] = []
    for t in range(1, h + 1):
        player_weights.extend([tw[t]] * counts[t - 1])
        player_type.extend([t] * counts[t - 1])
    if sum(player_weights) != total:
        raise TheoremViolation("player weights do not sum to 2q - 1")

    return PGame(
        free_rep=rep,
        n=rep.n,
        h=h,
        type_weights=tuple(tw[1:]),
        player_weights=tuple(player_weights),
        quota=quota,
        total_weight=total,
        player_type=tuple(player_type),
    )


def check_weight_identities(game: PGame) -> bool:
    """True iff the parity identities behind the weight recursion all hold.

    For every non-top type t: an odd type's weight is one plus the total
    weight of all lighter even-type players, an even type's weight is the
    total weight of all lighter odd-type players.  Additionally both quota
    expressions must equal the stored quota and the grand total must equal
    2q - 1 both ways.
    """
    counts = game.type_counts
    wt = game.weight_of_type
    h = game.h
    for t in range(1, h):
        if t % 2:
            expected = 1 + sum(counts[s - 1] * wt(s) for s in range(2, t, 2))
        else:
            expected = sum(counts[s - 1] * wt(s) for s in range(1, t, 2))
        if wt(t) != expected:
            return False
    odd_sum = sum(counts[s - 1] * wt(s) for s in range(1, h + 1, 2))
    even_sum = sum(counts[s - 1] * wt(s) for s in range(2, h + 1, 2))
    if game.quota != odd_sum or game.quota != 1 + even_sum:
        return False
    return game.total_weight == 1 + 2 * even_sum == 2 * odd_sum - 1


def parse_min_homog_rep(quota: int, weights: Sequence[int]) -> PGame:
    """Recover the game whose minimal homogeneous representation is (quota; weights).

    Groups equal weights into types, rebuilds the game from the recovered
    class counts and demands that the rebuild reproduces the input exactly.
    """
    w = tuple(weights)
    if not w:
        raise BadInput("empty weight vector")
    if w[0] != 1:
        raise BadInput("the minimum weight must be 1 and come first")
    if any(a > b for a, b in zip(w, w[1:])):
        raise BadInput("weights must be non-decreasing")
    counts = tuple(len(tuple(group)) for _, group in itertools.groupby(w))
    if counts[-1] != 1:
        raise NotParsimonious("the top weight must belong to a single player")
    try:
        rep = validate_free_type_rep(counts[:-1])
    except (EmptyRep, BoundViolation, TooSmall) as exc:
        raise NotParsimonious(str(exc)) from exc
    game = build_game(rep)
    if game.quota != quota:
        raise NotParsimonious(f"rebuilt quota {game.quota} does not match {quota}")
    if game.player_weights != w:
        raise NotParsimonious("rebuilt weights differ from the input")
    return game


def parse_representation(text: str) -> PGame:
    """Parse "q; w_1, ..., w_n" and rebuild the game it represents."""
    head, sep, tail = text.partition(";")
    if not sep:
        raise BadInput("expected the form 'q; w_1, ..., w_n'")
    try:
        quota = int(head.strip())
        weights = [int(part.strip()) for part in tail.split(",")]
    except ValueError as exc:
        raise BadInput(f"cannot parse {text!r} as 'q; w_1, ..., w_n'") from exc
    return parse_min_homog_rep(quota, weights)
