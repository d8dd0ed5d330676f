"""Definition-level brute force: exhaustive coalition scans and axiom checks.

Everything here works straight from the definitions by scanning all 2^n
coalitions of a representation (q; w), so it is deliberately independent of
the constructive rules in the other modules and acts as their oracle.
Coalitions are bit masks over player indices in canonical non-decreasing
weight order; bit j - 1 stands for player j.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import PGame, build_game, int64_checked
from .errors import BadInput, OutOfRange, TheoremViolation, TooLarge
from .incidence import (
    IncidenceMatrix,
    build_incidence_matrix,
    determinant,
    determinant_by_triangularization,
)
from .lottery import balanced_lottery, solve_balanced_system, verify_balanced
from .twin import twin_game, twin_rep
from .core import FreeTypeRep

MAX_BRUTEFORCE_N = 24
MAX_COFACTOR_N = 8
DEFAULT_MAX_N = 14

AXIOM_CHECKS = ("parsimony", "homogeneity", "constant_sum")
FULL_CHECKS = AXIOM_CHECKS + (
    "incidence_match",
    "det_theorem",
    "quota_twin_equality",
    "lottery_balanced",
    "lottery_unique",
)


@dataclass(frozen=True)
class Coalition:
    """Player-index set with its total weight and bit-mask form."""

    members: frozenset[int]
    weight: int
    mask: int


@dataclass(frozen=True)
class CoalitionSet:
    """Family of minimal winning coalitions (an antichain under inclusion)."""

    coalitions: tuple[Coalition, ...]

    def __len__(self) -> int:
        return len(self.coalitions)

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.coalitions)

    def as_family(self) -> frozenset[frozenset[int]]:
        return frozenset(c.members for c in self.coalitions)


@dataclass(frozen=True)
class VerificationReport:
    """Named boolean checks for one representation; passes iff all checks do."""

    game: str
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        doc: dict = {"game": self.game}
        doc.update(self.checks)
        doc["pass"] = self.passed
        return doc


def _check_scan_input(quota: int, weights: Sequence[int]) -> None:
    if len(weights) > MAX_BRUTEFORCE_N:
        raise TooLarge(
            f"brute force is capped at {MAX_BRUTEFORCE_N} players, got {len(weights)}"
        )
    if not weights:
        raise BadInput("empty weight vector")
    if any(w < 1 for w in weights):
        raise BadInput("weights must be positive integers")
    if quota < 1:
        raise BadInput("quota must be positive")
    int64_checked(sum(weights))


def _subset_weights(weights: Sequence[int]) -> array:
    # sums[mask] = total weight of the players whose bits are set
    n = len(weights)
    sums = array("q", bytes(8 << n))
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + weights[low.bit_length() - 1]
    return sums


def _minimal_winning_masks(quota: int, weights: Sequence[int], sums: array) -> list[int]:
    # weights non-decreasing, so the lightest member is the lowest set bit;
    # dropping it gives the heaviest proper subset, which decides minimality
    n = len(weights)
    masks = []
    for mask in range(1, 1 << n):
        total = sums[mask]
        if total >= quota and total - weights[(mask & -mask).bit_length() - 1] < quota:
            masks.append(mask)
    return masks


def _mask_members(mask: int) -> frozenset[int]:
    members = set()
    j = 1
    while mask:
        if mask & 1:
            members.add(j)
        mask >>= 1
        j += 1
    return frozenset(members)


def minimal_winning_coalitions_bruteforce(
    quota: int, weights: Sequence[int]
) -> CoalitionSet:
    """All minimal winning coalitions of (quota; weights) by exhaustive scan.

    Weights must be positive and non-decreasing (the canonical player order).
    Accepts representations of arbitrary games, parsimonious or not.
    """
    w = tuple(weights)
    _check_scan_input(quota, w)
    if any(a > b for a, b in zip(w, w[1:])):
        raise BadInput("weights must be non-decreasing")
    sums = _subset_weights(w)
    coalitions = tuple(
        Coalition(members=_mask_members(mask), weight=sums[mask], mask=mask)
        for mask in _minimal_winning_masks(quota, w, sums)
    )
    return CoalitionSet(coalitions=coalitions)


def check_axioms(quota: int, weights: Sequence[int]) -> VerificationReport:
    """Scan-based check of the three defining axioms of a parsimonious game.

    parsimony: exactly n minimal winning coalitions, n counting non-dummy
    players only, so every listed player must sit in at least one of them;
    homogeneity: each of them weighs exactly the quota; constant_sum: of
    every coalition and its complement, exactly one wins.  The axioms do not
    depend on player order, so the input weights may arrive unsorted; they
    are scanned in sorted order internally.
    """
    w = tuple(weights)
    _check_scan_input(quota, w)
    canonical = tuple(sorted(w))
    sums = _subset_weights(canonical)
    wm_masks = _minimal_winning_masks(quota, canonical, sums)
    n = len(w)
    full = (1 << n) - 1
    covered = 0
    for mask in wm_masks:
        covered |= mask
    checks = {
        "parsimony": len(wm_masks) == n and covered == full,
        "homogeneity": all(sums[m] == quota for m in wm_masks),
        "constant_sum": all(
            (sums[m] >= quota) != (sums[full ^ m] >= quota) for m in range(1 << n)
        ),
    }
    ident = f"{quota}; " + ", ".join(str(x) for x in w)
    return VerificationReport(game=ident, checks=checks)


def full_verify(game: PGame) -> VerificationReport:
    """Run every theorem-level check against the brute-force ground truth."""
    checks = dict(check_axioms(game.quota, game.player_weights).checks)

    matrix = build_incidence_matrix(game)
    wm = minimal_winning_coalitions_bruteforce(game.quota, game.player_weights)
    checks["incidence_match"] = (
        len(wm) == game.n and set(matrix.row_coalitions) == wm.as_family()
    )

    expected_det = game.quota * (-1) ** (game.h + 1)
    try:
        det_ok = determinant(matrix) == expected_det
        det_ok = det_ok and determinant_by_triangularization(game) == expected_det
        if game.n <= MAX_COFACTOR_N:
            det_ok = det_ok and determinant_cofactor_oracle(matrix) == expected_det
    except TheoremViolation:
        det_ok = False
    checks["det_theorem"] = det_ok

    pair = twin_game(game)
    checks["quota_twin_equality"] = (
        pair.twin.quota == game.quota
        and twin_rep(pair.twin.free_rep) == game.free_rep
    )

    lottery = balanced_lottery(game)
    checks["lottery_balanced"] = verify_balanced(game, lottery)
    solved = solve_balanced_system(game)
    checks["lottery_unique"] = solved.probs == lottery.probs and solved.pi == lottery.pi

    return VerificationReport(game=game.representation, checks=checks)


def enumerate_p_games(n: int, max_n: int | None = None) -> list[FreeTypeRep]:
    """All free type representations with n players, h ascending then lexicographic."""
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if not 4 <= n <= bound:
        raise OutOfRange(f"n must be between 4 and {bound}, got {n}")
    total = n - 1
    reps = []
    for slots in range(1, n - 2):
        reps.extend(FreeTypeRep(counts) for counts in _compositions(total, slots))
    return reps


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    # compositions of total with first and last part >= 2, interior >= 1,
    # emitted in lexicographic order
    if slots == 1:
        if total >= 2:
            yield (total,)
        return

    def rec(prefix: tuple[int, ...], remaining: int, left: int) -> Iterator[tuple[int, ...]]:
        if left == 1:
            if remaining >= 2:
                yield prefix + (remaining,)
            return
        lo = 1 if prefix else 2
        hi = remaining - (left - 2) - 2
        for v in range(lo, hi + 1):
            yield from rec(prefix + (v,), remaining - v, left - 1)

    yield from rec((), total, slots)


def determinant_cofactor_oracle(matrix: IncidenceMatrix) -> int:
    """Exact determinant by Laplace expansion; independent small-n cross-check."""
    if matrix.n > MAX_COFACTOR_N:
        raise TooLarge(f"cofactor expansion is capped at {MAX_COFACTOR_N}")

    def laplace(rows: list[list[int]]) -> int:
        size = len(rows)
        if size == 0:
            return 1
        if size == 1:
            return rows[0][0]
        total = 0
        for j, value in enumerate(rows[0]):
            if value == 0:
                continue
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            term = value * laplace(minor)
            total += term if j % 2 == 0 else -term
        return total

    return laplace(matrix.to_lists())


def verify_sweep(
    n_lo: int, n_hi: int, max_n: int | None = None
) -> Iterator[VerificationReport]:
    """Stream full_verify reports for every game with n_lo <= n <= n_hi."""
    for n in range(n_lo, n_hi + 1):
        for rep in enumerate_p_games(n, max_n=max_n):
            yield full_verify(build_game(rep))
