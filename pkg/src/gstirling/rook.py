"""Rook numbers of Ferrers boards.

A Ferrers board with non-decreasing column heights b = (b_1..b_n) has cell
(i, j) for 1 <= j <= b_i.  R_k(B) counts placements of k non-attacking rooks.
With a_i = i-1 and e_i = i-1-b_i, the generalized Stirling matrix satisfies
S(m,k) = R_{m-k}(B_m) where B_m keeps the first m columns, and the
factorization identity

    sum_k R_{m-k}(B_m) * x(x-1)..(x-k+1) = prod_{i<=m} (x + b_i - i + 1)

holds for every x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise
from typing import Sequence

from .core import SequencePair, TriMatrix
from .stirling import stirling_recurrence

_BRUTEFORCE_CAP = 10


@dataclass(frozen=True)
class FerrersBoard:
    """Non-decreasing, non-negative integer column heights."""

    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        hs = tuple(int(h) for h in self.heights)
        if any(h < 0 for h in hs):
            raise ValueError("column heights must be non-negative")
        if any(x > y for x, y in pairwise(hs)):
            raise ValueError("column heights must be non-decreasing")
        object.__setattr__(self, "heights", hs)

    @property
    def n(self) -> int:
        return len(self.heights)


def parse_board(text: str) -> FerrersBoard:
    """Heights comma-separated or one per line; '#' starts a comment."""
    items: list[int] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for tok in line.replace(",", " ").split():
            items.append(int(tok))
    return FerrersBoard(tuple(items))


def rook_numbers_bruteforce(board: FerrersBoard, m: int, k: int) -> int:
    """Count k-rook non-attacking placements on the first m columns by
    column-wise enumeration.  Capped at m <= 10."""
    if not (0 <= m <= board.n):
        raise ValueError(f"m must be in 0..{board.n}")
    if m > _BRUTEFORCE_CAP:
        raise ValueError(f"brute force capped at {_BRUTEFORCE_CAP} columns")
    if k < 0:
        return 0
    used: set[int] = set()

    def walk(col: int, left: int) -> int:
        if left == 0:
            return 1
        if col > m or m - col + 1 < left:
            return 0
        total = walk(col + 1, left)
        for row in range(1, board.heights[col - 1] + 1):
            if row not in used:
                used.add(row)
                total += walk(col + 1, left - 1)
                used.remove(row)
        return total

    return walk(1, k)


def board_pair(board: FerrersBoard) -> SequencePair:
    """The (a, e) pair realizing the board's rook numbers: a_i = i-1,
    e_i = i-1-b_i."""
    return SequencePair(
        tuple(Fraction(i - 1) for i in range(1, board.n + 1)),
        tuple(Fraction(i - 1 - board.heights[i - 1]) for i in range(1, board.n + 1)),
    )


def rook_matrix(board: FerrersBoard) -> TriMatrix:
    """Generalized Stirling matrix of board_pair(board); its (m,k) entry
    equals R_{m-k} of the first-m-columns board."""
    return stirling_recurrence(board_pair(board))


def gjw_check(board: FerrersBoard, m: int | None = None) -> bool:
    """Verify the factorization identity on the first m columns (default:
    all) at the m+1 points x = 0..m, enough to pin both degree-m sides."""
    m = board.n if m is None else m
    if not (0 <= m <= board.n):
        raise ValueError(f"m must be in 0..{board.n}")
    rooks = [rook_numbers_bruteforce(board, m, j) for j in range(m + 1)]
    for x in range(m + 1):
        lhs = 0
        for k in range(m + 1):
            term = rooks[m - k]
            for i in range(k):
                term *= x - i
            lhs += term
        rhs = 1
        for i in range(1, m + 1):
            rhs *= x + board.heights[i - 1] - i + 1
        if lhs != rhs:
            return False
    return True
