"""Generalized Fibonacci Nim for q in {1, 2, 3}: take-caps, the
least-G-summand strategy, a memoized win/loss solver, and the playable
state machine. The winner takes the last bean.

Standard rule: after a take of p, the reply p' satisfies
    p' <= q*p        if p == 1, or if q is 1 or 2,
    p' <= q*p - 1    if p >= 2 and q == 3.
Modified rule: p' <= q*p if p == 1, else p' <= q*p - (q-1).
On the very first move any number may be taken except the whole pile.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import sequences
from .representations import QRepresentation, greedy_q_rep

SOLVER_BOUND = 400


class Variant(str, Enum):
    STANDARD = "standard"
    MODIFIED = "modified"


class IllegalMoveError(ValueError):
    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class GameOverError(ValueError):
    pass


@dataclass(frozen=True)
class GameConfig:
    q: int
    variant: Variant = Variant.STANDARD
    initial_beans: int = 2

    def __post_init__(self) -> None:
        if self.q not in (1, 2, 3):
            raise ValueError("the strategy is proved only for q in {1, 2, 3}")
        if self.initial_beans < 2:
            raise ValueError("initial beans must be >= 2 so a legal first move exists")


@dataclass(frozen=True)
class GameState:
    beans: int
    last_take: int | None = None
    to_move: int = 0  # player 0 moves first
    history: tuple[int, ...] = ()

    @property
    def over(self) -> bool:
        return self.beans == 0

    @property
    def winner(self) -> int | None:
        """The player who removed the last bean, once the game is over."""
        return 1 - self.to_move if self.over else None


def new_game(config: GameConfig) -> GameState:
    return GameState(beans=config.initial_beans)


def rule_cap(config: GameConfig, p: int) -> int:
    """Reply cap after a take of p beans, before clamping to the pile."""
    if p < 1:
        raise ValueError("takes are >= 1")
    q = config.q
    if config.variant is Variant.MODIFIED:
        return q * p if p == 1 else q * p - (q - 1)
    if p == 1 or q in (1, 2):
        return q * p
    return q * p - 1  # q == 3, p >= 2


def max_take(config: GameConfig, state: GameState) -> int:
    if state.over:
        raise GameOverError("game is over")
    if state.last_take is None:
        return state.beans - 1  # never the whole pile on the first move
    return min(rule_cap(config, state.last_take), state.beans)


def legal_moves(config: GameConfig, state: GameState) -> list[int]:
    return list(range(1, max_take(config, state) + 1))


def apply_move(config: GameConfig, state: GameState, take: int) -> GameState:
    cap = max_take(config, state)
    if not 1 <= take <= cap:
        raise IllegalMoveError(f"take {take} outside 1..{cap}", cap)
    return GameState(
        beans=state.beans - take,
        last_take=take,
        to_move=1 - state.to_move,
        history=state.history + (take,),
    )


@dataclass(frozen=True)
class StrategyMove:
    take: int
    least_summand: bool  # False marks the flagged fallback from losing spots
    representation: QRepresentation

    @property
    def winning(self) -> bool:
        return self.least_summand


def strategy_move(config: GameConfig, state: GameState) -> StrategyMove:
    """Take the least G-summand of the pile; fall back (flagged) to the
    smallest legal move when that is illegal, which happens only in
    losing positions such as a G-number pile on the first move."""
    if state.over:
        raise GameOverError("game is over")
    rep = greedy_q_rep(config.q, state.beans)
    least = rep.least_summand()
    cap = max_take(config, state)
    if least <= cap:
        return StrategyMove(least, True, rep)
    return StrategyMove(1, False, rep)


def solve(config: GameConfig, n_max: int, bound: int = SOLVER_BOUND) -> dict[int, bool]:
    """n -> does the first player win from a fresh pile of n beans?

    Memoized over states (beans, cap) with cap clamped to beans; the cap
    axis is filled incrementally since extra options never hurt.
    """
    if n_max > bound:
        raise ValueError(f"n_max={n_max} exceeds solver bound {bound}")
    win = _win_grid(config, n_max)
    return {n: win[n][n - 1] for n in range(2, n_max + 1)}


def _win_grid(config: GameConfig, n_max: int) -> list[list[bool]]:
    """win[b][cap] for 1 <= cap <= b <= n_max (win[b][0] is padding)."""
    win: list[list[bool]] = [[False]]
    for b in range(1, n_max + 1):
        row = [False] * (b + 1)
        for cap in range(1, b + 1):
            if row[cap - 1]:
                row[cap] = True
                continue
            if cap == b:
                row[cap] = True  # taking the whole pile wins
                continue
            nb = b - cap
            ncap = min(rule_cap(config, cap), nb)
            row[cap] = not win[nb][ncap]
        win.append(row)
    return win


def losing_positions(config: GameConfig, n_max: int) -> list[int]:
    table = solve(config, n_max)
    return [n for n in range(2, n_max + 1) if not table[n]]


def least_summand_recovery(config: GameConfig, ell_index: int, p: int) -> bool:
    """After an opponent take of p < G_ell from a pile whose least summand
    is G_ell, is the least G-summand of G_ell - p within the reply cap?

    This single check is what keeps the strategy playable: whenever it
    holds for every feasible p, the strategy player can always answer.
    """
    value = sequences.g_term(config.q, ell_index)
    if value < 2:
        raise ValueError("G_ell must be a G-number >= 2")
    if not 1 <= p < value:
        raise ValueError("need 1 <= p < G_ell")
    least = greedy_q_rep(config.q, value - p).least_summand()
    return least <= rule_cap(config, p)
