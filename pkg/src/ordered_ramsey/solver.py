"""Exact oracles: restricted-game minimax values and ordered Ramsey numbers.

The restricted game on board [N] is solved by depth-first minimax over
colorings.  Positions are memoized on a canonical form: the vertices
touched by edges, the edges between them, and the counts of untouched
vertices in each gap, capped at |V(G1)| + |V(G2)|.  The cap is sound
because a winning monochromatic copy touches at most that many vertices,
so untouched vertices beyond the cap in a single gap are interchangeable
for both players.  Pruning is branch-and-bound on the turn count: a move
whose value cannot beat the current best is abandoned, and the memo then
records a lower bound instead of an exact value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graphs import OrderedGraph, contains

INFINITE = math.inf

RED = "r"
BLUE = "b"


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"solver budget exhausted after {nodes} nodes")
        self.nodes = nodes


class RamseyNotFound(RuntimeError):
    def __init__(self, max_board: int):
        super().__init__(f"no board size up to {max_board} forces a copy")
        self.max_board = max_board


@dataclass
class SolveResult:
    value: float  # optimal turn count, or math.inf when Painter survives [N]
    principal_variation: list[tuple[int, int, str]]
    nodes: int
    board_size: int


Move = tuple[int, int]
EdgeList = Iterable[tuple[int, int, str]]


class _Search:
    def __init__(self, g1: OrderedGraph, g2: OrderedGraph, n: int,
                 budget: Optional[int], use_memo: bool):
        if n < 1:
            raise ValueError(f"board size {n} must be positive")
        self.g1 = g1
        self.g2 = g2
        self.n = n
        self.budget = budget
        self.use_memo = use_memo
        self.cap = g1.n + g2.n
        self.pairs = list(combinations(range(1, n + 1), 2))
        self.colors: dict[Move, str] = {}
        self.memo: dict = {}
        self.nodes = 0

    # -- position plumbing ---------------------------------------------------

    def load(self, edges: EdgeList):
        self.colors = {}
        for i, j, c in edges:
            if not (1 <= i < j <= self.n) or c not in (RED, BLUE):
                raise ValueError(f"bad edge ({i},{j},{c}) on board [{self.n}]")
            if (i, j) in self.colors:
                raise ValueError(f"pair ({i},{j}) colored twice")
            self.colors[(i, j)] = c

    def color_graph(self, color: str) -> OrderedGraph:
        return OrderedGraph.build(
            self.n, (p for p, c in self.colors.items() if c == color)
        )

    def is_won(self) -> bool:
        if (self.g1.is_edgeless() and self.g1.n <= self.n) or (
            self.g2.is_edgeless() and self.g2.n <= self.n
        ):
            return True
        return (
            contains(self.g1, self.color_graph(RED)) is not None
            or contains(self.g2, self.color_graph(BLUE)) is not None
        )

    def canonical_key(self):
        used = sorted({v for p in self.colors for v in p})
        index = {v: i for i, v in enumerate(used)}
        gaps = []
        prev = 0
        for v in used:
            gaps.append(min(v - prev - 1, self.cap))
            prev = v
        gaps.append(min(self.n - prev, self.cap))
        edges = tuple(sorted((index[i], index[j], c)
                             for (i, j), c in self.colors.items()))
        return (tuple(gaps), edges)

    # -- minimax ---------------------------------------------------------------

    def search(self, limit: float) -> float:
        """Exact value when it is <= limit (or infinite); else a lower bound."""
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)
        if self.is_won():
            return 0
        open_pairs = [p for p in self.pairs if p not in self.colors]
        if not open_pairs:
            return INFINITE
        if limit < 1:
            return 1  # lower bound: at least one more turn is needed
        key = self.canonical_key() if self.use_memo else None
        if key is not None and key in self.memo:
            exact, val = self.memo[key]
            if exact or val > limit:
                return val

        best = INFINITE
        state_bound = INFINITE
        seen = set()
        for pair in open_pairs:
            move_limit = limit if best == INFINITE else min(limit, best - 1)
            if self.use_memo:
                child_keys = self._child_keys(pair)
                if child_keys in seen:
                    continue
                seen.add(child_keys)
            worst = 0.0
            for color in (RED, BLUE):
                self.colors[pair] = color
                v = self.search(move_limit - 1)
                del self.colors[pair]
                worst = max(worst, v + 1)
                if worst > move_limit:
                    break
            state_bound = min(state_bound, worst)
            if worst <= move_limit:
                best = worst
        if best <= limit:
            if key is not None:
                self.memo[key] = (True, best)
            return best
        # No move achieves <= limit; state_bound is a valid lower bound
        # (it is infinite exactly when every move was evaluated to infinity).
        if key is not None:
            prev = self.memo.get(key)
            if prev is None or (not prev[0] and prev[1] < state_bound):
                self.memo[key] = (state_bound == INFINITE, state_bound)
        return state_bound

    def _child_keys(self, pair: Move):
        keys = []
        for color in (RED, BLUE):
            self.colors[pair] = color
            keys.append(self.canonical_key())
            del self.colors[pair]
        return tuple(keys)

    def value(self) -> float:
        limit = len(self.pairs) - len(self.colors)
        v = self.search(limit)
        # A forced win always fits in the number of open pairs, so any bound
        # above the limit means Painter survives the whole board.
        return v if v <= limit else INFINITE


def solve_restricted(g1: OrderedGraph, g2: OrderedGraph, n: int,
                     budget: Optional[int] = None, use_memo: bool = True,
                     edges: EdgeList = ()) -> SolveResult:
    """Exact minimax value of the game on board [N] from a given position."""
    search = _Search(g1, g2, n, budget, use_memo)
    search.load(edges)
    value = search.value()
    pv = _principal_variation(search) if value != INFINITE else []
    return SolveResult(value, pv, search.nodes, n)


def _principal_variation(search: _Search) -> list[tuple[int, int, str]]:
    pv = []
    while not search.is_won():
        pair = _best_builder_move(search)
        color = _best_painter_color(search, pair)
        search.colors[pair] = color
        pv.append((pair[0], pair[1], color))
    for i, j, _ in pv:
        del search.colors[(i, j)]
    return pv


def _best_builder_move(search: _Search) -> Move:
    if search.is_won():
        raise ValueError("game already over")
    open_pairs = [p for p in search.pairs if p not in search.colors]
    if not open_pairs:
        raise ValueError("no uncolored pairs left")
    limit = len(open_pairs)
    best_pair, best_value = None, INFINITE
    for pair in open_pairs:  # lexicographic tie-break: first optimum wins
        worst = 0.0
        for color in (RED, BLUE):
            search.colors[pair] = color
            v = search.search(limit - 1)
            del search.colors[pair]
            worst = max(worst, v + 1)
        if worst < best_value:
            best_pair, best_value = pair, worst
    return best_pair


def _best_painter_color(search: _Search, pair: Move) -> str:
    if search.is_won():
        raise ValueError("game already over")
    limit = len(search.pairs) - len(search.colors)
    best_color, best_value = None, -1.0
    for color in (RED, BLUE):  # red first: ties go to red
        search.colors[pair] = color
        v = search.search(limit - 1)
        del search.colors[pair]
        if v > best_value:
            best_color, best_value = color, v
    return best_color


def best_builder_move(g1: OrderedGraph, g2: OrderedGraph, n: int,
                      edges: EdgeList, budget: Optional[int] = None) -> Move:
    """An optimal next edge for Builder, lexicographic tie-break."""
    search = _Search(g1, g2, n, budget, True)
    search.load(edges)
    return _best_builder_move(search)


def best_painter_color(g1: OrderedGraph, g2: OrderedGraph, n: int,
                       edges: EdgeList, pending: Move,
                       budget: Optional[int] = None) -> str:
    """An optimal color for Painter on the pending pair, red on ties."""
    search = _Search(g1, g2, n, budget, True)
    search.load(edges)
    i, j = pending
    if not (1 <= i < j <= n) or (i, j) in search.colors:
        raise ValueError(f"bad pending pair {pending}")
    return _best_painter_color(search, (i, j))


# ---------------------------------------------------------------------------
# Ordered Ramsey numbers by coloring enumeration
# ---------------------------------------------------------------------------

def every_coloring_contains(g1: OrderedGraph, g2: OrderedGraph, n: int) -> bool:
    """True iff each 2-coloring of ordered K_n has red g1 or blue g2."""
    if g1.n > n and g2.n > n:
        return False
    if (g1.is_edgeless() and g1.n <= n) or (g2.is_edgeless() and g2.n <= n):
        return True
    if g1.is_edgeless() or g2.is_edgeless():
        return False  # the edgeless one is too large, the other needs edges...
    pairs = list(combinations(range(1, n + 1), 2))
    red: set = set()
    blue: set = set()

    def dfs(idx: int) -> bool:
        # Invariant: the current partial coloring contains neither target.
        if idx == len(pairs):
            return False  # a full coloring avoiding both: counterexample
        pair = pairs[idx]
        for bucket, target in ((red, g1), (blue, g2)):
            bucket.add(pair)
            host = OrderedGraph.build(n, bucket)
            closed = contains(target, host, required_edge=pair) is not None
            survives = closed or dfs(idx + 1)
            bucket.discard(pair)
            if not survives:
                return False
        return True

    return dfs(0)


def ordered_ramsey_number(g1: OrderedGraph, g2: OrderedGraph,
                          max_board: int = 12) -> int:
    """Least N such that every coloring of ordered K_N contains a target copy."""
    for n in range(1, max_board + 1):
        if every_coloring_contains(g1, g2, n):
            return n
    raise RamseyNotFound(max_board)


# ---------------------------------------------------------------------------
# Stabilization scan
# ---------------------------------------------------------------------------

@dataclass
class StabilizationReport:
    values: dict[int, float]
    stabilized_at: Optional[int]  # least scanned N from which the value is flat


def stabilization_scan(g1: OrderedGraph, g2: OrderedGraph,
                       boards: Iterable[int],
                       budget: Optional[int] = None) -> StabilizationReport:
    boards = sorted(boards)
    values = {n: solve_restricted(g1, g2, n, budget=budget).value for n in boards}
    stabilized = None
    final = values[boards[-1]]
    for n in boards:
        if values[n] == final:
            stabilized = n
            break
    return StabilizationReport(values, stabilized)
