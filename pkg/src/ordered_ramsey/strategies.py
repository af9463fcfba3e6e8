"""Builder and Painter strategies.

Painters are single functions of (state, pending edge).  Builders are
stateful, one instance per game: their phase logic is written as a
generator that yields edge proposals and, on resumption, reads the color
the painter chose from the state's edge list.  A builder is therefore
deterministic given the painter's color sequence, which is what the
decision-tree enumerator in `compiler` relies on.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

from .board import (
    BLUE,
    RED,
    GameError,
    GameState,
    MatchUnfinished,
    VertexHandle,
    run_match,
)
from .graphs import (
    GraphSpecError,
    OrderedGraph,
    biclique,
    clique,
    cstar_cycle,
    cycle,
)


class StrategyError(GameError):
    """A strategy violated its own guarantees (out of moves, broken phase)."""


# ---------------------------------------------------------------------------
# Painters
# ---------------------------------------------------------------------------

class DegreeThresholdPainter:
    """Paint (u, v) blue when u's right degree is below v's left degree.

    Degrees count every previously colored edge regardless of color and
    exclude the pending edge.  Against this painter, any red win needs at
    least max-left-degree*(max-left-degree-1)/4 total edges (and blue wins
    the right-degree analogue).
    """

    def choose_color(self, state: GameState, pending) -> str:
        u, v = pending
        d_plus_u = sum(1 for e in state.edges if e.u.id == u.id)
        d_minus_v = sum(1 for e in state.edges if e.v.id == v.id)
        return BLUE if d_plus_u < d_minus_v else RED


class ConstantPainter:
    def __init__(self, color: str):
        self.color = color

    def choose_color(self, state, pending) -> str:
        return self.color


class RandomPainter:
    """Uniform colors from a seeded stream, independent of board content."""

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def choose_color(self, state, pending) -> str:
        return RED if self._rng.random() < 0.5 else BLUE


class MinimaxPainter:
    """Plays the exact optimal color on the current board via the solver.

    The restricted game is solved from the live position with the board
    frozen at its current size, so this is optimal for the restricted game
    on the vertices present when each edge arrives.
    """

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget

    def choose_color(self, state: GameState, pending) -> str:
        from . import solver  # local import: solver depends on graphs only

        u, v = pending
        edges = [(state.rank(e.u), state.rank(e.v), e.color) for e in state.edges]
        return solver.best_painter_color(
            state.red_target, state.blue_target, state.num_vertices,
            edges, (state.rank(u), state.rank(v)), budget=self.budget,
        )


# ---------------------------------------------------------------------------
# Builder plumbing
# ---------------------------------------------------------------------------

class GeneratorBuilder:
    """Base class: subclasses implement _run(state) as a move generator."""

    def __init__(self):
        self._gen = None

    def _run(self, state: GameState):
        raise NotImplementedError

    def next_move(self, state: GameState):
        if self._gen is None:
            self._gen = self._run(state)
        try:
            return next(self._gen)
        except StopIteration:
            if state.win is not None:
                return None
            raise StrategyError("builder ran out of moves before a win") from None


def _last_color(state: GameState) -> str:
    return state.edges[-1].color


def _fresh_chain(state: GameState, count: int,
                 lo: Optional[VertexHandle], hi: Optional[VertexHandle]):
    """Create `count` fresh vertices in increasing order inside (lo, hi)."""
    out = []
    prev = lo
    for _ in range(count):
        if hi is None:
            h = state.new_vertex("rightmost")
        elif prev is None:
            h = state.new_vertex("leftmost")
        else:
            h = state.new_vertex("between", prev, hi)
        out.append(h)
        prev = h
    return out


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

class CliqueBuilder(GeneratorBuilder):
    """Grow a clique on rightmost-created vertices until somebody wins.

    Pairs are proposed in order of the larger endpoint, so the clique on the
    first m vertices is finished before vertex m+1 is touched.  `size`
    pre-creates that many vertices up front; the clique keeps growing past
    it if needed, so every match terminates.
    """

    def __init__(self, size: Optional[int] = None):
        super().__init__()
        self.size = size

    def _run(self, state: GameState):
        verts = [state.new_vertex("rightmost") for _ in range(self.size or 0)]
        j = 1
        while True:
            while len(verts) <= j:
                verts.append(state.new_vertex("rightmost"))
            for i in range(j):
                yield (verts[i], verts[j])
            j += 1


class RandomBuilder(GeneratorBuilder):
    """Seeded baseline: random uncolored pairs, occasionally a new vertex."""

    def __init__(self, seed: int, grow_probability: float = 0.2,
                 initial_vertices: int = 2):
        super().__init__()
        self.seed = seed
        self.grow_probability = grow_probability
        self.initial_vertices = max(2, initial_vertices)

    def _run(self, state: GameState):
        rng = random.Random(self.seed)
        verts = [state.new_vertex("rightmost") for _ in range(self.initial_vertices)]
        colored: set[frozenset[int]] = set()
        while True:
            total = len(verts) * (len(verts) - 1) // 2
            if len(colored) == total or rng.random() < self.grow_probability:
                placement = rng.choice(("leftmost", "rightmost", "between"))
                if placement == "between":
                    lo = rng.randrange(len(verts) - 1)
                    verts.insert(
                        lo + 1, state.new_vertex("between", verts[lo], verts[lo + 1])
                    )
                elif placement == "leftmost":
                    verts.insert(0, state.new_vertex("leftmost"))
                else:
                    verts.append(state.new_vertex("rightmost"))
            open_pairs = [
                (a, b)
                for a, b in combinations(verts, 2)
                if frozenset((a.id, b.id)) not in colored
            ]
            if not open_pairs:
                continue
            a, b = open_pairs[rng.randrange(len(open_pairs))]
            colored.add(frozenset((a.id, b.id)))
            yield (a, b)


class CycleBicliqueBuilder(GeneratorBuilder):
    """Adaptive builder forcing a red ordered k-cycle pattern or a blue biclique.

    Phase 1 lays down a complete bipartite K_{n,2n^2} on fresh vertices,
    one right-hand column at a time.  If no blue K_{n,n} has appeared, some
    left vertex has 2n red right-neighbors; the smallest n become the y's
    and the next n seed X_1.  Phase 2 extends a red monotone path layer by
    layer: each step joins X_i completely to a fresh block and keeps n
    vertices with a red back-edge.  Phase 3 joins the y's to X_{k-2}; the
    first red edge closes the red cycle pattern, an all-blue phase is a
    blue K_{n,n}.

    `block_size` defaults to 2n-1, the smallest block for which n all-blue
    columns are forced when fewer than n back-edges are red; pass 2n+1 to
    reproduce the looser construction.
    """

    def __init__(self, k: int, n: int, block_size: Optional[int] = None):
        super().__init__()
        if k < 3:
            raise GraphSpecError("cycle length must be at least 3")
        if n < 1:
            raise GraphSpecError("biclique side must be positive")
        self.k = k
        self.n = n
        self.block_size = block_size if block_size is not None else 2 * n - 1
        if self.block_size < 2 * n - 1:
            raise GraphSpecError("block size below 2n-1 cannot force a red layer")

    def _run(self, state: GameState):
        n, k = self.n, self.k
        red_pairs: set[tuple[int, int]] = set()

        def propose(a, b):
            yield (a, b)
            if _last_color(state) == RED:
                red_pairs.add((a.id, b.id))

        # Phase 1: K_{n, 2n^2}, column-major.
        left = _fresh_chain(state, n, None, None)
        right = _fresh_chain(state, 2 * n * n, None, None)
        for r in right:
            for l in left:
                yield from propose(l, r)

        def red_right_neighbors(v):
            return [r for r in right if (v.id, r.id) in red_pairs]

        pivot = next((l for l in left if len(red_right_neighbors(l)) >= 2 * n), None)
        if pivot is None:
            raise StrategyError("no pivot vertex: a blue biclique was missed")
        reds = red_right_neighbors(pivot)[: 2 * n]
        ys, xs = reds[:n], reds[n:]

        # Phase 2: k-3 fresh blocks, keeping n red-backed vertices each time.
        for _ in range(k - 3):
            block = _fresh_chain(state, self.block_size, None, None)
            for b in block:
                for x in xs:
                    yield from propose(x, b)
            backed = [b for b in block
                      if any((x.id, b.id) in red_pairs for x in xs)]
            if len(backed) < n:
                raise StrategyError("no red-backed layer: a blue biclique was missed")
            xs = backed[:n]

        # Phase 3: K_{n,n} on (ys, X_{k-2}).
        for x in xs:
            for y in ys:
                yield from propose(y, x)
        raise StrategyError("cycle-biclique phases exhausted without a win")


def probe_natural_cycle(k: int, n: int, painter, turn_cap: int = 400):
    """Ask whether the cycle builder can force the NATURAL ordered k-cycle.

    The builder's guarantee is the ordered k-cycle pattern, which differs
    from the natural ordering once k >= 4.  This replays the same phases
    with natural C_k as the red target (vs a minimax painter on small k, n
    this probes the question directly).  Returns the winning transcript, or
    None if the phases run out or the cap is hit without a natural copy.
    """
    builder = CycleBicliqueBuilder(k, n)
    try:
        return run_match(cycle(k), biclique(n, n), builder, painter, turn_cap)
    except (MatchUnfinished, StrategyError):
        return None


def _smallest_leaf(g: OrderedGraph) -> int:
    for v in range(1, g.n + 1):
        if g.degree(v) == 1:
            return v
    raise GraphSpecError("graph has no leaf")


def _delete_vertex(g: OrderedGraph, v: int) -> OrderedGraph:
    def shift(w):
        return w if w < v else w - 1

    return OrderedGraph.build(
        g.n - 1, ((shift(a), shift(b)) for a, b in g.edges if v not in (a, b))
    )


def leaf_elimination_order(g: OrderedGraph) -> list[int]:
    """Smallest-index leaf removed first, down to a single edge; errors if stuck."""
    if g.num_edges == 0:
        raise GraphSpecError("target has no edges")
    order = []
    while g.n > 2:
        v = _smallest_leaf(g)
        order.append(v)
        g = _delete_vertex(g, v)
    if g.num_edges != 1:
        raise GraphSpecError("elimination did not end at a single edge")
    return order


class LeafRecursionBuilder(GeneratorBuilder):
    """Recursive builder forcing a red copy of T or a blue K_n.

    Base case (T a single edge): a fresh K_n; the first red edge is the
    copy, an all-blue clique ends the game.  Recursive case: peel the
    smallest leaf v_i with neighbor v_s, force n red copies of T - v_i,
    each nested in the previous copy's gap between positions i-1 and i+1,
    then play K_n on the n copies' s-vertices.  A red edge there hands copy
    j1 its missing leaf (the j2 copy's s-vertex sits inside j1's gap); all
    blue is a blue K_n.  Nesting is done by dense-order insertion rather
    than by reserving integer gaps; the integer realization is the
    compiler's job.
    """

    def __init__(self, target: OrderedGraph, n: int):
        super().__init__()
        if n < 2:
            raise GraphSpecError("clique size must be at least 2")
        leaf_elimination_order(target)  # validates the precondition eagerly
        self.target = target
        self.n = n

    def _run(self, state: GameState):
        handles = yield from self._build_red_copy(state, self.target, None, None)
        if state.win is None:
            raise StrategyError(
                f"red copy assembled on handles {[h.id for h in handles]} "
                "but win detection did not fire"
            )

    def _build_red_copy(self, state, g: OrderedGraph, lo, hi):
        n = self.n
        if g.n == 2 and g.num_edges == 1:
            fresh = _fresh_chain(state, n, lo, hi)
            for a, b in combinations(fresh, 2):
                yield (a, b)
                if _last_color(state) == RED:
                    return (a, b)
            raise StrategyError("all-blue clique did not end the game")

        i = _smallest_leaf(g)
        (s,) = set(g.neighbors_left(i) + g.neighbors_right(i))
        reduced = _delete_vertex(g, i)
        s_reduced = s if s < i else s - 1

        copies = []
        region_lo, region_hi = lo, hi
        for _ in range(n):
            copy = yield from self._build_red_copy(state, reduced, region_lo, region_hi)
            copies.append(copy)
            # The next copy goes strictly inside this copy's leaf gap:
            # between the images of v_{i-1} and v_{i+1} (reduced labels i-1, i).
            region_lo = copy[i - 2] if i >= 2 else region_lo
            region_hi = copy[i - 1] if i <= g.n - 1 else region_hi

        anchors = [copy[s_reduced - 1] for copy in copies]
        for j1, j2 in combinations(range(n), 2):
            a, b = anchors[j1], anchors[j2]
            yield ((a, b) if a < b else (b, a))
            if _last_color(state) == RED:
                # Copy j2 is nested inside copy j1's gap, so its s-vertex
                # slots in as v_i of copy j1.
                full = copies[j1][: i - 1] + (anchors[j2],) + copies[j1][i - 1 :]
                return full
        raise StrategyError("all-blue clique did not end the game")


class MinimaxBuilder(GeneratorBuilder):
    """Plays the solver's optimal move on a fixed board of N vertices."""

    def __init__(self, board_size: int, budget: Optional[int] = None):
        super().__init__()
        if board_size < 1:
            raise GraphSpecError("board size must be positive")
        self.board_size = board_size
        self.budget = budget

    def _run(self, state: GameState):
        from . import solver

        verts = [state.new_vertex("rightmost") for _ in range(self.board_size)]
        while True:
            edges = [(state.rank(e.u), state.rank(e.v), e.color) for e in state.edges]
            i, j = solver.best_builder_move(
                state.red_target, state.blue_target, self.board_size, edges,
                budget=self.budget,
            )
            yield (verts[i - 1], verts[j - 1])


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

PAINTER_TOKENS = ("degree-threshold", "random", "all-red", "all-blue", "minimax")
BUILDER_TOKENS = ("clique", "cycle-biclique", "leaf-recursion", "minimax", "random")


def make_painter(token: str, seed: Optional[int] = None,
                 budget: Optional[int] = None):
    name = token.removeprefix("painter:")
    if name == "degree-threshold":
        return DegreeThresholdPainter()
    if name == "all-red":
        return ConstantPainter(RED)
    if name == "all-blue":
        return ConstantPainter(BLUE)
    if name == "random":
        if seed is None:
            raise GraphSpecError("painter:random needs a seed")
        return RandomPainter(seed)
    if name == "minimax":
        return MinimaxPainter(budget=budget)
    raise GraphSpecError(f"unknown painter {token!r}")


def make_builder(token: str, red: OrderedGraph, blue: OrderedGraph,
                 seed: Optional[int] = None, board: Optional[int] = None,
                 params: Optional[dict] = None):
    """Build a fresh builder instance for one game against (red, blue) targets."""
    name = token.removeprefix("builder:")
    params = params or {}
    if name == "clique":
        return CliqueBuilder(size=params.get("size"))
    if name == "random":
        if seed is None:
            raise GraphSpecError("builder:random needs a seed")
        return RandomBuilder(seed, **{k: params[k] for k in
                                      ("grow_probability", "initial_vertices")
                                      if k in params})
    if name == "cycle-biclique":
        k = params.get("k", red.n)
        n = params.get("n", blue.n // 2)
        if "k" not in params and red not in (cstar_cycle(k) if k >= 3 else None,
                                             cycle(k) if k >= 3 else None):
            raise GraphSpecError(
                "builder:cycle-biclique needs a cycle-pattern red target or explicit k"
            )
        if "n" not in params and (n < 1 or blue != biclique(n, n)):
            raise GraphSpecError(
                "builder:cycle-biclique needs a square biclique blue target or explicit n"
            )
        return CycleBicliqueBuilder(k, n, block_size=params.get("block_size"))
    if name == "leaf-recursion":
        n = params.get("n", blue.n)
        if "n" not in params and blue != clique(n):
            raise GraphSpecError(
                "builder:leaf-recursion needs a clique blue target or explicit n"
            )
        return LeafRecursionBuilder(red, n)
    if name == "minimax":
        if board is None:
            raise GraphSpecError("builder:minimax needs a board size")
        return MinimaxBuilder(board, budget=params.get("budget"))
    raise GraphSpecError(f"unknown builder {token!r}")
