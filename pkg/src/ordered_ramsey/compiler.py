"""Decision-tree enumeration and compilation of builder strategies onto [N].

A deterministic builder, played against every possible painter color
sequence, traces out a binary decision tree.  Enumerating that tree gives
a finite certificate of the strategy: every leaf is a won position.  The
vertices created across all branches can then be merged into one global
linear order and numbered 1..N, which turns the dense-order strategy into
an equivalent strategy on the fixed integer board [N] with identical turn
counts on every branch.  N is a witness for the board size at which the
restricted game value of this strategy stops depending on the board.

Enumeration re-runs the builder from scratch for each branch (builders are
deterministic given the painter's colors), so strategies never need to be
snapshotted or copied.  Vertices created by two runs that share a painter
prefix are identified: the builder behaves identically until the colors
diverge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .board import BLUE, RED, GameState
from .graphs import OrderedGraph

Placement = tuple[str, Optional[int], Optional[int]]  # (kind, lo_ident, hi_ident)


@dataclass
class TreeNode:
    node_id: int
    prefix: tuple[str, ...]
    created: list[tuple[int, Placement]] = field(default_factory=list)
    move: Optional[tuple[int, int]] = None  # identity pair, None at leaves
    children: dict = field(default_factory=dict)  # color -> TreeNode
    winner: Optional[str] = None  # set at leaves
    turns: Optional[int] = None
    final_order: Optional[tuple[int, ...]] = None  # identities, board order
    is_leaf: bool = False


@dataclass
class DecisionTree:
    root: TreeNode
    nodes: list[TreeNode]
    red_target: OrderedGraph
    blue_target: OrderedGraph

    def leaves(self) -> list[TreeNode]:
        return [n for n in self.nodes if n.is_leaf]

    def depth(self) -> int:
        return max(len(n.prefix) for n in self.leaves())


class EnumerationError(RuntimeError):
    """The builder failed to force a win within the depth cap on some branch."""


class _ScriptedPainter:
    def __init__(self, colors):
        self.colors = list(colors)
        self.index = 0

    def choose_color(self, state, pending) -> str:
        color = self.colors[self.index]
        self.index += 1
        return color


@dataclass
class _RunRecord:
    # per move d: identities created while computing it, and the move itself
    created: list[list[tuple[int, Placement]]]
    moves: list[tuple[int, int]]
    winner: Optional[str]
    turns: Optional[int]
    final_order: Optional[tuple[int, ...]]
    ongoing: bool


def _simulate(builder_factory: Callable[[], object], g1: OrderedGraph,
              g2: OrderedGraph, prefix: tuple[str, ...],
              identities: dict) -> _RunRecord:
    """Run a fresh builder against the scripted colors, mapping vertices to
    branch-independent identities keyed by (creation prefix, handle id)."""
    state = GameState(g1, g2)
    builder = builder_factory()
    idmap: dict[int, int] = {}
    created_per_move: list[list[tuple[int, Placement]]] = []
    moves: list[tuple[int, int]] = []

    def flush_creations(depth: int):
        batch = []
        while len(idmap) < len(state.creation_log):
            hid, placement, a_id, b_id = state.creation_log[len(idmap)]
            key = (prefix[:depth], hid)
            ident = identities.setdefault(key, len(identities))
            idmap[hid] = ident
            batch.append((ident, (placement,
                                  idmap.get(a_id) if a_id is not None else None,
                                  idmap.get(b_id) if b_id is not None else None)))
        return batch

    def finish(ongoing: bool) -> _RunRecord:
        if ongoing:
            return _RunRecord(created_per_move, moves, None, None, None, True)
        order = tuple(idmap[h.id] for h in state.board)
        return _RunRecord(created_per_move, moves, state.win.color, state.turns,
                          order, False)

    for depth in range(len(prefix) + 1):
        if state.win is not None:
            return finish(False)
        move = builder.next_move(state)
        created_per_move.append(flush_creations(depth))
        if state.win is not None:  # a vertex creation alone ended the game
            return finish(False)
        u, v = move
        moves.append((idmap[u.id], idmap[v.id]))
        if depth == len(prefix):
            return finish(True)
        token = state.propose_edge(u, v)
        state.paint(token, prefix[depth])
    return finish(state.win is None)


def enumerate_game_tree(builder_factory: Callable[[], object],
                        g1: OrderedGraph, g2: OrderedGraph,
                        depth_cap: int) -> DecisionTree:
    """Explore every painter color sequence against the builder.

    `builder_factory` must produce a fresh deterministic builder per call;
    one game is replayed per tree node.  Raises EnumerationError when some
    branch is still ongoing at depth_cap.
    """
    identities: dict = {}
    nodes: list[TreeNode] = []

    def explore(prefix: tuple[str, ...]) -> TreeNode:
        record = _simulate(builder_factory, g1, g2, prefix, identities)
        node = TreeNode(node_id=len(nodes), prefix=prefix)
        nodes.append(node)
        if not record.ongoing:
            node.is_leaf = True
            node.winner = record.winner
            node.turns = record.turns
            node.final_order = record.final_order
            return node
        if len(prefix) >= depth_cap:
            raise EnumerationError(
                f"branch {''.join(prefix)!r} still ongoing at depth {depth_cap}"
            )
        node.created = record.created[len(prefix)]
        node.move = record.moves[len(prefix)]
        for color in (RED, BLUE):
            node.children[color] = explore(prefix + (color,))
        return node

    root = explore(())
    return DecisionTree(root=root, nodes=nodes, red_target=g1, blue_target=g2)


# ---------------------------------------------------------------------------
# Integer assignment (restriction bound)
# ---------------------------------------------------------------------------

def compute_restriction_bound(tree: DecisionTree) -> tuple[int, dict[int, int]]:
    """Merge all branches' board orders and number the vertices 1..N.

    Every leaf's final board order is a chain over vertex identities; the
    union of the chains is acyclic because two branches sharing a vertex
    created it under the same painter prefix, when its position relative to
    all other shared vertices was already fixed.  A topological order of
    the union gives a single integer per identity, the same on every
    branch, and N is the total count.
    """
    succ: dict[int, set[int]] = {}
    indeg: dict[int, int] = {}
    for leaf in tree.leaves():
        for ident in leaf.final_order or ():
            succ.setdefault(ident, set())
            indeg.setdefault(ident, 0)
        order = leaf.final_order or ()
        for a, b in zip(order, order[1:]):
            if b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1
    assignment: dict[int, int] = {}
    ready = sorted(v for v, d in indeg.items() if d == 0)
    while ready:
        v = ready.pop(0)
        assignment[v] = len(assignment) + 1
        for w in sorted(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    if len(assignment) != len(indeg):
        raise EnumerationError("inconsistent vertex orders across branches")
    return len(assignment), assignment


# ---------------------------------------------------------------------------
# Compiled strategy on a fixed integer board
# ---------------------------------------------------------------------------

class CompiledBuilder:
    """Replays the decision tree on a board of N pre-created vertices."""

    def __init__(self, tree: DecisionTree, assignment: dict[int, int],
                 board_size: int):
        self.tree = tree
        self.assignment = assignment
        self.board_size = board_size
        self._verts = None
        self._node = tree.root

    def next_move(self, state: GameState):
        if self._verts is None:
            self._verts = [state.new_vertex("rightmost")
                           for _ in range(self.board_size)]
        # Resynchronize with the painter's colors so far.
        node = self.tree.root
        for edge in state.edges:
            node = node.children[edge.color]
        if node.is_leaf:
            raise EnumerationError("compiled strategy asked to move in a won position")
        u_ident, v_ident = node.move
        return (self._verts[self.assignment[u_ident] - 1],
                self._verts[self.assignment[v_ident] - 1])


def compile_to_integer_strategy(tree: DecisionTree,
                                assignment: Optional[dict[int, int]] = None
                                ) -> tuple[Callable[[], CompiledBuilder], int]:
    """Return (factory for compiled builders, board size N)."""
    if assignment is None:
        n, assignment = compute_restriction_bound(tree)
    else:
        n = max(assignment.values(), default=0)
    return (lambda: CompiledBuilder(tree, assignment, n)), n


def replay_compiled(tree: DecisionTree, depth_cap: Optional[int] = None
                    ) -> dict[tuple[str, ...], tuple[Optional[str], int]]:
    """Run the compiled strategy over all painter sequences.

    Returns {leaf prefix: (winner, turns)}; raises if any branch disagrees
    with the original tree's leaf.
    """
    factory, n = compile_to_integer_strategy(tree)
    results = {}
    for leaf in tree.leaves():
        state = GameState(tree.red_target, tree.blue_target)
        builder = factory()
        painter = _ScriptedPainter(leaf.prefix)
        while state.win is None:
            move = builder.next_move(state)
            if state.win is not None:
                break
            token = state.propose_edge(*move)
            state.paint(token, painter.choose_color(state, move))
        winner = state.win.color if state.win else None
        results[leaf.prefix] = (winner, state.turns)
        if winner != leaf.winner or state.turns != leaf.turns:
            raise EnumerationError(
                f"compiled branch {''.join(leaf.prefix)!r} diverged: "
                f"{winner}/{state.turns} vs original {leaf.winner}/{leaf.turns}"
            )
    return results


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def tree_to_json_dict(tree: DecisionTree,
                      assignment: Optional[dict[int, int]] = None) -> dict:
    if assignment is None:
        _, assignment = compute_restriction_bound(tree)
    nodes = []
    for node in tree.nodes:
        entry: dict = {
            "id": node.node_id,
            "prefix": "".join(node.prefix),
            "created": [
                {"vertex": ident, "placement": place[0],
                 "after": place[1], "before": place[2]}
                for ident, place in node.created
            ],
        }
        if node.is_leaf:
            entry["winner"] = node.winner
            entry["turns"] = node.turns
        else:
            entry["move"] = list(node.move)
            entry["children"] = {c: ch.node_id for c, ch in node.children.items()}
        if assignment and not node.is_leaf:
            entry["move_board"] = sorted(
                (assignment[node.move[0]], assignment[node.move[1]])
            )
        nodes.append(entry)
    return {
        "red": str(tree.red_target),
        "blue": str(tree.blue_target),
        "board_size": max(assignment.values(), default=0),
        "nodes": nodes,
    }
