"""Game board, colored-edge bookkeeping, win detection, and transcripts.

The board is a dense linear order: Builder may insert a fresh vertex at the
left end, the right end, or strictly between any two existing vertices.
Order keys are exact rationals, so insertion never disturbs existing
handles.  Win detection runs after every paint and also after vertex
creation (an edgeless target is contained as soon as enough vertices
exist), so the recorded win turn is always the earliest possible one.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graphs import Embedding, OrderedGraph, contains, parse_graph_spec

RED = "r"
BLUE = "b"
COLORS = (RED, BLUE)

log = logging.getLogger(__name__)


class GameError(RuntimeError):
    """Illegal use of the game surface: bad placement, duplicate edge, etc."""


class TranscriptError(ValueError):
    """Malformed or unreplayable transcript."""


@dataclass(frozen=True)
class VertexHandle:
    id: int
    position: Fraction

    def __lt__(self, other: "VertexHandle") -> bool:
        return self.position < other.position


@dataclass(frozen=True)
class ColoredEdge:
    u: VertexHandle  # u strictly precedes v in board order
    v: VertexHandle
    color: str
    turn: int


@dataclass(frozen=True)
class PendingMove:
    u: VertexHandle
    v: VertexHandle


@dataclass
class WinStatus:
    color: str
    witness: Embedding  # over board ranks at win time (final ranks: board frozen)


class GameState:
    """One game in progress: ordered vertices, colored edges, status."""

    def __init__(self, red_target: OrderedGraph, blue_target: OrderedGraph):
        self.red_target = red_target
        self.blue_target = blue_target
        self._handles: list[VertexHandle] = []  # kept sorted by position
        self._next_id = 0
        # (id, placement, a_id, b_id) per creation, for strategy compilation
        self.creation_log: list[tuple[int, str, Optional[int], Optional[int]]] = []
        self.edges: list[ColoredEdge] = []
        self._pair_set: set[frozenset[int]] = set()
        self.pending: Optional[PendingMove] = None
        self.win: Optional[WinStatus] = None

    # -- board -------------------------------------------------------------

    @property
    def board(self) -> list[VertexHandle]:
        return list(self._handles)

    @property
    def num_vertices(self) -> int:
        return len(self._handles)

    @property
    def turns(self) -> int:
        return len(self.edges)

    @property
    def status(self) -> str:
        if self.win is None:
            return "ongoing"
        return "red_win" if self.win.color == RED else "blue_win"

    def rank(self, h: VertexHandle) -> int:
        """1-based position of a handle in the current board order."""
        lo, hi = 0, len(self._handles)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._handles[mid].position < h.position:
                lo = mid + 1
            else:
                hi = mid
        if lo >= len(self._handles) or self._handles[lo].id != h.id:
            raise GameError(f"unknown handle {h.id}")
        return lo + 1

    def handle_at_rank(self, rank: int) -> VertexHandle:
        if not 1 <= rank <= len(self._handles):
            raise GameError(f"rank {rank} out of range 1..{len(self._handles)}")
        return self._handles[rank - 1]

    def new_vertex(self, placement="rightmost", a: VertexHandle = None,
                   b: VertexHandle = None) -> VertexHandle:
        if placement == "leftmost":
            pos = self._handles[0].position - 1 if self._handles else Fraction(0)
            idx = 0
        elif placement == "rightmost":
            pos = self._handles[-1].position + 1 if self._handles else Fraction(0)
            idx = len(self._handles)
        elif placement == "between":
            if a is None or b is None:
                raise GameError("between placement needs two handles")
            if not b.position > a.position:
                raise GameError("between(a, b) requires a strictly before b")
            # Split the gap between a and its immediate successor; that spot
            # is strictly inside (a, b) even when other handles intervene.
            idx = self.rank(a)  # 0-based index of a's successor
            succ = self._handles[idx]
            pos = (a.position + succ.position) / 2
        else:
            raise GameError(f"unknown placement {placement!r}")
        h = VertexHandle(self._next_id, pos)
        self._next_id += 1
        self._handles.insert(idx, h)
        self.creation_log.append(
            (h.id, placement, a.id if a is not None else None,
             b.id if b is not None else None)
        )
        self._check_edgeless_win()
        return h

    # -- moves ---------------------------------------------------------------

    def propose_edge(self, u: VertexHandle, v: VertexHandle) -> PendingMove:
        if self.win is not None:
            raise GameError("game already won")
        if self.pending is not None:
            raise GameError("previous move not yet painted")
        if u.id == v.id:
            raise GameError("edge endpoints must differ")
        if v.position < u.position:
            u, v = v, u
        if frozenset((u.id, v.id)) in self._pair_set:
            raise GameError(f"pair ({u.id},{v.id}) already colored")
        self.pending = PendingMove(u, v)
        return self.pending

    def paint(self, token: PendingMove, color: str) -> "GameState":
        if self.pending is None or token is not self.pending:
            raise GameError("no such pending move")
        if color not in COLORS:
            raise GameError(f"color must be 'r' or 'b', got {color!r}")
        self.pending = None
        edge = ColoredEdge(token.u, token.v, color, self.turns + 1)
        self.edges.append(edge)
        self._pair_set.add(frozenset((token.u.id, token.v.id)))
        self._check_win_after_edge(edge)
        return self

    # -- win detection -------------------------------------------------------

    def color_subgraph(self, color: str) -> OrderedGraph:
        """The board as an ordered graph keeping only one color's edges."""
        ranks = {h.id: i + 1 for i, h in enumerate(self._handles)}
        return OrderedGraph.build(
            len(self._handles),
            ((ranks[e.u.id], ranks[e.v.id]) for e in self.edges if e.color == color),
        )

    def _target(self, color: str) -> OrderedGraph:
        return self.red_target if color == RED else self.blue_target

    def _check_edgeless_win(self):
        if self.win is not None:
            return
        for color in COLORS:
            target = self._target(color)
            if target.is_edgeless() and self.num_vertices >= target.n:
                self.win = WinStatus(color, Embedding(tuple(range(1, target.n + 1))))
                return

    def _check_win_after_edge(self, edge: ColoredEdge):
        if self.win is not None:
            return
        host = self.color_subgraph(edge.color)
        new = (self.rank(edge.u), self.rank(edge.v))
        emb = contains(self._target(edge.color), host, required_edge=new)
        if emb is not None:
            self.win = WinStatus(edge.color, emb)

    def recheck_win_from_scratch(self) -> Optional[WinStatus]:
        """Full-board containment check; test oracle for incremental detection."""
        for color in COLORS:
            target = self._target(color)
            if target.is_edgeless():
                if self.num_vertices >= target.n:
                    return WinStatus(color, Embedding(tuple(range(1, target.n + 1))))
                continue
            emb = contains(target, self.color_subgraph(color))
            if emb is not None:
                return WinStatus(color, emb)
        return None


def realized_pattern(state: GameState) -> OrderedGraph:
    """The winning color's subgraph induced on the witness vertices.

    The result is reindexed to 1..t in board order.  It always contains the
    winner's target, but can carry extra same-color edges; inspecting it
    answers which ordered shape a builder actually produced.
    """
    if state.win is None:
        raise GameError("no win to extract a pattern from")
    ranks = sorted(state.win.witness.map)
    index = {r: i + 1 for i, r in enumerate(ranks)}
    edges = []
    for e in state.edges:
        if e.color != state.win.color:
            continue
        ru, rv = state.rank(e.u), state.rank(e.v)
        if ru in index and rv in index:
            edges.append((index[ru], index[rv]))
    return OrderedGraph.build(len(ranks), edges)


# ---------------------------------------------------------------------------
# Matches and transcripts
# ---------------------------------------------------------------------------

@dataclass
class Transcript:
    red_target_spec: str
    blue_target_spec: str
    moves: list[tuple[int, int, str]]  # (u_rank, v_rank, color), final-order ranks
    winner: Optional[str]
    turns: int
    witness: Optional[list[int]]
    seed: Optional[int] = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "red": self.red_target_spec,
                "blue": self.blue_target_spec,
                "seed": self.seed,
                "moves": [[u, v, c] for u, v, c in self.moves],
                "winner": self.winner,
                "turns": self.turns,
                "witness": self.witness,
            }
        )


def state_to_transcript(state: GameState, red_spec: str, blue_spec: str,
                        seed: Optional[int] = None) -> Transcript:
    moves = [(state.rank(e.u), state.rank(e.v), e.color) for e in state.edges]
    witness = list(state.win.witness.map) if state.win else None
    return Transcript(
        red_target_spec=red_spec,
        blue_target_spec=blue_spec,
        moves=moves,
        winner=state.win.color if state.win else None,
        turns=state.turns,
        witness=witness,
        seed=seed,
    )


class MatchUnfinished(RuntimeError):
    """Turn cap reached before either player won."""

    def __init__(self, transcript: Transcript):
        super().__init__(f"turn cap reached after {transcript.turns} turns")
        self.transcript = transcript


def run_match(red_target: OrderedGraph, blue_target: OrderedGraph,
              builder, painter, turn_cap: int,
              red_spec: Optional[str] = None, blue_spec: Optional[str] = None,
              seed: Optional[int] = None) -> Transcript:
    """Alternate builder edge / painter color until a win or the cap.

    Strategy exceptions propagate: an invalid proposal is a strategy bug and
    is surfaced, not swallowed.
    """
    if turn_cap < 1:
        raise ValueError("turn_cap must be at least 1")
    state = GameState(red_target, blue_target)
    red_spec = red_spec if red_spec is not None else str(red_target)
    blue_spec = blue_spec if blue_spec is not None else str(blue_target)
    while state.win is None and state.turns < turn_cap:
        move = builder.next_move(state)
        if state.win is not None:
            break  # vertex creation alone finished the game (edgeless target)
        u, v = move
        token = state.propose_edge(u, v)
        color = painter.choose_color(state, (token.u, token.v))
        state.paint(token, color)
    transcript = state_to_transcript(state, red_spec, blue_spec, seed)
    if state.win is None:
        raise MatchUnfinished(transcript)
    log.info("%s wins in %d turns; realized pattern %s",
             state.win.color, state.turns, realized_pattern(state))
    return transcript


# ---------------------------------------------------------------------------
# Transcript serialization
# ---------------------------------------------------------------------------

def export_transcript(t: Transcript) -> bytes:
    return t.to_json().encode("utf-8")


def _require(cond: bool, msg: str):
    if not cond:
        raise TranscriptError(msg)


def import_transcript(data: bytes) -> Transcript:
    """Parse, schema-check, and replay-validate a serialized transcript."""
    try:
        obj = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise TranscriptError(f"not valid UTF-8 JSON: {exc}") from exc
    _require(isinstance(obj, dict), "transcript must be a JSON object")
    for key in ("red", "blue", "seed", "moves", "winner", "turns", "witness"):
        _require(key in obj, f"missing field {key!r}")
    _require(isinstance(obj["red"], str) and isinstance(obj["blue"], str),
             "targets must be spec strings")
    _require(obj["seed"] is None or isinstance(obj["seed"], int), "bad seed")
    _require(obj["winner"] in (None, RED, BLUE), "winner must be 'r', 'b', or null")
    _require(isinstance(obj["turns"], int), "turns must be an integer")
    _require(isinstance(obj["moves"], list), "moves must be a list")
    moves = []
    for mv in obj["moves"]:
        _require(isinstance(mv, list) and len(mv) == 3, f"bad move {mv!r}")
        u, v, c = mv
        _require(isinstance(u, int) and isinstance(v, int) and u >= 1 and v >= 1,
                 f"bad ranks in move {mv!r}")
        _require(u != v, f"loop in move {mv!r}")
        _require(c in COLORS, f"bad color in move {mv!r}")
        moves.append((u, v, c))
    witness = obj["witness"]
    if witness is not None:
        _require(isinstance(witness, list) and
                 all(isinstance(r, int) and r >= 1 for r in witness),
                 "witness must be a list of ranks")
    t = Transcript(obj["red"], obj["blue"], moves, obj["winner"], obj["turns"],
                   witness, obj["seed"])
    replay_transcript(t)  # raises on mismatch
    return t


def replay_transcript(t: Transcript) -> GameState:
    """Re-run the moves from an empty board and check the recorded outcome.

    The board is rebuilt with as many vertices as the largest rank mentioned
    anywhere; trailing vertices beyond that cannot affect when a win fires.
    """
    red = _parse_or_raise(t.red_target_spec)
    blue = _parse_or_raise(t.blue_target_spec)
    ranks = [r for u, v, _ in t.moves for r in (u, v)]
    if t.witness:
        ranks += list(t.witness)
    size = max(ranks, default=0)
    state = GameState(red, blue)
    for _ in range(size):
        state.new_vertex("rightmost")
    for turn, (u, v, c) in enumerate(t.moves, start=1):
        if state.win is not None:
            raise TranscriptError(f"extra move at turn {turn} after the game was won")
        pair = frozenset((u, v))
        if pair in {frozenset((a, b)) for a, b, _ in t.moves[: turn - 1]}:
            raise TranscriptError(f"pair {sorted(pair)} colored twice")
        try:
            token = state.propose_edge(state.handle_at_rank(u), state.handle_at_rank(v))
        except GameError as exc:
            raise TranscriptError(f"move {turn} invalid: {exc}") from exc
        state.paint(token, c)
    winner = state.win.color if state.win else None
    if winner != t.winner or state.turns != t.turns:
        raise TranscriptError(
            f"replay mismatch: got winner={winner!r} turns={state.turns}, "
            f"transcript says winner={t.winner!r} turns={t.turns}"
        )
    return state


def _parse_or_raise(spec: str) -> OrderedGraph:
    try:
        return parse_graph_spec(spec)
    except Exception as exc:
        raise TranscriptError(f"bad target spec {spec!r}: {exc}") from exc
