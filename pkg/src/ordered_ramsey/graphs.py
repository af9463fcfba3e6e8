"""Ordered graphs on vertices 1..n and order-preserving containment search.

An ordered graph is a graph whose vertex set is the integer interval
[1, n]; a copy of a target inside a host must map vertices injectively,
preserving both the edges and the left-to-right order.  This module holds
the immutable graph value, the standard ordered families (monotone path,
monotone cycle, clique, natural biclique, two-sided star), degree and
structural statistics, and the containment search used for win detection
everywhere else in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, int]


class GraphSpecError(ValueError):
    """Raised for malformed graph spec strings or invalid parameters."""


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphSpecError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OrderedGraph:
    """Immutable ordered graph: vertices 1..n, edges as sorted (i, j) pairs."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphSpecError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise GraphSpecError(f"edge ({u},{v}) out of range for n={self.n}")

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]]) -> "OrderedGraph":
        return OrderedGraph(n, frozenset(_normalize_edge(u, v) for u, v in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors_left(self, v: int) -> list[int]:
        return sorted(u for u, w in self.edges if w == v)

    def neighbors_right(self, v: int) -> list[int]:
        return sorted(w for u, w in self.edges if u == v)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_edgeless(self) -> bool:
        return not self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __str__(self) -> str:
        body = ",".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"custom:{self.n}:{body}"


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex left/right degrees and their maxima."""

    left_degrees: tuple[int, ...]
    right_degrees: tuple[int, ...]
    max_left: int
    max_right: int


@dataclass(frozen=True)
class Embedding:
    """Order-preserving map: target vertex i -> host vertex map[i-1]."""

    map: tuple[int, ...]

    def image(self, target_vertex: int) -> int:
        return self.map[target_vertex - 1]


# ---------------------------------------------------------------------------
# Families and parsing
# ---------------------------------------------------------------------------

def path(n: int) -> OrderedGraph:
    _require_positive(n, "path")
    return OrderedGraph.build(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> OrderedGraph:
    _require_positive(n, "cycle")
    if n < 3:
        raise GraphSpecError("cycle needs at least 3 vertices")
    return OrderedGraph.build(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def clique(n: int) -> OrderedGraph:
    _require_positive(n, "clique")
    return OrderedGraph.build(n, combinations(range(1, n + 1), 2))


def biclique(m: int, n: int) -> OrderedGraph:
    _require_positive(m, "biclique")
    _require_positive(n, "biclique")
    return OrderedGraph.build(
        m + n, ((i, j) for i in range(1, m + 1) for j in range(m + 1, m + n + 1))
    )


def two_sided_star(a: int, b: int) -> OrderedGraph:
    """Star with its center at position a+1: a leaves left, b leaves right."""
    _require_positive(a, "star")
    _require_positive(b, "star")
    c = a + 1
    n = a + b + 1
    return OrderedGraph.build(n, ((c, v) for v in range(1, n + 1) if v != c))


def cstar_cycle(k: int) -> OrderedGraph:
    """The ordered k-cycle pattern {v1v2, v1v3, v3v4, ..., v(k-1)vk, v2vk}.

    This is the pattern forced by the adaptive cycle-vs-biclique builder.
    For k=3 it coincides with the monotone cycle C_3; for k>=4 it differs
    from the monotone ordering (the wrap vertex v2 sits second, not last).
    """
    if k < 3:
        raise GraphSpecError("cstar cycle needs at least 3 vertices")
    if k == 3:
        return cycle(3)
    edges = [(1, 2), (1, 3)]
    edges += [(i, i + 1) for i in range(3, k)]
    edges.append((2, k))
    return OrderedGraph.build(k, edges)


def edgeless(n: int) -> OrderedGraph:
    _require_positive(n, "edgeless")
    return OrderedGraph(n, frozenset())


def _require_positive(x: int, family: str):
    if x < 1:
        raise GraphSpecError(f"{family} parameter must be positive, got {x}")


def from_family(name: str, *params: int) -> OrderedGraph:
    """Build a natural-ordered family member: path, cycle, clique, biclique, star."""
    builders = {
        "path": (1, path),
        "cycle": (1, cycle),
        "clique": (1, clique),
        "biclique": (2, biclique),
        "star": (2, two_sided_star),
    }
    if name not in builders:
        raise GraphSpecError(f"unknown family {name!r}")
    arity, fn = builders[name]
    if len(params) != arity:
        raise GraphSpecError(f"family {name} takes {arity} parameter(s)")
    return fn(*params)


_SPEC_RE = re.compile(
    r"^(?:"
    r"(path|cycle|clique):(\d+)"
    r"|(biclique|star):(\d+),(\d+)"
    r"|custom:(\d+):((?:\d+-\d+)(?:,\d+-\d+)*)?"
    r")$"
)


def parse_graph_spec(text: str) -> OrderedGraph:
    """Parse `path:n | cycle:n | clique:n | biclique:m,n | star:a,b | custom:n:<i-j,...>`."""
    m = _SPEC_RE.match(text)
    if m is None:
        raise GraphSpecError(_spec_error_message(text))
    if m.group(1):
        return from_family(m.group(1), int(m.group(2)))
    if m.group(3):
        return from_family(m.group(3), int(m.group(4)), int(m.group(5)))
    n = int(m.group(6))
    _require_positive(n, "custom")
    body = m.group(7) or ""
    edges = []
    for part in filter(None, body.split(",")):
        a, b = part.split("-")
        u, v = _normalize_edge(int(a), int(b))
        if v > n:
            raise GraphSpecError(f"endpoint {v} out of range 1..{n} in {text!r}")
        if u < 1:
            raise GraphSpecError(f"endpoint {u} out of range 1..{n} in {text!r}")
        edges.append((u, v))
    return OrderedGraph.build(n, edges)


def _spec_error_message(text: str) -> str:
    # Report the position of the first character that cannot extend a match.
    for pos in range(len(text), -1, -1):
        if any(_SPEC_RE.match(text[:pos] + tail) for tail in ("", "1", "1:1-2", ",1")):
            break
    else:
        pos = 0
    return f"bad graph spec {text!r} (syntax error near position {pos})"


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

def degree_profile(g: OrderedGraph) -> DegreeProfile:
    left = [0] * g.n
    right = [0] * g.n
    for u, v in g.edges:
        right[u - 1] += 1
        left[v - 1] += 1
    return DegreeProfile(
        left_degrees=tuple(left),
        right_degrees=tuple(right),
        max_left=max(left, default=0),
        max_right=max(right, default=0),
    )


def interval_chromatic_number(g: OrderedGraph) -> int:
    """Least k with 1..n split into k consecutive independent intervals.

    Greedy left-to-right extension is optimal: in any valid partition the
    greedy interval boundary is never earlier than necessary, so swapping a
    partition's first interval for the greedy one keeps the rest feasible
    (an edge inside a later interval would already have been inside it).
    """
    if g.n == 0:
        return 0
    adj = {v: set() for v in range(1, g.n + 1)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    k = 1
    start = 1
    for v in range(2, g.n + 1):
        if any(start <= u < v for u in adj[v]):
            k += 1
            start = v
    return k


def vertex_cover_number(g: OrderedGraph) -> int:
    """Exact cover number by branch-and-bound on an uncovered edge."""

    def solve(edges: frozenset[Edge], budget: int) -> Optional[int]:
        # Returns the cover size if <= budget, else None.
        if not edges:
            return 0
        if budget <= 0:
            return None
        u, v = next(iter(edges))
        best = None
        for pick in (u, v):
            rest = frozenset(e for e in edges if pick not in e)
            sub = solve(rest, budget - 1)
            if sub is not None and (best is None or sub + 1 < best):
                best = sub + 1
                budget = best - 1  # only accept strictly better from here
        return best

    for budget in range(g.n + 1):
        result = solve(g.edges, budget)
        if result is not None:
            return result
    return g.n


@dataclass(frozen=True)
class CoverInequalityReport:
    num_edges: int
    max_degree: int
    cover_number: int
    holds: bool


def cover_inequality_check(g: OrderedGraph) -> CoverInequalityReport:
    """Check the counting inequality |E| <= max-degree * cover-number."""
    prof = degree_profile(g)
    delta = max(
        (prof.left_degrees[i] + prof.right_degrees[i] for i in range(g.n)), default=0
    )
    tau = vertex_cover_number(g)
    return CoverInequalityReport(g.num_edges, delta, tau, g.num_edges <= delta * tau)


def reverse(g: OrderedGraph) -> OrderedGraph:
    """Mirror the vertex order: i -> n+1-i."""
    return OrderedGraph.build(g.n, ((g.n + 1 - v, g.n + 1 - u) for u, v in g.edges))


# ---------------------------------------------------------------------------
# Containment
# ---------------------------------------------------------------------------

def contains(
    target: OrderedGraph,
    host: OrderedGraph,
    required_edge: Optional[Edge] = None,
) -> Optional[Embedding]:
    """Find an order-preserving embedding of target into host, if any.

    Isolated target vertices are mapped too (they consume host positions and
    impose order constraints).  When `required_edge` is given, only
    embeddings mapping some target edge onto that host edge are accepted;
    this is the incremental form used after a single new edge appears.

    Target vertices are filled left to right; candidates are pruned on
    remaining host room and on host left/right degree feasibility.
    """
    t, h = target.n, host.n
    if t == 0:
        return Embedding(())
    if t > h:
        return None

    t_prof = degree_profile(target)
    h_prof = degree_profile(host)
    host_edges = host.edges
    # Left-neighbors of each target vertex among already-placed vertices.
    left_nbrs = [target.neighbors_left(v) for v in range(1, t + 1)]

    if required_edge is None:
        anchor_choices = [dict()]
    else:
        a, b = required_edge
        if required_edge not in host_edges:
            return None
        anchor_choices = [
            {u: a, v: b} for u, v in target.sorted_edges()
        ]

    for anchors in anchor_choices:
        mapping = [0] * t

        def place(idx: int, lo: int) -> bool:
            # idx is 0-based target vertex index; lo is the least host vertex allowed.
            if idx == t:
                return True
            tv = idx + 1
            if tv in anchors:
                candidates = [anchors[tv]] if anchors[tv] >= lo else []
            else:
                hi = h - (t - tv)  # leave room for the remaining target vertices
                candidates = range(lo, hi + 1)
            for hv in candidates:
                if (
                    h_prof.left_degrees[hv - 1] < t_prof.left_degrees[idx]
                    or h_prof.right_degrees[hv - 1] < t_prof.right_degrees[idx]
                ):
                    continue
                ok = all((mapping[u - 1], hv) in host_edges for u in left_nbrs[idx])
                if not ok:
                    continue
                mapping[idx] = hv
                if place(idx + 1, hv + 1):
                    return True
            return False

        if place(0, 1):
            return Embedding(tuple(mapping))
    return None


def contains_bruteforce(target: OrderedGraph, host: OrderedGraph) -> Optional[Embedding]:
    """Independent oracle: enumerate every order-preserving injection."""
    if target.n > host.n:
        return None
    for combo in combinations(range(1, host.n + 1), target.n):
        if all((combo[u - 1], combo[v - 1]) in host.edges for u, v in target.edges):
            return Embedding(tuple(combo))
    return None
