"""Orientations, shortcuts and the semi-transitive orientation search.

An acyclic orientation is semi-transitive iff it has no shortcut: no arc
u->v together with a directed u-v path through two vertices x, y (x before
y on the path) that are non-adjacent. With reachability bitmasks this is a
local test: for every arc u->v, the vertices lying on u-v paths, together
with u and v, must be pairwise adjacent whenever one reaches the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Colouring, Graph, GraphError, bits
from .outcome import BudgetExceeded, NodeCounter, SearchResult, Status


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    out: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        if len(self.out) != g.n:
            raise OrientationError("orientation size does not match graph")
        for u, row in enumerate(self.out):
            if row & ~g.adj[u]:
                raise OrientationError(f"arc from {u} is not an edge of the graph")
            for v in bits(row):
                if self.out[v] >> u & 1:
                    raise OrientationError(f"edge {u}{v} oriented both ways")
        for u, v in g.edges():
            if not (self.out[u] >> v & 1 or self.out[v] >> u & 1):
                raise OrientationError(f"edge ({u}, {v}) is not oriented")

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        out = [0] * g.n
        for u, v in arcs:
            if not (0 <= u < g.n and 0 <= v < g.n):
                raise OrientationError(f"arc ({u}, {v}) out of range")
            out[u] |= 1 << v
        return cls(g, tuple(out))

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> Orientation:
        """Every edge directed from the earlier vertex in `order` to the later."""
        pos = {v: i for i, v in enumerate(order)}
        return cls.from_arcs(g, [(u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges()])

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.graph.n) for v in bits(self.out[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)


def _reach(out: Sequence[int]) -> list[int]:
    """Strict reachability masks (v in reach[v] iff v lies on a cycle)."""
    n = len(out)
    reach = []
    for s in range(n):
        r = frontier = out[s]
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= out[v]
            frontier = nxt & ~r
            r |= frontier
        reach.append(r)
    return reach


def is_acyclic(o: Orientation) -> bool:
    return not any(r >> v & 1 for v, r in enumerate(_reach(o.out)))


def is_transitive(o: Orientation) -> bool:
    return all(o.out[u] & o.out[v] == o.out[v] for u in range(o.graph.n) for v in bits(o.out[u]))


@dataclass(frozen=True)
class ShortcutWitness:
    path: tuple[int, ...]
    shortcutting_edge: tuple[int, int]
    missing_pair: tuple[int, int]


def _path(out: Sequence[int], s: int, t: int) -> list[int]:
    """A shortest directed s-t path (s != t) by BFS."""
    parent = {s: s}
    frontier = [s]
    while frontier and t not in parent:
        nxt = []
        for u in frontier:
            for v in bits(out[u]):
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    if t not in parent:
        raise OrientationError(f"no path from {s} to {t}")
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def _violation(adj: Sequence[int], out: Sequence[int], reach: Sequence[int]):
    """First (u, v, x, y): arc u->v, u=>x=>y=>v with x, y non-adjacent; else None."""
    n = len(out)
    reached_by = [0] * n  # reached_by[v]: vertices with a path to v
    for x in range(n):
        for v in bits(reach[x]):
            reached_by[v] |= 1 << x
    for u in range(n):
        for v in bits(out[u]):
            inner = reach[u] & reached_by[v]
            if not inner:
                continue
            targets = inner | 1 << v
            for x in bits(inner | 1 << u):
                bad = reach[x] & targets & ~adj[x]
                if bad:
                    return u, v, x, (bad & -bad).bit_length() - 1
    return None


def find_shortcut(o: Orientation) -> ShortcutWitness | None:
    reach = _reach(o.out)
    if any(r >> v & 1 for v, r in enumerate(reach)):
        raise OrientationError("orientation has a directed cycle")
    hit = _violation(o.graph.adj, o.out, reach)
    if hit is None:
        return None
    u, v, x, y = hit
    path = _path(o.out, u, x)[:-1] if x != u else []
    path += _path(o.out, x, y)[:-1]
    path += _path(o.out, y, v)
    return ShortcutWitness(tuple(path), (u, v), (x, y))


def validate_witness(o: Orientation, w: ShortcutWitness) -> bool:
    """Independent re-check of a shortcut witness against its orientation."""
    p = w.path
    if len(p) < 4 or len(set(p)) != len(p):
        return False
    if not all(o.has_arc(a, b) for a, b in zip(p, p[1:])):
        return False
    if w.shortcutting_edge != (p[0], p[-1]) or not o.has_arc(p[0], p[-1]):
        return False
    x, y = w.missing_pair
    if x not in p or y not in p or p.index(x) >= p.index(y) or o.has_arc(x, y):
        return False
    sub = [v for v in p]
    index = {v: i for i, v in enumerate(sub)}
    sub_out = [0] * len(sub)
    for a in sub:
        for b in bits(o.out[a]):
            if b in index:
                sub_out[index[a]] |= 1 << index[b]
    return not any(r >> i & 1 for i, r in enumerate(_reach(sub_out)))


def is_semi_transitive(o: Orientation) -> bool:
    return is_acyclic(o) and find_shortcut(o) is None


# -- backtracking search -------------------------------------------------------


class _Conflict(Exception):
    pass


class _PartialOrientation:
    """Oriented-so-far arcs with incremental strict reachability."""

    __slots__ = ("adj", "n", "out", "reach", "free")

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.out = [0] * g.n
        self.reach = [0] * g.n
        self.free = [row for row in g.adj]  # unoriented neighbours

    def snapshot(self):
        return list(self.out), list(self.reach), list(self.free)

    def restore(self, snap) -> None:
        self.out, self.reach, self.free = (list(s) for s in snap)

    def add(self, u: int, v: int) -> None:
        """Orient u->v, then close under acyclicity forcing."""
        stack = [(u, v)]
        reach, free, out = self.reach, self.free, self.out
        while stack:
            a, b = stack.pop()
            if out[a] >> b & 1:
                continue
            if not free[a] >> b & 1 or reach[b] >> a & 1:
                raise _Conflict
            out[a] |= 1 << b
            free[a] &= ~(1 << b)
            free[b] &= ~(1 << a)
            gained = reach[b] | 1 << b
            for x in range(self.n):
                if x == a or reach[x] >> a & 1:
                    reach[x] |= gained
            # an unoriented edge xy with x => y must become x->y
            for x in range(self.n):
                forced = free[x] & reach[x]
                for y in bits(forced):
                    stack.append((x, y))

    def shortcut_free(self) -> bool:
        return _violation(self.adj, self.out, self.reach) is None


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    deg = [g.degree(v) for v in range(g.n)]
    return sorted(g.edges(), key=lambda e: (-min(deg[e[0]], deg[e[1]]), -max(deg[e[0]], deg[e[1]]), e))


def find_semi_transitive_orientation(g: Graph, node_limit: int | None = None) -> SearchResult:
    """Backtracking over edges; FOUND with an Orientation, NONE (exhaustive) or BUDGET."""
    counter = NodeCounter(node_limit)
    order = _edge_order(g)
    state = _PartialOrientation(g)

    def rec(i: int, root: bool) -> bool:
        counter.tick()
        while i < len(order) and not state.free[order[i][0]] >> order[i][1] & 1:
            i += 1
        if i == len(order):
            return True
        u, v = order[i]
        # reversing every arc preserves semi-transitivity, so the root edge has one direction
        for a, b in ((u, v),) if root else ((u, v), (v, u)):
            snap = state.snapshot()
            try:
                state.add(a, b)
                if state.shortcut_free() and rec(i + 1, False):
                    return True
            except _Conflict:
                pass
            state.restore(snap)
        return False

    try:
        ok = rec(0, True)
    except BudgetExceeded:
        return SearchResult(Status.BUDGET, nodes=counter.nodes)
    if not ok:
        return SearchResult(Status.NONE, nodes=counter.nodes)
    o = Orientation(g, tuple(state.out))
    return SearchResult(Status.FOUND, o, nodes=counter.nodes)


def is_word_representable(g: Graph) -> bool:
    return find_semi_transitive_orientation(g).found


# -- comparability ------------------------------------------------------------------


def is_comparability(g: Graph) -> Orientation | None:
    """A transitive orientation of g, or None.

    Backtracking with forcing: u->v and v->w force u->w (and need uw to be an
    edge); u->v with w adjacent to exactly one of u, v forces w->v or u->w.
    """
    n = g.n
    adj = g.adj
    order = _edge_order(g)
    out = [0] * n

    def force(u: int, v: int, out: list[int]) -> bool:
        stack = [(u, v)]
        while stack:
            a, b = stack.pop()
            if out[a] >> b & 1:
                continue
            if out[b] >> a & 1:
                return False
            out[a] |= 1 << b
            for w in range(n):
                if w == a or w == b:
                    continue
                wa, wb = adj[w] >> a & 1, adj[w] >> b & 1
                if wb and not wa:
                    stack.append((w, b))
                elif wa and not wb:
                    stack.append((a, w))
                if out[b] >> w & 1:  # a->b->w
                    if not wa:
                        return False
                    stack.append((a, w))
                if out[w] >> a & 1:  # w->a->b
                    if not wb:
                        return False
                    stack.append((w, b))
        return True

    def rec(i: int, out: list[int]) -> list[int] | None:
        while i < len(order) and (out[order[i][0]] >> order[i][1] & 1 or out[order[i][1]] >> order[i][0] & 1):
            i += 1
        if i == len(order):
            return out
        u, v = order[i]
        for a, b in ((u, v), (v, u)):
            trial = list(out)
            if force(a, b, trial):
                found = rec(i + 1, trial)
                if found is not None:
                    return found
        return None

    result = rec(0, out)
    if result is None:
        return None
    o = Orientation(g, tuple(result))
    if not is_transitive(o):
        raise AssertionError("comparability search produced a non-transitive orientation")
    return o


def orient_by_colouring(g: Graph, c: Colouring) -> Orientation:
    if c.graph != g:
        raise GraphError("colouring belongs to a different graph")
    colour = c.colour_of()
    arcs = []
    for u, v in g.edges():
        if colour[u] == colour[v]:
            raise GraphError(f"improper colouring: {u} and {v} share colour {colour[u]}")
        arcs.append((u, v) if colour[u] < colour[v] else (v, u))
    return Orientation.from_arcs(g, arcs)


def shortcut_colour_signature(w: ShortcutWitness, c: Colouring) -> tuple[int, ...]:
    """1-based colour indices along the witness path, e.g. (1, 2, 3, 4)."""
    colour = c.colour_of()
    return tuple(colour[v] + 1 for v in w.path)
