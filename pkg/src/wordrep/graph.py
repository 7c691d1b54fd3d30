"""Undirected simple graphs on dense labels 0..n-1, stored as adjacency bitmasks.

Also holds the colouring machinery (chromatic number, minimal colourings and
their size profiles), the split-partition search, isomorphism canonicalization
and the isomorph-free enumerator used by the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
MAX_CANONICAL = 10
MAX_ENUMERATE = 7


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or row >> u & 1:
                raise GraphError(f"bad adjacency row for vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- basic views -------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not self.adj[v] & m for v in bits(m))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all((self.adj[v] | 1 << v) & m == m for v in bits(m))

    # -- derived graphs ----------------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return build_graph(self.n, self.edges() + list(edges))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def complement(self) -> Graph:
        full = self.all_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph on `vertices`, relabelled so vertices[i] becomes i."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("repeated vertex in induced subgraph")
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return build_graph(len(vertices), edges)

    def delete_vertex(self, v: int) -> Graph:
        return self.induced_subgraph([u for u in range(self.n) if u != v])

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel vertex v as perm[v]."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def wheel_graph(rim: int) -> Graph:
    """Cycle 0..rim-1 plus a hub `rim` joined to every rim vertex (W5 for rim=5)."""
    return build_graph(rim + 1, [(i, (i + 1) % rim) for i in range(rim)] + [(rim, i) for i in range(rim)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return build_graph(offset, edges)


def edge_count_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    xm, ym = mask_of(xs), mask_of(ys)
    if xm & ym:
        raise GraphError("vertex sets overlap")
    return sum((g.adj[x] & ym).bit_count() for x in bits(xm))


# -- colouring ---------------------------------------------------------------


@dataclass(frozen=True)
class Colouring:
    graph: Graph
    classes: tuple[frozenset[int], ...]
    minimal: bool = False

    def __post_init__(self):
        seen: set[int] = set()
        for cls in self.classes:
            if seen & cls:
                raise GraphError("colour classes overlap")
            seen |= cls
            if not self.graph.is_independent(cls):
                raise GraphError(f"colour class {sorted(cls)} is not independent")
        if seen != set(self.graph.vertices):
            raise GraphError("colour classes do not cover the vertex set")

    @property
    def k(self) -> int:
        return len(self.classes)

    def colour_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def profile(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.classes), reverse=True))

    def sorted_by_size(self) -> Colouring:
        """Classes reordered so that a_1 >= a_2 >= ... (ties by smallest vertex)."""
        order = sorted(self.classes, key=lambda c: (-len(c), min(c)))
        return Colouring(self.graph, tuple(order), self.minimal)


def _greedy_clique(g: Graph) -> int:
    best = 0
    for start in range(g.n):
        cand = g.adj[start]
        size = 1
        while cand:
            v = max(bits(cand), key=lambda u: (g.adj[u] & cand).bit_count())
            size += 1
            cand &= g.adj[v]
        best = max(best, size)
    return best


def k_colouring(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with colours 0..k-1 as a list, or None (DSATUR-ordered backtracking)."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    colour = [-1] * n
    # forbidden[v] = bitmask of colours used by neighbours
    forbidden = [0] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colour[v] < 0:
                kk = (forbidden[v].bit_count(), g.degree(v))
                if key is None or kk > key:
                    best, key = v, kk
        return best

    def solve(coloured: int, used: int) -> bool:
        if coloured == n:
            return True
        v = pick()
        # symmetry: a fresh colour is only tried once
        limit = min(k, used + 1)
        for c in range(limit):
            if forbidden[v] >> c & 1:
                continue
            colour[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if colour[u] < 0 and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
            if solve(coloured + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            colour[v] = -1
        return False

    return colour if solve(0, 0) else None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = _greedy_clique(g)
    while k_colouring(g, k) is None:
        k += 1
    return k


def minimal_colourings(g: Graph) -> Iterator[Colouring]:
    """All proper colourings with exactly chi(G) classes, classes ordered by minimum vertex."""
    n = g.n
    if n == 0:
        return
    chi = chromatic_number(g)
    classes: list[int] = []

    def rec(v: int) -> Iterator[Colouring]:
        if v == n:
            if len(classes) == chi:
                yield Colouring(g, tuple(frozenset(bits(c)) for c in classes), minimal=True)
            return
        if chi - len(classes) > n - v:
            return
        for i, c in enumerate(classes):
            if not g.adj[v] & c:
                classes[i] = c | 1 << v
                yield from rec(v + 1)
                classes[i] = c
        if len(classes) < chi:
            classes.append(1 << v)
            yield from rec(v + 1)
            classes.pop()

    yield from rec(0)


def colour_profiles(g: Graph) -> set[tuple[int, ...]]:
    if g.n == 0:
        return {()}
    return {c.profile() for c in minimal_colourings(g)}


# -- independent sets and split partitions ----------------------------------


def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """Bitmasks of all maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    comp = g.complement().adj

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (comp[u] & p).bit_count())
        for v in bits(p & ~comp[pivot]):
            yield from bk(r | 1 << v, p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from bk(0, g.all_mask, 0)


def find_split_partition(g: Graph):
    """(A, B) with B independent and G[A] a comparability graph, or None.

    Only maximal independent sets need checking, since comparability is
    hereditary; they are tried from largest down.
    """
    from .semitrans import is_comparability

    candidates = sorted(maximal_independent_sets(g), key=lambda m: (-m.bit_count(), list(bits(m))))
    for b in candidates:
        a = [v for v in range(g.n) if not b >> v & 1]
        if is_comparability(g.induced_subgraph(a)) is not None:
            return frozenset(a), frozenset(bits(b))
    return None


# -- canonical form and enumeration -------------------------------------------


def _refine(g: Graph) -> list[int]:
    """Colour refinement from degrees; returns an isomorphism-invariant colour per vertex."""
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_labelling(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) giving the canonical adjacency string."""
    n = g.n
    if n > MAX_CANONICAL:
        raise GraphError(f"canonical form supports at most {MAX_CANONICAL} vertices")
    colour = _refine(g)
    cell_of_position = sorted(colour)
    adj = g.adj
    best_cols: list[int] | None = None
    best_order: list[int] = []
    order: list[int] = []

    # Column j holds the bits adj(order[i], order[j]) for i < j, packed with
    # order[0] as the most significant bit so integer comparison is lexicographic.
    def rec(pos: int, used: int, cols: list[int]):
        nonlocal best_cols, best_order
        if pos == n:
            if best_cols is None or cols < best_cols:
                best_cols = list(cols)
                best_order = list(order)
            return
        want = cell_of_position[pos]
        for v in range(n):
            if used >> v & 1 or colour[v] != want:
                continue
            col = 0
            row = adj[v]
            for u in order:
                col = col << 1 | (row >> u & 1)
            cols.append(col)
            if best_cols is None or cols <= best_cols[: pos + 1]:
                order.append(v)
                rec(pos + 1, used | 1 << v, cols)
                order.pop()
            cols.pop()

    rec(0, 0, [])
    return best_order


def canonical_form(g: Graph) -> str:
    """Lexicographically minimal column-major upper-triangle bit string over
    colour-refinement-respecting relabellings; equal iff isomorphic."""
    order = canonical_labelling(g)
    return "".join(
        "1" if g.has_edge(order[i], order[j]) else "0" for j in range(g.n) for i in range(j)
    )


def graph_from_bitstring(n: int, s: str) -> Graph:
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if len(s) != len(pairs):
        raise GraphError("bit string length does not match vertex count")
    return build_graph(n, [p for p, b in zip(pairs, s) if b == "1"])


def canonical_graph(g: Graph) -> Graph:
    return graph_from_bitstring(g.n, canonical_form(g))


def enumerate_nonisomorphic(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Built by augmenting every (n-1)-vertex representative with a new vertex
    in all 2^(n-1) ways. n = 8 (12346 classes, under a minute) requires allow_large.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    if n > MAX_ENUMERATE and not (allow_large and n <= 8):
        raise GraphError(f"enumeration above {MAX_ENUMERATE} vertices needs allow_large (n <= 8)")
    yield from _classes(n)


def _classes(n: int) -> list[Graph]:
    if n <= 1:
        return [empty_graph(n)]
    seen: dict[str, Graph] = {}
    for base in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for u in bits(nbrs):
                adj[u] |= 1 << (n - 1)
            key = canonical_form(Graph(n, tuple(adj)))
            if key not in seen:
                seen[key] = graph_from_bitstring(n, key)
    return [seen[k] for k in sorted(seen)]
