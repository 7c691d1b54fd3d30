"""Shared fixtures and brute-force oracles used across the suite."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import networkx as nx
import pytest

from wordrep.graph import Graph, build_graph, edge_count_between, enumerate_nonisomorphic, minimal_colourings, wheel_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def all_labelled(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def naive_semi_transitive(n: int, arcs) -> bool:
    """Acyclic and, for every directed path v0..vk (k >= 3) with arc v0->vk,
    all arcs vi->vj present. Plain path enumeration, no bit tricks."""
    out = {v: set() for v in range(n)}
    for u, v in arcs:
        out[u].add(v)
    arcset = set(arcs)

    def walk(path):
        last = path[-1]
        for w in out[last]:
            if w in path:
                return False  # cycle
            longer = path + [w]
            if len(longer) >= 4 and (longer[0], w) in arcset:
                if any((longer[i], longer[j]) not in arcset for i, j in combinations(range(len(longer)), 2)):
                    return False
            if not walk(longer):
                return False
        return True

    return all(walk([v]) for v in range(n))


def naive_word_representable(g: Graph) -> bool:
    """Every acyclic orientation comes from a vertex order; try them all."""
    seen = set()
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        arcs = tuple(sorted((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges()))
        if arcs in seen:
            continue
        seen.add(arcs)
        if naive_semi_transitive(g.n, arcs):
            return True
    return False


def naive_transitive_orientable(g: Graph) -> bool:
    edges = g.edges()
    for dirs in product((0, 1), repeat=len(edges)):
        arcs = {(u, v) if d == 0 else (v, u) for (u, v), d in zip(edges, dirs)}
        if all((a, d) in arcs for a, b in arcs for c, d in arcs if b == c):
            return True
    return False


def naive_chromatic(g: Graph) -> int:
    for k in range(g.n + 1):
        for cols in product(range(k), repeat=g.n):
            if all(cols[u] != cols[v] for u, v in g.edges()):
                return k
    return g.n


def singletons_form_clique(g: Graph) -> bool:
    """In every minimal colouring the singleton classes are pairwise adjacent."""
    for c in minimal_colourings(g):
        singles = [next(iter(cls)) for cls in c.classes if len(cls) == 1]
        if not g.is_clique(singles):
            return False
    return True


def lone_edge_property(g: Graph) -> bool:
    """Classes sorted a_1 >= ... >= a_i > a_{i+1} = ... = 1. If a big class
    V_s and a singleton class V_t = {y} share exactly one edge xy, then x and y
    are adjacent to every other singleton class vertex."""
    for c in minimal_colourings(g):
        classes = c.sorted_by_size().classes
        i = sum(1 for cls in classes if len(cls) > 1)
        singles = [next(iter(cls)) for cls in classes[i:]]
        for s in range(i):
            for y in singles:
                if edge_count_between(g, classes[s], {y}) != 1:
                    continue
                x = next(u for u in classes[s] if g.has_edge(u, y))
                if any(z != y and not (g.has_edge(x, z) and g.has_edge(y, z)) for z in singles):
                    return False
    return True


@pytest.fixture(scope="session")
def classes_upto6():
    return {n: list(enumerate_nonisomorphic(n)) for n in range(7)}


@pytest.fixture
def w5():
    return wheel_graph(5)


# -- acceptance reporting -------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
