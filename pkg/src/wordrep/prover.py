"""Rule-based prover for 1-11-representability.

Stages, cheapest first:

1. word_rep      the graph itself is semi-transitively orientable
2. single_edge   one added edge makes it word-representable
3. matching      a larger added matching does
4. star          edges added at one vertex do
5. multi_set     edges added inside colour classes of a minimal colouring do
6. split         independent set plus comparability part
7. deletion      G - v is a comparability or circle graph
8. combinator    disjoint union, cut vertex, bridge, or degree-2 ear over an edge

A stage failing is not evidence of anything; when all fail the result is
`Unknown`.
"""

from __future__ import annotations

import logging
from itertools import combinations

from .certificate import (
    Combinator,
    DirectWord,
    Matching,
    MultiSetRemoval,
    Part,
    RepWitness,
    Split,
    Star,
    Unknown,
    VertexDeletion,
    WordRep,
    check_certificate,
)
from .graph import Graph, bits, find_split_partition, minimal_colourings
from .outcome import BudgetExceeded, Status
from .search import SearchBudget, find_word_representant, is_circle
from .semitrans import find_semi_transitive_orientation, is_comparability
from .words import is_k11_representant

log = logging.getLogger(__name__)

STAGES = (
    "word_rep",
    "single_edge",
    "matching",
    "star",
    "multi_set",
    "split",
    "deletion",
    "combinator",
)

# caps on candidate families so one graph cannot run away
MAX_STAR_SUBSETS = 1 << 12
MAX_MULTISET_SUBSETS = 1 << 10
MAX_COLOURINGS = 64


class _OutOfBudget(Exception):
    pass


def _witness(g: Graph, budget: SearchBudget) -> RepWitness | None:
    res = find_semi_transitive_orientation(g, budget.node_limit)
    if res.status is Status.BUDGET:
        raise _OutOfBudget
    if not res.found:
        return None
    return RepWitness(arcs=tuple(res.value.arcs()))


def stage_of(cert) -> str:
    if isinstance(cert, WordRep):
        return "word_rep"
    if isinstance(cert, Matching):
        return "single_edge" if len(cert.added) == 1 else "matching"
    if isinstance(cert, Star):
        return "star"
    if isinstance(cert, MultiSetRemoval):
        return "multi_set"
    if isinstance(cert, Split):
        return "split"
    if isinstance(cert, VertexDeletion):
        return "deletion"
    if isinstance(cert, Combinator):
        return "combinator"
    if isinstance(cert, DirectWord):
        return "direct_word"
    return "unknown"


# -- individual rules -----------------------------------------------------------------


def _single_edge(g: Graph, budget: SearchBudget):
    for e in g.non_edges():
        w = _witness(g.add_edges([e]), budget)
        if w is not None:
            return Matching((e,), w)
    return None


def try_single_edge(g: Graph, budget: SearchBudget = SearchBudget()):
    """Matching certificate with one added edge, or None. g must not be word-representable."""
    if find_semi_transitive_orientation(g, budget.node_limit).found:
        raise ValueError("graph is already word-representable")
    try:
        return _single_edge(g, budget)
    except _OutOfBudget:
        return None


def _matchings(edges: list[tuple[int, int]], size: int, start: int = 0, used: int = 0):
    if size == 0:
        yield ()
        return
    for i in range(start, len(edges)):
        u, v = edges[i]
        if used >> u & 1 or used >> v & 1:
            continue
        for rest in _matchings(edges, size - 1, i + 1, used | 1 << u | 1 << v):
            yield ((u, v),) + rest


def _matching(g: Graph, budget: SearchBudget):
    missing = g.non_edges()
    for size in range(2, g.n // 2 + 1):
        for m in _matchings(missing, size):
            w = _witness(g.add_edges(m), budget)
            if w is not None:
                return Matching(m, w)
    return None


def _star(g: Graph, budget: SearchBudget):
    for c in range(g.n):
        outside = [v for v in range(g.n) if v != c and not g.has_edge(c, v)]
        tried = 0
        for size in range(2, len(outside) + 1):
            for leaves in combinations(outside, size):
                tried += 1
                if tried > MAX_STAR_SUBSETS:
                    break
                added = tuple((min(c, v), max(c, v)) for v in leaves)
                w = _witness(g.add_edges(added), budget)
                if w is not None:
                    return Star(c, added, w)
    return None


def _multi_set(g: Graph, budget: SearchBudget):
    """Colour classes as removal sets: add edges inside classes until word-representable."""
    seen = set()
    for i, col in enumerate(minimal_colourings(g)):
        if i >= MAX_COLOURINGS:
            break
        classes = tuple(sorted(tuple(sorted(c)) for c in col.classes if len(c) >= 2))
        if not classes or classes in seen:
            continue
        seen.add(classes)
        inner = [p for cls in classes for p in combinations(cls, 2)]
        tried = 0
        for size in range(1, len(inner) + 1):
            for extra in combinations(inner, size):
                tried += 1
                if tried > MAX_MULTISET_SUBSETS:
                    break
                w = _witness(g.add_edges(extra), budget)
                if w is not None:
                    return MultiSetRemoval(classes, w)
    return None


def try_split(g: Graph):
    found = find_split_partition(g)
    if found is None:
        return None
    a, b = sorted(found[0]), sorted(found[1])
    o = is_comparability(g.induced_subgraph(a))
    arcs = tuple((a[u], a[v]) for u, v in o.arcs())
    return Split(tuple(a), tuple(b), arcs)


def _deletion(g: Graph, budget: SearchBudget):
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub = g.induced_subgraph(rest)
        o = is_comparability(sub)
        if o is not None:
            return VertexDeletion(v, "comparability", arcs=tuple((rest[a], rest[b]) for a, b in o.arcs()))
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        try:
            w = is_circle(g.induced_subgraph(rest), budget.node_limit)
        except BudgetExceeded:
            continue
        if w is not None:
            return VertexDeletion(v, "circle", word=tuple(rest[a] for a in w))
    return None


def _articulation_points(g: Graph) -> list[int]:
    base = len(g.components())
    return [v for v in range(g.n) if len(g.delete_vertex(v).components()) > base]


def _combinator(g: Graph, budget: SearchBudget, depth: int):
    def sub(vertices):
        cert = _prove(g.induced_subgraph(list(vertices)), budget, depth + 1)
        return None if isinstance(cert, Unknown) else Part(tuple(vertices), cert)

    comps = g.components()
    if len(comps) > 1:
        parts = [sub(c) for c in comps]
        if all(parts):
            return Combinator("disjoint_union", tuple(parts))
        return None
    # degree-2 vertex whose neighbours are adjacent
    for v in range(g.n):
        nb = g.neighbours(v)
        if len(nb) == 2 and g.has_edge(*nb):
            rest = [u for u in range(g.n) if u != v]
            p = sub(rest)
            if p is not None:
                return Combinator("ear_vertex", (p,), (v, nb[0], nb[1]))
    # bridges
    for x, y in g.edges():
        comps = g.remove_edges([(x, y)]).components()
        if len(comps) == 2:
            left = next(c for c in comps if x in c)
            right = next(c for c in comps if y in c)
            pl, pr = sub(left), sub(right)
            if pl and pr:
                return Combinator("edge_connect", (pl, pr), (x, y))
    # cut vertices
    for c in _articulation_points(g):
        rest = g.delete_vertex(c).components()
        relabel = [u for u in range(g.n) if u != c]
        first = sorted([relabel[u] for u in rest[0]] + [c])
        second = sorted({u for comp in rest[1:] for u in (relabel[x] for x in comp)} | {c})
        p1, p2 = sub(first), sub(second)
        if p1 and p2:
            return Combinator("vertex_glue", (p1, p2), (c,))
    return None


def _prove(g: Graph, budget: SearchBudget, depth: int = 0):
    trace = []
    rules = [
        ("word_rep", lambda: (lambda w: WordRep(w) if w else None)(_witness(g, budget))),
        ("single_edge", lambda: _single_edge(g, budget)),
        ("matching", lambda: _matching(g, budget)),
        ("star", lambda: _star(g, budget)),
        ("multi_set", lambda: _multi_set(g, budget)),
        ("split", lambda: try_split(g)),
        ("deletion", lambda: _deletion(g, budget)),
        ("combinator", lambda: _combinator(g, budget, depth) if depth < 4 else None),
    ]
    for name, rule in rules:
        try:
            cert = rule()
        except _OutOfBudget:
            trace.append(f"{name}:budget")
            continue
        if cert is not None:
            return cert
        trace.append(f"{name}:failed")
    return Unknown(STAGES[-1], tuple(trace))


def prove_1_11(g: Graph, budget: SearchBudget = SearchBudget()):
    """A certificate that g is 1-11-representable, or Unknown."""
    cert = _prove(g, budget)
    if not isinstance(cert, Unknown) and not check_certificate(g, cert):
        raise AssertionError(f"prover produced an invalid {stage_of(cert)} certificate")
    return cert


# -- word synthesis -----------------------------------------------------------------


def _base_word(g: Graph, c, budget: SearchBudget):
    """A word-representant behind a WordRep certificate, if one is at hand."""
    if c.witness.word is not None:
        return c.witness.word
    if g.n <= 6:
        res = find_word_representant(g, budget)
        if res.found:
            return res.value
    return None


def _synth(g: Graph, c, budget: SearchBudget):
    if isinstance(c, WordRep):
        w = _base_word(g, c, budget)
        return None if w is None else tuple(w) + tuple(w)
    if isinstance(c, DirectWord):
        return tuple(c.word)
    if isinstance(c, Combinator) and c.mode == "disjoint_union":
        out = []
        for p in c.parts:
            w = _synth(g.induced_subgraph(list(p.vertices)), p.certificate, budget)
            if w is None:
                return None
            # letters seen once would let a cross-part pair reach only one 11
            if any(w.count(x) < 2 for x in set(w)):
                return None
            out.extend(p.vertices[x] for x in w)
        return tuple(out)
    return None


def synthesize_word(g: Graph, c, budget: SearchBudget = SearchBudget()):
    """An explicit 1-11-representant where the construction is known, else None.

    Raises AssertionError rather than return a word that fails verification.
    """
    w = _synth(g, c, budget)
    if w is None:
        return None
    if not is_k11_representant(w, 1, g):
        raise AssertionError("synthesized word does not 1-11-represent the graph")
    return w
