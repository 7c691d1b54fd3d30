"""Certificates of 1-11-representability and their independent checker.

Each certificate names one toolbox rule and carries the data needed to
re-check that rule's hypotheses. Word-representability of an auxiliary graph
is evidenced by a `RepWitness`: either a word-representant or a
semi-transitive orientation (equivalent by the semi-transitive orientation
theorem). The checker never searches; it only validates payloads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .graph import Graph, GraphError, build_graph
from .semitrans import Orientation, OrientationError, is_semi_transitive, is_transitive
from .words import WordError, graph_of_word, is_k11_representant, uniformity


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class RepWitness:
    """Evidence that a graph is word-representable: a word or a list of arcs."""

    word: tuple[int, ...] | None = None
    arcs: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if (self.word is None) == (self.arcs is None):
            raise CertificateError("witness needs exactly one of word / arcs")

    def graph(self, n: int) -> Graph:
        """The graph this witness proves word-representable; raises if invalid."""
        if self.word is not None:
            try:
                return graph_of_word(self.word, 0, n)
            except WordError as e:
                raise CertificateError(f"bad witness word: {e}") from None
        try:
            g = build_graph(n, self.arcs)
            o = Orientation.from_arcs(g, self.arcs)
        except (GraphError, OrientationError) as e:
            raise CertificateError(f"bad witness orientation: {e}") from None
        if len(set(frozenset(a) for a in self.arcs)) != len(self.arcs):
            raise CertificateError("witness orientation repeats an edge")
        if not is_semi_transitive(o):
            raise CertificateError("witness orientation is not semi-transitive")
        return g


@dataclass(frozen=True)
class WordRep:
    witness: RepWitness
    kind = "word_rep"


@dataclass(frozen=True)
class DirectWord:
    word: tuple[int, ...]
    kind = "direct_word"


@dataclass(frozen=True)
class Matching:
    added: tuple[tuple[int, int], ...]
    witness: RepWitness
    kind = "matching"


@dataclass(frozen=True)
class Star:
    center: int
    added: tuple[tuple[int, int], ...]
    witness: RepWitness
    kind = "star"


@dataclass(frozen=True)
class MultiSetRemoval:
    sets: tuple[tuple[int, ...], ...]
    witness: RepWitness
    kind = "multi_set_removal"


@dataclass(frozen=True)
class Split:
    a: tuple[int, ...]
    b: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]  # transitive orientation of G[A], original labels
    kind = "split"


@dataclass(frozen=True)
class VertexDeletion:
    vertex: int
    mode: str  # "comparability" (arcs) or "circle" (2-uniform word)
    arcs: tuple[tuple[int, int], ...] | None = None
    word: tuple[int, ...] | None = None
    kind = "vertex_deletion"


@dataclass(frozen=True)
class Part:
    vertices: tuple[int, ...]  # part vertex i is original vertex vertices[i]
    certificate: "Certificate"


@dataclass(frozen=True)
class Combinator:
    mode: str  # disjoint_union | vertex_glue | edge_connect | ear_vertex
    parts: tuple[Part, ...]
    glue: tuple[int, ...] = ()  # cut vertex / bridge endpoints / (ear, x, y)
    kind = "combinator"


Certificate = Union[WordRep, DirectWord, Matching, Star, MultiSetRemoval, Split, VertexDeletion, Combinator]

COMBINATOR_MODES = ("disjoint_union", "vertex_glue", "edge_connect", "ear_vertex")


@dataclass(frozen=True)
class Unknown:
    """No rule succeeded; never a disproof."""

    stage: str
    trace: tuple[str, ...] = ()
    kind = "unknown"


# -- checking -------------------------------------------------------------------


def _norm_edges(g: Graph, edges) -> set[frozenset[int]]:
    out = set()
    for e in edges:
        if len(e) != 2:
            raise CertificateError(f"malformed edge {e!r}")
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise CertificateError(f"edge {e!r} is not a pair of distinct vertices")
        f = frozenset((u, v))
        if f in out:
            raise CertificateError(f"edge {e!r} listed twice")
        out.add(f)
    return out


def _augmented_check(g: Graph, added: set[frozenset[int]], witness: RepWitness) -> None:
    for e in added:
        u, v = tuple(e)
        if g.has_edge(u, v):
            raise CertificateError(f"added edge {sorted(e)} is already in the graph")
    h = witness.graph(g.n)
    if h != g.add_edges(tuple(e) for e in added):
        raise CertificateError("witness does not represent the augmented graph")


def _transitive_check(g: Graph, arcs, what: str) -> None:
    try:
        o = Orientation.from_arcs(g, arcs)
    except OrientationError as e:
        raise CertificateError(f"{what}: {e}") from None
    if len(arcs) != g.edge_count:
        raise CertificateError(f"{what}: arc list does not match the edge set")
    if not is_transitive(o):
        raise CertificateError(f"{what}: orientation is not transitive")


def _relabel(arcs, vertices) -> list[tuple[int, int]]:
    index = {v: i for i, v in enumerate(vertices)}
    try:
        return [(index[u], index[v]) for u, v in arcs]
    except (KeyError, TypeError, ValueError):
        raise CertificateError("arc endpoint outside the expected vertex set") from None


def _check(g: Graph, c) -> None:
    n = g.n
    if isinstance(c, WordRep):
        if c.witness.graph(n) != g:
            raise CertificateError("witness does not represent the graph")
    elif isinstance(c, DirectWord):
        try:
            ok = is_k11_representant(c.word, 1, g)
        except WordError as e:
            raise CertificateError(f"bad word: {e}") from None
        if not ok:
            raise CertificateError("word is not a 1-11-representant")
    elif isinstance(c, Matching):
        added = _norm_edges(g, c.added)
        if not added:
            raise CertificateError("empty matching")
        used: set[int] = set()
        for e in added:
            if used & e:
                raise CertificateError("matching edges share a vertex")
            used |= e
        _augmented_check(g, added, c.witness)
    elif isinstance(c, Star):
        added = _norm_edges(g, c.added)
        if not added:
            raise CertificateError("empty star")
        if any(c.center not in e for e in added):
            raise CertificateError("star edge misses the centre")
        _augmented_check(g, added, c.witness)
    elif isinstance(c, MultiSetRemoval):
        seen: set[int] = set()
        owner = {}
        for i, s in enumerate(c.sets):
            if len(s) < 2 or len(set(s)) != len(s) or any(not isinstance(v, int) or not 0 <= v < n for v in s):
                raise CertificateError(f"bad vertex set {s!r}")
            if seen & set(s):
                raise CertificateError("vertex sets overlap")
            seen |= set(s)
            owner.update({v: i for v in s})
        h = c.witness.graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                inside = u in owner and owner.get(v) == owner[u]
                if inside:
                    if g.has_edge(u, v):
                        raise CertificateError(f"edge ({u}, {v}) inside a removed set")
                elif h.has_edge(u, v) != g.has_edge(u, v):
                    raise CertificateError(f"pair ({u}, {v}) differs between graph and witness")
    elif isinstance(c, Split):
        a, b = list(c.a), list(c.b)
        if sorted(a + b) != list(range(n)):
            raise CertificateError("A and B do not partition the vertex set")
        if not g.is_independent(b):
            raise CertificateError("B is not independent")
        _transitive_check(g.induced_subgraph(a), _relabel(c.arcs, a), "split part A")
    elif isinstance(c, VertexDeletion):
        if not isinstance(c.vertex, int) or not 0 <= c.vertex < n:
            raise CertificateError("deleted vertex out of range")
        rest = [v for v in range(n) if v != c.vertex]
        sub = g.induced_subgraph(rest)
        if c.mode == "comparability":
            if c.arcs is None:
                raise CertificateError("comparability deletion needs arcs")
            _transitive_check(sub, _relabel(c.arcs, rest), "G - v")
        elif c.mode == "circle":
            if c.word is None:
                raise CertificateError("circle deletion needs a word")
            index = {v: i for i, v in enumerate(rest)}
            if any(x not in index for x in c.word):
                raise CertificateError("circle word uses a letter outside G - v")
            w = tuple(index[x] for x in c.word)
            if uniformity(w) != 2 or not is_k11_representant(w, 0, sub):
                raise CertificateError("circle word is not a 2-uniform representant of G - v")
        else:
            raise CertificateError(f"unknown deletion mode {c.mode!r}")
    elif isinstance(c, Combinator):
        _check_combinator(g, c)
    else:
        raise CertificateError(f"not a certificate: {type(c).__name__}")


def _check_combinator(g: Graph, c: Combinator) -> None:
    n = g.n
    parts = [list(p.vertices) for p in c.parts]
    for p in parts:
        if not p or len(set(p)) != len(p) or any(not isinstance(v, int) or not 0 <= v < n for v in p):
            raise CertificateError("malformed combinator part")
    sets = [set(p) for p in parts]
    union = set().union(*sets) if sets else set()

    def crossing(x: set[int], y: set[int]) -> list[tuple[int, int]]:
        return [(u, v) for u in x for v in y if g.has_edge(u, v)]

    if c.mode == "disjoint_union":
        if c.glue:
            raise CertificateError("disjoint union takes no glue")
        if len(parts) < 1 or sum(map(len, parts)) != n or union != set(range(n)):
            raise CertificateError("parts do not partition the vertex set")
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if crossing(sets[i], sets[j]):
                    raise CertificateError("edge between disjoint-union parts")
    elif c.mode == "vertex_glue":
        if len(parts) != 2 or len(c.glue) != 1:
            raise CertificateError("vertex glue needs two parts and one vertex")
        (x,) = c.glue
        if sets[0] & sets[1] != {x} or union != set(range(n)):
            raise CertificateError("parts must share exactly the glue vertex and cover V")
        if crossing(sets[0] - {x}, sets[1] - {x}):
            raise CertificateError("edge between glued parts")
    elif c.mode == "edge_connect":
        if len(parts) != 2 or len(c.glue) != 2:
            raise CertificateError("edge connect needs two parts and one edge")
        if sets[0] & sets[1] or union != set(range(n)):
            raise CertificateError("parts must partition V")
        x, y = c.glue
        if x not in sets[0] or y not in sets[1] or crossing(sets[0], sets[1]) != [(x, y)]:
            raise CertificateError("parts must be joined by exactly the glue edge")
    elif c.mode == "ear_vertex":
        if len(parts) != 1 or len(c.glue) != 3:
            raise CertificateError("ear vertex needs one part and (v, x, y)")
        v, x, y = c.glue
        if not (isinstance(v, int) and 0 <= v < n) or union != set(range(n)) - {v} or v in union:
            raise CertificateError("part must be V minus the ear vertex")
        if set(g.neighbours(v)) != {x, y} or x == y or not g.has_edge(x, y):
            raise CertificateError("ear vertex must be adjacent to exactly an edge xy")
    else:
        raise CertificateError(f"unknown combinator {c.mode!r}")
    for p, part in zip(parts, c.parts):
        _check(g.induced_subgraph(p), part.certificate)


def certificate_problem(g: Graph, c) -> str | None:
    """None if c certifies g is 1-11-representable, else the reason it does not."""
    try:
        _check(g, c)
    except CertificateError as e:
        return str(e)
    except (TypeError, ValueError, AttributeError, IndexError, KeyError) as e:
        return f"malformed certificate: {e}"
    return None


def check_certificate(g: Graph, c) -> bool:
    return certificate_problem(g, c) is None


# -- JSON --------------------------------------------------------------------------


def _edges_json(edges) -> list[list[int]]:
    return sorted([min(e), max(e)] for e in edges)


def _witness_json(w: RepWitness) -> dict:
    if w.word is not None:
        return {"word": list(w.word)}
    return {"arcs": sorted([list(a) for a in w.arcs])}


def to_dict(c) -> dict:
    if isinstance(c, WordRep):
        return {"kind": c.kind, "witness": _witness_json(c.witness)}
    if isinstance(c, DirectWord):
        return {"kind": c.kind, "word": list(c.word)}
    if isinstance(c, Matching):
        return {"kind": c.kind, "added": _edges_json(c.added), "witness": _witness_json(c.witness)}
    if isinstance(c, Star):
        return {"kind": c.kind, "center": c.center, "added": _edges_json(c.added), "witness": _witness_json(c.witness)}
    if isinstance(c, MultiSetRemoval):
        return {"kind": c.kind, "sets": [sorted(s) for s in c.sets], "witness": _witness_json(c.witness)}
    if isinstance(c, Split):
        return {"kind": c.kind, "a": sorted(c.a), "b": sorted(c.b), "arcs": sorted([list(a) for a in c.arcs])}
    if isinstance(c, VertexDeletion):
        d = {"kind": c.kind, "vertex": c.vertex, "mode": c.mode}
        if c.arcs is not None:
            d["arcs"] = sorted([list(a) for a in c.arcs])
        if c.word is not None:
            d["word"] = list(c.word)
        return d
    if isinstance(c, Combinator):
        return {
            "kind": c.kind,
            "mode": c.mode,
            "glue": list(c.glue),
            "parts": [{"vertices": list(p.vertices), "certificate": to_dict(p.certificate)} for p in c.parts],
        }
    if isinstance(c, Unknown):
        return {"kind": c.kind, "stage": c.stage, "trace": list(c.trace)}
    raise TypeError(f"cannot serialize {type(c).__name__}")


def _witness_from(d: dict) -> RepWitness:
    if "word" in d:
        return RepWitness(word=tuple(d["word"]))
    return RepWitness(arcs=tuple(tuple(a) for a in d["arcs"]))


def _pairs(xs) -> tuple[tuple[int, int], ...]:
    return tuple(tuple(x) for x in xs)


def from_dict(d: dict):
    kind = d.get("kind")
    if kind == "word_rep":
        return WordRep(_witness_from(d["witness"]))
    if kind == "direct_word":
        return DirectWord(tuple(d["word"]))
    if kind == "matching":
        return Matching(_pairs(d["added"]), _witness_from(d["witness"]))
    if kind == "star":
        return Star(d["center"], _pairs(d["added"]), _witness_from(d["witness"]))
    if kind == "multi_set_removal":
        return MultiSetRemoval(tuple(tuple(s) for s in d["sets"]), _witness_from(d["witness"]))
    if kind == "split":
        return Split(tuple(d["a"]), tuple(d["b"]), _pairs(d["arcs"]))
    if kind == "vertex_deletion":
        arcs = _pairs(d["arcs"]) if "arcs" in d else None
        word = tuple(d["word"]) if "word" in d else None
        return VertexDeletion(d["vertex"], d["mode"], arcs, word)
    if kind == "combinator":
        parts = tuple(Part(tuple(p["vertices"]), from_dict(p["certificate"])) for p in d["parts"])
        return Combinator(d["mode"], parts, tuple(d.get("glue", ())))
    if kind == "unknown":
        return Unknown(d["stage"], tuple(d.get("trace", ())))
    raise CertificateError(f"unknown certificate kind {kind!r}")


def dumps(c) -> str:
    """Canonical JSON: sorted keys and edge lists, no whitespace variance."""
    return json.dumps(to_dict(c), sort_keys=True, separators=(",", ":"))


def loads(text: str):
    return from_dict(json.loads(text))
