"""A second, deliberately naive certificate checker working on the JSON form.

It shares no code with wordrep.certificate: semi-transitivity is checked by
enumerating directed paths and word conditions by counting 11s directly.
Used to judge whether a fuzzed certificate that the real checker accepted is
genuinely valid.
"""

from itertools import combinations

from conftest import naive_semi_transitive
from wordrep.words import count_11


def _is_vertex(v, n):
    return type(v) is int and 0 <= v < n


def _edge_set(g, vs=None):
    vs = range(g.n) if vs is None else vs
    return {frozenset((u, v)) for u, v in combinations(vs, 2) if g.has_edge(u, v)}


def _pairs_ok(pairs, n):
    return all(isinstance(p, list) and len(p) == 2 and _is_vertex(p[0], n) and _is_vertex(p[1], n) and p[0] != p[1] for p in pairs)


def _witness_edges(w, n):
    if not isinstance(w, dict) or len(w) != 1:
        return None
    if "word" in w:
        word = w["word"]
        if not all(type(a) is int for a in word) or set(word) != set(range(n)):
            return None
        return {frozenset((x, y)) for x, y in combinations(range(n), 2) if count_11(word, x, y) == 0}
    arcs = w.get("arcs")
    if not isinstance(arcs, list) or not _pairs_ok(arcs, n):
        return None
    und = [frozenset(a) for a in arcs]
    if len(set(und)) != len(und):
        return None
    if not naive_semi_transitive(n, [tuple(a) for a in arcs]):
        return None
    return set(und)


def _transitive_cover(arcs, edges, n):
    if not isinstance(arcs, list) or not _pairs_ok(arcs, n):
        return False
    und = [frozenset(a) for a in arcs]
    if len(set(und)) != len(und) or set(und) != edges:
        return False
    s = {tuple(a) for a in arcs}
    return all((a, d) in s for a, b in s for c, d in s if b == c)


def _sub(g, vs):
    from wordrep.graph import build_graph

    idx = {v: i for i, v in enumerate(vs)}
    return build_graph(len(vs), [(idx[u], idx[v]) for u, v in combinations(vs, 2) if g.has_edge(u, v)])


def reference_ok(g, d) -> bool:
    try:
        return _ok(g, d)
    except (KeyError, TypeError, ValueError, AttributeError, IndexError):
        return False


def _ok(g, d):
    n = g.n
    E = _edge_set(g)
    kind = d["kind"]
    if kind == "word_rep":
        return _witness_edges(d["witness"], n) == E
    if kind == "direct_word":
        word = d["word"]
        if not all(type(a) is int for a in word) or set(word) != set(range(n)):
            return False
        return all((count_11(word, x, y) <= 1) == g.has_edge(x, y) for x, y in combinations(range(n), 2))
    if kind in ("matching", "star"):
        added = d["added"]
        if not added or not _pairs_ok(added, n):
            return False
        und = [frozenset(a) for a in added]
        if len(set(und)) != len(und) or any(e in E for e in und):
            return False
        if kind == "matching" and any(a & b for a, b in combinations(und, 2)):
            return False
        if kind == "star" and not all(d["center"] in e for e in und):
            return False
        return _witness_edges(d["witness"], n) == E | set(und)
    if kind == "multi_set_removal":
        sets = d["sets"]
        flat = [v for s in sets for v in s]
        if any(len(s) < 2 for s in sets) or not all(_is_vertex(v, n) for v in flat) or len(set(flat)) != len(flat):
            return False
        H = _witness_edges(d["witness"], n)
        if H is None:
            return False
        inside = {frozenset(p) for s in sets for p in combinations(s, 2)}
        if inside & E:
            return False
        return all((e in H) == (e in E) for e in map(frozenset, combinations(range(n), 2)) if e not in inside)
    if kind == "split":
        a, b = d["a"], d["b"]
        if sorted(a + b) != list(range(n)):
            return False
        if any(g.has_edge(u, v) for u, v in combinations(b, 2)):
            return False
        return _transitive_cover(d["arcs"], _edge_set(g, a), n)
    if kind == "vertex_deletion":
        v = d["vertex"]
        if not _is_vertex(v, n):
            return False
        rest = [u for u in range(n) if u != v]
        if d["mode"] == "comparability":
            return _transitive_cover(d["arcs"], _edge_set(g, rest), n)
        if d["mode"] == "circle":
            word = d["word"]
            if sorted(word) != sorted(rest * 2):
                return False
            return all((count_11(word, x, y) == 0) == g.has_edge(x, y) for x, y in combinations(rest, 2))
        return False
    if kind == "combinator":
        parts = [p["vertices"] for p in d["parts"]]
        glue = d.get("glue", [])
        if not parts or any(not p or len(set(p)) != len(p) or not all(_is_vertex(v, n) for v in p) for p in parts):
            return False
        sets = [set(p) for p in parts]
        every = set(range(n))

        def cross(x, y):
            return {frozenset((u, v)) for u in x for v in y if g.has_edge(u, v)}

        mode = d["mode"]
        if mode == "disjoint_union":
            if glue or sum(map(len, sets)) != n or set().union(*sets) != every:
                return False
            if any(cross(x, y) for x, y in combinations(sets, 2)):
                return False
        elif mode == "vertex_glue":
            if len(sets) != 2 or len(glue) != 1:
                return False
            c = glue[0]
            if sets[0] & sets[1] != {c} or sets[0] | sets[1] != every or cross(sets[0] - {c}, sets[1] - {c}):
                return False
        elif mode == "edge_connect":
            if len(sets) != 2 or len(glue) != 2 or sets[0] & sets[1] or sets[0] | sets[1] != every:
                return False
            x, y = glue
            if x not in sets[0] or y not in sets[1] or cross(sets[0], sets[1]) != {frozenset((x, y))}:
                return False
        elif mode == "ear_vertex":
            if len(sets) != 1 or len(glue) != 3:
                return False
            v, x, y = glue
            if not _is_vertex(v, n) or sets[0] != every - {v}:
                return False
            if {u for u in range(n) if g.has_edge(v, u)} != {x, y} or x == y or not g.has_edge(x, y):
                return False
        else:
            return False
        return all(_ok(_sub(g, p), part["certificate"]) for p, part in zip(parts, d["parts"]))
    return False
