"""Multi-k-11-representation: covering E(G) by m spanning subgraphs that are
each k-11-representable, with pairwise disjoint edge sets in the strict case.

`decompose_24` gives the two-part strict decomposition for graphs on at most
24 vertices: edges inside at most three blocks of at most eight vertices
form one part (a disjoint union of small 1-11-representable graphs), and the
edges between blocks form a 3-partite, hence word-representable, second part.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .certificate import (
    Combinator,
    Part,
    RepWitness,
    Unknown,
    WordRep,
    certificate_problem,
    from_dict,
    to_dict,
)
from .graph import Graph, build_graph
from .prover import prove_1_11
from .search import SearchBudget
from .semitrans import find_semi_transitive_orientation
from .outcome import Status
from .words import is_k11_representant

MAX_MULTI = 24
BLOCK = 8


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True)
class MultiPart:
    edges: tuple[tuple[int, int], ...]
    evidence: Union[object, tuple]  # a Certificate for level 1, a word otherwise


@dataclass(frozen=True)
class MultiCertificate:
    parts: tuple[MultiPart, ...]
    strict: bool = True
    level: int = 1

    @property
    def m(self) -> int:
        return len(self.parts)


def multi_problem(g: Graph, mc: MultiCertificate) -> str | None:
    """None if mc is a valid (strict, if flagged) multi-representation of g."""
    if not mc.parts:
        return "no parts"
    target = {frozenset(e) for e in g.edges()}
    covered: set[frozenset[int]] = set()
    for i, part in enumerate(mc.parts):
        try:
            sub = build_graph(g.n, part.edges)
        except ValueError as e:
            return f"part {i}: {e}"
        es = {frozenset(e) for e in part.edges}
        if len(es) != len(part.edges):
            return f"part {i} repeats an edge"
        if es - target:
            return f"part {i} has an edge outside the graph"
        if mc.strict and es & covered:
            return f"part {i} overlaps an earlier part"
        covered |= es
        if mc.level == 1:
            why = certificate_problem(sub, part.evidence)
            if why:
                return f"part {i}: {why}"
        else:
            try:
                ok = is_k11_representant(tuple(part.evidence), mc.level, sub)
            except (ValueError, TypeError) as e:
                return f"part {i}: {e}"
            if not ok:
                return f"part {i}: word is not a {mc.level}-11-representant"
    if covered != target:
        return "parts do not cover every edge"
    return None


def verify_multi_certificate(g: Graph, mc: MultiCertificate) -> bool:
    return multi_problem(g, mc) is None


# -- construction -----------------------------------------------------------------------


def block_sizes(n: int) -> list[int]:
    count = max(1, -(-n // BLOCK))
    base, extra = divmod(n, count)
    return [base + (i < extra) for i in range(count)]


def dense_blocks(g: Graph, rng: random.Random | None = None) -> list[list[int]]:
    """Greedy blocks: grow each from the vertex of highest remaining degree,
    adding the vertex with most neighbours already in the block.

    Ties go to the smallest index, or to a seeded shuffle order when rng is given.
    """
    rank = list(range(g.n))
    if rng is not None:
        rng.shuffle(rank)
    remaining = set(range(g.n))
    blocks = []
    for size in block_sizes(g.n):
        if not remaining:
            break
        seed = min(remaining, key=lambda v: (-sum(g.has_edge(v, u) for u in remaining), rank[v]))
        block = [seed]
        remaining.discard(seed)
        while len(block) < size:
            v = min(remaining, key=lambda u: (-sum(g.has_edge(u, b) for b in block), rank[u]))
            block.append(v)
            remaining.discard(v)
        blocks.append(sorted(block))
    return blocks


def decompose_24(
    g: Graph,
    budget: SearchBudget = SearchBudget(),
    retries: int = 5,
    seed: int = 0,
) -> MultiCertificate:
    if g.n > MAX_MULTI:
        raise DecompositionError(f"decomposition supports at most {MAX_MULTI} vertices")
    for attempt in range(retries + 1):
        blocks = dense_blocks(g, None if attempt == 0 else random.Random(seed + attempt))
        parts = []
        for block in blocks:
            cert = prove_1_11(g.induced_subgraph(block), budget)
            if isinstance(cert, Unknown):
                break
            parts.append(Part(tuple(block), cert))
        else:
            return _assemble(g, blocks, parts)
    raise DecompositionError("a block stayed unproved after all retries")


def _assemble(g: Graph, blocks: list[list[int]], parts: list[Part]) -> MultiCertificate:
    colour = {v: i for i, b in enumerate(blocks) for v in b}
    inside = tuple(e for e in g.edges() if colour[e[0]] == colour[e[1]])
    across = tuple(e for e in g.edges() if colour[e[0]] != colour[e[1]])
    if len(parts) == 1:
        first = parts[0].certificate
    else:
        first = Combinator("disjoint_union", tuple(parts))
    out = [MultiPart(inside, first)]
    if across:
        # blocks as colour classes, lower block -> higher block: no directed path of length 3
        arcs = tuple(e if colour[e[0]] < colour[e[1]] else (e[1], e[0]) for e in across)
        out.append(MultiPart(across, WordRep(RepWitness(arcs=arcs))))
        if not inside:
            out.pop(0)
    return MultiCertificate(tuple(out), strict=True)


def multi_number_upper(
    g: Graph,
    budget: SearchBudget = SearchBudget(),
    direct_limit: int = 2_000,
    seed: int = 0,
) -> tuple[int, MultiCertificate]:
    """Smallest m in {1, 2} certified here, with the certificate.

    Graphs on at most 10 vertices get the full prover; larger ones only a
    budgeted semi-transitive orientation search before decomposing.
    """
    if g.n > MAX_MULTI:
        raise DecompositionError(f"at most {MAX_MULTI} vertices supported")
    edges = tuple(g.edges())
    if g.n <= 10:
        cert = prove_1_11(g, budget)
        if not isinstance(cert, Unknown):
            return 1, MultiCertificate((MultiPart(edges, cert),))
    else:
        res = find_semi_transitive_orientation(g, direct_limit)
        if res.status is Status.FOUND:
            cert = WordRep(RepWitness(arcs=tuple(res.value.arcs())))
            return 1, MultiCertificate((MultiPart(edges, cert),))
    mc = decompose_24(g, budget, seed=seed)
    return mc.m, mc


def as_non_strict(mc: MultiCertificate) -> MultiCertificate:
    return MultiCertificate(mc.parts, strict=False, level=mc.level)


def exact_multi_number(g: Graph, level: int = 0, strict: bool = True, max_parts: int = 3) -> int | None:
    """Exact multi-k-11 number for tiny graphs (n <= 6, at most 12 edges), levels 0 and 1.

    Level 0 decides each part exactly; level 1 relies on the prover, whose
    failures are not disproofs, so a level-1 answer is an upper bound unless it is 1.
    """
    if g.n > 6 or g.edge_count > 12:
        raise ValueError("exact multi number only for n <= 6 and at most 12 edges")
    if level not in (0, 1):
        raise ValueError("levels >= 2 always give 1")
    edges = g.edges()
    cache: dict[frozenset, bool] = {}

    def good(es) -> bool:
        key = frozenset(es)
        if key not in cache:
            sub = build_graph(g.n, es)
            if level == 0:
                cache[key] = find_semi_transitive_orientation(sub).found
            else:
                cache[key] = not isinstance(prove_1_11(sub), Unknown)
        return cache[key]

    if good(edges):
        return 1
    for m in range(2, max_parts + 1):
        if strict:
            # label each edge with its part; edge 0 goes to part 0
            for labels in _labellings(len(edges), m):
                groups = [[e for e, l in zip(edges, labels) if l == i] for i in range(m)]
                if all(groups) and all(good(gr) for gr in groups):
                    return m
        else:
            subsets = [s for r in range(1, len(edges) + 1) for s in combinations(edges, r) if good(s)]
            for combo in combinations(subsets, m):
                if set().union(*map(set, combo)) == set(edges):
                    return m
    return None


def _labellings(length: int, m: int, prefix=None):
    prefix = prefix or [0]
    if len(prefix) == length:
        yield list(prefix)
        return
    top = max(prefix)
    for lab in range(min(top + 2, m)):
        prefix.append(lab)
        yield from _labellings(length, m, prefix)
        prefix.pop()


# -- JSON -----------------------------------------------------------------------------


def multi_to_dict(mc: MultiCertificate) -> dict:
    parts = []
    for p in mc.parts:
        ev = to_dict(p.evidence) if mc.level == 1 else {"word": list(p.evidence)}
        parts.append({"edges": sorted([min(e), max(e)] for e in p.edges), "evidence": ev})
    return {"kind": "multi", "level": mc.level, "strict": mc.strict, "m": mc.m, "parts": parts}


def multi_from_dict(d: dict) -> MultiCertificate:
    level = d.get("level", 1)
    parts = []
    for p in d["parts"]:
        ev = from_dict(p["evidence"]) if level == 1 else tuple(p["evidence"]["word"])
        parts.append(MultiPart(tuple(tuple(e) for e in p["edges"]), ev))
    return MultiCertificate(tuple(parts), strict=d.get("strict", True), level=level)
