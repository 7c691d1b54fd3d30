"""Bounded direct searches for representant words.

All searches build words letter by letter (or permutation block by
permutation block) and prune as soon as some pair can no longer end up with
the right 11 count: an edge pair must finish with at most k, a non-edge pair
with at least k + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, bits
from .outcome import BudgetExceeded, NodeCounter, SearchResult, Status
from .words import Word, is_k11_representant


@dataclass(frozen=True)
class SearchBudget:
    t_max: int = 3
    m_max: int | None = None  # None means 2n
    node_limit: int | None = 10**8

    def __post_init__(self):
        if self.t_max < 1 or (self.m_max is not None and self.m_max < 1):
            raise ValueError("budget bounds must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node limit must be positive")

    def blocks(self, n: int) -> int:
        return self.m_max if self.m_max is not None else max(2 * n, 1)


def _max_more(last_same: int, other: int) -> int:
    """Most 11s the rest of a pair can add: rest letters after the last one read."""
    return last_same + other - (1 if other else 0)


def _min_more(last_same: int, other: int) -> int:
    # continue as o z o z ...; surplus letters of either kind cost one each
    if last_same >= other:
        return last_same - other
    return max(0, other - last_same - 1)


def _uniform_search(g: Graph, k: int, t: int, counter: NodeCounter, fix_first: bool) -> Word | None:
    n = g.n
    length = n * t
    adj = g.adj
    rem = [t] * n
    lastpos = [-1] * n
    count = [[0] * n for _ in range(n)]
    word: list[int] = []

    def pair_ok(a: int, b: int) -> bool:
        c = count[a][b]
        la, lb = lastpos[a], lastpos[b]
        if la < 0 and lb < 0:
            ra, rb = rem[a], rem[b]
            hi = ra + rb - (ra > 0) - (rb > 0)
            lo = max(0, abs(ra - rb) - 1)
        elif la > lb:
            hi, lo = _max_more(rem[a], rem[b]), _min_more(rem[a], rem[b])
        else:
            hi, lo = _max_more(rem[b], rem[a]), _min_more(rem[b], rem[a])
        if adj[a] >> b & 1:
            return c + lo <= k
        return c + hi >= k + 1

    def rec(pos: int) -> bool:
        counter.tick()
        if pos == length:
            return True
        choices = [0] if fix_first and pos == 0 else range(n)
        for a in choices:
            if not rem[a]:
                continue
            la = lastpos[a]
            bumped = []
            if la >= 0:
                for b in range(n):
                    if b != a and lastpos[b] < la:
                        count[a][b] += 1
                        count[b][a] += 1
                        bumped.append(b)
            rem[a] -= 1
            lastpos[a] = pos
            word.append(a)
            if all(pair_ok(a, b) for b in range(n) if b != a) and rec(pos + 1):
                return True
            word.pop()
            lastpos[a] = la
            rem[a] += 1
            for b in bumped:
                count[a][b] -= 1
                count[b][a] -= 1
        return False

    return tuple(word) if rec(0) else None


def _uniform(g: Graph, k: int, ts, budget: SearchBudget, fix_first: bool) -> SearchResult:
    if g.n == 0:
        return SearchResult(Status.FOUND, (), info={"t": 0})
    counter = NodeCounter(budget.node_limit)
    try:
        for t in ts:
            w = _uniform_search(g, k, t, counter, fix_first)
            if w is not None:
                assert is_k11_representant(w, k, g)
                return SearchResult(Status.FOUND, w, counter.nodes, {"t": t})
    except BudgetExceeded:
        return SearchResult(Status.BUDGET, nodes=counter.nodes, info={"t_max": max(ts)})
    return SearchResult(Status.NONE, nodes=counter.nodes, info={"t_max": max(ts)})


def find_word_representant(g: Graph, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Smallest-t uniform word-representant with t <= t_max.

    Any cyclic shift of a uniform word-representant is again one, so the
    word may start with vertex 0.
    """
    return _uniform(g, 0, range(1, budget.t_max + 1), budget, fix_first=True)


def find_k11_representant(g: Graph, k: int, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """t-uniform k-11-representant (t <= t_max); for k >= 1 falls back to doubling a word-representant."""
    if k == 0:
        return find_word_representant(g, budget)
    res = _uniform(g, k, range(1, budget.t_max + 1), budget, fix_first=False)
    if res.status is Status.FOUND:
        return res
    base = find_word_representant(g, budget)
    if base.found:
        w = base.value + base.value
        assert is_k11_representant(w, k, g)
        return SearchResult(Status.FOUND, w, res.nodes + base.nodes, {"t": 2 * base.info["t"], "doubled": True})
    if base.status is Status.BUDGET:
        res.status = Status.BUDGET
    return res


def find_permutational_k11(g: Graph, k: int, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Concatenation of m <= m_max permutations of V that k-11-represents g.

    Between consecutive blocks a pair gains one 11 exactly when its relative
    order flips, so edges need at most k flips and non-edges at least k + 1.
    """
    n = g.n
    if n == 0:
        return SearchResult(Status.FOUND, (), info={"m": 0})
    m_max = budget.blocks(n)
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    is_edge = [bool(g.adj[x] >> y & 1) for x, y in pairs]
    perms = list(permutations(range(n)))
    # orders[p][i]: does x precede y in perms[p], for pairs[i]
    orders = []
    for p in perms:
        pos = {v: i for i, v in enumerate(p)}
        orders.append([pos[x] < pos[y] for x, y in pairs])
    counter = NodeCounter(budget.node_limit)

    def rec(blocks: list[int], flips: list[int], m: int) -> bool:
        counter.tick()
        left = m - len(blocks)
        if left == 0:
            return True
        prev = orders[blocks[-1]] if blocks else None
        for p, order in enumerate(orders):
            new = flips if prev is None else [f + (a != b) for f, a, b in zip(flips, prev, order)]
            ok = True
            for f, e in zip(new, is_edge):
                if (f > k) if e else (f + left - 1 < k + 1):
                    ok = False
                    break
            if ok:
                blocks.append(p)
                if rec(blocks, new, m):
                    return True
                blocks.pop()
        return False

    try:
        for m in range(1, m_max + 1):
            blocks: list[int] = []
            if rec(blocks, [0] * len(pairs), m):
                w = tuple(v for p in blocks for v in perms[p])
                assert is_k11_representant(w, k, g)
                return SearchResult(Status.FOUND, w, counter.nodes, {"m": m})
    except BudgetExceeded:
        return SearchResult(Status.BUDGET, nodes=counter.nodes, info={"m_max": m_max})
    return SearchResult(Status.NONE, nodes=counter.nodes, info={"m_max": m_max})


def is_circle(g: Graph, node_limit: int | None = None) -> Word | None:
    """A 2-uniform word-representant (double occurrence word), or None."""
    res = _uniform(g, 0, [2], SearchBudget(t_max=2, node_limit=node_limit), fix_first=True)
    if res.status is Status.BUDGET:
        raise BudgetExceeded("circle search exhausted its node limit")
    return res.value


def is_interval_via_2uniform_111(g: Graph, node_limit: int | None = None) -> Word | None:
    """A 2-uniform 1-11-representant, or None."""
    res = _uniform(g, 1, [2], SearchBudget(t_max=2, node_limit=node_limit), fix_first=False)
    if res.status is Status.BUDGET:
        raise BudgetExceeded("interval search exhausted its node limit")
    return res.value


def interval_oracle(g: Graph) -> bool:
    """Brute force over left/right endpoint event orders.

    Opening an interval, every open interval overlaps it and every closed
    one does not; closing it, all its neighbours must already be open.
    """
    n = g.n
    adj = g.adj
    dead: set[tuple[int, int]] = set()

    def rec(opened: int, closed: int) -> bool:
        if (opened, closed) in dead:
            return False
        if closed == (1 << n) - 1:
            return True
        live = opened & ~closed
        for v in range(n):
            bit = 1 << v
            if not opened & bit:
                if adj[v] & closed or live & ~adj[v]:
                    continue
                if rec(opened | bit, closed):
                    return True
            elif not closed & bit:
                if adj[v] & ~opened:
                    continue
                if rec(opened, closed | bit):
                    return True
        dead.add((opened, closed))
        return False

    return rec(0, 0)
