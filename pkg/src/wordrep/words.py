"""Words over vertex alphabets and the k-11 semantics built on them.

A word is a tuple of vertex labels. For a pair x, y the induced subword keeps
only x and y; its "11 count" is the number of adjacent equal letters, counted
with overlap (xxx contributes 2). A word k-11-represents the graph whose edges
are exactly the pairs with count at most k; k = 0 is plain alternation.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .graph import Graph, build_graph

Word = tuple


class WordError(ValueError):
    pass


def as_word(letters: Iterable[Hashable]) -> Word:
    return tuple(letters)


def parse_word(text: str) -> Word:
    """Whitespace-separated labels, or contiguous single-character labels.

    Purely numeric labels become ints.
    """
    text = text.strip()
    parts = text.split() if any(ch.isspace() for ch in text) else list(text)
    return tuple(int(p) if p.lstrip("-").isdigit() else p for p in parts)


def format_word(w: Sequence) -> str:
    if all(len(str(a)) == 1 for a in w):
        return "".join(str(a) for a in w)
    return " ".join(str(a) for a in w)


def _check_pair(w: Sequence, x, y) -> None:
    if x == y:
        raise WordError("pair letters must differ")


def induced_subword(w: Sequence, x, y, alphabet=None) -> Word:
    _check_pair(w, x, y)
    if alphabet is not None and (x not in alphabet or y not in alphabet):
        raise WordError(f"letter outside alphabet: {x!r}, {y!r}")
    return tuple(a for a in w if a == x or a == y)


def count_11(w: Sequence, x, y, alphabet=None) -> int:
    u = induced_subword(w, x, y, alphabet)
    return sum(1 for a, b in zip(u, u[1:]) if a == b)


def alternates(w: Sequence, x, y) -> bool:
    if x not in w or y not in w:
        raise WordError(f"letters {x!r} and {y!r} must both occur in the word")
    return count_11(w, x, y) == 0


def initial_permutation(w: Sequence) -> Word:
    return tuple(dict.fromkeys(w))


def reverse(w: Sequence) -> Word:
    return tuple(reversed(w))


def pair_counts(w: Sequence[int], n: int) -> list[list[int]]:
    """All pairwise 11 counts for letters 0..n-1 in one O(|w| n) scan.

    Reading letter a, the pair {a, b} gains a count exactly when a was the
    more recent of the two.
    """
    counts = [[0] * n for _ in range(n)]
    lastpos = [-1] * n
    for i, a in enumerate(w):
        la = lastpos[a]
        if la >= 0:
            row = counts[a]
            for b in range(n):
                if b != a and lastpos[b] < la:
                    row[b] += 1
        lastpos[a] = i
    for a in range(n):
        for b in range(a + 1, n):
            counts[a][b] = counts[b][a] = counts[a][b] + counts[b][a]
    return counts


def graph_of_word(w: Sequence[int], k: int, n: int) -> Graph:
    """Graph on 0..n-1 with xy an edge iff count_11(w, x, y) <= k."""
    if k < 0:
        raise WordError("level k must be non-negative")
    present = set(w)
    for v in range(n):
        if v not in present:
            raise WordError(f"vertex {v} does not occur in the word")
    if present - set(range(n)):
        raise WordError(f"letters outside 0..{n - 1}: {sorted(present - set(range(n)))}")
    c = pair_counts(w, n)
    return build_graph(n, [(x, y) for x in range(n) for y in range(x + 1, n) if c[x][y] <= k])


def is_k11_representant(w: Sequence[int], k: int, g: Graph) -> bool:
    if set(w) != set(range(g.n)):
        raise WordError("word alphabet differs from the vertex set")
    return graph_of_word(w, k, g.n) == g


def doubling_certificates(w: Sequence) -> tuple[Word, Word]:
    """(ww, r(pi(w)) w): both 1-11-represent the graph that w word-represents."""
    w = tuple(w)
    return w + w, reverse(initial_permutation(w)) + w


def is_permutational(w: Sequence, vertices: Iterable) -> int | None:
    """Number of blocks if w is a concatenation of permutations of `vertices`."""
    vs = set(vertices)
    size = len(vs)
    if size == 0 or len(w) % size or not w:
        return None
    for i in range(0, len(w), size):
        if set(w[i : i + size]) != vs or len(set(w[i : i + size])) != size:
            return None
    return len(w) // size


def occurrence_counts(w: Sequence) -> dict:
    out: dict = {}
    for a in w:
        out[a] = out.get(a, 0) + 1
    return out


def uniformity(w: Sequence) -> int | None:
    """t if every letter of w occurs exactly t times."""
    counts = set(occurrence_counts(w).values())
    return counts.pop() if len(counts) == 1 else None
