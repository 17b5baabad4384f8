"""Exact chromatic number and proper-coloring enumeration.

Branch and bound with a greedy clique lower bound and a DSATUR upper bound;
the k-colorability search orders vertices by descending degree, tries classes
in index order, and breaks color symmetry canonically (a vertex may open at
most one new class, so each unordered partition is visited once).
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graphs import Coloring, Graph, bits, component_masks


def greedy_clique(g: Graph) -> list[int]:
    """Clique found greedily by descending degree; a chromatic lower bound."""
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    clique: list[int] = []
    mask = (1 << g.n) - 1
    for v in order:
        if mask >> v & 1:
            clique.append(v)
            mask &= g.adj[v]
    return clique


def dsatur_upper_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    color: dict[int, int] = {}
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        best = max(
            (v for v in range(g.n) if v not in color),
            key=lambda v: (len(neighbor_colors[v]), g.degree(v)),
        )
        c = 0
        while c in neighbor_colors[best]:
            c += 1
        color[best] = c
        for u in bits(g.adj[best]):
            neighbor_colors[u].add(c)
    return max(color.values()) + 1


def _try_color(g: Graph, k: int) -> Optional[list[int]]:
    """A proper k-coloring as a vertex->class list, or None."""
    n = g.n
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: -g.degree(v))
    # seed a greedy clique first: its vertices are forced onto distinct classes
    clique = greedy_clique(g)
    if len(clique) > k:
        return None
    order = clique + [v for v in order if v not in clique]
    adj = g.adj
    assigned = [-1] * n
    class_masks = [0] * k

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        limit = min(used + 1, k)
        for c in range(limit):
            if class_masks[c] & adj[v]:
                continue
            class_masks[c] |= 1 << v
            assigned[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            class_masks[c] ^= 1 << v
            assigned[v] = -1
        return False

    return assigned if place(0, 0) else None


def is_k_colorable(g: Graph, k: int) -> bool:
    return _try_color(g, k) is not None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; disconnected graphs take the component maximum."""
    if g.n < 1:
        raise ValueError("chromatic number of the empty vertex set is undefined")
    comps = component_masks(g)
    if len(comps) > 1:
        return max(chromatic_number(g.induced(list(bits(m)))) for m in comps)
    lb = max(1, len(greedy_clique(g)))
    ub = dsatur_upper_bound(g)
    for k in range(lb, ub):
        if is_k_colorable(g, k):
            return k
    return ub


def find_coloring(g: Graph, k: int) -> Optional[Coloring]:
    assigned = _try_color(g, k)
    if assigned is None:
        return None
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(assigned):
        classes.setdefault(c, []).append(v)
    return Coloring(tuple(tuple(sorted(classes[c])) for c in sorted(classes)))


def proper_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """All proper colorings with exactly k non-empty classes, one per unordered
    partition (classes are indexed by order of first use over vertex 0..n-1)."""
    n = g.n
    if n == 0 or k < 1:
        return
    adj = g.adj
    class_masks = [0] * k

    def rec(v: int, used: int) -> Iterator[Coloring]:
        if v == n:
            if used == k:
                yield Coloring(
                    tuple(tuple(bits(class_masks[c])) for c in range(k))
                )
            return
        if used + (n - v) < k:
            return
        limit = min(used + 1, k)
        for c in range(limit):
            if class_masks[c] & adj[v]:
                continue
            class_masks[c] |= 1 << v
            yield from rec(v + 1, max(used, c + 1))
            class_masks[c] ^= 1 << v

    yield from rec(0, 0)
