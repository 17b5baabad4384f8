"""Canonical labeling by color refinement plus individualization backtracking.

The search explores refinement leaves, keeps the lexicographically smallest
relabeled adjacency as the canonical representative, and prunes sibling
branches using automorphisms discovered from equal leaves (only those fixing
the current individualization path, which keeps the pruning sound). At the
desk scale of this library (n <= 64, usually <= 24) correctness is enforced
by exhaustive cross-checks in the test suite rather than algorithmic
sophistication.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .graphs import Coloring, Graph, bits


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; order is iso-invariant."""
    cells = [list(c) for c in cells]
    queue = deque(sum(1 << v for v in c) for c in cells)
    while queue:
        splitter = queue.popleft()
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for key in sorted(groups):
                    part = groups[key]
                    out.append(part)
                    queue.append(sum(1 << v for v in part))
        cells = out
    return cells


def _relabeled_rows(n: int, adj: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    rows = [0] * n
    for v in range(n):
        row = 0
        for u in bits(adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return tuple(rows)


def canonical_labeling(g: Graph, cells: Optional[Sequence[Sequence[int]]] = None) -> tuple[int, ...]:
    """Permutation v -> canonical position, minimizing the relabeled adjacency.

    ``cells`` is an ordered initial partition; isomorphisms are required to
    preserve each cell (color-preserving, classes matched by index).
    """
    n = g.n
    adj = g.adj
    if cells is None:
        cells = [list(range(n))] if n else []
    if n == 0:
        return ()

    start = _refine(adj, [list(c) for c in cells])
    best: dict = {"key": None, "perm": None}
    generators: list[tuple[int, ...]] = []

    def leaf(parts: list[list[int]]):
        perm = [0] * n
        for pos, cell in enumerate(parts):
            perm[cell[0]] = pos
        key = _relabeled_rows(n, adj, perm)
        if best["key"] is None or key < best["key"]:
            best["key"] = key
            best["perm"] = tuple(perm)
        elif key == best["key"]:
            inv = [0] * n
            for v in range(n):
                inv[perm[v]] = v
            bperm = best["perm"]
            generators.append(tuple(inv[bperm[v]] for v in range(n)))

    def orbit_reps(candidates: list[int], path: tuple[int, ...]) -> "function":
        # union-find over automorphisms that fix the individualized path
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in generators:
            if all(gen[p] == p for p in path):
                for v in range(n):
                    a, b = find(v), find(gen[v])
                    if a != b:
                        parent[a] = b
        return find

    def search(parts: list[list[int]], path: tuple[int, ...]):
        target = None
        for cell in parts:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            leaf(parts)
            return
        tried: list[int] = []
        for v in target:
            find = orbit_reps(tried, path)
            if any(find(v) == find(u) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            child = []
            for cell in parts:
                if cell is target:
                    child.append([v])
                    child.append(rest)
                else:
                    child.append(list(cell))
            search(_refine(adj, child), path + (v,))

    search(start, ())
    return best["perm"]


def canonical_key(g: Graph, cells: Optional[Sequence[Sequence[int]]] = None) -> tuple[int, ...]:
    """Hashable canonical invariant: cell sizes header plus relabeled adjacency."""
    if g.n == 0:
        return (0,)
    header: tuple[int, ...]
    if cells is None:
        header = (g.n,)
    else:
        header = (g.n,) + tuple(len(c) for c in cells)
    perm = canonical_labeling(g, cells)
    return header + _relabeled_rows(g.n, g.adj, perm)


def canonical_form(g: Graph, partition: Optional[Coloring] = None) -> str:
    """Label string equal for two graphs iff they are isomorphic.

    With ``partition`` given, isomorphisms must map class i onto class i.
    """
    cells = None
    if partition is not None:
        if partition.vertex_count() != g.n:
            raise ValueError("partition does not cover the vertex set")
        cells = [list(c) for c in partition.classes]
    key = canonical_key(g, cells)
    if cells is None:
        sizes = str(g.n)
    else:
        sizes = ",".join(str(len(c)) for c in cells)
    rows = key[len(key) - g.n:] if g.n else ()
    body = "".join(format(row, "016x") for row in rows)
    return f"{sizes}|{body}"


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)
