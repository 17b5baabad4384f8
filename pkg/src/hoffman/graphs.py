"""Immutable bitset graphs and the elementary combinatorics shared by every module.

Vertices are 0..n-1 and adjacency is stored as one Python int bitmask per
vertex, which keeps graphs hashable, cheap to copy and fast to slice. The
library caps graphs at 64 vertices; everything here is exact combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus one neighbor bitmask per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    # -- derived graphs ------------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is ``vertices[i]``."""
        idx = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                j = idx.get(u)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under ``perm``: vertex v maps to perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in extra:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in increasing order."""
    return _bits(mask)


# -- constructors -----------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(m: int) -> Graph:
    """K_{1,m}: vertex 0 is the center."""
    return from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_multipartite(*sizes: int) -> Graph:
    n = sum(sizes)
    rows = []
    start = 0
    masks = []
    for s in sizes:
        masks.append(((1 << s) - 1) << start)
        start += s
    full = (1 << n) - 1
    for mask, s in zip(masks, sizes):
        rows.extend([full ^ mask] * s)
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    n = sum(g.n for g in graphs)
    rows: list[int] = []
    shift = 0
    for g in graphs:
        rows.extend(row << shift for row in g.adj)
        shift += g.n
    return Graph(n, tuple(rows))


# -- graph6 -----------------------------------------------------------------


def from_graph6(text: str | bytes) -> Graph:
    """Decode one header-less short-form graph6 value (n <= 62)."""
    if isinstance(text, bytes):
        data = text
    else:
        data = text.encode("latin-1", errors="replace")
    data = data.rstrip(b"\r\n")
    if not data:
        raise GraphFormatError("empty graph6 input", 0)
    first = data[0]
    if first == 126:
        raise GraphFormatError("long-form length prefix not supported", 0)
    if not 63 <= first <= 125:
        raise GraphFormatError(f"length prefix byte {first} outside graph6 range", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 < need:
        raise GraphFormatError(
            f"truncated edge data: need {need} bytes, found {len(data) - 1}", len(data)
        )
    if len(data) - 1 > need:
        raise GraphFormatError("trailing garbage after edge data", 1 + need)
    rows = [0] * n
    bit = 0
    for pos, byte in enumerate(data[1:], start=1):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte} outside graph6 range", pos)
        group = byte - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise GraphFormatError("nonzero padding bits", pos)
                continue
            if group >> k & 1:
                i, j = _graph6_pair(bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def _graph6_pair(bit: int) -> tuple[int, int]:
    # Bit order is column-major over the strict upper triangle: (0,1),(0,2),(1,2),...
    j = 1
    while bit >= j:
        bit -= j
        j += 1
    return bit, j


def to_graph6(g: Graph) -> str:
    """Encode in header-less short form; requires n <= 62."""
    if g.n > 62:
        raise ValueError(f"graph6 short form supports at most 62 vertices, got {g.n}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


# -- connectivity -----------------------------------------------------------


def component_masks(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    return [tuple(_bits(mask)) for mask in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def bipartition(g: Graph) -> Optional[tuple[int, int]]:
    """Two-coloring as a pair of vertex masks, or None if g has an odd cycle.

    Within each component the side containing the smallest vertex goes left.
    """
    color = [-1] * g.n
    left = right = 0
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            left |= 1 << v
        else:
            right |= 1 << v
    return left, right


# -- colorings as data ------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """Ordered partition of the vertex set into non-empty classes."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for cls in self.classes:
            if not cls:
                raise ValueError("empty color class")
            if list(cls) != sorted(cls):
                raise ValueError("class vertices must be sorted")
            if seen & set(cls):
                raise ValueError("color classes overlap")
            seen.update(cls)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def vertex_count(self) -> int:
        return sum(len(c) for c in self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def class_masks(self) -> list[int]:
        return [sum(1 << v for v in cls) for cls in self.classes]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def is_proper(self, g: Graph) -> bool:
        if self.vertex_count() != g.n:
            return False
        for mask in self.class_masks():
            for v in _bits(mask):
                if g.adj[v] & mask:
                    return False
        return True

    def restricted(self, vertices: Sequence[int]) -> "Coloring":
        """Coloring induced on ``vertices`` relabelled to 0..len-1, empty classes dropped."""
        idx = {v: i for i, v in enumerate(vertices)}
        classes = []
        for cls in self.classes:
            sub = tuple(sorted(idx[v] for v in cls if v in idx))
            if sub:
                classes.append(sub)
        return Coloring(tuple(classes))


def coloring_from_classes(classes: Iterable[Iterable[int]]) -> Coloring:
    return Coloring(tuple(tuple(sorted(c)) for c in classes))


# -- integer partitions -----------------------------------------------------


def integer_partitions(n: int, k: int) -> list[tuple[int, ...]]:
    """All partitions of n into exactly k positive parts, non-increasing,
    listed in lexicographically descending order."""
    if k < 1 or n < k:
        raise ValueError(f"cannot partition {n} into {k} positive parts")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, parts_left: int, prefix: list[int], cap: int):
        if parts_left == 1:
            if remaining <= cap:
                out.append(tuple(prefix + [remaining]))
            return
        # each remaining part >= 1, so the next part is at most remaining - (parts_left - 1)
        hi = min(cap, remaining - (parts_left - 1))
        lo = -(-remaining // parts_left)  # ceil: keep parts non-increasing
        for p in range(hi, lo - 1, -1):
            rec(remaining - p, parts_left - 1, prefix + [p], p)

    rec(n, k, [], n)
    return out


# -- independence number ----------------------------------------------------


def independence_number(g: Graph) -> int:
    """Exact maximum coclique size by branch and bound on vertex masks."""
    if g.n == 0:
        raise ValueError("independence number of the empty vertex set is undefined")
    adj = g.adj
    best = 0

    def bound(mask: int) -> int:
        return mask.bit_count()

    def rec(candidates: int, size: int):
        nonlocal best
        if size + bound(candidates) <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        # branch on a maximum-degree candidate to shrink the subproblem fast
        v = max(_bits(candidates), key=lambda u: (adj[u] & candidates).bit_count())
        rec(candidates & ~(1 << v) & ~adj[v], size + 1)
        rec(candidates & ~(1 << v), size)

    rec((1 << g.n) - 1, 0)
    return best


def is_regular(g: Graph) -> Optional[int]:
    """Common degree if g is regular, else None. K1 counts as 0-regular."""
    if g.n == 0:
        return None
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None
