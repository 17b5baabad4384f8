"""Hoffman colorability verdicts, weight-quotient structure checks, and the
decomposition/composition operations on colorings.

A graph is Hoffman colorable when 1 - lambda_max/lambda_min equals the
chromatic number exactly; a disconnected graph qualifies only if every
component does, with identical (lambda_max, lambda_min, chi).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .coloring import chromatic_number
from .graphs import Coloring, Graph, bits, component_masks, from_edges
from .spectra import (
    DEFAULT_TOL,
    NoPerronVector,
    Spectrum,
    adjacency_matrix,
    lambda_extremes,
    perron_vector,
    spectrum,
)

#: tolerance for the bound-vs-chromatic-number equality; looser than the
#: eigenvalue tolerance since the bound aggregates two eigenvalues
CHI_TOL = 1e-6


class ImproperColoring(ValueError):
    """The supplied coloring is not a proper coloring of the graph."""


class NotHoffmanColoring(ValueError):
    """An operation required a Hoffman coloring and did not get one."""




@dataclass(frozen=True)
class HoffmanVerdict:
    bound: float
    chi: int
    colorable: bool
    per_component: tuple[tuple[float, float, int], ...]


@dataclass(frozen=True)
class WeightQuotient:
    """Weight-quotient matrix of a coloring: entries[i][j] averages the
    Perron-weighted adjacency between classes i and j."""

    size: int
    entries: tuple[tuple[float, ...], ...]
    class_norms: tuple[float, ...]
    weight_regular: bool
    regularity_residual: float


@dataclass(frozen=True)
class StructureCheck:
    """The three structure-theorem conditions with their numeric residuals."""

    weight_regular: bool
    offdiagonal_uniform: bool
    norms_uniform: bool
    regularity_residual: float
    offdiagonal_residual: float
    norm_residual: float

    def all_hold(self) -> bool:
        return self.weight_regular and self.offdiagonal_uniform and self.norms_uniform


@dataclass(frozen=True)
class ComposeResult:
    """Composed graph plus the colorability decision.

    ``failures`` lists (class index, reason) for every composition
    precondition that failed; any failure certifies colorable=False, because a
    Hoffman-colorable composition would force the precondition to hold.
    """

    graph: Graph
    colorable: bool
    spec: Spectrum
    new_class_weights: tuple[float, ...]
    max_weight_deviation: float
    failures: tuple[tuple[int, str], ...] = ()


def is_hoffman_colorable(
    g: Graph, tol: float = DEFAULT_TOL, chi_tol: float = CHI_TOL
) -> HoffmanVerdict:
    """Verdict per the definition, with the per-component convention for
    disconnected input."""
    if g.num_edges == 0:
        raise ValueError("Hoffman colorability undefined for edgeless graphs")
    lmin, lmax = lambda_extremes(g)
    bound = 1.0 - lmax / lmin
    per_comp = []
    colorable = True
    for mask in component_masks(g):
        sub = g.induced(list(bits(mask)))
        chi_c = chromatic_number(sub)
        if sub.num_edges == 0:
            per_comp.append((0.0, 0.0, chi_c))
            colorable = False
            continue
        lmin_c, lmax_c = lambda_extremes(sub)
        per_comp.append((lmax_c, lmin_c, chi_c))
        if abs((1.0 - lmax_c / lmin_c) - chi_c) > chi_tol:
            colorable = False
    chi = max(c for _, _, c in per_comp)
    if colorable and len(per_comp) > 1:
        lmaxes = [a for a, _, _ in per_comp]
        lmins = [b for _, b, _ in per_comp]
        chis = [c for _, _, c in per_comp]
        if max(lmaxes) - min(lmaxes) > tol or max(lmins) - min(lmins) > tol:
            colorable = False
        if len(set(chis)) > 1:
            colorable = False
    return HoffmanVerdict(bound, chi, colorable, tuple(per_comp))


def _class_restrictions(x: Sequence[float], coloring: Coloring):
    return [np.array([x[v] for v in cls]) for cls in coloring.classes]


def weight_quotient(g: Graph, c: Coloring, tol: float = DEFAULT_TOL) -> WeightQuotient:
    if not c.is_proper(g):
        raise ImproperColoring("weight quotient needs a proper coloring")
    x = perron_vector(g, tol).vector
    ys = _class_restrictions(x, c)
    k = c.num_classes
    a = adjacency_matrix(g)
    blocks = [
        [a[np.ix_(list(c.classes[i]), list(c.classes[j]))] for j in range(k)]
        for i in range(k)
    ]
    entries = [[0.0] * k for _ in range(k)]
    residual = 0.0
    for i in range(k):
        ni2 = float(ys[i] @ ys[i])
        for j in range(k):
            if i == j:
                continue
            b = float(ys[i] @ blocks[i][j] @ ys[j]) / ni2
            entries[i][j] = b
            residual = max(
                residual, float(np.max(np.abs(blocks[i][j] @ ys[j] - b * ys[i])))
            )
    regular = residual <= tol * max(1, g.n)
    return WeightQuotient(
        k,
        tuple(tuple(row) for row in entries),
        tuple(float(np.linalg.norm(y)) for y in ys),
        regular,
        residual,
    )


def check_hoffman_structure(
    g: Graph, c: Coloring, tol: float = 1e-6
) -> StructureCheck:
    """Check the three conditions a Hoffman coloring must satisfy: the class
    partition is weight-regular, every off-diagonal weight-intersection number
    equals -lambda_min, and the Perron restrictions have equal norms."""
    wq = weight_quotient(g, c)
    lmin, _ = lambda_extremes(g)
    off = [
        wq.entries[i][j]
        for i in range(wq.size)
        for j in range(wq.size)
        if i != j
    ]
    off_residual = max(abs(b - (-lmin)) for b in off) if off else 0.0
    norm_residual = max(wq.class_norms) - min(wq.class_norms)
    return StructureCheck(
        weight_regular=wq.regularity_residual <= tol,
        offdiagonal_uniform=off_residual <= tol,
        norms_uniform=norm_residual <= tol,
        regularity_residual=wq.regularity_residual,
        offdiagonal_residual=off_residual,
        norm_residual=norm_residual,
    )


def decompose(
    g: Graph,
    c: Coloring,
    colors: Iterable[int],
    tol: float = DEFAULT_TOL,
    chi_tol: float = CHI_TOL,
) -> tuple[Graph, Coloring]:
    """Induced subgraph on a subset of >= 2 color classes of a Hoffman coloring,
    with all four decomposition postconditions verified."""
    chosen = sorted(set(colors))
    if len(chosen) < 2:
        raise ValueError("need at least two color classes")
    if any(i < 0 or i >= c.num_classes for i in chosen):
        raise ValueError("color index out of range")
    if not c.is_proper(g):
        raise ImproperColoring("decompose needs a proper coloring")
    verdict = is_hoffman_colorable(g, tol, chi_tol)
    if not verdict.colorable or c.num_classes != verdict.chi:
        raise NotHoffmanColoring("decompose needs a Hoffman coloring")

    vertices = sorted(v for i in chosen for v in c.classes[i])
    h = g.induced(vertices)
    sub_coloring = c.restricted(vertices)

    lmin_g, lmax_g = lambda_extremes(g)
    lmin_h, lmax_h = lambda_extremes(h)
    chi = verdict.chi
    expected_lmax = (len(chosen) - 1) / (chi - 1) * lmax_g
    sub_verdict = is_hoffman_colorable(h, tol, chi_tol)
    x = np.array(perron_vector(g, tol).vector)
    xr = x[vertices]
    residual = float(
        np.max(np.abs(adjacency_matrix(h) @ xr - expected_lmax * xr))
    )
    problems = []
    if not (sub_verdict.colorable and sub_verdict.chi == len(chosen)):
        problems.append("subgraph is not Hoffman colorable with |C| colors")
    if abs(lmax_h - expected_lmax) > chi_tol:
        problems.append(f"lambda_max {lmax_h} != {expected_lmax}")
    if residual > chi_tol * max(1, h.n):
        problems.append(f"restricted Perron vector residual {residual}")
    if abs(lmin_h - lmin_g) > chi_tol:
        problems.append(f"lambda_min {lmin_h} != {lmin_g}")
    if problems:
        raise NotHoffmanColoring("; ".join(problems))
    return h, sub_coloring


def compose_and_check(
    template: Graph,
    tcoloring: Coloring,
    new_class: int,
    cross_edges: Iterable[tuple[int, int]],
    tol: float = DEFAULT_TOL,
    chi_tol: float = CHI_TOL,
) -> ComposeResult:
    """Extend a Hoffman-colored template by an independent class and decide
    colorability of the result via the lambda_min equivalence.

    ``cross_edges`` pairs (i, v) join new vertex i (0-based) to template
    vertex v. The composed graph keeps template vertices first.
    """
    if new_class < 1:
        raise ValueError("new class must have at least one vertex")
    if not tcoloring.is_proper(template):
        raise ImproperColoring("template coloring is not proper")
    verdict = is_hoffman_colorable(template, tol, chi_tol)
    c = tcoloring.num_classes
    if not verdict.colorable or verdict.chi != c:
        raise NotHoffmanColoring("template must carry a Hoffman coloring")

    n_t = template.n
    edges = list(template.edges()) + [(n_t + i, v) for i, v in cross_edges]
    g = from_edges(n_t + new_class, edges)

    x = np.array(perron_vector(template, tol).vector)
    lmin_t, _ = lambda_extremes(template)
    nu = -lmin_t

    failures: list[tuple[int, str]] = []
    y_per_class: list[np.ndarray] = []
    for i, cls in enumerate(tcoloring.classes):
        verts = list(cls) + [n_t + j for j in range(new_class)]
        h = g.induced(verts)
        lmin_h, _ = lambda_extremes(h)
        if abs(lmin_h - lmin_t) > chi_tol:
            failures.append((i, f"lambda_min {lmin_h:.9f} != {lmin_t:.9f}"))
            continue
        y = np.full(new_class, np.nan)
        ok = True
        for mask in component_masks(h):
            comp = list(bits(mask))
            old_part = [p for p in comp if p < len(cls)]
            new_part = [p for p in comp if p >= len(cls)]
            if not old_part or not new_part:
                failures.append((i, "bipartite part has an isolated side"))
                ok = False
                break
            sub = h.induced(comp)
            w, q = np.linalg.eigh(adjacency_matrix(sub))
            if abs(w[-1] - nu) > chi_tol:
                failures.append(
                    (i, f"component lambda_max {w[-1]:.9f} != {nu:.9f}")
                )
                ok = False
                break
            p = q[:, -1]
            if p.sum() < 0:
                p = -p
            x_part = np.array([x[cls[j]] for j in old_part])
            p_part = np.array([p[comp.index(j)] for j in old_part])
            scale = float(np.linalg.norm(x_part) / np.linalg.norm(p_part))
            if np.max(np.abs(p_part * scale - x_part)) > chi_tol * max(1, h.n):
                failures.append(
                    (i, "positive eigenvector does not restrict to the template weights")
                )
                ok = False
                break
            for j in new_part:
                y[j - len(cls)] = p[comp.index(j)] * scale
        if ok:
            y_per_class.append(y)

    max_dev = 0.0
    y_out: tuple[float, ...] = ()
    if not failures:
        stacked = np.vstack(y_per_class)
        max_dev = float(np.max(stacked.max(axis=0) - stacked.min(axis=0)))
        if max_dev > chi_tol * max(1, g.n):
            failures.append(
                (-1, f"classes disagree on new-class weights by {max_dev:.3e}")
            )
        else:
            y_out = tuple(float(v) for v in stacked.mean(axis=0))
    lmin_g, _ = lambda_extremes(g)
    colorable = not failures and lmin_g >= lmin_t - chi_tol
    return ComposeResult(
        g, colorable, spectrum(g, tol), y_out, max_dev, tuple(failures)
    )
