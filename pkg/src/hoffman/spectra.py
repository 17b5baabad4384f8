"""Adjacency spectra, Perron eigenvectors, and the two spectral bounds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, bits, component_masks, is_regular

DEFAULT_TOL = 1e-9


class NoPerronVector(ValueError):
    """Raised when a disconnected graph has components with unequal lambda_max."""


@dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues sorted descending, with the comparison tolerance."""

    values: tuple[float, ...]
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("spectrum values must be sorted descending")

    @property
    def lambda_max(self) -> float:
        return self.values[0]

    @property
    def lambda_min(self) -> float:
        return self.values[-1]


@dataclass(frozen=True)
class PerronData:
    """Positive unit eigenvector for lambda_max; ``vector[v]`` is the weight of v."""

    eigenvalue: float
    vector: tuple[float, ...]


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for u in bits(g.adj[v]):
            a[v, u] = 1.0
    return a


def spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    if g.n < 1:
        raise ValueError("spectrum of the empty vertex set is undefined")
    try:
        vals = np.linalg.eigvalsh(adjacency_matrix(g))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise RuntimeError(f"eigensolver did not converge: {exc}") from exc
    return Spectrum(tuple(float(x) for x in vals[::-1]), tol)


def lambda_extremes(g: Graph) -> tuple[float, float]:
    """(lambda_min, lambda_max) of the adjacency matrix."""
    vals = np.linalg.eigvalsh(adjacency_matrix(g))
    return float(vals[0]), float(vals[-1])


def perron_vector(g: Graph, tol: float = DEFAULT_TOL) -> PerronData:
    """Unit-norm positive eigenvector for lambda_max.

    For a disconnected graph this exists only when every component has the
    same lambda_max (within tol); each component is then given equal norm.
    """
    if g.n == 0:
        raise ValueError("empty graph has no Perron vector")
    comps = component_masks(g)
    per_comp = []
    for mask in comps:
        verts = list(bits(mask))
        sub = g.induced(verts)
        w, q = np.linalg.eigh(adjacency_matrix(sub))
        lam = float(w[-1])
        vec = q[:, -1]
        if vec.sum() < 0:
            vec = -vec
        if vec.min() <= 0:
            raise NoPerronVector(
                f"component {verts} has no strictly positive top eigenvector"
            )
        per_comp.append((verts, lam, vec))
    lams = [lam for _, lam, _ in per_comp]
    if max(lams) - min(lams) > tol:
        raise NoPerronVector(
            f"no positive eigenvector: component lambda_max values {sorted(lams)} differ"
        )
    full = np.zeros(g.n)
    scale = 1.0 / np.sqrt(len(per_comp))
    for verts, _, vec in per_comp:
        vec = vec / np.linalg.norm(vec) * scale
        for i, v in enumerate(verts):
            full[v] = vec[i]
    return PerronData(max(lams), tuple(float(x) for x in full))


def hoffman_bound(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Spectral chromatic lower bound 1 - lambda_max/lambda_min."""
    if g.num_edges == 0:
        raise ValueError("Hoffman bound undefined for edgeless graphs")
    lmin, lmax = lambda_extremes(g)
    return 1.0 - lmax / lmin


def ratio_bound(g: Graph) -> float:
    """Spectral coclique upper bound n * (-lambda_min) / (lambda_max - lambda_min)."""
    if g.num_edges == 0:
        raise ValueError("ratio bound undefined for edgeless graphs")
    if is_regular(g) is None:
        raise ValueError("ratio bound requires a regular graph")
    lmin, lmax = lambda_extremes(g)
    return g.n * (-lmin) / (lmax - lmin)


def charpoly(g: Graph) -> tuple[int, ...]:
    """Exact integer characteristic polynomial coefficients, leading first.

    Faddeev-LeVerrier over Python ints; the divisions are exact.
    """
    n = g.n
    a = [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(am[i][i] for i in range(n)) // k
        coeffs.append(c)
        m = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return tuple(coeffs)


def lambda_max_highprec(g: Graph, dps: int = 50) -> "object":
    """lambda_max recomputed at ``dps`` decimal digits (mpmath)."""
    import mpmath as mp

    with mp.workdps(dps):
        a = mp.matrix(g.n, g.n)
        for v in range(g.n):
            for u in bits(g.adj[v]):
                a[v, u] = 1
        vals, _ = mp.eigsy(a)
        return max(vals)


def lambda_max_equal(g: Graph, h: Graph, tol: float = DEFAULT_TOL) -> bool:
    """Decide lambda_max(g) == lambda_max(h) more carefully than float compare.

    Equal characteristic polynomials settle it immediately; otherwise the two
    values are recomputed at 50 digits, which separates any distinct algebraic
    values arising at this library's scale.
    """
    if charpoly(g) == charpoly(h):
        return True
    a = lambda_max_highprec(g)
    b = lambda_max_highprec(h)
    return abs(a - b) < 1e-35
