"""Weighted adjacency matrices, Perron values, and full spectra.

The Perron value is computed by shifted power iteration on A + cI with
c = max row sum: the shift makes the spectrum nonnegative, so the largest
eigenvalue of A dominates in modulus even for bipartite-like spectra with
a matching -rho eigenvalue. Full spectra go through LAPACK's symmetric
eigensolver.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import BadParams, NoConvergence, SizeLimit
from .graph_core import degrees, subdivided
from .weights import eval_weight

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10 ** 6
FULL_SPECTRUM_MAX_ORDER = 64
INTERLACING_TOL = 1e-8


def f_adjacency(G, f):
    """Dense weighted adjacency matrix: entry (i, j) = f(d_i, d_j) on edges."""
    degs = degrees(G)
    M = np.zeros((G.n, G.n))
    for u, v in G.edges:
        w = eval_weight(f, degs[u], degs[v])
        M[u, v] = w
        M[v, u] = w
    return M


@dataclass
class SpectralResult:
    """Perron value, eigenvector (unit maximum entry), and solve metadata."""

    rho: float
    vector: np.ndarray
    residual: float
    iterations: int
    tol: float


def spectral_radius(M, tol=DEFAULT_TOL, max_iterations=MAX_ITERATIONS):
    """Largest eigenvalue of a symmetric nonnegative matrix by power iteration.

    ``tol`` is relative: iteration stops once max|Mx - rho*x| <= tol * max(1, rho)
    with x normalized to unit maximum entry. Deterministic for fixed input.
    For a connected underlying graph the returned vector is strictly positive.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise BadParams("matrix must be square")
    n = M.shape[0]
    if n == 0:
        raise BadParams("matrix must be nonempty")
    shift = float(M.sum(axis=1).max())
    x = np.ones(n)
    rho = 0.0
    residual = 0.0
    for iteration in range(1, max_iterations + 1):
        x = x / x.max()
        y = M @ x
        rho = float(x @ y) / float(x @ x)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol * max(1.0, abs(rho)):
            return SpectralResult(rho, x, residual, iteration, tol)
        x = y + shift * x
    raise NoConvergence(max_iterations, residual)


def f_spectral_radius(G, f, tol=DEFAULT_TOL):
    """Perron data of the f-adjacency matrix of G."""
    return spectral_radius(f_adjacency(G, f), tol=tol)


def full_spectrum(M):
    """All eigenvalues of a symmetric matrix, sorted descending."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise BadParams("matrix must be square")
    if M.shape[0] > FULL_SPECTRUM_MAX_ORDER:
        raise SizeLimit(f"full spectrum supports order <= {FULL_SPECTRUM_MAX_ORDER}")
    return np.linalg.eigvalsh(M)[::-1].copy()


@dataclass
class InterlacingReport:
    """Eigenvalues before/after one edge subdivision plus the comparison outcome.

    ``holds`` asserts lambda_{i-2} >= theta_i >= lambda_{i+1} for every
    i = 1..n+1, reading out-of-range lambda indices as +/- infinity.
    """

    holds: bool
    lam: list = field(default_factory=list)
    theta: list = field(default_factory=list)
    max_violation: float = 0.0


def interlacing_check(G, e, f, tol=INTERLACING_TOL):
    """Check the subdivision interlacing inequalities for edge e of G.

    The subdivided graph has fresh degrees, so its weights are recomputed,
    not inherited.
    """
    lam = full_spectrum(f_adjacency(G, f))
    H = subdivided(G, e)
    theta = full_spectrum(f_adjacency(H, f))
    n = G.n
    worst = 0.0
    for i in range(1, n + 2):
        th = theta[i - 1]
        if i - 2 >= 1:
            worst = max(worst, th - lam[i - 3])  # need lambda_{i-2} >= theta_i
        if i + 1 <= n:
            worst = max(worst, lam[i] - th)  # need theta_i >= lambda_{i+1}
    return InterlacingReport(worst <= tol, list(lam), list(theta), worst)
