"""Dense symmetric eigensolver (in-repo cyclic Jacobi) and graph spectra."""

from dataclasses import dataclass

import numpy as np

from ._kernels import jacobi_cyclic
from .metric import distance_matrix

SYMMETRY_TOL = 1e-12
CONVERGENCE_FACTOR = 1e-13
MAX_SWEEPS = 100
GROUPING_TOL = 1e-8


class EigensolverError(RuntimeError):
    """Jacobi iteration failed to converge within the sweep cap."""


def group_values(values, tol=GROUPING_TOL):
    """Group a descending value sequence into (representative, multiplicity) pairs.

    Values within ``tol`` of the first member of the current group share it;
    the representative is the group mean.
    """
    groups = []
    i = 0
    n = len(values)
    while i < n:
        j = i
        while j + 1 < n and abs(values[j + 1] - values[i]) <= tol:
            j += 1
        block = np.asarray(values[i : j + 1], dtype=np.float64)
        groups.append((float(block.mean()), j - i + 1))
        i = j + 1
    return groups


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted descending."""

    values: np.ndarray

    @property
    def n(self):
        return int(self.values.shape[0])

    def multiplicities(self, tol=GROUPING_TOL):
        """(value, multiplicity) pairs, grouped within ``tol``."""
        return group_values(self.values, tol)

    def __repr__(self):
        pairs = ", ".join(f"{v:.6g} (x{m})" for v, m in self.multiplicities())
        return f"Spectrum({pairs})"


def sym_eigh(m, vectors=True):
    """Eigen-decompose a dense symmetric matrix with the in-repo Jacobi solver.

    Parameters
    ----------
    m : (n, n) array_like
        Symmetric to within 1e-12 entrywise.
    vectors : bool
        Accumulate rotations into eigenvectors (skipped when False).

    Returns
    -------
    (values, vectors)
        Eigenvalues descending; ``vectors`` has matching columns, or is None.

    Raises
    ------
    ValueError
        Non-square or asymmetric input.
    EigensolverError
        No convergence within the sweep cap (must not happen for valid input).
    """
    a = np.array(m, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    if n == 0:
        raise ValueError("matrix must be nonempty")
    if np.abs(a - a.T).max() > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    a = (a + a.T) / 2.0
    norm = float(np.sqrt((a * a).sum()))
    tol = CONVERGENCE_FACTOR * norm
    v = np.eye(n) if vectors else np.ones((1, 1))
    sweeps = jacobi_cyclic(a, v, bool(vectors), tol, MAX_SWEEPS)
    if sweeps < 0:
        raise EigensolverError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (n={n})")
    vals = np.diag(a).copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    if vectors:
        return vals, np.ascontiguousarray(v[:, order])
    return vals, None


def sym_eigenvalues(m):
    """Spectrum of a dense symmetric matrix (no eigenvectors)."""
    vals, _ = sym_eigh(m, vectors=False)
    return Spectrum(vals)


def adjacency_spectrum(g):
    """Spectrum of the adjacency matrix."""
    return sym_eigenvalues(g.adjacency())


def lambda_min(g):
    """Smallest adjacency eigenvalue."""
    return float(adjacency_spectrum(g).values[-1])


def distance_spectrum(g):
    """Spectrum of the distance matrix (requires a connected graph)."""
    return sym_eigenvalues(distance_matrix(g).astype(np.float64))
