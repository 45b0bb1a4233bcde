"""Numeric QEC computation.

QEC(G) is the maximum of <f, D f> over unit vectors f orthogonal to the
all-ones vector.  Three mutually cross-checking routes are provided:
compression onto an orthonormal basis of the hyperplane, enumeration of the
Lagrange stationary values (eigenvalue branch plus secular-equation roots),
and the diameter-2 shortcuts through the adjacency matrix.
"""

from dataclasses import dataclass

import numpy as np

from .graphs import regularity
from .metric import distance_matrix, has_diameter_at_most_2
from .spectral import GROUPING_TOL, sym_eigh

METHODS = ("compression", "stationary", "diam2_general", "diam2_regular", "formula")

CROSS_METHOD_TOL = 1e-7
SECULAR_ROOT_TOL = 1e-11
BRACKET_EPS_FACTOR = 1e-9
ONES_ORTHO_TOL = 1e-9


class MethodDisagreementError(RuntimeError):
    """Cross-checking QEC methods disagreed beyond tolerance."""


@dataclass(frozen=True, eq=False)
class QecResult:
    value: float
    method: str
    witness: np.ndarray


@dataclass(frozen=True, eq=False)
class StationaryPoint:
    """Solution of (D - lam) f = (mu/2) * ones with f unit and orthogonal to ones."""

    f: np.ndarray
    lam: float
    mu: float


def ones_complement_basis(n):
    """Orthonormal basis of the hyperplane orthogonal to the all-ones vector.

    Columns 1..n-1 of the Householder reflection mapping e_0 to ones/sqrt(n);
    returns an (n, n-1) matrix with orthonormal columns, each summing to zero.
    """
    if n < 2:
        raise ValueError("basis of the ones-complement needs n >= 2")
    v = np.full(n, 1.0 / np.sqrt(n))
    v[0] -= 1.0
    h = np.eye(n) - (2.0 / (v @ v)) * np.outer(v, v)
    return np.ascontiguousarray(h[:, 1:])


def _finish_witness(f):
    # Re-project against numerical drift and normalize; the Rayleigh value
    # moves only at second order.
    f = np.asarray(f, dtype=np.float64)
    f = f - f.sum() / f.shape[0]
    return f / np.sqrt(f @ f)


def _require_size(g):
    if g.n < 2:
        raise ValueError("QEC is undefined on a single vertex")


def qec_compression(g):
    """QEC as the top eigenvalue of the distance matrix compressed to the hyperplane.

    Builds the orthonormal basis Q of the ones-complement, takes the largest
    eigenvalue of Q^T D Q, and lifts the top eigenvector back as the witness.
    """
    _require_size(g)
    d = distance_matrix(g).astype(np.float64)
    q = ones_complement_basis(g.n)
    vals, vecs = sym_eigh(q.T @ d @ q)
    witness = _finish_witness(q @ vecs[:, 0])
    return QecResult(float(vals[0]), "compression", witness)


def stationary_points(g):
    """All stationary values of the constrained quadratic form, with witnesses.

    Candidates are (a) eigenvalues of D whose eigenspace meets the
    ones-complement (multiplicity >= 2, or eigenvector inner product with the
    ones vector below tolerance), with mu = 0, and (b) roots of the secular
    function phi(lam) = <1, (D - lam)^-1 1>, located by bisection between
    consecutive distinct eigenvalues.
    """
    if g.n < 3:
        raise ValueError("stationary enumeration needs n >= 3")
    n = g.n
    d = distance_matrix(g).astype(np.float64)
    vals, vecs = sym_eigh(d)
    w = vecs.T @ np.ones(n)
    points = []

    ortho_tol = ONES_ORTHO_TOL * np.sqrt(n)
    groups = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and abs(vals[j + 1] - vals[i]) <= GROUPING_TOL:
            j += 1
        groups.append((i, j))
        i = j + 1

    for i, j in groups:
        wg = w[i : j + 1]
        mult = j - i + 1
        if mult < 2 and abs(wg[0]) >= ortho_tol:
            continue
        lam = float(vals[i : j + 1].mean())
        basis = vecs[:, i : j + 1]
        wnorm = np.sqrt(wg @ wg)
        if wnorm < ortho_tol:
            coeff = np.zeros(mult)
            coeff[0] = 1.0
        else:
            # Unit combination of the eigenspace orthogonal to the ones vector.
            k = int(np.argmax(np.abs(wg)))
            other = 0 if k != 0 else 1
            coeff = np.zeros(mult)
            coeff[other] = 1.0
            coeff[k] = -wg[other] / wg[k]
            coeff /= np.sqrt(coeff @ coeff)
        points.append(StationaryPoint(_finish_witness(basis @ coeff), lam, 0.0))

    weights = w * w
    fro = float(np.sqrt((d * d).sum()))
    eps = BRACKET_EPS_FACTOR * fro

    def phi(lam):
        # A probe can land exactly on an eigenvalue: a zero-weight pole term
        # is a removable 0/0, a nonzero-weight hit is a genuine infinity.
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = weights / (vals - lam)
        return float(np.nansum(terms))

    reps = [float(vals[i : j + 1].mean()) for i, j in groups]
    for upper, lower in zip(reps, reps[1:]):
        gap = upper - lower
        a = lower + min(eps, 0.25 * gap)
        b = upper - min(eps, 0.25 * gap)
        fa, fb = phi(a), phi(b)
        # A pole with small (but not negligible) weight pulls its root to
        # within the guard band; walk the endpoint in until the sign flips.
        floor_a = max(abs(lower), 1.0) * 1e-15
        while fa >= 0.0 and a - lower > floor_a:
            a = lower + (a - lower) / 8.0
            fa = phi(a)
        floor_b = max(abs(upper), 1.0) * 1e-15
        while fb <= 0.0 and upper - b > floor_b:
            b = upper - (upper - b) / 8.0
            fb = phi(b)
        if not (fa < 0.0 < fb):
            continue
        for _ in range(200):
            if b - a <= SECULAR_ROOT_TOL:
                break
            mid = 0.5 * (a + b)
            if phi(mid) < 0.0:
                a = mid
            else:
                b = mid
        lam = 0.5 * (a + b)
        x = vecs @ (w / (vals - lam))
        xnorm = float(np.sqrt(x @ x))
        points.append(StationaryPoint(_finish_witness(x), lam, 2.0 / xnorm))

    if not points:
        raise MethodDisagreementError("stationary enumeration produced no candidates")
    return points


def qec_stationary(g):
    """QEC as the largest stationary value."""
    best = max(stationary_points(g), key=lambda p: p.lam)
    return QecResult(best.lam, "stationary", best.f)


def qec_diam2(g):
    """QEC via D = 2J - 2I - A: minus two minus the constrained minimum of <f, A f>."""
    _require_size(g)
    if not has_diameter_at_most_2(g):
        raise ValueError("diameter-2 method needs diameter <= 2")
    q = ones_complement_basis(g.n)
    vals, vecs = sym_eigh(q.T @ g.adjacency() @ q)
    witness = _finish_witness(q @ vecs[:, -1])
    return QecResult(-2.0 - float(vals[-1]), "diam2_general", witness)


def qec_regular_diam2(g):
    """QEC of a regular diameter-<=2 graph: -2 - lambda_min of the adjacency matrix."""
    _require_size(g)
    if regularity(g) is None:
        raise ValueError("regular diameter-2 method needs a regular graph")
    if not has_diameter_at_most_2(g):
        raise ValueError("diameter-2 method needs diameter <= 2")
    vals, vecs = sym_eigh(g.adjacency())
    witness = _finish_witness(vecs[:, -1])
    return QecResult(-2.0 - float(vals[-1]), "diam2_regular", witness)


def qec(g, method="auto", verify=False):
    """Compute QEC, dispatching on structure.

    Parameters
    ----------
    g : Graph
        Connected, n >= 2.
    method : str
        "auto" (regular diam-2 shortcut, then general diam-2, then
        compression), or one of "compression", "stationary", "diam2".
    verify : bool
        Additionally run every applicable method and insist on pairwise
        agreement within 1e-7.

    Raises
    ------
    MethodDisagreementError
        If verification finds methods apart by more than tolerance.
    """
    _require_size(g)
    if method == "compression":
        result = qec_compression(g)
    elif method == "stationary":
        result = qec_stationary(g)
    elif method == "diam2":
        result = qec_diam2(g)
    elif method == "auto":
        if has_diameter_at_most_2(g):
            if regularity(g) is not None:
                result = qec_regular_diam2(g)
            else:
                result = qec_diam2(g)
        else:
            result = qec_compression(g)
    else:
        raise ValueError(f"unknown method {method!r}")

    if verify:
        results = [qec_compression(g)]
        if g.n >= 3:
            results.append(qec_stationary(g))
        if has_diameter_at_most_2(g):
            results.append(qec_diam2(g))
            if regularity(g) is not None:
                results.append(qec_regular_diam2(g))
        lo = min(r.value for r in results)
        hi = max(r.value for r in results)
        if hi - lo > CROSS_METHOD_TOL:
            detail = ", ".join(f"{r.method}={r.value:.12g}" for r in results)
            raise MethodDisagreementError(f"methods disagree beyond 1e-7: {detail}")
    return result
