"""Closed-form QEC values for graph families, as pure functions of parameters.

Rational results are kept exact (`fractions.Fraction`) so that branch
selection inside max-expressions cannot flip from rounding; irrational
results (odd cycles, wheels, non-square SRG discriminants) come back as
floats.  Mixed Fraction/float comparisons in Python are exact, which is what
the max-branch logic relies on.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FormulaValue:
    """A closed-form value, its family tag, and the constraints it was checked under."""

    value: object
    source: str
    validity: str = ""

    def __float__(self):
        return float(self.value)


def _require_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def qec_complete(n):
    """QEC of the complete graph K_n (n >= 2): always -1."""
    _require_int("n", n, 2)
    return FormulaValue(Fraction(-1), "complete", f"n >= 2 (n={n})")


def qec_complete_bipartite(m, n):
    """QEC of K_{m,n}: 2(mn - m - n)/(m + n)."""
    _require_int("m", m, 1)
    _require_int("n", n, 1)
    return FormulaValue(
        Fraction(2 * (m * n - m - n), m + n), "complete-bipartite", f"m, n >= 1 (m={m}, n={n})"
    )


def qec_cycle(n):
    """QEC of the cycle C_n: 0 for even n, -1/(4 cos^2(pi/n)) for odd n."""
    _require_int("n", n, 3)
    if n % 2 == 0:
        return FormulaValue(Fraction(0), "cycle", f"even n (n={n})")
    return FormulaValue(-1.0 / (4.0 * math.cos(math.pi / n) ** 2), "cycle", f"odd n (n={n})")


def lambda_min_cycle(n):
    """Smallest adjacency eigenvalue of C_n: -2 for even n, -2 + 4 sin^2(pi/2n) for odd n."""
    _require_int("n", n, 3)
    if n % 2 == 0:
        return Fraction(-2)
    return -2.0 + 4.0 * math.sin(math.pi / (2 * n)) ** 2


def lambda_min_complete(n):
    """Smallest adjacency eigenvalue of K_n: 0 at n=1, else -1."""
    _require_int("n", n, 1)
    return Fraction(0) if n == 1 else Fraction(-1)


def lambda_min_empty(n):
    """Smallest adjacency eigenvalue of the edgeless graph: 0."""
    _require_int("n", n, 1)
    return Fraction(0)


def _check_lambda_min(name, value, n):
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, float)):
        raise TypeError(f"{name} must be a real number, got {value!r}")
    if value > 0 or value < -n:
        raise ValueError(f"{name} must lie in [-n, 0], got {value}")
    return value


def qec_join_regular(n1, r1, lmin1, n2, r2, lmin2):
    """QEC of the join of two regular graphs.

    Parameters
    ----------
    n1, r1, lmin1 : parameters of the first part (vertex count, degree,
        smallest adjacency eigenvalue); likewise for the second part.

    Returns
    -------
    FormulaValue
        -2 + max{-lmin1, -lmin2, (2 n1 n2 - r1 n2 - r2 n1)/(n1 + n2)},
        exact whenever both lambda_min inputs are exact.
    """
    _require_int("n1", n1, 1)
    _require_int("n2", n2, 1)
    _require_int("r1", r1, 0)
    _require_int("r2", r2, 0)
    if r1 > n1 - 1:
        raise ValueError(f"r1 must be <= n1 - 1, got r1={r1}, n1={n1}")
    if r2 > n2 - 1:
        raise ValueError(f"r2 must be <= n2 - 1, got r2={r2}, n2={n2}")
    _check_lambda_min("lmin1", lmin1, n1)
    _check_lambda_min("lmin2", lmin2, n2)
    lam_star = Fraction(2 * n1 * n2 - r1 * n2 - r2 * n1, n1 + n2)
    best = max(-lmin1, -lmin2, lam_star)
    return FormulaValue(
        best - 2,
        "regular-join",
        f"regular parts ({n1},{r1},{lmin1}) and ({n2},{r2},{lmin2})",
    )


def qec_complete_split(m, n):
    """QEC of the complete split graph: clique K_n joined to an independent set of size m.

    Value (mn - m - 2n)/(m + n), valid for n >= 2, m >= 1.
    """
    _require_int("m", m, 1)
    _require_int("n", n, 2)
    return FormulaValue(
        Fraction(m * n - m - 2 * n, m + n), "complete-split", f"clique n >= 2, independent m >= 1"
    )


def qec_friendship(n):
    """QEC of the friendship graph F_n (n triangles sharing one vertex): -3/(2n+1)."""
    _require_int("n", n, 1)
    return FormulaValue(Fraction(-3, 2 * n + 1), "friendship", f"n >= 1 (n={n})")


def qec_wheel(n):
    """QEC of the wheel on n+1 vertices: 0 for even n, -4 sin^2(pi/2n) for odd n."""
    _require_int("n", n, 3)
    if n % 2 == 0:
        return FormulaValue(Fraction(0), "wheel", f"even n (n={n})")
    return FormulaValue(-4.0 * math.sin(math.pi / (2 * n)) ** 2, "wheel", f"odd n (n={n})")


def qec_cycle_join_complete(n, m):
    """QEC of C_n + K_m: max{-2 - lambda_min(C_n), (mn - 4m - n)/(m + n)}."""
    _require_int("n", n, 3)
    _require_int("m", m, 1)
    eig_branch = -2 - lambda_min_cycle(n)
    star_branch = Fraction(m * n - 4 * m - n, m + n)
    return FormulaValue(
        max(eig_branch, star_branch), "cycle-join-complete", f"n >= 3, m >= 1 (n={n}, m={m})"
    )


def qec_cycle_join_empty(n, m):
    """QEC of C_n joined to an independent set of size m >= 2: 2(mn - 2m - n)/(m + n)."""
    _require_int("n", n, 3)
    _require_int("m", m, 2)
    return FormulaValue(
        Fraction(2 * m * n - 4 * m - 2 * n, m + n), "cycle-join-empty", f"n >= 3, m >= 2 (n={n}, m={m})"
    )


def _check_qec_input(q):
    if isinstance(q, bool) or not isinstance(q, (int, Fraction, float)):
        raise TypeError(f"q must be a real number, got {q!r}")
    if q < -1 - 1e-9:
        raise ValueError(f"q must be a valid QEC value (>= -1), got {q}")
    return q


def qec_double_formula(q):
    """QEC of the double graph in terms of the base QEC: 2q + 2."""
    _check_qec_input(q)
    return FormulaValue(2 * q + 2, "double", "q >= -1")


def qec_lex2_formula(q):
    """QEC of the lexicographic product with K_2 in terms of the base QEC: 2q + 1."""
    _check_qec_input(q)
    return FormulaValue(2 * q + 1, "lex2", "q >= -1")


def _srg_unpack(p):
    if hasattr(p, "as_tuple"):
        return p.as_tuple()
    n, r, e, f = p
    return (n, r, e, f)


def _srg_validate(n, r, e, f):
    for name, value in (("n", n), ("r", r), ("e", e), ("f", f)):
        _require_int(name, value, 0)
    if not 2 <= r <= n - 2:
        raise ValueError(f"degree r must satisfy 2 <= r <= n-2, got r={r}, n={n}")
    if f < 1:
        raise ValueError(f"connected strong regularity needs f >= 1, got f={f}")
    if r < f:
        raise ValueError(f"infeasible parameters: r={r} < f={f}")
    if e > r - 1:
        raise ValueError(f"adjacent pairs cannot share more than r-1 neighbours, got e={e}, r={r}")
    if r * (r - e - 1) != (n - r - 1) * f:
        raise ValueError(
            f"parameters fail the counting identity r(r-e-1) = (n-r-1)f: ({n},{r},{e},{f})"
        )


def _srg_discriminant_root(e, f, r):
    disc = (f - e) ** 2 + 4 * (r - f)
    root = math.isqrt(disc)
    if root * root == disc:
        return Fraction(root)
    return math.sqrt(disc)


def qec_srg(p):
    """QEC of a strongly regular graph from its parameters.

    -2 + ((f - e) + sqrt((f - e)^2 + 4(r - f)))/2; exact when the discriminant
    is a perfect square.
    """
    n, r, e, f = _srg_unpack(p)
    _srg_validate(n, r, e, f)
    root = _srg_discriminant_root(e, f, r)
    value = -2 + ((f - e) + root) / 2
    return FormulaValue(value, "srg", f"parameters ({n},{r},{e},{f})")


def srg_lambda_min(p):
    """Smallest adjacency eigenvalue of a strongly regular graph: -((f-e) + sqrt(disc))/2."""
    n, r, e, f = _srg_unpack(p)
    _srg_validate(n, r, e, f)
    root = _srg_discriminant_root(e, f, r)
    return -((f - e) + root) / 2


# (vertex count, degree, smallest adjacency eigenvalue) for the join tables.
SRG_JOIN_BASES = {
    "petersen": (10, 3, Fraction(-2)),
    "shrikhande": (16, 6, Fraction(-2)),
    "clebsch": (16, 10, Fraction(-2)),
    "schlafli": (27, 16, Fraction(-2)),
    "chang": (28, 12, Fraction(-2)),
    "hoffman_singleton": (50, 7, Fraction(-3)),
    "higman_sims": (100, 22, Fraction(-8)),
    "suzuki": (1782, 416, Fraction(-16)),
}

_FAMILY_RE = re.compile(
    r"^\s*(?P<base>[A-Za-z_][A-Za-z_0-9]*)\s*(?:\(\s*(?P<param>\d+)\s*\))?\s*\+\s*(?P<other>K|Kbar)\s*$",
    re.IGNORECASE,
)


def _join_base_params(base, param):
    base = base.lower()
    if base in ("t", "triangular"):
        if param is None:
            raise ValueError("triangular family needs a size, e.g. 'T(5)+K'")
        n = _require_int("n", param, 4)
        return f"T({n})", (n * (n - 1) // 2, 2 * (n - 2), Fraction(-2))
    if base == "grid":
        if param is None:
            raise ValueError("grid family needs a size, e.g. 'grid(4)+K'")
        n = _require_int("n", param, 3)
        return f"grid({n})", (n * n, 2 * (n - 1), Fraction(-2))
    if base == "chang":
        if param is not None and param not in (1, 2, 3):
            raise ValueError(f"chang index must be 1, 2 or 3, got {param}")
        return "chang", SRG_JOIN_BASES["chang"]
    if base in SRG_JOIN_BASES:
        if param is not None:
            raise ValueError(f"family {base!r} takes no parameter")
        return base, SRG_JOIN_BASES[base]
    known = ", ".join(sorted(SRG_JOIN_BASES) + ["T(n)", "grid(n)"])
    raise ValueError(f"unknown join-table family {base!r}; known bases: {known}")


def qec_srg_join_tables(family, m):
    """QEC of a named strongly regular graph joined with K_m or an independent set.

    ``family`` reads like "petersen+K", "T(5)+Kbar", or "grid(4)+K"; the value
    is computed through the regular-join formula from the family's
    (n, r, lambda_min) triple, so it is exact.
    """
    match = _FAMILY_RE.match(family)
    if match is None:
        raise ValueError(
            f"family must look like '<base>+K' or '<base>+Kbar', got {family!r}"
        )
    _require_int("m", m, 1)
    param = int(match.group("param")) if match.group("param") else None
    label, (n1, r1, lmin1) = _join_base_params(match.group("base"), param)
    other = match.group("other").lower()
    if other == "k":
        n2, r2, lmin2 = m, m - 1, lambda_min_complete(m)
        suffix = f"K({m})"
    else:
        n2, r2, lmin2 = m, 0, lambda_min_empty(m)
        suffix = f"Kbar({m})"
    inner = qec_join_regular(n1, r1, lmin1, n2, r2, lmin2)
    return FormulaValue(inner.value, "srg-join", f"{label} + {suffix}")
