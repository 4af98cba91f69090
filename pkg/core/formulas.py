"""
Genus Formulas

Closed-form reference values used to cross-check constructed surfaces.
All arithmetic is exact (int / Fraction).
"""

from fractions import Fraction
from math import comb

from core.errors import DomainError, InconsistencyError

# A genus value is a nonnegative integer.
GenusValue = int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def qn_genus(n: int) -> GenusValue:
    """
    Genus of the hypercube graph: 1 + (n-4) * 2^(n-3).

    Raises:
        DomainError: For n < 3
    """
    if n < 3:
        raise DomainError(f"qn_genus is defined here for n >= 3, got n={n}")
    return 1 + (n - 4) * 2 ** (n - 3)


def bipartite_lower_bound(v: int, e: int) -> Fraction:
    """
    Lower bound (4 - 2v + e) / 4 on the genus of a connected bipartite graph.

    Returned unrounded; see integer_lower_bound for the clamped ceiling.
    """
    return Fraction(4 - 2 * v + e, 4)


def integer_lower_bound(v: int, e: int) -> GenusValue:
    """Ceiling of bipartite_lower_bound, clamped at 0."""
    bound = bipartite_lower_bound(v, e)
    return max(0, _ceil_div(bound.numerator, bound.denominator))


def kmn_genus(m: int, n: int) -> GenusValue:
    """
    Genus of K_{m,n}: ceil((m-2)(n-2)/4).

    Raises:
        DomainError: If either side has fewer than 2 vertices
    """
    if min(m, n) < 2:
        raise DomainError(f"kmn_genus needs 2 <= m <= n, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 4)


def kn_genus(n: int) -> GenusValue:
    """
    Genus of K_n: ceil((n-3)(n-4)/12).

    Raises:
        DomainError: For n < 3
    """
    if n < 3:
        raise DomainError(f"kn_genus needs n >= 3, got n={n}")
    return _ceil_div((n - 3) * (n - 4), 12)


def genus_from_counts(v: int, e: int, f: int) -> GenusValue:
    """
    Euler's formula for a 2-cell embedding on a closed orientable surface.

    Raises:
        InconsistencyError: If 2 - v + e - f is odd or negative
    """
    numerator = 2 - v + e - f
    if numerator % 2:
        raise InconsistencyError(f"Euler numerator 2-v+e-f = {numerator} is odd")
    if numerator < 0:
        raise InconsistencyError(f"Euler numerator 2-v+e-f = {numerator} is negative")
    return numerator // 2


def faces_from_genus(v: int, e: int, g: int) -> int:
    """Number of faces of a 2-cell embedding of genus g: 2 - v + e - 2g."""
    f = 2 - v + e - 2 * g
    if f < 1:
        raise DomainError(f"No 2-cell embedding with v={v}, e={e}, genus {g}")
    return f


def qn_counts(n: int) -> dict[str, int]:
    """
    Cell counts behind the genus computation.

    Returns:
        Dict with v, e, surface_faces (n*2^(n-2)) and skeleton_faces
    """
    if n < 2:
        raise DomainError(f"qn_counts needs n >= 2, got n={n}")
    return {
        "v": 2 ** n,
        "e": n * 2 ** (n - 1),
        "surface_faces": n * 2 ** (n - 2),
        "skeleton_faces": comb(n, 2) * 2 ** (n - 2),
    }
