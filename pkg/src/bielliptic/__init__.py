"""Exact computations for bielliptic genus-3 curves, their dual families,
the j-functions of the associated elliptic surfaces, and the integral
lattices relating the surface to the Prym abelian surface."""

__version__ = "0.1.0"

__all__ = ["INF", "Poly", "RatFn", "BiellipticCurve", "new_curve"]

from .qalg import INF, Poly, RatFn  # noqa: E402
from .curve import BiellipticCurve, new_curve  # noqa: E402
