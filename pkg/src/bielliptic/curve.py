"""Normalized bielliptic genus-3 curves (z^2 + S)^2 = T and their duals.

The normal form is

    S(x, y) = s0 x^2 + s1 xy + s2 y^2
    T(x, y) = x^3 y + t1 x^2 y^2 + t2 x y^3 + t3 y^4

with base curve E: y^2 = tau(x) = x^3 + t1 x^2 + t2 x + t3.  The dual
curve (z^2 + S)^2 = S^2 - T has base E^v: y^2 = tau_check(x).  Only
non-hyperelliptic curves admit this normal form; no attempt is made to
detect or handle the hyperelliptic case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .qalg import (
    INF,
    BinForm,
    DegenerateInputError,
    Poly,
    ProjRational,
    QAlgError,
    as_rational,
    disc_cubic,
    poly_gcd,
    rational_roots,
)

__all__ = [
    "SingularCurveError",
    "DegenerateModelError",
    "DegenerateBranchError",
    "InvalidPointError",
    "IndeterminatePointError",
    "BiellipticCurve",
    "QuarticModel",
    "MarkedEllipticCurve",
    "FiberEntry",
    "FiberReport",
    "new_curve",
    "tau_check",
    "check_coefficients",
    "dual_curve",
    "quartic_invariants",
    "j_of_binary_quartic",
    "j_from_lambda",
    "j_of_cubic",
    "j_base",
    "j_dual_base",
    "cubic_group_add",
    "cubic_negate",
    "lambda_map",
    "lambda_cross_ratio",
    "singular_fibers",
    "IDENTITY",
]


class SingularCurveError(QAlgError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"singular curve: disc({which}) = 0")


class DegenerateModelError(QAlgError):
    pass


class DegenerateBranchError(QAlgError):
    pass


class InvalidPointError(QAlgError):
    pass


class IndeterminatePointError(QAlgError):
    pass


def check_coefficients(s0, s1, s2, t1, t2, t3) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (t1, t2, t3) of tau_check, as printed for j_F."""
    ct1 = -s1**2 + 4 * s0 * s2 + t1
    ct2 = 4 * s0 * s2 * t1 - 2 * s0 * s1 * t2 + 4 * s0**2 * t3 - 2 * s1 * s2 + t2
    ct3 = (-s0**2 * t2**2 + 4 * s0**2 * t1 * t3 + 2 * s0 * s2 * t2
           - 4 * s0 * s1 * t3 - s2**2 + t3)
    return ct1, ct2, ct3


@dataclass(frozen=True)
class BiellipticCurve:
    s0: Fraction
    s1: Fraction
    s2: Fraction
    t1: Fraction
    t2: Fraction
    t3: Fraction
    tau: Poly = field(init=False, repr=False, compare=False)
    tau_check: Poly = field(init=False, repr=False, compare=False)
    disc_tau: Fraction = field(init=False, repr=False, compare=False)
    disc_tau_check: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("s0", "s1", "s2", "t1", "t2", "t3"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        ct = check_coefficients(self.s0, self.s1, self.s2, self.t1, self.t2, self.t3)
        object.__setattr__(self, "tau", Poly([self.t3, self.t2, self.t1, 1]))
        object.__setattr__(self, "tau_check", Poly([ct[2], ct[1], ct[0], 1]))
        object.__setattr__(self, "disc_tau", disc_cubic(self.t1, self.t2, self.t3))
        object.__setattr__(self, "disc_tau_check", disc_cubic(*ct))

    @property
    def s(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.s0, self.s1, self.s2)

    @property
    def t(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.t1, self.t2, self.t3)

    @property
    def t_check(self) -> tuple[Fraction, Fraction, Fraction]:
        c = self.tau_check.coeffs
        return (c[2], c[1], c[0])

    @property
    def nonsingular(self) -> bool:
        return self.disc_tau != 0 and self.disc_tau_check != 0

    @property
    def S(self) -> BinForm:
        # index d holds the coefficient of x^d y^(2-d)
        return BinForm(2, [self.s2, self.s1, self.s0])

    @property
    def T(self) -> BinForm:
        return BinForm(4, [self.t3, self.t2, self.t1, 1, 0])

    def model(self) -> "QuarticModel":
        return QuarticModel(self.S, self.T)


def new_curve(s0, s1, s2, t1, t2, t3) -> BiellipticCurve:
    """Build a curve, rejecting singular coefficient choices."""
    c = BiellipticCurve(s0, s1, s2, t1, t2, t3)
    if c.disc_tau == 0:
        raise SingularCurveError("tau")
    if c.disc_tau_check == 0:
        raise SingularCurveError("tau_check")
    return c


def tau_check(c: BiellipticCurve) -> Poly:
    return c.tau_check


@dataclass(frozen=True)
class QuarticModel:
    """General presentation (z^2 + S)^2 = T4."""

    S: BinForm
    T4: BinForm

    def __post_init__(self):
        if self.S.degree != 2 or self.T4.degree != 4:
            raise ValueError("QuarticModel needs deg S = 2 and deg T4 = 4")
        if self.T4 == self.S * self.S:
            raise DegenerateModelError("T4 = S^2")


def dual_curve(q: QuarticModel) -> QuarticModel:
    """(S, T) -> (S, S^2 - T); an involution."""
    return QuarticModel(q.S, q.S * q.S - q.T4)


# ---------------------------------------------------------------------------
# j-invariants


def quartic_invariants(coeffs: Sequence):
    """Classical invariants (I, J) of a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4.

    ``coeffs`` is lowest-x-first (e, d, c, b, a), matching BinForm.  The
    arithmetic is generic, so polynomial coefficients work as well.
    """
    e, d, c, b, a = coeffs
    inv_i = 12 * a * e - 3 * b * d + c * c
    inv_j = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c
    return inv_i, inv_j


def j_of_binary_quartic(q: BinForm) -> ProjRational:
    """j-invariant of the double cover of P^1 branched at the roots of q.

    j = 6912 I^3 / (4 I^3 - J^2); for x(x - y)(x - lam y) y this is
    2^8 (lam^2 - lam + 1)^3 / (lam^2 (lam - 1)^2).  A cubic form is read as
    a quartic with a root at infinity.
    """
    if q.degree == 3:
        q = q * BinForm(1, [1, 0])
    if q.degree != 4:
        raise DegenerateBranchError("need a binary form of degree 3 or 4")
    if q.is_zero():
        raise DegenerateBranchError("zero form")
    inv_i, inv_j = quartic_invariants([Fraction(c) for c in q.coeffs])
    delta = 4 * inv_i**3 - inv_j**2
    if delta == 0:
        raise DegenerateBranchError("branch divisor has a repeated point")
    return 6912 * inv_i**3 / delta


def j_from_lambda(lam: ProjRational) -> ProjRational:
    if lam is INF or lam == 0 or lam == 1:
        return INF
    return 256 * (lam**2 - lam + 1) ** 3 / (lam**2 * (lam - 1) ** 2)


def j_of_cubic(t1, t2, t3) -> ProjRational:
    """j of y^2 = x^3 + t1 x^2 + t2 x + t3."""
    d = disc_cubic(t1, t2, t3)
    if d == 0:
        return INF
    return 256 * (Fraction(t1) ** 2 - 3 * Fraction(t2)) ** 3 / d


def j_base(c: BiellipticCurve) -> ProjRational:
    return j_of_cubic(*c.t)


def j_dual_base(c: BiellipticCurve) -> ProjRational:
    return j_of_cubic(*c.t_check)


# ---------------------------------------------------------------------------
# elliptic curves with marked points


IDENTITY = INF


@dataclass(frozen=True)
class MarkedEllipticCurve:
    """y^2 = g(x) with g a monic cubic, plus rational marked points."""

    g: Poly
    points: tuple = ()

    def __post_init__(self):
        if self.g.degree != 3 or self.g.lc != 1:
            raise ValueError("g must be a monic cubic")
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if not self.on_curve(p):
                raise InvalidPointError(f"marked point {p} is not on the curve")

    def on_curve(self, p) -> bool:
        if p is IDENTITY:
            return True
        x, y = p
        return Fraction(y) ** 2 == self.g(Fraction(x))


def cubic_negate(E: MarkedEllipticCurve, P):
    if P is IDENTITY:
        return P
    return (P[0], -P[1])


def cubic_group_add(E: MarkedEllipticCurve, P, Q):
    """Chord-tangent addition with the point at infinity as identity."""
    for pt in (P, Q):
        if not E.on_curve(pt):
            raise InvalidPointError(f"{pt} is not on the curve")
    if P is IDENTITY:
        return Q
    if Q is IDENTITY:
        return P
    x1, y1 = Fraction(P[0]), Fraction(P[1])
    x2, y2 = Fraction(Q[0]), Fraction(Q[1])
    a2 = E.g[2]
    if x1 == x2:
        if y1 != y2 or y1 == 0:
            return IDENTITY
        slope = E.g.derivative()(x1) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - a2 - x1 - x2
    y3 = -(y1 + slope * (x3 - x1))
    return (x3, y3)


def _pair_x(E, i, j):
    s = cubic_group_add(E, E.points[i], E.points[j])
    if s is IDENTITY:
        raise IndeterminatePointError(f"p{i + 1} + p{j + 1} is the identity")
    return s[0]


def lambda_map(E: MarkedEllipticCurve, p) -> Fraction:
    """lambda(xi) for xi = [O(p + p0)], by the closed form in a_{ij}.

    The four marked points must sum to the identity.  a_{ij} is the
    x-coordinate of p_{ij} = -(p_i + p_j), which equals that of p_i + p_j.
    """
    if len(E.points) != 4:
        raise ValueError("need exactly four marked points")
    if p is IDENTITY or not E.on_curve(p):
        raise InvalidPointError("p must be an affine point of the curve")
    a = Fraction(p[0])
    a14 = _pair_x(E, 0, 3)
    a24 = _pair_x(E, 1, 3)
    a34 = _pair_x(E, 2, 3)
    if a34 == a24 or a == a14:
        raise IndeterminatePointError("closed form has a vanishing denominator")
    return (a34 - a14) / (a34 - a24) * (a - a24) / (a - a14)


def _f_p(p, q) -> ProjRational:
    a, b = p
    x, y = q
    if x == a:
        return INF if y + b != 0 else None
    return (y + b) / (x - a)


def lambda_cross_ratio(E: MarkedEllipticCurve, p) -> Fraction:
    """lambda(xi) as the cross-ratio of f_p(p_1), ..., f_p(p_4).

    f_p(x, y) = (y + b)/(x - a) realises |O(p + p0)|; the cross-ratio is
    normalised so p_1, p_2, p_3 go to infinity, 0, 1.
    """
    if len(E.points) != 4:
        raise ValueError("need exactly four marked points")
    if p is IDENTITY or not E.on_curve(p):
        raise InvalidPointError("p must be an affine point of the curve")
    p = (Fraction(p[0]), Fraction(p[1]))
    vals = [_f_p(p, q) for q in E.points]
    if any(v is None or v is INF for v in vals):
        raise IndeterminatePointError("f_p is undefined or infinite at a marked point")
    f1, f2, f3, f4 = vals
    den = (f4 - f1) * (f3 - f2)
    if den == 0:
        raise IndeterminatePointError("cross-ratio denominator vanishes")
    return (f4 - f2) * (f3 - f1) / den


# ---------------------------------------------------------------------------
# singular fibers


@dataclass(frozen=True)
class FiberEntry:
    location: object  # Fraction or an irreducible monic Poly
    kind: str  # "1I2-pair" or "1I4"

    @property
    def n_points(self) -> int:
        return 1 if isinstance(self.location, Fraction) else self.location.degree


@dataclass(frozen=True)
class FiberReport:
    entries: tuple
    count_sigma: int


def singular_fibers(c: BiellipticCurve) -> FiberReport:
    """Singular fibers of the elliptic surface, located on the a-line.

    They sit over the roots of tau_check.  Over a root that is not a root
    of tau the double cover B -> P^1 is unramified, giving two fibers of
    type 1I2; over a shared root the two fibers coalesce into one 1I4.
    """
    if not c.nonsingular:
        raise SingularCurveError("tau" if c.disc_tau == 0 else "tau_check")
    tc = c.tau_check
    roots = sorted(rational_roots(tc))
    rest = tc
    for r in roots:
        rest = rest // Poly([-r, 1])
    entries = []
    count = 0
    for r in roots:
        kind = "1I4" if c.tau(r) == 0 else "1I2-pair"
        entries.append(FiberEntry(r, kind))
        count += 1 if kind == "1I4" else 2
    if rest.degree >= 1:
        # rest is irreducible over Q (degree <= 3, no rational roots)
        kind = "1I4" if poly_gcd(rest, c.tau).degree >= 1 else "1I2-pair"
        entries.append(FiberEntry(rest.monic(), kind))
        count += rest.degree * (1 if kind == "1I4" else 2)
    if not 3 <= count <= 6:  # pragma: no cover - excluded by disc(tau_check) != 0
        raise DegenerateInputError(f"fiber count {count} out of range")
    return FiberReport(tuple(entries), count)
