"""The one-parameter dual family D_a and the j-functions j_F, j_K.

For a point p = (a, b) of E the curve D_a has the quartic model

    c0 z^4 - 2 c1(x, y) z^2 + c2(x, y) = 0,

F_a is the double cover of P^1 branched along c1^2 - c0 c2, and the
canonical fiber K of the associated surface is branched along c2.  Both
j-invariants depend on a only, giving degree-6 maps of the a-line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import BiellipticCurve, SingularCurveError, quartic_invariants
from .qalg import (
    INF,
    BinForm,
    Poly,
    ProjRational,
    QAlgError,
    RatFn,
    rational_roots,
    ratfn_eval,
    squarefree_decomposition,
    squarefree_part,
)

__all__ = [
    "RedirectToDual",
    "FamilyMember",
    "JPair",
    "RamificationEntry",
    "RamificationProfile",
    "family_coefficients",
    "family_member",
    "branch_quartic",
    "j_functions",
    "j_rational_function",
    "j_functions_from_invariants",
    "ramification_profile",
    "wronskian",
    "ramification_locus",
]


class RedirectToDual(QAlgError):
    """a = infinity: the member there is the dual curve itself."""


def family_coefficients(c: BiellipticCurve, a):
    """(c0, c1, c2) for parameter a.

    ``a`` may be a Fraction or ``Poly.x()``; in the latter case the
    coefficients come back as polynomials in a.
    """
    s0, s1, s2 = c.s
    t1, t2, t3 = c.t
    c0 = (-a**3 + (s1**2 - 4 * s0 * s2 - t1) * a**2
          - (4 * s0 * s2 * t1 - 2 * s0 * s1 * t2 + 4 * s0**2 * t3 - 2 * s1 * s2 + t2) * a
          + s0**2 * t2**2 - 4 * s0**2 * t1 * t3 - 2 * s0 * s2 * t2 + 4 * s0 * s1 * t3
          + s2**2 - t3)
    cx2 = 2 * s0 * a**2 + (2 * s0 * t1 - s1) * a + s0 * t2 - s2
    cxy = 2 * (s1 * a**2 + (s0 * t2 + s2) * a + 2 * s0 * t3)
    cy2 = (2 * s2 * a**2 + (2 * s2 * t1 - s1 * t2 + 4 * s0 * t3) * a
           - s0 * t2**2 + 4 * s0 * t1 * t3 + s2 * t2 - 2 * s1 * t3)
    c1 = BinForm(2, [cy2, cxy, cx2])
    c2 = BinForm(4, [
        -(4 * t3 * a - t2**2 + 4 * t1 * t3),
        -4 * (t2 * a + 2 * t3),
        -2 * (2 * t1 * a + t2),
        -4 * a,
        a - a + 1,
    ])
    return c0, c1, c2


@dataclass(frozen=True)
class FamilyMember:
    a: Fraction
    c0: Fraction
    c1: BinForm
    c2: BinForm


def family_member(c: BiellipticCurve, a: ProjRational) -> FamilyMember:
    if a is INF:
        raise RedirectToDual("D_inf is the dual curve; use curve.dual_curve")
    a = Fraction(a)
    c0, c1, c2 = family_coefficients(c, a)
    return FamilyMember(a, Fraction(c0), c1, c2)


def branch_quartic(m: FamilyMember) -> BinForm:
    """c1^2 - c0 c2, the branch form of F_a."""
    return m.c1 * m.c1 - m.c2 * m.c0


@dataclass(frozen=True)
class JPair:
    jF: RatFn
    jK: RatFn


def j_rational_function(t1, t2, t3) -> RatFn:
    """2^8 Q(a)^3 / (disc * tau(a)^2) for tau = x^3 + t1 x^2 + t2 x + t3."""
    t1, t2, t3 = Fraction(t1), Fraction(t2), Fraction(t3)
    q = Poly([t2**2 - 3 * t1 * t3, t1 * t2 - 9 * t3, t1**2 - 3 * t2])
    tau = Poly([t3, t2, t1, 1])
    disc = (t1**2 * t2**2 - 4 * t1**3 * t3 - 4 * t2**3 + 18 * t1 * t2 * t3 - 27 * t3**2)
    return RatFn(q**3 * 256, tau**2 * disc)


def j_functions(c: BiellipticCurve) -> JPair:
    if not c.nonsingular:
        raise SingularCurveError("tau" if c.disc_tau == 0 else "tau_check")
    return JPair(jF=j_rational_function(*c.t_check), jK=j_rational_function(*c.t))


def _j_from_form(form: BinForm) -> RatFn:
    inv_i, inv_j = quartic_invariants(form.coeffs)
    return RatFn(inv_i**3 * 6912, inv_i**3 * 4 - inv_j * inv_j)


def j_functions_from_invariants(c: BiellipticCurve) -> JPair:
    """j_F, j_K recomputed from the symbolic family via quartic invariants.

    Independent of the closed forms used by ``j_functions``.
    """
    c0, c1, c2 = family_coefficients(c, Poly.x())
    branch = c1 * c1 - c2 * c0
    return JPair(jF=_j_from_form(branch), jK=_j_from_form(c2))


# ---------------------------------------------------------------------------
# ramification


@dataclass(frozen=True)
class RamificationEntry:
    """Points over one branch value sharing one ramification index.

    ``points`` lists rational points (and INF); ``factor`` is the monic
    squarefree polynomial whose roots are the remaining irrational points.
    """

    index: int
    points: tuple
    factor: Poly

    @property
    def n_points(self) -> int:
        return len(self.points) + max(self.factor.degree, 0)


@dataclass(frozen=True)
class RamificationProfile:
    degree: int
    branches: dict  # branch value (Fraction, INF or None) -> tuple of entries
    total_branching: int

    @property
    def n_ramification_points(self) -> int:
        return sum(e.n_points for entries in self.branches.values() for e in entries)

    @property
    def branch_values(self) -> list:
        return [v for v in self.branches if v is not None]


def wronskian(r: RatFn) -> Poly:
    """num' den - num den'; vanishes to order e - 1 at finite points of index e."""
    return r.num.derivative() * r.den - r.num * r.den.derivative()


def ramification_locus(r: RatFn) -> tuple[Poly, bool]:
    """(squarefree poly of finite ramification points, whether a = inf ramifies)."""
    w = wronskian(r)
    at_inf = 2 * r.degree - 2 - w.degree > 0
    return squarefree_part(w), at_inf


def _split_rational(p: Poly) -> tuple[tuple, Poly]:
    roots = sorted(rational_roots(p)) if p.degree >= 1 else []
    rest = p
    for root in roots:
        rest = rest // Poly([-root, 1])
    return tuple(roots), rest.monic()


def _fiber_entries(r: RatFn, v: ProjRational) -> list[RamificationEntry]:
    n = r.degree
    if v is INF:
        poly = r.den
    else:
        poly = r.num - r.den * v
    by_index: dict[int, list] = {}
    factors: dict[int, Poly] = {}
    for mult, factor in squarefree_decomposition(poly).items():
        if mult >= 2:
            pts, rest = _split_rational(factor)
            by_index.setdefault(mult, []).extend(pts)
            factors[mult] = rest
    inf_index = n - max(poly.degree, 0)
    if inf_index >= 2:
        by_index.setdefault(inf_index, []).append(INF)
    entries = []
    for index in sorted(set(by_index) | set(factors)):
        entries.append(RamificationEntry(index, tuple(by_index.get(index, ())),
                                         factors.get(index, Poly.const(1))))
    return entries


def ramification_profile(r: RatFn) -> RamificationProfile:
    """Ramification of r: P^1 -> P^1 grouped by branch value.

    Critical values are found from the rational roots of the Wronskian's
    image; any critical points with irrational critical value are kept
    under the key ``None`` as a squarefree factor of the Wronskian.
    """
    n = r.degree
    if n <= 1:
        return RamificationProfile(max(n, 0), {}, 0)
    w = wronskian(r)
    total = 2 * n - 2
    # finite critical points with rational coordinates give rational values;
    # irrational critical points may still have rational values, so test
    # candidate values from the v-discriminant as well.
    candidates: set = {INF}
    crit_sqf, inf_ram = ramification_locus(r)
    for pt in rational_roots(crit_sqf) if crit_sqf.degree >= 1 else ():
        candidates.add(ratfn_eval(r, pt))
    if inf_ram:
        candidates.add(ratfn_eval(r, INF))
    candidates |= _rational_critical_values(r)
    branches: dict = {}
    covered = Poly.const(1)
    seen_branching = 0
    for v in sorted(candidates, key=lambda t: (t is INF, t if t is not INF else 0)):
        entries = _fiber_entries(r, v)
        if not entries:
            continue
        branches[v] = tuple(entries)
        for e in entries:
            seen_branching += e.n_points * (e.index - 1)
            for pt in e.points:
                if pt is not INF:
                    covered = covered * Poly([-pt, 1])
            covered = covered * e.factor
    if seen_branching < total:
        residual = squarefree_part(w)
        residual = residual // squarefree_part(covered) if covered.degree >= 1 else residual
        branches[None] = (RamificationEntry(0, (), residual.monic()),)
    return RamificationProfile(n, branches, total)


def _rational_critical_values(r: RatFn) -> set:
    """Rational v with num - v*den having a repeated root (v-discriminant)."""
    from .qalg import BiPoly, resultant_bivariate

    # F(a, v) = num(a) - v den(a); eliminate a against dF/da.
    rows_f = [[r.num[i], -r.den[i]] for i in range(r.degree + 1)]
    dn, dd = r.num.derivative(), r.den.derivative()
    rows_d = [[dn[i], -dd[i]] for i in range(max(r.degree, 1))]
    f = BiPoly(rows_f).swap()  # x = v, y = a
    g = BiPoly(rows_d).swap()
    disc_v = resultant_bivariate(f, g, eliminate="y")
    if disc_v.is_zero():
        return set()
    return set(rational_roots(disc_v))
