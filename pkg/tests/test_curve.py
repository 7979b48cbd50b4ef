import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bielliptic.curve import (
    IDENTITY,
    BiellipticCurve,
    DegenerateBranchError,
    DegenerateModelError,
    IndeterminatePointError,
    InvalidPointError,
    MarkedEllipticCurve,
    QuarticModel,
    SingularCurveError,
    cubic_group_add,
    cubic_negate,
    dual_curve,
    j_base,
    j_dual_base,
    j_from_lambda,
    j_of_binary_quartic,
    j_of_cubic,
    lambda_cross_ratio,
    lambda_map,
    new_curve,
    singular_fibers,
)
from bielliptic.family import family_coefficients
from bielliptic.qalg import BinForm, Poly, det, discriminant, poly_gcd, rational_roots

from conftest import CURVE_A, CURVE_B, CURVE_C, random_curves, small_curves


class TestCurve:
    def test_tau_check_examples(self):
        assert BiellipticCurve(*CURVE_A).tau_check == Poly([-1, 5, -6, 1])
        assert BiellipticCurve(*CURVE_B).tau_check == Poly([-9, -9, 1, 1])
        assert BiellipticCurve(*CURVE_C).tau_check == Poly([0, -21, 4, 1])

    def test_singular_rejected(self):
        with pytest.raises(SingularCurveError) as info:
            new_curve(0, 0, 0, 0, 0, 0)
        assert info.value.which == "tau"

    def test_j_base_values(self):
        assert j_base(BiellipticCurve(*CURVE_A)) == Fraction(148176, 25)
        assert j_base(BiellipticCurve(*CURVE_B)) == Fraction(35152, 9)
        assert j_base(BiellipticCurve(*CURVE_C)) == Fraction(21952, 9)

    def test_j_dual_base_values(self):
        # third value is 2^6 79^3 / (3^2 5^2 7^2)
        assert j_dual_base(BiellipticCurve(*CURVE_A)) == 48384
        assert j_dual_base(BiellipticCurve(*CURVE_B)) == Fraction(21952, 9)
        assert j_dual_base(BiellipticCurve(*CURVE_C)) == Fraction(2**6 * 79**3, 9 * 25 * 49)

    @given(small_curves())
    def test_dual_is_an_involution(self, c):
        m = c.model()
        assert dual_curve(dual_curve(m)) == m

    def test_dual_rejects_degenerate(self):
        S = BinForm(2, [1, 0, 1])
        with pytest.raises(DegenerateModelError):
            QuarticModel(S, S * S)

    @given(small_curves())
    def test_c0_is_minus_tau_check(self, c):
        c0, _, _ = family_coefficients(c, Poly.x())
        assert c0 == -c.tau_check


class TestJInvariants:
    @given(st.fractions(min_value=-20, max_value=20, max_denominator=20))
    def test_lambda_form(self, lam):
        assume(lam not in (0, 1))
        q = BinForm(4, [0, -lam, 1 + lam, -1, 0])  # x (x - y)(x - lam y) y
        assert j_of_binary_quartic(q) == j_from_lambda(lam)

    def test_known_values(self):
        assert j_from_lambda(Fraction(5)) == Fraction(148176, 25)
        assert j_from_lambda(Fraction(-3)) == Fraction(35152, 9)
        assert j_from_lambda(-1) == 1728

    @given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5),
           st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
    def test_invariant_under_sl2(self, r1, r2, r3, al, be, ga, de):
        # j is unchanged by an invertible linear substitution
        assume(len({r1, r2, r3}) == 3 and al * de - be * ga != 0)
        q = BinForm(3, Poly.from_roots([r1, r2, r3]).coeffs) * BinForm(1, [1, 0])
        j0 = j_of_binary_quartic(q)
        assert j_of_binary_quartic(q.substitute(al, be, ga, de)) == j0

    @given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
    def test_cubic_matches_quartic(self, t1, t2, t3):
        p = Poly([t3, t2, t1, 1])
        assume(discriminant(p) != 0)
        # y^2 = tau(x) is the double cover branched at the roots of tau and infinity
        q = BinForm(4, [t3, t2, t1, 1, 0])
        assert j_of_binary_quartic(q) == j_of_cubic(t1, t2, t3)

    def test_repeated_root_rejected(self):
        with pytest.raises(DegenerateBranchError):
            j_of_binary_quartic(BinForm(4, [0, 0, 1, -2, 1]))


# synthetic curves through three chosen points; the fourth is -(p1 + p2 + p3)


def _fit(pts):
    M = [[x * x, x, 1] for x, _ in pts]
    rhs = [y * y - x**3 for x, y in pts]
    d = det(M)
    if d == 0:
        return None
    sol = []
    for k in range(3):
        Mk = [row[:] for row in M]
        for i in range(3):
            Mk[i][k] = rhs[i]
        sol.append(det(Mk) / d)
    return Poly([sol[2], sol[1], sol[0], 1])


def synthetic_marked_curves(n, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        pts = [(Fraction(rng.randint(-6, 6)), Fraction(rng.randint(-6, 6))) for _ in range(3)]
        g = _fit(pts)
        if g is None or discriminant(g) == 0:
            continue
        E0 = MarkedEllipticCurve(g, tuple(pts))
        s = cubic_group_add(E0, cubic_group_add(E0, pts[0], pts[1]), pts[2])
        if s is IDENTITY:
            continue
        E = MarkedEllipticCurve(g, tuple(pts) + (cubic_negate(E0, s),))
        q = cubic_group_add(E, pts[0], cubic_group_add(E, pts[1], pts[1]))
        if q is IDENTITY:
            continue
        out.append((E, q))
    return out


class TestGroupLaw:
    @pytest.mark.parametrize("E,q", synthetic_marked_curves(10, seed=3))
    def test_associativity(self, E, q):
        p1, p2, p3, p4 = E.points
        lhs = cubic_group_add(E, cubic_group_add(E, p1, p2), p3)
        rhs = cubic_group_add(E, p1, cubic_group_add(E, p2, p3))
        assert lhs == rhs
        assert cubic_group_add(E, lhs, p4) is IDENTITY

    def test_inverse(self):
        E = MarkedEllipticCurve(Poly([0, -1, 0, 1]), ((Fraction(0), Fraction(0)),))
        p = (Fraction(0), Fraction(0))
        assert cubic_group_add(E, p, p) is IDENTITY

    def test_point_off_curve(self):
        with pytest.raises(InvalidPointError):
            MarkedEllipticCurve(Poly([0, -1, 0, 1]), ((Fraction(1), Fraction(1)),))


class TestLambdaMap:
    def test_two_paths_agree(self):
        agreed = 0
        for E, q in synthetic_marked_curves(30):
            try:
                closed = lambda_map(E, q)
                cross = lambda_cross_ratio(E, q)
            except IndeterminatePointError:
                continue
            assert closed == cross
            agreed += 1
        assert agreed >= 20

    def test_requires_four_points(self):
        E = MarkedEllipticCurve(Poly([0, -1, 0, 1]), ())
        with pytest.raises(ValueError):
            lambda_map(E, (Fraction(0), Fraction(0)))


def _order_at(poly: Poly, factor: Poly) -> int:
    k = 0
    while poly.degree >= factor.degree:
        q, r = divmod(poly, factor)
        if not r.is_zero():
            break
        poly, k = q, k + 1
    return k


def _branch_discriminant(c):
    """4 I^3 - J^2 of c1^2 - c0 c2 as a polynomial in a (27 times the discriminant)."""
    from bielliptic.curve import quartic_invariants

    c0, c1, c2 = family_coefficients(c, Poly.x())
    branch = c1 * c1 - c2 * c0
    i, j = quartic_invariants(branch.coeffs)
    return i * i * i * 4 - j * j


def _tau_check_factors(c):
    roots = rational_roots(c.tau_check)
    rest = c.tau_check
    factors = []
    for r in roots:
        factors.append(Poly([-r, 1]))
        rest = rest // Poly([-r, 1])
    if rest.degree >= 1:
        factors.append(rest.monic())
    return factors


class TestSingularFibers:
    def test_examples(self):
        r2 = singular_fibers(BiellipticCurve(*CURVE_A))
        assert r2.count_sigma == 6 and [e.kind for e in r2.entries] == ["1I2-pair"]
        r3 = singular_fibers(BiellipticCurve(*CURVE_B))
        assert r3.count_sigma == 5
        assert {e.location: e.kind for e in r3.entries} == {
            Fraction(-3): "1I4", Fraction(-1): "1I2-pair", Fraction(3): "1I2-pair"}
        r4 = singular_fibers(BiellipticCurve(*CURVE_C))
        assert r4.count_sigma == 4
        assert {e.location: e.kind for e in r4.entries} == {
            Fraction(-7): "1I2-pair", Fraction(0): "1I4", Fraction(3): "1I4"}

    @pytest.mark.parametrize("c", random_curves(20, seed=11) + random_curves(8, seed=12, shared_root=True))
    def test_agrees_with_branch_discriminant_order(self, c):
        # over an unshared root of tau_check the branch quartic picks up order 2;
        # over a shared root the order jumps
        disc = _branch_discriminant(c)
        kinds = {}
        for f in _tau_check_factors(c):
            order = _order_at(disc, f)
            assert order >= 2
            kinds[f] = "1I4" if order > 2 else "1I2-pair"
        report = singular_fibers(c)
        for e in report.entries:
            f = Poly([-e.location, 1]) if isinstance(e.location, Fraction) else e.location
            assert kinds[f] == e.kind
        assert 3 <= report.count_sigma <= 6

    @given(small_curves())
    def test_count_formula(self, c):
        report = singular_fibers(c)
        shared = poly_gcd(c.tau, c.tau_check).degree
        assert report.count_sigma == 6 - shared
