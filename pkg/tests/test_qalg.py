from fractions import Fraction
from itertools import product

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import assume, given
from hypothesis import strategies as st

from bielliptic.qalg import (
    INF,
    BiPoly,
    BinForm,
    DegenerateInputError,
    Poly,
    RatFn,
    as_rational,
    det,
    discriminant,
    disc_cubic,
    parse_proj,
    poly_gcd,
    proj_key,
    rational_roots,
    ratfn_degree,
    ratfn_eval,
    resultant,
    resultant_bivariate,
    squarefree_decomposition,
    squarefree_part,
)

X = sympy.Symbol("x")
Y = sympy.Symbol("y")
small = st.integers(-6, 6)
coeff_lists = st.lists(small, min_size=1, max_size=6)


def to_sympy(p: Poly, var=X):
    return sum(sympy.Rational(c.numerator, c.denominator) * var**i for i, c in enumerate(p.coeffs))


def from_sympy(expr, var=X) -> Poly:
    coeffs = sympy.Poly(expr, var).all_coeffs()[::-1]
    return Poly([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs])


def brute_force_roots(p: Poly) -> set:
    """Rational root theorem by divisor enumeration."""
    ints = p.primitive().integer_primitive()
    while ints and ints[0] == 0:
        ints = ints[1:]
    roots = {Fraction(0)} if p.trailing_zeros() else set()
    if len(ints) <= 1:
        return roots
    lead, const = abs(ints[-1]), abs(ints[0])
    divisors = lambda n: [d for d in range(1, n + 1) if n % d == 0]
    for num, den in product(divisors(const), divisors(lead)):
        for sign in (1, -1):
            r = Fraction(sign * num, den)
            if p(r) == 0:
                roots.add(r)
    return roots


class TestParsing:
    def test_fraction_strings(self):
        assert as_rational("3/4") == Fraction(3, 4)
        assert as_rational("-7") == -7
        assert parse_proj("inf") is INF and parse_proj("oo") is INF

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError):
            as_rational("1/0")

    def test_proj_key_puts_infinity_last(self):
        vals = [INF, Fraction(3), Fraction(-1, 2)]
        assert sorted(vals, key=proj_key) == [Fraction(-1, 2), Fraction(3), INF]


class TestPoly:
    @given(coeff_lists, coeff_lists)
    def test_divmod_reconstructs(self, a, b):
        p, q = Poly(a), Poly(b)
        assume(not q.is_zero())
        quo, rem = divmod(p, q)
        assert quo * q + rem == p
        assert rem.degree < q.degree

    @given(coeff_lists, coeff_lists)
    def test_gcd_matches_sympy(self, a, b):
        p, q = Poly(a), Poly(b)
        g = poly_gcd(p, q)
        expected = sympy.gcd(to_sympy(p), to_sympy(q))
        if expected == 0:
            assert g.is_zero()
        else:
            assert g == from_sympy(expected).monic()

    def test_zero_degree_is_minus_one(self):
        assert Poly().degree == -1

    @given(coeff_lists, st.integers(-5, 5))
    def test_derivative_by_finite_difference(self, a, x0):
        # p(x0 + h) - p(x0) = h p'(x0) + O(h^2): check with exact divided differences
        p = Poly(a)
        h = Fraction(1, 10**12)
        approx = (p(x0 + h) - p(x0)) / h
        assert abs(approx - p.derivative()(Fraction(x0))) < Fraction(1, 10**6)


class TestResultants:
    def test_sign_convention(self):
        assert resultant(Poly([-2, 1]), Poly([-3, 1])) == -1
        assert resultant(Poly([-1, 0, 1]), Poly([-4, 0, 1])) == 9

    @given(st.lists(small, min_size=2, max_size=5), st.lists(small, min_size=2, max_size=5))
    def test_resultant_matches_sympy(self, a, b):
        p, q = Poly(a), Poly(b)
        assume(p.degree >= 1 and q.degree >= 1)
        # sympy.resultant flips sign when deg p < deg q; its Sylvester matrix does not
        assert resultant(p, q) == sylvester(to_sympy(p), to_sympy(q), X).det()

    @given(st.lists(small, min_size=3, max_size=6))
    def test_discriminant_matches_sympy(self, a):
        p = Poly(a)
        assume(p.degree >= 2)
        assert discriminant(p) == sympy.discriminant(to_sympy(p), X)

    @given(small, small, small)
    def test_cubic_discriminant(self, t1, t2, t3):
        assert disc_cubic(t1, t2, t3) == discriminant(Poly([t3, t2, t1, 1]))

    def test_known_cubics(self):
        assert disc_cubic(-6, 5, 0) == 400
        assert disc_cubic(-6, 5, -1) == 49

    def test_det(self):
        assert det([[2, 1], [7, 4]]) == 1
        assert det([[0, 1], [1, 0]]) == -1


class TestRoots:
    @given(st.lists(st.integers(-12, 12), min_size=2, max_size=6))
    def test_rational_roots_brute_force(self, a):
        p = Poly(a)
        assume(p.degree >= 1)
        assert rational_roots(p) == brute_force_roots(p)

    @given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=5),
           st.integers(1, 9))
    def test_planted_roots_found(self, roots, lead):
        p = Poly.from_roots(roots, lead) * Poly([1, 0, 1])
        assert rational_roots(p) == set(roots)

    def test_examples(self):
        assert rational_roots(Poly([0, 3, -4, 1])) == {0, 1, 3}
        assert rational_roots(Poly([1, 0, 1])) == set()
        assert rational_roots(Poly([-1, 1, 6])) == {Fraction(1, 3), Fraction(-1, 2)}

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.integers(1, 3))
    def test_squarefree_decomposition(self, roots, k):
        base = Poly.from_roots(roots)
        p = base * Poly.from_roots([roots[0]] * k)
        dec = squarefree_decomposition(p)
        prod = Poly.const(1)
        for m, f in dec.items():
            prod = prod * f**m
        assert prod == p.monic()
        assert squarefree_part(p) == Poly.from_roots(set(roots))


class TestRatFn:
    def test_canonical_and_eval(self):
        r = RatFn(Poly([-1, 0, 1]), Poly([-2, 2]))  # (a^2-1)/(2a-2) = (a+1)/2
        assert r.num.degree == 1 and r.den.degree == 0
        assert ratfn_eval(r, Fraction(3)) == 2
        assert ratfn_eval(r, INF) is INF

    def test_constant_has_no_degree(self):
        with pytest.raises(DegenerateInputError):
            ratfn_degree(RatFn(Poly([2, 4]), Poly([1, 2])))

    @given(st.lists(small, min_size=2, max_size=4), st.lists(small, min_size=2, max_size=4),
           st.integers(-3, 3), st.integers(-3, 3))
    def test_mobius_composition(self, n, d, shift, u):
        r = RatFn(Poly(n), Poly(d)) if any(d) else RatFn(Poly(n))
        assume(u != 0)
        composed = r.compose_mobius(shift, 1, 1, 0)  # a = shift + 1/u
        a = Fraction(shift) + Fraction(1, u)
        assert ratfn_eval(composed, Fraction(u)) == ratfn_eval(r, a)


class TestBinForm:
    def test_substitute_and_evaluate(self):
        f = BinForm(2, [1, 2, 3])  # y^2 + 2xy + 3x^2
        g = f.substitute(1, 1, 0, 1)  # x -> x + y
        for x, y in [(1, 2), (-3, 5)]:
            assert g(x, y) == f(x + y, y)


class TestBivariate:
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3), min_size=1, max_size=3),
           st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3), min_size=1, max_size=3))
    def test_matches_sympy(self, a, b):
        p, q = BiPoly(a), BiPoly(b)
        assume(p.deg_y >= 1 and q.deg_y >= 1)
        sp = sum(sympy.Integer(c) * X**i * Y**j for i, row in enumerate(a) for j, c in enumerate(row))
        sq = sum(sympy.Integer(c) * X**i * Y**j for i, row in enumerate(b) for j, c in enumerate(row))
        # formal degrees: use sympy on the true degrees, which is what the Sylvester
        # matrix sees after leading zero rows are trimmed
        assume(sympy.degree(sp, Y) == p.deg_y and sympy.degree(sq, Y) == q.deg_y)
        expected = sympy.expand(sylvester(sp, sq, Y).det())
        got = resultant_bivariate(p, q, eliminate="y")
        assert to_sympy(got) - expected == 0

    def test_small_cases(self):
        # Res_b(a - b, a + b) = -2a ; Res_b(ab - 1, b^2 - 2) = 1 - 2a^2
        assert resultant_bivariate(BiPoly([[0, -1], [1]]), BiPoly([[0, 1], [1]])) == Poly([0, -2])
        assert resultant_bivariate(BiPoly([[-1], [0, 1]]), BiPoly([[-2, 0, 1]])) == Poly([1, 0, -2])

    def test_zero_input_rejected(self):
        with pytest.raises(DegenerateInputError):
            resultant_bivariate(BiPoly([[0]]), BiPoly([[0, 1]]))
