"""Exact rational arithmetic and polynomial algebra.

Everything here works over ``fractions.Fraction``.  Polynomials are dense
coefficient tuples, lowest degree first, with the trailing entry nonzero
(the zero polynomial is the empty tuple).

Resultant sign convention: the Sylvester determinant with the rows of the
first argument on top.  With this convention

    Res(p, q) = lc(p)**deg(q) * lc(q)**deg(p) * prod(r_i - s_j)

over the roots r_i of p and s_j of q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

__all__ = [
    "INF",
    "Infinity",
    "ProjRational",
    "QAlgError",
    "UndefinedInputError",
    "DegenerateInputError",
    "Poly",
    "BinForm",
    "RatFn",
    "BiPoly",
    "as_rational",
    "parse_proj",
    "proj_key",
    "poly_gcd",
    "resultant",
    "sylvester_det",
    "discriminant",
    "disc_cubic",
    "squarefree_part",
    "squarefree_decomposition",
    "rational_roots",
    "ratfn_eval",
    "ratfn_degree",
    "resultant_bivariate",
    "det",
]


class QAlgError(ValueError):
    pass


class UndefinedInputError(QAlgError):
    pass


class DegenerateInputError(QAlgError):
    pass


class Infinity:
    """The point at infinity of the projective line (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ProjRational = Union[Fraction, Infinity]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) == 0:
                raise UndefinedInputError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_proj(value) -> ProjRational:
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "oo", "infinity"):
        return INF
    return as_rational(value)


def proj_key(value: ProjRational):
    """Sort key putting finite values in numeric order and INF last."""
    if value is INF:
        return (1, Fraction(0))
    return (0, value)


def _strip(cs: list) -> tuple:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Univariate polynomial over Q, immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw(())
            return Poly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.lc
        if len(rem) - 1 < dq:
            return Poly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, oc in enumerate(o.coeffs):
                    rem[k + j] -= c * oc
        return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[:dq]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a number or a Poly."""
        acc = Fraction(0) if not isinstance(value, Poly) else Poly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- derived -------------------------------------------------------
    def derivative(self) -> "Poly":
        return Poly._raw(_strip([i * c for i, c in enumerate(self.coeffs)][1:]))

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return Poly._raw(tuple(c / lead for c in self.coeffs))

    def integer_primitive(self) -> tuple[int, ...]:
        """Integer coefficients with content 1 and positive leading term."""
        if not self.coeffs:
            return ()
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return tuple(i // g for i in ints)

    def primitive(self) -> "Poly":
        return Poly(self.integer_primitive())

    def trailing_zeros(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0


class BinForm:
    """Homogeneous binary form of fixed degree.

    ``coeffs[d]`` is the coefficient of x**d * y**(degree - d).  The
    coefficients may be Fractions or any ring elements supporting +, -, *
    (the family module feeds Poly coefficients through the same code).
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence):
        if len(coeffs) != degree + 1:
            raise ValueError(f"binary form of degree {degree} needs {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = tuple(
            Fraction(c) if isinstance(c, (int, str)) else c for c in coeffs
        )

    def __eq__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("BinForm", self.degree, self.coeffs))

    def __repr__(self):
        return f"BinForm({self.degree}, {[str(c) for c in self.coeffs]})"

    def _zero(self):
        c = self.coeffs[0]
        return c - c

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return BinForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinForm(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinForm):
            out = [self._zero()] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinForm(self.degree + other.degree, out)
        return BinForm(self.degree, [c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x, y):
        acc = self._zero()
        for d, c in enumerate(self.coeffs):
            acc = acc + c * x**d * y ** (self.degree - d)
        return acc

    def map_coeffs(self, fn) -> "BinForm":
        return BinForm(self.degree, [fn(c) for c in self.coeffs])

    def dehomogenize(self) -> Poly:
        """The polynomial f(x, 1) (requires rational coefficients)."""
        return Poly(self.coeffs)

    def substitute(self, alpha, beta, gamma, delta) -> "BinForm":
        """Form of f(alpha*x + beta*y, gamma*x + delta*y)."""
        lx = BinForm(1, [beta, alpha])
        ly = BinForm(1, [delta, gamma])
        out = BinForm(self.degree, [0] * (self.degree + 1))
        for d, c in enumerate(self.coeffs):
            term = BinForm(0, [c])
            for _ in range(d):
                term = term * lx
            for _ in range(self.degree - d):
                term = term * ly
            out = out + term
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


# ---------------------------------------------------------------------------
# gcd, resultants, discriminants


def _int_prem(a: list, b: list) -> list:
    """Primitive part of the pseudo-remainder of integer lists (lowest first)."""
    a = a[:]
    lb, db = b[-1], len(b) - 1
    while len(a) - 1 >= db and a:
        la, shift = a[-1], len(a) - 1 - db
        a = [lb * x for x in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and a[-1] == 0:
            a.pop()
    if a:
        g = gcd(*a)
        a = [x // g for x in a]
    return a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0.

    Primitive pseudo-remainder sequence over the integers, which keeps
    coefficient growth linear.
    """
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    a, b = list(p.integer_primitive()), list(q.integer_primitive())
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _int_prem(a, b)
    return Poly(a).monic()


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant over Q by Gaussian elimination with exact pivoting."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        result *= pv
        prow = m[col]
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f /= pv
                row = m[r]
                for c in range(col + 1, n):
                    if prow[c]:
                        row[c] -= f * prow[c]
    return sign * result


def sylvester_det(pc: Sequence, qc: Sequence) -> Fraction:
    """Sylvester determinant of two coefficient lists with formal degrees.

    ``pc`` and ``qc`` are lowest-first; their lengths fix the formal
    degrees, so leading zeros are allowed.
    """
    m = len(pc) - 1
    n = len(qc) - 1
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    hp = list(reversed(pc))
    hq = list(reversed(qc))
    for i in range(n):
        rows.append([0] * i + hp + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + hq + [0] * (size - n - 1 - i))
    return det(rows)


def resultant(p: Poly, q: Poly) -> Fraction:
    """Sylvester resultant (p-rows first)."""
    if p.is_zero() and q.is_zero():
        raise UndefinedInputError("resultant of two zero polynomials")
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    return sylvester_det(p.coeffs, q.coeffs)


def discriminant(p: Poly) -> Fraction:
    """disc(p) = (-1)**(n(n-1)/2) * Res(p, p') / lc(p)."""
    n = p.degree
    if n < 1:
        raise DegenerateInputError("discriminant of a constant")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


def disc_cubic(t1, t2, t3) -> Fraction:
    """Discriminant of x^3 + t1 x^2 + t2 x + t3 by the closed form."""
    t1, t2, t3 = Fraction(t1), Fraction(t2), Fraction(t3)
    return (t1**2 * t2**2 - 4 * t1**3 * t3 - 4 * t2**3
            + 18 * t1 * t2 * t3 - 27 * t3**2)


def squarefree_part(p: Poly) -> Poly:
    if p.degree < 1:
        return p.monic() if p else p
    return (p // poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: Poly) -> dict[int, Poly]:
    """Yun's algorithm: {multiplicity: monic squarefree factor}."""
    if p.degree < 1:
        return {}
    f = p.monic()
    out = {}
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out[i] = g
        b = b // g
        c = d // g
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# rational roots (Hensel lifting of simple roots modulo a prime)


_SMALL_PRIMES = [p for p in range(101, 4000) if all(p % d for d in range(2, int(p**0.5) + 1))]


def _modp_trim(cs: list, p: int) -> list:
    cs = [c % p for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _modp_rem(a: list, b: list, p: int) -> list:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for j, bc in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _modp_gcd_degree(a: list, b: list, p: int) -> int:
    while b:
        a, b = b, _modp_rem(a, b, p)
    return len(a) - 1


def _horner_mod(cs: Sequence[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % m
    return acc


def rational_roots(p: Poly) -> set[Fraction]:
    """All distinct rational roots of a nonzero polynomial.

    The squarefree primitive integer part f is reduced modulo a prime
    where it stays squarefree; each root mod the prime is Hensel-lifted
    until the modulus exceeds 2*|lc*tc|, and lc*root is then read off as a
    symmetric residue.  Every candidate is confirmed by exact evaluation.
    """
    if p.is_zero():
        raise UndefinedInputError("rational roots of the zero polynomial")
    roots: set[Fraction] = set()
    if p.degree < 1:
        return roots
    f = squarefree_part(p)
    if f(0) == 0:
        roots.add(Fraction(0))
        f = f // Poly.x()
    if f.degree < 1:
        return roots
    cs = list(f.integer_primitive())
    n = len(cs) - 1
    lead, tail = cs[-1], cs[0]
    if n == 1:
        roots.add(Fraction(-tail, lead))
        return roots
    deriv = [i * c for i, c in enumerate(cs)][1:]
    bound = 2 * abs(lead) * abs(tail) + 1
    for prime in _SMALL_PRIMES:
        if lead % prime == 0:
            continue
        fp = _modp_trim(cs, prime)
        dp = _modp_trim(deriv, prime)
        if not dp or _modp_gcd_degree(fp, dp, prime) != 0:
            continue
        break
    else:  # pragma: no cover - needs astronomically many bad primes
        raise ArithmeticError("no suitable prime for root lifting")
    base_roots = [r for r in range(prime) if _horner_mod(cs, r, prime) == 0]
    for r in base_roots:
        modulus = prime
        while modulus < bound:
            modulus = modulus * modulus
            fr = _horner_mod(cs, r, modulus)
            dr = _horner_mod(deriv, r, modulus)
            r = (r - fr * pow(dr, -1, modulus)) % modulus
        w = lead * r % modulus
        if w > modulus // 2:
            w -= modulus
        # f(w/lead) * lead**n == sum c_i w**i lead**(n-i)
        total = 0
        for i, c in enumerate(cs):
            total += c * w**i * lead ** (n - i)
        if total == 0:
            roots.add(Fraction(w, lead))
    return roots


# ---------------------------------------------------------------------------
# rational functions


class RatFn:
    """Reduced rational function num/den, viewed as a self-map of P^1.

    Canonical form: gcd(num, den) = 1, integer coefficients with collective
    content 1, and positive leading coefficient of den.  Two canonical
    RatFns represent the same function iff their coefficient lists agree.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly._coerce(num) if not isinstance(num, Poly) else num
        den = Poly._coerce(den) if not isinstance(den, Poly) else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree >= 1:
            num = num // g
            den = den // g
        coeffs = num.coeffs + den.coeffs
        scale = Fraction(lcm(*(c.denominator for c in coeffs)))
        ints = [int(c * scale) for c in coeffs]
        content = gcd(*ints)
        if den.lc < 0:
            content = -content
        factor = scale / content
        object.__setattr__(self, "num", num * factor)
        object.__setattr__(self, "den", den * factor)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    def __eq__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFn", self.num, self.den))

    def __repr__(self):
        return f"RatFn(({self.num}) / ({self.den}))"

    def __call__(self, a: ProjRational) -> ProjRational:
        return ratfn_eval(self, a)

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def canonical(self) -> "RatFn":
        return RatFn(self.num, self.den)

    def compose_mobius(self, alpha, beta, gamma, delta) -> "RatFn":
        """r((alpha*u + beta) / (gamma*u + delta)) as a RatFn in u."""
        n = self.degree
        lin_top = Poly([beta, alpha])
        lin_bot = Poly([delta, gamma])
        top_pows = [Poly.const(1)]
        bot_pows = [Poly.const(1)]
        for _ in range(n):
            top_pows.append(top_pows[-1] * lin_top)
            bot_pows.append(bot_pows[-1] * lin_bot)

        def homog(p: Poly) -> Poly:
            acc = Poly()
            for i, c in enumerate(p.coeffs):
                if c:
                    acc = acc + top_pows[i] * bot_pows[n - i] * c
            return acc

        return RatFn(homog(self.num), homog(self.den))


def ratfn_eval(r: RatFn, a: ProjRational) -> ProjRational:
    """Value of r at a point of P^1."""
    if a is INF:
        dn, dd = r.num.degree, r.den.degree
        if dn > dd:
            return INF
        if dn < dd:
            return Fraction(0)
        return r.num.lc / r.den.lc
    a = Fraction(a)
    d = r.den(a)
    if d == 0:
        return INF
    return r.num(a) / d


def ratfn_degree(r: RatFn) -> int:
    if r.degree < 1:
        raise DegenerateInputError("constant rational function has no degree as a covering")
    return r.degree


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Dense polynomial in two variables x, y over Q.

    ``coeffs[i][j]`` is the coefficient of x**i * y**j.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Sequence]):
        rows = [[Fraction(c) for c in row] for row in coeffs]
        width = max((len(r) for r in rows), default=0)
        rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
        self.coeffs = rows

    @classmethod
    def from_poly_in_y(cls, polys: Sequence[Poly]) -> "BiPoly":
        """Build from coefficients (Polys in x) of y**0, y**1, ..."""
        width = len(polys)
        height = max((p.degree + 1 for p in polys), default=0)
        rows = [[polys[j][i] for j in range(width)] for i in range(height)]
        return cls(rows)

    @property
    def deg_x(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if any(self.coeffs[i]):
                return i
        return -1

    @property
    def deg_y(self) -> int:
        best = -1
        for row in self.coeffs:
            for j in range(len(row) - 1, -1, -1):
                if row[j]:
                    best = max(best, j)
                    break
        return best

    def is_zero(self) -> bool:
        return self.deg_x < 0

    def coeff_in_y(self, j: int) -> Poly:
        return Poly([row[j] if j < len(row) else 0 for row in self.coeffs])

    def coeff_in_x(self, i: int) -> Poly:
        return Poly(self.coeffs[i]) if i < len(self.coeffs) else Poly()

    def at_x(self, x0) -> Poly:
        """Specialise x = x0, giving a polynomial in y."""
        x0 = Fraction(x0)
        width = len(self.coeffs[0]) if self.coeffs else 0
        out = []
        for j in range(width):
            acc = Fraction(0)
            for i in range(len(self.coeffs) - 1, -1, -1):
                acc = acc * x0 + self.coeffs[i][j]
            out.append(acc)
        return Poly(out)

    def at_y(self, y0) -> Poly:
        return Poly(Poly(row)(Fraction(y0)) for row in self.coeffs)

    def swap(self) -> "BiPoly":
        if not self.coeffs:
            return BiPoly([])
        h, w = len(self.coeffs), len(self.coeffs[0])
        return BiPoly([[self.coeffs[i][j] for i in range(h)] for j in range(w)])

    def __call__(self, x0, y0) -> Fraction:
        return self.at_x(x0)(Fraction(y0))

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self):
        return hash(tuple(map(tuple, self._trimmed())))

    def _trimmed(self):
        dx, dy = self.deg_x, self.deg_y
        return [list(row[: dy + 1]) for row in self.coeffs[: dx + 1]]


def _newton_interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    n = len(xs)
    table = list(ys)
    coefs = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        coefs.append(table[0])
    result = Poly.const(coefs[-1])
    for k in range(n - 2, -1, -1):
        result = result * Poly([-xs[k], 1]) + coefs[k]
    return result


def resultant_bivariate(p: BiPoly, q: BiPoly, eliminate: str = "y") -> Poly:
    """Resultant of p, q with respect to one variable, as a Poly in the other.

    Computed by evaluating the Sylvester determinant (formal degrees in the
    eliminated variable, p-rows first) at enough points and interpolating.
    """
    if eliminate not in ("x", "y"):
        raise ValueError("eliminate must be 'x' or 'y'")
    if eliminate == "x":
        p, q = p.swap(), q.swap()
    m, n = p.deg_y, q.deg_y
    if p.is_zero() or q.is_zero():
        raise DegenerateInputError("resultant with a zero polynomial")
    if m < 1 and n < 1:
        raise DegenerateInputError("neither polynomial involves the eliminated variable")
    bound = n * max(p.deg_x, 0) + m * max(q.deg_x, 0)
    xs = [Fraction(k) for k in range(bound + 1)]
    ys = []
    for x0 in xs:
        pc = p.at_x(x0).coeffs
        qc = q.at_x(x0).coeffs
        pc = list(pc) + [Fraction(0)] * (m + 1 - len(pc))
        qc = list(qc) + [Fraction(0)] * (n + 1 - len(qc))
        ys.append(sylvester_det(pc, qc))
    return _newton_interpolate(xs, ys)
