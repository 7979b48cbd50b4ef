"""Integral lattices inside H^2 of the blown-up symmetric square S.

All classes live in one rank-14 ambient coordinate system with basis

    dhat, d0, ..., d6, E12, E13, E14, E23, E24, E34

where (dhat, d0..d6) span the sigma-invariant part of H^2(C^(2)) and the
E_ij are the exceptional curves (self-intersection -1, orthogonal to
everything else).  The Y-side and A-side pairings are half the ambient
one, since rho: S -> Y and lambda: S -> A both have degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .qalg import QAlgError, det

__all__ = [
    "LABELS",
    "ConstructionInconsistencyError",
    "DegenerateLatticeError",
    "AmbientSpace",
    "GramLattice",
    "DiscGroupData",
    "ambient",
    "vec",
    "gamma_basis",
    "PRINTED_GAMMA_GRAM",
    "curve_classes",
    "build_overlattices",
    "smith_normal_form",
    "hermite_basis",
    "left_kernel",
    "in_span",
    "same_lattice",
    "lattice_index",
    "signature",
    "disc_group_data",
    "invariant_compare",
    "diagonal_lattice",
    "root_lattice_A",
    "direct_sum",
    "wedge_gram",
]

LABELS = ("dhat", "d0", "d1", "d2", "d3", "d4", "d5", "d6",
          "E12", "E13", "E14", "E23", "E24", "E34")
_IDX = {name: i for i, name in enumerate(LABELS)}
_E = ("E12", "E13", "E14", "E23", "E24", "E34")


class ConstructionInconsistencyError(QAlgError):
    def __init__(self, identity: str):
        self.identity = identity
        super().__init__(f"lattice construction failed: {identity}")


class DegenerateLatticeError(QAlgError):
    pass


Matrix = list  # list of lists of int/Fraction


# ---------------------------------------------------------------------------
# integer linear algebra


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]]):
    """Return (factors, U, V) with U M V = diag(factors) padded by zeros.

    U and V are unimodular; the nonzero factors are positive and each
    divides the next.
    """
    A = [[int(v) for v in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    factors = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return factors + [0] * (min(m, n) - t), U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
        factors.append(A[t][t])
    return factors, U, V


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _as_int_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        r = []
        for v in row:
            f = Fraction(v)
            if f.denominator != 1:
                raise ValueError("non-integral coordinates")
            r.append(int(f))
        out.append(r)
    return out


def hermite_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """A Z-basis (row echelon form) of the row span of an integer matrix."""
    A = [list(r) for r in _as_int_rows(rows)]
    if not A:
        return []
    n = len(A[0])
    basis = []
    col = 0
    while A and col < n:
        nz = [r for r in A if r[col] != 0]
        if not nz:
            col += 1
            continue
        rest = [r for r in A if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    new.append(r2)
                elif any(r2):
                    rest.append(r2)
            nz = new
        piv = nz[0]
        if piv[col] < 0:
            piv = [-v for v in piv]
        basis.append(piv)
        A = [r for r in rest if any(r)]
        col += 1
    return basis


def left_kernel(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Z-basis of {c : c M = 0}."""
    M = _as_int_rows(M)
    if not M:
        return []
    factors, U, _ = smith_normal_form(M)
    rank = sum(1 for f in factors if f)
    return [list(U[i]) for i in range(rank, len(M))]


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    """Is v an integer combination of the rows of ``basis``?"""
    v = [Fraction(x) for x in v]
    if any(x.denominator != 1 for x in v):
        return False
    if not basis:
        return not any(v)
    B = _as_int_rows(basis)
    factors, U, V = smith_normal_form(B)
    # c B = v  <=>  (c U^-1) D = v V
    w = [sum(int(v[k]) * V[k][j] for k in range(len(v))) for j in range(len(V))]
    for j, wj in enumerate(w):
        d = factors[j] if j < len(factors) else 0
        if d == 0:
            if wj:
                return False
        elif wj % d:
            return False
    return True


def same_lattice(A: Sequence[Sequence], B: Sequence[Sequence]) -> bool:
    return all(in_span(a, B) for a in A) and all(in_span(b, A) for b in B)


def _solve_rational(basis: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    """Coordinates c with c * basis = v (basis rows independent)."""
    r = len(basis)
    n = len(v)
    # normal equations are fine for exact arithmetic: (B B^T) c = B v
    bbt = [[sum(Fraction(basis[i][k]) * basis[j][k] for k in range(n)) for j in range(r)] for i in range(r)]
    rhs = [sum(Fraction(basis[i][k]) * v[k] for k in range(n)) for i in range(r)]
    aug = [bbt[i] + [rhs[i]] for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    coords = [aug[i][r] for i in range(r)]
    check = [sum(coords[i] * basis[i][k] for i in range(r)) for k in range(n)]
    if check != [Fraction(x) for x in v]:
        raise ValueError("vector not in the rational span")
    return coords


def lattice_index(sub: Sequence[Sequence], sup: Sequence[Sequence]) -> int:
    """[sup : sub] for lattices of equal rank with sub inside sup."""
    sup_b = hermite_basis(sup)
    sub_b = hermite_basis(sub)
    if len(sup_b) != len(sub_b):
        raise ValueError("lattices of different rank")
    coords = [_solve_rational(sup_b, row) for row in sub_b]
    factors, _, _ = smith_normal_form(_as_int_rows(coords))
    out = 1
    for f in factors:
        out *= f
    return out


def signature(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts by exact symmetric reduction."""
    A = [[Fraction(v) for v in row] for row in gram]
    n = len(A)
    pos = neg = 0
    active = list(range(n))
    while active:
        i = next((k for k in active if A[k][k] != 0), None)
        if i is None:
            pair = next(((k, l) for k in active for l in active if k != l and A[k][l] != 0), None)
            if pair is None:
                break
            k, l = pair
            # replace basis vector k by e_k + e_l: new diagonal 2 A[k][l]
            for j in range(n):
                A[k][j] += A[l][j]
            for j in range(n):
                A[j][k] += A[j][l]
            i = k
        p = A[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(i)
        for r in active:
            f = A[r][i] / p
            if f:
                for c in active:
                    A[r][c] -= f * A[i][c]
        for r in active:
            A[r][i] = A[i][r] = Fraction(0)
    return pos, neg, n - pos - neg


# ---------------------------------------------------------------------------
# lattices with Gram matrices


@dataclass(frozen=True)
class GramLattice:
    name: str
    generators: tuple  # rows of Fractions (ambient coordinates or abstract)
    gram: tuple  # Gram of the generators

    @property
    def rank(self) -> int:
        return len(self.generators)

    def gram_int(self) -> list[list[int]]:
        return _as_int_rows(self.gram)


def _pairing_matrix(rows, form, scale):
    return tuple(tuple(scale * _pair(a, b, form) for b in rows) for a in rows)


def _pair(a, b, form) -> Fraction:
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            row = form[i]
            for j, bj in enumerate(b):
                if bj and row[j]:
                    total += ai * row[j] * bj
    return total


@dataclass(frozen=True)
class AmbientSpace:
    labels: tuple
    gram: tuple  # ambient pairing on H^2(S)

    def pair(self, a, b) -> Fraction:
        return _pair(a, b, self.gram)

    def pair_half(self, a, b) -> Fraction:
        """The Y-side / A-side pairing."""
        return _pair(a, b, self.gram) / 2

    def lattice(self, name: str, rows, scale=Fraction(1, 2)) -> GramLattice:
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        return GramLattice(name, rows, _pairing_matrix(rows, self.gram, scale))


_INVARIANT_BLOCK = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, -2, 0, 0, 0, 0, 0),
    (0, 0, 0, -2, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, -2, 0, 0),
    (0, 0, 0, 0, -2, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, -2),
    (0, 0, 0, 0, 0, 0, -2, 0),
)


def ambient() -> AmbientSpace:
    g = [[0] * 14 for _ in range(14)]
    for i in range(8):
        for j in range(8):
            g[i][j] = _INVARIANT_BLOCK[i][j]
    for k in range(8, 14):
        g[k][k] = -1
    return AmbientSpace(LABELS, tuple(tuple(Fraction(v) for v in row) for row in g))


def vec(**coords) -> tuple:
    """Ambient vector from keyword coordinates, e.g. vec(dhat=1, E12=-1)."""
    out = [Fraction(0)] * 14
    for name, value in coords.items():
        out[_IDX[name]] = Fraction(value)
    return tuple(out)


def _add(*terms) -> tuple:
    """Sum of (coefficient, vector) pairs."""
    out = [Fraction(0)] * len(terms[0][1])
    for k, v in terms:
        for i, x in enumerate(v):
            out[i] += k * x
    return tuple(out)


def _combo(coeffs: Sequence, basis: Sequence) -> tuple:
    return _add(*[(Fraction(c), b) for c, b in zip(coeffs, basis)])


_SUM_E = vec(**{e: 1 for e in _E})


def gamma_basis() -> list[tuple]:
    """Ambient images of the Z-basis gamma_1..gamma_14 of H^2(Y, Z)."""
    deltas = [vec(**{f"d{i}": 1}) for i in range(1, 7)]
    d7 = vec(dhat=1, E12=-1, E13=-1, E14=-1)
    d8 = vec(dhat=1, E12=-1, E23=-1, E24=-1)
    d9 = vec(dhat=1, E13=-1, E23=-1, E34=-1)
    d10 = vec(dhat=1, E14=-1, E24=-1, E34=-1)
    d11 = _add((1, vec(dhat=1, d0=1, d2=-1)), (1, _SUM_E))
    return deltas + [d7, d8, d9, d10, d11, vec(E12=2), vec(E13=2), vec(E14=2)]


PRINTED_GAMMA_GRAM = (
    (-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 2, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 2, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 1),
    (0, 1, 0, 0, 0, 0, 2, 2, 2, 2, -4, -1, -1, -1),
    (0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, -2, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 1, 0, -1, 0, -2, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 1, -1, 0, 0, -2),
)

# gamma-coordinates (gamma_1..gamma_14) of the curve classes in Pi_Y
_CLASS_GAMMA = {
    "K_Y": {1: 1, 2: 1, 7: 2, 12: 1, 13: 1, 14: 1},
    "Delta_sigma": {7: -3, 8: 1, 9: 1, 10: 1, 11: 2, 12: -2, 13: -2, 14: -2},
    "Gamma_1": {7: 1},
    "Gamma_2": {8: 1},
    "Gamma_3": {9: 1},
    "Gamma_4": {10: 1},
    "E12": {12: 1},
    "E13": {13: 1},
    "E14": {14: 1},
    "E34": {7: 1, 8: 1, 9: -1, 10: -1, 12: 1},
    "E24": {7: 1, 8: -1, 9: 1, 10: -1, 13: 1},
    "E23": {7: 1, 8: -1, 9: -1, 10: 1, 14: 1},
}


def _gamma_coords(spec: dict) -> tuple:
    return tuple(Fraction(spec.get(i, 0)) for i in range(1, 15))


def curve_classes() -> dict:
    """Pi_Y classes: name -> (gamma coordinates, ambient coordinates)."""
    basis = gamma_basis()
    out = {}
    for name, spec in _CLASS_GAMMA.items():
        g = _gamma_coords(spec)
        out[name] = (g, _combo(g, basis))
    return out


# ---------------------------------------------------------------------------
# A-side


# symplectic form on the Prym part of H^1(C): e1 = alpha1, e2 = alpha2 - alpha3,
# f1 = beta1, f2 = beta2 - beta3
_H1_A = ("e1", "e2", "f1", "f2")
_SYMPLECTIC = {("e1", "f1"): 1, ("e2", "f2"): 2}


def _omega(a: str, b: str) -> int:
    if (a, b) in _SYMPLECTIC:
        return _SYMPLECTIC[(a, b)]
    if (b, a) in _SYMPLECTIC:
        return -_SYMPLECTIC[(b, a)]
    return 0


# H^2(A) = wedge^2 H^1(A): basis used for the comparison with H'_Y
A_WEDGE_BASIS = (
    (("e1", "f1"), ("e2", "f2")),  # iota(C) - e1f1 = e1f1 + e2f2
    (("e1", "f1"),),
    (("e1", "e2"),),
    (("f1", "f2"),),
    (("e1", "f2"),),
    (("e2", "f1"),),
)


def wedge_gram(elements=A_WEDGE_BASIS) -> list[list[Fraction]]:
    """A-side Gram of sums of wedges, from the pairing on C^(2).

    <l1(a) u l1(b), l1(c) u l1(d)> on C^(2) is
    -det[[w(a,c), w(a,d)], [w(b,c), w(b,d)]] + w(a,b) w(c,d),
    the second term from l1(a) u l1(b) = l2(a ^ b) + w(a, b) dhat; the
    A-side pairing is half of it.
    """

    def pair_wedges(x, y):
        (a, b), (c, d) = x, y
        minor = _omega(a, c) * _omega(b, d) - _omega(a, d) * _omega(b, c)
        return -minor + _omega(a, b) * _omega(c, d)

    gram = []
    for x in elements:
        row = []
        for y in elements:
            row.append(Fraction(sum(pair_wedges(p, q) for p in x for q in y), 2))
        gram.append(row)
    return gram


def _lambda_star_h2a() -> list[tuple]:
    """lambda^* images of the A_WEDGE_BASIS elements."""
    e1f1 = vec(d0=1, dhat=1)
    e2f2 = vec(d1=1, d2=-1, dhat=2)
    return [_add((1, e1f1), (1, e2f2)), e1f1, vec(d3=1), vec(d4=1), vec(d5=1), vec(d6=1)]


def _lambda_star_v() -> dict:
    iota = vec(dhat=4, d0=2, d1=1, d2=-1)
    vt = vec(dhat=1, E12=-1, E13=-1, E14=-1)
    v = {
        1: vec(E34=1, E12=-1),
        2: vec(E24=1, E13=-1),
        3: vec(E23=1, E14=-1),
        4: vec(E34=1, E12=1),
        5: vec(E24=1, E13=1),
        6: vec(E23=1, E14=1),
        7: vec(dhat=1, d0=1, d2=-1),
    }
    # v8 = 2 vt - iota - v1 - v2 - v3 + v4 + v5 + v6 + v7
    v[8] = _add((2, vt), (-1, iota), (-1, v[1]), (-1, v[2]), (-1, v[3]),
                (1, v[4]), (1, v[5]), (1, v[6]), (1, v[7]))
    return {"iota": iota, "vt": vt, "v": v}


# ---------------------------------------------------------------------------
# overlattice construction


@dataclass
class Overlattices:
    H2Y: GramLattice
    H_Y: GramLattice
    Hp_Y: GramLattice
    c_Y: tuple
    H_char: GramLattice
    H2A: GramLattice
    H2A_plus_H: GramLattice
    H_A: GramLattice
    Hp_A: GramLattice
    Pi_map: dict
    checks: dict = field(default_factory=dict)
    gamma_tilde: tuple = ()
    v_tilde: tuple = ()


def _mod2_sublattice(functionals: Sequence[Sequence[int]], rows: Sequence[Sequence[int]]):
    """Rows-combinations c with (c . rows) . f even for every functional f.

    Returns generators in ambient coordinates.
    """
    n = len(rows)
    k = len(functionals)
    values = [[int(_dot(r, f)) for f in functionals] for r in rows]
    M = values + [[2 * int(i == j) for j in range(k)] for i in range(k)]
    kernel = left_kernel(M)
    gens = []
    for c in kernel:
        coeffs = c[:n]
        gens.append([sum(coeffs[i] * int(rows[i][j]) for i in range(n)) for j in range(len(rows[0]))])
    return hermite_basis(gens)


def _dot(a, b) -> Fraction:
    return sum(Fraction(x) * y for x, y in zip(a, b))


def build_overlattices() -> Overlattices:
    """Construct H_Y, H'_Y, c_Y, H, H_A, H'_A and check the identities.

    Raises ConstructionInconsistencyError naming the first identity that
    fails.
    """
    amb = ambient()
    G = amb.gram
    checks: dict[str, bool] = {}

    def require(name: str, ok: bool):
        checks[name] = bool(ok)
        if not ok:
            raise ConstructionInconsistencyError(name)

    gam = gamma_basis()
    classes = curve_classes()
    H2Y = amb.lattice("H2(Y)", gam)
    require("gram_matches_printed",
            [list(r) for r in H2Y.gram] == [[Fraction(v) for v in r] for r in PRINTED_GAMMA_GRAM])

    # parity characterisation: <delta_i, x> even for i = 7..11
    std = [vec(**{lab: 1}) for lab in LABELS]
    functionals = [[int(_pair(d, e, G)) for e in std] for d in gam[6:11]]
    H_char_rows = _mod2_sublattice(functionals, _as_int_rows(std))
    H_char = amb.lattice("H", H_char_rows)
    require("H_char_equals_gamma_span", same_lattice(H_char_rows, gam))

    gt = _add(*[(Fraction(1, 2), gam[i]) for i in range(6, 10)])
    require("gamma_tilde_integral", all(x.denominator == 1 for x in gt))
    require("gamma_tilde_is_2dhat_minus_E", gt == _add((2, vec(dhat=1)), (-1, _SUM_E)))
    HY_rows = hermite_basis(list(gam) + [gt])
    H_Y = amb.lattice("H_Y", HY_rows)
    require("index_H2Y_in_HY_is_2", lattice_index(gam, HY_rows) == 2)

    # H'_Y: orthogonal to the six E classes, Delta_sigma and K_Y - gamma_tilde
    K = classes["K_Y"][1]
    D = classes["Delta_sigma"][1]
    constraints = [classes[e][1] for e in _E] + [D, _add((1, K), (-1, gt))]
    M = [[int(_pair(b, w, G)) for w in constraints] for b in HY_rows]
    Hp_coeffs = left_kernel(M)
    Hp_rows = hermite_basis([[sum(c[i] * HY_rows[i][j] for i in range(len(HY_rows)))
                              for j in range(14)] for c in Hp_coeffs])
    require("Hp_Y_rank_6", len(Hp_rows) == 6)
    printed_hp = [
        _add((1, gam[0]), (1, gt), (1, gam[10])),
        _add((1, gam[1]), (-3, gt), (2, gam[7]), (2, gam[8]), (2, gam[9]),
             (1, gam[10]), (-1, gam[11]), (-1, gam[12]), (-1, gam[13])),
        gam[2], gam[3], gam[4], gam[5],
    ]
    require("Hp_Y_printed_basis", same_lattice(printed_hp, Hp_rows))
    Hp_Y = amb.lattice("H'_Y", printed_hp)
    require("Hp_Y_pairing_integral", all(v.denominator == 1 for r in Hp_Y.gram for v in r))
    c_Y = _add((1, K), (1, D))
    require("c_Y_in_Hp_Y", in_span(c_Y, Hp_rows))
    require("c_Y_square_4", amb.pair_half(c_Y, c_Y) == 4)

    # A side
    lam = _lambda_star_v()
    h2a = _lambda_star_h2a()
    require("Hp_Y_gram_equals_wedge_gram", [list(r) for r in Hp_Y.gram] == wedge_gram())
    require("lambda_H2A_equals_rho_Hp_Y", same_lattice(h2a, printed_hp))
    require("iota_C_matches_c_Y", lam["iota"] == c_Y)
    H2A = amb.lattice("H2(A)", h2a)
    v_rows = [lam["v"][i] for i in range(1, 9)]
    require("H_is_minus_identity",
            [list(r) for r in amb.lattice("H", v_rows).gram] ==
            [[Fraction(-1 if i == j else 0) for j in range(8)] for i in range(8)])
    sum_rows = h2a + v_rows
    H2A_plus_H = amb.lattice("H2(A)+H", sum_rows)
    require("vt_square_minus_1", amb.pair_half(lam["vt"], lam["vt"]) == -1)
    HA_rows = hermite_basis(_as_int_rows(sum_rows + [lam["vt"]]))
    H_A = amb.lattice("H_A", HA_rows)
    require("index_H2A_plus_H_in_HA_is_2", lattice_index(sum_rows, HA_rows) == 2)
    require("lambda_HA_equals_rho_HY", same_lattice(HA_rows, HY_rows))
    # reported, not required: gamma_tilde . gamma_7 = -1/2 on the Y side
    checks["pairing_integral_on_HY"] = all(
        _pair(x, y, G) % 2 == 0 for x in HY_rows for y in HY_rows)
    require("pairing_integral_on_H2Y",
            all(_pair(x, y, G) % 2 == 0 for x in gam for y in gam))

    # H'_A = {x in H_A : <x, vt>_A integral}
    f_vt = [int(_pair(lam["vt"], e, G)) for e in std]
    HpA_rows = _mod2_sublattice([f_vt], HA_rows)
    Hp_A = amb.lattice("H'_A", HpA_rows)
    require("lambda_HpA_equals_rho_H2Y", same_lattice(HpA_rows, gam))

    # lambda^* v_i as rho^* of H_Y elements
    g = {i + 1: gam[i] for i in range(14)}
    rho_of = {
        "vt": g[7],
        1: _add((1, gt), (-1, g[9]), (-1, g[10])),
        2: _add((1, gt), (-1, g[8]), (-1, g[10])),
        3: _add((1, gt), (-1, g[8]), (-1, g[9])),
        4: _add((1, gt), (-1, g[9]), (-1, g[10]), (1, g[12])),
        5: _add((1, gt), (-1, g[8]), (-1, g[10]), (1, g[13])),
        6: _add((1, gt), (-1, g[8]), (-1, g[9]), (1, g[14])),
        7: _add((-3, gt), (2, g[8]), (2, g[9]), (2, g[10]), (1, g[11]),
                (-1, g[12]), (-1, g[13]), (-1, g[14])),
    }
    for key, target in rho_of.items():
        source = lam["vt"] if key == "vt" else lam["v"][key]
        require(f"lambda_v{key}_equals_rho_expression", source == target)

    # Pi_Y <-> Pi_A
    v = lam["v"]
    vt = lam["vt"]
    pi_a = {
        "K_Y": _add((1, lam["iota"]), (-2, v[7])),
        "Delta_sigma": _add((2, v[7]),),
        "Gamma_1": vt,
        "Gamma_2": _add((1, vt), (-1, v[2]), (-1, v[3])),
        "Gamma_3": _add((1, vt), (-1, v[1]), (-1, v[3])),
        "Gamma_4": _add((1, vt), (-1, v[1]), (-1, v[2])),
        "E12": _add((-1, v[1]), (1, v[4])),
        "E13": _add((-1, v[2]), (1, v[5])),
        "E14": _add((-1, v[3]), (1, v[6])),
        "E34": _add((1, v[1]), (1, v[4])),
        "E24": _add((1, v[2]), (1, v[5])),
        "E23": _add((1, v[3]), (1, v[6])),
    }
    for name, a_vec in pi_a.items():
        require(f"Pi_{name}_correspondence", classes[name][1] == a_vec)
        require(f"Pi_{name}_in_Hp_A", in_span(a_vec, HpA_rows))

    return Overlattices(
        H2Y=H2Y, H_Y=H_Y, Hp_Y=Hp_Y, c_Y=c_Y, H_char=H_char, H2A=H2A,
        H2A_plus_H=H2A_plus_H, H_A=H_A, Hp_A=Hp_A, Pi_map=pi_a, checks=checks,
        gamma_tilde=gt, v_tilde=vt,
    )


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class DiscGroupData:
    rank: int
    determinant: int
    signature: tuple
    invariant_factors: tuple
    even: bool
    glue_norms: tuple  # norms of SNF glue generators, mod 2 (even) or mod 1 (odd)
    form_values: tuple  # sorted multiset of discriminant-form values over the group
    even_part_form_values: tuple  # same, for the even sublattice (odd lattices only)


def _gram_of_rows(rows, gram):
    return [[_pair(a, b, gram) for b in rows] for a in rows]


def _discriminant_values(gram_int: list[list[int]], modulus: int):
    factors, U, V = smith_normal_form(gram_int)
    n = len(gram_int)
    gens = []
    orders = []
    for i, d in enumerate(factors):
        if d > 1:
            gens.append([Fraction(V[k][i], d) for k in range(n)])
            orders.append(d)
    glue = tuple(sorted(_pair(x, x, gram_int) % modulus for x in gens))
    values = []
    for ks in product(*[range(d) for d in orders]):
        x = [sum(k * g[j] for k, g in zip(ks, gens)) for j in range(n)] if gens else [0] * n
        values.append(_pair(x, x, gram_int) % modulus)
    return factors, glue, tuple(sorted(values))


def disc_group_data(L: GramLattice) -> DiscGroupData:
    G = L.gram_int()
    d = int(det(G))
    if d == 0:
        raise DegenerateLatticeError(f"{L.name} is degenerate")
    even = all(G[i][i] % 2 == 0 for i in range(len(G)))
    modulus = 2 if even else 1
    factors, glue, values = _discriminant_values(G, modulus)
    even_part = ()
    if not even:
        diag = [[G[i][i] % 2 for i in range(len(G))]]
        sub = _mod2_sublattice(diag, _identity(len(G)))
        G0 = _as_int_rows(_gram_of_rows(sub, G))
        _, _, even_part = _discriminant_values(G0, 2)
    return DiscGroupData(
        rank=L.rank,
        determinant=d,
        signature=signature(G)[:2],
        invariant_factors=tuple(f for f in factors if f != 1),
        even=even,
        glue_norms=glue,
        form_values=values,
        even_part_form_values=even_part,
    )


def invariant_compare(L1: GramLattice, L2: GramLattice) -> dict:
    """Compare isometry invariants; 'distinguished' if any differs."""
    d1, d2 = disc_group_data(L1), disc_group_data(L2)
    fields = ("rank", "signature", "determinant", "invariant_factors", "even",
              "form_values", "even_part_form_values")
    differing = [f for f in fields if getattr(d1, f) != getattr(d2, f)]
    return {
        "first": d1,
        "second": d2,
        "differing": differing,
        "verdict": "distinguished" if differing else "inconclusive",
    }


# small lattices for comparisons


def diagonal_lattice(name: str, entries: Sequence[int]) -> GramLattice:
    n = len(entries)
    rows = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    gram = tuple(tuple(Fraction(entries[i] if i == j else 0) for j in range(n)) for i in range(n))
    return GramLattice(name, rows, gram)


def root_lattice_A(n: int, sign: int = 1) -> GramLattice:
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = Fraction(2 * sign)
        if i + 1 < n:
            gram[i][i + 1] = gram[i + 1][i] = Fraction(-sign)
    rows = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    return GramLattice(("-" if sign < 0 else "") + f"A{n}", rows, tuple(map(tuple, gram)))


def direct_sum(name: str, *parts: GramLattice) -> GramLattice:
    n = sum(p.rank for p in parts)
    gram = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                gram[off + i][off + j] = Fraction(p.gram[i][j])
        off += p.rank
    rows = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    return GramLattice(name, rows, tuple(map(tuple, gram)))
