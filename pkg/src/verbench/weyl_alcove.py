"""Affine Weyl group combinatorics for the p-dilated dot action.

Conventions.  Weights are integer vectors in fundamental-weight
coordinates, so coordinate i of lambda is <lambda, alpha_i^vee> and rho is
the all-ones vector.  The Cartan matrix is stored as
cartan[i][j] = <alpha_j, alpha_i^vee>; its column j is the simple root
alpha_j written in fundamental-weight coordinates.  Positive coroots are
kept in simple-coroot coordinates, which makes <lambda, beta^vee> a plain
dot product.

The extended group W_f |x X acts through the p-dilated dot action

    (w t_nu) . lambda = w(lambda + rho + p nu) - rho ,

the affine Weyl group being the subgroup whose translations lie in the
root lattice.  Its reflections are indexed by a positive root beta and an
integer level n, and reflect across the wall <lambda + rho, beta^vee> = np.
The fundamental alcove A_0 is where all those pairings lie strictly
between 0 and p; its closure is a fundamental domain.  Lengths count
separating walls in the level-1 normalization (walls at all integers),
which makes them independent of p, and the sign character is the
determinant of the finite part.

Elements of W_f are stored as integer matrices acting on fundamental-weight
coordinates.  Supported types are A-G with the Weyl group order capped at
51840 (up to E6); everything is exact integer or Fraction arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple

from .ver_fusion import require_odd_prime

__all__ = [
    "Weight",
    "Wall",
    "ExtAffineElement",
    "RootDatum",
    "root_datum",
    "is_dominant",
    "dot_act",
    "alcove_position",
    "fundamental_representative",
    "is_p_regular",
    "length",
    "sign_epsilon",
    "ext_block_witness",
    "ext_block_witnesses",
]

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

WEYL_ORDER_CAP = 51840
_DESCENT_CAP = 100_000


def _mat_vec(m: Matrix, v) -> tuple:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _det_int(m: Matrix) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    assert det.denominator == 1
    return int(det)


def _mat_inv(m: Matrix) -> Matrix:
    n = len(m)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c]
        a[c] = [x / inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    out = []
    for i in range(n):
        row = a[i][n:]
        assert all(x.denominator == 1 for x in row), "inverse is not integral"
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    c = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def chain(edges):
        for i, j in edges:
            c[i][j] = c[j][i] = -1

    if family == "A":
        chain((i, i + 1) for i in range(n - 1))
    elif family in ("B", "C"):
        if n < 2:
            raise ValueError(f"type {family} needs rank >= 2")
        chain((i, i + 1) for i in range(n - 2))
        # short root last for B, long root last for C
        if family == "B":
            c[n - 1][n - 2], c[n - 2][n - 1] = -2, -1
        else:
            c[n - 1][n - 2], c[n - 2][n - 1] = -1, -2
    elif family == "D":
        if n < 3:
            raise ValueError("type D needs rank >= 3")
        chain((i, i + 1) for i in range(n - 2))
        c[n - 1][n - 3] = c[n - 3][n - 1] = -1
    elif family == "E":
        if n != 6:
            raise ValueError("only E6 stays under the Weyl-order cap")
        chain([(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)])
    elif family == "F":
        if n != 4:
            raise ValueError("type F has rank 4")
        chain([(0, 1), (2, 3)])
        c[2][1], c[1][2] = -2, -1
    elif family == "G":
        if n != 2:
            raise ValueError("type G has rank 2")
        c[0][1], c[1][0] = -3, -1
    else:
        raise ValueError(f"unknown family {family!r}")
    return c


def _weyl_order(family: str, n: int) -> int:
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C") and n >= 2:
        return 2**n * math.factorial(n)
    if family == "D" and n >= 3:
        return 2 ** (n - 1) * math.factorial(n)
    if family == "E" and n in (6, 7, 8):
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if family == "F" and n == 4:
        return 1152
    if family == "G" and n == 2:
        return 12
    raise ValueError(f"no supported root system of type {family}{n}")


class Wall(NamedTuple):
    """Affine reflection across <lambda + rho, beta^vee> = level * p."""

    root: int  # index into RootDatum.pos_roots
    level: int


@dataclass(frozen=True)
class ExtAffineElement:
    """Element w t_nu of W_f |x X.

    The translation acts first: on the rho-shifted weight z = lambda + rho
    the element sends z to w(z + p nu), so composition reads right to left,
    (w1, nu1)(w2, nu2) = (w1 w2, nu2 + w2^{-1} nu1).
    """

    w: Matrix
    nu: Weight

    def __post_init__(self) -> None:
        if len(self.nu) != len(self.w):
            raise ValueError("finite part and translation have different ranks")

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":
        if not isinstance(other, ExtAffineElement):
            return NotImplemented
        w2_inv = _mat_inv(other.w)
        nu = tuple(a + b for a, b in zip(other.nu, _mat_vec(w2_inv, self.nu)))
        return ExtAffineElement(_mat_mul(self.w, other.w), nu)

    def inverse(self) -> "ExtAffineElement":
        return ExtAffineElement(
            _mat_inv(self.w), tuple(-x for x in _mat_vec(self.w, self.nu))
        )

    @property
    def is_identity(self) -> bool:
        n = len(self.nu)
        return self.w == _identity_matrix(n) and self.nu == (0,) * n


class RootDatum:
    """Root data of an almost simple, simply connected group, by type."""

    def __init__(self, cartan_type: str):
        m = re.fullmatch(r"([A-G])(\d+)", cartan_type.strip().upper())
        if not m:
            raise ValueError(f"cannot parse Cartan type {cartan_type!r}")
        family, rank = m.group(1), int(m.group(2))
        if rank < 1:
            raise ValueError("rank must be >= 1")
        if family in ("B", "C") and rank == 1:
            family = "A"
        order = _weyl_order(family, rank)
        if order > WEYL_ORDER_CAP:
            raise ValueError(
                f"{cartan_type}: Weyl group order {order} exceeds the supported "
                f"cap {WEYL_ORDER_CAP}"
            )
        self.cartan_type = f"{family}{rank}"
        self.rank = rank
        self.cartan: Matrix = tuple(tuple(r) for r in _cartan_matrix(family, rank))
        self.rho: Weight = (1,) * rank
        self.weyl_order = order
        self._enumerate_roots()

    # -- root system -----------------------------------------------------

    def _enumerate_roots(self) -> None:
        n = self.rank
        cartan = self.cartan
        simple = []
        for j in range(n):
            wt = tuple(cartan[i][j] for i in range(n))
            e = tuple(int(k == j) for k in range(n))
            simple.append((wt, e, e))
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for wt, rc, cc in frontier:
                for i in range(n):
                    pair_r = sum(cartan[i][j] * rc[j] for j in range(n))
                    new_rc = tuple(
                        rc[k] - pair_r * int(k == i) for k in range(n)
                    )
                    new_wt = tuple(wt[k] - wt[i] * cartan[k][i] for k in range(n))
                    pair_c = sum(cc[j] * cartan[j][i] for j in range(n))
                    new_cc = tuple(cc[k] - pair_c * int(k == i) for k in range(n))
                    trip = (new_wt, new_rc, new_cc)
                    if trip not in seen:
                        seen.add(trip)
                        nxt.append(trip)
            frontier = nxt
        positives = sorted(
            (t for t in seen if all(x >= 0 for x in t[1])),
            key=lambda t: (sum(t[1]), t[1]),
        )
        self.pos_roots: tuple[Weight, ...] = tuple(t[0] for t in positives)
        self.pos_root_coords: tuple[Weight, ...] = tuple(t[1] for t in positives)
        self.pos_coroots: tuple[Weight, ...] = tuple(t[2] for t in positives)
        self.num_pos_roots = len(positives)
        heights = [sum(cc) for cc in self.pos_coroots]
        top = max(heights)
        assert heights.count(top) == 1, "highest coroot must be unique"
        # highest short root: its coroot is the highest coroot
        self.alpha0 = heights.index(top)
        self.coxeter_number = top + 1
        self.two_rho_vee: Weight = tuple(
            sum(cc[j] for cc in self.pos_coroots) for j in range(self.rank)
        )

    def pair_coroot(self, v, root_index: int) -> int:
        """<v, beta^vee> for the positive root with the given index."""
        cc = self.pos_coroots[root_index]
        return sum(a * b for a, b in zip(cc, v))

    # -- finite Weyl group -----------------------------------------------

    def simple_reflection_matrix(self, i: int) -> Matrix:
        n = self.rank
        return tuple(
            tuple(int(k == j) - self.cartan[k][i] * int(j == i) for j in range(n))
            for k in range(n)
        )

    def reflection_matrix(self, root_index: int) -> Matrix:
        beta = self.pos_roots[root_index]
        cc = self.pos_coroots[root_index]
        # <., beta^vee> in fundamental-weight coordinates is cc itself
        n = self.rank
        return tuple(
            tuple(int(k == j) - beta[k] * cc[j] for j in range(n)) for k in range(n)
        )

    @cached_property
    def weyl(self) -> tuple[Matrix, ...]:
        """All of W_f, identity first, in breadth-first discovery order."""
        gens = [self.simple_reflection_matrix(i) for i in range(self.rank)]
        ident = _identity_matrix(self.rank)
        seen = {ident}
        order = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    x = _mat_mul(g, w)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            nxt.sort()
            order.extend(nxt)
            frontier = nxt
        assert len(order) == self.weyl_order
        return tuple(order)

    # -- affine elements ---------------------------------------------------

    def identity_element(self) -> ExtAffineElement:
        return ExtAffineElement(_identity_matrix(self.rank), (0,) * self.rank)

    def translation(self, nu: Weight) -> ExtAffineElement:
        return ExtAffineElement(_identity_matrix(self.rank), tuple(nu))

    def wall_reflection(self, wall: Wall) -> ExtAffineElement:
        """The affine reflection across the given wall, as w t_nu."""
        beta = self.pos_roots[wall.root]
        return ExtAffineElement(
            self.reflection_matrix(wall.root),
            tuple(-wall.level * b for b in beta),
        )


@lru_cache(maxsize=None)
def root_datum(cartan_type: str) -> RootDatum:
    return RootDatum(cartan_type)


# -- operations ------------------------------------------------------------


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam)


def _check_weight(rd: RootDatum, lam) -> Weight:
    lam = tuple(int(c) for c in lam)
    if len(lam) != rd.rank:
        raise ValueError(f"weight has {len(lam)} coordinates, expected {rd.rank}")
    return lam


def dot_act(rd: RootDatum, y: ExtAffineElement, lam: Weight, p: int) -> Weight:
    """(w t_nu) . lambda = w(lambda + rho + p nu) - rho."""
    require_odd_prime(p)
    lam = _check_weight(rd, lam)
    z = tuple(c + 1 + p * v for c, v in zip(lam, y.nu))
    return tuple(a - 1 for a in _mat_vec(y.w, z))


def _wall_values(rd: RootDatum, lam: Weight, p: int) -> list[int]:
    z = tuple(c + 1 for c in lam)
    return [rd.pair_coroot(z, i) for i in range(rd.num_pos_roots)]


def alcove_position(rd: RootDatum, lam: Weight, p: int) -> str:
    """Position relative to the fundamental alcove: interior, boundary, exterior."""
    require_odd_prime(p)
    lam = _check_weight(rd, lam)
    vals = _wall_values(rd, lam, p)
    if any(v < 0 or v > p for v in vals):
        return "exterior"
    if any(v == 0 or v == p for v in vals):
        return "boundary"
    return "interior"


def fundamental_representative(
    rd: RootDatum, lam: Weight, p: int
) -> tuple[Weight, list[Wall]]:
    """Reflect lam into the closed fundamental alcove.

    Returns (lam0, walls) where the walls are affine reflections in the
    order they were applied, so lam = r_1 . r_2 . ... . r_k . lam0 with
    r_i = wall_reflection(walls[i-1]).  At each step the first positive
    root whose pairing leaves [0, p] is reflected across its wall nearest
    the target strip; every such wall strictly separates the weight from
    the alcove, which forces termination.
    """
    require_odd_prime(p)
    cur = _check_weight(rd, lam)
    walls: list[Wall] = []
    for _ in range(_DESCENT_CAP):
        vals = _wall_values(rd, cur, p)
        idx = next((i for i, v in enumerate(vals) if v < 0 or v > p), None)
        if idx is None:
            return cur, walls
        v = vals[idx]
        n = (v - 1) // p if v > p else -((-v - 1) // p)
        walls.append(Wall(idx, n))
        beta = rd.pos_roots[idx]
        shift = v - n * p
        cur = tuple(c - shift * b for c, b in zip(cur, beta))
    raise AssertionError("alcove descent failed to terminate")


def is_p_regular(rd: RootDatum, lam: Weight, p: int) -> bool:
    """True iff the dot-action stabilizer is trivial: no pairing is 0 mod p."""
    require_odd_prime(p)
    lam = _check_weight(rd, lam)
    return all(v % p != 0 for v in _wall_values(rd, lam, p))


def length(rd: RootDatum, y: ExtAffineElement) -> int:
    """Separating-wall count between the base alcove and its image.

    Uses the level-1 normalization (walls <z, beta^vee> = n for all
    integers n), so the answer does not depend on p.  The base point
    rho / h is interior and generic: all its pairings, and those of its
    image, are non-integral, so each positive root contributes the exact
    number of integers strictly between the two pairings.
    """
    h = rd.coxeter_number
    z0 = tuple(Fraction(1, h) for _ in range(rd.rank))
    z1 = _mat_vec(y.w, tuple(a + b for a, b in zip(z0, y.nu)))
    total = 0
    for i in range(rd.num_pos_roots):
        a = rd.pair_coroot(z0, i)
        b = rd.pair_coroot(z1, i)
        assert a.denominator != 1 and b.denominator != 1
        lo, hi = sorted((a, b))
        total += math.floor(hi) - math.floor(lo)
    return total


def sign_epsilon(rd: RootDatum, y: ExtAffineElement) -> int:
    """Determinant of the finite part; translations contribute nothing."""
    d = _det_int(y.w)
    assert d in (1, -1)
    return d


def ext_block_witnesses(
    rd: RootDatum, lam: Weight, p: int
) -> tuple[ExtAffineElement, ...]:
    """All y = w t_nu in W_f |x X with y . 0 equal to lam's representative."""
    require_odd_prime(p)
    lam = _check_weight(rd, lam)
    lam0, _ = fundamental_representative(rd, lam, p)
    z = tuple(c + 1 for c in lam0)
    found = []
    for w in rd.weyl:
        u = _mat_vec(_mat_inv(w), z)
        if all((a - 1) % p == 0 for a in u):
            nu = tuple((a - 1) // p for a in u)
            found.append(ExtAffineElement(w, nu))
    return tuple(found)


def ext_block_witness(
    rd: RootDatum, lam: Weight, p: int
) -> ExtAffineElement | None:
    """First witness y with y . 0 = lam0, or None when lam0 is not in W^ext . 0.

    Dominance of lam is required; the enumeration order of W_f is fixed,
    so the answer is deterministic.
    """
    lam = _check_weight(rd, lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    found = ext_block_witnesses(rd, lam, p)
    return found[0] if found else None
