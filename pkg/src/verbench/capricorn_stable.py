"""Stable-category arithmetic for graded F_p[eta]-modules, eta in degree -2.

The indecomposables are strings M(a, d): dimension d+1, weights
a, a+2, ..., a+2d, with a the lowest (socle) weight.  M(a, p-1) is
projective and vanishes in the stable category, so stable objects are
finite multisets of pairs (a, d) with 0 <= d <= p-2.  The suspension acts
blockwise by

    M(a, d)[1] = M(a + 2(d+1), p - d - 2),

tensoring with the one-dimensional module of weight b shifts a by b, and
iterating the suspension on a one-dimensional module gives

    M(a, 0)[m] = M(a + mp, 0)            for m even,
    M(a, 0)[m] = M(a + mp - p + 2, p-2)  for m odd.

The thick subcategory generated by M(0,0) and M(-p,0) is equivalent to
integer-graded super vector spaces: M(a,0) with p | a is an even line,
M(a,p-2) with p | a-2 an odd line, and the component-degree is -a/p,
respectively -((a-2)/p + 1); supports of distinct such lines are disjoint,
which is why stable Homs between them are k for equal shift and 0
otherwise.

phi_st_costandard composes the alcove walk with those rules: the stable
image of the costandard module of highest weight lambda = x . lambda_0 is
the suspension by the length of x of the image for lambda_0, which is the
even or odd unit line according to the sign of the witness y with
y . 0 = lambda_0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .ver_fusion import VerObject, require_odd_prime
from .weyl_alcove import (
    RootDatum,
    Weight,
    alcove_position,
    dot_act,
    ext_block_witness,
    fundamental_representative,
    is_dominant,
    length,
    sign_epsilon,
)

__all__ = [
    "StableObject",
    "GradedSuperSpace",
    "shift",
    "tensor_line",
    "support",
    "hom_dim",
    "in_super_image",
    "to_graded_super",
    "is_singular",
    "phi_st_costandard",
    "phi_tilting_complex",
    "hyperco_reference",
]


@dataclass(frozen=True)
class StableObject:
    """Multiset of string modules M(a, d), 0 <= d <= p-2, up to projectives."""

    p: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        blocks = tuple(sorted((int(a), int(d)) for a, d in self.blocks))
        for a, d in blocks:
            if not 0 <= d <= self.p - 2:
                raise ValueError(
                    f"block M({a},{d}) is not reduced: need 0 <= d <= p-2 = {self.p - 2}"
                )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def zero(cls, p: int) -> "StableObject":
        return cls(p, ())

    @classmethod
    def line(cls, p: int, a: int, d: int = 0) -> "StableObject":
        return cls(p, ((a, d),))

    @property
    def is_zero(self) -> bool:
        return not self.blocks

    def __add__(self, other: "StableObject") -> "StableObject":
        if not isinstance(other, StableObject):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"mismatched primes: {self.p} vs {other.p}")
        return StableObject(self.p, self.blocks + other.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        return " + ".join(f"M({a},{d})" for a, d in self.blocks)

    def to_json(self) -> dict:
        return {"p": self.p, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "StableObject":
        if not isinstance(data, dict) or "p" not in data or "blocks" not in data:
            raise ValueError("expected an object with fields 'p' and 'blocks'")
        return cls(data["p"], tuple((a, d) for a, d in data["blocks"]))


@dataclass(frozen=True)
class GradedSuperSpace:
    """Integer-graded super vector space: (degree, even dim, odd dim) rows."""

    components: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        merged: dict[int, list[int]] = {}
        for deg, ev, od in self.components:
            if ev < 0 or od < 0:
                raise ValueError("dimensions must be >= 0")
            slot = merged.setdefault(int(deg), [0, 0])
            slot[0] += int(ev)
            slot[1] += int(od)
        rows = tuple(
            (deg, ev, od) for deg, (ev, od) in sorted(merged.items()) if ev or od
        )
        object.__setattr__(self, "components", rows)

    @classmethod
    def zero(cls) -> "GradedSuperSpace":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.components

    def total_dims(self) -> dict[int, int]:
        """Dimension per degree with the parity forgotten."""
        return {deg: ev + od for deg, ev, od in self.components}

    def __str__(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for deg, ev, od in self.components:
            if ev:
                parts.append(("even" if ev == 1 else f"{ev}*even") + f" @ degree {deg}")
            if od:
                parts.append(("odd" if od == 1 else f"{od}*odd") + f" @ degree {deg}")
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {"components": [list(c) for c in self.components]}

    @classmethod
    def from_json(cls, data: dict) -> "GradedSuperSpace":
        if not isinstance(data, dict) or "components" not in data:
            raise ValueError("expected an object with field 'components'")
        return cls(tuple((d, e, o) for d, e, o in data["components"]))


def _shift_block_once(p: int, a: int, d: int, forward: bool) -> tuple[int, int]:
    if forward:
        return a + 2 * (d + 1), p - d - 2
    return a - 2 * (p - d - 1), p - d - 2


def shift(x: StableObject, m: int) -> StableObject:
    """Suspension [m], applied blockwise via M(a,d)[1] = M(a+2(d+1), p-d-2)."""
    blocks = list(x.blocks)
    for _ in range(abs(int(m))):
        blocks = [_shift_block_once(x.p, a, d, m > 0) for a, d in blocks]
    return StableObject(x.p, tuple(blocks))


def tensor_line(x: StableObject, b: int) -> StableObject:
    """Tensor with the one-dimensional module of weight b."""
    return StableObject(x.p, tuple((a + int(b), d) for a, d in x.blocks))


def support(x: StableObject) -> tuple[int, ...]:
    """Sorted set of weights appearing in the blocks."""
    out = set()
    for a, d in x.blocks:
        out.update(range(a, a + 2 * d + 1, 2))
    return tuple(sorted(out))


def hom_dim(p: int, a: int, m: int, m_prime: int) -> int:
    """dim Hom(M(a,0)[m], M(a,0)[m']) in the stable category: 1 iff m = m'.

    For distinct shifts the two objects have disjoint supports, so there
    is nothing but zero; for equal shifts the endomorphisms of an
    indecomposable non-projective string reduce to scalars.
    """
    require_odd_prime(p)
    x = shift(StableObject.line(p, a), m)
    y = shift(StableObject.line(p, a), m_prime)
    if x == y:
        return 1
    assert not set(support(x)) & set(support(y))
    return 0


def in_super_image(x: StableObject) -> bool:
    """Whether every block is an even or odd unit line up to suspension."""
    for a, d in x.blocks:
        if d == 0 and a % x.p == 0:
            continue
        if d == x.p - 2 and (a - 2) % x.p == 0:
            continue
        return False
    return True


def to_graded_super(x: StableObject) -> GradedSuperSpace:
    """Image in integer-graded super vector spaces.

    M(a, 0) with p | a is an even line in component-degree -a/p; M(a, p-2)
    with p | a-2 is an odd line in component-degree -((a-2)/p + 1).  Any
    other block is outside the equivalence and is an error.
    """
    rows = []
    for a, d in x.blocks:
        if d == 0 and a % x.p == 0:
            rows.append((-(a // x.p), 1, 0))
        elif d == x.p - 2 and (a - 2) % x.p == 0:
            rows.append((-((a - 2) // x.p + 1), 0, 1))
        else:
            raise ValueError(
                f"block M({a},{d}) lies outside the graded-super image for p={x.p}"
            )
    return GradedSuperSpace(tuple(rows))


def is_singular(x) -> bool:
    """Zero-object test: works on StableObject and VerObject alike."""
    if isinstance(x, (StableObject, VerObject)):
        return x.is_zero
    raise ValueError(f"expected a StableObject or VerObject, got {type(x).__name__}")


def phi_st_costandard(rd: RootDatum, lam: Weight, p: int) -> StableObject:
    """Stable image of the costandard module of highest weight lam.

    Requires p > h and lam dominant in the extended principal block.  The
    answer is the even or odd unit line when lam is in the closed alcove
    (by the sign of the witness) and is suspended once per wall of the
    alcove walk in general.
    """
    require_odd_prime(p)
    if p <= rd.coxeter_number:
        raise ValueError(
            f"need p > Coxeter number h = {rd.coxeter_number}, got p = {p}"
        )
    lam = tuple(int(c) for c in lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    lam0, walls = fundamental_representative(rd, lam, p)
    y = ext_block_witness(rd, lam, p)
    if y is None:
        raise ValueError(f"weight {lam} is not in the extended principal block")
    x = rd.identity_element()
    for w in walls:
        x = x * rd.wall_reflection(w)
    assert dot_act(rd, x, lam0, p) == lam
    base = (
        StableObject.line(p, 0)
        if sign_epsilon(rd, y) == 1
        else StableObject.line(p, 2 - p, p - 2)
    )
    return shift(base, length(rd, x))


def phi_tilting_complex(
    rd: RootDatum,
    p: int,
    seeds: Mapping[Weight, StableObject],
    terms: Iterable[tuple[int, Mapping[Weight, int]]],
) -> StableObject:
    """Stable image of a minimal complex of tilting modules.

    terms is a list of (cohomological degree i, multiplicities by highest
    weight); a term in degree i contributes its seed suspended by -i.
    Tilting summands whose weight lies outside the interior of the
    fundamental alcove are negligible and are dropped; for weights inside,
    a missing seed is an error.
    """
    require_odd_prime(p)
    total = Counter()
    for degree, mults in terms:
        degree = int(degree)
        for lam, mult in mults.items():
            lam = tuple(int(c) for c in lam)
            mult = int(mult)
            if mult < 0:
                raise ValueError(f"multiplicity of {lam} must be >= 0, got {mult}")
            if mult == 0:
                continue
            if alcove_position(rd, lam, p) != "interior":
                continue  # negligible tilting summand
            if lam not in seeds:
                raise ValueError(f"missing seed for alcove weight {lam}")
            seed = seeds[lam]
            if seed.p != p:
                raise ValueError(f"seed for {lam} has p = {seed.p}, expected {p}")
            for block in shift(seed, -degree).blocks:
                total[block] += mult
    blocks = []
    for block, mult in total.items():
        blocks.extend([block] * mult)
    return StableObject(p, tuple(blocks))


def hyperco_reference(kind: str, lx: int, is_identity: bool = False) -> GradedSuperSpace:
    """Reference hypercohomology shapes, parity ignored (recorded as even).

    costandard: one dimension in component-degree -lx; standard: +lx;
    tilting: one dimension in degree 0 for the identity alcove element and
    zero otherwise.
    """
    lx = int(lx)
    if kind == "costandard":
        return GradedSuperSpace(((-lx, 1, 0),))
    if kind == "standard":
        return GradedSuperSpace(((lx, 1, 0),))
    if kind == "tilting":
        if is_identity:
            return GradedSuperSpace(((0, 1, 0),))
        return GradedSuperSpace.zero()
    raise ValueError(f"unknown kind {kind!r}; expected costandard, standard or tilting")
