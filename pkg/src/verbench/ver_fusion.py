"""Fusion arithmetic in the semisimplification of mod-p Jordan blocks.

Over F_p the indecomposable nilpotent Jordan blocks J_1, ..., J_p tensor
(with respect to the primitive comultiplication eta (x) 1 + 1 (x) eta) by a
truncated Clebsch-Gordan rule.  Blocks of size p are projective and have
categorical dimension 0 mod p; killing them leaves the Verlinde fusion ring
with simples L_0, ..., L_{p-2}, where L_i is the class of J_{i+1}.  Writing
the simples 1-based, the rule is

    L_{i-1} (x) L_{j-1}  =  sum of L_{|i-j| + 2k - 2}
                            over k = 1, ..., min(i, j, p-i, p-j).

The truncation by p-i and p-j is exactly what discarding size-p blocks does
to the classical sl_2 rule.  The parity autoequivalence Pi = L_{p-2} (x) -
satisfies Pi L_i = L_{p-2-i}; the simples L_0 and L_{p-2} span a copy of the
category of super vector spaces.

Objects are integer multiplicity vectors and all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "VerParams",
    "VerObject",
    "fuse",
    "parity_shift",
    "is_svec",
    "categorical_dim",
    "require_odd_prime",
]


def require_odd_prime(p: int) -> None:
    """Reject p that is not an odd prime in the supported exact range."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 3:
        raise ValueError(f"p must be an odd prime >= 3, got {p}")
    if p > 2**15:
        # keeps products of residues far inside 64-bit integers
        raise ValueError(f"p = {p} exceeds the supported exact range (2^15)")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"p must be prime, got {p} = {d}*{p // d}")
        d += 1


@dataclass(frozen=True)
class VerParams:
    """The prime p; simple objects are indexed 0..p-2."""

    p: int

    def __post_init__(self) -> None:
        require_odd_prime(self.p)

    @property
    def num_simples(self) -> int:
        return self.p - 1


@dataclass(frozen=True)
class VerObject:
    """Non-negative integer combination of the simples L_0..L_{p-2}."""

    p: int
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        object.__setattr__(self, "mult", tuple(int(m) for m in self.mult))
        if len(self.mult) != self.p - 1:
            raise ValueError(
                f"multiplicity vector must have length p-1 = {self.p - 1}, "
                f"got {len(self.mult)}"
            )
        if any(m < 0 for m in self.mult):
            raise ValueError(f"multiplicities must be >= 0, got {self.mult}")

    @classmethod
    def zero(cls, p: int) -> "VerObject":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def simple(cls, p: int, i: int) -> "VerObject":
        if not 0 <= i <= p - 2:
            raise ValueError(f"simple index must lie in 0..{p - 2}, got {i}")
        mult = [0] * (p - 1)
        mult[i] = 1
        return cls(p, tuple(mult))

    @property
    def is_zero(self) -> bool:
        return all(m == 0 for m in self.mult)

    def __add__(self, other: "VerObject") -> "VerObject":
        if not isinstance(other, VerObject):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"mismatched primes: {self.p} vs {other.p}")
        return VerObject(self.p, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __str__(self) -> str:
        terms = []
        for i, m in enumerate(self.mult):
            if m == 1:
                terms.append(f"L{i}")
            elif m > 1:
                terms.append(f"{m}*L{i}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"p": self.p, "mult": list(self.mult)}

    @classmethod
    def from_json(cls, data: dict) -> "VerObject":
        if not isinstance(data, dict) or "p" not in data or "mult" not in data:
            raise ValueError("expected an object with fields 'p' and 'mult'")
        return cls(data["p"], tuple(data["mult"]))


def fuse(x: VerObject, y: VerObject) -> VerObject:
    """Tensor product in the fusion ring, extended bilinearly."""
    if x.p != y.p:
        raise ValueError(f"mismatched primes: {x.p} vs {y.p}")
    p = x.p
    out = [0] * (p - 1)
    for i, mx in enumerate(x.mult):
        if mx == 0:
            continue
        for j, my in enumerate(y.mult):
            if my == 0:
                continue
            a, b = i + 1, j + 1  # 1-based block sizes
            for k in range(1, min(a, b, p - a, p - b) + 1):
                out[abs(a - b) + 2 * k - 2] += mx * my
    return VerObject(p, tuple(out))


def parity_shift(x: VerObject) -> VerObject:
    """Tensor with L_{p-2}; an involution sending L_i to L_{p-2-i}."""
    return fuse(VerObject.simple(x.p, x.p - 2), x)


def is_svec(x: VerObject) -> bool:
    """True iff only L_0 and L_{p-2} occur (the super-vector-space part)."""
    return all(m == 0 for i, m in enumerate(x.mult) if i not in (0, x.p - 2))


def categorical_dim(x: VerObject) -> int:
    """Categorical dimension: sum of (i+1) * mult[i], reduced into [0, p)."""
    return sum((i + 1) * m for i, m in enumerate(x.mult)) % x.p
