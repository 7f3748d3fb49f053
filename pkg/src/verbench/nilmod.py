"""Modules over the p-nilpotent additive group scheme, as exact F_p matrices.

A module is a square matrix eta over F_p with eta^p = 0; matrix[r][c] is
the coefficient of basis vector r in eta(basis vector c).  Indecomposables
are the Jordan blocks J_1, ..., J_p, and the block of size p is the
projective one.  The semisimplified restriction functor phi reads off, for
i = 0..p-2, the number of blocks of size exactly i+1 as

    dim (ker eta  ∩  im eta^i) - dim (ker eta  ∩  im eta^(i+1)),

the multiplicity of the fusion simple L_i.  phi vanishes exactly on the
projective modules, and it is monoidal for the primitive tensor rule
eta1 (x) 1 + 1 (x) eta2.

A graded module carries integer weights with eta homogeneous of degree -2;
its indecomposables are the strings M(a, d) (lowest weight a, dimension
d+1), recovered weight by weight from the same kernel/image intersections.
All arithmetic is exact: int64 entries reduced into [0, p), Gaussian
elimination with first-nonzero pivoting, no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .capricorn_stable import StableObject
from .ver_fusion import VerObject, require_odd_prime

__all__ = [
    "NilMatrix",
    "GradedNilModule",
    "JordanType",
    "GradedJordanDecomp",
    "jordan_type",
    "phi",
    "is_projective",
    "tensor",
    "direct_sum",
    "graded_decompose",
    "stable_form",
    "dual",
    "module_to_json",
    "module_from_json",
]

JordanType = tuple[int, ...]


# -- exact F_p linear algebra ------------------------------------------------


def _rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rank(mat: np.ndarray, p: int) -> int:
    return len(_rref(mat, p)[1])


def _nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the kernel (one per free column)."""
    r, pivots = _rref(mat, p)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, c in enumerate(pivots):
            basis[c, k] = (-r[i, f]) % p
    return basis


def _column_space(mat: np.ndarray, p: int) -> np.ndarray:
    """Reduced column-echelon basis of the column space."""
    r, pivots = _rref(mat.T, p)
    return r[: len(pivots)].T.copy()


def _intersect(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Basis of span(a) ∩ span(b); both inputs must have independent columns."""
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    null = _nullspace(np.concatenate([a, b], axis=1), p)
    vecs = (a @ null[: a.shape[1], :]) % p
    return _column_space(vecs, p)


# -- module types ------------------------------------------------------------


class NilMatrix:
    """A square matrix eta over F_p with eta^p = 0, validated eagerly."""

    def __init__(self, p: int, mat) -> None:
        require_odd_prime(p)
        arr = np.array(mat, dtype=np.int64) % p
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"eta must be square, got shape {arr.shape}")
        power = np.eye(arr.shape[0], dtype=np.int64)
        for _ in range(p):
            power = (power @ arr) % p
            if not power.any():
                break
        if power.any():
            raise ValueError(f"eta^{p} != 0: not a module over the height-one kernel")
        arr.setflags(write=False)
        self.p = p
        self.mat = arr

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(p={self.p}, dim={self.dim})"


class GradedNilModule(NilMatrix):
    """NilMatrix with integer weights making eta homogeneous of degree -2."""

    def __init__(self, p: int, weights, mat) -> None:
        super().__init__(p, mat)
        weights = tuple(int(w) for w in weights)
        if len(weights) != self.dim:
            raise ValueError(
                f"{len(weights)} weights for a module of dimension {self.dim}"
            )
        rows, cols = np.nonzero(self.mat)
        for r, c in zip(rows, cols):
            if weights[r] != weights[c] - 2:
                raise ValueError(
                    f"eta is not homogeneous of degree -2: entry ({r},{c}) maps "
                    f"weight {weights[c]} to weight {weights[r]}"
                )
        self.weights = weights


@dataclass(frozen=True)
class GradedJordanDecomp:
    """Multiset of strings M(a, d) with 0 <= d <= p-1 (projectives kept)."""

    p: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        blocks = tuple(sorted((int(a), int(d)) for a, d in self.blocks))
        for a, d in blocks:
            if not 0 <= d <= self.p - 1:
                raise ValueError(f"string M({a},{d}) has invalid length for p={self.p}")
        object.__setattr__(self, "blocks", blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        return " + ".join(f"M({a},{d})" for a, d in self.blocks)


# -- operations ----------------------------------------------------------------


def _check_same(m1: NilMatrix, m2: NilMatrix) -> None:
    if m1.p != m2.p:
        raise ValueError(f"mismatched primes: {m1.p} vs {m2.p}")
    g1, g2 = isinstance(m1, GradedNilModule), isinstance(m2, GradedNilModule)
    if g1 != g2:
        raise ValueError("cannot mix graded and ungraded modules")


def jordan_type(m: NilMatrix) -> JordanType:
    """Block sizes of eta, weakly decreasing, from ranks of powers."""
    p = m.p
    ranks = [m.dim]
    power = m.mat
    while ranks[-1] > 0:
        ranks.append(_rank(power, p))
        power = (power @ m.mat) % p
    ranks.append(0)
    parts: list[int] = []
    for k in range(1, len(ranks) - 1):
        mult = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * mult)
    return tuple(sorted(parts, reverse=True))


def _socle_filtration_dims(m: NilMatrix) -> list[int]:
    """dim(ker eta ∩ im eta^i) for i = 0..p-1."""
    p = m.p
    kernel = _nullspace(m.mat, p)
    dims = [kernel.shape[1]]
    power = m.mat
    for _ in range(1, p):
        if not power.any():
            dims.append(0)
            continue
        image = _column_space(power, p)
        meet = _intersect(kernel, image, p)
        dims.append(meet.shape[1])
        power = (power @ m.mat) % p
    return dims


def phi(m: NilMatrix) -> VerObject:
    """Semisimplified restriction: mult[i] counts blocks of size exactly i+1."""
    dims = _socle_filtration_dims(m)
    dims.append(0)  # im eta^p = 0
    mult = tuple(dims[i] - dims[i + 1] for i in range(m.p - 1))
    return VerObject(m.p, mult)


def is_projective(m: NilMatrix) -> bool:
    """True iff eta is a sum of blocks of size p, i.e. phi(m) = 0."""
    return all(part == m.p for part in jordan_type(m))


def tensor(m1: NilMatrix, m2: NilMatrix):
    """Tensor product with the primitive rule eta1 (x) 1 + 1 (x) eta2."""
    _check_same(m1, m2)
    i1 = np.eye(m1.dim, dtype=np.int64)
    i2 = np.eye(m2.dim, dtype=np.int64)
    mat = (np.kron(m1.mat, i2) + np.kron(i1, m2.mat)) % m1.p
    if isinstance(m1, GradedNilModule):
        weights = np.add.outer(np.array(m1.weights), np.array(m2.weights)).ravel()
        return GradedNilModule(m1.p, weights, mat)
    return NilMatrix(m1.p, mat)


def direct_sum(m1: NilMatrix, m2: NilMatrix):
    _check_same(m1, m2)
    n1, n2 = m1.dim, m2.dim
    mat = np.zeros((n1 + n2, n1 + n2), dtype=np.int64)
    mat[:n1, :n1] = m1.mat
    mat[n1:, n1:] = m2.mat
    if isinstance(m1, GradedNilModule):
        return GradedNilModule(m1.p, m1.weights + m2.weights, mat)
    return NilMatrix(m1.p, mat)


def _column_weight(col: np.ndarray, weights: tuple[int, ...]) -> int:
    rows = np.nonzero(col)[0]
    assert rows.size > 0
    vals = {weights[r] for r in rows}
    assert len(vals) == 1, "elimination produced a non-homogeneous basis vector"
    return vals.pop()


def graded_decompose(m: GradedNilModule) -> GradedJordanDecomp:
    """Multiplicity of M(a, d): socle-weight count in the filtration step d.

    The kernel of eta meets im eta^d in the socles of the strings of
    length > d; comparing weight-a dimensions at steps d and d+1 isolates
    the strings M(a, d).  All intermediate bases stay weight-homogeneous
    because elimination never mixes weight blocks.
    """
    if not isinstance(m, GradedNilModule):
        raise ValueError("graded_decompose needs a GradedNilModule")
    p = m.p
    kernel = _nullspace(m.mat, p)
    layers: list[dict[int, int]] = []
    power = np.eye(m.dim, dtype=np.int64)
    for d in range(p):
        if d == 0:
            meet = kernel
        elif not power.any():
            meet = np.zeros((m.dim, 0), dtype=np.int64)
        else:
            meet = _intersect(kernel, _column_space(power, p), p)
        counts: dict[int, int] = {}
        for k in range(meet.shape[1]):
            w = _column_weight(meet[:, k], m.weights)
            counts[w] = counts.get(w, 0) + 1
        layers.append(counts)
        power = (power @ m.mat) % p
    layers.append({})  # im eta^p = 0
    blocks: list[tuple[int, int]] = []
    for d in range(p):
        for a, n in layers[d].items():
            mult = n - layers[d + 1].get(a, 0)
            assert mult >= 0
            blocks.extend([(a, d)] * mult)
    assert sum(d + 1 for _, d in blocks) == m.dim
    return GradedJordanDecomp(p, tuple(blocks))


def stable_form(d: GradedJordanDecomp) -> StableObject:
    """Forget the projective strings M(a, p-1)."""
    return StableObject(d.p, tuple(b for b in d.blocks if b[1] != d.p - 1))


def dual(m: GradedNilModule) -> GradedNilModule:
    """Transpose eta and negate the grading."""
    if not isinstance(m, GradedNilModule):
        raise ValueError("dual needs a GradedNilModule")
    return GradedNilModule(m.p, tuple(-w for w in m.weights), m.mat.T)


# -- serialization -------------------------------------------------------------


def module_to_json(m: NilMatrix) -> dict:
    data = {"p": m.p, "dim": m.dim, "matrix": m.mat.tolist()}
    if isinstance(m, GradedNilModule):
        data["weights"] = list(m.weights)
    return data


def module_from_json(data: dict) -> NilMatrix:
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    for key in ("p", "dim", "matrix"):
        if key not in data:
            raise ValueError(f"missing field {key!r}")
    mat = data["matrix"]
    if len(mat) != data["dim"]:
        raise ValueError(f"dim field says {data['dim']}, matrix has {len(mat)} rows")
    if "weights" in data and data["weights"] is not None:
        return GradedNilModule(data["p"], data["weights"], mat)
    return NilMatrix(data["p"], mat)
