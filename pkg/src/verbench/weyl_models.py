"""Explicit matrix models of costandard modules, restricted to the regular
nilpotent line.

A model is a GradedNilModule: the weight of a vector is its pairing with the
sum of the positive coroots doubled (the principal grading), and eta is the
image of a regular nilpotent element, homogeneous of degree -2.

For A1 the costandard module of highest weight n is the symmetric power of
the natural representation: basis u_0..u_n of weights n, n-2, ..., -n with
eta u_i = (n - i) u_{i+1}.

For A2 and A3 the model of a partition lambda is the classical Schur module
inside S^{lambda_1} V (x) ... (x) S^{lambda_r} V for the natural module V of
sl_n: antisymmetrize each column of a tableau, multiply each row out in its
symmetric power.  The expansions of the semistandard tableaux span the image
over any coefficient ring, so only those generators are ever expanded; the
matrix of eta = sum of the subdiagonal units, acting as a derivation on
monomials, is then cut down to the column space by back-substitution against
a reduced column echelon basis.  A letter v of V has principal weight
n + 1 - 2v.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import comb

import numpy as np

from .capricorn_stable import (
    GradedSuperSpace,
    StableObject,
    in_super_image,
    to_graded_super,
)
from .nilmod import (
    GradedNilModule,
    NilMatrix,
    _rref,
    graded_decompose,
    jordan_type,
    phi,
    stable_form,
)
from .ver_fusion import VerObject, require_odd_prime

__all__ = [
    "SCHUR_CODOMAIN_CAP",
    "ModelSpec",
    "sl2_costandard",
    "schur_module",
    "model_phi",
    "unique_small_block_check",
]

SCHUR_CODOMAIN_CAP = 10_000


def sl2_costandard(n: int, p: int) -> GradedNilModule:
    """Symmetric power model: weights n, n-2, ..., -n, eta u_i = (n-i) u_{i+1}."""
    require_odd_prime(p)
    if n < 0:
        raise ValueError(f"highest weight must be dominant, got {n}")
    mat = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n):
        mat[i + 1, i] = (n - i) % p
    return GradedNilModule(p, [n - 2 * i for i in range(n + 1)], mat)


# -- Schur module construction -------------------------------------------------


def _check_partition(n: int, partition) -> tuple[int, ...]:
    shape = tuple(int(x) for x in partition)
    if any(x < 0 for x in shape):
        raise ValueError(f"partition parts must be nonnegative: {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {shape}")
    while shape and shape[-1] == 0:
        shape = shape[:-1]
    if len(shape) > n:
        raise ValueError(f"partition {shape} has more than {n} rows")
    return shape


def _semistandard_tableaux(shape: tuple[int, ...], n: int):
    """Rows weakly increase, columns strictly increase, letters in 1..n."""

    def rows_from(i: int, above, acc):
        if i == len(shape):
            yield tuple(acc)
            return
        length = shape[i]

        def cells(j: int, minval: int, row: list[int]):
            if j == length:
                yield tuple(row)
                return
            lo = minval
            if above is not None and j < len(above):
                lo = max(lo, above[j] + 1)
            for v in range(lo, n + 1):
                row.append(v)
                yield from cells(j + 1, v, row)
                row.pop()

        for row in cells(0, 1, []):
            acc.append(row)
            yield from rows_from(i + 1, row, acc)
            acc.pop()

    yield from rows_from(0, None, [])


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def _expand_tableau(tableau, shape: tuple[int, ...]) -> dict:
    """Antisymmetrize each column, collect monomials per row: key -> coeff."""
    terms: dict[tuple, int] = {tuple(() for _ in shape): 1}
    for j in range(shape[0] if shape else 0):
        height = sum(1 for length in shape if length > j)
        letters = tuple(tableau[i][j] for i in range(height))
        new_terms: dict[tuple, int] = {}
        for perm in permutations(range(height)):
            sign = _perm_sign(perm)
            for key, coeff in terms.items():
                rows = list(key)
                for i in range(height):
                    rows[i] = tuple(sorted(rows[i] + (letters[perm[i]],)))
                new_key = tuple(rows)
                new_terms[new_key] = new_terms.get(new_key, 0) + sign * coeff
        terms = {k: v for k, v in new_terms.items() if v}
    return terms


def _codomain_dim(n: int, shape: tuple[int, ...]) -> int:
    out = 1
    for length in shape:
        out *= comb(n + length - 1, length)
    return out


def _apply_lowering(keys, index, n: int, vec: np.ndarray, p: int) -> np.ndarray:
    """Derivation action of the subdiagonal-unit sum on one codomain vector."""
    out = np.zeros(len(keys), dtype=np.int64)
    for k in np.nonzero(vec)[0]:
        coeff = int(vec[k])
        key = keys[k]
        for i, row in enumerate(key):
            for v in set(row):
                if v == n:
                    continue
                bumped = list(row)
                bumped.remove(v)
                target = list(key)
                target[i] = tuple(sorted(bumped + [v + 1]))
                out[index[tuple(target)]] += coeff * row.count(v)
    return out % p


def schur_module(n: int, partition, p: int) -> GradedNilModule:
    """Image of the semistandard generators, with the derivation action of
    the regular nilpotent sum of subdiagonal units."""
    require_odd_prime(p)
    if not 2 <= n <= 4:
        raise ValueError(f"natural module rank must be 2..4, got {n}")
    shape = _check_partition(n, partition)

    codomain_dim = _codomain_dim(n, shape)
    if codomain_dim > SCHUR_CODOMAIN_CAP:
        raise ValueError(
            f"codomain dimension {codomain_dim} exceeds cap {SCHUR_CODOMAIN_CAP}"
        )

    keys = sorted(
        product(
            *(combinations_with_replacement(range(1, n + 1), length) for length in shape)
        )
    )
    index = {key: k for k, key in enumerate(keys)}
    key_weight = [sum(n + 1 - 2 * v for row in key for v in row) for key in keys]

    tableaux = list(_semistandard_tableaux(shape, n))
    gens = np.zeros((len(keys), len(tableaux)), dtype=np.int64)
    for t, tab in enumerate(tableaux):
        for key, coeff in _expand_tableau(tab, shape).items():
            gens[index[key], t] = coeff % p

    echelon, pivots = _rref(gens.T, p)
    basis = echelon[: len(pivots)].T.copy()
    image = np.stack(
        [_apply_lowering(keys, index, n, basis[:, c], p) for c in range(len(pivots))],
        axis=1,
    ) if pivots else np.zeros((len(keys), 0), dtype=np.int64)
    restricted = image[pivots, :]
    assert np.array_equal((basis @ restricted) % p, image), (
        "eta does not preserve the generated subspace"
    )
    weights = [key_weight[r] for r in pivots]
    return GradedNilModule(p, weights, restricted)


# -- dispatch and summaries ------------------------------------------------------


def _partition_of(coords: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        sum(coords[j] for j in range(i, len(coords))) for i in range(len(coords))
    )


@dataclass(frozen=True)
class ModelSpec:
    """A costandard module named by Cartan type and fundamental-weight coords."""

    cartan_type: str
    weight: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", tuple(int(c) for c in self.weight))
        if self.cartan_type not in ("A1", "A2", "A3"):
            raise ValueError(
                f"no explicit model for type {self.cartan_type}; A1, A2, A3 only"
            )
        rank = int(self.cartan_type[1])
        if len(self.weight) != rank:
            raise ValueError(
                f"{self.cartan_type} needs {rank} weight coordinates, "
                f"got {len(self.weight)}"
            )
        if any(c < 0 for c in self.weight):
            raise ValueError(f"weight {self.weight} is not dominant")

    def partition(self) -> tuple[int, ...]:
        """Row lengths: coordinate i contributes to the first i rows."""
        return _partition_of(self.weight)

    def build(self, p: int) -> GradedNilModule:
        """Build in whichever diagram orientation has the smaller ambient
        space: the pinned diagram flip fixes both the principal nilpotent
        and the grading coweight, so a weight and its reverse restrict
        identically."""
        if self.cartan_type == "A1":
            return sl2_costandard(self.weight[0], p)
        n = len(self.weight) + 1
        shape = _partition_of(self.weight)
        flipped = _partition_of(self.weight[::-1])
        if _codomain_dim(n, flipped) < _codomain_dim(n, shape):
            shape = flipped
        return schur_module(n, shape, p)


def model_phi(
    m: NilMatrix,
) -> tuple[VerObject, StableObject | None, GradedSuperSpace | None]:
    """Fusion image, stable image if graded, super image if that lands in it."""
    fusion = phi(m)
    if not isinstance(m, GradedNilModule):
        return fusion, None, None
    stable = stable_form(graded_decompose(m))
    sup = to_graded_super(stable) if in_super_image(stable) else None
    return fusion, stable, sup


def unique_small_block_check(m: NilMatrix) -> bool:
    """True iff exactly one Jordan block has size < p."""
    return sum(1 for part in jordan_type(m) if part < m.p) == 1
