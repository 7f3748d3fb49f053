"""Tests for the explicit costandard models.

Two independent oracles pin the Schur construction: the hook content
formula counts semistandard tableaux, and a from-scratch expansion of the
whole antisymmetrize-then-multiply map (every column-strict filling, not
just the semistandard generators) gives an independent rank.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product

import numpy as np
import pytest

from verbench.capricorn_stable import GradedSuperSpace, StableObject
from verbench.nilmod import (
    GradedNilModule,
    NilMatrix,
    graded_decompose,
    is_projective,
    jordan_type,
    phi,
    stable_form,
)
from verbench.ver_fusion import VerObject
from verbench.weyl_models import (
    ModelSpec,
    SCHUR_CODOMAIN_CAP,
    model_phi,
    schur_module,
    sl2_costandard,
    unique_small_block_check,
)

# -- independent oracles -------------------------------------------------------


def hook_content_count(shape, n):
    """Number of semistandard tableaux with letters in 1..n."""
    total = Fraction(1)
    for i, length in enumerate(shape):
        for j in range(length):
            arm = length - j - 1
            leg = sum(1 for k in range(i + 1, len(shape)) if shape[k] > j)
            total *= Fraction(n + j - i, arm + leg + 1)
    assert total.denominator == 1
    return int(total)


def rank_mod_p(mat, p):
    a = np.array(mat, dtype=np.int64) % p
    rank = 0
    for col in range(a.shape[1]):
        piv = next((r for r in range(rank, a.shape[0]) if a[r, col]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), -1, p)) % p
        for r in range(a.shape[0]):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
    return rank


def inversion_sign(seq):
    inv = sum(
        1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b]
    )
    return -1 if inv % 2 else 1


def full_box_matrix(n, shape, p):
    """Expand every column-strict filling, not just the semistandard ones."""
    heights = [sum(1 for length in shape if length > j) for j in range(shape[0])]
    keys = sorted(
        product(
            *(combinations_with_replacement(range(1, n + 1), length) for length in shape)
        )
    )
    index = {key: k for k, key in enumerate(keys)}
    fillings = list(product(*(combinations(range(1, n + 1), h) for h in heights)))
    mat = np.zeros((len(keys), len(fillings)), dtype=np.int64)
    for c, filling in enumerate(fillings):
        for assignment in product(*(permutations(col) for col in filling)):
            sign = 1
            rows = [[] for _ in shape]
            for col in assignment:
                sign *= inversion_sign(col)
                for i, letter in enumerate(col):
                    rows[i].append(letter)
            key = tuple(tuple(sorted(r)) for r in rows)
            mat[index[key], c] += sign
    return mat % p


def small_partitions(max_total, max_parts):
    out = [()]
    def rec(prefix, remaining, cap):
        for part in range(min(remaining, cap), 0, -1):
            shape = prefix + (part,)
            out.append(shape)
            if len(shape) < max_parts:
                rec(shape, remaining - part, part)
    rec((), max_total, max_total)
    return out


# -- Schur module vs oracles -----------------------------------------------------


def test_schur_dim_matches_hook_content():
    for n in (2, 3):
        for shape in small_partitions(6, n):
            expected = hook_content_count(shape, n)
            for p in (3, 5):
                m = schur_module(n, shape, p)
                assert m.dim == expected, (n, shape, p)


def test_full_domain_expansion_same_rank():
    for n in (2, 3):
        for shape in small_partitions(6, n):
            if not shape:
                continue
            for p in (3, 5):
                full = full_box_matrix(n, shape, p)
                assert rank_mod_p(full, p) == schur_module(n, shape, p).dim, (
                    n,
                    shape,
                    p,
                )


def test_schur_rank_two_matches_symmetric_power():
    for p in (3, 5, 7):
        for m in range(7):
            schur = schur_module(2, (m,), p)
            chain = sl2_costandard(m, p)
            assert schur.weights == chain.weights
            assert np.array_equal(schur.mat, chain.mat)


def test_natural_and_wedge_frozen():
    v = schur_module(3, (1,), 3)
    assert v.dim == 3
    assert sorted(v.weights) == [-2, 0, 2]
    assert jordan_type(v) == (3,)
    assert phi(v).is_zero

    wedge = schur_module(3, (1, 1), 3)
    assert wedge.dim == 3
    assert sorted(wedge.weights) == [-2, 0, 2]
    assert jordan_type(wedge) == (3,)
    assert phi(wedge).is_zero

    det = schur_module(3, (1, 1, 1), 5)
    assert det.dim == 1
    assert det.weights == (0,)
    assert phi(det) == VerObject.simple(5, 0)


def test_steinberg_is_projective():
    for p in (3, 5, 7):
        assert is_projective(sl2_costandard(p - 1, p))
    st = schur_module(3, (4, 2), 3)
    assert st.dim == 27
    assert jordan_type(st) == (3,) * 9
    assert is_projective(st)


def test_schur_validation():
    with pytest.raises(ValueError, match="decreasing"):
        schur_module(3, (1, 2), 3)
    with pytest.raises(ValueError, match="rows"):
        schur_module(2, (1, 1, 1), 3)
    with pytest.raises(ValueError, match="2..4"):
        schur_module(5, (1,), 3)
    with pytest.raises(ValueError, match="nonnegative"):
        schur_module(3, (2, -1), 3)
    with pytest.raises(ValueError, match="cap"):
        schur_module(4, (8, 8), 3)
    assert SCHUR_CODOMAIN_CAP == 10_000


# -- chain model against the known restriction tables ----------------------------


FROZEN_P3_SUPPORT = {
    0: (0,),
    1: (-1, 1),
    3: (3,),
    4: (2, 4),
    6: (6,),
    7: (5, 7),
    9: (9,),
    10: (8, 10),
    12: (12,),
    13: (11, 13),
    15: (15,),
    16: (14, 16),
}

FROZEN_P5_STABLE = {
    0: ((0, 0),),
    3: ((-3, 3),),
    5: ((5, 0),),
    8: ((2, 3),),
    10: ((10, 0),),
}


def test_chain_model_restriction_table_p3():
    from verbench.capricorn_stable import support

    for n in range(17):
        stable = stable_form(graded_decompose(sl2_costandard(n, 3)))
        if n % 3 == 2:
            assert stable.is_zero, n
        else:
            assert support(stable) == FROZEN_P3_SUPPORT[n], n


def test_chain_model_restriction_table_p5():
    for n, blocks in FROZEN_P5_STABLE.items():
        stable = stable_form(graded_decompose(sl2_costandard(n, 5)))
        assert stable.blocks == blocks, n


# -- dispatch and summaries -------------------------------------------------------


def test_model_spec_build():
    spec = ModelSpec("A1", (4,))
    m = spec.build(3)
    assert stable_form(graded_decompose(m)) == StableObject(3, ((2, 1),))

    spec = ModelSpec("A2", (1, 1))
    assert spec.partition() == (2, 1)
    m = spec.build(5)
    assert m.dim == hook_content_count((2, 1), 3)

    assert ModelSpec("A3", (1, 0, 2)).partition() == (3, 2, 2)

    with pytest.raises(ValueError, match="model"):
        ModelSpec("B2", (1, 1))
    with pytest.raises(ValueError, match="coordinates"):
        ModelSpec("A2", (1,))
    with pytest.raises(ValueError, match="dominant"):
        ModelSpec("A1", (-1,))


def test_diagram_flip_invariance():
    """A weight and its reverse restrict identically (pinned diagram flip)."""
    for p in (3, 5):
        for c1, c2 in ((0, 2), (1, 3), (0, 5), (2, 5)):
            direct = graded_decompose(schur_module(3, (c1 + c2, c2), p))
            flipped = graded_decompose(schur_module(3, (c1 + c2, c1), p))
            assert direct.blocks == flipped.blocks, (p, c1, c2)


def test_build_uses_cheaper_orientation():
    m = ModelSpec("A2", (0, 15)).build(5)
    assert m.dim == hook_content_count((15,), 3)
    with pytest.raises(ValueError, match="cap"):
        schur_module(3, (15, 15), 5)


def test_model_phi_triple():
    fusion, stable, sup = model_phi(sl2_costandard(4, 3))
    assert fusion == VerObject.simple(3, 1)
    assert stable == StableObject(3, ((2, 1),))
    assert sup == GradedSuperSpace(((-1, 0, 1),))

    fusion, stable, sup = model_phi(sl2_costandard(1, 5))
    assert fusion == VerObject.simple(5, 1)
    assert stable == StableObject(5, ((-1, 1),))
    assert sup is None

    plain = NilMatrix(3, np.zeros((2, 2), dtype=np.int64))
    fusion, stable, sup = model_phi(plain)
    assert fusion == VerObject(3, (2, 0))
    assert stable is None and sup is None


def test_unique_small_block_check():
    assert unique_small_block_check(sl2_costandard(4, 3))
    assert unique_small_block_check(sl2_costandard(16, 3))
    assert unique_small_block_check(sl2_costandard(1, 3))
    assert not unique_small_block_check(sl2_costandard(8, 3))  # all projective
    assert not unique_small_block_check(sl2_costandard(2, 3))
