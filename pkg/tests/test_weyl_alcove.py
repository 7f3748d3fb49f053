"""Alcove combinatorics tests.

Root-system tables (positive root counts, Coxeter numbers, Weyl orders,
Cartan determinants) act as independent oracles for the construction; a
second, simple-wall-only descent strategy cross-checks the fundamental
representative.
"""

import random

import pytest

from verbench.weyl_alcove import (
    ExtAffineElement,
    Wall,
    alcove_position,
    dot_act,
    ext_block_witness,
    ext_block_witnesses,
    fundamental_representative,
    is_dominant,
    is_p_regular,
    length,
    root_datum,
    sign_epsilon,
)

# (type, #positive roots, Coxeter number, |W|, det of Cartan matrix)
TABLE = [
    ("A1", 1, 2, 2, 2),
    ("A2", 3, 3, 6, 3),
    ("A3", 6, 4, 24, 4),
    ("B2", 4, 4, 8, 2),
    ("B3", 9, 6, 48, 2),
    ("C3", 9, 6, 48, 2),
    ("D4", 12, 6, 192, 4),
    ("A5", 15, 6, 720, 6),
    ("D6", 30, 10, 23040, 4),
    ("G2", 6, 6, 12, 1),
    ("F4", 24, 12, 1152, 1),
    ("E6", 36, 12, 51840, 3),
]


def det_int(m):
    m = [list(r) for r in m]
    n = len(m)
    from fractions import Fraction

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
    return int(det)


@pytest.mark.parametrize("ct,npos,h,worder,cdet", TABLE)
def test_root_system_tables(ct, npos, h, worder, cdet):
    rd = root_datum(ct)
    assert rd.num_pos_roots == npos
    assert rd.coxeter_number == h
    assert rd.weyl_order == worder
    assert det_int(rd.cartan) == cdet
    # rho pairs to 1 with every simple coroot by construction; the highest
    # coroot pairs to h - 1
    assert sum(rd.pos_coroots[rd.alpha0]) == h - 1
    # 2 rho^vee is the sum of the positive coroots
    assert rd.two_rho_vee == tuple(
        sum(cc[j] for cc in rd.pos_coroots) for j in range(rd.rank)
    )


@pytest.mark.parametrize("ct", ["A1", "A2", "B2", "G2", "B3", "D4"])
def test_weyl_enumeration(ct):
    rd = root_datum(ct)
    assert len(rd.weyl) == rd.weyl_order
    assert rd.weyl[0] == tuple(
        tuple(int(i == j) for j in range(rd.rank)) for i in range(rd.rank)
    )


def test_weyl_order_cap():
    with pytest.raises(ValueError):
        root_datum("E7")
    with pytest.raises(ValueError):
        root_datum("A8")
    with pytest.raises(ValueError):
        root_datum("E5")


def test_dot_action_examples():
    rd = root_datum("A1")
    s0 = rd.wall_reflection(Wall(0, 1))
    assert dot_act(rd, s0, (0,), 3) == (4,)
    # the finite reflection about level 0
    s = rd.wall_reflection(Wall(0, 0))
    assert dot_act(rd, s, (0,), 3) == (-2,)


def test_dot_action_is_group_action():
    rng = random.Random(11)
    rd = root_datum("A2")
    p = 5
    for _ in range(40):
        walls = [
            Wall(rng.randrange(rd.num_pos_roots), rng.randint(-2, 2))
            for _ in range(3)
        ]
        a, b, c = (rd.wall_reflection(w) for w in walls)
        lam = tuple(rng.randint(-8, 8) for _ in range(2))
        lhs = dot_act(rd, (a * b) * c, lam, p)
        assert lhs == dot_act(rd, a * (b * c), lam, p)
        assert lhs == dot_act(rd, a, dot_act(rd, b, dot_act(rd, c, lam, p), p), p)
        assert dot_act(rd, a, dot_act(rd, a.inverse(), lam, p), p) == lam


def test_alcove_positions_a1_p3():
    rd = root_datum("A1")
    assert alcove_position(rd, (0,), 3) == "interior"
    assert alcove_position(rd, (1,), 3) == "interior"
    assert alcove_position(rd, (2,), 3) == "boundary"
    assert alcove_position(rd, (-1,), 3) == "boundary"
    assert alcove_position(rd, (4,), 3) == "exterior"


def test_fundamental_representative_examples():
    rd = root_datum("A1")
    lam0, walls = fundamental_representative(rd, (4,), 3)
    assert lam0 == (0,)
    assert len(walls) == 1
    lam0, walls = fundamental_representative(rd, (10,), 3)
    assert lam0 == (0,)
    assert len(walls) == 3
    lam0, walls = fundamental_representative(rd, (1,), 3)
    assert lam0 == (1,) and walls == []


def test_representative_path_composes():
    rng = random.Random(5)
    for ct, p in [("A1", 3), ("A2", 5), ("B2", 7)]:
        rd = root_datum(ct)
        for _ in range(30):
            lam = tuple(rng.randint(-12, 12) for _ in range(rd.rank))
            lam0, walls = fundamental_representative(rd, lam, p)
            assert alcove_position(rd, lam0, p) != "exterior"
            x = rd.identity_element()
            for w in walls:
                x = x * rd.wall_reflection(w)
            assert dot_act(rd, x, lam0, p) == lam


def simple_wall_descent(rd, lam, p):
    """Alternative strategy: only reflect in the walls of A_0 itself."""
    cur = tuple(lam)
    for _ in range(100_000):
        z = tuple(c + 1 for c in cur)
        moved = False
        for i in range(rd.rank):
            v = z[i]  # pairing with a simple coroot
            if v < 0:
                cur = tuple(
                    c - v * b for c, b in zip(cur, rd.pos_roots[rd.pos_root_coords.index(
                        tuple(int(k == i) for k in range(rd.rank)))])
                )
                moved = True
                break
        if moved:
            continue
        v0 = rd.pair_coroot(z, rd.alpha0)
        if v0 > p:
            beta = rd.pos_roots[rd.alpha0]
            cur = tuple(c - (v0 - p) * b for c, b in zip(cur, beta))
            continue
        return cur
    raise AssertionError("descent failed")


def test_representative_strategy_independent():
    rng = random.Random(17)
    for ct, p in [("A1", 3), ("A2", 5), ("B2", 5), ("G2", 7)]:
        rd = root_datum(ct)
        for _ in range(25):
            lam = tuple(rng.randint(-15, 15) for _ in range(rd.rank))
            lam0, _ = fundamental_representative(rd, lam, p)
            assert lam0 == simple_wall_descent(rd, lam, p), (ct, p, lam)


def test_regularity():
    rd = root_datum("A1")
    assert is_p_regular(rd, (0,), 3)
    assert not is_p_regular(rd, (2,), 3)
    assert not is_p_regular(rd, (5,), 3)
    # regular iff the representative is interior
    rng = random.Random(3)
    rd2 = root_datum("A2")
    for _ in range(40):
        lam = tuple(rng.randint(-10, 10) for _ in range(2))
        lam0, _ = fundamental_representative(rd2, lam, 5)
        assert is_p_regular(rd2, lam, 5) == (alcove_position(rd2, lam0, 5) == "interior")


def test_length():
    rd = root_datum("A2")
    assert length(rd, rd.identity_element()) == 0
    for i in range(rd.rank):
        w = rd.wall_reflection(Wall(rd.pos_root_coords.index(
            tuple(int(k == i) for k in range(rd.rank))), 0))
        assert length(rd, w) == 1
    # dominant translations: l(t_mu) = <mu, 2 rho^vee>
    for mu in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        t = rd.translation(mu)
        expect = sum(m * r for m, r in zip(mu, rd.two_rho_vee))
        assert length(rd, t) == expect
    # the affine simple reflection has length 1
    s0 = rd.wall_reflection(Wall(rd.alpha0, 1))
    assert length(rd, s0) == 1
    # anti-invariance under inverse
    assert length(rd, s0.inverse()) == 1


def test_length_parity_is_epsilon_on_weyl():
    rd = root_datum("B2")
    for w in rd.weyl:
        y = ExtAffineElement(w, (0,) * rd.rank)
        assert sign_epsilon(rd, y) == (-1) ** length(rd, y)


def test_epsilon_translations():
    rd = root_datum("A2")
    assert sign_epsilon(rd, rd.translation((3, -2))) == 1


def test_ext_block_witness_a1_p3():
    rd = root_datum("A1")
    y = ext_block_witness(rd, (1,), 3)
    assert y is not None and sign_epsilon(rd, y) == -1
    assert dot_act(rd, y, (0,), 3) == (1,)
    assert ext_block_witness(rd, (2,), 3) is None
    y0 = ext_block_witness(rd, (0,), 3)
    assert y0 is not None and y0.is_identity
    with pytest.raises(ValueError):
        ext_block_witness(rd, (-1,), 3)


def test_ext_block_membership_a1_p3():
    rd = root_datum("A1")
    members = [n for n in range(17) if ext_block_witness(rd, (n,), 3) is not None]
    assert members == [0, 1, 3, 4, 6, 7, 9, 10, 12, 13, 15, 16]


def test_witness_uniqueness_and_epsilon_consistency():
    # p > h: the witness solving y . 0 = lam0 is unique outright
    for ct, p, bound in [("A1", 3, 20), ("A2", 5, 8), ("B2", 7, 6)]:
        rd = root_datum(ct)
        lams = (
            [(n,) for n in range(bound)]
            if rd.rank == 1
            else [(a, b) for a in range(bound) for b in range(bound)]
        )
        for lam in lams:
            found = ext_block_witnesses(rd, lam, p)
            assert len(found) <= 1, (ct, p, lam)


def test_dominance_helper():
    assert is_dominant((0, 2))
    assert not is_dominant((1, -1))
