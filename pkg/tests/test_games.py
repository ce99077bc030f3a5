import random
from itertools import combinations, product

import pytest

from convexfam import games as gm
from convexfam import poset as ps
from convexfam.families import predicate
from convexfam.games import BimatrixGame, GameError, MatrixGame
from convexfam.poset import LINE, GroundPoset

from oracles import saddle_points_bruteforce


def test_grid_validation():
    with pytest.raises(GameError):
        MatrixGame([[1, 2], [3]])
    with pytest.raises(GameError):
        BimatrixGame([[1]], [[1, 2]])
    assert MatrixGame([]).n_rows == 0
    assert MatrixGame([[]]).n_rows == 0


def test_saddle_points_examples():
    assert gm.saddle_points(gm.sp_fixture_4x4()) == set()
    assert not gm.has_sp(gm.sp_fixture_4x4())
    assert gm.saddle_points(MatrixGame([[0, 1], [1, 0]])) == set()
    row = MatrixGame([[3, 1, 2]])
    assert (1, 2) in gm.saddle_points(row) and gm.has_sp(row)
    assert gm.has_sp(MatrixGame([]))  # the empty matrix, by convention


def test_saddle_points_match_bruteforce():
    rng = random.Random(41)
    for _ in range(300):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(0, 3) for _ in range(nc)] for _ in range(nr)]
        m = MatrixGame(a)
        assert gm.saddle_points(m) == saddle_points_bruteforce(a)


def test_sp_2x2_criterion_exhaustive():
    for grid in product(range(4), repeat=4):
        m = MatrixGame([[grid[0], grid[1]], [grid[2], grid[3]]])
        assert gm.sp_2x2_criterion(m) == (not gm.has_sp(m))
    assert gm.sp_2x2_criterion(MatrixGame([[0, 2], [3, 1]]))
    assert not gm.sp_2x2_criterion(MatrixGame([[1, 1], [1, 1]]))
    with pytest.raises(GameError):
        gm.sp_2x2_criterion(MatrixGame([[1, 2, 3]]))


def test_sp_fixture_deletion_pattern():
    m = gm.sp_fixture_4x4()
    rows = cols = range(1, 5)
    for line in (3, 4):
        assert gm.has_sp(m.submatrix([r for r in rows if r != line], cols))
        assert gm.has_sp(m.submatrix(rows, [c for c in cols if c != line]))
    for line in (1, 2):
        assert not gm.has_sp(m.submatrix([r for r in rows if r != line], cols))
        assert not gm.has_sp(m.submatrix(rows, [c for c in cols if c != line]))


def test_two_sp_fixture():
    m = gm.two_sp_fixture_2x3()
    assert gm.saddle_points(m) == {(1, 1), (2, 1)}
    assert not gm.has_sp(m.submatrix((1, 2), (2, 3)))


def test_absolutely_determined_cross_check():
    rng = random.Random(42)
    for _ in range(200):
        nr, nc = rng.randint(1, 3), rng.randint(1, 3)
        m = MatrixGame([[rng.randint(0, 2) for _ in range(nc)] for _ in range(nr)])
        assert gm.is_absolutely_determined(m) == \
            gm.is_absolutely_determined_bruteforce(m)


def test_nash_equilibria_examples():
    zs = gm.zero_sum(gm.sp_fixture_4x4())
    assert gm.nash_equilibria(zs) == set()
    one = BimatrixGame([[5]], [[7]])
    assert gm.nash_equilibria(one) == {(1, 1)}
    assert gm.has_ne(BimatrixGame([], []))


def test_zero_sum_ne_equals_sp():
    rng = random.Random(43)
    for _ in range(200):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(0, 3) for _ in range(nc)] for _ in range(nr)]
        m = MatrixGame(a)
        assert gm.nash_equilibria(gm.zero_sum(m)) == gm.saddle_points(m)


def test_ne_free_3x3_instance():
    g = gm.make_ne_free_3x3()
    assert gm.ne_free_3x3_inequalities_hold(g)
    assert not gm.has_ne(g)
    assert gm.is_locally_minimal_ne_free(g)
    # deleting the first row makes the old (i3, j2) an equilibrium
    sub = g.subgame([2, 3], [1, 2, 3])
    assert (2, 2) in gm.nash_equilibria(sub)
    for rs in combinations(range(1, 4), 2):
        for cs in combinations(range(1, 4), 2):
            assert gm.has_ne(g.subgame(rs, cs))


def test_theorem3_on_fixture_and_pennies():
    w = gm.theorem3_check(gm.make_ne_free_3x3())
    assert w is not None and w.k == 3
    assert w.sigma == (1, 3, 2) and w.delta == (2, 1, 3)
    wp = gm.theorem3_check(gm.matching_pennies())
    assert wp is not None and wp.k == 2
    assert gm.is_locally_minimal_ne_free(gm.matching_pennies())
    # a game with an equilibrium fails both routes
    g = BimatrixGame([[1, 0], [0, 0]], [[1, 0], [0, 0]])
    assert gm.has_ne(g)
    assert not gm.is_locally_minimal_ne_free(g)
    assert gm.theorem3_check(g) is None


def tie_free_game(rng, k, lo=0, hi=99):
    while True:
        a = [[rng.randint(lo, hi) for _ in range(k)] for _ in range(k)]
        b = [[rng.randint(lo, hi) for _ in range(k)] for _ in range(k)]
        ok = True
        for g in (a, b):
            for r in g:
                ok &= len(set(r)) == k
            for j in range(k):
                ok &= len({g[i][j] for i in range(k)}) == k
        if ok:
            return BimatrixGame(a, b)


def planted_lm_game(rng, k):
    """Random game built to satisfy the local-minimality criterion."""
    while True:
        sigma = list(range(k))
        delta = list(range(k))
        rng.shuffle(sigma)
        rng.shuffle(delta)
        if any((i, sigma[i]) == (delta[j], j)
               for i in range(k) for j in range(k)):
            continue
        inv_sigma = [0] * k
        inv_delta = [0] * k
        for i in range(k):
            inv_sigma[sigma[i]] = i
        for j in range(k):
            inv_delta[delta[j]] = j
        a = [[0] * k for _ in range(k)]
        b = [[0] * k for _ in range(k)]
        for j in range(k):
            vals = rng.sample(range(10, 70), k)
            for i in range(k):
                a[i][j] = vals[i]
            a[delta[j]][j] = 95
            a[inv_sigma[j]][j] = 80
        for i in range(k):
            vals = rng.sample(range(10, 70), k)
            for j in range(k):
                b[i][j] = vals[j]
            b[i][sigma[i]] = 95
            b[i][inv_delta[i]] = 80
        g = BimatrixGame(a, b)
        ok = True
        for grid in (a, b):
            for r in grid:
                ok &= len(set(r)) == k
            for j in range(k):
                ok &= len({grid[i][j] for i in range(k)}) == k
        if ok:
            return g


def test_theorem3_equivalence_sampled():
    rng = random.Random(44)
    positives = 0
    for trial in range(300):
        k = 3 if trial % 2 else 4
        g = planted_lm_game(rng, k) if trial % 3 == 0 else tie_free_game(rng, k)
        brute = gm.is_locally_minimal_ne_free(g)
        thm = gm.theorem3_check(g) is not None
        assert brute == thm, (g.a, g.b)
        positives += brute
    assert positives >= 80  # the planted third guarantees real positives


def test_shapley_scan_small():
    assert gm.scan_shapley(num=1500, seed=3) == []


def test_sp_free_convexity_scan_small():
    assert gm.scan_sp_free_convexity(max_size=3) == []


def test_sp_free_family_on_fixture_ground():
    gp = GroundPoset(gm.sp_fixture_4x4(), LINE)
    rep = ps.classify(predicate("sp-free"), gp)
    assert rep.convex and not rep.strongly_convex
    assert rep.witnesses["strongly_convex"] == \
        (gp.top(), gp.line_element([1, 2], [1, 2]))


def test_has_sp_family_on_two_sp_ground():
    gp = GroundPoset(gm.two_sp_fixture_2x3(), LINE)
    rep = ps.classify(predicate("has-sp"), gp)
    assert rep.strongly_convex and not rep.weakly_hereditary
    assert rep.minima == (gp.bottom(),)


def test_matrices_with_sp_strongly_convex_random():
    rng = random.Random(45)
    for _ in range(120):
        nr, nc = rng.randint(1, 3), rng.randint(1, 3)
        m = MatrixGame([[rng.randint(0, 2) for _ in range(nc)] for _ in range(nr)])
        if not gm.has_sp(m):
            continue
        rep = ps.classify(predicate("has-sp"), GroundPoset(m, LINE))
        assert rep.strongly_convex
