"""Matrix games, bimatrix games, and game forms, with their line-order
predicates: saddle points, pure Nash equilibria, the local-minimality
characterization for NE-free games, tightness and total tightness.

Rows and columns are indexed 1..m and 1..n.  The empty grid and every
single-line grid count as having a saddle point / equilibrium / being tight,
so the interesting families start at 2x2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

import numpy as np


class GameError(ValueError):
    pass


def _freeze_grid(rows) -> tuple:
    grid = tuple(tuple(r) for r in rows)
    if grid and any(len(r) != len(grid[0]) for r in grid):
        raise GameError("ragged grid")
    if grid and len(grid[0]) == 0:
        grid = ()
    return grid


@dataclass(frozen=True)
class MatrixGame:
    """Zero-sum payoffs: the row player maximizes, the column player
    minimizes."""

    a: tuple

    def __init__(self, a):
        object.__setattr__(self, "a", _freeze_grid(a))

    @property
    def n_rows(self) -> int:
        return len(self.a)

    @property
    def n_cols(self) -> int:
        return len(self.a[0]) if self.a else 0

    def entry(self, i: int, j: int):
        return self.a[i - 1][j - 1]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "MatrixGame":
        rs, cs = sorted(set(rows)), sorted(set(cols))
        return MatrixGame([[self.a[i - 1][j - 1] for j in cs] for i in rs])


@dataclass(frozen=True)
class BimatrixGame:
    """Payoff pair (a, b); both players maximize."""

    a: tuple
    b: tuple

    def __init__(self, a, b):
        ga, gb = _freeze_grid(a), _freeze_grid(b)
        if len(ga) != len(gb) or (ga and len(ga[0]) != len(gb[0])):
            raise GameError("payoff grids must share dimensions")
        object.__setattr__(self, "a", ga)
        object.__setattr__(self, "b", gb)

    @property
    def n_rows(self) -> int:
        return len(self.a)

    @property
    def n_cols(self) -> int:
        return len(self.a[0]) if self.a else 0

    def subgame(self, rows: Iterable[int], cols: Iterable[int]) -> "BimatrixGame":
        rs, cs = sorted(set(rows)), sorted(set(cols))
        return BimatrixGame(
            [[self.a[i - 1][j - 1] for j in cs] for i in rs],
            [[self.b[i - 1][j - 1] for j in cs] for i in rs],
        )


@dataclass(frozen=True)
class GameForm:
    """Outcome-valued grid: a game whose payoffs are not fixed yet."""

    outcomes: tuple
    alphabet: tuple

    def __init__(self, outcomes, alphabet: Optional[Sequence] = None):
        grid = _freeze_grid(outcomes)
        used = sorted({o for row in grid for o in row}, key=str)
        if alphabet is None:
            alpha = tuple(used)
        else:
            alpha = tuple(alphabet)
            if not set(used) <= set(alpha):
                raise GameError("grid uses outcomes outside the declared alphabet")
        object.__setattr__(self, "outcomes", grid)
        object.__setattr__(self, "alphabet", alpha)

    @property
    def n_rows(self) -> int:
        return len(self.outcomes)

    @property
    def n_cols(self) -> int:
        return len(self.outcomes[0]) if self.outcomes else 0

    def entry(self, i: int, j: int):
        return self.outcomes[i - 1][j - 1]

    def subform(self, rows: Iterable[int], cols: Iterable[int]) -> "GameForm":
        rs, cs = sorted(set(rows)), sorted(set(cols))
        return GameForm([[self.outcomes[i - 1][j - 1] for j in cs] for i in rs])


# ---------------------------------------------------------------------------
# saddle points


def saddle_points(m: MatrixGame) -> set[tuple[int, int]]:
    """Cells minimal in their row and maximal in their column (non-strict)."""
    out = set()
    a = m.a
    if not a:
        return out
    row_min = [min(r) for r in a]
    col_max = [max(a[i][j] for i in range(len(a))) for j in range(len(a[0]))]
    for i, r in enumerate(a):
        for j, x in enumerate(r):
            if x == row_min[i] and x == col_max[j]:
                out.add((i + 1, j + 1))
    return out


def has_sp(m: MatrixGame) -> bool:
    """The empty matrix and all single-line matrices have saddle points; a
    nonempty verdict is cross-checked against maxmin = minmax."""
    if m.n_rows == 0 or m.n_cols == 0:
        return True
    sps = saddle_points(m)
    maxmin = max(min(r) for r in m.a)
    minmax = min(max(m.a[i][j] for i in range(m.n_rows)) for j in range(m.n_cols))
    assert bool(sps) == (maxmin == minmax), "saddle point vs maxmin inconsistency"
    return bool(sps)


def sp_free_on(m: MatrixGame, rows, cols) -> bool:
    rs, cs = sorted(rows), sorted(cols)
    if not rs or not cs:
        return False
    sub = [[m.a[i - 1][j - 1] for j in cs] for i in rs]
    row_min = [min(r) for r in sub]
    for i, r in enumerate(sub):
        for j, x in enumerate(r):
            if x == row_min[i] and all(sub[k][j] <= x for k in range(len(sub))):
                return False
    return True


def sp_2x2_criterion(m: MatrixGame) -> bool:
    """SP-freeness of a 2x2 matrix via the interval test: the two diagonal
    value intervals are disjoint."""
    if m.n_rows != 2 or m.n_cols != 2:
        raise GameError("the interval criterion is for 2x2 matrices")
    d1 = sorted((m.a[0][0], m.a[1][1]))
    d2 = sorted((m.a[0][1], m.a[1][0]))
    return d1[1] < d2[0] or d2[1] < d1[0]


def every_2x2_has_sp(m: MatrixGame) -> bool:
    for ri, rj in combinations(range(1, m.n_rows + 1), 2):
        for ci, cj in combinations(range(1, m.n_cols + 1), 2):
            if not has_sp(m.submatrix((ri, rj), (ci, cj))):
                return False
    return True


def is_absolutely_determined(m: MatrixGame) -> bool:
    """Every submatrix has a saddle point (decided via the 2x2 reduction)."""
    return every_2x2_has_sp(m)


def is_absolutely_determined_bruteforce(m: MatrixGame) -> bool:
    for rs in _nonempty_subsets(m.n_rows):
        for cs in _nonempty_subsets(m.n_cols):
            if not has_sp(m.submatrix(rs, cs)):
                return False
    return True


def _nonempty_subsets(n: int):
    ids = range(1, n + 1)
    for k in range(1, n + 1):
        yield from combinations(ids, k)


# ---------------------------------------------------------------------------
# Nash equilibria


def nash_equilibria(g: BimatrixGame) -> set[tuple[int, int]]:
    out = set()
    a, b = g.a, g.b
    if not a:
        return out
    nr, nc = g.n_rows, g.n_cols
    col_max_a = [max(a[i][j] for i in range(nr)) for j in range(nc)]
    row_max_b = [max(r) for r in b]
    for i in range(nr):
        for j in range(nc):
            if a[i][j] == col_max_a[j] and b[i][j] == row_max_b[i]:
                out.add((i + 1, j + 1))
    return out


def has_ne(g: BimatrixGame) -> bool:
    if g.n_rows == 0 or g.n_cols == 0:
        return True
    return bool(nash_equilibria(g))


def zero_sum(m: MatrixGame) -> BimatrixGame:
    """Embed a matrix game: a as given, b = -a."""
    return BimatrixGame(m.a, [[-x for x in r] for r in m.a])


def is_locally_minimal_ne_free(g: BimatrixGame) -> bool:
    """NE-free, and deleting any single row or column creates an
    equilibrium.  Grids smaller than 2x2 always have equilibria."""
    if g.n_rows < 2 or g.n_cols < 2:
        return False
    if has_ne(g):
        return False
    rows = range(1, g.n_rows + 1)
    cols = range(1, g.n_cols + 1)
    for i in rows:
        if not has_ne(g.subgame([r for r in rows if r != i], cols)):
            return False
    for j in cols:
        if not has_ne(g.subgame(rows, [c for c in cols if c != j])):
            return False
    return True


@dataclass(frozen=True)
class Theorem3Witness:
    """The two permutations certifying local minimality of an NE-free game:
    sigma sends each row to the column where b peaks, delta sends each
    column to the row where a peaks; their graphs are disjoint."""

    sigma: tuple  # sigma[i-1] = column for row i
    delta: tuple  # delta[j-1] = row for column j
    k: int


def _unique_argmax(values: Sequence) -> Optional[int]:
    best = max(values)
    hits = [i for i, v in enumerate(values) if v == best]
    return hits[0] if len(hits) == 1 else None


def _is_second_largest(values: Sequence, idx: int) -> bool:
    """Exactly one entry strictly above values[idx]; ties at the value
    itself are fine."""
    return sum(1 for v in values if v > values[idx]) == 1


def theorem3_check(g: BimatrixGame) -> Optional[Theorem3Witness]:
    """Local-minimality criterion for NE-free bimatrix games.

    Requires a square game; sigma and delta are forced by the unique line
    maxima of b and a.  The cross conditions then say: at each column peak
    of a the b-value is second largest in its row, and at each row peak of b
    the a-value is second largest in its column.  (The two payoffs swap
    roles across the conditions; that pairing is what the worked 3x3
    instance and the deletion argument actually use.)"""
    k = g.n_rows
    if k != g.n_cols or k < 2:
        return None
    a, b = g.a, g.b
    delta = []
    for j in range(k):
        col = [a[i][j] for i in range(k)]
        i = _unique_argmax(col)
        if i is None:
            return None
        if not _is_second_largest(b[i], j):
            return None
        delta.append(i + 1)
    sigma = []
    for i in range(k):
        j = _unique_argmax(b[i])
        if j is None:
            return None
        if not _is_second_largest([a[r][j] for r in range(k)], i):
            return None
        sigma.append(j + 1)
    # graphs must be disjoint: (i, sigma(i)) != (delta(j), j) for all i, j
    gr_sigma = {(i + 1, sigma[i]) for i in range(k)}
    gr_delta = {(delta[j], j + 1) for j in range(k)}
    if gr_sigma & gr_delta:
        return None
    return Theorem3Witness(sigma=tuple(sigma), delta=tuple(delta), k=k)


def make_ne_free_3x3() -> BimatrixGame:
    """Concrete integer instance of the 3x3 NE-free inequality system."""
    a = [[2, 3, 1],
         [3, 1, 2],
         [1, 2, 3]]
    b = [[3, 2, 1],
         [2, 1, 3],
         [1, 3, 2]]
    return BimatrixGame(a, b)


def ne_free_3x3_inequalities_hold(g: BimatrixGame) -> bool:
    """The twelve strict/weak inequalities defining the 3x3 instance."""
    a, b = g.a, g.b
    byrow = (
        b[0][0] > b[0][1] >= b[0][2],
        b[1][2] > b[1][0] >= b[1][1],
        b[2][1] > b[2][2] >= b[2][0],
    )
    bycol = (
        a[1][0] > a[0][0] >= a[2][0],
        a[0][1] > a[2][1] >= a[1][1],
        a[2][2] > a[1][2] >= a[0][2],
    )
    return all(byrow) and all(bycol)


def matching_pennies() -> BimatrixGame:
    return BimatrixGame([[1, 0], [0, 1]], [[0, 1], [1, 0]])


# ---------------------------------------------------------------------------
# game forms: tightness


def _outcome_bits(form: GameForm) -> tuple[list[int], list[int], int]:
    """Row and column outcome sets as bitmasks over the used alphabet."""
    used = sorted({o for row in form.outcomes for o in row}, key=str)
    idx = {o: i for i, o in enumerate(used)}
    rows = []
    for r in form.outcomes:
        m = 0
        for o in r:
            m |= 1 << idx[o]
        rows.append(m)
    cols = []
    for j in range(form.n_cols):
        m = 0
        for i in range(form.n_rows):
            m |= 1 << idx[form.outcomes[i][j]]
        cols.append(m)
    return rows, cols, len(used)


def is_tight(form: GameForm) -> tuple[bool, Optional[frozenset]]:
    """Tightness via the binary win-partition scan: for every outcome subset
    A either some row lies inside A or some column inside its complement.
    On failure the violating A is the witness.  Empty and single-line forms
    are tight."""
    if form.n_rows == 0 or form.n_cols == 0:
        return True, None
    rows, cols, k = _outcome_bits(form)
    if k > 20:
        raise GameError(f"{k} outcomes: the partition scan is capped at 20")
    used = sorted({o for row in form.outcomes for o in row}, key=str)
    full = (1 << k) - 1
    for amask in range(1 << k):
        if any(r & ~amask == 0 for r in rows):
            continue
        comp = full & ~amask
        if any(c & ~comp == 0 for c in cols):
            continue
        return False, frozenset(used[i] for i in range(k) if (amask >> i) & 1)
    return True, None


def tight_on(form: GameForm, rows, cols) -> bool:
    rs, cs = sorted(rows), sorted(cols)
    if not rs or not cs:
        return True
    return is_tight(form.subform(rs, cs))[0]


def is_totally_tight(form: GameForm) -> bool:
    """Every 2x2 subform tight; tightness of all 2x2s is equivalent to every
    subform being tight."""
    out = form.outcomes
    for i1, i2 in combinations(range(form.n_rows), 2):
        for j1, j2 in combinations(range(form.n_cols), 2):
            if not _tight_2x2(out[i1][j1], out[i1][j2], out[i2][j1], out[i2][j2]):
                return False
    return True


def _tight_2x2(w11, w12, w21, w22) -> bool:
    # constant row or constant column
    return w11 == w12 or w21 == w22 or w11 == w21 or w12 == w22


def is_totally_tight_bruteforce(form: GameForm) -> bool:
    for rs in _nonempty_subsets(form.n_rows):
        for cs in _nonempty_subsets(form.n_cols):
            if not is_tight(form.subform(rs, cs))[0]:
                return False
    return True


def not_tight_2x2_type(form: GameForm) -> Optional[str]:
    """Which of the three minimal not-tight 2x2 shapes a form matches, up to
    outcome renaming and row/column swaps; None when the form is tight.

    The shapes are told apart by how many distinct outcomes they use: the
    flip (2), the one-repeat diagonal (3), and the all-distinct square (4).
    In each the two diagonal outcome sets are disjoint."""
    if form.n_rows != 2 or form.n_cols != 2:
        raise GameError("the catalog is for 2x2 forms")
    o = form.outcomes
    if _tight_2x2(o[0][0], o[0][1], o[1][0], o[1][1]):
        return None
    distinct = len({o[0][0], o[0][1], o[1][0], o[1][1]})
    return {2: "diag-2", 3: "diag-3", 4: "diag-4"}[distinct]


def merge_outcomes(form: GameForm, blocks: Sequence[Iterable]) -> GameForm:
    """Coarsen the outcome alphabet; block i becomes the merged outcome i+1
    (labels "m1", "m2", ...).  Tightness is preserved by merging."""
    alpha = set(form.alphabet)
    seen = set()
    mapping = {}
    for i, blk in enumerate(blocks):
        s = set(blk)
        if not s:
            raise GameError("merge blocks must be nonempty")
        if s & seen:
            raise GameError("merge blocks must be disjoint")
        seen |= s
        for o in s:
            mapping[o] = f"m{i + 1}"
    if seen != alpha:
        raise GameError("merge blocks must cover the alphabet exactly")
    return GameForm([[mapping[o] for o in row] for row in form.outcomes])


# ---------------------------------------------------------------------------
# fixtures


def sp_fixture_4x4() -> MatrixGame:
    return MatrixGame([
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [1, 1, 0, 1],
        [1, 1, 1, 0],
    ])


def two_sp_fixture_2x3() -> MatrixGame:
    return MatrixGame([[0, 1, 0], [0, 0, 1]])


def g1() -> GameForm:
    return GameForm([["w1", "w1"], ["w2", "w3"]])


def g2() -> GameForm:
    return GameForm([["w1", "w1", "w2", "w2"], ["w3", "w4", "w3", "w4"]])


def g3() -> GameForm:
    return GameForm([["w1", "w1", "w3"], ["w1", "w2", "w2"], ["w3", "w2", "w3"]])


def g4() -> GameForm:
    return GameForm([["w1", "w1", "w3"], ["w1", "w1", "w2"], ["w4", "w2", "w2"]])


def g5() -> GameForm:
    return GameForm([
        ["w1", "w2", "w1", "w2"],
        ["w3", "w4", "w4", "w3"],
        ["w1", "w4", "w1", "w5"],
        ["w3", "w2", "w6", "w2"],
    ])


def g6() -> GameForm:
    return GameForm([["w1", "w1"], ["w1", "w2"]])


def g7() -> GameForm:
    return GameForm([["w1", "w2"], ["w2", "w1"]])


def g8() -> GameForm:
    return GameForm([["w1", "w1", "w2"], ["w3", "w4", "w3"]])


def g9() -> GameForm:
    return GameForm([["w1", "w1", "w2"], ["w4", "w5", "w2"], ["w4", "w3", "w3"]])


def catalog_not_tight_2x2() -> tuple[GameForm, GameForm, GameForm]:
    """The three minimal not-tight 2x2 forms."""
    return (
        GameForm([["w1", "w2"], ["w2", "w1"]]),
        GameForm([["w1", "w2"], ["w3", "w1"]]),
        GameForm([["w1", "w2"], ["w3", "w4"]]),
    )


def ab_form_4x4() -> GameForm:
    """Two-outcome 4x4 form that is not tight, becomes tight when the last
    row or column goes, and stays not tight under any other single-line
    deletion."""
    a, b = "a", "b"
    return GameForm([
        [a, b, a, b],
        [b, a, a, b],
        [a, a, a, b],
        [b, b, b, a],
    ])


# ---------------------------------------------------------------------------
# exhaustive scans (vectorized where the counting is heavy)


def iter_matrices(n_rows: int, n_cols: int, alphabet: Sequence) -> "np.ndarray":
    """All grids over the alphabet as one (count, n_rows, n_cols) array."""
    k = len(alphabet)
    total = k ** (n_rows * n_cols)
    idx = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n_rows * n_cols), dtype=np.int8)
    for pos in range(n_rows * n_cols):
        digits[:, pos] = (idx // (k ** pos)) % k
    arr = np.asarray(alphabet, dtype=np.int8)[digits]
    return arr.reshape(total, n_rows, n_cols)


def sp_free_mask(batch: "np.ndarray") -> "np.ndarray":
    """Boolean mask of SP-free matrices in a (B, m, n) batch."""
    row_min = batch.min(axis=2, keepdims=True)
    col_max = batch.max(axis=1, keepdims=True)
    sp = (batch == row_min) & (batch == col_max)
    return ~sp.any(axis=(1, 2))


def scan_sp_free_convexity(max_size: int = 4, alphabet: Sequence = (0, 1, 2),
                           chunk: int = 1 << 16) -> list:
    """Every SP-free matrix strictly larger than 2x2 (over the alphabet, up
    to max_size in each dimension) must admit a line deletion that stays
    SP-free.  Returns the violating matrices (expected: none)."""
    violations = []
    k = len(alphabet)
    alpha = np.asarray(alphabet, dtype=np.int8)
    for m in range(2, max_size + 1):
        for n in range(2, max_size + 1):
            if m * n <= 4:
                continue
            total = k ** (m * n)
            powers = k ** np.arange(m * n)
            for start in range(0, total, chunk):
                idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
                digits = (idx[:, None] // powers[None, :]) % k
                batch = alpha[digits].reshape(-1, m, n)
                free = sp_free_mask(batch)
                cand = batch[free]
                if not cand.size:
                    continue
                ok = np.zeros(len(cand), dtype=bool)
                for i in range(m):
                    sub = np.delete(cand, i, axis=1)
                    ok |= sp_free_mask(sub)
                for j in range(n):
                    sub = np.delete(cand, j, axis=2)
                    ok |= sp_free_mask(sub)
                for bad in cand[~ok]:
                    violations.append(MatrixGame(bad.tolist()))
    return violations


def scan_shapley(num: int = 10_000, max_size: int = 6, entries: Sequence = (0, 1, 2, 3, 4),
                 seed: int = 0) -> list:
    """Random matrices: whenever every 2x2 submatrix has a SP the matrix
    must have one, and every SP-free matrix must contain an SP-free 2x2
    (the same claim read from both sides, so most draws are informative).
    Returns violations (expected: none)."""
    rng = np.random.default_rng(seed)
    violations = []
    for _ in range(num):
        m = rng.integers(1, max_size + 1)
        n = rng.integers(1, max_size + 1)
        grid = rng.choice(entries, size=(m, n))
        game = MatrixGame(grid.tolist())
        if every_2x2_has_sp(game):
            if not has_sp(game):
                violations.append(game)
        elif not has_sp(game):
            if every_2x2_has_sp(game):
                violations.append(game)
    return violations


def scan_zero_sum_no_3x3_locally_minimal(alphabet: Sequence = (0, 1, 2)) -> list:
    """Exhaustive over 3x3 zero-sum bimatrix games with entries in the
    alphabet: none may be locally minimal NE-free."""
    hits = []
    for grid in iter_matrices(3, 3, alphabet):
        g = zero_sum(MatrixGame(grid.tolist()))
        if is_locally_minimal_ne_free(g):
            hits.append(g)
    return hits
