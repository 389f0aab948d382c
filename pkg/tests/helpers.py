"""Shared test utilities: independent oracles and hypothesis strategies."""

from itertools import combinations, combinations_with_replacement
from math import gcd

from hypothesis import strategies as st

from wittgrass import FramedDiagram, enumerate_even


def all_row_vectors(d, e):
    """Every weakly decreasing length-d vector with entries in 0..e."""
    return combinations_with_replacement(range(e, -1, -1), d)


def _runs(values):
    out = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] != values[start]:
            out.append((values[start], i - start))
            start = i
    return out


def evenness_oracle(d, e, rows):
    """Evenness by walking the boundary of the region inside the frame.

    The boundary splits into maximal vertical segments (runs of equal row
    lengths) and maximal horizontal segments (runs of equal column heights).
    A segment strictly inside the frame must have even length; segments on
    the frame edge are free.  This is a different decomposition from the
    jump-tuple conditions, so it serves as an independent oracle.
    """
    for value, length in _runs(list(rows)):
        if 0 < value < e and length % 2:
            return False
    heights = [sum(1 for r in rows if r >= c) for c in range(1, e + 1)]
    for value, length in _runs(heights):
        if 0 < value < d and length % 2:
            return False
    return True


def minors_gcd(M, k):
    """gcd of all k x k minors of M (list of lists), via sympy determinants."""
    import sympy

    m = len(M)
    n = len(M[0]) if m else 0
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = sympy.Matrix([[M[i][j] for j in cols] for i in rows])
            g = gcd(g, int(sub.det()))
    return g


def integer_solvable_oracle(M, b):
    """Whether M x = b has an integer solution, by the minors-gcd criterion.

    Solvable over the integers iff the augmented matrix has the same rank
    and the same gcd of k x k minors as M for every k up to the rank.
    Exponential in the matrix size; only for small test matrices.
    """
    import sympy

    A = sympy.Matrix(M)
    aug = A.row_join(sympy.Matrix([[v] for v in b]))
    r = A.rank()
    if aug.rank() != r:
        return False
    Ml = [list(row) for row in M]
    augl = [list(row) + [bv] for row, bv in zip(M, b)]
    for k in range(1, r + 1):
        if minors_gcd(Ml, k) != minors_gcd(augl, k):
            return False
    return True


@st.composite
def framed_diagrams(draw, max_d=6, max_e=6, min_d=1, min_e=1):
    d = draw(st.integers(min_d, max_d))
    e = draw(st.integers(min_e, max_e))
    rows = draw(st.lists(st.integers(0, e), min_size=d, max_size=d))
    return FramedDiagram(d, e, tuple(sorted(rows, reverse=True)))


@st.composite
def even_diagrams(draw, max_d=6, max_e=6, min_d=1, min_e=1):
    d = draw(st.integers(min_d, max_d))
    e = draw(st.integers(min_e, max_e))
    return draw(st.sampled_from(enumerate_even(d, e)))


@st.composite
def int_matrices(draw, max_dim=5, max_entry=6):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    return draw(st.lists(
        st.lists(st.integers(-max_entry, max_entry), min_size=n, max_size=n),
        min_size=m, max_size=m))
