from fractions import Fraction

import pytest
from hypothesis import strategies as st

from linarr.arrangement import Arrangement
from linarr.corpus import C1, C2, C3, TRIANGLE
from linarr.exact_linalg import RatMatrix


def rref_oracle(rows, ncols):
    """Textbook Fraction Gauss-Jordan, kept deliberately naive as an independent check."""
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                a = M[i][c]
                M[i] = [x - a * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def rat_matrices(draw, max_rows=6, max_cols=6):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(1, max_cols))
    # small integer pool keeps rank deficiency common
    entry = st.one_of(st.integers(-3, 3), rationals)
    data = [[draw(entry) for _ in range(cols)] for _ in range(rows)]
    return RatMatrix.from_rows(data, cols)


@pytest.fixture(scope="session")
def c1():
    return Arrangement.from_coeffs(C1)


@pytest.fixture(scope="session")
def c2():
    return Arrangement.from_coeffs(C2)


@pytest.fixture(scope="session")
def c3():
    return Arrangement.from_coeffs(C3)


@pytest.fixture(scope="session")
def triangle():
    return Arrangement.from_coeffs(TRIANGLE)
