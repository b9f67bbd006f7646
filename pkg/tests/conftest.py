import hypothesis.strategies as st
import pytest
from hypothesis import settings

from newton_irred import IntPoly, parse_poly

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

SAMPLE11 = "16 + 4*x - 4*x^2 + 2*x^3 - 2*x^4 + x^5 + 2*x^6 - x^7 - x^8 + 16*x^9 + 4*x^10 + 32*x^11"


@pytest.fixture
def sample11():
    return parse_poly(SAMPLE11)


def polys(max_degree=6, bound=100, nonzero_ends=False, min_degree=0):
    """Hypothesis strategy for IntPoly values."""

    def build(cs):
        if nonzero_ends:
            cs[0] = cs[0] or 1
            cs[-1] = cs[-1] or -1
        return IntPoly(cs)

    coeff = st.integers(-bound, bound)
    return st.lists(coeff, min_size=min_degree + 1, max_size=max_degree + 1).map(build)


small_primes = st.sampled_from([2, 3, 5, 7, 11])
