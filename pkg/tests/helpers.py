from hypothesis import strategies as st

from gpbalance.core import GPParams
from gpbalance.pathform import theorem_bound


@st.composite
def gp_params(draw, max_n=40, min_k=1):
    n = draw(st.integers(max(3, 2 * min_k + 1), max_n))
    k = draw(st.integers(min_k, (n - 1) // 2))
    return GPParams(n, k)


def covered_range(k, extra):
    """n from the closed-form bound for k up to bound+extra, inclusive."""
    lo = theorem_bound(k)
    return range(lo, lo + extra + 1)


def covered_params(ks, extra):
    return [GPParams(n, k) for k in ks for n in covered_range(k, extra)]
