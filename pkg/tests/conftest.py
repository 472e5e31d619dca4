from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def rationals(bound: int = 20):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def series_coeffs(n: int, bound: int = 20):
    return st.lists(rationals(bound), min_size=n, max_size=n)
