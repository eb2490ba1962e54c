from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from eisring import Eisenstein
from eisring.gaussian import Gaussian

settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


def eis(lo=-200, hi=200):
    return st.builds(Eisenstein, st.integers(lo, hi), st.integers(lo, hi))


def eis_nonzero(lo=-200, hi=200):
    return eis(lo, hi).filter(lambda x: not x.is_zero())


def gauss(lo=-200, hi=200):
    return st.builds(Gaussian, st.integers(lo, hi), st.integers(lo, hi))


def gauss_nonzero(lo=-200, hi=200):
    return gauss(lo, hi).filter(lambda x: not x.is_zero())
