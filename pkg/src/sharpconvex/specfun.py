"""Log-gamma and the normalization constants of the weighted circle measures."""

import math

__all__ = ["ln_gamma", "c_m", "c_ratio"]

# Lanczos coefficients for g = 7, 9 terms.  Relative accuracy is a few ulp on
# the positive real axis, comfortably inside the 1e-13 budget on (0, 170].
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def ln_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0, via the Lanczos series.

    All gamma-dependent constants in this package go through here and stay in
    log space until the final exponentiation, so large arguments cannot
    overflow intermediate products.
    """
    if not x > 0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    if x < 0.5:
        # reflection keeps the series argument >= 0.5
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def c_m(m: float) -> float:
    """Normalizer of the circle measure with density c_m |sin theta|^m.

    c_m = Gamma(m/2 + 1) / (2 Gamma(1/2) Gamma(m/2 + 1/2)), the unique
    constant making the measure a probability measure.  Requires m > -1;
    m = -1 corresponds to the discrete two-point measure, which has no
    density and is handled by its own code path elsewhere.
    """
    if not m > -1:
        raise ValueError(f"c_m requires m > -1, got {m}")
    log_c = (
        ln_gamma(m / 2 + 1.0)
        - math.log(2.0)
        - 0.5 * math.log(math.pi)
        - ln_gamma(m / 2 + 0.5)
    )
    return math.exp(log_c)


def c_ratio(m: float) -> float:
    """c_m / c_{m+2}, evaluated through the gamma representation.

    Equals (m+1)/(m+2) identically; evaluating via ln_gamma instead of the
    closed form keeps this usable as an independent check of that identity.
    """
    if not m > -1:
        raise ValueError(f"c_ratio requires m > -1, got {m}")
    log_num = ln_gamma(m / 2 + 1.0) - ln_gamma(m / 2 + 0.5)
    log_den = ln_gamma(m / 2 + 2.0) - ln_gamma(m / 2 + 1.5)
    return math.exp(log_num - log_den)
