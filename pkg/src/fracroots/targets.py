"""Registry of evaluatable target functions.

Truncated cosine- and sine-integral series, the globally convergent Euler
double-sum for the zeta function, zeta through its functional equation, a
2-d exponential-sine benchmark system, and generic polynomials.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError, EvaluationError
from .specfun import binomial, log_gamma_complex

__all__ = [
    "EULER_MASCHERONI",
    "TargetFunction",
    "ci_series",
    "si_series",
    "hasse_zeta",
    "zeta_functional",
    "zeta_functional_target",
    "example3_system",
    "polynomial",
    "make_target",
    "REGISTRY_NAMES",
    "parse_complex",
    "parse_complex_vector",
]

EULER_MASCHERONI = 0.5772156649015329

_LN2 = math.log(2.0)
_LN_PI = math.log(math.pi)

REGISTRY_NAMES = ("ci", "si", "zeta-hasse", "example3", "poly")


@dataclass(frozen=True)
class TargetFunction:
    """Evaluatable f: C^n -> C^n with dimension and truncation metadata.

    evaluate must be deterministic and side-effect-free.
    """

    name: str
    dimension: int
    evaluate: Callable[[np.ndarray], np.ndarray]
    truncation_k: int | None = None


def _compensated_complex_sum(terms: Iterable[complex]) -> complex:
    # Neumaier accumulation on both components; the alternating series here
    # have intermediate terms up to ~1e11 at the outer roots.
    sr = cr = si = ci = 0.0
    for t in terms:
        tr, ti = t.real, t.imag
        u = sr + tr
        if abs(sr) >= abs(tr):
            cr += (sr - u) + tr
        else:
            cr += (tr - u) + sr
        sr = u
        v = si + ti
        if abs(si) >= abs(ti):
            ci += (si - v) + ti
        else:
            ci += (ti - v) + si
        si = v
    return complex(sr + cr, si + ci)


def _inverse_of_int(denominator: int) -> float:
    # exact integer -> correctly rounded reciprocal; the alternating series
    # peak near |x| ~ 30 at ~1e11, so coefficient error must stay at 0.5 ulp
    try:
        return 1.0 / denominator
    except OverflowError:
        return 0.0


def ci_series(k: int) -> TargetFunction:
    """Truncated series for the cosine integral Ci tail:
    f_k(x) = -gamma - log(x) - sum_{m=1}^{k} (-1)^m x^(2m) / (2m (2m)!).
    """
    if k < 1:
        raise DomainError(f"series truncation must be >= 1, got k={k!r}")
    coeffs = []
    for m in range(1, k + 1):
        mag = _inverse_of_int(2 * m * math.factorial(2 * m))
        coeffs.append(-mag if m % 2 else mag)

    def _eval(v: np.ndarray) -> np.ndarray:
        z = complex(v[0])
        if z == 0:
            raise EvaluationError("logarithmic singularity at x = 0")
        z2 = z * z

        def terms():
            power = 1.0 + 0.0j
            for c in coeffs:
                power *= z2
                yield c * power

        acc = _compensated_complex_sum(terms())
        return np.array([-EULER_MASCHERONI - cmath.log(z) - acc], dtype=np.complex128)

    return TargetFunction("ci", 1, _eval, truncation_k=k)


def si_series(k: int) -> TargetFunction:
    """Truncated series for the sine integral tail:
    f_k(x) = pi/2 - sum_{m=0}^{k} (-1)^m x^(2m+1) / ((2m+1) (2m+1)!).
    """
    if k < 1:
        raise DomainError(f"series truncation must be >= 1, got k={k!r}")
    coeffs = []
    for m in range(k + 1):
        mag = _inverse_of_int((2 * m + 1) * math.factorial(2 * m + 1))
        coeffs.append(-mag if m % 2 else mag)

    def _eval(v: np.ndarray) -> np.ndarray:
        z = complex(v[0])
        z2 = z * z

        def terms():
            power = z
            yield coeffs[0] * power
            for c in coeffs[1:]:
                power *= z2
                yield c * power

        acc = _compensated_complex_sum(terms())
        return np.array([0.5 * math.pi - acc], dtype=np.complex128)

    return TargetFunction("si", 1, _eval, truncation_k=k)


def hasse_zeta(k: int) -> TargetFunction:
    """Globally convergent double sum for zeta, truncated at outer index k:
    f_k(x) = 1/(1 - 2^(1-x)) sum_{m=0}^{k} 2^-(m+1)
             sum_{p=0}^{m} (-1)^p C(m,p) (p+1)^(-x).

    Row weights (-1)^p C(m,p) 2^-(m+1) are exact in 80-bit extended
    precision for k <= 60, and the whole sum is accumulated at that
    precision: at real x near -10 the alternating products reach ~1e15
    while the sum is ~1e-3, which double precision cannot survive.  The
    m-terms are summed in ascending order.
    """
    if k < 1:
        raise DomainError(f"series truncation must be >= 1, got k={k!r}")
    rows = np.zeros((k + 1, k + 1), dtype=np.longdouble)
    for m in range(k + 1):
        denom = np.longdouble(2) ** (m + 1)
        for p in range(m + 1):
            w = np.longdouble(binomial(m, p)) / denom
            rows[m, p] = -w if p % 2 else w
    log_steps = np.log(np.arange(1, k + 2, dtype=np.longdouble))
    ln2 = np.log(np.longdouble(2))
    one = np.clongdouble(1)

    def _eval(v: np.ndarray) -> np.ndarray:
        z = np.clongdouble(complex(v[0]))
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            prefactor_denom = one - np.exp((one - z) * ln2)
            if abs(complex(prefactor_denom)) < 1e-12:
                raise EvaluationError("pole of the series prefactor (2^(1-x) = 1)")
            powers = np.exp(-z * log_steps)
            m_terms = rows @ powers
            total = m_terms.cumsum()[-1]
            value = complex(total / prefactor_denom)
        return np.array([value], dtype=np.complex128)

    return TargetFunction("zeta-hasse", 1, _eval, truncation_k=k)


def _log_sin_pi_half(x: complex) -> complex | None:
    """log(sin(pi x / 2)) with exact argument reduction.

    Returns None when the sine vanishes exactly (x an even integer), so the
    caller can short-circuit to zero.  Large |Im| is handled through the
    dominant exponential to avoid overflow.
    """
    half = x / 2.0
    n = round(half.real)
    rho = half - n
    w = math.pi * rho
    extra = complex(0.0, math.pi) if n % 2 else 0.0 + 0.0j
    if abs(w.imag) <= 20.0:
        val = cmath.sin(w)
        if val == 0:
            return None
        return cmath.log(val) + extra
    if w.imag > 0.0:
        # sin w = (i/2) e^{-iw} (1 - e^{2iw})
        return complex(-_LN2, 0.5 * math.pi) - 1j * w + cmath.log(1.0 - cmath.exp(2j * w)) + extra
    return complex(-_LN2, -0.5 * math.pi) + 1j * w + cmath.log(1.0 - cmath.exp(-2j * w)) + extra


def zeta_functional(x: complex, inner: TargetFunction) -> complex:
    """zeta(x) = 2^x pi^(x-1) sin(pi x/2) Gamma(1-x) zeta(1-x) for Re(x) < 0.5.

    Assembled in log space: Gamma(1-x) alone overflows doubles well inside
    the probe range, while the full product stays representable.
    """
    xc = complex(x)
    if xc.real >= 0.5:
        raise DomainError(f"functional equation is used for Re(x) < 0.5, got {xc!r}")
    log_sin = _log_sin_pi_half(xc)
    if log_sin is None:
        return 0.0 + 0.0j
    inner_val = complex(inner.evaluate(np.array([1.0 - xc], dtype=np.complex128))[0])
    if inner_val == 0:
        return 0.0 + 0.0j
    total = (
        xc * _LN2
        + (xc - 1.0) * _LN_PI
        + log_sin
        + log_gamma_complex(1.0 - xc)
        + cmath.log(inner_val)
    )
    if total.real > 700.0:
        raise OverflowError(
            f"zeta functional-equation product has log-magnitude {total.real:.1f} > 700"
        )
    return cmath.exp(total)


def zeta_functional_target(inner: TargetFunction | None = None, k: int = 50) -> TargetFunction:
    """1-d target wrapping the functional-equation evaluator (for probes)."""
    inner_fn = inner if inner is not None else hasse_zeta(k)

    def _eval(v: np.ndarray) -> np.ndarray:
        return np.array([zeta_functional(complex(v[0]), inner_fn)], dtype=np.complex128)

    return TargetFunction("zeta-func", 1, _eval, truncation_k=inner_fn.truncation_k)


def example3_system() -> TargetFunction:
    """2-d exponential-sine benchmark system."""
    quarter_pi_inv = 1.0 / (4.0 * math.pi)
    e = math.e

    def _eval(v: np.ndarray) -> np.ndarray:
        x1 = complex(v[0])
        x2 = complex(v[1])
        f1 = 0.5 * x1 * (cmath.sin(x1 * x2) - 1.0) - quarter_pi_inv * x2
        f2 = (1.0 - quarter_pi_inv) * (cmath.exp(2.0 * x1) - e) + e * (
            x2 / math.pi - 2.0 * x1
        )
        return np.array([f1, f2], dtype=np.complex128)

    return TargetFunction("example3", 2, _eval)


def polynomial(coeffs: Sequence[complex]) -> TargetFunction:
    """Polynomial target from descending coefficients, evaluated by Horner."""
    cs = [complex(c) for c in coeffs]
    if not cs:
        raise DomainError("polynomial needs at least one coefficient")
    if cs[0] == 0:
        raise DomainError("leading coefficient must be nonzero")

    def _eval(v: np.ndarray) -> np.ndarray:
        z = complex(v[0])
        acc = cs[0]
        for c in cs[1:]:
            acc = acc * z + c
        return np.array([acc], dtype=np.complex128)

    return TargetFunction("poly", 1, _eval)


def parse_complex(text: str) -> complex:
    """Parse a shell-safe complex literal: 'a', 'a+bi', 'a-bi' (no spaces)."""
    s = text.strip()
    if not s or any(ch.isspace() for ch in s):
        raise DomainError(f"bad complex literal {text!r}")
    try:
        value = complex(s.replace("i", "j"))
    except ValueError:
        raise DomainError(f"bad complex literal {text!r}") from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"complex literal must be finite, got {text!r}")
    return value


def parse_complex_vector(text: str) -> np.ndarray:
    parts = text.split(",")
    return np.array([parse_complex(p) for p in parts], dtype=np.complex128)


def make_target(name: str, k: int = 50, coeffs=None) -> TargetFunction:
    """Look up a target by registry name.

    poly takes coefficients either as a sequence or as a comma-separated
    string of complex literals ("1,0,1" is x^2 + 1).
    """
    if name == "ci":
        return ci_series(k)
    if name == "si":
        return si_series(k)
    if name == "zeta-hasse":
        return hasse_zeta(k)
    if name == "example3":
        return example3_system()
    if name == "poly":
        if coeffs is None:
            raise DomainError("poly target needs coefficients")
        if isinstance(coeffs, str):
            coeffs = parse_complex_vector(coeffs)
        return polynomial(list(coeffs))
    raise DomainError(f"unknown target {name!r}; known names: {', '.join(REGISTRY_NAMES)}")
