"""Exact truncated generating functions for both families.

Counting oracle independent of the exhaustive enumerator.  All arithmetic
is on Python ints, so coefficients stay exact at any truncation order; the
default cap only bounds runtime.

B-side: each non-forbidden part size k contributes a factor 1/(1 - q^k).

A-side: each part size i contributes sum over its allowed multiplicities
m = M*v + g (v in 0..p-1, g a nonnegative multiple of p) of q^(i*m),
which factors as (1 + q^(i*M) + ... + q^((p-1)*i*M)) / (1 - q^(i*p)).
The geometric numerator is expanded term by term (p is small) rather than
written as (1 - q^(p*i*M))/(1 - q^(i*M)), sidestepping cancellation at the
truncation boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import Params, PartClass, classify_part

DEFAULT_SERIES_CAP = 2000


@dataclass(frozen=True)
class SeriesCoefficients:
    """Exact coefficients c[0..N] of a truncated power series in q."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def _over_one_minus_qk(coeffs: list[int], k: int) -> None:
    """Multiply in place by 1/(1 - q^k), truncated to the list length."""
    for idx in range(k, len(coeffs)):
        coeffs[idx] += coeffs[idx - k]


def _times_one_minus_qk(coeffs: list[int], k: int) -> None:
    """Multiply in place by (1 - q^k), truncated to the list length."""
    for idx in range(len(coeffs) - 1, k - 1, -1):
        coeffs[idx] -= coeffs[idx - k]


def _check_order(N: int, cap: int) -> None:
    if N < 0:
        raise ValueError(f"truncation order must be nonnegative, got {N}")
    if N > cap:
        raise ValueError(f"N={N} exceeds the series cap {cap}")


def b_side_series(ps: Params, N: int, cap: int = DEFAULT_SERIES_CAP) -> SeriesCoefficients:
    """Coefficients counting partitions of n <= N with no forbidden part."""
    _check_order(N, cap)
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for k in range(1, N + 1):
        if classify_part(ps, k) is not PartClass.FORBIDDEN:
            _over_one_minus_qk(coeffs, k)
    return SeriesCoefficients(tuple(coeffs))


def a_side_series(ps: Params, N: int, cap: int = DEFAULT_SERIES_CAP) -> SeriesCoefficients:
    """Coefficients counting partitions of n <= N with allowed multiplicities."""
    _check_order(N, cap)
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for i in range(1, N + 1):
        exps = [i * ps.M * v for v in range(1, ps.p) if i * ps.M * v <= N]
        if exps:
            shifted = coeffs[:]
            for e in exps:
                for idx in range(e, N + 1):
                    shifted[idx] += coeffs[idx - e]
            coeffs = shifted
        if i * ps.p <= N:
            _over_one_minus_qk(coeffs, i * ps.p)
    return SeriesCoefficients(tuple(coeffs))


def compare_series(
    ps: Params, N: int, cap: int = DEFAULT_SERIES_CAP
) -> tuple[bool, int | None]:
    """Compare both sides coefficientwise up to q^N.

    Returns (True, None) on agreement, else (False, smallest differing n).
    """
    a = a_side_series(ps, N, cap).coeffs
    b = b_side_series(ps, N, cap).coeffs
    for n, (ca, cb) in enumerate(zip(a, b)):
        if ca != cb:
            return False, n
    return True, None
