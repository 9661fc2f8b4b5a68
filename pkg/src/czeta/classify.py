"""Algebraic zero classification via signs of consecutive Hankel determinants.

Indexing convention, used everywhere in this module:

    D_n := det H_{n+1}(L, eta)  for n >= 0,   D_{-1} := 1,

so D_n is the determinant of the (n+1) x (n+1) zeta Hankel matrix.  An
off-by-one here silently breaks the sign counting, hence the explicit note.

The product D_{n-1} D_n has a closed form whose sign equals the sign of
2L+2n+3, so the classifier never needs to evaluate a determinant: the count
of negative members of {D_{n-1} D_n} equals the number of complex-conjugate
zero pairs of the Coulomb wave function (and twice that count is the complex
zero count of the corresponding Bessel function when eta = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import BoundaryParameter, ExcludedParameter, SingularParameter
from .zeta import CoulombParams


@dataclass(frozen=True)
class ZeroClassification:
    """Predicted conjugate-pair count plus the sign data that produced it."""

    params: CoulombParams
    pair_count: int
    sign_sequence: tuple[int, ...]  # sign of D_{n-1} D_n for n = 0..nmax
    all_real: bool


class HurwitzCount(NamedTuple):
    complex_zeros: int
    imaginary_pair: bool


def _validate_for_classification(params: CoulombParams) -> None:
    try:
        params.validate()
    except SingularParameter as exc:
        raise ExcludedParameter(str(exc)) from exc


def dd_product_closed(params: CoulombParams, n: int) -> Fraction:
    """Closed form of D_{n-1} D_n (n >= 0; D_{-1} = 1, empty product = 1):

        1/(2L+2n+3) * (1 + eta^2/(L+n+1)^2)
          * prod_{k=0}^{n-1} (2L+2n-2k+1)^-(4k+4) * (1 + eta^2/(L+n-k)^2)^(2k+3)

    with every eta factor dropped when eta = 0 (that branch also admits
    negative integer L).
    """
    _validate_for_classification(params)
    if n < 0:
        raise ExcludedParameter(f"n must be >= 0, got {n}")
    L, eta = params.L, params.eta
    lead = 2 * L + 2 * n + 3
    if lead == 0:
        raise SingularParameter(f"2L+2n+3 = 0 at L = {L}, n = {n}")
    out = Fraction(1) / lead
    if eta != 0:
        shift = L + n + 1
        if shift == 0:
            raise SingularParameter(f"L+n+1 = 0 at L = {L}, n = {n}")
        out *= 1 + (eta / shift) ** 2
    for k in range(n):
        base = 2 * L + 2 * n - 2 * k + 1
        if base == 0:
            raise SingularParameter(f"2L+2n-2k+1 = 0 at L = {L}, n = {n}, k = {k}")
        out /= base ** (4 * k + 4)
        if eta != 0:
            shift = L + n - k
            if shift == 0:
                raise SingularParameter(f"L+n-k = 0 at L = {L}, n = {n}, k = {k}")
            out *= (1 + (eta / shift) ** 2) ** (2 * k + 3)
    return out


def classify(params: CoulombParams, nmax: int | str = "auto") -> ZeroClassification:
    """Count the complex-conjugate zero pairs of the Coulomb wave function.

    Signs of D_{n-1} D_n are taken from the closed product for n = 0..nmax.
    In auto mode nmax = max(ceil(-L) + 2, 3), which covers every possible
    negative sign (they require 2L+2n+3 < 0) with a margin of at least two;
    the trailing margin is asserted positive.
    """
    _validate_for_classification(params)
    L = params.L
    if nmax == "auto":
        nmax = max(math.ceil(-L) + 2, 3)
    if not isinstance(nmax, int) or nmax < 0:
        raise ExcludedParameter(f"nmax must be a nonnegative integer or 'auto', got {nmax!r}")

    signs = []
    for n in range(nmax + 1):
        value = dd_product_closed(params, n)
        sign = 1 if value > 0 else (-1 if value < 0 else 0)
        assert sign != 0, f"D_(n-1)D_n vanished at n = {n}; parameters escaped validation"
        assert sign == (1 if 2 * L + 2 * n + 3 > 0 else -1), (
            f"sign of D_(n-1)D_n differs from sign(2L+2n+3) at n = {n}"
        )
        signs.append(sign)
    m = signs.count(-1)

    # the negatives all sit at the front: n < -L - 3/2
    if signs and signs[-1] != 1:
        raise ExcludedParameter(
            f"nmax = {nmax} too small: sign sequence still negative at its end"
        )
    if L < Fraction(-3, 2):
        expected = math.floor(-L - Fraction(1, 2))
        assert m == expected, f"negative count {m} != floor(-L-1/2) = {expected}"
    elif L > Fraction(-3, 2):
        assert m == 0, f"expected all-positive signs for L = {L} > -3/2, got m = {m}"
    return ZeroClassification(
        params=params, pair_count=m, sign_sequence=tuple(signs), all_real=(m == 0)
    )


def hurwitz_counts(nu: Fraction | int) -> HurwitzCount:
    """Complex-zero count of the Bessel function J_nu by the order trichotomy:

    - nu > -1: no complex zeros;
    - -2s-2 < nu < -2s-1 (s >= 0): 4s+2 complex zeros, two purely imaginary;
    - -2s-1 < nu < -2s (s >= 1): 4s complex zeros, none imaginary.

    Negative integer nu sits on a trichotomy boundary (and on the excluded
    set of the eta = 0 classifier) and is refused.  The count is checked
    against twice the classifier's pair count on every call.
    """
    nu = Fraction(nu)
    if nu.denominator == 1 and nu.numerator <= -1:
        raise BoundaryParameter(f"nu = {nu} is a negative integer boundary point")
    if nu > -1:
        count, imaginary = 0, False
    else:
        m = math.floor(-nu)  # nu in (-m-1, -m), m >= 1
        count, imaginary = 2 * m, m % 2 == 1
    pairs = classify(CoulombParams(nu - Fraction(1, 2), Fraction(0))).pair_count
    assert count == 2 * pairs, (
        f"trichotomy count {count} != 2 * classifier pairs {2 * pairs} at nu = {nu}"
    )
    return HurwitzCount(complex_zeros=count, imaginary_pair=imaginary)
