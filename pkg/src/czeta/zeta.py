"""Spectral zeta values of the regular Coulomb wave function, exactly.

zeta_L(k) is the sum of k-th negative powers of the zeros of the entire factor
of the Coulomb wave function (k >= 2).  It obeys a quadratic recurrence in k
that stays inside the rationals whenever L and eta are rational:

    zeta_L(2)   = (1 + eta^2/(L+1)^2) / (2L+3)
    zeta_L(k+1) = ( (2 eta/(L+1)) zeta_L(k)
                    + sum_{l=1}^{k-2} zeta_L(l+1) zeta_L(k-l) ) / (2L+k+2)

The recurrence is singular exactly on L in -(N+1)/2 = {-1, -3/2, -2, ...}.
For eta = 0 the function reduces to a normalized Bessel function of order
nu = L + 1/2 and only half-integers L in -N - 1/2 must be excluded: negative
integer L stays meaningful, with every odd value zeta_L(2k+1) = 0 by the
evenness of the eta = 0 function.

The Rayleigh function sigma_{2k}(nu) (power sums over the positive zeros of
the Bessel function J_nu) is zeta_{nu-1/2}(2k) / 2, and Bernoulli/Genocchi
numbers are recovered from sigma_{2n}(1/2) and sigma_{2n}(-1/2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import SingularParameter


def _is_neg_half_integer_general(L: Fraction) -> bool:
    # membership in -(N+1)/2 = {-1, -3/2, -2, -5/2, ...}
    twice = 2 * L
    return twice.denominator == 1 and twice.numerator <= -2


def _is_neg_half_odd(L: Fraction) -> bool:
    # membership in -N - 1/2 = {-3/2, -5/2, ...}
    twice = 2 * L
    return twice.denominator == 1 and twice.numerator % 2 != 0 and twice.numerator <= -3


@dataclass(frozen=True)
class CoulombParams:
    """The parameter pair (L, eta), exact rationals."""

    L: Fraction
    eta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "L", Fraction(self.L))
        object.__setattr__(self, "eta", Fraction(self.eta))

    @property
    def is_bessel(self) -> bool:
        return self.eta == 0

    def valid_general(self) -> bool:
        """L avoids the recurrence poles -(N+1)/2; required whenever eta != 0."""
        return not _is_neg_half_integer_general(self.L)

    def valid_bessel(self) -> bool:
        """eta = 0 branch: only half-integers L in -N - 1/2 are excluded."""
        return not _is_neg_half_odd(self.L)

    def validate(self) -> None:
        if self.is_bessel:
            if not self.valid_bessel():
                raise SingularParameter(
                    f"L = {self.L} on excluded set -N-1/2 (eta = 0 branch)"
                )
        elif not self.valid_general():
            raise SingularParameter(
                f"L = {self.L} on excluded set -(N+1)/2 (eta != 0)"
            )


def zeta_base(params: CoulombParams) -> Fraction:
    """zeta_L(2) = (1 + eta^2/(L+1)^2) / (2L+3)."""
    params.validate()
    L, eta = params.L, params.eta
    if 2 * L + 3 == 0:
        raise SingularParameter(f"2L+3 = 0 at L = {L}")
    if eta != 0 and L + 1 == 0:
        raise SingularParameter(f"L+1 = 0 at L = {L} with eta != 0")
    value = Fraction(1, 1)
    if eta != 0:
        value += (eta / (L + 1)) ** 2
    return value / (2 * L + 3)


@dataclass
class ZetaTable:
    """Memoized zeta_L(2..kmax) for fixed (L, eta); grows monotonically."""

    params: CoulombParams
    _values: list[Fraction] = field(default_factory=list)  # _values[i] = zeta(i+2)

    def __post_init__(self):
        if not self._values:
            self._values.append(zeta_base(self.params))

    @property
    def kmax(self) -> int:
        return len(self._values) + 1

    def value(self, k: int) -> Fraction:
        if k < 2:
            raise SingularParameter(f"zeta_L(k) requires k >= 2, got {k}")
        if k > self.kmax:
            self.extend_to(k)
        return self._values[k - 2]

    def values(self) -> list[Fraction]:
        return list(self._values)

    def extend_to(self, kmax: int) -> "ZetaTable":
        L, eta = self.params.L, self.params.eta
        z = self._values
        while len(z) + 1 < kmax:
            k = len(z) + 1  # producing zeta(k+1)
            num = Fraction(0)
            if eta != 0:
                num += 2 * eta / (L + 1) * z[k - 2]
            for l in range(1, k - 1):
                num += z[l - 1] * z[k - l - 2]
            den = 2 * L + k + 2
            if den == 0:
                # only reachable at eta = 0 with negative integer L, where the
                # target index k+1 is odd and the value is 0 by evenness
                if eta == 0 and num == 0 and (k + 1) % 2 == 1:
                    z.append(Fraction(0))
                    continue
                raise SingularParameter(f"2L+k+2 = 0 at L = {L}, k = {k}")
            z.append(num / den)
        return self


def zeta_table(params: CoulombParams, kmax: int) -> ZetaTable:
    """Fresh table holding zeta_L(2), ..., zeta_L(kmax)."""
    if kmax < 2:
        raise SingularParameter(f"kmax must be >= 2, got {kmax}")
    return ZetaTable(params).extend_to(kmax)


def zeta_extend(table: ZetaTable, kmax: int) -> ZetaTable:
    """Extend a table in place through zeta_L(kmax); returns the same table."""
    if kmax < 2:
        raise SingularParameter(f"kmax must be >= 2, got {kmax}")
    return table.extend_to(kmax)


def rayleigh(nu: Fraction | int, k: int) -> Fraction:
    """Rayleigh function sigma_{2k}(nu) = zeta_{nu-1/2}(2k) / 2."""
    nu = Fraction(nu)
    if nu.denominator == 1 and nu.numerator <= -1:
        raise SingularParameter(f"nu = {nu} on excluded set -N")
    if k < 1:
        raise SingularParameter(f"Rayleigh order requires k >= 1, got {k}")
    table = zeta_table(CoulombParams(nu - Fraction(1, 2), Fraction(0)), 2 * k)
    return table.value(2 * k) / 2


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_{2n}, via B_{2n} = (-1)^(n+1) (2n)! 2^(1-2n) sigma_{2n}(1/2)."""
    if n < 1:
        raise SingularParameter(f"bernoulli(n) requires n >= 1, got {n}")
    sigma = rayleigh(Fraction(1, 2), n)
    return (-1) ** (n + 1) * factorial(2 * n) * Fraction(2) ** (1 - 2 * n) * sigma


def genocchi(n: int) -> Fraction:
    """Genocchi number G_{2n} = 2(1 - 2^(2n)) B_{2n}.

    The value is cross-checked on every call against the second route
    G_{2n} = (-1)^n (2n)! 2^(2-2n) sigma_{2n}(-1/2); a mismatch would mean the
    zeta recurrence and the Bernoulli bridge disagree.
    """
    if n < 1:
        raise SingularParameter(f"genocchi(n) requires n >= 1, got {n}")
    g = 2 * (1 - 2 ** (2 * n)) * bernoulli(n)
    alt = (-1) ** n * factorial(2 * n) * Fraction(2) ** (2 - 2 * n) * rayleigh(
        Fraction(-1, 2), n
    )
    assert g == alt, f"Genocchi bridge mismatch at n = {n}: {g} != {alt}"
    return g
