"""Hankel matrices of spectral zeta / Rayleigh values and their closed determinants.

Every closed formula here is a standalone evaluator, and the public
determinant entry points (`coulomb_hankel_det`, `rayleigh_hankel_det`) always
return the direct fraction-free determinant, optionally cross-checking it
against the closed routes.  Formulas never silently replace computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .errors import DegenerateRecursion, SingularParameter, UnsupportedEll, VerificationError
from .exact import ExactMatrix, det_exact
from .zeta import CoulombParams, bernoulli, genocchi, zeta_table


@dataclass(frozen=True)
class CoulombHankel:
    """n x n Hankel matrix with entry (i, j) = zeta_L(i+j+2)."""

    params: CoulombParams
    n: int
    matrix: ExactMatrix


@dataclass(frozen=True)
class RayleighHankel:
    """n x n Hankel matrix with entry (i, j) = sigma_{2*ell+2+2*(i+j)}(nu)."""

    nu: Fraction
    ell: int
    n: int
    matrix: ExactMatrix


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Three-term recurrence coefficients of the associated orthogonal polynomials.

    a_n = ((n+L+1)^2 + eta^2) / ((n+L+1)^2 (2n+2L+1)(2n+2L+3)),  n >= 1
    b_n = -eta / ((n+L+1)(n+L+2)),                               n >= 0

    At eta = 0 the (n+L+1)^2 factor cancels, so negative integer L stays
    usable on the Bessel branch.
    """

    params: CoulombParams
    _a: tuple[Fraction, ...]  # _a[i] = a_{i+1}
    _b: tuple[Fraction, ...]  # _b[i] = b_i

    @property
    def nmax(self) -> int:
        return len(self._a)

    def a(self, n: int) -> Fraction:
        if not 1 <= n <= len(self._a):
            raise IndexError(f"a_n available for 1 <= n <= {len(self._a)}, got {n}")
        return self._a[n - 1]

    def b(self, n: int) -> Fraction:
        if not 0 <= n <= len(self._b) - 1:
            raise IndexError(f"b_n available for 0 <= n <= {len(self._b) - 1}, got {n}")
        return self._b[n]


def _check_nu(nu: Fraction) -> Fraction:
    nu = Fraction(nu)
    if nu.denominator == 1 and nu.numerator <= -1:
        raise SingularParameter(f"nu = {nu} on excluded set -N")
    return nu


def _check_n(n: int) -> None:
    if n < 1:
        raise SingularParameter(f"matrix dimension must be >= 1, got {n}")


def build_coulomb_hankel(params: CoulombParams, n: int) -> CoulombHankel:
    """Fill the matrix from one zeta table extended through zeta_L(2n)."""
    _check_n(n)
    table = zeta_table(params, 2 * n)
    rows = [[table.value(i + j + 2) for j in range(n)] for i in range(n)]
    return CoulombHankel(params, n, ExactMatrix.from_rows(rows))


def det_coulomb_closed(params: CoulombParams, n: int) -> Fraction:
    """Closed product for the determinant of the zeta Hankel matrix:

    prod_{k=0}^{n-1} (2L+2n-2k+1)^-(2k+1) * (1 + eta^2/(L+n-k)^2)^(k+1)
    """
    _check_n(n)
    params.validate()
    L, eta = params.L, params.eta
    out = Fraction(1)
    for k in range(n):
        base = 2 * L + 2 * n - 2 * k + 1
        if base == 0:
            raise SingularParameter(f"2L+2n-2k+1 = 0 at L = {L}, n = {n}, k = {k}")
        out /= base ** (2 * k + 1)
        if eta != 0:
            shift = L + n - k
            if shift == 0:
                raise SingularParameter(f"L+n-k = 0 at L = {L}, n = {n}, k = {k}")
            out *= (1 + (eta / shift) ** 2) ** (k + 1)
    return out


def recurrence_coeffs(params: CoulombParams, nmax: int) -> RecurrenceCoeffs:
    """Coefficients a_1..a_nmax and b_0..b_nmax, exactly."""
    if nmax < 1:
        raise SingularParameter(f"nmax must be >= 1, got {nmax}")
    params.validate()
    L, eta = params.L, params.eta
    a = []
    b = []
    for n in range(0, nmax + 1):
        if eta == 0:
            b.append(Fraction(0))
        else:
            d = (n + L + 1) * (n + L + 2)
            if d == 0:
                raise SingularParameter(f"(n+L+1)(n+L+2) = 0 at n = {n}, L = {L}")
            b.append(-eta / d)
        if n >= 1:
            d = (2 * n + 2 * L + 1) * (2 * n + 2 * L + 3)
            if d == 0:
                raise SingularParameter(f"(2n+2L+1)(2n+2L+3) = 0 at n = {n}, L = {L}")
            if eta == 0:
                a.append(Fraction(1) / d)
            else:
                s = (n + L + 1) ** 2
                if s == 0:
                    raise SingularParameter(f"n+L+1 = 0 at n = {n}, L = {L}")
                a.append((s + eta**2) / (s * d))
    return RecurrenceCoeffs(params, tuple(a), tuple(b))


def det_coulomb_via_moments(params: CoulombParams, n: int) -> Fraction:
    """Moment route: zeta_L(2)^n * prod_{m=1}^{n-1} prod_{j=1}^{m} a_j.

    The double product is empty at n = 1.
    """
    _check_n(n)
    table = zeta_table(params, 2)
    out = table.value(2) ** n
    if n > 1:
        coeffs = recurrence_coeffs(params, n - 1)
        for m in range(1, n):
            for j in range(1, m + 1):
                out *= coeffs.a(j)
    return out


def coulomb_hankel_det(params: CoulombParams, n: int, verify: bool = False) -> Fraction:
    """Direct determinant of the zeta Hankel matrix.

    With verify=True the closed product and the moment route are evaluated as
    well and a mismatch raises VerificationError.
    """
    direct = det_exact(build_coulomb_hankel(params, n).matrix)
    if verify:
        closed = det_coulomb_closed(params, n)
        moments = det_coulomb_via_moments(params, n)
        if not (direct == closed == moments):
            raise VerificationError(
                f"determinant routes disagree at (L={params.L}, eta={params.eta}, "
                f"n={n}): direct={direct}, closed={closed}, moments={moments}"
            )
    return direct


def build_rayleigh_hankel(nu: Fraction | int, ell: int, n: int) -> RayleighHankel:
    """Hankel matrix of Rayleigh values sigma_{2*ell+2}(nu) .. sigma_{4n+2*ell-2}(nu)."""
    nu = _check_nu(nu)
    _check_n(n)
    if ell < 0:
        raise SingularParameter(f"ell must be >= 0, got {ell}")
    table = zeta_table(CoulombParams(nu - Fraction(1, 2), Fraction(0)), 4 * n + 2 * ell - 2)
    rows = [
        [table.value(2 * ell + 2 + 2 * (i + j)) / 2 for j in range(n)] for i in range(n)
    ]
    return RayleighHankel(nu, ell, n, ExactMatrix.from_rows(rows))


def _rayleigh_product(nu: Fraction, ell: int, n: int) -> Fraction:
    """2^(-2n(n+ell)) * prod_{k=1}^{2n+ell-1} (nu+k)^(k-2n-ell), the ell in {0,1} shape."""
    out = Fraction(1, 2 ** (2 * n * (n + ell)))
    for k in range(1, 2 * n + ell):
        out *= (nu + k) ** (k - 2 * n - ell)
    return out


def det_rayleigh_closed(nu: Fraction | int, ell: int, n: int) -> Fraction:
    """Closed form of the Rayleigh Hankel determinant; valid only for ell in {0, 1}."""
    nu = _check_nu(nu)
    _check_n(n)
    if ell not in (0, 1):
        raise UnsupportedEll(f"closed form holds only for ell in {{0, 1}}, got {ell}")
    return _rayleigh_product(nu, ell, n)


def det_rayleigh_ell2(nu: Fraction | int, n: int) -> Fraction:
    """ell = 2 family: 2^(-2n(n+2)) (n+1)(n+nu+1) prod_{k=1}^{2n+1} (nu+k)^(k-2n-2)."""
    nu = _check_nu(nu)
    _check_n(n)
    out = Fraction(1, 2 ** (2 * n * (n + 2))) * (n + 1) * (n + nu + 1)
    for k in range(1, 2 * n + 2):
        out *= (nu + k) ** (k - 2 * n - 2)
    return out


def det_rayleigh_ell3(nu: Fraction | int, n: int) -> Fraction:
    """ell = 3 family, with the polynomial factor

    (1/6)(n+1)(n+2)(n+nu+1)(n+nu+2) [2n^2 + 6n + 3 + nu(2n+3)]
    """
    nu = _check_nu(nu)
    _check_n(n)
    out = Fraction(1, 2 ** (2 * n * (n + 3)))
    for k in range(1, 2 * n + 3):
        out *= (nu + k) ** (k - 2 * n - 3)
    bracket = 2 * n**2 + 6 * n + 3 + nu * (2 * n + 3)
    return out * Fraction(1, 6) * (n + 1) * (n + 2) * (n + nu + 1) * (n + nu + 2) * bracket


def det_rayleigh_dj(nu: Fraction | int, ell: int, n: int) -> Fraction:
    """Determinant for arbitrary ell by the Desnanot-Jacobi recursion

        d_n^(l) = ( d_{n+1}^(l-2) d_{n-1}^(l) + (d_n^(l-1))^2 ) / d_n^(l-2),

    seeded by the ell in {0, 1} closed forms and the 1 x 1 values
    sigma_{2l+2}(nu).  When a divisor determinant vanishes the recursion is
    degenerate and the direct fraction-free determinant is returned instead.
    """
    nu = _check_nu(nu)
    _check_n(n)
    if ell < 0:
        raise SingularParameter(f"ell must be >= 0, got {ell}")
    table = zeta_table(CoulombParams(nu - Fraction(1, 2), Fraction(0)), 2)
    memo: dict[tuple[int, int], Fraction] = {}

    def sigma(k: int) -> Fraction:
        return table.value(2 * k) / 2

    def d(l: int, m: int) -> Fraction:
        if m == 0:
            return Fraction(1)
        key = (l, m)
        if key in memo:
            return memo[key]
        if l <= 1:
            out = _rayleigh_product(nu, l, m)
        elif m == 1:
            out = sigma(l + 1)
        else:
            div = d(l - 2, m)
            if div == 0:
                raise DegenerateRecursion(
                    f"vanishing intermediate determinant at (ell={l - 2}, n={m})"
                )
            out = (d(l - 2, m + 1) * d(l, m - 1) + d(l - 1, m) ** 2) / div
        memo[key] = out
        return out

    try:
        return d(ell, n)
    except DegenerateRecursion:
        return det_exact(build_rayleigh_hankel(nu, ell, n).matrix)


def rayleigh_hankel_det(nu: Fraction | int, ell: int, n: int, verify: bool = False) -> Fraction:
    """Direct determinant of the Rayleigh Hankel matrix.

    With verify=True the Desnanot-Jacobi route (and the closed form when one
    exists for this ell) must reproduce the direct value.
    """
    direct = det_exact(build_rayleigh_hankel(nu, ell, n).matrix)
    if verify:
        routes = {"desnanot-jacobi": det_rayleigh_dj(nu, ell, n)}
        if ell in (0, 1):
            routes["closed"] = det_rayleigh_closed(nu, ell, n)
        elif ell == 2:
            routes["closed"] = det_rayleigh_ell2(nu, n)
        elif ell == 3:
            routes["closed"] = det_rayleigh_ell3(nu, n)
        for name, value in routes.items():
            if value != direct:
                raise VerificationError(
                    f"{name} route disagrees at (nu={nu}, ell={ell}, n={n}): "
                    f"direct={direct}, {name}={value}"
                )
    return direct


def bernoulli_hankel_det(ell: int, n: int) -> Fraction:
    """Determinant of the Hankel matrix with entries B_{2i+2j+2ell-2}/(2i+2j+2ell-2)!.

    Direct determinant and closed form

        (-1)^(n*ell) 2^(-n(4n+4ell-1)) prod_{k=1}^{2n+ell-1} (k+1/2)^(k-2n-ell)

    are both evaluated; a mismatch raises VerificationError.  Returns the
    direct value.
    """
    if ell not in (0, 1):
        raise UnsupportedEll(f"ell must be 0 or 1, got {ell}")
    _check_n(n)
    entries = []
    for s in range(0, 2 * n - 1):
        m = 2 * s + 2 * ell + 2  # = 2i+2j+2ell-2 at i+j = s+2 (1-based)
        entries.append(bernoulli(m // 2) / factorial(m))
    closed = Fraction((-1) ** (n * ell), 2 ** (n * (4 * n + 4 * ell - 1)))
    for k in range(1, 2 * n + ell):
        closed *= (Fraction(2 * k + 1, 2)) ** (k - 2 * n - ell)
    matrix = ExactMatrix.from_rows(
        [[entries[i + j] for j in range(n)] for i in range(n)]
    )
    direct = det_exact(matrix)
    if direct != closed:
        raise VerificationError(
            f"Bernoulli Hankel determinant (ell={ell}, n={n}): "
            f"direct {direct} != closed {closed}"
        )
    return direct


def genocchi_hankel_det(ell: int, n: int) -> Fraction:
    """Determinant of the Hankel matrix with entries G_{2i+2j+2ell-2}/(2i+2j+2ell-2)!.

    Closed form: (-1)^(n(ell+1)) 2^(-n(4n+4ell-2)) prod_{k=1}^{2n+ell-1} (k-1/2)^(k-2n-ell).
    """
    if ell not in (0, 1):
        raise UnsupportedEll(f"ell must be 0 or 1, got {ell}")
    _check_n(n)
    entries = []
    for s in range(0, 2 * n - 1):
        m = 2 * s + 2 * ell + 2
        entries.append(genocchi(m // 2) / factorial(m))
    closed = Fraction((-1) ** (n * (ell + 1)), 2 ** (n * (4 * n + 4 * ell - 2)))
    for k in range(1, 2 * n + ell):
        closed *= (Fraction(2 * k - 1, 2)) ** (k - 2 * n - ell)
    matrix = ExactMatrix.from_rows(
        [[entries[i + j] for j in range(n)] for i in range(n)]
    )
    direct = det_exact(matrix)
    if direct != closed:
        raise VerificationError(
            f"Genocchi Hankel determinant (ell={ell}, n={n}): "
            f"direct {direct} != closed {closed}"
        )
    return direct


class ParitySplit(NamedTuple):
    """Both sides of the odd and even parity splitting identities."""

    odd: tuple[Fraction, Fraction]
    even: tuple[Fraction, Fraction]


def parity_split_check(nu: Fraction | int, n: int) -> ParitySplit:
    """Evaluate both sides of the eta = 0 parity factorizations, exactly:

        det H_{2n+1}(nu-1/2, 0) = 2^(2n+1) det H_{n+1}^(0)(nu) det H_n^(1)(nu)
        det H_{2n}(nu-1/2, 0)   = 2^(2n)   det H_n^(0)(nu)     det H_n^(1)(nu)

    All four determinants are computed directly; callers assert equality.
    """
    nu = _check_nu(nu)
    _check_n(n)
    params = CoulombParams(nu - Fraction(1, 2), Fraction(0))

    def d_ray(ell, m):
        return det_exact(build_rayleigh_hankel(nu, ell, m).matrix)

    def d_zeta(m):
        return det_exact(build_coulomb_hankel(params, m).matrix)

    odd = (d_zeta(2 * n + 1), Fraction(2 ** (2 * n + 1)) * d_ray(0, n + 1) * d_ray(1, n))
    even = (d_zeta(2 * n), Fraction(2 ** (2 * n)) * d_ray(0, n) * d_ray(1, n))
    return ParitySplit(odd=odd, even=even)
