from fractions import Fraction as F

import pytest

from czeta.errors import SingularParameter
from czeta.zeta import (
    CoulombParams,
    bernoulli,
    genocchi,
    rayleigh,
    zeta_base,
    zeta_extend,
    zeta_table,
)

from oracles import bernoulli_classical, GENOCCHI_CLASSICAL, sigma2_closed, sigma4_closed, sigma6_from_convolution


def test_base_value_frozen_cases():
    assert zeta_base(CoulombParams(0, 0)) == F(1, 3)
    assert zeta_base(CoulombParams(0, 1)) == F(2, 3)
    # at L = 1/2, eta = 0 the base value is twice sigma_2(1) = 2/8
    assert zeta_base(CoulombParams(F(1, 2), 0)) == F(1, 4) == 2 * sigma2_closed(1)


def test_base_singular_parameters():
    with pytest.raises(SingularParameter):
        zeta_base(CoulombParams(F(-3, 2), 0))
    with pytest.raises(SingularParameter):
        zeta_base(CoulombParams(-1, 1))
    # eta = 0 allows negative integers
    assert zeta_base(CoulombParams(-1, 0)) == 1
    assert zeta_base(CoulombParams(-2, 0)) == -1


def test_recurrence_hand_unrolled():
    # empty convolution at the first step: zeta(3) = (1/4) * 2 * zeta(2)
    t = zeta_table(CoulombParams(0, 1), 5)
    assert t.value(3) == F(1, 3)
    assert t.value(4) == F(2, 9)
    assert t.value(5) == F(4, 27)
    # eta = 0: single convolution term, zeta(4) = zeta(2)^2 / 5
    t0 = zeta_table(CoulombParams(0, 0), 8)
    assert t0.values() == [F(1, 3), 0, F(1, 45), 0, F(2, 945), 0, F(1, 4725)]


@pytest.mark.parametrize("nu", [F(1, 2), F(1), F(5, 2), F(4), F(-1, 2), F(7, 3)])
def test_parity_odd_values_vanish(nu):
    t = zeta_table(CoulombParams(nu - F(1, 2), 0), 23)
    for k in range(1, 11):
        assert t.value(2 * k + 1) == 0


def test_negative_integer_orbital_on_bessel_branch():
    # the recurrence meets a 0/0 at one odd index; evenness fixes it to 0
    t = zeta_table(CoulombParams(-2, 0), 8)
    assert t.value(3) == 0 and t.value(5) == 0 and t.value(7) == 0
    assert t.value(2) == -1
    assert t.value(4) == 1  # zeta(2)^2 / (2L+5) = 1/1


def test_table_is_memoized_and_monotone():
    t = zeta_table(CoulombParams(0, 1), 4)
    first = t.values()
    zeta_extend(t, 10)
    assert t.values()[: len(first)] == first
    assert t.kmax == 10


def test_rayleigh_against_closed_formulas():
    for nu in [F(1, 2), F(1), F(5, 2), F(4), F(-1, 2), F(7, 3), F(-4, 3)]:
        assert rayleigh(nu, 1) == sigma2_closed(nu)
        assert rayleigh(nu, 2) == sigma4_closed(nu)
        assert rayleigh(nu, 3) == sigma6_from_convolution(nu)


def test_rayleigh_frozen_values():
    assert rayleigh(1, 1) == F(1, 8)
    assert rayleigh(1, 2) == F(1, 192)
    assert rayleigh(1, 3) == F(1, 3072)
    assert rayleigh(F(1, 2), 3) == F(1, 945)


def test_rayleigh_rejects_negative_integers():
    for nu in (-1, -2, F(-3)):
        with pytest.raises(SingularParameter):
            rayleigh(nu, 1)


def test_positivity_of_base_value():
    for L in [F(-5, 4), F(-1, 2), 0, F(1, 3), 1, F(7, 2)]:
        for eta in [0, F(1, 2), 1, 2]:
            assert zeta_base(CoulombParams(L, eta)) > 0


def test_deep_tables_stay_exact_on_rational_grid():
    for L in [F(-5, 4), F(-1, 2), F(1, 3), F(7, 2), F(-9, 5)]:
        for eta in [0, F(1, 2), F(3, 2)]:
            table = zeta_table(CoulombParams(L, eta), 24)
            assert len(table.values()) == 23
            assert all(isinstance(v, F) for v in table.values())


def test_bernoulli_against_classical_recurrence():
    for n in range(1, 11):
        assert bernoulli(n) == bernoulli_classical(2 * n)


def test_genocchi_both_bridges_and_classical_values():
    # genocchi() already asserts the sigma(-1/2) route internally
    for n in range(1, 11):
        assert genocchi(n) == GENOCCHI_CLASSICAL[n - 1]


def test_bernoulli_frozen_small_cases():
    assert bernoulli(1) == F(1, 6)
    assert bernoulli(2) == F(-1, 30)
    assert bernoulli(3) == F(1, 42)
    assert genocchi(1) == -1
    assert genocchi(2) == 1
    assert genocchi(3) == -3
