import math
import random

import pytest

from class_spectrum import (
    DomainError,
    bound_report,
    chebyshev_sweep,
    factorial_ratio,
    omega_set,
    sieve,
)


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def test_sieve_small():
    table = sieve(10)
    assert table.primes_in(0, 10) == [2, 3, 5, 7]
    assert not table.is_prime(0) and not table.is_prime(1)
    assert table.count(10) == 4


def test_sieve_pi_100():
    assert sieve(100).count(100) == 25


def test_sieve_pi_million_with_sampled_cross_check():
    table = sieve(1_000_000)
    assert table.count(1_000_000) == 78498
    rng = random.Random(17)
    for k in rng.sample(range(1_000_000), 300):
        assert table.is_prime(k) == trial_division_is_prime(k)


def test_sieve_segment_boundaries():
    limit = (1 << 20) + 50
    table = sieve(limit)
    for k in range((1 << 20) - 30, limit + 1):
        assert table.is_prime(k) == trial_division_is_prime(k)


def test_count_prefix_edges():
    table = sieve(50)
    assert table.count(0) == 0
    assert table.count(1) == 0
    assert table.count(2) == 1
    assert [table.count(x) for x in range(2, 12)] == [1, 2, 2, 3, 3, 4, 4, 4, 4, 5]
    assert table.count(-1) == 0
    with pytest.raises(DomainError):
        table.count(51)


def test_prev_prime():
    table = sieve(100)
    assert table.prev_prime(100) == 97
    assert table.prev_prime(97) == 97
    assert table.prev_prime(2) == 2
    assert table.prev_prime(1) is None


def test_omega_examples():
    assert omega_set(10).omega == (7,)
    assert omega_set(10).p == 7
    assert omega_set(10).count == 1
    data = omega_set(23)
    assert data.omega == (13, 17, 19, 23)
    assert data.p == 23
    assert omega_set(1360).p == 1327


def test_omega_boundaries():
    # strict lower bound: for even n the halving prime is excluded
    assert 7 not in omega_set(14).omega
    assert omega_set(14).omega == (11, 13)
    # t = n included when n is prime
    assert omega_set(13).omega[-1] == 13
    with pytest.raises(DomainError):
        omega_set(2)


def test_omega_count_equals_pi_difference():
    table = sieve(2000)
    for n in range(3, 2001):
        data = omega_set(n, table)
        assert data.count == table.count(n) - table.count(n // 2)
        assert data.count >= 1  # Bertrand, empirically
        assert data.p in data.omega
        assert all(table.is_prime(t) and n // 2 < t <= n for t in data.omega)


def test_factorial_ratio_examples():
    assert factorial_ratio(5, 5) == 1
    assert factorial_ratio(5, 3) == 20
    assert factorial_ratio(1362, 1361) == 1362
    with pytest.raises(DomainError):
        factorial_ratio(3, 5)


def test_factorial_ratio_times_p_factorial_is_n_factorial():
    for n in list(range(0, 60)) + [123, 456, 999, 1500, 2000]:
        for p in {0, 1, n // 3, n // 2, max(n - 1, 0), n}:
            if p <= n:
                assert factorial_ratio(n, p) * math.factorial(p) == math.factorial(n)


def test_bound_report_examples():
    r100 = bound_report(100)
    assert r100.pi_exact == 25
    assert r100.lower_holds
    assert not r100.upper_holds  # 25 >= 1.106 * 100 / ln 100 = 24.016...
    assert 24.0 < r100.upper < 24.1

    r11 = bound_report(11)
    assert r11.pi_exact == 5
    assert r11.lower_holds
    assert 4.2 < r11.lower < 4.3

    r1360 = bound_report(1360)
    assert r1360.p == 1327
    assert r1360.gap == 33
    assert r1360.gap_bound_holds  # 33 < 1360^0.525 = 44.3...


def test_bound_report_domain():
    with pytest.raises(DomainError):
        bound_report(10)


def test_gap_bound_is_exact_power_comparison():
    report = bound_report(1360)
    assert (report.gap**40 < 1360**21) == report.gap_bound_holds


def test_sweep_quick():
    result = chebyshev_sweep(10, 10_000)
    assert result.lower_violations == ()
    assert 100 in result.upper_violations
    # the gap bound read pointwise fails once in this range: the 113 -> 127
    # gap gives 126 - 113 = 13 > 126^0.525 = 12.66..., exactly 13^40 > 126^21
    assert result.gap_violations == (126,)
    assert result.checked == 9990
