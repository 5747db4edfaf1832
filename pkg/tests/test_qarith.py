import random
from fractions import Fraction

import pytest

from qkron.qarith import (
    IntPoly,
    LaurentQ,
    QFrac,
    bar,
    chebyshev_s,
    chebyshev_t,
    half_pow,
    lq_one,
    lq_zero,
    qpow,
    quantum_binom,
    quantum_factorial,
    quantum_int,
    split_antisymmetric,
)


def rand_laurent(rng, span=6, size=5):
    return LaurentQ({2 * rng.randint(-span, span): rng.randint(-9, 9) for _ in range(size)})


def test_quantum_int_examples():
    assert quantum_int(3) == qpow(2) + 1 + qpow(-2)
    assert quantum_int(0) == lq_zero()
    assert quantum_int(1) == lq_one()
    assert quantum_int(2) == qpow(1) + qpow(-1)
    assert quantum_int(-4) == -quantum_int(4)


def test_quantum_binom_examples():
    assert quantum_binom(-2, 1) == -qpow(1) - qpow(-1)
    for n in range(-5, 6):
        assert quantum_binom(n, 0) == lq_one()
        assert quantum_binom(n, -3) == lq_zero()
    # independent oracle: expand the defining product and divide exactly
    num = quantum_int(5) * quantum_int(4)
    den = quantum_int(2) * quantum_int(1)
    assert quantum_binom(5, 2) == num.exact_div(den)


def test_quantum_binom_negative_n_oracle():
    for n in range(-6, 0):
        for k in range(0, 5):
            num = lq_one()
            for j in range(k):
                num = num * quantum_int(n - j)
            assert quantum_binom(n, k) == num.exact_div(quantum_factorial(k))


def test_quantum_factorial():
    assert quantum_factorial(0) == lq_one()
    assert quantum_factorial(2) == quantum_int(2) * quantum_int(1)
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)


def test_pascal_identities():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(-10, 10)
        k = rng.randint(0, 10)
        b = quantum_binom(n, k)
        assert b == qpow(k) * quantum_binom(n - 1, k) + qpow(k - n) * quantum_binom(n - 1, k - 1)
        assert b == qpow(-k) * quantum_binom(n - 1, k) + qpow(n - k) * quantum_binom(n - 1, k - 1)


def test_specialization_at_q1():
    from math import comb

    for n in range(0, 13):
        for k in range(0, n + 1):
            assert quantum_binom(n, k).at_q1() == comb(n, k)


def test_bar_involution_and_hom():
    rng = random.Random(2)
    assert bar(qpow(2) + half_pow(-2)) == qpow(-2) + half_pow(2)
    assert bar(half_pow(1)) == half_pow(-1)
    for k in range(0, 12):
        assert bar(quantum_int(k)) == quantum_int(k)
    for _ in range(25):
        x, y = rand_laurent(rng), rand_laurent(rng)
        assert bar(bar(x)) == x
        assert bar(x * y) == bar(x) * bar(y)
        assert bar(x + y) == bar(x) + bar(y)


def test_ring_axioms_randomized():
    rng = random.Random(3)
    for _ in range(25):
        x, y, z = rand_laurent(rng), rand_laurent(rng), rand_laurent(rng)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x


def test_chebyshev_table():
    assert chebyshev_t(0) == IntPoly([2])
    assert chebyshev_s(0) == IntPoly([1])
    assert chebyshev_t(4) == IntPoly([2, 0, -4, 0, 1])
    assert chebyshev_s(3) == IntPoly([0, -2, 0, 1])
    assert chebyshev_t(2) == IntPoly([-2, 0, 1])
    assert chebyshev_s(4) == IntPoly([1, 0, -3, 0, 1])


def test_quantum_int_via_chebyshev():
    two = quantum_int(2)
    for k in range(1, 21):
        assert chebyshev_s(k - 1).eval_at(two) == quantum_int(k)


def test_split_antisymmetric():
    assert split_antisymmetric(qpow(3) - qpow(-3)) == qpow(3)
    assert split_antisymmetric(lq_zero()) == lq_zero()
    x = 2 * qpow(1) - 2 * qpow(-1) + qpow(4) - qpow(-4)
    assert split_antisymmetric(x) == 2 * qpow(1) + qpow(4)
    with pytest.raises(ValueError):
        split_antisymmetric(qpow(1) + qpow(-1))
    with pytest.raises(ValueError):
        split_antisymmetric(half_pow(1) - half_pow(-1))
    with pytest.raises(ValueError):
        split_antisymmetric(LaurentQ({2: Fraction(1, 2), -2: Fraction(-1, 2)}))


def test_exact_div():
    x = quantum_int(6) * quantum_int(5) * qpow(-3)
    assert x.exact_div(quantum_int(5)) == quantum_int(6) * qpow(-3)
    with pytest.raises(ValueError):
        (qpow(1) + 1).exact_div(qpow(1) - 1)


def test_render_and_parse_roundtrip():
    assert str(quantum_int(3)) == "q^2 + 1 + q^-2"
    assert str(quantum_binom(-2, 1)) == "-q - q^-1"
    assert str(half_pow(1)) == "q^(1/2)"
    assert str(half_pow(-3)) == "q^(-3/2)"
    assert str(lq_zero()) == "0"
    assert str(LaurentQ({0: Fraction(3, 2)})) == "3/2"
    assert str(2 * qpow(3) + qpow(4)) == "q^4 + 2*q^3"
    rng = random.Random(4)
    for _ in range(30):
        x = LaurentQ({rng.randint(-9, 9): Fraction(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(5)})
        assert LaurentQ.parse(str(x)) == x


def test_eval_q():
    assert quantum_int(3).eval_q(2) == Fraction(4) + 1 + Fraction(1, 4)
    with pytest.raises(ValueError):
        half_pow(1).eval_q(2)


def test_qfrac_basics():
    a = QFrac(lq_one(), quantum_int(2))
    b = QFrac(quantum_int(2))
    assert a * b == QFrac(1)
    assert a + a == QFrac(2 * lq_one(), quantum_int(2))
    assert (a - a) == QFrac(0)
    assert not (a - a)
    c = QFrac(quantum_int(4), quantum_int(2))
    assert c.is_laurent()  # [4]/[2] divides exactly
    assert c.as_laurent() == qpow(2) + qpow(-2)
    assert a.eval_q(3) == Fraction(1) / (Fraction(3) + Fraction(1, 3))
    with pytest.raises(ZeroDivisionError):
        QFrac(lq_one(), lq_zero())
