import random
from itertools import product

from qkron import classical, pbw
from qkron.qarith import QFrac, lq_one, qpow, quantum_factorial

u0, u1, u2, u3 = (pbw.generator(i) for i in range(4))


def rand_element(rng, max_terms=3, max_exp=2):
    t = {}
    for _ in range(rng.randint(1, max_terms)):
        a = tuple(rng.randint(0, max_exp) for _ in range(4))
        t[a] = qpow(rng.randint(-3, 3)) * rng.randint(-4, 4) + qpow(rng.randint(-2, 2))
    return pbw.PbwElement(t)


def test_generators():
    assert pbw.generator(3).terms == {(1, 0, 0, 0): lq_one()}
    assert pbw.generator(0).terms == {(0, 0, 0, 1): lq_one()}
    assert pbw.exp_root_weight((0, 1, 0, 0)) == (3, 2)
    assert u2.root_weight() == (3, 2)


def test_straightening_rules():
    assert u0 * u1 == (u1 * u0).scale_qpow(-2)
    assert u1 * u2 == (u2 * u1).scale_qpow(-2)
    assert u2 * u3 == (u3 * u2).scale_qpow(-2)
    assert u0 * u2 == (u2 * u0).scale_qpow(-2) + (u1 * u1).scale(qpow(-2) - 1)
    assert u1 * u3 == (u3 * u1).scale_qpow(-2) + (u2 * u2).scale(qpow(-2) - 1)
    assert u0 * u3 == (u3 * u0).scale_qpow(-2) + (u2 * u1).scale(qpow(-4) - 1)


def test_associativity_all_generator_triples():
    gens = [u0, u1, u2, u3]
    for x, y, z in product(gens, repeat=3):
        assert (x * y) * z == x * (y * z)


def test_associativity_randomized():
    rng = random.Random(11)
    for _ in range(12):
        x, y, z = (rand_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_homogeneity_preserved():
    rng = random.Random(12)
    for _ in range(20):
        a = tuple(rng.randint(0, 2) for _ in range(4))
        b = tuple(rng.randint(0, 2) for _ in range(4))
        x = pbw.monomial(a) * pbw.monomial(b)
        assert x.is_homogeneous()
        wa, wb = pbw.exp_root_weight(a), pbw.exp_root_weight(b)
        assert x.root_weight() == (wa[0] + wb[0], wa[1] + wb[1])


def test_sigma_on_generators():
    for i in range(4):
        g = pbw.generator(i)
        assert g.sigma() == g.scale_qpow(2 * i)


def test_sigma_involution_and_antihom():
    rng = random.Random(13)
    for _ in range(10):
        x = rand_element(rng)
        y = rand_element(rng)
        assert x.sigma().sigma() == x
        assert (x * y).sigma() == y.sigma() * x.sigma()


def test_sigma_u3_u0_example():
    lhs = (u3 * u0).sigma()
    rhs = ((u3 * u0).scale_qpow(-2) + (u2 * u1).scale(qpow(-4) - 1)).scale_qpow(6)
    assert lhs == rhs


def test_p_elements():
    assert pbw.p1().terms == {(1, 0, 1, 0): lq_one(), (0, 2, 0, 0): -qpow(2)}
    assert pbw.p0().terms == {(0, 1, 0, 1): lq_one(), (0, 0, 2, 0): -qpow(2)}
    assert pbw.p0() * pbw.p1() == (pbw.p1() * pbw.p0()).scale_qpow(-4)


def test_p_commutation_table():
    p0, p1 = pbw.p0(), pbw.p1()
    gens = [u0, u1, u2, u3]
    for p, exps in ((p0, (2, 0, -2, -4)), (p1, (4, 2, 0, -2))):
        for g, e in zip(gens, exps):
            assert p * g == (g * p).scale_qpow(e)


def test_u1_u3_power_identity():
    for l in range(1, 11):
        u3l = pbw.monomial((l, 0, 0, 0))
        lhs = u1 * u3l
        rhs = (u3l * u1).scale_qpow(-2 * l) + \
            (pbw.monomial((l - 1, 0, 0, 0)) * u2 * u2).scale(qpow(-4 * l + 2) - qpow(-2 * l + 2))
        assert lhs == rhs


def test_divided_power():
    assert pbw.divided_power(1, 0) == pbw.one()
    assert pbw.divided_power(1, 1) == u1
    dp = pbw.divided_power(1, 2)
    assert set(dp.terms) == {(0, 0, 2, 0)}
    assert dp.terms[(0, 0, 2, 0)] == QFrac(1, quantum_factorial(2))
    assert not dp.is_integral()
    # scaling back clears the denominator
    assert dp.scale(quantum_factorial(2)) == u1 * u1


def test_specialize_q1():
    assert pbw.p1().specialize_q1() == classical.p1_poly()
    assert pbw.p0().specialize_q1() == classical.p0_poly()
    assert (u0 * u1 - (u1 * u0).scale_qpow(-2)).specialize_q1() == classical.CPoly()
    b1001 = u3 * u0 - (u2 * u1).scale_qpow(2)
    assert b1001.specialize_q1() == classical.z_poly()


def test_render_parse_json():
    b = u3 * u1 - (u2 * u2).scale_qpow(2)
    assert str(b) == "u3*u1 - (q^2)*u2^2"
    assert str(pbw.one()) == "1"
    assert str(pbw.zero()) == "0"
    rng = random.Random(14)
    for _ in range(15):
        x = rand_element(rng)
        assert pbw.PbwElement.parse(str(x)) == x
        assert pbw.PbwElement.from_json_dict(x.to_json_dict()) == x


def test_parse_roundtrip_odd_half_steps():
    from qkron.qarith import half_pow

    x = (u3 * u3 * u0).scale(half_pow(-7)) + u2.scale(half_pow(3) + half_pow(-1))
    assert pbw.PbwElement.parse(str(x)) == x


def test_word_product_equals_multiply():
    rng = random.Random(15)
    for _ in range(10):
        word = [rng.randint(0, 3) for _ in range(rng.randint(1, 6))]
        direct = pbw.word_product(word)
        step = pbw.one()
        for i in word:
            step = step * pbw.generator(i)
        assert direct == step
