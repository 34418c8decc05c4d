from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

import pytest

from contactindex.characters import BundleSpec
from contactindex.chern import (
    BundleClassData,
    CohModel,
    NonIntegralResult,
    a_hat,
    ahat_log_series,
    ch_from_chern,
    ch_lambda,
    cp_model,
    from_total_class,
    holomorphic_euler,
    power_sums,
    series_inverse,
    series_log,
    todd,
    todd_log_series,
    total_class,
)
from contactindex.truncring import TruncRing, ring_integrate
from helpers import binom_poly


def test_series_helpers():
    # 1/(1 - y) and log(1/(1 - y)) = sum y^m / m
    geom = series_inverse([Fraction(1), Fraction(-1)], 5)
    assert geom == [Fraction(1)] * 6
    lg = series_log(geom, 5)
    assert lg == [Fraction(0)] + [Fraction(1, m) for m in range(1, 6)]


def test_genus_series_leading_terms():
    # log( y/(1-e^-y) ) = y/2 - y^2/24 + 0*y^3 + y^4/2880? sign pattern:
    # only the y/2 term is odd, the rest are the even Bernoulli terms
    t = todd_log_series(4)
    assert t[1] == Fraction(1, 2)
    assert t[2] == Fraction(-1, 24)
    assert t[3] == 0
    a = ahat_log_series(4)
    assert a[1] == 0 and a[3] == 0
    assert a[2] == Fraction(-1, 24)


def test_cp_model_chern_classes():
    m = cp_model(1)
    x = m.ring.gen(0)
    assert total_class(m.dist) == m.ring.one() + x * 2 + x**2 * 2
    assert m.line.c1() == x * 2
    # Whitney: c1(D) + c1(L) = c1(X) = (2n+2) x, for several n
    for n in (1, 2, 3):
        mn = cp_model(n)
        xn = mn.ring.gen(0)
        assert mn.dist.c1() + mn.line.c1() == xn * (2 * n + 2)
        assert mn.tx.c1() == mn.line.c1() * (n + 1)
        # c(TX) = c(D) c(L) in the ring
        assert total_class(mn.tx) == total_class(mn.dist) * total_class(mn.line)


def test_ch_line_bundle():
    m = cp_model(1)
    x = m.ring.gen(0)
    ch = ch_from_chern(m.line)
    assert ch == m.ring.one() + x * 2 + x**2 * 2 + x**3 * Fraction(4, 3)  # e^(2x)


def test_ch_rank_two_newton():
    # c = (2x, 2x^2): p1 = 2x, p2 = 0, p3 = -4x^3
    m = cp_model(1)
    x = m.ring.gen(0)
    p = power_sums(m.dist)
    assert p[0] == x * 2
    assert p[1].is_zero()
    assert p[2] == x**3 * -4
    assert ch_from_chern(m.dist) == m.ring.scalar(2) + x * 2 - x**3 * Fraction(2, 3)


def test_ch_trivial_bundle():
    R = TruncRing(("x",), (3,))
    triv = BundleClassData(rank=5, chern=(), ring=R)
    assert ch_from_chern(triv) == R.scalar(5)


def _root_bundle(rank, bound, cap=None):
    """Bundle with explicit formal roots y_1..y_rank in a multi-generator ring."""
    names = tuple(f"y{i+1}" for i in range(rank))
    R = TruncRing(names, (bound,) * rank, cap=cap)
    total = R.one()
    for i in range(rank):
        total = total * (R.one() + R.gen(i))
    return R, from_total_class(R, total, rank)


@pytest.mark.parametrize("rank", [2, 3])
def test_ch_lambda_against_explicit_roots(rank):
    # brute force: materialize the roots and sum exp over subsets/multisets
    R, b = _root_bundle(rank, 2)
    roots = [R.gen(i) for i in range(rank)]
    assert ch_from_chern(b) == sum((r.exp() for r in roots), R.zero())
    for p in range(rank + 1):
        direct = R.zero()
        for sub in combinations(roots, p):
            direct = direct + (-sum(sub, R.zero())).exp()
        assert ch_lambda(b, p, "exterior") == direct, ("ext", p)
    for p in range(3):
        direct = R.zero()
        for sub in combinations_with_replacement(roots, p):
            direct = direct + (-sum(sub, R.zero())).exp()
        assert ch_lambda(b, p, "sym") == direct, ("sym", p)


def test_ch_lambda_shortcuts():
    m = cp_model(2)
    assert ch_lambda(m.dist, 0) == m.ring.one()
    # p=1 is the dual Chern character: flip the sign of odd Chern classes
    dual = BundleClassData(
        rank=m.dist.rank,
        chern=tuple(c * (-1) ** (i + 1) for i, c in enumerate(m.dist.chern)),
        ring=m.ring,
    )
    assert ch_lambda(m.dist, 1) == ch_from_chern(dual)


def test_ch_lambda_top_exterior_is_dual_determinant():
    m = cp_model(1)
    assert ch_lambda(m.dist, 2) == (-m.dist.c1()).exp()


def test_alternating_sum_identity():
    # sum_p (-1)^p ch(wedge^p b*) = prod(1 - e^-y_i)
    #                             = c_rank(b) * exp(sum log((1-e^-y)/y) in power sums)
    for rank, make in [(2, lambda: cp_model(1).dist), (3, lambda: _root_bundle(3, 2)[1])]:
        b = make()
        lhs = b.ring.zero()
        for p in range(rank + 1):
            term = ch_lambda(b, p, "exterior")
            lhs = lhs + (term if p % 2 == 0 else -term)
        u = [Fraction((-1) ** k, factorial(k + 1)) for k in range(b.ring.cap + 1)]
        logs = series_log(u, b.ring.cap)
        acc = b.ring.zero()
        for mdeg, pm in enumerate(power_sums(b), start=1):
            if mdeg < len(logs):
                acc = acc + pm * logs[mdeg]
        rhs = b.chern[rank - 1] * acc.exp()
        assert lhs == rhs


def test_todd_cp1_and_cp3():
    R = TruncRing(("x",), (1,))
    x = R.gen(0)
    cp1_tx = from_total_class(R, (R.one() + x) ** 2, 1)
    model = CohModel(ring=R, n=1, tx=cp1_tx, line=cp1_tx, dist=cp1_tx)
    assert todd(model) == R.one() + x
    assert ring_integrate(todd(model)) == 1

    m3 = cp_model(1)
    x3 = m3.ring.gen(0)
    assert todd(m3) == (
        m3.ring.one() + x3 * 2 + x3**2 * Fraction(11, 6) + x3**3
    )
    assert ring_integrate(todd(m3)) == 1


def test_todd_factors_through_ahat():
    # Td = e^(c1/2) * A-hat, the bridge between the two genus forms
    for n in (1, 2, 3):
        m = cp_model(n)
        half_c1 = m.tx.c1() * Fraction(1, 2)
        assert todd(m) == half_c1.exp() * a_hat(m)


def test_holomorphic_euler_cp3():
    m = cp_model(1)
    assert holomorphic_euler(m, BundleSpec("ext", 0, 0)) == 1
    assert holomorphic_euler(m, BundleSpec("ext", 0, 1)) == 0
    assert holomorphic_euler(m, BundleSpec("ext", 0, 2)) == -1


def test_holomorphic_euler_line_bundles_cp5():
    # chi(CP^5, O(-2k)) = binom(5-2k, 5), an independent closed form
    m = cp_model(2)
    for k in range(-2, 5):
        assert holomorphic_euler(m, BundleSpec("ext", 0, k)) == binom_poly(5 - 2 * k, 5)


def test_holomorphic_euler_cotangent_like_values():
    # chi(wedge^p of the full cotangent bundle) on projective space is
    # (-1)^p; here D* differs from the cotangent bundle by the L-twist but
    # p = 1, k = 0 is classical: chi(D*) = -1 on CP^3
    m = cp_model(1)
    assert holomorphic_euler(m, BundleSpec("ext", 1, 0)) == -1


def test_non_integral_result_detected():
    # a deliberately inconsistent model: rank-1 "tangent bundle" with c1 = x
    # on a ring of top degree 1 gives Td = 1 + x/2 and a half-integer index
    R = TruncRing(("x",), (1,))
    fake = from_total_class(R, R.one() + R.gen(0), 1)
    model = CohModel(ring=R, n=1, tx=fake, line=fake, dist=BundleClassData(2, (), R))
    with pytest.raises(NonIntegralResult):
        holomorphic_euler(model, BundleSpec("ext", 0, 0))


def test_exterior_rank_bound():
    m = cp_model(1)
    from contactindex.characters import InvalidSpec

    with pytest.raises(InvalidSpec):
        ch_lambda(m.dist, 3, "exterior")
    with pytest.raises(InvalidSpec):
        holomorphic_euler(m, BundleSpec("ext", 3, 0))


def test_sym_power_sizes_constant_term():
    # the degree-0 part of ch(Sym^p b*) is the rank binom(r+p-1, p)
    m = cp_model(2)
    for p in range(4):
        val = ch_lambda(m.dist, p, "sym").constant_term()
        assert val == comb(m.dist.rank + p - 1, p)
    for p in range(5):
        val = ch_lambda(m.dist, p, "exterior").constant_term()
        assert val == comb(m.dist.rank, p)
