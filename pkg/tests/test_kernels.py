from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from superbethe.errors import PoleError
from superbethe.kernels import KernelKind as K, KernelSpec, Kernels, eval_kernel, set_product
from superbethe.signature import AlgebraSignature as S

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_examples():
    assert eval_kernel(KernelSpec(K.G), S(1, 1), 1, 3, 1) == F(1, 2)
    assert eval_kernel(KernelSpec(K.F), S(1, 1), 1, 2, 1) == 2
    # at the junction color the gamma kernel reduces to g
    assert eval_kernel(KernelSpec(K.GAMMA, 1), S(1, 1), 1, 2, 1) == eval_kernel(KernelSpec(K.G), S(1, 1), 1, 2, 1) == 1
    assert eval_kernel(KernelSpec(K.GAMMA, 1), S(1, 1), 1, 3, 1) == F(1, 2)


def test_set_products():
    assert set_product(KernelSpec(K.F), S(1, 1), 1, [], [1, 2]) == 1
    assert set_product(KernelSpec(K.G), S(1, 1), 1, [3], [1, 2]) == F(1, 2)
    assert set_product(KernelSpec(K.H), S(1, 1), 1, [5], [5]) == 1


def test_poles():
    with pytest.raises(PoleError) as err:
        eval_kernel(KernelSpec(K.G), S(2, 1), 1, 2, 2)
    assert err.value.pair == (2, 2)
    with pytest.raises(PoleError):
        eval_kernel(KernelSpec(K.GAMMA, 2), S(2, 1), 1, 1, 2)
    with pytest.raises(PoleError) as err:
        set_product(KernelSpec(K.F), S(1, 1), 1, [1, 2], [3, 2, 1])
    assert err.value.pair == (1, 1)


def test_gamma_needs_color():
    with pytest.raises(ValueError):
        KernelSpec(K.GAMMA)
    with pytest.raises(ValueError):
        Kernels(S(2, 1), 1).gamma(3, 1, 2)


def test_graded_variant_flips_c():
    kn = Kernels(S(1, 2), 1)
    assert kn.g(3, 1, 2) == -kn.g(3, 1)
    assert kn.f(3, 1, 1) == kn.f(3, 1)
    assert kn.h(3, 1, 3) == F(3 - 1 - 1, -1)


def test_gamma_pieces_for_each_side_of_the_junction():
    kn = Kernels(S(2, 2), F(1, 3))
    u, v = F(5), F(2)
    assert kn.gamma(1, u, v) == kn.f(u, v)
    assert kn.gamma(2, u, v) == kn.g(u, v)
    assert kn.gamma(3, u, v) == kn.f(v, u)


def test_gl_m_degeneration():
    kn = Kernels(S(3, 0), 1)
    for i in (1, 2):
        assert kn.gamma(i, 4, 1) == kn.f(4, 1) == kn.gamma_hat(i, 4, 1)


@given(st.sampled_from([(1, 1), (2, 1), (1, 2), (3, 0), (2, 2), (0, 3)]), rationals, rationals, rationals)
def test_kernel_identities(mn, u, v, c):
    assume(c != 0 and u - v not in (0, c, -c))
    sig = S(*mn)
    kn = Kernels(sig, c)
    assert kn.f(u, v) == 1 + kn.g(u, v)
    assert kn.h(u, v) * kn.g(u, v) == kn.f(u, v)
    for i in range(1, sig.size + 1):
        assert kn.g(u, v, i) == -kn.g(v, u, i)
        assert kn.f(u, v, i) == 1 + kn.g(u, v, i)
    for i in range(1, sig.N + 1):
        assert kn.gamma_hat(i, u, v) == (-1 if i == sig.m else 1) * kn.gamma(i, u, v)
