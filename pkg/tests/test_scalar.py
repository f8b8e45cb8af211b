from fractions import Fraction as F
import random

import pytest

from superbethe.bethe import scalar_product_oracle
from superbethe.errors import IdentifiabilityError
from superbethe.fock import ChainModel
from superbethe.hc import hc
from superbethe.kernels import Kernels
from superbethe.partitions import BetheFamily, balanced_split_count, split_sets
from superbethe.scalar import extract_w, model_alpha, sum_formula, w_coefficient
from superbethe.signature import AlgebraSignature as S

from conftest import family, points


def fam(sig, *sets):
    return BetheFamily(sig, tuple(tuple(F(x) for x in s) for s in sets))


def alpha_table(values):
    return lambda k, u: values[(k, u)]


def test_w_full_and_empty_splits():
    rng = random.Random(21)
    s = family(rng, 2, 1, (2, 1))
    t = family(rng, 2, 1, (2, 1), points(s))
    none = ((), ())
    assert w_coefficient(S(2, 1), 1, (s.sets, none), (t.sets, none)) == hc(S(2, 1), 1, s, t)
    assert w_coefficient(S(2, 1), 1, (none, s.sets), (none, t.sets)) == hc(S(2, 1), 1, t, s)


def test_sum_formula_gl11_one_parameter():
    s, t = F(3), F(-1, 2)
    al = alpha_table({(1, s): F(5), (1, t): F(-2, 7)})
    g = Kernels(S(1, 1), 1).g(s, t)
    got = sum_formula(S(1, 1), 1, fam(S(1, 1), [s]), fam(S(1, 1), [t]), al)
    assert got == g * (5 - F(-2, 7))


def test_sum_formula_gl2_one_parameter():
    s, t = F(3), F(-1, 2)
    al = alpha_table({(1, s): F(5), (1, t): F(-2, 7)})
    kn = Kernels(S(2, 0), 1)
    got = sum_formula(S(2, 0), 1, fam(S(2, 0), [s]), fam(S(2, 0), [t]), al)
    assert got == kn.g(t, s) * 5 + kn.g(s, t) * F(-2, 7)


def test_sum_formula_edge_cases():
    al = alpha_table({})
    assert sum_formula(S(2, 1), 1, fam(S(2, 1), [], []), fam(S(2, 1), [], []), al) == 1
    assert sum_formula(S(1, 1), 1, fam(S(1, 1), [1]), fam(S(1, 1), [2, 3]), al) == 0


def test_sum_formula_is_symmetric():
    rng = random.Random(22)
    s = family(rng, 2, 1, (2, 1))
    t = family(rng, 2, 1, (2, 1), points(s))
    model = ChainModel.random(S(2, 1), 1, 3, rng, avoid=points(s, t))
    al = model_alpha(model)
    assert sum_formula(S(2, 1), 1, s, t, al) == sum_formula(S(2, 1), 1, t, s, al)


def test_grand_identity_gl3():
    rng = random.Random(23)
    s = family(rng, 3, 0, (2, 1))
    t = family(rng, 3, 0, (2, 1), points(s))
    model = ChainModel.random(S(3, 0), 1, 4, rng, avoid=points(s, t))
    value = scalar_product_oracle(model, s, t)
    assert value and value == sum_formula(S(3, 0), 1, s, t, model_alpha(model))


def _models(rng, sig, s, t, count, L):
    return [ChainModel.random(sig, 1, L, rng, avoid=points(s, t)) for _ in range(count)]


def test_extract_gl11_single_parameter():
    rng = random.Random(24)
    s, t = fam(S(1, 1), [F(5, 2)]), fam(S(1, 1), [F(-4, 3)])
    ex = extract_w(_models(rng, S(1, 1), s, t, 3, 2), s, t)
    g = Kernels(S(1, 1), 1).g
    assert sorted(ex.values) == sorted([g(F(5, 2), F(-4, 3)), g(F(-4, 3), F(5, 2))])


def test_extract_gl2_two_parameters():
    rng = random.Random(25)
    s = family(rng, 2, 0, (2,))
    t = family(rng, 2, 0, (2,), points(s))
    ex = extract_w(_models(rng, S(2, 0), s, t, 8, 2), s, t)
    assert len(ex.splits) == 6
    for (si, ti), v in ex.as_dict().items():
        assert v == w_coefficient(S(2, 0), 1, split_sets(s.sets, si), split_sets(t.sets, ti))
    # the gl(2) highest coefficient is the weight of the full split
    assert ex.as_dict()[(((0, 1),), ((0, 1),))] == hc(S(2, 0), 1, s, t)


def test_extract_gl21_reports_identifiability():
    rng = random.Random(26)
    s = family(rng, 2, 1, (1, 1))
    t = family(rng, 2, 1, (1, 1), points(s))
    with pytest.raises(IdentifiabilityError) as err:
        extract_w(_models(rng, S(2, 1), s, t, balanced_split_count((1, 1)) + 2, 1), s, t)
    classes = err.value.classes
    assert sum(len(c) for c in classes) == 4 and any(len(c) > 1 for c in classes)
    for cls, total in zip(classes, err.value.class_sums):
        assert total == sum(w_coefficient(S(2, 1), 1, split_sets(s.sets, si), split_sets(t.sets, ti))
                            for si, ti in cls)
