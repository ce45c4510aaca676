import random

import pytest
from hypothesis import given, settings

from elastinv.binary_forms import BinaryForm, cartan_pullback, is_real_form, sl2_act, transvectant
from elastinv.covariant_tables import (S4S4_TABLE, S8_TABLE, evaluate_product, helper_covariants,
                                       s4s4_covariant_basis, s8_covariant_basis)
from elastinv.errors import ModeError
from elastinv.sampling import random_form, random_harmonic
from elastinv.scalars import I
from strategies import forms, sl2_matrices


def generic(degree, seed):
    return random_form(random.Random(seed), degree)


F = generic(8, 1)
H, K = generic(4, 2), generic(4, 3)
S8 = s8_covariant_basis(F)
S4S4 = s4s4_covariant_basis(H, K)


def test_sizes_and_names():
    assert len(S8_TABLE) == 68 and len(S8) == 69
    assert len(S4S4_TABLE) == 26 and len(S4S4) == 28
    assert list(S8) == [f"f{i}" for i in range(1, 70)]
    assert list(S4S4) == [f"h{i}" for i in range(1, 29)]


@pytest.mark.parametrize("basis", [S8, S4S4], ids=["s8", "s4s4"])
def test_orders_match_forms(basis):
    for cov in basis.values():
        assert cov.form.degree == cov.order, cov.id
        assert not cov.form.is_zero(), cov.id


def test_table_rows_reference_earlier_entries():
    for table, seeds in [(S8_TABLE, {"f1"}), (S4S4_TABLE, {"h1", "h2"})]:
        known = set(seeds)
        for cid, left, right, r, _ in table:
            for expr in (left, right):
                for factor in expr.split("."):
                    assert factor.partition("^")[0] in known, (cid, factor)
            known.add(cid)


def test_s8_scaling():
    doubled = s8_covariant_basis(2 * F)
    for cid, cov in S8.items():
        assert doubled.form(cid) == 2 ** cov.degree * cov.form


def test_s4s4_bihomogeneity():
    scaled = s4s4_covariant_basis(2 * H, 3 * K)
    for cid, cov in S4S4.items():
        a, b = cov.degree
        assert scaled.form(cid) == 2 ** a * 3 ** b * cov.form


def test_known_low_entries():
    assert S8.form("f2") == transvectant(F, F, 8)
    assert S8.form("f5") == transvectant(F, F, 2)
    assert S4S4.form("h5") == transvectant(H, K, 4)
    assert S4S4.form("h6") == transvectant(H, K, 3)


def test_equal_inputs_collapse():
    same = s4s4_covariant_basis(H, H)
    assert same.form("h5") == same.form("h3") == same.form("h4")


def test_vanishing_second_form():
    zero = s4s4_covariant_basis(H, BinaryForm.zero(4))
    for cid, cov in zero.items():
        assert cov.form.is_zero() == (cov.degree[1] > 0), cid


def test_zero_form():
    for cov in s8_covariant_basis(BinaryForm.zero(8)).values():
        assert cov.form.is_zero()


@settings(max_examples=8)
@given(sl2_matrices())
def test_s8_covariance(gamma):
    moved = s8_covariant_basis(sl2_act(gamma, F))
    for cid in ("f2", "f3", "f5", "f6", "f9", "f13", "f24", "f40", "f69"):
        assert moved.form(cid) == sl2_act(gamma, S8.form(cid)), cid


@settings(max_examples=8)
@given(sl2_matrices())
def test_s4s4_covariance(gamma):
    moved = s4s4_covariant_basis(sl2_act(gamma, H), sl2_act(gamma, K))
    for cid in S4S4:
        assert moved.form(cid) == sl2_act(gamma, S4S4.form(cid)), cid


def test_real_inputs_give_real_or_imaginary_covariants():
    rng = random.Random(11)
    f = cartan_pullback(random_harmonic(rng, 4))
    h, k = (cartan_pullback(random_harmonic(rng, 2)) for _ in range(2))
    for basis in (s8_covariant_basis(f), s4s4_covariant_basis(h, k)):
        for cov in basis.values():
            assert is_real_form(cov.form) or is_real_form(I * cov.form), cov.id


def test_helper_covariants():
    h2_4, h3_6 = helper_covariants(H)
    assert h2_4.degree == 4 and h3_6.degree == 6
    assert h2_4 == S4S4.form("h7")
    assert h3_6 == transvectant(H, h2_4, 1)


@given(forms(2), forms(3))
def test_evaluate_product(a, b):
    table = {"a": a, "b": b}
    assert evaluate_product("a^2.b", table.__getitem__) == a * a * b
    assert evaluate_product("b", table.__getitem__) == b


def test_input_validation():
    with pytest.raises(ValueError):
        s8_covariant_basis(H)
    with pytest.raises(ValueError):
        s4s4_covariant_basis(F, K)
    with pytest.raises(TypeError):
        s8_covariant_basis([1] * 9)
    with pytest.raises(ModeError):
        s4s4_covariant_basis(H, K.to_float())


def test_float_mode_agrees():
    approx = s8_covariant_basis(F.to_float())
    for cid, cov in S8.items():
        assert approx.form(cid).allclose(cov.form.to_float(), rtol=1e-8, atol=1e-8), cid
