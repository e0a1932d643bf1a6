import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krasner.errors import ArityError, BudgetExceeded, ConstructionError, DomainError, TableError
from krasner.hypercore import (HyperStructure, additive_inverse, derive_arity, f_fold,
                               f_on_sets, g_fold, g_product, is_invertible, mask, members,
                               set_product, validate_structure)
from krasner import _scan

from helpers import BUILTIN_NAMES, builtin, corpus


def test_builtins_are_valid():
    for name in BUILTIN_NAMES:
        G = builtin(name)
        assert validate_structure(G).valid, name


def test_z6_tables_are_modular_arithmetic():
    G = builtin("Z6")
    for a, b in itertools.product(range(6), repeat=2):
        assert G.f(a, b) == 1 << (a + b) % 6
        assert G.g(a, b) == a * b % 6


def test_krasner_and_sign_tables():
    K = builtin("krasner2")
    assert K.f(1, 1) == mask([0, 1]) and K.f(0, 1) == mask([1])
    S = builtin("sign3")
    assert S.f(1, 2) == mask([0, 1, 2])
    assert S.f(1, 1) == mask([1]) and S.f(2, 2) == mask([2])
    assert [S.g(a, b) for a in range(3) for b in range(3)] == [0, 0, 0, 0, 1, 2, 0, 2, 1]


def test_krasner_without_inverse_is_rejected():
    K = builtin("krasner2")
    f = K.f_table.copy()
    f[1, 1] = mask([1])
    report = validate_structure(HyperStructure("K2'", 2, 2, 1, f, K.g_table))
    assert "inverse" in report.axioms()
    assert report.get("inverse").witness == (1,)


def test_empty_hyperoperation_value_is_a_table_error():
    f = np.array([[1, 2], [2, 0]])
    g = np.array([[0, 0], [0, 1]])
    with pytest.raises(TableError, match="empty hyperoperation value"):
        HyperStructure("bad", 2, 2, 1, f, g)


def test_f_fold_examples():
    Z6, K = builtin("Z6"), builtin("krasner2")
    assert f_fold(Z6, (1, 2, 3)) == mask([0])
    assert f_fold(Z6, (4,)) == mask([4])
    assert f_fold(K, (1, 1, 1)) == mask([0, 1])


def test_g_fold_examples():
    Z6 = builtin("Z6")
    assert g_fold(Z6, (2, 2, 2)) == 2
    assert g_fold(Z6, (5,)) == 5
    assert g_fold(Z6, (2, 3, 5)) == 0


def test_fold_length_must_fit_the_arity():
    H = derive_arity(builtin("Z6"), 2, 3)
    with pytest.raises(ArityError):
        g_fold(H, (1, 2))
    # g_product pads with ones instead
    assert g_product(H, (2, 5)) == 4


def test_set_extended_operations():
    Z6, K = builtin("Z6"), builtin("krasner2")
    assert f_on_sets(Z6, [mask([0, 3]), mask([0, 3])]) == mask([0, 3])
    assert f_on_sets(Z6, [1, 1]) == 1
    assert f_on_sets(K, [mask([1]), mask([1])]) == mask([0, 1])
    assert set_product(Z6, [mask([0, 3]), mask([0, 2, 4])]) == 1
    with pytest.raises(DomainError):
        f_on_sets(Z6, [0, 1])


def test_inverses_and_units():
    Z6, K = builtin("Z6"), builtin("krasner2")
    assert additive_inverse(Z6, 2) == 4
    assert additive_inverse(Z6, 0) == 0
    assert additive_inverse(K, 1) == 1
    assert is_invertible(Z6, 5) and is_invertible(Z6, 1)
    assert not is_invertible(Z6, 2)


def test_derive_arity():
    Z6, K = builtin("Z6"), builtin("krasner2")
    assert derive_arity(Z6, 2, 2) is Z6
    H = derive_arity(K, 3, 3)
    assert (H.m, H.n) == (3, 3) and validate_structure(H).valid
    assert H.provenance == "derive(krasner2,3,3)"
    # with singleton addition, three-fold sums make every element x with 3x = x
    # (x = 0, 3 in Z6) a second identity, so the derived structure is rejected
    with pytest.raises(ConstructionError, match="identity-unique"):
        derive_arity(Z6, 3, 2)
    with pytest.raises(DomainError):
        derive_arity(H, 2, 2)


def test_validation_is_cached():
    G = builtin("Z4")
    assert validate_structure(G) is validate_structure(G)


def test_budget_override(monkeypatch):
    monkeypatch.setenv("HYPERRING_BUDGET", "100")
    assert _scan.tuple_budget() == 100
    with pytest.raises(BudgetExceeded) as info:
        _scan.check_budget(6, 3)
    assert info.value.required == 216 and info.value.budget == 100


@given(st.sets(st.integers(0, 15)))
def test_mask_members_round_trip(xs):
    assert members(mask(xs)) == sorted(xs)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_folds_are_commutative(data):
    G = data.draw(st.sampled_from(corpus().structures))
    j = data.draw(st.integers(1, 3))
    xs = data.draw(st.lists(st.integers(0, G.size - 1), min_size=1 + j * (G.m - 1),
                            max_size=1 + j * (G.m - 1)))
    perm = data.draw(st.permutations(xs))
    assert f_fold(G, xs) == f_fold(G, perm)
    ys = data.draw(st.lists(st.integers(0, G.size - 1), min_size=1 + j * (G.n - 1),
                            max_size=1 + j * (G.n - 1)))
    assert g_fold(G, ys) == g_fold(G, data.draw(st.permutations(ys)))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_zero_absorbs_and_one_is_neutral(data):
    G = data.draw(st.sampled_from(corpus().structures))
    xs = data.draw(st.lists(st.integers(0, G.size - 1), min_size=G.n, max_size=G.n))
    i = data.draw(st.integers(0, G.n - 1))
    assert G.g(*(xs[:i] + [0] + xs[i + 1:])) == 0
    assert G.g(*([xs[0]] + [G.one] * (G.n - 1))) == xs[0]
