import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krasner.classify import (absorbing_shape, classify_all, classify_ideal,
                              find_delta0_violation, find_N_violation,
                              find_sn_absorbing_violation, find_sn_delta0_zeros,
                              find_strongly_weakly_violation, is_delta0_hyperideal,
                              is_delta0_multiplicative_subset, is_delta_primary,
                              is_hyperintegral_domain, is_J_hyperideal, is_local,
                              is_multiplicative_subset, is_N_hyperideal, is_primary, is_prime,
                              is_sn_absorbing_delta0, is_strongly_weakly_sn_absorbing_delta0,
                              is_weakly_sn_absorbing_delta0, witness_violates)
from krasner.errors import DomainError
from krasner.expansions import BUILTIN_NAMES, builtin_expansion, residual_expansion
from krasner.hypercore import HyperStructure, mask
from krasner.ideals import enumerate_hyperideals

from helpers import builtin, corpus

TWO4 = mask([0, 2, 4])
THREE = mask([0, 3])


def ex(G, name):
    return builtin_expansion(G, name)


def test_prime_and_primary():
    G, Z4, K = builtin("Z6"), builtin("Z4"), builtin("krasner2")
    assert is_prime(G, THREE) and not is_prime(G, 1) and is_prime(K, 1)
    assert is_primary(Z4, 1) and not is_primary(G, 1) and is_primary(G, TWO4)
    with pytest.raises(DomainError):
        is_prime(G, G.carrier)


def test_domains_and_local_rings():
    assert not is_hyperintegral_domain(builtin("Z6"))
    assert is_hyperintegral_domain(builtin("krasner2"))
    assert is_hyperintegral_domain(builtin("sign3"))
    assert not is_local(builtin("Z6")) and is_local(builtin("Z4"))
    assert is_local(builtin("krasner2"))


def test_n_and_j_hyperideals():
    G, K, S = builtin("Z6"), builtin("krasner2"), builtin("sign3")
    assert not is_N_hyperideal(G, TWO4)
    assert is_N_hyperideal(K, 1) and is_N_hyperideal(S, 1)
    assert not is_J_hyperideal(G, 1) and not is_J_hyperideal(G, TWO4)
    assert is_J_hyperideal(K, 1)
    with pytest.raises(DomainError):
        is_N_hyperideal(G, G.carrier)


def test_n_failure_witnesses_replay():
    G = builtin("Z6")
    d = residual_expansion(G, THREE)
    w = find_N_violation(G, TWO4)
    assert witness_violates(G, d, TWO4, "N", w)
    # the hand-made tuple (2, 3), omitting position 1, is a violation as well
    assert witness_violates(G, d, TWO4, "N", {"tuple": (2, 3), "position": 1})


def test_delta0_hyperideals():
    G = builtin("Z6")
    assert is_delta0_hyperideal(G, residual_expansion(G, THREE), TWO4)
    assert is_delta0_hyperideal(G, ex(G, "deltaG"), THREE)
    d0 = ex(G, "delta0")
    assert not is_delta0_hyperideal(G, d0, THREE)
    assert witness_violates(G, d0, THREE, "deltaZero", find_delta0_violation(G, d0, THREE))
    # x1 = 3, x2 = 5: product 3 in A, x1 outside {0}, x2 outside A
    assert witness_violates(G, d0, THREE, "deltaZero", {"tuple": (3, 5), "position": 2})


def test_delta_primary():
    G, Z4 = builtin("Z6"), builtin("Z4")
    assert is_delta_primary(G, ex(G, "delta1"), THREE)
    assert not is_delta_primary(G, ex(G, "delta0"), 1)
    assert is_delta_primary(Z4, ex(Z4, "delta1"), 1)


def test_multiplicative_subsets():
    G, K = builtin("Z6"), builtin("krasner2")
    assert is_multiplicative_subset(G, mask([1, 2, 4, 5]))
    assert is_multiplicative_subset(G, mask([1]))
    assert not is_multiplicative_subset(G, mask([1, 2]))
    d = residual_expansion(G, THREE)
    assert is_delta0_multiplicative_subset(G, d, mask([1, 3, 5]))
    assert not is_delta0_multiplicative_subset(G, d, mask([1, 5]))
    assert is_delta0_multiplicative_subset(K, ex(K, "delta0"), mask([1]))


def test_absorbing_shapes():
    G = builtin("Z6")
    assert absorbing_shape(G, 2) == (3, 2, [(0, 2), (1, 2)])
    H = HyperStructure.from_functions("Z2^(2,3)", 2, 2, 3, 1,
                                      lambda a, b: [(a + b) % 2], lambda a, b, c: a * b * c)
    L, k, others = absorbing_shape(H, 2)
    assert (L, k, len(others)) == (5, 3, 9)
    with pytest.raises(DomainError):
        absorbing_shape(G, 0)


def test_absorbing_examples():
    G, Z8 = builtin("Z6"), builtin("Z8")
    d0, d1 = ex(G, "delta0"), ex(G, "delta1")
    assert is_sn_absorbing_delta0(G, d0, 1, 2)
    assert not is_sn_absorbing_delta0(G, d1, THREE, 2)
    assert witness_violates(G, d1, THREE, "snAbsorbing(2)", {"tuple": (1, 1, 3)})
    assert is_sn_absorbing_delta0(G, ex(G, "deltaG"), THREE, 2)
    assert is_weakly_sn_absorbing_delta0(G, d0, 1, 2)
    assert not is_weakly_sn_absorbing_delta0(G, d1, THREE, 2)
    z0 = ex(Z8, "delta0")
    four = mask([0, 4])
    w = find_sn_absorbing_violation(Z8, z0, four, 2, weakly=True)
    assert witness_violates(Z8, z0, four, "weaklySnAbsorbing(2)", w)
    assert witness_violates(Z8, z0, four, "weaklySnAbsorbing(2)", {"tuple": (2, 1, 2)})


def test_strongly_weakly_examples():
    G, Z8 = builtin("Z6"), builtin("Z8")
    assert is_strongly_weakly_sn_absorbing_delta0(G, ex(G, "delta0"), 1, 2)
    assert is_strongly_weakly_sn_absorbing_delta0(G, ex(G, "deltaG"), THREE, 2)
    z0 = ex(Z8, "delta0")
    w = find_strongly_weakly_violation(Z8, z0, mask([0, 4]), 2)
    assert w == {"ideals": ((0, 2, 4, 6), tuple(range(8)), (0, 2, 4, 6))}
    assert witness_violates(Z8, z0, mask([0, 4]), "stronglyWeaklySnAbsorbing(2)", w)


def test_delta0_zero_tuples():
    G, Z8 = builtin("Z6"), builtin("Z8")
    zeros = find_sn_delta0_zeros(Z8, ex(Z8, "delta0"), 1, 2)
    assert (2, 2, 2) in zeros and zeros == sorted(zeros)
    assert find_sn_delta0_zeros(G, ex(G, "delta1"), THREE, 2) == []


def test_classification_records():
    Z4 = builtin("Z4")
    rec = classify_ideal(Z4, ex(Z4, "delta1"), 1)
    assert rec.flags["primary"] and not rec.flags["prime"]
    trivial = HyperStructure.from_functions("one-point", 1, 2, 2, 0,
                                            lambda a, b: [0], lambda a, b: 0)
    assert classify_all(trivial, builtin_expansion(trivial, "delta0")) == []
    G = builtin("Z6")
    recs = {r.ideal: r for r in classify_all(G, residual_expansion(G, THREE))}
    assert recs[TWO4].flags["deltaZero"] and not recs[TWO4].flags["N"]
    assert recs[TWO4].to_dict()["ideal"] == [0, 2, 4]


def _pairs_strategy():
    return st.tuples(st.sampled_from(corpus().structures), st.sampled_from(BUILTIN_NAMES))


@settings(max_examples=40, deadline=None)
@given(_pairs_strategy())
def test_every_stored_witness_replays(pair):
    G, name = pair
    d = ex(G, name)
    for rec in classify_all(G, d):
        for flag, w in rec.witnesses.items():
            assert witness_violates(G, d, rec.ideal, flag, w), (G.name, name, flag, w)


@settings(max_examples=40, deadline=None)
@given(_pairs_strategy())
def test_flag_implications(pair):
    G, name = pair
    d = ex(G, name)
    for rec in classify_all(G, d):
        fl = rec.flags
        assert not fl["prime"] or fl["primary"]
        assert not fl["maximal"] or fl["prime"]
        for s in (1, 2):
            assert not fl[f"snAbsorbing({s})"] or fl[f"weaklySnAbsorbing({s})"]
            assert (not fl[f"stronglyWeaklySnAbsorbing({s})"]
                    or fl[f"weaklySnAbsorbing({s})"])
        if d.zero == G.carrier:
            assert fl["deltaZero"]


@settings(max_examples=30, deadline=None)
@given(_pairs_strategy())
def test_weakly_and_strong_notions_meet_at_zero_tuples(pair):
    # weakly absorbing but not absorbing happens exactly when a delta(0)-zero tuple exists
    G, name = pair
    d = ex(G, name)
    for A in enumerate_hyperideals(G).proper():
        for s in (1, 2):
            if is_weakly_sn_absorbing_delta0(G, d, A, s):
                assert is_sn_absorbing_delta0(G, d, A, s) == (
                    find_sn_delta0_zeros(G, d, A, s) == [])
