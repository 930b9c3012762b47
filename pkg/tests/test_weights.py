"""Affine weights, pairings, shifted reflections, and admissibility."""

from fractions import Fraction

import pytest

from affine_verma import liealg, weights, verma, singular
from affine_verma.claims import verifies


def special_level(l):
    return Fraction(3 - 2 * l, 2)


@verifies("admissibility")
@pytest.mark.parametrize("l", range(4, 9))
def test_admissible_at_special_level(l):
    alg = liealg.algebra("D", l)
    w = weights.vacuum_weight(l, special_level(l))
    rep = weights.check_admissible(alg, w)
    assert rep.admissible
    assert not rep.violations
    assert rep.certified
    assert rep.rank == l + 1


@verifies("admissibility")
@pytest.mark.parametrize("l", range(4, 9))
def test_named_pairings(l):
    rep = weights.report(l)
    pair = rep["simple_pairings"]
    for i in range(1, l + 1):
        assert pair["alpha_%d" % i] == "1"
    assert pair["alpha_0"] == str(Fraction(5, 2) - l)
    assert pair["two_delta_minus_theta"] == "2"


def test_admissibility_negative_controls():
    alg = liealg.algebra("D", 4)
    # critical level: level + dual Coxeter = 0
    crit = weights.check_admissible(alg, weights.vacuum_weight(4, Fraction(-6)))
    assert not crit.admissible and crit.critical
    # integer level -1 puts a nonpositive integer pairing on the affine root
    bad = weights.check_admissible(alg, weights.vacuum_weight(4, Fraction(-1)))
    assert not bad.admissible
    assert bad.violations


def test_mode_bound_env_and_argument(monkeypatch):
    monkeypatch.delenv(weights.MODE_BOUND_ENV, raising=False)
    assert weights.mode_bound_from_env() == weights.DEFAULT_MODE_BOUND
    monkeypatch.setenv(weights.MODE_BOUND_ENV, "33")
    assert weights.mode_bound_from_env() == 33
    rep = weights.report(4)
    assert rep["mode_bound"] == 33
    # an explicit argument beats the environment
    rep = weights.report(4, mode_bound=7)
    assert rep["mode_bound"] == 7
    monkeypatch.setenv(weights.MODE_BOUND_ENV, "0")
    with pytest.raises(ValueError):
        weights.mode_bound_from_env()


@verifies("weight-reflection")
@pytest.mark.parametrize("l", [4, 5, 6])
def test_singular_weight_is_shifted_reflection(l):
    alg = liealg.algebra("D", l)
    lam = weights.vacuum_weight(l, special_level(l))
    root = weights.AffineRoot(tuple(-c for c in alg.theta), 2)
    reflected = weights.reflect_dot(alg, lam, root)
    # finite part: twice the highest root; depth: 4 below the vacuum
    assert reflected.level == lam.level
    assert reflected.finite == tuple(2 * c for c in alg.theta)
    assert reflected.delta == -4
    module = verma.vacuum_module("D", l)
    v = singular.singular_vector(module)
    assert v.degree() == -reflected.delta
    assert tuple(v.weight()) == reflected.finite


def test_reflection_is_involutive(rng):
    alg = liealg.algebra("D", 4)
    lam = weights.vacuum_weight(4, special_level(4))
    finite_roots = list(alg.positive_roots)
    for _ in range(50):
        root = weights.AffineRoot(
            rng.choice(finite_roots), rng.randint(-3, 3))
        once = weights.reflect_dot(alg, lam, root)
        twice = weights.reflect_dot(alg, once, root)
        assert twice == lam


def test_pairing_values():
    alg = liealg.algebra("D", 4)
    lam = weights.vacuum_weight(4, special_level(4))
    shifted = lam + weights.rho_hat(alg)
    # long simple root at mode 0 pairs shifted to 1
    a1 = weights.AffineRoot(alg.simple_roots[0], 0)
    assert weights.pairing(shifted, a1) == 1
    # scaling the mode moves the pairing by level + dual Coxeter
    a1m = weights.AffineRoot(alg.simple_roots[0], 1)
    assert weights.pairing(shifted, a1m) - weights.pairing(shifted, a1) \
        == shifted.level


def test_weight_arithmetic():
    w1 = weights.vacuum_weight(4, Fraction(1, 2))
    w2 = weights.AffineWeight.make((1, 0, 0, 0), Fraction(1), -2)
    s = w1 + w2
    assert s.finite == (1, 0, 0, 0)
    assert s.level == Fraction(3, 2)
    assert s.delta == -2
    assert (s - w2) == w1
    assert w2.scale(2).delta == -4
