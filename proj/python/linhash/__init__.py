"""Exact-arithmetic laboratory for linear hashing.

Thin wrapper over the C++ core. Exact rational results cross the boundary as
(numerator, denominator) string pairs; the helpers here lift them to
:class:`fractions.Fraction`.
"""

from fractions import Fraction

try:
    from . import _linhash as _core
except ImportError:  # built out-of-tree: module on PYTHONPATH
    import _linhash as _core

from _linhash import (  # noqa: F401  (re-exported verbatim)
    BudgetExceededError,
    FamilyConfig,
    HashParam,
    ItemSet,
    NotAUnitError,
    bin_of,
    claim_ids,
    close_pairs,
    collision_count,
    divisor_count,
    divisors,
    generate_set,
    histogram,
    is_prime,
    maxload,
    mod_inverse,
    mod_reduce,
    overlap,
    param_space_size,
    pigeon_rep,
    prime_in_range,
    residue_injectivity_check,
    sample_param,
    signed_distance,
    totient,
    units,
    verify_claim,
)


def _frac(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def farey_sequence(order):
    """Farey sequence F_order as a list of Fractions."""
    return [_frac(p) for p in _core.farey_sequence(order)]


def farey_successor(f, order):
    return _frac(_core.farey_successor(f.numerator, f.denominator, order))


def pair_collision_prob(x, y, config):
    return _frac(_core.pair_collision_prob(x, y, config))


def expected_collisions(items, config):
    return _frac(_core.expected_collisions(items, config))


def excess_overlap(x, p):
    return _frac(_core.excess_overlap(x, p))


def sum_excess(items, p):
    return _frac(_core.sum_excess(items, p))


def epicbound_rhs(m, k, p):
    return _frac(_core.epicbound_rhs(m, k, p))


def jensen_maxload_bound(expected_collisions_value, n):
    f = Fraction(expected_collisions_value)
    return _frac(_core.jensen_maxload_bound(f.numerator, f.denominator, n))


def effective_modulus_of(a, n, u):
    f = Fraction(a)
    return _core.effective_modulus_of(f.numerator, f.denominator, n, u)


def crowding_index(a, n):
    f = Fraction(a)
    return _core.crowding_index(f.numerator, f.denominator, n)


def f_distribution(n, u, budget_nu=100_000):
    """Exact distribution of the effective modulus: {k: Fraction measure}."""
    return {k: _frac(v) for k, v in _core.f_distribution(n, u, budget_nu).items()}


def claimed_intervals(k, n, u):
    return [(_frac(lo), _frac(hi)) for lo, hi in _core.claimed_intervals(k, n, u)]


def exact_expected_maxload(items, config, budget=100_000_000):
    d = _core.exact_expected_maxload(items, config, budget)
    d["mean"] = _frac(d["mean"])
    return d


def mc_expected_maxload(items, config, trials, seed):
    d = _core.mc_expected_maxload(items, config, trials, seed)
    d["mean"] = _frac(d["mean"])
    return d


def local_search_worst(initial, config, budget, seed):
    d = _core.local_search_worst(initial, config, budget, seed)
    d["score"] = _frac(d["score"])
    return d
