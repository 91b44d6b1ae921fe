"""Chambers, discrete series parameters, and the lowest K-type maps."""

from __future__ import annotations

import random

import pytest

from dsbranch.errors import DomainError
from dsbranch.hermitian import build_pair, is_compact_dominant
from dsbranch.params import (
    blattner_param,
    chamber_of,
    chambers,
    condition_hc,
    hc_from_blattner,
    in_ghat_d,
    rho_n_lambda,
)
from dsbranch.rootsys import Q, Weight, inner


def _w(coords, quotient=False):
    return Weight(tuple(Q(c) for c in coords), quotient)


def test_chamber_counts():
    cases = [
        (("sp", None, None, 1), 2),
        (("sp", None, None, 2), 4),
        (("sp", None, None, 4), 16),
        (("su", 1, 1, None), 2),
        (("su", 2, 1, None), 3),
        (("su", 3, 2, None), 10),
    ]
    for (fam, p, q, n), count in cases:
        pair = build_pair(fam, p=p, q=q, n=n)
        assert len(chambers(pair)) == count


def test_chamber_zero_is_holomorphic_and_ids_are_descending():
    for args in (("sp", None, None, 2), ("su", 3, 2, None)):
        pair = build_pair(args[0], p=args[1], q=args[2], n=args[3])
        chs = chambers(pair)
        assert chs[0].noncompact_positives == pair.noncompact_positives_z0
        assert [c.id for c in chs] == list(range(len(chs)))
        tails = [c.rho_n.coords for c in chs[1:]]
        assert tails == sorted(tails, reverse=True)
        for c in chs:
            assert is_compact_dominant(pair, c.rho_n)


def test_sp2_chamber_table():
    pair = build_pair("sp", n=2)
    rho_ns = [c.rho_n for c in chambers(pair)]
    assert rho_ns == [
        _w(["3/2", "3/2"]),
        _w(["3/2", "-1/2"]),
        _w(["1/2", "-3/2"]),
        _w(["-3/2", "-3/2"]),
    ]


def test_chamber_of_maps_rho_n_to_its_chamber():
    for args in (("sp", None, None, 2), ("sp", None, None, 3), ("su", 2, 2, None)):
        pair = build_pair(args[0], p=args[1], q=args[2], n=args[3])
        for ch in chambers(pair):
            if all(inner(ch.rho_n, a) != 0 for a in pair.root_datum.roots):
                assert chamber_of(pair, ch.rho_n).id == ch.id
    # (1,0) kills the noncompact root 2e2; compact walls do not matter here
    assert chamber_of(build_pair("sp", n=2), _w([1, 1])).id == 0
    with pytest.raises(DomainError) as err:
        chamber_of(build_pair("sp", n=2), _w([1, 0]))
    assert err.value.code == "on-wall"


def test_in_ghat_d():
    sp2 = build_pair("sp", n=2)
    assert in_ghat_d(sp2, _w([2, 1]))
    assert in_ghat_d(sp2, _w([2, -1]))
    assert not in_ghat_d(sp2, _w([2, 2]))  # singular
    assert not in_ghat_d(sp2, _w([2, 0]))  # on a long wall
    assert not in_ghat_d(sp2, _w(["5/2", 1]))  # off the lattice shift
    su11 = build_pair("su", p=1, q=1)
    assert in_ghat_d(su11, _w([1, 0], True))
    assert not in_ghat_d(su11, _w([0, 0], True))
    assert not in_ghat_d(su11, _w(["1/4", 0], True))


def test_parameter_map_worked_examples():
    sp4 = build_pair("sp", n=4)
    lam = _w([5, 3, 1, -2])
    assert rho_n_lambda(sp4, lam) == _w(["5/2", "5/2", "3/2", "-1/2"])
    assert blattner_param(sp4, lam) == _w([6, 5, 3, -1])
    assert not condition_hc(sp4, lam)

    su32 = build_pair("su", p=3, q=2)
    lam = _w([3, 1, -1, 0, -3], True)
    assert rho_n_lambda(su32, lam) == _w([1, 1, 0, "-1/2", "-3/2"], True)
    assert blattner_param(su32, lam) == _w([3, 2, 0, -1, -4], True)
    assert not condition_hc(su32, lam)

    sp1 = build_pair("sp", n=1)
    assert blattner_param(sp1, _w([3])) == _w([4])
    sp2 = build_pair("sp", n=2)
    assert blattner_param(sp2, _w([2, 1])) == _w([3, 3])
    assert condition_hc(sp2, _w([2, 1]))


def test_parameter_map_requires_ghat_d():
    sp2 = build_pair("sp", n=2)
    for fn in (blattner_param, condition_hc):
        with pytest.raises(DomainError) as err:
            fn(sp2, _w([2, 2]))
        assert err.value.code == "not-ghat-d"
    # rho_n(lam) only needs noncompact regularity
    assert rho_n_lambda(sp2, _w([2, 2])) == sp2.rho_n
    with pytest.raises(DomainError) as err:
        rho_n_lambda(sp2, _w([2, 0]))
    assert err.value.code == "on-wall"


def test_hc_from_blattner_inverts_on_the_holomorphic_cone():
    sp2 = build_pair("sp", n=2)
    assert hc_from_blattner(sp2, _w([3, 3])) == _w([2, 1])
    rng = random.Random(5)
    for _ in range(40):
        a = rng.randint(-4, 8)
        b = rng.randint(-4, 8)
        lam = _w([max(a, b) + 1, min(a, b)]) if a != b else _w([a + 1, a])
        if min(lam.coords) <= 0:
            continue
        big = blattner_param(sp2, lam)
        assert hc_from_blattner(sp2, big) == lam
    with pytest.raises(DomainError) as err:
        hc_from_blattner(sp2, _w([1, 0]))
    assert err.value.code == "bad-input"


def test_blattner_param_formula_and_condition_signs():
    sp2 = build_pair("sp", n=2)
    for a in range(-6, 7):
        for b in range(-6, 7):
            lam = _w([a, b])
            if not in_ghat_d(sp2, lam):
                continue
            big = blattner_param(sp2, lam)
            assert big == lam - sp2.rho_c + rho_n_lambda(sp2, lam)
            if condition_hc(sp2, lam):
                for beta in sp2.noncompact_positives_z0:
                    assert inner(beta, lam) * inner(beta, big) > 0
