"""Tensor products, symmetric powers of p+, and the two multiplicity routes."""

from __future__ import annotations

import math
import random

import pytest

from dsbranch.errors import DomainError
from dsbranch.hermitian import build_pair, kirwan_cone
from dsbranch.mult import (
    asymptotic_support,
    blattner_mult,
    holo_k_mult,
    schmid_degree,
    sym_power_character,
    tensor_decompose,
)
from dsbranch.params import blattner_param
from dsbranch.rootsys import Q, RootDatum, Weight, freudenthal, simple_system, weyl_dim


def _w(coords, quotient=False):
    return Weight(tuple(Q(c) for c in coords), quotient)


def _gl(n):
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                c = [0] * n
                c[i], c[j] = 1, -1
                roots.append(_w(c))
    pos = frozenset(r for r in roots if r > _w([0] * n))
    return RootDatum(n, False, frozenset(roots), simple_system(pos), math.factorial(n)), pos


def test_clebsch_gordan():
    datum, pos = _gl(2)
    rng = random.Random(2)
    for _ in range(25):
        a = rng.randint(0, 6)
        b = rng.randint(0, 6)
        dec = tensor_decompose(datum, pos, _w([a, 0]), _w([b, 0]))
        lo, hi = min(a, b), max(a, b)
        want = {_w([a + b - k, k]): 1 for k in range(lo + 1)}
        assert dec.terms == want
        assert sum(
            m * weyl_dim(datum, pos, w) for w, m in dec.terms.items()
        ) == (a + 1) * (b + 1)


def test_det_twist_tensor_is_irreducible():
    # V_(3,3) is one dimensional, so the product has a single term
    datum, pos = _gl(2)
    dec = tensor_decompose(datum, pos, _w([3, 3]), _w([2, 0]))
    assert dec.terms == {_w([5, 3]): 1}


def test_tensor_weight_multiset_oracle():
    """Multiplying weight multisets directly must match the decomposition."""
    datum, pos = _gl(3)
    rng = random.Random(9)
    for _ in range(6):
        a = _w(sorted((rng.randint(0, 2) for _ in range(3)), reverse=True))
        b = _w(sorted((rng.randint(0, 2) for _ in range(3)), reverse=True))
        product: dict[Weight, int] = {}
        for wa, ma in freudenthal(datum, pos, a).items():
            for wb, mb in freudenthal(datum, pos, b).items():
                product[wa + wb] = product.get(wa + wb, 0) + ma * mb
        rebuilt: dict[Weight, int] = {}
        for hw, m in tensor_decompose(datum, pos, a, b).terms.items():
            for w, k in freudenthal(datum, pos, hw).items():
                rebuilt[w] = rebuilt.get(w, 0) + m * k
        assert rebuilt == product


def test_tensor_rejects_non_dominant():
    datum, pos = _gl(2)
    with pytest.raises(DomainError) as err:
        tensor_decompose(datum, pos, _w([0, 1]), _w([1, 0]))
    assert err.value.code == "non-dominant"


def test_schmid_degrees():
    sp2 = build_pair("sp", n=2)
    assert schmid_degree(sp2, 0).terms == {_w([0, 0]): 1}
    assert schmid_degree(sp2, 1).terms == {_w([2, 0]): 1}
    assert schmid_degree(sp2, 2).terms == {_w([4, 0]): 1, _w([2, 2]): 1}
    assert schmid_degree(sp2, 3).terms == {_w([6, 0]): 1, _w([4, 2]): 1}
    su11 = build_pair("su", p=1, q=1)
    assert schmid_degree(su11, 3).terms == {_w([3, -3], True): 1}
    assert all(d == 2 for d in schmid_degree(sp2, 2).grading.values())


def test_schmid_matches_symmetric_power_character():
    for args in (("su", 2, 2, None), ("su", 2, 3, None), ("sp", None, None, 2)):
        pair = build_pair(args[0], p=args[1], q=args[2], n=args[3])
        for d in range(4):
            total: dict[Weight, int] = {}
            for hw, m in schmid_degree(pair, d).terms.items():
                for w, k in freudenthal(
                    pair.compact_datum, pair.compact_positives, hw
                ).items():
                    total[w] = total.get(w, 0) + m * k
            assert total == sym_power_character(pair, d)


def test_holo_k_mult_examples():
    sp2 = build_pair("sp", n=2)
    big = _w([3, 3])
    assert holo_k_mult(sp2, big, _w([3, 3])) == 1
    assert holo_k_mult(sp2, big, _w([5, 3])) == 1
    assert holo_k_mult(sp2, big, _w([4, 4])) == 0
    assert holo_k_mult(sp2, big, _w([4, 3])) == 0  # off the lattice coset
    assert holo_k_mult(sp2, big, _w([2, 2])) == 0  # below the lowest K-type
    with pytest.raises(DomainError) as err:
        holo_k_mult(sp2, big, _w([3, 4]))
    assert err.value.code == "non-dominant"
    for bad in (_w([1, 3]), _w([0, 0])):
        with pytest.raises(DomainError) as err:
            holo_k_mult(sp2, bad, _w([3, 3]))
        assert err.value.code == "bad-input"


def test_blattner_sp1_alternating_series():
    sp1 = build_pair("sp", n=1)
    lam = _w([3])
    values = [blattner_mult(sp1, lam, _w([4 + k])) for k in range(6)]
    assert values == [1, 0, 1, 0, 1, 0]


def test_blattner_requires_condition():
    sp4 = build_pair("sp", n=4)
    with pytest.raises(DomainError) as err:
        blattner_mult(sp4, _w([5, 3, 1, -2]), _w([6, 5, 3, -1]))
    assert err.value.code == "condition-violated"


def test_blattner_equals_tensor_route_on_sp2():
    sp2 = build_pair("sp", n=2)
    lam = _w([2, 1])
    big = blattner_param(sp2, lam)
    assert big == _w([3, 3])
    for a in range(3, 9):
        for b in range(3, a + 1):
            mu = _w([a, b])
            assert blattner_mult(sp2, lam, mu) == holo_k_mult(sp2, big, mu)
    assert blattner_mult(sp2, lam, _w([4, 4])) == 0


def test_asymptotic_support_is_the_cone():
    for args in (("su", 2, 3, None), ("sp", None, None, 3)):
        pair = build_pair(args[0], p=args[1], q=args[2], n=args[3])
        assert tuple(asymptotic_support(pair)) == kirwan_cone(pair)
