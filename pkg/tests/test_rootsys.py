"""Root system layer: orbits, multiplicities, partitions, exact linear algebra."""

from __future__ import annotations

import math
import random

import pytest

from dsbranch.errors import DomainError
from dsbranch.linalg import fm_feasible_point, nonneg_combination, solve_in_span
from dsbranch.rootsys import (
    Q,
    RootDatum,
    Weight,
    dominant_rep,
    freudenthal,
    inner,
    kostant_partition,
    reflect,
    rho,
    signed_orbit,
    simple_system,
    weyl_dim,
    weyl_orbit,
)


def _w(coords, quotient=False):
    return Weight(tuple(Q(c) for c in coords), quotient)


def _type_a(n):
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                c = [0] * n
                c[i], c[j] = 1, -1
                roots.append(_w(c, True))
    pos = frozenset(r for r in roots if r.coords > tuple([Q(0)] * n))
    return RootDatum(n, True, frozenset(roots), simple_system(pos), math.factorial(n))


def _type_c(n):
    roots = set()
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    c = [0] * n
                    c[i], c[j] = si, sj
                    roots.add(_w(c))
        for s in (2, -2):
            c = [0] * n
            c[i] = s
            roots.add(_w(c))
    pos = frozenset(r for r in roots if r > _w([0] * n))
    return RootDatum(n, False, frozenset(roots), simple_system(pos), (2**n) * math.factorial(n))


A2 = _type_a(3)
A3 = _type_a(4)
C2 = _type_c(2)
C3 = _type_c(3)


def _positives(datum):
    zero = _w([0] * datum.ambient_dim, datum.quotient)
    return frozenset(r for r in datum.roots if r > zero)


def test_quotient_weights_canonicalize():
    assert _w([2, 1, 0], True) == _w([3, 2, 1], True)
    assert _w([1, 0, -1], True).coords == (Q(1), Q(0), Q(-1))
    assert hash(_w([2, 1, 0], True)) == hash(_w([1, 0, -1], True))
    assert _w([1, 1, 1], True).is_zero


def test_reflection_is_involution_and_preserves_roots():
    rng = random.Random(7)
    for datum in (A2, C2, C3):
        roots = sorted(datum.roots)
        for _ in range(200):
            a = roots[rng.randrange(len(roots))]
            v = _w([rng.randint(-9, 9) for _ in range(datum.ambient_dim)], datum.quotient)
            assert reflect(a, reflect(a, v)) == v
        for a in roots:
            for b in roots:
                assert reflect(a, b) in datum.roots


def test_reflect_rejects_zero_root():
    with pytest.raises(DomainError) as err:
        reflect(_w([0, 0, 0]), _w([1, 0, 0]))
    assert err.value.code == "zero-root"


def test_dominant_rep_and_orbit():
    pos = _positives(A2)
    d, sign = dominant_rep(A2, pos, _w([1, 2, 0], True))
    assert d == _w([2, 1, 0], True)
    assert sign == -1
    assert d in weyl_orbit(A2, _w([1, 2, 0], True))
    assert len(weyl_orbit(A2, rho(pos))) == 6
    # on a wall the sign degenerates to 0
    assert dominant_rep(A2, pos, _w([1, 1, 0], True))[1] == 0


def test_orbit_size_divides_group_order():
    rng = random.Random(3)
    for datum in (A2, A3, C2, C3):
        for _ in range(5):
            v = _w([rng.randint(-4, 4) for _ in range(datum.ambient_dim)], datum.quotient)
            assert datum.weyl_order % len(weyl_orbit(datum, v)) == 0


def test_freudenthal_small_catalogue():
    a1 = _type_a(2)
    pos_a1 = _positives(a1)
    for m in range(6):
        mults = freudenthal(a1, pos_a1, _w([m, 0], True))
        assert len(mults) == m + 1
        assert set(mults.values()) == {1}

    pos_a2 = _positives(A2)
    adjoint = freudenthal(A2, pos_a2, _w([1, 0, -1], True))
    assert adjoint[_w([0, 0, 0], True)] == 2
    assert sum(adjoint.values()) == 8 == weyl_dim(A2, pos_a2, _w([1, 0, -1], True))

    pos_c2 = _positives(C2)
    assert sum(freudenthal(C2, pos_c2, _w([1, 0])).values()) == 4
    assert sum(freudenthal(C2, pos_c2, _w([1, 1])).values()) == 5
    assert sum(freudenthal(C2, pos_c2, _w([2, 0])).values()) == 10


def test_freudenthal_matches_weyl_dim():
    rng = random.Random(11)
    for datum in (A2, A3, C2, C3):
        pos = _positives(datum)
        for _ in range(4):
            hw = sorted((rng.randint(0, 3) for _ in range(datum.ambient_dim)), reverse=True)
            lam = _w(hw, datum.quotient)
            assert sum(freudenthal(datum, pos, lam).values()) == weyl_dim(datum, pos, lam)


def test_kostant_partition_a2_string():
    gens = _positives(A2)
    theta = _w([1, 0, -1], True)
    for k in range(5):
        assert kostant_partition(gens, theta * Q(k)) == k + 1
    assert kostant_partition(gens, _w([1, -1, 0], True)) == 1
    assert kostant_partition(gens, _w([-1, 1, 0], True)) == 0


def test_kostant_partition_brute_force():
    """Exhaustive N-combination count over a grading box agrees everywhere."""
    gens = sorted(_positives(C2))
    grad = _w([0, 0])
    for g in gens:
        grad = grad + g
    cap = 8
    counts: dict[Weight, int] = {}

    def rec(i, acc):
        if inner(acc, grad) > cap:
            return
        if i == len(gens):
            counts[acc] = counts.get(acc, 0) + 1
            return
        term = acc
        while inner(term, grad) <= cap:
            rec(i + 1, term)
            term = term + gens[i]

    rec(0, _w([0, 0]))
    # every representation of a target inside the box stays inside the box
    for target, expect in counts.items():
        assert kostant_partition(gens, target) == expect
    assert counts[_w([0, 0])] == 1


def test_kostant_partition_rejects_bad_grading():
    gens = (_w([1, -1, 0], True), _w([0, 1, -1], True))
    with pytest.raises(DomainError) as err:
        kostant_partition(gens, _w([1, 0, -1], True), grading=_w([1, -1, 0], True))
    assert err.value.code == "bad-grading"


def test_signed_orbit_rejects_singular():
    with pytest.raises(DomainError) as err:
        signed_orbit(_positives(A2), _w([1, 1, 0], True))
    assert err.value.code == "on-wall"


def test_signed_orbit_signs_sum_to_zero():
    orb = signed_orbit(_positives(C2), _w([2, 1]))
    assert len(orb) == 8
    assert sum(s for _, s in orb) == 0


def test_solve_in_span():
    vs = (_w([1, -1, 0], True).coords, _w([0, 1, -1], True).coords)
    assert solve_in_span(vs, _w([1, 0, -1], True).coords) == (Q(1), Q(1))
    assert solve_in_span(vs[:1], _w([0, 1, -1], True).coords) is None


def test_nonneg_combination():
    gens = (_w([1, 0, -1], True).coords, _w([0, 1, -1], True).coords)
    assert nonneg_combination(gens, _w([1, 1, -2], True).coords) is not None
    assert nonneg_combination(gens, _w([-1, 0, 1], True).coords) is None


def test_fm_feasible_point():
    # x >= 1, y >= 1, x + y <= 3  (as -x - y >= -3)
    rows = [((Q(1), Q(0)), Q(1)), ((Q(0), Q(1)), Q(1)), ((Q(-1), Q(-1)), Q(-3))]
    pt = fm_feasible_point(rows, 2)
    assert pt is not None
    x, y = pt
    assert x >= 1 and y >= 1 and x + y <= 3
    # x >= 2 together with x <= 1 has no solution
    assert fm_feasible_point([((Q(1),), Q(2)), ((Q(-1),), Q(-1))], 1) is None
