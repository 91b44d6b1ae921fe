"""Multiplicity engines for the holomorphic model and the Blattner formula.

Two independent algorithms compute K-type multiplicities: the tensor model
V_Lambda (x) S(p+) decomposed degree by degree, and the alternating Weyl sum
over a Kostant partition function twisted into the chamber of the parameter.
Their agreement on the holomorphic chamber is a theorem; the test suite
checks it exhaustively at small coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .hermitian import HermitianPair, in_c_hol, kirwan_cone, z0_degree
from .params import blattner_param, condition_hc
from .rootsys import (
    RootDatum,
    Weight,
    dominant_rep,
    freudenthal,
    inner,
    kostant_partition,
    rho,
    signed_orbit,
    weyl_dim,
)


@dataclass
class RepDecomposition:
    """A finite sum of irreducibles: dominant highest weight -> multiplicity.

    grading, when present, records the z_o-degree of each term.
    """

    terms: dict[Weight, int]
    grading: dict[Weight, int] | None = None

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].coords)


@lru_cache(maxsize=None)
def _tensor_items(
    datum: RootDatum,
    positives: frozenset[Weight],
    small: Weight,
    big: Weight,
) -> tuple[tuple[Weight, int], ...]:
    out: dict[Weight, int] = {}
    if not positives:
        out[small + big] = 1
        return tuple(out.items())
    r = rho(positives)
    shifted = big + r
    for w, m in freudenthal(datum, positives, small).items():
        d, sign = dominant_rep(datum, positives, shifted + w)
        if sign == 0:
            continue
        k = d - r
        out[k] = out.get(k, 0) + sign * m
    items = tuple(sorted(((k, m) for k, m in out.items() if m), key=lambda kv: kv[0].coords))
    for k, m in items:
        if m < 0:
            raise AssertionError(f"negative tensor multiplicity at {k}")
    total = sum(m * weyl_dim(datum, positives, k) for k, m in items)
    if total != weyl_dim(datum, positives, small) * weyl_dim(datum, positives, big):
        raise AssertionError("tensor decomposition lost dimension")
    return items


def tensor_decompose(
    datum: RootDatum, positives: frozenset[Weight], lam: Weight, big: Weight
) -> RepDecomposition:
    """Decompose V_lam (x) V_big by Klimyk's alternating-orbit rule.

    The factor of smaller dimension is expanded into its weight multiset;
    total dimension is conserved (hard check).
    """
    for v in (lam, big):
        if any(inner(v, a) < 0 for a in positives):
            raise DomainError("non-dominant", f"{v} is not dominant")
    if weyl_dim(datum, positives, lam) <= weyl_dim(datum, positives, big):
        items = _tensor_items(datum, positives, lam, big)
    else:
        items = _tensor_items(datum, positives, big, lam)
    return RepDecomposition(dict(items))


@lru_cache(maxsize=None)
def _schmid_items(pair: HermitianPair, d: int) -> tuple[tuple[Weight, int], ...]:
    gens = kirwan_cone(pair)
    r = len(gens)
    out: list[Weight] = []

    def rec(k: int, remaining: int, acc: Weight) -> None:
        # generator g_k carries z_o-degree k+1
        if remaining == 0:
            out.append(acc)
            return
        if k == r:
            return
        step = k + 1
        cur = acc + gens[k]
        n = 1
        while n * step <= remaining:
            rec(k + 1, remaining - n * step, cur)
            cur = cur + gens[k]
            n += 1
        rec(k + 1, remaining, acc)

    rec(0, d, gens[0].zero_like())
    if len(set(out)) != len(out):
        raise AssertionError("Schmid decomposition produced a repeated weight")
    return tuple(sorted(((w, 1) for w in out), key=lambda kv: kv[0].coords))


def schmid_degree(pair: HermitianPair, d: int) -> RepDecomposition:
    """K-types of S^d(p+): highest weights sum n_k (gamma_1+...+gamma_k) with
    sum k n_k = d, each with multiplicity one."""
    if d < 0:
        raise DomainError("bad-input", "degree must be nonnegative")
    items = _schmid_items(pair, d)
    return RepDecomposition(dict(items), {w: d for w, _ in items})


@lru_cache(maxsize=None)
def _sym_items(pair: HermitianPair, d: int) -> tuple[tuple[Weight, int], ...]:
    betas = sorted(pair.noncompact_positives_z0)
    layers: list[dict[Weight, int]] = [{betas[0].zero_like(): 1}]
    for _ in range(d):
        layers.append({})
    for b in betas:
        for deg in range(1, d + 1):
            lower = layers[deg - 1]
            cur = layers[deg]
            for w, m in list(lower.items()):
                u = w + b
                cur[u] = cur.get(u, 0) + m
    return tuple(sorted(layers[d].items(), key=lambda kv: kv[0].coords))


def sym_power_character(pair: HermitianPair, d: int) -> dict[Weight, int]:
    """Exact weight multiset of S^d(p+), expanded monomial by monomial."""
    if d < 0:
        raise DomainError("bad-input", "degree must be nonnegative")
    return dict(_sym_items(pair, d))


def holo_k_mult(pair: HermitianPair, big: Weight, mu: Weight) -> int:
    """Multiplicity of V_mu in V_big (x) S(p+), read off at the single
    symmetric degree allowed by the central character."""
    if not in_c_hol(pair, big):
        raise DomainError("bad-input", f"{big} is not in the holomorphic cone")
    if any(inner(mu, a) < 0 for a in pair.compact_positives):
        raise DomainError("non-dominant", f"{mu} is not K-dominant")
    d = z0_degree(pair, mu) - z0_degree(pair, big)
    if d < 0 or d.denominator != 1:
        return 0
    total = 0
    for kappa, _ in _schmid_items(pair, int(d)):
        dec = tensor_decompose(pair.compact_datum, pair.compact_positives, kappa, big)
        total += dec.terms.get(mu, 0)
    return total


def blattner_mult(pair: HermitianPair, lam: Weight, mu: Weight) -> int:
    """K-type multiplicity of the discrete series with parameter lam at mu,
    by the alternating W_K-sum over the partition function of R_n^{+,lam}."""
    if not condition_hc(pair, lam):
        raise DomainError(
            "condition-violated",
            f"{lam} does not satisfy the sign condition linking it to its lowest K-type",
        )
    if any(inner(mu, a) < 0 for a in pair.compact_positives):
        raise DomainError("non-dominant", f"{mu} is not K-dominant")
    big = blattner_param(pair, lam)
    betas = tuple(
        sorted(b for b in pair.noncompact_roots if inner(lam, b) > 0)
    )
    total = 0
    base = mu + pair.rho_c
    for v, sign in signed_orbit(pair.compact_positives, base):
        target = v - pair.rho_c - big
        total += sign * kostant_partition(betas, target, grading=lam)
    if total < 0:
        raise AssertionError(f"Blattner sum came out negative at {mu}")
    return total


def asymptotic_support(pair: HermitianPair) -> list[Weight]:
    """Generators of the asymptotic K-support cone, independent of the
    parameter: the Kirwan cone of p."""
    return list(kirwan_cone(pair))
