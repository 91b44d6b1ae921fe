"""Discrete series parameter bookkeeping.

A regular weight that pairs nonzero with every noncompact root lies in a
unique chamber: a positive system of the full root datum containing the
compact positives.  The Blattner parameter map lam -> lam - rho_c + rho_n(lam)
and condition (beta, lam)(beta, Lambda(lam)) > 0 both live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .hermitian import HermitianPair, in_c_hol_geq, is_compact_dominant, lattice_member
from .rootsys import Weight, inner, rho, weyl_orbit


@dataclass(frozen=True)
class Chamber:
    """A positive system of the full datum containing the compact positives,
    identified by its noncompact half."""

    id: int
    noncompact_positives: frozenset[Weight]
    rho_n: Weight


@lru_cache(maxsize=None)
def chambers(pair: HermitianPair) -> tuple[Chamber, ...]:
    """All chambers, holomorphic first, then decreasing lexicographic rho_n.

    Enumerated from the Weyl orbit of rho of the holomorphic system: orbit
    points that are compact-dominant correspond one to one with positive
    systems containing the compact positives.
    """
    datum = pair.root_datum
    seed = rho(pair.holomorphic_positives)
    parts: set[frozenset[Weight]] = set()
    for v in weyl_orbit(datum, seed):
        if not is_compact_dominant(pair, v):
            continue
        if any(inner(v, a) == 0 for a in datum.roots):
            raise AssertionError("rho of the holomorphic system is not regular")
        parts.add(frozenset(b for b in pair.noncompact_roots if inner(b, v) > 0))
    hol = pair.noncompact_positives_z0
    if hol not in parts:
        raise AssertionError("holomorphic chamber missing from enumeration")
    rest = sorted(
        (p for p in parts if p != hol),
        key=lambda p: rho(p, like=pair.z0).coords,
        reverse=True,
    )
    out = [Chamber(0, hol, pair.rho_n)]
    for i, p in enumerate(rest, start=1):
        out.append(Chamber(i, p, rho(p, like=pair.z0)))
    return tuple(out)


def rho_n_of(pair: HermitianPair, chamber: Chamber) -> Weight:
    """Half the sum of the chamber's noncompact positives."""
    return chamber.rho_n


def chamber_of(pair: HermitianPair, lam: Weight) -> Chamber:
    """The chamber whose noncompact positives all pair strictly positively with lam."""
    for b in pair.noncompact_roots:
        if inner(lam, b) == 0:
            raise DomainError("on-wall", f"{lam} lies on the wall of {b}")
    for ch in chambers(pair):
        if all(inner(lam, b) > 0 for b in ch.noncompact_positives):
            return ch
    raise AssertionError("regular weight matched no chamber")


def in_ghat_d(pair: HermitianPair, lam: Weight) -> bool:
    """Harish-Chandra parameter test: compact-dominant, regular, in the
    rho-shifted weight lattice."""
    if not is_compact_dominant(pair, lam):
        return False
    if any(inner(lam, a) == 0 for a in pair.root_datum.roots):
        return False
    return lattice_member(pair, lam - rho(pair.holomorphic_positives))


def _require_ghat_d(pair: HermitianPair, lam: Weight) -> None:
    if not in_ghat_d(pair, lam):
        raise DomainError("not-ghat-d", f"{lam} is not a Harish-Chandra parameter")


def rho_n_lambda(pair: HermitianPair, lam: Weight) -> Weight:
    """Half the sum of the noncompact roots pairing positively with lam."""
    pos = [b for b in pair.noncompact_roots if inner(lam, b) > 0]
    for b in pair.noncompact_roots:
        if inner(lam, b) == 0:
            raise DomainError("on-wall", f"{lam} lies on the wall of {b}")
    return rho(frozenset(pos), like=pair.z0)


def blattner_param(pair: HermitianPair, lam: Weight) -> Weight:
    """Lowest K-type highest weight lam - rho_c + rho_n(lam)."""
    _require_ghat_d(pair, lam)
    out = lam - pair.rho_c + rho_n_lambda(pair, lam)
    if not is_compact_dominant(pair, out):
        raise AssertionError("Blattner parameter not K-dominant")
    if not lattice_member(pair, out):
        raise AssertionError("Blattner parameter outside the weight lattice")
    return out


def condition_hc(pair: HermitianPair, lam: Weight) -> bool:
    """True when lam and its Blattner parameter give the same strict sign on
    every noncompact root."""
    _require_ghat_d(pair, lam)
    big = blattner_param(pair, lam)
    return all(inner(b, lam) * inner(b, big) > 0 for b in pair.noncompact_roots)


def hc_from_blattner(pair: HermitianPair, big: Weight) -> Weight:
    """Inverse of blattner_param on the holomorphic side: Lam + rho_c - rho_n."""
    if not in_c_hol_geq(pair, big):
        raise DomainError(
            "bad-input", f"{big} is not a holomorphic lowest K-type parameter"
        )
    lam = big + pair.rho_c - pair.rho_n
    if not in_ghat_d(pair, lam):
        raise AssertionError("inverse Blattner map left the parameter set")
    if any(inner(lam, b) <= 0 for b in pair.noncompact_positives_z0):
        raise AssertionError("inverse Blattner map left the holomorphic chamber")
    return lam
