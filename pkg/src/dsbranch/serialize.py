"""Canonical JSON forms.

Rational values are serialized as exact strings ("3", "-1/2"); multiplicities,
dimensions, ids and degrees stay JSON integers.  Keys are sorted and output is
compact unless pretty-printing is requested, so byte-identical output across
runs is a property, not an accident.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .branch import AdmissibilityVerdict, Subgroup
from .errors import DomainError
from .hermitian import HermitianPair, kirwan_cone
from .mult import RepDecomposition
from .params import Chamber
from .rootsys import Q, Weight


def rat_str(x: Fraction) -> str:
    return str(x)


def weight_json(w: Weight) -> list[str]:
    return [rat_str(c) for c in w.coords]


def weights_json(ws) -> list[list[str]]:
    return [weight_json(w) for w in sorted(ws)]


def parse_rat(text: str) -> Fraction:
    try:
        return Q(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError("bad-input", f"{text!r} is not a rational number")


def parse_weight(text: str, dim: int, quotient: bool) -> Weight:
    parts = [p for p in text.split(",") if p.strip() != ""]
    if len(parts) != dim:
        raise DomainError(
            "ambient-mismatch", f"expected {dim} coordinates, got {len(parts)}"
        )
    return Weight(tuple(parse_rat(p) for p in parts), quotient)


def pair_json(pair: HermitianPair) -> dict:
    return {
        "family": pair.family,
        "params": list(pair.params),
        "cascade": [weight_json(g) for g in pair.cascade],
        "cone_generators": [weight_json(g) for g in kirwan_cone(pair)],
        "beta_min": weight_json(pair.beta_min),
        "rho_c": weight_json(pair.rho_c),
        "rho_n": weight_json(pair.rho_n),
        "z0": weight_json(pair.z0),
    }


def chamber_json(ch: Chamber) -> dict:
    return {
        "id": ch.id,
        "rho_n": weight_json(ch.rho_n),
        "noncompact_positives": weights_json(ch.noncompact_positives),
    }


def decomposition_json(dec: RepDecomposition) -> dict:
    terms = []
    for w, m in dec.sorted_items():
        entry = {"hw": weight_json(w), "mult": m}
        if dec.grading is not None:
            entry["degree"] = dec.grading[w]
        terms.append(entry)
    return {"terms": terms}


def verdict_json(v: AdmissibilityVerdict) -> dict:
    out: dict = {"status": v.status, "certificate": v.certificate}
    if v.eta is not None:
        out["eta"] = weight_json(v.eta)
    if v.witness is not None:
        out["witness"] = weight_json(v.witness)
    if v.degree is not None:
        out["degree"] = v.degree
    if v.truncation is not None:
        out["truncation"] = v.truncation
    return out


def subgroup_json(sub: Subgroup) -> dict:
    return {
        "name": sub.name,
        "projection": [[rat_str(c) for c in row] for row in sub.projection],
        "flags": {
            "is_torus": sub.is_torus,
            "is_normal_in_K": sub.is_normal_in_K,
            "contains_center": sub.contains_center,
        },
    }


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
