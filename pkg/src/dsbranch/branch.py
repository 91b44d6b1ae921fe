"""Restriction to compact subgroups H of K.

A Subgroup is a rational projection from t* onto the weight space s* of a
maximal torus of H, together with the root datum of H and three structural
flags.  Admissibility of the holomorphic model is decided by a certificate
cascade: a central grading, a separating functional found by exact LP, or
triviality of cone∩kernel for normal subgroups; refutation comes from a
kernel ray or an explicit invariant in some S^d(p+).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, floor

from .errors import DomainError
from .hermitian import HermitianPair, in_c_hol, kirwan_cone
from .linalg import fm_feasible_point
from .mult import RepDecomposition, _schmid_items, blattner_mult, tensor_decompose
from .params import blattner_param, condition_hc
from .rootsys import (
    Q,
    RootDatum,
    Weight,
    freudenthal,
    inner,
    rho,
    weyl_dim,
    weyl_orbit,
)


@dataclass(frozen=True)
class Subgroup:
    """A closed connected subgroup H of K, described on the torus level."""

    name: str
    projection: tuple[tuple[Fraction, ...], ...]
    src_dim: int
    src_quotient: bool
    h_quotient: bool
    h_datum: RootDatum | None
    h_positives: frozenset[Weight]
    is_torus: bool
    is_normal_in_K: bool
    contains_center: bool

    @property
    def h_dim(self) -> int:
        return len(self.projection)


def restrict_weight(sub: Subgroup, nu: Weight) -> Weight:
    """Image of nu under the projection onto s*."""
    if nu.dim != sub.src_dim or nu.quotient != sub.src_quotient:
        raise DomainError("ambient-mismatch", "weight does not live in the source torus")
    coords = tuple(
        sum(r * c for r, c in zip(row, nu.coords)) for row in sub.projection
    )
    return Weight(coords, sub.h_quotient)


def _h_zero(sub: Subgroup) -> Weight:
    return Weight((Q(0),) * sub.h_dim, sub.h_quotient)


def _h_dominant(sub: Subgroup, mu: Weight) -> bool:
    return all(inner(mu, a) >= 0 for a in sub.h_positives)


def _h_orbit(sub: Subgroup, mu: Weight) -> frozenset[Weight]:
    if sub.h_datum is None or not sub.h_datum.simple_roots:
        return frozenset((mu,))
    return weyl_orbit(sub.h_datum, mu)


def _type_a_datum(m: int) -> RootDatum:
    es = [Weight(tuple(Q(1) if j == i else Q(0) for j in range(m)), True) for i in range(m)]
    roots = frozenset(es[i] - es[j] for i in range(m) for j in range(m) if i != j)
    simples = tuple(es[i] - es[i + 1] for i in range(m - 1))
    return RootDatum(m, True, roots, simples, factorial(m))


def validate_subgroup(pair: HermitianPair, sub: Subgroup) -> None:
    """Structural checks: shape, compatibility with the quotient ambient,
    and the compact root lattice mapping to H's weight lattice."""
    n = pair.root_datum.ambient_dim
    if sub.src_dim != n or sub.src_quotient != pair.root_datum.quotient:
        raise DomainError("bad-subgroup", "projection source does not match the pair")
    if not sub.projection or any(len(row) != n for row in sub.projection):
        raise DomainError("bad-subgroup", "projection rows must have the ambient length")
    if sub.src_quotient:
        sums = {sum(row) for row in sub.projection}
        if sub.h_quotient:
            if len(sums) != 1:
                raise DomainError(
                    "bad-subgroup", "projection is not constant on the all-ones line"
                )
        elif sums != {0}:
            raise DomainError(
                "bad-subgroup", "projection does not kill the all-ones line"
            )
    if sub.h_datum is not None:
        if sub.h_datum.ambient_dim != sub.h_dim or sub.h_datum.quotient != sub.h_quotient:
            raise DomainError("bad-subgroup", "H root datum lives in the wrong ambient")
        if not sub.h_positives <= sub.h_datum.roots:
            raise DomainError("bad-subgroup", "H positives are not roots of H")
    for a in pair.compact_roots:
        ra = restrict_weight(sub, a)
        cs = ra.coords
        if sub.h_quotient:
            ok = all((c - cs[0]).denominator == 1 for c in cs[1:])
        else:
            ok = all(c.denominator == 1 for c in cs)
        if not ok:
            raise DomainError(
                "bad-subgroup", f"compact root {a} restricts outside H's weight lattice"
            )


PRESET_NAMES = ("su-p-block", "su-q-block", "torus", "center", "full")


@lru_cache(maxsize=None)
def subgroup_preset(pair: HermitianPair, name: str) -> Subgroup:
    """One of the built-in subgroups: the two SU blocks, the maximal torus,
    the center of K, or K itself."""
    n = pair.root_datum.ambient_dim
    quo = pair.root_datum.quotient
    ident = tuple(
        tuple(Q(1) if j == i else Q(0) for j in range(n)) for i in range(n)
    )
    if name == "full":
        sub = Subgroup(
            name="full",
            projection=ident,
            src_dim=n,
            src_quotient=quo,
            h_quotient=quo,
            h_datum=pair.compact_datum,
            h_positives=pair.compact_positives,
            is_torus=not pair.compact_positives,
            is_normal_in_K=True,
            contains_center=True,
        )
    elif name == "torus":
        sub = Subgroup(
            name="torus",
            projection=ident,
            src_dim=n,
            src_quotient=quo,
            h_quotient=quo,
            h_datum=None,
            h_positives=frozenset(),
            is_torus=True,
            is_normal_in_K=not pair.compact_positives,
            contains_center=True,
        )
    elif name == "center":
        sub = Subgroup(
            name="center",
            projection=(pair.z0.coords,),
            src_dim=n,
            src_quotient=quo,
            h_quotient=False,
            h_datum=None,
            h_positives=frozenset(),
            is_torus=True,
            is_normal_in_K=True,
            contains_center=True,
        )
    elif name in ("su-p-block", "su-q-block"):
        if pair.family != "su":
            raise DomainError("bad-subgroup", f"{name} needs an su pair")
        p, q = pair.params
        if name == "su-p-block":
            lo, m = 0, p
        else:
            lo, m = p, q
        rows = tuple(
            tuple(Q(1) if j == lo + i else Q(0) for j in range(n)) for i in range(m)
        )
        sub = Subgroup(
            name=name,
            projection=rows,
            src_dim=n,
            src_quotient=True,
            h_quotient=True,
            h_datum=_type_a_datum(m),
            h_positives=frozenset(
                a for a in _type_a_datum(m).roots
                if all(c >= 0 for c in _cumsum(a.coords))
            ),
            is_torus=(m == 1),
            is_normal_in_K=True,
            contains_center=False,
        )
    else:
        raise DomainError("bad-subgroup", f"unknown preset {name!r}")
    validate_subgroup(pair, sub)
    return sub


def _cumsum(cs: tuple[Fraction, ...]) -> list[Fraction]:
    out, acc = [], Q(0)
    for c in cs:
        acc += c
        out.append(acc)
    return out


def subgroup_from_dict(pair: HermitianPair, data: dict) -> Subgroup:
    """Build a Subgroup from its JSON description.

    Expected keys: name, projection (rows of rationals), h_type ("torus" or
    "A<k>"), flags {is_torus, is_normal_in_K, contains_center}.
    """
    try:
        name = str(data["name"])
        rows = tuple(
            tuple(Q(str(c)) for c in row) for row in data["projection"]
        )
        h_type = str(data.get("h_type", "torus"))
        flags = data.get("flags", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError("bad-subgroup", f"malformed subgroup description: {exc}")
    if h_type == "torus":
        h_datum = None
        h_positives: frozenset[Weight] = frozenset()
        h_quotient = False
    elif h_type.startswith("A") and h_type[1:].isdigit():
        m = int(h_type[1:]) + 1
        h_datum = _type_a_datum(m)
        h_positives = frozenset(
            a for a in h_datum.roots if all(c >= 0 for c in _cumsum(a.coords))
        )
        h_quotient = True
        if len(rows) != m:
            raise DomainError("bad-subgroup", f"{h_type} needs {m} projection rows")
    else:
        raise DomainError("bad-subgroup", f"unsupported h_type {h_type!r}")
    sub = Subgroup(
        name=name,
        projection=rows,
        src_dim=pair.root_datum.ambient_dim,
        src_quotient=pair.root_datum.quotient,
        h_quotient=h_quotient,
        h_datum=h_datum,
        h_positives=h_positives,
        is_torus=bool(flags.get("is_torus", h_datum is None)),
        is_normal_in_K=bool(flags.get("is_normal_in_K", False)),
        contains_center=bool(flags.get("contains_center", False)),
    )
    validate_subgroup(pair, sub)
    return sub


@lru_cache(maxsize=None)
def _branch_items(
    pair: HermitianPair, sub: Subgroup, lam: Weight
) -> tuple[tuple[Weight, int], ...]:
    counts: dict[Weight, int] = {}
    kw = freudenthal(pair.compact_datum, pair.compact_positives, lam)
    for w, m in kw.items():
        rw = restrict_weight(sub, w)
        counts[rw] = counts.get(rw, 0) + m
    total_dim = sum(kw.values())
    if sub.h_datum is None or not sub.h_positives:
        return tuple(sorted(counts.items(), key=lambda kv: kv[0].coords))
    rho_h = rho(sub.h_positives)
    out: dict[Weight, int] = {}
    remaining = dict(counts)
    covered = 0
    while covered < total_dim:
        hw = max(
            (w for w, m in remaining.items() if m > 0),
            key=lambda w: (inner(w, rho_h), w.coords),
        )
        m = remaining[hw]
        if not _h_dominant(sub, hw):
            raise DomainError(
                "bad-subgroup", f"branching leader {hw} is not dominant for H"
            )
        for w, k in freudenthal(sub.h_datum, sub.h_positives, hw).items():
            nm = remaining.get(w, 0) - m * k
            if nm < 0:
                raise DomainError(
                    "bad-subgroup", "branching produced a negative multiplicity"
                )
            remaining[w] = nm
        out[hw] = out.get(hw, 0) + m
        covered += m * weyl_dim(sub.h_datum, sub.h_positives, hw)
    if any(m != 0 for m in remaining.values()):
        raise AssertionError("branching left unexplained weights")
    if covered != total_dim:
        raise AssertionError("branching lost dimension")
    return tuple(sorted(out.items(), key=lambda kv: kv[0].coords))


def branch_irrep(pair: HermitianPair, sub: Subgroup, lam: Weight) -> RepDecomposition:
    """Decomposition of the K-irreducible V_lam as an H-module.

    The restricted weight multiset is peeled from the top: the leader for a
    regular dominant functional of H is always a highest weight of some
    constituent.  Total dimension is conserved (hard check).
    """
    if any(inner(lam, a) < 0 for a in pair.compact_positives):
        raise DomainError("non-dominant", f"{lam} is not K-dominant")
    return RepDecomposition(dict(_branch_items(pair, sub, lam)))


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of the admissibility decision with its certificate data."""

    status: str  # "Admissible" | "NotAdmissible" | "Unknown"
    certificate: str
    eta: Weight | None = None
    witness: Weight | None = None
    degree: int | None = None
    truncation: int | None = None


def _trivial_pieces(pair: HermitianPair, sub: Subgroup, d: int) -> list[tuple[Weight, int]]:
    zero = _h_zero(sub)
    out = []
    for kappa, _ in _schmid_items(pair, d):
        m = dict(_branch_items(pair, sub, kappa)).get(zero, 0)
        if m:
            out.append((kappa, m))
    return out


def invariants_dim(pair: HermitianPair, sub: Subgroup, d: int) -> int:
    """Dimension of the H-invariant subspace of S^d(p+)."""
    if d < 0:
        raise DomainError("bad-input", "degree must be nonnegative")
    return sum(m for _, m in _trivial_pieces(pair, sub, d))


def _normalize_ray(w: Weight) -> Weight:
    top = max(abs(c) for c in w.coords)
    if top == 0:
        return w
    return w * (1 / top)


@lru_cache(maxsize=None)
def admissible(pair: HermitianPair, sub: Subgroup, truncation_N: int = 6) -> AdmissibilityVerdict:
    """Decide admissibility of the holomorphic family restricted to H.

    Certificate cascade: central grading, separating functional (exact LP),
    cone-kernel test for normal subgroups, then a bounded search for an
    explicit invariant; Unknown only after exhausting the truncation.
    """
    validate_subgroup(pair, sub)
    betas = sorted(pair.noncompact_positives_z0)
    if sub.contains_center:
        eta = restrict_weight(sub, pair.z0)
        if any(inner(restrict_weight(sub, b), eta) <= 0 for b in betas):
            raise DomainError(
                "bad-subgroup", "center flag inconsistent with the projection"
            )
        return AdmissibilityVerdict("Admissible", "CenterGrading", eta=eta)
    targets = sorted({restrict_weight(sub, b) for b in betas})
    rows = [(rb.coords, Q(1)) for rb in targets]
    point = fm_feasible_point(rows, sub.h_dim)
    if point is not None:
        eta = Weight(point, sub.h_quotient)
        if any(inner(rb, eta) <= 0 for rb in targets):
            raise AssertionError("separating functional failed verification")
        return AdmissibilityVerdict("Admissible", "SeparatingFunctional", eta=eta)
    if sub.is_normal_in_K:
        gens = kirwan_cone(pair)
        r = len(gens)
        rgens = [restrict_weight(sub, g) for g in gens]
        krows: list[tuple[tuple[Fraction, ...], Fraction]] = []
        for i in range(sub.h_dim):
            coeffs = tuple(rg.coords[i] for rg in rgens)
            krows.append((coeffs, Q(0)))
            krows.append((tuple(-c for c in coeffs), Q(0)))
        krows.append(((Q(1),) * r, Q(1)))
        for j in range(r):
            krows.append((tuple(Q(1) if t == j else Q(0) for t in range(r)), Q(0)))
        cs = fm_feasible_point(krows, r)
        if cs is None:
            return AdmissibilityVerdict("Admissible", "ConeKernelTrivial")
        ray = gens[0].zero_like()
        for c, g in zip(cs, gens):
            ray = ray + g * c
        ray = _normalize_ray(ray)
        if ray.is_zero or not restrict_weight(sub, ray).is_zero:
            raise AssertionError("kernel ray failed verification")
        return AdmissibilityVerdict("NotAdmissible", "ConeKernelRay", witness=ray)
    for d in range(1, truncation_N + 1):
        pieces = _trivial_pieces(pair, sub, d)
        if pieces:
            return AdmissibilityVerdict(
                "NotAdmissible", "InvariantWitness", witness=pieces[0][0], degree=d
            )
    return AdmissibilityVerdict("Unknown", "TruncationExhausted", truncation=truncation_N)


def _require_admissible(pair: HermitianPair, sub: Subgroup) -> AdmissibilityVerdict:
    verdict = admissible(pair, sub)
    if verdict.status != "Admissible":
        raise DomainError(
            "not-admissible", f"restriction to {sub.name} is not certified admissible"
        )
    return verdict


def _check_mu(sub: Subgroup, mu: Weight) -> None:
    if mu.dim != sub.h_dim or mu.quotient != sub.h_quotient:
        raise DomainError("ambient-mismatch", "mu does not live in s*")
    if not _h_dominant(sub, mu):
        raise DomainError("non-dominant", f"{mu} is not dominant for H")


def _branch_mu(pair: HermitianPair, sub: Subgroup, sigma: Weight, mu: Weight) -> int:
    return dict(_branch_items(pair, sub, sigma)).get(mu, 0)


def h_mult(
    pair: HermitianPair,
    big: Weight,
    sub: Subgroup,
    mu: Weight,
    cutoff_D: int = 8,
) -> tuple[int, bool]:
    """Multiplicity of V^H_mu in the holomorphic family with lowest K-type big.

    Sums branch multiplicities over V_big (x) S^d(p+).  A grading functional
    eta from the admissibility certificate plays the properness constant:
    every noncompact positive advances inner(., eta) by at least
    c = min over beta of inner(restrict(beta), eta), so degrees beyond
    (max_W_H inner(w mu, eta) - min over weights of V_big) / c cannot
    contribute and the sum is certified complete.  Without eta the value is
    a lower bound truncated at cutoff_D.
    """
    if not in_c_hol(pair, big):
        raise DomainError("bad-input", f"{big} is not in the holomorphic cone")
    verdict = _require_admissible(pair, sub)
    _check_mu(sub, mu)
    if cutoff_D < 0:
        raise DomainError("bad-input", "cutoff must be nonnegative")
    eta = verdict.eta
    if eta is None:
        d_max, complete = cutoff_D, False
    else:
        c = min(inner(restrict_weight(sub, b), eta) for b in pair.noncompact_positives_z0)
        top = max(inner(w, eta) for w in _h_orbit(sub, mu))
        bot = min(
            inner(restrict_weight(sub, nu), eta)
            for nu in freudenthal(pair.compact_datum, pair.compact_positives, big)
        )
        if top < bot:
            return 0, True
        bound = floor((top - bot) / c)
        complete = bound <= cutoff_D
        d_max = min(bound, cutoff_D)
    total = 0
    for d in range(d_max + 1):
        for kappa, _ in _schmid_items(pair, d):
            dec = tensor_decompose(pair.compact_datum, pair.compact_positives, kappa, big)
            for sigma, m in dec.terms.items():
                total += m * _branch_mu(pair, sub, sigma, mu)
    return total, complete


def ds_h_mult(
    pair: HermitianPair,
    lam: Weight,
    sub: Subgroup,
    mu: Weight,
    cutoff_D: int = 8,
) -> tuple[int, bool]:
    """Multiplicity of V^H_mu in the discrete series with parameter lam.

    K-types are enumerated inside Lambda(lam) + N-span of R_n^{+,lam}, each
    weighted by its Blattner multiplicity and branched to H.  The eta-based
    degree bound is provable exactly when the parameter chamber is the
    holomorphic or antiholomorphic one, where the K-structure is a twisted
    symmetric algebra; in mixed chambers the sum is truncated at cutoff_D
    and reported incomplete.
    """
    if not condition_hc(pair, lam):
        raise DomainError(
            "condition-violated",
            f"{lam} does not satisfy the sign condition linking it to its lowest K-type",
        )
    verdict = _require_admissible(pair, sub)
    _check_mu(sub, mu)
    if cutoff_D < 0:
        raise DomainError("bad-input", "cutoff must be nonnegative")
    big = blattner_param(pair, lam)
    betas = tuple(sorted(b for b in pair.noncompact_roots if inner(lam, b) > 0))
    eta = verdict.eta
    hol = frozenset(betas) == pair.noncompact_positives_z0
    antihol = frozenset(betas) == frozenset(-b for b in pair.noncompact_positives_z0)
    if eta is not None and (hol or antihol):
        c = min(inner(restrict_weight(sub, b), eta) for b in pair.noncompact_positives_z0)
        lam_wts = freudenthal(pair.compact_datum, pair.compact_positives, big)
        orbit_vals = [inner(w, eta) for w in _h_orbit(sub, mu)]
        rest_vals = [inner(restrict_weight(sub, nu), eta) for nu in lam_wts]
        num = (max(orbit_vals) - min(rest_vals)) if hol else (max(rest_vals) - min(orbit_vals))
        if num < 0:
            return 0, True
        bound = floor(num / c)
        complete = bound <= cutoff_D
        s_max = min(bound, cutoff_D)
    else:
        complete = False
        s_max = cutoff_D
    kappas: set[Weight] = set()

    def rec(i: int, left: int, acc: Weight) -> None:
        kappas.add(acc)
        if left == 0:
            return
        for j in range(i, len(betas)):
            rec(j, left - 1, acc + betas[j])

    rec(0, s_max, big)
    total = 0
    for kappa in sorted(kappas):
        if any(inner(kappa, a) < 0 for a in pair.compact_positives):
            continue
        m = blattner_mult(pair, lam, kappa)
        if m:
            total += m * _branch_mu(pair, sub, kappa, mu)
    return total, complete
