"""Golden cross-checks of the worked examples the code is calibrated against.

Each item recomputes one block of reference data from scratch and compares
against frozen expected values; verify-paper in the CLI drives the whole
list.  Items return a list of failure strings, empty on success.
"""

from __future__ import annotations

from fractions import Fraction

from .branch import admissible, restrict_weight, subgroup_preset
from .hermitian import (
    build_pair,
    in_c_hol_geq,
    kirwan_cone,
    matrix_model,
    z0_degree,
)
from .mult import blattner_mult, holo_k_mult, schmid_degree, sym_power_character
from .params import (
    blattner_param,
    chambers,
    condition_hc,
    hc_from_blattner,
    in_ghat_d,
    rho_n_lambda,
)
from .rootsys import Q, Weight, freudenthal, inner


def _w(coords, quotient=False) -> Weight:
    return Weight(tuple(Q(c) for c in coords), quotient)


def check_sp4_counterexample() -> list[str]:
    """Harish-Chandra parameter (5,3,1,-2) of Sp(4,R): its lowest K-type sits
    in a different chamber, so the sign condition fails."""
    bad = []
    pair = build_pair("sp", n=4)
    lam = _w([5, 3, 1, -2])
    if pair.rho_c != _w(["3/2", "1/2", "-1/2", "-3/2"]):
        bad.append(f"rho_c = {pair.rho_c.coords}")
    if not in_ghat_d(pair, lam):
        bad.append("lambda not recognized as a Harish-Chandra parameter")
    if rho_n_lambda(pair, lam) != _w(["5/2", "5/2", "3/2", "-1/2"]):
        bad.append(f"rho_n(lambda) = {rho_n_lambda(pair, lam).coords}")
    if blattner_param(pair, lam) != _w([6, 5, 3, -1]):
        bad.append(f"Lambda(lambda) = {blattner_param(pair, lam).coords}")
    if condition_hc(pair, lam):
        bad.append("sign condition unexpectedly holds")
    return bad


def check_sp2_chambers() -> list[str]:
    """Sp(2,R): four chambers; the shifts -rho_c + rho_n(C) of the two mixed
    chambers stay in their closures; the sign condition always holds."""
    bad = []
    pair = build_pair("sp", n=2)
    chs = chambers(pair)
    if len(chs) != 4:
        bad.append(f"{len(chs)} chambers")
    want = {
        _w(["3/2", "3/2"]),
        _w(["3/2", "-1/2"]),
        _w(["1/2", "-3/2"]),
        _w(["-3/2", "-3/2"]),
    }
    if {c.rho_n for c in chs} != want:
        bad.append("rho_n set differs")
    for rn in (_w(["3/2", "-1/2"]), _w(["1/2", "-3/2"])):
        ch = next(c for c in chs if c.rho_n == rn)
        shift = rn - pair.rho_c
        if any(inner(shift, a) < 0 for a in pair.compact_positives):
            bad.append(f"shift of chamber {ch.id} not compact-dominant")
        if any(inner(shift, b) < 0 for b in ch.noncompact_positives):
            bad.append(f"shift of chamber {ch.id} leaves the closure")
    for a in range(-10, 11):
        for b in range(-10, a):
            lam = _w([a, b])
            if not in_ghat_d(pair, lam):
                continue
            if not condition_hc(pair, lam):
                bad.append(f"condition fails at {lam.coords}")
    return bad


def check_su32_values() -> list[str]:
    """SU(3,2) worked example: rho_c, the parameter map at (3,1,-1,0,-3),
    and the chamber whose rho_n equals rho_c."""
    bad = []
    pair = build_pair("su", p=3, q=2)
    if pair.rho_c != _w([1, 0, -1, "1/2", "-1/2"], True):
        bad.append(f"rho_c = {pair.rho_c.coords}")
    lam = _w([3, 1, -1, 0, -3], True)
    if not in_ghat_d(pair, lam):
        bad.append("lambda not recognized")
    if rho_n_lambda(pair, lam) != _w([1, 1, 0, "-1/2", "-3/2"], True):
        bad.append(f"rho_n(lambda) = {rho_n_lambda(pair, lam).coords}")
    if blattner_param(pair, lam) != _w([3, 2, 0, -1, -4], True):
        bad.append(f"Lambda(lambda) = {blattner_param(pair, lam).coords}")
    if condition_hc(pair, lam):
        bad.append("sign condition unexpectedly holds")
    matches = [c for c in chambers(pair) if c.rho_n == pair.rho_c]
    if len(matches) != 1:
        bad.append("no unique chamber with rho_n = rho_c")
    return bad


def check_su_admissibility() -> list[str]:
    """Block restriction law for SU(p,q): a unitary block is admissible
    exactly when it is strictly larger than the other; the center always is."""
    bad = []
    for p in range(1, 6):
        for q in range(1, 6):
            if p + q > 6:
                continue
            pair = build_pair("su", p=p, q=q)
            for name, m, other in (("su-p-block", p, q), ("su-q-block", q, p)):
                v = admissible(pair, subgroup_preset(pair, name))
                if m > other:
                    if v.status != "Admissible" or v.certificate != "ConeKernelTrivial":
                        bad.append(f"su({p},{q}) {name}: {v.status}/{v.certificate}")
                else:
                    if v.status != "NotAdmissible" or v.witness is None:
                        bad.append(f"su({p},{q}) {name}: {v.status}")
                        continue
                    w = v.witness
                    sub = subgroup_preset(pair, name)
                    if not restrict_weight(sub, w).is_zero or w.is_zero:
                        bad.append(f"su({p},{q}) {name}: witness not in the kernel")
                    gens = kirwan_cone(pair)
                    r = min(p, q)
                    if w != gens[r - 1] * (Q(1) / max(abs(c) for c in gens[r - 1].coords)):
                        bad.append(f"su({p},{q}) {name}: witness {w.coords}")
            vz = admissible(pair, subgroup_preset(pair, "center"))
            if vz.status != "Admissible" or vz.certificate != "CenterGrading":
                bad.append(f"su({p},{q}) center: {vz.status}")
    return bad


def check_kirwan_cone_su() -> list[str]:
    """Cone generators of SU(p,q) follow the (1,...,1,0,...,0,-1,...,-1)
    staircase for p+q <= 7."""
    bad = []
    for p in range(1, 7):
        for q in range(1, 7):
            n = p + q
            if n > 7:
                continue
            pair = build_pair("su", p=p, q=q)
            gens = kirwan_cone(pair)
            r = min(p, q)
            if len(gens) != r:
                bad.append(f"su({p},{q}): {len(gens)} generators")
                continue
            for k in range(1, r + 1):
                want = [1] * k + [0] * (n - 2 * k) + [-1] * k
                if gens[k - 1] != _w(want, True):
                    bad.append(f"su({p},{q}) generator {k}: {gens[k - 1].coords}")
    return bad


def check_schmid_oracle() -> list[str]:
    """S^d(p+) via the staircase highest weights agrees with the raw monomial
    character for d <= 4; for SU(p,q) the highest weights are the conjugate
    partition pairs of the Cauchy identity."""
    bad = []
    cases = [("su", 2, 2, None), ("su", 2, 3, None), ("sp", None, None, 2), ("sp", None, None, 3)]
    for fam, p, q, n in cases:
        pair = build_pair(fam, p=p, q=q, n=n)
        for d in range(5):
            agg: dict[Weight, int] = {}
            for kappa, _ in schmid_degree(pair, d).sorted_items():
                for w, m in freudenthal(
                    pair.compact_datum, pair.compact_positives, kappa
                ).items():
                    agg[w] = agg.get(w, 0) + m
            if agg != sym_power_character(pair, d):
                bad.append(f"{pair.describe()} degree {d}: weight multisets differ")
    for p, q in ((1, 1), (2, 2), (2, 3)):
        pair = build_pair("su", p=p, q=q)
        nn = p + q
        for d in range(5):
            got = {w for w, _ in schmid_degree(pair, d).sorted_items()}
            want = set()
            for part in _partitions(d, min(p, q)):
                padded = list(part) + [0] * (p - len(part))
                tail = [-c for c in reversed(list(part) + [0] * (q - len(part)))]
                want.add(_w(padded + tail, True))
            if got != want:
                bad.append(f"su({p},{q}) degree {d}: partition model differs")
    return bad


def _partitions(d: int, max_len: int):
    def rec(left, cap, acc):
        if left == 0:
            yield tuple(acc)
            return
        if len(acc) == max_len:
            return
        for k in range(min(left, cap), 0, -1):
            acc.append(k)
            yield from rec(left - k, k, acc)
            acc.pop()

    yield from rec(d, d, [])


def check_blattner_vs_tensor() -> list[str]:
    """The alternating Weyl sum and the tensor model agree on every
    holomorphic parameter in a small window."""
    bad = []
    total = 0
    for pair, lams in _holomorphic_parameters(3):
        for lam in lams:
            big = blattner_param(pair, lam)
            for mu in _mu_window(pair, big, 3):
                total += 1
                b = blattner_mult(pair, lam, mu)
                h = holo_k_mult(pair, big, mu)
                if b != h:
                    bad.append(
                        f"{pair.describe()} lambda={lam.coords} mu={mu.coords}: {b} != {h}"
                    )
    if total == 0:
        bad.append("empty parameter window")
    return bad


def _holomorphic_parameters(bound: int):
    """Regular holomorphic Harish-Chandra parameters with coordinates in
    [-bound, bound], for the four smallest pairs."""
    out = []
    sp1 = build_pair("sp", n=1)
    out.append((sp1, [_w([a]) for a in range(1, bound + 1) if in_ghat_d(sp1, _w([a]))]))
    sp2 = build_pair("sp", n=2)
    lams = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            lam = _w([a, b])
            if a > b > 0 and in_ghat_d(sp2, lam) and condition_hc(sp2, lam):
                if all(inner(lam, x) > 0 for x in sp2.noncompact_positives_z0):
                    lams.append(lam)
    out.append((sp2, lams))
    su11 = build_pair("su", p=1, q=1)
    lams = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            lam = _w([a, b], True)
            if in_ghat_d(su11, lam) and all(
                inner(lam, x) > 0 for x in su11.noncompact_positives_z0
            ):
                lams.append(lam)
    out.append((su11, _dedupe(lams)))
    su21 = build_pair("su", p=2, q=1)
    lams = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                lam = _w([a, b, c], True)
                if in_ghat_d(su21, lam) and all(
                    inner(lam, x) > 0 for x in su21.noncompact_positives_z0
                ):
                    lams.append(lam)
    out.append((su21, _dedupe(lams)))
    return out


def _dedupe(ws):
    seen = set()
    out = []
    for w in ws:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def _mu_window(pair, big: Weight, offset: int):
    """Dominant weights reachable from big by at most `offset` noncompact
    positive steps, together with their one-step compact perturbations.
    Everything outside carries multiplicity zero on both sides."""
    betas = sorted(pair.noncompact_positives_z0)
    frontier = {big}
    reach = {big}
    for _ in range(offset):
        frontier = {w + b for w in frontier for b in betas}
        reach |= frontier
    cands = set(reach)
    for w in reach:
        for a in pair.compact_positives:
            cands.add(w + a)
            cands.add(w - a)
    out = [
        w
        for w in cands
        if all(inner(w, a) >= 0 for a in pair.compact_positives)
        and 0 <= z0_degree(pair, w) - z0_degree(pair, big) <= offset
    ]
    return sorted(_dedupe(out))


def check_holomorphic_parameter_map() -> list[str]:
    """The parameter maps are mutually inverse bijections between holomorphic
    Harish-Chandra parameters and their lowest K-types."""
    bad = []
    sp1 = build_pair("sp", n=1)
    if blattner_param(sp1, _w([3])) != _w([4]):
        bad.append("sp(1,R): Lambda(3) != 4")
    if hc_from_blattner(sp1, _w([4])) != _w([3]):
        bad.append("sp(1,R): inverse at 4")
    sp2 = build_pair("sp", n=2)
    if hc_from_blattner(sp2, _w([3, 3])) != _w([2, 1]):
        bad.append("sp(2,R): inverse at (3,3)")
    for pair, lams in _holomorphic_parameters(4):
        for lam in lams:
            big = blattner_param(pair, lam)
            if not in_c_hol_geq(pair, big):
                bad.append(f"{pair.describe()}: {big.coords} fails the boundary test")
                continue
            back = hc_from_blattner(pair, big)
            if back != lam:
                bad.append(f"{pair.describe()}: round trip moved {lam.coords}")
    return bad


def check_matrix_model() -> list[str]:
    """The literal double bracket on cascade combinations reproduces
    c * sum t_k^2 gamma_k for one calibration constant c per pair."""
    bad = []
    for p, q in ((1, 1), (2, 2), (2, 3)):
        pair = build_pair("su", p=p, q=q)
        mm = matrix_model(pair)
        r = len(pair.cascade)
        xs = [mm.cascade_vector(k) for k in range(r)]
        first = mm.weight_of(mm.phi_K(xs[0]))
        ratio = None
        for i, c in enumerate(first.coords):
            if pair.cascade[0].coords[i] != 0:
                ratio = c / pair.cascade[0].coords[i]
                break
        if ratio is None or ratio <= 0 or first != pair.cascade[0] * ratio:
            bad.append(f"su({p},{q}): calibration failed")
            continue
        ts_pool = [Q(n, d) for d in (1, 2, 3) for n in range(0, 3 * d + 1)]
        samples = []
        for t1 in ts_pool:
            for t2 in ts_pool if r > 1 else [None]:
                if r > 1 and t2 > t1:
                    continue
                samples.append((t1,) if r == 1 else (t1, t2))
        for ts in samples[:60]:
            x = None
            for t, xk in zip(ts, xs):
                scaled = [[_qi_scale(e, t) for e in row] for row in xk]
                x = scaled if x is None else [
                    [a + b for a, b in zip(ra, rb)] for ra, rb in zip(x, scaled)
                ]
            x = tuple(tuple(row) for row in x)
            want = pair.cascade[0].zero_like()
            for t, g in zip(ts, pair.cascade):
                want = want + g * (ratio * t * t)
            got = mm.weight_of(mm.phi_K(x))
            if got != want:
                bad.append(f"su({p},{q}) t={ts}: moment value differs")
                break
    return bad


def _qi_scale(e, t: Fraction):
    from .hermitian import QI

    return QI(e.re * t, e.im * t)


ITEMS = [
    ("sp4-counterexample", check_sp4_counterexample),
    ("sp2-chambers", check_sp2_chambers),
    ("su32-parameters", check_su32_values),
    ("su-admissibility", check_su_admissibility),
    ("kirwan-cone-su", check_kirwan_cone_su),
    ("schmid-oracle", check_schmid_oracle),
    ("blattner-vs-tensor", check_blattner_vs_tensor),
    ("holomorphic-parameter-map", check_holomorphic_parameter_map),
    ("matrix-model", check_matrix_model),
]


def run_items(names: list[str] | None = None) -> dict:
    wanted = dict(ITEMS)
    if names:
        for nm in names:
            if nm not in wanted:
                from .errors import DomainError

                raise DomainError("bad-input", f"unknown verify item {nm!r}")
        selected = [(nm, wanted[nm]) for nm in names]
    else:
        selected = ITEMS
    items = []
    ok = True
    for nm, fn in selected:
        failures = fn()
        entry: dict = {"name": nm, "status": "pass" if not failures else "fail"}
        if failures:
            ok = False
            entry["detail"] = failures[:5]
        items.append(entry)
    return {"items": items, "ok": ok}
