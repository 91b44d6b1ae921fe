"""Hermitian symmetric pairs (G, K) for G = SU(p,q) and G = Sp(n,R).

Coordinates: type A weights live in R^(p+q) modulo the all-ones line with
sum-zero canonical representatives; type C weights live in R^n.  The central
element z0 of k is normalized so that it pairs to 1 with every noncompact
positive root, which makes the z0-degree of a weight an honest integer grading
after dividing by the beta_min pairing.

The matrix model realizes p inside the defining representation with Gaussian
rational entries and computes the quadratic moment map X -> -[X, [z0, X]]
literally, so closed-form expectations can be tested against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError
from .linalg import solve_in_span
from .rootsys import (
    Q,
    RootDatum,
    Weight,
    inner,
    rho,
    simple_system,
)


@dataclass(frozen=True)
class HermitianPair:
    """A Hermitian symmetric pair with its root split and holomorphic data."""

    family: str
    params: tuple[int, ...]
    root_datum: RootDatum
    compact_datum: RootDatum
    compact_roots: frozenset[Weight]
    noncompact_roots: frozenset[Weight]
    compact_positives: frozenset[Weight]
    noncompact_positives_z0: frozenset[Weight]
    z0: Weight
    beta_min: Weight
    rho_c: Weight
    rho_n: Weight
    cascade: tuple[Weight, ...]

    @property
    def holomorphic_positives(self) -> frozenset[Weight]:
        return self.compact_positives | self.noncompact_positives_z0

    def describe(self) -> str:
        if self.family == "su":
            return f"su({self.params[0]},{self.params[1]})"
        return f"sp({self.params[0]},R)"


def _e(i: int, n: int, quotient: bool) -> Weight:
    return Weight(tuple(Q(1) if j == i else Q(0) for j in range(n)), quotient)


def _greedy_cascade(
    roots: frozenset[Weight],
    pool: list[Weight],
    hol_simples: tuple[Weight, ...],
) -> tuple[Weight, ...]:
    basis = [s.coords for s in hol_simples]

    def height(b: Weight) -> Fraction:
        cs = solve_in_span(basis, b.coords)
        if cs is None:
            raise AssertionError("root outside span of holomorphic simples")
        return sum(cs)

    chosen: list[Weight] = []
    pool = sorted(pool)
    while pool:
        hs = [(height(b), b) for b in pool]
        hmax = max(h for h, _ in hs)
        top = [b for h, b in hs if h == hmax]
        if len(top) != 1:
            raise AssertionError("tie while selecting the next cascade root")
        g = top[0]
        chosen.append(g)
        pool = [
            b
            for b in pool
            if b != g and (b + g) not in roots and (b - g) not in roots
        ]
    return tuple(chosen)


def _find_beta_min(
    noncompact_pos: frozenset[Weight], compact_simples: tuple[Weight, ...]
) -> Weight:
    basis = [s.coords for s in compact_simples]
    candidates = []
    for bm in sorted(noncompact_pos):
        ok = True
        for b in noncompact_pos:
            d = b - bm
            if d.is_zero:
                continue
            if not basis:
                ok = False
                break
            cs = solve_in_span(basis, d.coords)
            if cs is None or any(c < 0 or c.denominator != 1 for c in cs):
                ok = False
                break
        if ok:
            candidates.append(bm)
    if len(candidates) != 1:
        raise AssertionError(f"beta_min not unique: {candidates}")
    return candidates[0]


def _validate_pair(pair: HermitianPair) -> None:
    c = inner(pair.beta_min, pair.z0)
    if c <= 0:
        raise AssertionError("z0 pairing with beta_min not positive")
    for b in pair.noncompact_positives_z0:
        if inner(b, pair.z0) != c:
            raise AssertionError("z0 pairing not constant on noncompact positives")
    for a in pair.compact_roots:
        if inner(a, pair.z0) != 0:
            raise AssertionError("z0 pairing nonzero on a compact root")
    cas = pair.cascade
    for i, g in enumerate(cas):
        for h in cas[i + 1:]:
            if (g + h) in pair.root_datum.roots or (g - h) in pair.root_datum.roots:
                raise AssertionError("cascade roots not strongly orthogonal")
            if inner(g, h) != 0:
                raise AssertionError("cascade roots not orthogonal")
        if inner(g, g) != inner(cas[0], cas[0]):
            raise AssertionError("cascade roots of unequal length")
    for g in kirwan_cone(pair):
        if any(inner(g, a) < 0 for a in pair.compact_positives):
            raise AssertionError("cone generator not dominant")


@lru_cache(maxsize=None)
def build_pair(family: str, p: int | None = None, q: int | None = None, n: int | None = None) -> HermitianPair:
    """Construct the pair for su(p,q) or sp(n,R); other families are rejected."""
    fam = family.lower()
    if fam in ("so*", "so", "e6", "e7"):
        raise DomainError("unsupported-family", f"family {family!r} is not supported")
    if fam == "su":
        if not (isinstance(p, int) and isinstance(q, int) and p >= 1 and q >= 1):
            raise DomainError("bad-params", "su needs integers p >= 1 and q >= 1")
        return _build_su(p, q)
    if fam == "sp":
        if not (isinstance(n, int) and n >= 1):
            raise DomainError("bad-params", "sp needs an integer n >= 1")
        return _build_sp(n)
    raise DomainError("unsupported-family", f"family {family!r} is not supported")


def _build_su(p: int, q: int) -> HermitianPair:
    nn = p + q
    e = [_e(i, nn, True) for i in range(nn)]
    roots = frozenset(e[i] - e[j] for i in range(nn) for j in range(nn) if i != j)
    simples = tuple(e[i] - e[i + 1] for i in range(nn - 1))
    datum = RootDatum(nn, True, roots, simples, factorial(nn))

    def block(i: int) -> int:
        return 0 if i < p else 1

    compact = frozenset(a for a in roots if _su_same_block(a, p))
    noncompact = roots - compact
    compact_pos = frozenset(
        e[i] - e[j]
        for i in range(nn)
        for j in range(i + 1, nn)
        if block(i) == block(j)
    )
    compact_simples = tuple(
        e[i] - e[i + 1] for i in range(nn - 1) if block(i) == block(i + 1)
    )
    compact_datum = RootDatum(nn, True, compact, compact_simples, factorial(p) * factorial(q))
    z0 = Weight((Q(q, nn),) * p + (Q(-p, nn),) * q, True)
    ncp = frozenset(b for b in noncompact if inner(b, z0) > 0)
    beta_min = _find_beta_min(ncp, compact_simples)
    cascade = _greedy_cascade(roots, sorted(ncp), simple_system(frozenset(compact_pos | ncp)))
    pair = HermitianPair(
        family="su",
        params=(p, q),
        root_datum=datum,
        compact_datum=compact_datum,
        compact_roots=compact,
        noncompact_roots=noncompact,
        compact_positives=compact_pos,
        noncompact_positives_z0=ncp,
        z0=z0,
        beta_min=beta_min,
        rho_c=rho(compact_pos, like=z0),
        rho_n=rho(ncp, like=z0),
        cascade=cascade,
    )
    _validate_pair(pair)
    return pair


def _su_same_block(a: Weight, p: int) -> bool:
    pos = [i for i, c in enumerate(a.coords) if c > 0]
    neg = [i for i, c in enumerate(a.coords) if c < 0]
    # canonical form of e_i - e_j has exactly one positive and one negative entry
    i, j = pos[0], neg[0]
    return (i < p) == (j < p)


def _build_sp(n: int) -> HermitianPair:
    e = [_e(i, n, False) for i in range(n)]
    long_roots = [2 * x for x in e]
    roots = set()
    for i in range(n):
        roots.add(long_roots[i])
        roots.add(-long_roots[i])
        for j in range(i + 1, n):
            for a in (e[i] + e[j], e[i] - e[j]):
                roots.add(a)
                roots.add(-a)
    roots = frozenset(roots)
    simples = tuple(e[i] - e[i + 1] for i in range(n - 1)) + (long_roots[n - 1],)
    datum = RootDatum(n, False, roots, simples, 2**n * factorial(n))
    compact = frozenset(
        a
        for i in range(n)
        for j in range(i + 1, n)
        for a in (e[i] - e[j], e[j] - e[i])
    )
    noncompact = roots - compact
    compact_pos = frozenset(e[i] - e[j] for i in range(n) for j in range(i + 1, n))
    compact_simples = tuple(e[i] - e[i + 1] for i in range(n - 1))
    compact_datum = RootDatum(n, False, compact, compact_simples, factorial(n))
    z0 = Weight((Q(1, 2),) * n, False)
    ncp = frozenset(b for b in noncompact if inner(b, z0) > 0)
    beta_min = _find_beta_min(ncp, compact_simples)
    cascade = _greedy_cascade(roots, sorted(ncp), simple_system(frozenset(compact_pos | ncp)))
    pair = HermitianPair(
        family="sp",
        params=(n,),
        root_datum=datum,
        compact_datum=compact_datum,
        compact_roots=compact,
        noncompact_roots=noncompact,
        compact_positives=compact_pos,
        noncompact_positives_z0=ncp,
        z0=z0,
        beta_min=beta_min,
        rho_c=rho(compact_pos, like=z0),
        rho_n=rho(ncp, like=z0),
        cascade=cascade,
    )
    _validate_pair(pair)
    return pair


def cascade(pair: HermitianPair) -> tuple[Weight, ...]:
    """The strongly orthogonal cascade, greedily maximal by height."""
    return pair.cascade


@lru_cache(maxsize=None)
def kirwan_cone(pair: HermitianPair) -> tuple[Weight, ...]:
    """Generators gamma_1, gamma_1+gamma_2, ... of the asymptotic support cone."""
    gens = []
    acc = None
    for g in pair.cascade:
        acc = g if acc is None else acc + g
        gens.append(acc)
    return tuple(gens)


def is_compact_dominant(pair: HermitianPair, w: Weight) -> bool:
    return all(inner(w, a) >= 0 for a in pair.compact_positives)


def in_c_hol(pair: HermitianPair, xi: Weight) -> bool:
    """Membership in the open holomorphic cone of K-dominant weights."""
    return is_compact_dominant(pair, xi) and inner(xi, pair.beta_min) > 0


def lattice_member(pair: HermitianPair, w: Weight) -> bool:
    """Membership of w in the weight lattice of the maximal torus of K."""
    if w.quotient:
        base = w.coords[0]
        return all((c - base).denominator == 1 for c in w.coords[1:])
    return all(c.denominator == 1 for c in w.coords)


def in_c_hol_geq(pair: HermitianPair, lam: Weight) -> bool:
    """True when (Lam - 2 rho_n, beta_min) >= 0 for a dominant lattice weight."""
    if not lattice_member(pair, lam):
        raise DomainError("not-lattice", f"{lam} is not a weight of the torus of K")
    if not is_compact_dominant(pair, lam):
        raise DomainError("non-dominant", f"{lam} is not K-dominant")
    return inner(lam - 2 * pair.rho_n, pair.beta_min) >= 0


def z0_degree(pair: HermitianPair, w: Weight) -> Fraction:
    """The z0-grading of w, normalized so beta_min has degree 1."""
    return inner(w, pair.z0) / inner(pair.beta_min, pair.z0)


@dataclass(frozen=True)
class RestrictedRoots:
    """Projections of the holomorphic positives onto the span of the cascade.

    half_sums collects the positive restricted roots: every gamma_i together
    with the half sums and half differences of distinct cascade roots, plus
    the half gammas themselves in the HalfGammas case.
    """

    half_sums: frozenset[Weight]
    xi_type: str  # "Empty" or "HalfGammas"


@lru_cache(maxsize=None)
def restricted_roots(pair: HermitianPair) -> RestrictedRoots:
    """Project the holomorphic positive system onto span(cascade) and classify.

    The nonzero projections must form one of the two shapes allowed for a
    Hermitian pair: half sums/differences of cascade roots plus the cascade
    roots themselves, optionally together with all half cascade roots.
    """
    gammas = pair.cascade
    norms = [inner(g, g) for g in gammas]

    def project(v: Weight) -> Weight:
        acc = v.zero_like()
        for g, nn in zip(gammas, norms):
            acc = acc + g * (inner(v, g) / nn)
        return acc

    projs = set()
    for a in sorted(pair.holomorphic_positives):
        pv = project(a)
        if not pv.is_zero:
            projs.add(pv)
    r = len(gammas)
    base = set()
    for i in range(r):
        base.add(gammas[i])
        for j in range(i + 1, r):
            base.add((gammas[i] + gammas[j]) * Q(1, 2))
            base.add((gammas[i] - gammas[j]) * Q(1, 2))
    halves = {g * Q(1, 2) for g in gammas}
    if projs == base:
        xi = "Empty"
    elif projs == base | halves:
        xi = "HalfGammas"
    else:
        raise AssertionError("restricted root system has an unexpected shape")
    expected = r * r if xi == "Empty" else r * r + r
    if len(projs) != expected:
        raise AssertionError("restricted root count mismatch")
    return RestrictedRoots(frozenset(projs), xi)


def moment_image_on_a(pair: HermitianPair, ts: tuple[Fraction, ...]) -> Weight:
    """Moment map value sum t_k^2 gamma_k / |gamma_k|^2 on the flat a_+."""
    gammas = pair.cascade
    ts = tuple(Q(t) for t in ts)
    if len(ts) != len(gammas):
        raise DomainError("bad-input", f"need {len(gammas)} flat coordinates")
    if any(ts[i] < ts[i + 1] for i in range(len(ts) - 1)) or (ts and ts[-1] < 0):
        raise DomainError("bad-input", "flat coordinates must be decreasing and nonnegative")
    acc = gammas[0].zero_like()
    for t, g in zip(ts, gammas):
        acc = acc + g * (t * t / inner(g, g))
    return acc


# ---------------------------------------------------------------------------
# matrix model


class QI:
    """Gaussian rational a + b i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        self.re = Q(re)
        self.im = Q(im)

    def __add__(self, o: "QI") -> "QI":
        return QI(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "QI") -> "QI":
        return QI(self.re - o.re, self.im - o.im)

    def __neg__(self) -> "QI":
        return QI(-self.re, -self.im)

    def __mul__(self, o: "QI") -> "QI":
        return QI(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def conj(self) -> "QI":
        return QI(self.re, -self.im)

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, QI):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __repr__(self) -> str:
        return f"QI({self.re}, {self.im})"


Mat = tuple[tuple[QI, ...], ...]


def _mat(rows: list[list[QI]]) -> Mat:
    return tuple(tuple(r) for r in rows)


def mat_zero(n: int) -> Mat:
    return _mat([[QI() for _ in range(n)] for _ in range(n)])


def mat_add(a: Mat, b: Mat) -> Mat:
    return _mat([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def mat_sub(a: Mat, b: Mat) -> Mat:
    return _mat([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def mat_neg(a: Mat) -> Mat:
    return _mat([[-x for x in r] for r in a])


def mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    cols = list(zip(*b))
    out = []
    for ra in a:
        row = []
        for cb in cols:
            acc = QI()
            for x, y in zip(ra, cb):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return _mat(out)


def mat_commutator(a: Mat, b: Mat) -> Mat:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_scale(a: Mat, s: QI) -> Mat:
    return _mat([[s * x for x in r] for r in a])


class MatrixModel:
    """Concrete matrices for k, p and z0 inside the defining representation.

    su(p,q): p is the block [[0, Z], [Z*, 0]] for a complex p x q block Z.
    sp(n,R): the bounded realization, p is [[0, B], [conj B, 0]] for a
    complex symmetric n x n block B.
    """

    def __init__(self, pair: HermitianPair):
        self.pair = pair
        if pair.family == "su":
            p, q = pair.params
            self.size = p + q
            self._split = p
            diag = [QI(0, Q(q, p + q))] * p + [QI(0, Q(-p, p + q))] * q
        else:
            (n,) = pair.params
            self.size = 2 * n
            self._split = n
            diag = [QI(0, Q(1, 2))] * n + [QI(0, Q(-1, 2))] * n
        self.z0_matrix = _mat(
            [[diag[i] if i == j else QI() for j in range(self.size)] for i in range(self.size)]
        )

    def p_element(self, block: list[list[QI]]) -> Mat:
        """Embed a block matrix into p; validates shape and symmetry."""
        s = self._split
        m = self.size - s
        if len(block) != s or any(len(r) != m for r in block):
            raise DomainError("bad-input", f"block must be {s} x {m}")
        if self.pair.family == "sp":
            for i in range(s):
                for j in range(m):
                    if block[i][j] != block[j][i]:
                        raise DomainError("bad-input", "sp block must be symmetric")
        rows = []
        for i in range(self.size):
            row = []
            for j in range(self.size):
                if i < s and j >= s:
                    row.append(block[i][j - s])
                elif i >= s and j < s:
                    if self.pair.family == "su":
                        row.append(block[j][i - s].conj())
                    else:
                        row.append(block[i - s][j].conj())
                else:
                    row.append(QI())
            rows.append(row)
        return _mat(rows)

    def in_p(self, x: Mat) -> bool:
        s = self._split
        if len(x) != self.size:
            return False
        for i in range(self.size):
            for j in range(self.size):
                same = (i < s) == (j < s)
                if same and x[i][j]:
                    return False
        for i in range(s):
            for j in range(s, self.size):
                if x[j][i] != x[i][j].conj():
                    return False
        if self.pair.family == "sp":
            for i in range(s):
                for j in range(s, self.size):
                    if x[i][j] != x[j - s][i + s]:
                        return False
        return True

    def in_k(self, x: Mat) -> bool:
        s = self._split
        for i in range(self.size):
            for j in range(self.size):
                if ((i < s) != (j < s)) and x[i][j]:
                    return False
        return True

    def cascade_vector(self, k: int) -> Mat:
        """A real root vector X_k for the k-th cascade root, entries 0 or 1."""
        s = self._split
        m = self.size - s
        block = [[QI() for _ in range(m)] for _ in range(s)]
        if self.pair.family == "su":
            # gamma_k = e_k - e_(n+1-k) targets block row k, column q+1-k
            block[k][m - 1 - k] = QI(1)
        else:
            block[k][k] = QI(1)
        return self.p_element(block)

    def phi_K(self, x: Mat) -> Mat:
        """The quadratic moment map value -[X, [z0, X]], an element of k."""
        if not self.in_p(x):
            raise DomainError("bad-input", "matrix is not in the model of p")
        y = mat_commutator(self.z0_matrix, x)
        return mat_neg(mat_commutator(x, y))

    def weight_of(self, m: Mat) -> Weight:
        """Weight coordinates of a diagonal element of k (entries i * d_j)."""
        if not self.in_k(m):
            raise DomainError("bad-input", "matrix is not in the model of k")
        n = self.size
        for i in range(n):
            for j in range(n):
                if i != j and m[i][j]:
                    raise DomainError("bad-input", "matrix is not diagonal")
                if i == j and m[i][j].re != 0:
                    raise DomainError("bad-input", "diagonal entries must be imaginary")
        if self.pair.family == "su":
            return Weight(tuple(m[i][i].im for i in range(n)), True)
        s = self._split
        return Weight(tuple(m[i][i].im for i in range(s)), False)

    def z0_pairing(self, m: Mat) -> Fraction:
        """Positive-definite pairing -tr(M z0) of an element of k with z0."""
        prod = mat_mul(m, self.z0_matrix)
        tr = QI()
        for i in range(self.size):
            tr = tr + prod[i][i]
        if tr.im != 0:
            raise AssertionError("trace pairing came out complex")
        return -tr.re


@lru_cache(maxsize=None)
def matrix_model(pair: HermitianPair) -> MatrixModel:
    return MatrixModel(pair)


def phi_K_matrix(pair: HermitianPair, x: Mat) -> Mat:
    """Moment map on the matrix model of p; errors if x is outside the model."""
    return matrix_model(pair).phi_K(x)
