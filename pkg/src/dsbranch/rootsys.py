"""Exact root-system arithmetic on weights.

Weights live either in a Euclidean coordinate space or in the quotient of one
by the all-ones line (the natural home for type A weights).  All arithmetic is
over fractions.Fraction; nothing here ever touches a float.  The bilinear form
is the plain Euclidean dot product on coordinates, which is Weyl-invariant for
every system built from the e_i - e_j, e_i + e_j, 2 e_i root families used in
this package.

Memoized helpers cache only on immutable arguments, so cached and uncached
calls agree and the caches are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DomainError

Q = Fraction

Rational = int | Fraction


class Weight:
    """A vector in t*, Euclidean or defined modulo the all-ones vector.

    Quotient weights are kept in a canonical representative with coordinate
    sum zero, so equality and hashing see through the all-ones ambiguity.
    """

    __slots__ = ("coords", "quotient", "_hash")

    coords: tuple[Fraction, ...]
    quotient: bool

    def __init__(self, coords: Iterable[Rational], quotient: bool = False):
        cs = tuple(Q(c) for c in coords)
        if not cs:
            raise DomainError("bad-input", "weight needs at least one coordinate")
        if quotient:
            s = sum(cs)
            if s:
                shift = s / len(cs)
                cs = tuple(c - shift for c in cs)
        self.coords = cs
        self.quotient = quotient
        self._hash = None

    @classmethod
    def _raw(cls, coords: tuple[Fraction, ...], quotient: bool) -> "Weight":
        # fast path for arithmetic results that are already canonical
        w = object.__new__(cls)
        w.coords = coords
        w.quotient = quotient
        w._hash = None
        return w

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def zero_like(self) -> "Weight":
        return Weight._raw((Q(0),) * len(self.coords), self.quotient)

    def _check(self, other: "Weight") -> None:
        if self.quotient != other.quotient or len(self.coords) != len(other.coords):
            raise DomainError("ambient-mismatch", "weights live in different ambients")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(tuple(a + b for a, b in zip(self.coords, other.coords)), self.quotient)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(tuple(a - b for a, b in zip(self.coords, other.coords)), self.quotient)

    def __neg__(self) -> "Weight":
        return Weight._raw(tuple(-a for a in self.coords), self.quotient)

    def __mul__(self, k: Rational) -> "Weight":
        k = Q(k)
        return Weight._raw(tuple(a * k for a in self.coords), self.quotient)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.quotient == other.quotient and self.coords == other.coords

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.coords, self.quotient))
            self._hash = h
        return h

    def __lt__(self, other: "Weight") -> bool:
        # coordinate order, used only to make set iteration deterministic
        return self.coords < other.coords

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coords)
        tail = "; mod 1" if self.quotient else ""
        return f"Weight({body}{tail})"


def inner(u: Weight, v: Weight) -> Fraction:
    """Euclidean pairing of two weights in the same ambient."""
    u._check(v)
    return sum(a * b for a, b in zip(u.coords, v.coords))


def reflect(alpha: Weight, v: Weight) -> Weight:
    """Reflection of v in the hyperplane orthogonal to the root alpha."""
    nn = inner(alpha, alpha)
    if nn == 0:
        raise DomainError("zero-root", "cannot reflect in a zero vector")
    c = 2 * inner(v, alpha) / nn
    return v - alpha * c


@dataclass(frozen=True)
class RootDatum:
    """A finite root system with a chosen simple system.

    roots is closed under negation; simple_roots are linearly independent and
    every root is an all-nonnegative or all-nonpositive integer combination of
    them.  weyl_order is the order of the generated reflection group.
    """

    ambient_dim: int
    quotient: bool
    roots: frozenset[Weight]
    simple_roots: tuple[Weight, ...]
    weyl_order: int


def validate_datum(datum: RootDatum) -> None:
    """Check the RootDatum structural invariants, raising on violation."""
    for a in datum.roots:
        if a.quotient != datum.quotient or a.dim != datum.ambient_dim:
            raise DomainError("ambient-mismatch", "root outside the datum ambient")
        if -a not in datum.roots:
            raise DomainError("bad-input", f"roots not closed under negation at {a}")
        if a.is_zero:
            raise DomainError("zero-root", "zero vector listed as a root")
    from .linalg import solve_in_span

    basis = [s.coords for s in datum.simple_roots]
    if basis:
        for i, s in enumerate(datum.simple_roots):
            others = basis[:i] + basis[i + 1:]
            if others and solve_in_span(others, s.coords) is not None:
                raise DomainError("bad-input", "simple roots not linearly independent")
        for a in datum.roots:
            cs = solve_in_span(basis, a.coords)
            if cs is None:
                raise DomainError("bad-input", f"root {a} outside span of simples")
            if not (all(c >= 0 for c in cs) or all(c <= 0 for c in cs)):
                raise DomainError("bad-input", f"root {a} has mixed signs over simples")
            if any(c.denominator != 1 for c in cs):
                raise DomainError("bad-input", f"root {a} not integral over simples")
    elif datum.roots:
        raise DomainError("bad-input", "nonempty system with no simple roots")


@lru_cache(maxsize=None)
def simple_system(positives: frozenset[Weight]) -> tuple[Weight, ...]:
    """Indecomposable elements of a positive system, in coordinate order."""
    pos = set(positives)
    sums = set()
    for a in pos:
        for b in pos:
            sums.add(a + b)
    return tuple(sorted(a for a in pos if a not in sums))


def is_dominant(datum: RootDatum, positives: frozenset[Weight], v: Weight) -> bool:
    """True when v pairs nonnegatively with every element of positives."""
    return all(inner(v, a) >= 0 for a in positives)


@lru_cache(maxsize=None)
def _dom_rep(positives: frozenset[Weight], v: Weight) -> tuple[Weight, int]:
    simples = simple_system(positives)
    w = v
    sign = 1
    moved = True
    while moved:
        moved = False
        for s in simples:
            if inner(w, s) < 0:
                w = reflect(s, w)
                sign = -sign
                moved = True
    if any(inner(w, s) == 0 for s in simples):
        sign = 0
    return w, sign


def dominant_rep(datum: RootDatum, positives: frozenset[Weight], v: Weight) -> tuple[Weight, int]:
    """Dominant Weyl conjugate of v plus the determinant of the moving element.

    The sign is 0 exactly when v lies on a wall of the system.
    """
    return _dom_rep(positives, v)


def weyl_orbit(datum: RootDatum, v: Weight) -> frozenset[Weight]:
    """Orbit of v under the reflections in the datum's simple roots."""
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for s in datum.simple_roots:
                u = reflect(s, w)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


def rho(positives: frozenset[Weight], like: Weight | None = None) -> Weight:
    """Half the sum of a positive system; `like` fixes the ambient when empty."""
    it = iter(sorted(positives))
    first = next(it, None)
    if first is None:
        if like is None:
            raise DomainError("bad-input", "rho of an empty set needs an ambient hint")
        return like.zero_like()
    acc = first
    for a in it:
        acc = acc + a
    return acc * Q(1, 2)


def weyl_dim(datum: RootDatum, positives: frozenset[Weight], lam: Weight) -> int:
    """Dimension of the irreducible with highest weight lam (Weyl's formula)."""
    if not is_dominant(datum, positives, lam):
        raise DomainError("non-dominant", f"{lam} is not dominant")
    if not positives:
        return 1
    r = rho(positives)
    num = Q(1)
    for a in positives:
        num *= inner(lam + r, a) / inner(r, a)
    if num.denominator != 1 or num <= 0:
        raise AssertionError(f"Weyl dimension came out as {num}")
    return int(num)


@lru_cache(maxsize=None)
def _freudenthal_items(
    positives: frozenset[Weight], lam: Weight
) -> tuple[tuple[Weight, int], ...]:
    simples = simple_system(positives)
    if any(inner(lam, a) < 0 for a in positives):
        raise DomainError("non-dominant", f"{lam} is not dominant")
    if not simples:
        return ((lam, 1),)
    for s in simples:
        c = 2 * inner(lam, s) / inner(s, s)
        if c.denominator != 1:
            raise DomainError("not-lattice", f"{lam} is not integral for the system")

    from .linalg import solve_in_span

    basis = [s.coords for s in simples]

    def coeffs(w: Weight) -> tuple[Fraction, ...] | None:
        return solve_in_span(basis, w.coords)

    # weight set: v belongs iff its dominant conjugate d satisfies lam - d in N-span of simples
    keep: set[Weight] = {lam}
    depth_of_dominant: dict[Weight, Fraction] = {lam: Q(0)}
    frontier = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for s in simples:
                u = v - s
                if u in keep:
                    continue
                du, _ = _dom_rep(positives, u)
                if du in depth_of_dominant:
                    keep.add(u)
                    nxt.append(u)
                    continue
                cs = coeffs(lam - du)
                if cs is not None and all(c >= 0 for c in cs):
                    keep.add(u)
                    depth_of_dominant[du] = sum(cs)
                    nxt.append(u)
        frontier = nxt

    doms = sorted(depth_of_dominant.items(), key=lambda kv: (kv[1], kv[0].coords))
    r = rho(positives)
    lam_r = lam + r
    n_lam = inner(lam_r, lam_r)
    mult: dict[Weight, int] = {}
    for mu, depth in doms:
        if depth == 0:
            mult[mu] = 1
            continue
        acc = Q(0)
        for a in positives:
            k = 1
            while True:
                x = mu + a * k
                if x not in keep:
                    break
                dx, _ = _dom_rep(positives, x)
                m = mult.get(dx, 0)
                if m:
                    acc += m * inner(x, a)
                k += 1
        mu_r = mu + r
        den = n_lam - inner(mu_r, mu_r)
        val = 2 * acc / den
        if val.denominator != 1 or val <= 0:
            raise AssertionError(f"Freudenthal gave multiplicity {val} at {mu}")
        mult[mu] = int(val)

    out: dict[Weight, int] = {}
    for mu, m in mult.items():
        orbit = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for w in frontier:
                for s in simples:
                    u = reflect(s, w)
                    if u not in orbit:
                        orbit.add(u)
                        nxt.append(u)
            frontier = nxt
        for w in orbit:
            out[w] = m
    return tuple(sorted(out.items(), key=lambda kv: kv[0].coords))


def freudenthal(datum: RootDatum, positives: frozenset[Weight], lam: Weight) -> dict[Weight, int]:
    """All weights of the irreducible with highest weight lam, with multiplicities.

    Dominant multiplicities come from Freudenthal's recursion in decreasing
    height order; the full map is the union of their Weyl orbits.
    """
    return dict(_freudenthal_items(positives, lam))


def kostant_partition(
    generators: Iterable[Weight], target: Weight, grading: Weight | None = None
) -> int:
    """Number of ways to write target as an N-combination of the generators.

    A grading functional with strictly positive pairing against every
    generator bounds the recursion; by default the sum of the generators is
    tried.  Duplicated generators count as distinguishable copies.
    """
    gens = tuple(sorted(generators))
    if not gens:
        return 1 if target.is_zero else 0
    if grading is None:
        acc = gens[0]
        for g in gens[1:]:
            acc = acc + g
        grading = acc
    if any(inner(g, grading) <= 0 for g in gens):
        raise DomainError("bad-grading", "grading functional not positive on every generator")
    return _kp(gens, len(gens), target, grading)


@lru_cache(maxsize=None)
def _kp(gens: tuple[Weight, ...], j: int, target: Weight, grading: Weight) -> int:
    if j == 0:
        return 1 if target.is_zero else 0
    g = gens[j - 1]
    gd = inner(g, grading)
    td = inner(target, grading)
    total = 0
    k = 0
    t = target
    while k * gd <= td:
        total += _kp(gens, j - 1, t, grading)
        t = t - g
        k += 1
    return total


def weight_sort_key(w: Weight) -> tuple[Fraction, ...]:
    return w.coords


def signed_orbit(positives: frozenset[Weight], v: Weight) -> list[tuple[Weight, int]]:
    """Pairs (w v, det w) over the Weyl group of the system; v must be regular."""
    simples = simple_system(positives)
    seen: dict[Weight, int] = {v: 1}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            sgn = seen[w]
            for s in simples:
                u = reflect(s, w)
                if u == w:
                    raise DomainError("on-wall", "signed orbit of a singular vector")
                if u not in seen:
                    seen[u] = -sgn
                    nxt.append(u)
        frontier = nxt
    return sorted(seen.items(), key=lambda kv: kv[0].coords)
