"""Small exact linear algebra helpers: solving in a span and Fourier-Motzkin.

Everything is over Fraction.  Sizes here are tiny (a handful of variables and
a few dozen rows), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Q = Fraction

Vec = tuple[Fraction, ...]


def solve_in_span(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Coefficients c with sum c_j vectors[j] = target, or None if unsolvable.

    When the vectors are dependent an arbitrary consistent solution is
    returned (free coefficients set to zero).
    """
    k = len(vectors)
    m = len(target)
    if k == 0:
        return () if all(Q(t) == 0 for t in target) else None
    rows = [[Q(vectors[j][i]) for j in range(k)] + [Q(target[i])] for i in range(m)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][k] != 0:
            return None
    sol = [Q(0)] * k
    for i, col in pivots:
        sol[col] = rows[i][k]
    # rows below the pivot block were checked; verify in case of early break
    for i in range(m):
        acc = sum(Q(vectors[j][i]) * sol[j] for j in range(k))
        if acc != Q(target[i]):
            return None
    return tuple(sol)


def _normalize_row(coeffs: Vec, rhs: Fraction) -> tuple[Vec, Fraction]:
    scale = next((abs(c) for c in coeffs if c != 0), None)
    if scale is None:
        return coeffs, rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def fm_feasible_point(rows: Sequence[tuple[Sequence[Fraction], Fraction]], nvars: int) -> tuple[Fraction, ...] | None:
    """A rational point satisfying every row a . x >= b, or None.

    Classic Fourier-Motzkin elimination with back substitution; exact, and
    deterministic for a fixed input order.
    """
    cur: list[tuple[Vec, Fraction]] = []
    seen = set()
    for a, b in rows:
        row = _normalize_row(tuple(Q(c) for c in a), Q(b))
        if row not in seen:
            seen.add(row)
            cur.append(row)
    levels: list[tuple[list[tuple[Vec, Fraction]], list[tuple[Vec, Fraction]]]] = []
    for v in range(nvars - 1, -1, -1):
        lows = [r for r in cur if r[0][v] > 0]
        ups = [r for r in cur if r[0][v] < 0]
        rest = [r for r in cur if r[0][v] == 0]
        new = list(rest)
        seen = set(new)
        for (la, lb) in lows:
            for (ua, ub) in ups:
                # positive combination cancelling variable v
                p, q = -ua[v], la[v]
                coeffs = tuple(p * x + q * y for x, y in zip(la, ua))
                row = _normalize_row(coeffs, p * lb + q * ub)
                if row not in seen:
                    seen.add(row)
                    new.append(row)
        levels.append((lows, ups))
        cur = new
    for _, b in cur:
        if b > 0:
            return None
    x = [Q(0)] * nvars
    for v, (lows, ups) in zip(range(nvars), reversed(levels)):
        lo = None
        for a, b in lows:
            val = (b - sum(a[j] * x[j] for j in range(nvars) if j != v)) / a[v]
            lo = val if lo is None else max(lo, val)
        hi = None
        for a, b in ups:
            val = (b - sum(a[j] * x[j] for j in range(nvars) if j != v)) / a[v]
            hi = val if hi is None else min(hi, val)
        if lo is not None and hi is not None:
            x[v] = (lo + hi) / 2
        elif lo is not None:
            x[v] = lo
        elif hi is not None:
            x[v] = hi
    return tuple(x)


def nonneg_combination(
    generators: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> tuple[Fraction, ...] | None:
    """Coefficients c >= 0 with sum c_j generators[j] = target, or None."""
    k = len(generators)
    m = len(target)
    if k == 0:
        return () if all(Q(t) == 0 for t in target) else None
    rows: list[tuple[Vec, Fraction]] = []
    for i in range(m):
        coeffs = tuple(Q(generators[j][i]) for j in range(k))
        rows.append((coeffs, Q(target[i])))
        rows.append((tuple(-c for c in coeffs), -Q(target[i])))
    for j in range(k):
        rows.append((tuple(Q(1) if t == j else Q(0) for t in range(k)), Q(0)))
    return fm_feasible_point(rows, k)
