"""Arc-level ground truth for the weight-2 bamboo singularities z^(n+1) = x y.

Samples truncated power-series arcs in each family N_i, computes contact
orders of polynomials along them, and checks the coefficient separation
that keeps distinct families out of each other's closures.  Everything
is exact rational arithmetic; randomness is fully seeded.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Any, Mapping, Sequence

from .errors import (
    BadFamilyIndex,
    SameVertex,
    TruncationTooSmall,
    ZeroPolynomial,
)

Series = tuple[Q, ...]  # coefficient of t^k at index k

# monomial exponents (x, y, z) -> coefficient
Poly = Mapping[tuple[int, int, int], Q | int]

POLY_X: Poly = {(1, 0, 0): 1}
POLY_Y: Poly = {(0, 1, 0): 1}
POLY_Z: Poly = {(0, 0, 1): 1}


def defining_polynomial(n: int) -> Poly:
    """z^(n+1) - x y."""
    return {(0, 0, n + 1): 1, (1, 1, 0): -1}


# small rationals for generic coefficients; leading terms draw from the
# nonzero subset so no leading-term cancellation can occur
_NONZERO_POOL = (Q(1), Q(-1), Q(2), Q(-2), Q(3), Q(1, 2), Q(-1, 2), Q(2, 3))
_POOL = _NONZERO_POOL + (Q(0), Q(0), Q(0))


def _series_mul(a: Sequence[Q], b: Sequence[Q], order: int) -> Series:
    out = [Q(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > order:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            if bj != 0:
                out[i + j] += ai * bj
    return tuple(out)


def _series_pow(a: Sequence[Q], k: int, order: int) -> Series:
    out: Series = tuple([Q(1)] + [Q(0)] * order)
    for _ in range(k):
        out = _series_mul(out, a, order)
    return out


def _series_inverse_unit(a: Sequence[Q], order: int) -> Series:
    """Inverse of a series with nonzero constant term, mod t^(order+1)."""
    inv = [Q(0)] * (order + 1)
    inv[0] = 1 / a[0]
    for k in range(1, order + 1):
        acc = Q(0)
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * inv[k - i]
        inv[k] = -acc / a[0]
    return tuple(inv)


def series_order(a: Sequence[Q]) -> int | None:
    """Least exponent with a nonzero coefficient; None if identically zero."""
    for k, c in enumerate(a):
        if c != 0:
            return k
    return None


@dataclass(frozen=True)
class TruncatedArc:
    """Arc of the family N_i on z^(n+1) = x y, truncated at order `trunc`."""

    n: int
    family: int
    trunc: int
    x: Series
    y: Series
    z: Series

    def coordinates(self) -> dict[str, Series]:
        return {"x": self.x, "y": self.y, "z": self.z}


def sample_arc(n: int, i: int, trunc: int, seed: Any) -> TruncatedArc:
    """Draw a generic arc of N_i: ord(x) = i, ord(z) = 1, y = z^(n+1) / x."""
    if not 1 <= i <= n:
        raise BadFamilyIndex(f"family index {i} not in 1..{n}")
    if trunc < n + 2:
        raise TruncationTooSmall(f"truncation {trunc} must be at least {n + 2}")
    rng = random.Random(repr(("nasharcs-arc", n, i, trunc, seed)))
    # work a little past the target order so the division stays exact
    work = trunc + i

    x = [Q(0)] * (work + 1)
    x[i] = rng.choice(_NONZERO_POOL)
    for k in range(i + 1, work + 1):
        x[k] = rng.choice(_POOL)
    z = [Q(0)] * (work + 1)
    z[1] = rng.choice(_NONZERO_POOL)
    for k in range(2, work + 1):
        z[k] = rng.choice(_POOL)

    zp = _series_pow(z, n + 1, work)  # order n + 1 >= i + 1
    unit = tuple(x[i:])  # x = t^i * unit, unit(0) != 0
    shifted = tuple(zp[i:])  # z^(n+1) / t^i
    y = _series_mul(shifted, _series_inverse_unit(unit, trunc), trunc)

    return TruncatedArc(
        n=n,
        family=i,
        trunc=trunc,
        x=tuple(x[: trunc + 1]),
        y=tuple(y[: trunc + 1]),
        z=tuple(z[: trunc + 1]),
    )


def evaluate(arc: TruncatedArc, f: Poly) -> Series:
    """f(x(t), y(t), z(t)) mod t^(trunc+1)."""
    order = arc.trunc
    out = [Q(0)] * (order + 1)
    for (ex, ey, ez), coeff in f.items():
        term: Series = tuple([Q(coeff)] + [Q(0)] * order)
        for series, e in ((arc.x, ex), (arc.y, ey), (arc.z, ez)):
            if e:
                term = _series_mul(term, _series_pow(series, e, order), order)
        for k, c in enumerate(term):
            out[k] += c
    return tuple(out)


def contact_order(arc: TruncatedArc, f: Poly) -> int | None:
    """ord_t of f along the arc; None means unbounded at this truncation.

    Unbounded is a legitimate value (the defining equation evaluates to
    an exact zero), so callers decide whether to raise the truncation.
    """
    if not f or all(Q(c) == 0 for c in f.values()):
        raise ZeroPolynomial("contact order of the zero polynomial is undefined")
    return series_order(evaluate(arc, f))


@dataclass(frozen=True)
class SeparationReport:
    n: int
    i: int
    j: int
    samples: int
    passed: bool
    counterexamples: tuple[dict[str, Any], ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "samples": self.samples,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


def separation_check(
    n: int, i: int, j: int, samples: int, trunc: int, seed: Any
) -> SeparationReport:
    """Check the open condition separating N_i from the closure of N_j.

    Every arc of N_i must have a nonzero coefficient of t^i in x, while
    every arc of N_j (j > i) has that coefficient equal to zero.
    """
    if i == j:
        raise SameVertex("separation needs two distinct families")
    if not 1 <= i < j <= n:
        raise BadFamilyIndex(f"need 1 <= i < j <= n, got i={i}, j={j}")
    bad: list[dict[str, Any]] = []
    for s in range(samples):
        arc_i = sample_arc(n, i, trunc, (seed, "i", s))
        arc_j = sample_arc(n, j, trunc, (seed, "j", s))
        if arc_i.x[i] == 0:
            bad.append({"family": i, "sample": s, "reason": "coefficient t^i of x is zero"})
        if arc_j.x[i] != 0:
            bad.append({"family": j, "sample": s, "reason": "coefficient t^i of x is nonzero"})
    return SeparationReport(
        n=n, i=i, j=j, samples=samples, passed=not bad, counterexamples=tuple(bad)
    )


def defining_residual(arc: TruncatedArc) -> Series:
    """z^(n+1) - x y along the arc; must vanish through the truncation."""
    return evaluate(arc, defining_polynomial(arc.n))
