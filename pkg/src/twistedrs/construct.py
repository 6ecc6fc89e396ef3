"""Evaluation-map code constructions.

Covers plain RS/GRS codes, twisted RS codes (an extra monomial of degree
k-1+t whose coefficient is eta times the hook coefficient a_h), the star-
and plus-subclasses over multiplicative/additive subgroups, and Roth-Lempel
comparison codes.

Evaluation points live in F_q plus a single point at infinity.  Evaluating
a polynomial at infinity yields its coefficient of x^ell, where ell is the
top degree supported by the polynomial space at hand (k-1 for RS codes,
k-1+t for twisted codes).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import poly
from .galois import INF, FiniteField
from .linalg import rank


class ConstructionError(ValueError):
    pass


def sort_points(points) -> tuple:
    """Finite points ascending, infinity canonically last."""
    finite = sorted(p for p in points if p != INF)
    if any(p == INF for p in points):
        return tuple(finite) + (INF,)
    return tuple(finite)


def check_eval_points(field: FiniteField, alpha) -> None:
    seen = set()
    for a in alpha:
        if a == INF:
            key = INF
        else:
            if not (0 <= a < field.q):
                raise ConstructionError(f"evaluation point {a} outside GF({field.q})")
            key = a
        if key in seen:
            raise ConstructionError(f"duplicate evaluation point {a}")
        seen.add(key)


@dataclass(frozen=True)
class LinearCode:
    """A linear [n, k] code given by a full-row-rank generator matrix."""

    field: FiniteField
    n: int
    k: int
    generator: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not (1 <= self.k < self.n):
            raise ConstructionError(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        if len(self.generator) != self.k or any(
            len(row) != self.n for row in self.generator
        ):
            raise ConstructionError("generator matrix shape mismatch")
        if rank(self.field, [list(r) for r in self.generator]) != self.k:
            raise ConstructionError("generator matrix is not full row rank")

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.generator]

    def to_json(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "n": self.n,
            "k": self.k,
            "generator": [list(r) for r in self.generator],
        }


def make_code(field: FiniteField, rows) -> LinearCode:
    gen = tuple(tuple(r) for r in rows)
    return LinearCode(field, len(gen[0]), len(gen), gen)


@dataclass(frozen=True)
class TwistedCodeSpec:
    """Parameters (alpha, k, t, h, eta) of a twisted RS code."""

    field: FiniteField
    alpha: tuple
    k: int
    t: int
    h: int
    eta: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        check_eval_points(self.field, self.alpha)
        n = len(self.alpha)
        if not (0 <= self.h < self.k <= self.field.q):
            raise ConstructionError(f"need 0 <= h < k <= q, got h={self.h}, k={self.k}")
        if self.k >= n:
            raise ConstructionError(f"need k < n, got k={self.k}, n={n}")
        if not (1 <= self.t <= n - self.k):
            raise ConstructionError(f"twist t={self.t} outside [1, n-k]")
        if not (1 <= self.eta < self.field.q):
            raise ConstructionError("eta must be a nonzero field element")

    @property
    def n(self) -> int:
        return len(self.alpha)

    def finite_points(self) -> list[int]:
        return [a for a in self.alpha if a != INF]

    def has_inf(self) -> bool:
        return INF in self.alpha

    def to_json(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "alpha": list(self.alpha),
            "k": self.k,
            "t": self.t,
            "h": self.h,
            "eta": self.eta,
        }


def spec_from_json(data: dict) -> TwistedCodeSpec:
    from .galois import field_from_descriptor

    fld = field_from_descriptor(data["field"])
    alpha = tuple(INF if a == INF else int(a) for a in data["alpha"])
    return TwistedCodeSpec(
        fld, alpha, int(data["k"]), int(data["t"]), int(data["h"]), int(data["eta"])
    )


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def evaluate(field: FiniteField, coeffs, alpha, ell: int) -> list[int]:
    """Evaluate a polynomial on a point vector; infinity reads coeff of x^ell."""
    coeffs = list(coeffs)
    if len(coeffs) - 1 > ell:
        raise ConstructionError("polynomial degree exceeds ell")
    check_eval_points(field, alpha)
    out = []
    for a in alpha:
        if a == INF:
            out.append(poly.coeff(coeffs, ell))
        else:
            out.append(poly.evaluate(field, coeffs, a))
    return out


def rs_code(field: FiniteField, alpha, k: int) -> LinearCode:
    """Reed-Solomon code: evaluations of x^i for i < k."""
    alpha = tuple(alpha)
    if not (0 < k < len(alpha)):
        raise ConstructionError("need 0 < k < n")
    rows = [evaluate(field, [0] * i + [1], alpha, k - 1) for i in range(k)]
    return make_code(field, rows)


def grs_code(field: FiniteField, alpha, k: int, v) -> LinearCode:
    """Generalized RS code: RS columns scaled by the nonzero multipliers v."""
    v = list(v)
    if len(v) != len(alpha):
        raise ConstructionError("one column multiplier per evaluation point")
    if any(x == 0 for x in v):
        raise ConstructionError("column multipliers must be nonzero")
    base = rs_code(field, alpha, k)
    rows = [
        [field.mul(x, vi) for x, vi in zip(row, v)] for row in base.generator
    ]
    return make_code(field, rows)


def twisted_rows(spec: TwistedCodeSpec) -> list[list[int]]:
    """Generator rows: evaluation of x^i + [i == h] * eta * x^(k-1+t)."""
    fld = spec.field
    ell = spec.k - 1 + spec.t
    rows = []
    for i in range(spec.k):
        coeffs = [0] * (i + 1)
        coeffs[i] = 1
        if i == spec.h:
            coeffs += [0] * (ell - i)
            coeffs[ell] = spec.eta
        rows.append(evaluate(fld, coeffs, spec.alpha, ell))
    return rows


def twisted_code(spec: TwistedCodeSpec) -> LinearCode:
    return make_code(spec.field, twisted_rows(spec))


# ---------------------------------------------------------------------------
# subclasses with a-priori MDS guarantees
# ---------------------------------------------------------------------------

def star_twisted(field, subgroup, alpha, k: int, eta: int) -> TwistedCodeSpec:
    """(t, h) = (1, 0) over points in G u {0}, with (-1)^k / eta outside G.

    Codes built this way are MDS: a degree-k member of the twisted space
    vanishing on k points would force (-1)^k / eta into the subgroup.
    """
    if not subgroup.is_proper(field):
        raise ConstructionError("subgroup must be proper in F_q^*")
    allowed = set(subgroup.elements) | {0}
    alpha = tuple(alpha)
    if any(a == INF or a not in allowed for a in alpha):
        raise ConstructionError("evaluation points must lie in the subgroup or be 0")
    if eta == 0:
        raise ConstructionError("eta must be nonzero")
    sign = field.pow(field.minus_one(), k)
    if field.mul(sign, field.inv(eta)) in subgroup.elements:
        raise ConstructionError("(-1)^k * eta^-1 must lie outside the subgroup")
    return TwistedCodeSpec(field, alpha, k, 1, 0, eta)


def plus_twisted(field, subgroup, alpha, k: int, eta: int) -> TwistedCodeSpec:
    """(t, h) = (1, k-1) over points in V u {inf}, with 1/eta outside V."""
    if not subgroup.is_proper(field):
        raise ConstructionError("subgroup must be proper in (F_q, +)")
    allowed = set(subgroup.elements)
    alpha = tuple(alpha)
    if any(a != INF and a not in allowed for a in alpha):
        raise ConstructionError("evaluation points must lie in the subgroup or be inf")
    if eta == 0:
        raise ConstructionError("eta must be nonzero")
    if field.inv(eta) in allowed:
        raise ConstructionError("eta^-1 must lie outside the subgroup")
    return TwistedCodeSpec(field, alpha, k, 1, k - 1, eta)


# ---------------------------------------------------------------------------
# Roth-Lempel comparison codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RothLempelSpec:
    """Point set S (finite points, optionally inf) plus the parameter delta.

    The code has length |S| + 1: one Vandermonde-style column per point of S
    (inf contributing the unit column e_k) and one extra column carrying
    delta.  It is MDS exactly when delta is nonzero whenever inf is used and
    no (k-1)-subset of the finite points has delta * sum = 1.
    """

    field: FiniteField
    points: tuple
    k: int
    delta: int

    def __post_init__(self):
        object.__setattr__(self, "points", sort_points(self.points))
        check_eval_points(self.field, self.points)
        n = len(self.points) + 1
        if n < self.k + 2:
            raise ConstructionError("need |S| + 1 >= k + 2")
        if not (0 <= self.delta < self.field.q):
            raise ConstructionError("delta must be a field element")
        if self.delta == 0 and INF in self.points:
            raise ConstructionError("delta must be nonzero when inf is a point")

    @property
    def n(self) -> int:
        return len(self.points) + 1


def roth_lempel_code(spec: RothLempelSpec) -> LinearCode:
    fld, k = spec.field, spec.k
    cols: list[list[int]] = []
    for a in spec.points:
        if a == INF:
            col = [0] * k
            col[k - 1] = 1
        else:
            col = [fld.pow(a, i) for i in range(k)]
        cols.append(col)
    extra = [0] * k
    extra[k - 2] = spec.delta
    extra[k - 1] = 1
    cols.append(extra)
    rows = [[col[i] for col in cols] for i in range(k)]
    return make_code(fld, rows)


def roth_lempel_is_mds_condition(spec: RothLempelSpec) -> bool:
    """delta * (sum of any k-1 distinct finite points) != 1."""
    from itertools import combinations

    fld = spec.field
    finite = [a for a in spec.points if a != INF]
    if spec.delta == 0:
        return True
    for sub in combinations(finite, spec.k - 1):
        total = 0
        for a in sub:
            total = fld.add(total, a)
        if fld.mul(spec.delta, total) == 1:
            return False
    return True
