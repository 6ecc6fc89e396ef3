"""MDS decisions for twisted codes, plus k-sum-generator machinery.

Three independent routes decide MDS-ness:

* ``is_mds_minors`` checks every k x k minor of a generator matrix; it is
  the ground-truth oracle and works for any linear code.
* ``is_mds_condition_star`` / ``is_mds_condition_plus`` are the closed-form
  criteria for twist 1 with hook 0 (product form) and hook k-1 (sum form).
* ``is_mds_general`` covers all (t, h): for each k-subset of finite points
  it builds the t x t hook matrix from locator coefficients and tests
  regularity.  The matrix has a unit lower-triangular body, so regularity
  reduces to a single pivot eta^-1 - W where W depends only on the subset;
  a subset rules out exactly the eta with eta^-1 = W.

The census exploits the pivot form: one subset scan yields the full set of
good eta values for a family (alpha, t, h) at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import poly
from .construct import LinearCode, TwistedCodeSpec, twisted_code
from .galois import INF, FiniteField
from .linalg import det


class MdsCheckError(ValueError):
    pass


@dataclass(frozen=True)
class MdsWitness:
    subset: tuple[int, ...]
    g: tuple[int, ...] | None = None


@dataclass(frozen=True)
class MdsVerdict:
    is_mds: bool
    witness: MdsWitness | None = None

    def __bool__(self) -> bool:
        return self.is_mds

    def to_json(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = {
                "subset": list(self.witness.subset),
                "g": list(self.witness.g) if self.witness.g is not None else None,
            }
        return {"mds": self.is_mds, "witness": wit}


@dataclass(frozen=True)
class LocatorPolynomial:
    """Monic product of (x - alpha_i) over an index subset."""

    coefficients: tuple[int, ...]
    index_set: tuple[int, ...]


def locator(field: FiniteField, alpha, index_set) -> LocatorPolynomial:
    coeffs = poly.from_roots(field, [alpha[i] for i in index_set])
    return LocatorPolynomial(tuple(coeffs), tuple(index_set))


# ---------------------------------------------------------------------------
# revolving-door subset enumeration (one element swapped per step)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _door_order(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    if k == n:
        return (tuple(range(n)),)
    head = _door_order(n - 1, k)
    tail = tuple(
        s + (n - 1,) for s in reversed(_door_order(n - 1, k - 1))
    )
    return head + tail


@lru_cache(maxsize=None)
def door_swaps(n: int, k: int):
    """First subset plus the (out, in) swap turning each subset into the next."""
    order = _door_order(n, k)
    swaps = []
    for prev, cur in zip(order, order[1:]):
        out = set(prev) - set(cur)
        into = set(cur) - set(prev)
        assert len(out) == 1 and len(into) == 1, "door order broke"
        swaps.append((out.pop(), into.pop()))
    return order[0], tuple(swaps)


def door_subsets(n: int, k: int):
    """Yield (subset, sigma-update) pairs lazily; used by callers directly."""
    return _door_order(n, k)


# ---------------------------------------------------------------------------
# hook pivot: the eta^-1 value ruled out by one subset
# ---------------------------------------------------------------------------

def hook_pivot(field: FiniteField, sig, k: int, t: int, h: int):
    """Return (W, g): subset kills exactly eta^-1 = W; g is the cofactor.

    sig holds the locator coefficients sigma_0..sigma_k (monic).  The body
    rows of the hook matrix determine g_{t-1}..g_0 by forward substitution
    with g_{t-1} = 1; the pivot is W = sum_j g_j sigma_{h-j}.
    """
    g = [0] * t
    g[t - 1] = 1
    for row in range(1, t):
        acc = 0
        for c in range(row):
            idx = k - row + c
            if idx < 0:
                continue
            s = sig[idx]
            if s and g[t - 1 - c]:
                acc = field.add(acc, field.mul(s, g[t - 1 - c]))
        g[t - 1 - row] = field.neg(acc)
    w = 0
    for j in range(t):
        idx = h - j
        if idx >= 0 and g[j] and sig[idx]:
            w = field.add(w, field.mul(g[j], sig[idx]))
    return w, g


def _scan_hook_pivots(field: FiniteField, points: list[int], k: int, t: int, h: int):
    """Yield (index_subset, sigma, W, g) over all k-subsets of points.

    Locator coefficients are maintained incrementally along the
    revolving-door order: one linear factor swapped per step.
    """
    n = len(points)
    first, swaps = door_swaps(n, k)
    sig = poly.from_roots(field, [points[i] for i in first])
    subset = list(first)
    w, g = hook_pivot(field, sig, k, t, h)
    yield tuple(subset), sig, w, g
    subset_set = set(first)
    for out_i, in_i in swaps:
        sig = poly.div_linear(field, sig, points[out_i])
        sig = poly.mul_linear(field, sig, points[in_i])
        subset_set.discard(out_i)
        subset_set.add(in_i)
        w, g = hook_pivot(field, sig, k, t, h)
        yield tuple(sorted(subset_set)), sig, w, g


# ---------------------------------------------------------------------------
# MDS checks
# ---------------------------------------------------------------------------

def is_mds_minors(code: LinearCode) -> MdsVerdict:
    """Every k x k minor of the generator must be nonzero (oracle route)."""
    fld = code.field
    rows = code.rows()
    for cols in combinations(range(code.n), code.k):
        minor = [[row[c] for c in cols] for row in rows]
        if det(fld, minor) == 0:
            return MdsVerdict(False, MdsWitness(cols))
    return MdsVerdict(True)


def is_mds_condition_star(field: FiniteField, alpha, k: int, eta: int) -> MdsVerdict:
    """Twist 1, hook 0: MDS iff eta * (-1)^k * prod(subset) != 1 always."""
    alpha = tuple(alpha)
    if INF in alpha:
        raise MdsCheckError("product criterion needs finite evaluation points")
    sign = field.pow(field.minus_one(), k)
    for idx in combinations(range(len(alpha)), k):
        prod = sign
        for i in idx:
            prod = field.mul(prod, alpha[i])
        if field.mul(eta, prod) == 1:
            return MdsVerdict(False, MdsWitness(idx, (1,)))
    return MdsVerdict(True)


def is_mds_condition_plus(field: FiniteField, alpha, k: int, eta: int) -> MdsVerdict:
    """Twist 1, hook k-1: MDS iff eta * sum(subset) != -1 over finite subsets."""
    alpha = tuple(alpha)
    finite_idx = [i for i, a in enumerate(alpha) if a != INF]
    minus_one = field.minus_one()
    for idx in combinations(finite_idx, k):
        total = 0
        for i in idx:
            total = field.add(total, alpha[i])
        if field.mul(eta, total) == minus_one:
            return MdsVerdict(False, MdsWitness(tuple(idx), (1,)))
    return MdsVerdict(True)


def is_mds_general(spec: TwistedCodeSpec, allow_inf_any_hook: bool = False) -> MdsVerdict:
    """Hook-matrix criterion over all k-subsets of finite points.

    With infinity among the points and hook k-1, subsets skip infinity (a
    polynomial vanishing there has degree below k-1 and cannot reach k
    roots).  Infinity with any other hook falls back to the minors oracle,
    and only when explicitly allowed.
    """
    fld = spec.field
    if spec.has_inf() and spec.h != spec.k - 1:
        if not allow_inf_any_hook:
            raise MdsCheckError(
                "infinity with hook != k-1 is outside the criterion; "
                "pass allow_inf_any_hook=True to decide via minors"
            )
        return is_mds_minors(twisted_code(spec))
    finite_idx = [i for i, a in enumerate(spec.alpha) if a != INF]
    points = [spec.alpha[i] for i in finite_idx]
    eta_inv = fld.inv(spec.eta)
    for subset, _sig, w, g in _scan_hook_pivots(fld, points, spec.k, spec.t, spec.h):
        if w == eta_inv:
            positions = tuple(finite_idx[i] for i in subset)
            return MdsVerdict(False, MdsWitness(positions, tuple(g)))
    return MdsVerdict(True)


def witness_polynomial(spec: TwistedCodeSpec, witness: MdsWitness) -> list[int]:
    """Reconstruct f = g * locator, a twisted polynomial vanishing on the subset."""
    if witness.g is None:
        raise MdsCheckError("witness carries no cofactor polynomial")
    fld = spec.field
    sig = poly.from_roots(fld, [spec.alpha[i] for i in witness.subset])
    f = poly.mul(fld, list(witness.g), sig)
    return poly.scale(fld, f, spec.eta)


# ---------------------------------------------------------------------------
# family sweep: all good eta values for one (alpha, t, h) at once
# ---------------------------------------------------------------------------

def family_pivots(field: FiniteField, alpha, k: int, t: int, h: int):
    """Set of pivot values W over k-subsets of the finite points.

    Returns None when no eta can work (infinity. with hook < k-1 where a
    (k-1)-subset locator has a vanishing x^h coefficient).
    """
    alpha = tuple(alpha)
    finite = [a for a in alpha if a != INF]
    has_inf = len(finite) < len(alpha)
    if has_inf and h != k - 1:
        if h == 0:
            if 0 in finite:
                return None
        else:
            first, swaps = door_swaps(len(finite), k - 1)
            sig = poly.from_roots(field, [finite[i] for i in first])
            if poly.coeff(sig, h) == 0:
                return None
            for out_i, in_i in swaps:
                sig = poly.div_linear(field, sig, finite[out_i])
                sig = poly.mul_linear(field, sig, finite[in_i])
                if poly.coeff(sig, h) == 0:
                    return None
    if t == 1 and h == 0:
        return _pivots_products(field, finite, k)
    if t == 1 and h == k - 1:
        return _pivots_sums(field, finite, k)
    return {w for _s, _sig, w, _g in _scan_hook_pivots(field, finite, k, t, h)}


def mds_eta_values(field: FiniteField, alpha, k: int, t: int, h: int):
    """All nonzero eta for which the twisted code on alpha is MDS."""
    pivots = family_pivots(field, alpha, k, t, h)
    if pivots is None:
        return frozenset()
    bad = {field.inv(w) for w in pivots if w}
    return frozenset(e for e in field.nonzero() if e not in bad)


def _pivots_products(field: FiniteField, finite, k: int):
    """W = (-1)^k * product over k-subsets, via a DP in the log group."""
    nonzero = [a for a in finite if a]
    pivots = set()
    if len(nonzero) < len(finite):
        pivots.add(0)  # subsets through 0 pin W = 0 (rules nothing out)
    if len(nonzero) >= k:
        reach = _exact_subset_dp(
            _get_ops(field, "mul"), [field.log[a] for a in nonzero], k
        )
        sign = field.pow(field.minus_one(), k)
        for idx in _bits(reach):
            pivots.add(field.mul(sign, field.exp[idx]))
    return pivots


def _pivots_sums(field: FiniteField, finite, k: int):
    """W = -(sum) over k-subsets, via a DP in the additive group."""
    if len(finite) < k:
        return set()
    reach = _exact_subset_dp(_get_ops(field, "add"), list(finite), k)
    return {field.neg(v) for v in _bits(reach)}


def _bits(mask: int):
    idx = 0
    while mask:
        if mask & 1:
            yield idx
        mask >>= 1
        idx += 1


def _get_ops(field: FiniteField, kind: str):
    """Per-element bitmask translations for (F_q, +) or log-space (F_q^*, *)."""
    cache = getattr(field, "_subset_shift_ops", None)
    if cache is None:
        cache = {}
        field._subset_shift_ops = cache
    ops = cache.get(kind)
    if ops is None:
        if kind == "add":
            factory = _add_shift_ops(field)
            size = field.q
        else:
            factory = _mul_shift_ops(field)
            size = field.q - 1
        ops = [factory(s) for s in range(size)]
        cache[kind] = ops
    return ops


def _exact_subset_dp(ops, elems: list[int], k: int) -> int:
    """Bitmask of values reachable as a sum of exactly k distinct elements."""
    dp = [0] * (k + 1)
    dp[0] = 1
    for s in elems:
        op = ops[s]
        for c in range(min(k, len(dp) - 1), 0, -1):
            if dp[c - 1]:
                dp[c] |= op(dp[c - 1])
    return dp[k]


def exact_subset_sums(field: FiniteField, elems, count: int) -> int:
    """Bitmask over F_q of sums of exactly ``count`` distinct elements."""
    return _exact_subset_dp(_get_ops(field, "add"), list(elems), count)


def _add_shift_ops(field: FiniteField):
    """shift(s) -> function translating a bitmask over F_q by +s."""
    q, p, m = field.q, field.p, field.m
    full = (1 << q) - 1
    if m == 1:
        def shift(s):
            if s == 0:
                return lambda mask: mask
            def op(mask, s=s):
                return ((mask << s) | (mask >> (q - s))) & full
            return op
        return shift

    # digitwise rotation masks: per digit position and rotation amount
    def shift(s):
        if s == 0:
            return lambda mask: mask
        steps = []
        for d in range(m):
            v = (s // p**d) % p
            if v == 0:
                continue
            block = p ** (d + 1)
            stride = p**d
            lo = 0
            for start in range(0, q, block):
                for i in range(start, start + block - v * stride):
                    lo |= 1 << i
            amount = v * stride
            hi_shift = block - amount
            hi = full & ~lo
            steps.append((lo, amount, hi, hi_shift))

        def op(mask, steps=steps, full=full):
            for lo, amount, hi, hi_shift in steps:
                mask = (((mask & lo) << amount) | ((mask & hi) >> hi_shift)) & full
            return mask

        return op

    return shift


def _mul_shift_ops(field: FiniteField):
    """shift(log s) -> rotation of a bitmask over Z_{q-1} (log space)."""
    n1 = field.q - 1
    full = (1 << n1) - 1

    def shift(ls):
        if ls == 0:
            return lambda mask: mask
        def op(mask, ls=ls):
            return ((mask << ls) | (mask >> (n1 - ls))) & full
        return op

    return shift


# ---------------------------------------------------------------------------
# k-sum generators and the M(k, A) threshold
# ---------------------------------------------------------------------------

def is_k_sum_generator(field: FiniteField, points, k: int, group: str = "additive") -> bool:
    """True when every group element is a sum/product of k distinct members.

    Infinity is stripped before the check.  ``group`` selects (F_q, +) or
    (F_q^*, *); for the latter all points must be nonzero.
    """
    pts = [a for a in points if a != INF]
    if k > len(pts):
        raise MdsCheckError(f"k={k} exceeds |S|={len(pts)}")
    if group == "additive":
        reach = _exact_subset_dp(_get_ops(field, "add"), pts, k)
        return reach == (1 << field.q) - 1
    if group == "multiplicative":
        if any(a == 0 for a in pts):
            raise MdsCheckError("multiplicative carrier excludes 0")
        logs = [field.log[a] for a in pts]
        reach = _exact_subset_dp(_get_ops(field, "mul"), logs, k)
        return reach == (1 << (field.q - 1)) - 1
    raise MdsCheckError(f"unknown group kind {group!r}")


@dataclass(frozen=True)
class GroupDescriptor:
    """Finite abelian group given by its primary decomposition."""

    order: int
    primary: tuple[int, ...]

    @staticmethod
    def cyclic(n: int) -> "GroupDescriptor":
        parts = []
        rest, d = n, 2
        while d * d <= rest:
            if rest % d == 0:
                pk = 1
                while rest % d == 0:
                    pk *= d
                    rest //= d
                parts.append(pk)
            d += 1
        if rest > 1:
            parts.append(rest)
        return GroupDescriptor(n, tuple(sorted(parts)))

    @staticmethod
    def elementary(p: int, m: int) -> "GroupDescriptor":
        return GroupDescriptor(p**m, (p,) * m)

    @staticmethod
    def units_of(field: FiniteField) -> "GroupDescriptor":
        return GroupDescriptor.cyclic(field.q - 1)

    @staticmethod
    def additive_of(field: FiniteField) -> "GroupDescriptor":
        return GroupDescriptor.elementary(field.p, field.m)


def m_bound(group: GroupDescriptor, k: int) -> int | None:
    """Threshold M(k, A) for groups of even order 2r, r >= 6, 3 <= k <= r-2.

    Returns r, or r+1 for the elementary-2 / Z_4 x Z_2^(m-1) groups at
    k in {3, r-2}; None outside those hypotheses.
    """
    if group.order % 2:
        return None
    r = group.order // 2
    if r < 6 or not (3 <= k <= r - 2):
        return None
    parts = sorted(group.primary)
    exceptional = False
    if len(parts) > 1 and all(x == 2 for x in parts):
        exceptional = True
    if len(parts) > 1 and parts[-1] == 4 and all(x == 2 for x in parts[:-1]):
        exceptional = True
    if exceptional and k in (3, r - 2):
        return r + 1
    return r
