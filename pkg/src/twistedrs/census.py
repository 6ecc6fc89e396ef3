"""Exhaustive parameter-space searches over twisted and comparison codes.

Each census enumerates a family of code parameters, filters to MDS codes,
and groups the survivors into monomial-equivalence classes:

* star census: twist 1, hook 0, points inside a proper multiplicative
  subgroup (plus 0), eta with (-1)^k / eta outside the subgroup.
* plus census: twist 1, hook k-1, points inside a proper additive subgroup
  (plus infinity), 1/eta outside the subgroup.
* twisted census: every (point set, twist, hook, eta) combination.
* Roth-Lempel census: point sets S with an extra delta column.

Totals count parameter tuples with the point set taken unordered.  The MDS
filter runs once per (alpha, t, h) family: a single subset scan produces
the set of eta values that work for every eta at once.

Work shards deterministically over point sets, so worker count never
changes a result.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .construct import RothLempelSpec, roth_lempel_code
from .equiv import (
    CanonicalSignature,
    EquivalenceClassifier,
    _is_grs_of_systematic,
)
from .galois import (
    INF,
    FiniteField,
    all_proper_additive_subgroups,
    field_from_descriptor,
    make_field,
    multiplicative_subgroups,
)
from .linalg import rref
from .mdscheck import exact_subset_sums, family_pivots


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    q: int
    n: int
    k: int
    family: str
    t: int | None
    h: int | None
    total: int
    inequivalent: int
    non_grs: int
    runtime: float = 0.0
    inf_policy: str = "liberal"

    def key(self) -> tuple:
        return (self.q, self.n, self.k, self.family, self.t, self.h)

    def counts(self) -> tuple[int, int, int]:
        return (self.total, self.inequivalent, self.non_grs)


@dataclass(frozen=True)
class ClassInfo:
    signature: CanonicalSignature
    count: int
    is_grs: bool
    example: tuple


@dataclass(frozen=True)
class CensusResult:
    row: CensusRow
    classes: tuple[ClassInfo, ...]
    eta_bound_violations: tuple = ()

    def signatures(self) -> set[str]:
        return {c.signature.hex() for c in self.classes}


def cross_family_overlap(a: CensusResult, b: CensusResult) -> int:
    """Number of equivalence classes common to two censuses of one shape."""
    if (a.row.q, a.row.n, a.row.k) != (b.row.q, b.row.n, b.row.k):
        raise CensusError("overlap needs matching (q, n, k)")
    return len(a.signatures() & b.signatures())


# ---------------------------------------------------------------------------
# shared worker plumbing
# ---------------------------------------------------------------------------

def _encode_point(field: FiniteField, a) -> int:
    return field.q if a == INF else a


class _Collector:
    """Classifier plus per-class GRS flags and minimal example tags."""

    def __init__(self, field: FiniteField, n: int, k: int):
        self.clf = EquivalenceClassifier(field, n, k)
        self.field = field
        self.n = n
        self.k = k
        self.grs: list[bool] = []
        self.examples: list[tuple] = []
        self.total = 0

    def add(self, rows, tag) -> int:
        idx = self.clf.classify_rows(rows, tag)
        self.total += 1
        if idx == len(self.grs):
            red, pivots = rref(self.field, [list(r) for r in rows])
            nonpivots = [c for c in range(self.n) if c not in pivots]
            a_rows = [[row[c] for c in nonpivots] for row in red]
            self.grs.append(
                _is_grs_of_systematic(self.field, a_rows, self.k, self.n)
            )
            self.examples.append(tag)
        elif tag < self.examples[idx]:
            self.examples[idx] = tag
        return idx

    def partial(self) -> dict:
        classes = [
            (self.clf.signatures[i], self.clf.counts[i], self.grs[i], self.examples[i])
            for i in range(len(self.grs))
        ]
        return {"total": self.total, "classes": classes, "violations": []}


def _merge_partials(field, n, k, family, t, h, inf_policy, partials, runtime):
    total = 0
    merged: dict[CanonicalSignature, list] = {}
    violations: list = []
    for part in partials:
        total += part["total"]
        violations.extend(part["violations"])
        for sig, count, grs, example in part["classes"]:
            cur = merged.get(sig)
            if cur is None:
                merged[sig] = [count, grs, example]
            else:
                cur[0] += count
                if example < cur[2]:
                    cur[2] = example
    classes = tuple(
        ClassInfo(sig, cnt, grs, tuple(ex))
        for sig, (cnt, grs, ex) in sorted(
            merged.items(), key=lambda kv: kv[0].payload
        )
    )
    non_grs = sum(1 for c in classes if not c.is_grs)
    row = CensusRow(
        field.q, n, k, family, t, h, total, len(classes), non_grs,
        runtime, inf_policy,
    )
    return CensusResult(row, classes, tuple(sorted(violations)))


def _run_sharded(worker, args_base: dict, jobs: int):
    start = time.perf_counter()
    if jobs <= 1:
        partials = [worker({**args_base, "shard": 0, "jobs": 1})]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(
                pool.map(
                    worker,
                    [{**args_base, "shard": s, "jobs": jobs} for s in range(jobs)],
                )
            )
    return partials, time.perf_counter() - start


def _powers(field: FiniteField, finite, top: int) -> list[list[int]]:
    pw = [[1] * len(finite)]
    for _ in range(top):
        pw.append([field.mul(x, a) for x, a in zip(pw[-1], finite)])
    return pw


def _twisted_family_rows(powers, has_inf, k, t):
    """Rows of the twisted generator split into (base, twist) parts.

    base rows are eta-independent; the hook row adds eta * twist_row.
    """
    ell = k - 1 + t
    base = []
    for i in range(k):
        row = list(powers[i])
        if has_inf:
            row.append(0)
        base.append(row)
    twist = list(powers[ell])
    if has_inf:
        twist.append(1)
    return base, twist


def _rows_for_eta(field, base, twist, h, eta):
    rows = [list(r) for r in base]
    hook = rows[h]
    rows[h] = [field.add(x, field.mul(eta, w)) for x, w in zip(hook, twist)]
    return rows


# ---------------------------------------------------------------------------
# star census
# ---------------------------------------------------------------------------

def _star_worker(args: dict) -> dict:
    field = field_from_descriptor(args["field"])
    n, k = args["n"], args["k"]
    shard, jobs = args["shard"], args["jobs"]
    col = _Collector(field, n, k)
    sign = field.pow(field.minus_one(), k)
    index = 0
    for sub in multiplicative_subgroups(field):
        if not sub.is_proper(field) or sub.order + 1 < n:
            continue
        members = set(sub.elements)
        etas = [e for e in field.nonzero() if field.mul(sign, field.inv(e)) not in members]
        universe = sorted(members | {0})
        for alpha in combinations(universe, n):
            index += 1
            if (index - 1) % jobs != shard:
                continue
            powers = _powers(field, list(alpha), k)
            base, twist = _twisted_family_rows(powers, False, k, 1)
            for eta in etas:
                rows = _rows_for_eta(field, base, twist, 0, eta)
                tag = (sub.order, tuple(alpha), 1, 0, eta)
                col.add(rows, tag)
    return col.partial()


def census_star(field: FiniteField, n: int, k: int, jobs: int = 1) -> CensusResult:
    """All (subgroup, point set, eta) triples of star-twisted codes."""
    args = {"field": field.descriptor(), "n": n, "k": k}
    partials, dt = _run_sharded(_star_worker, args, jobs)
    return _merge_partials(field, n, k, "star", 1, 0, "liberal", partials, dt)


# ---------------------------------------------------------------------------
# plus census
# ---------------------------------------------------------------------------

def _plus_worker(args: dict) -> dict:
    field = field_from_descriptor(args["field"])
    n, k = args["n"], args["k"]
    shard, jobs = args["shard"], args["jobs"]
    col = _Collector(field, n, k)
    index = 0
    for sub in all_proper_additive_subgroups(field):
        if sub.order + 1 < n:
            continue
        members = set(sub.elements)
        etas = [e for e in field.nonzero() if field.inv(e) not in members]
        universe = sorted(members) + [INF]
        for alpha in combinations(universe, n):
            index += 1
            if (index - 1) % jobs != shard:
                continue
            finite = [a for a in alpha if a != INF]
            has_inf = len(finite) < len(alpha)
            powers = _powers(field, finite, k)
            base, twist = _twisted_family_rows(powers, has_inf, k, 1)
            for eta in etas:
                rows = _rows_for_eta(field, base, twist, k - 1, eta)
                tag = (
                    sub.order,
                    tuple(_encode_point(field, a) for a in alpha),
                    1,
                    k - 1,
                    eta,
                )
                col.add(rows, tag)
    return col.partial()


def census_plus(field: FiniteField, n: int, k: int, jobs: int = 1) -> CensusResult:
    """All (subgroup, point set, eta) triples of plus-twisted codes."""
    args = {"field": field.descriptor(), "n": n, "k": k}
    partials, dt = _run_sharded(_plus_worker, args, jobs)
    return _merge_partials(field, n, k, "plus", 1, k - 1, "liberal", partials, dt)


# ---------------------------------------------------------------------------
# general twisted census
# ---------------------------------------------------------------------------

def _twisted_worker(args: dict) -> dict:
    field = field_from_descriptor(args["field"])
    n, k = args["n"], args["k"]
    t_fix, h_fix = args["t"], args["h"]
    inf_policy = args["inf_policy"]
    check_eta_bound = args["check_eta_bound"]
    shard, jobs = args["shard"], args["jobs"]
    col = _Collector(field, n, k)
    violations = []

    universe = list(range(field.q))
    if inf_policy != "none":
        universe.append(INF)
    if n > len(universe):
        return col.partial()

    # Twist exponents k-1+t run over all degrees up to q-2: the polynomials
    # stay distinct as functions on F_q and the census matches set counting
    # on every published cell.  Beyond t = n-k the evaluation map can lose
    # injectivity, but those parameter tuples simply fail the MDS filter.
    t_values = [t_fix] if t_fix is not None else list(range(1, field.q - k))
    h_values = [h_fix] if h_fix is not None else list(range(k))
    top_degree = max(k - 1 + t for t in t_values)

    index = 0
    for alpha in combinations(universe, n):
        index += 1
        if (index - 1) % jobs != shard:
            continue
        finite = [a for a in alpha if a != INF]
        has_inf = len(finite) < len(alpha)
        powers = _powers(field, finite, top_degree)
        alpha_tag = tuple(_encode_point(field, a) for a in alpha)
        for t in t_values:
            for h in h_values:
                if has_inf and h != k - 1 and inf_policy == "strict":
                    continue
                pivots = family_pivots(field, alpha, k, t, h)
                if pivots is None:
                    continue
                bad = {field.inv(w) for w in pivots if w}
                if len(bad) >= field.q - 1:
                    continue
                base, twist = _twisted_family_rows(powers, has_inf, k, t)
                grs_etas = 0
                for eta in field.nonzero():
                    if eta in bad:
                        continue
                    rows = _rows_for_eta(field, base, twist, h, eta)
                    idx = col.add(rows, (alpha_tag, t, h, eta))
                    if col.grs[idx]:
                        grs_etas += 1
                if check_eta_bound and grs_etas > 6:
                    violations.append((alpha_tag, t, h, grs_etas))
    part = col.partial()
    part["violations"] = violations
    return part


def census_twisted(
    field: FiniteField,
    n: int,
    k: int,
    t: int | None = None,
    h: int | None = None,
    inf_policy: str = "liberal",
    jobs: int = 1,
    check_eta_bound: bool = False,
) -> CensusResult:
    """All MDS twisted codes over (point set, twist, hook, eta) tuples.

    inf_policy: "liberal" admits infinity for every hook (minor-equivalent
    locator test for hooks below k-1), "strict" admits it only for hook
    k-1, "none" keeps all points finite.
    """
    if inf_policy not in ("liberal", "strict", "none"):
        raise CensusError(f"unknown inf_policy {inf_policy!r}")
    args = {
        "field": field.descriptor(),
        "n": n,
        "k": k,
        "t": t,
        "h": h,
        "inf_policy": inf_policy,
        "check_eta_bound": check_eta_bound,
    }
    partials, dt = _run_sharded(_twisted_worker, args, jobs)
    return _merge_partials(field, n, k, "twisted", t, h, inf_policy, partials, dt)


# ---------------------------------------------------------------------------
# Roth-Lempel census
# ---------------------------------------------------------------------------

def _rl_worker(args: dict) -> dict:
    field = field_from_descriptor(args["field"])
    n, k = args["n"], args["k"]
    delta_policy = args["delta_policy"]
    shard, jobs = args["shard"], args["jobs"]
    col = _Collector(field, n, k)
    universe = list(range(field.q)) + [INF]
    full = (1 << field.q) - 1
    index = 0
    for points in combinations(universe, n - 1):
        index += 1
        if (index - 1) % jobs != shard:
            continue
        finite = [a for a in points if a != INF]
        has_inf = len(finite) < len(points)
        sums = exact_subset_sums(field, finite, k - 1)
        if sums | 1 == full:  # every nonzero value is a (k-1)-subset sum
            continue
        deltas = [
            d for d in field.nonzero() if not (sums >> field.inv(d)) & 1
        ]
        if delta_policy == "any" and not has_inf:
            deltas.insert(0, 0)
        for delta in deltas:
            spec = RothLempelSpec(field, points, k, delta)
            code = roth_lempel_code(spec)
            tag = (tuple(_encode_point(field, a) for a in points), delta)
            col.add(code.rows(), tag)
    return col.partial()


def census_roth_lempel(
    field: FiniteField,
    n: int,
    k: int,
    delta_policy: str = "nonzero",
    jobs: int = 1,
) -> CensusResult:
    """MDS Roth-Lempel codes over (point set of size n-1, delta) pairs."""
    if delta_policy not in ("nonzero", "any"):
        raise CensusError(f"unknown delta_policy {delta_policy!r}")
    args = {
        "field": field.descriptor(),
        "n": n,
        "k": k,
        "delta_policy": delta_policy,
    }
    partials, dt = _run_sharded(_rl_worker, args, jobs)
    return _merge_partials(field, n, k, "rl", None, None, "liberal", partials, dt)


# ---------------------------------------------------------------------------
# exotic-twist existence
# ---------------------------------------------------------------------------

def exotic_existence(
    field: FiniteField,
    n: int,
    k: int,
    inf_policy: str = "liberal",
) -> dict[tuple[int, int], bool]:
    """For each (t, h): does any (point set, eta) give an MDS twisted code?"""
    universe = list(range(field.q))
    if inf_policy != "none":
        universe.append(INF)
    result: dict[tuple[int, int], bool] = {}
    pending = [
        (t, h) for t in range(1, field.q - k) for h in range(k)
    ]
    for alpha in combinations(universe, n):
        has_inf = INF in alpha
        still = []
        for t, h in pending:
            if has_inf and h != k - 1 and inf_policy == "strict":
                still.append((t, h))
                continue
            pivots = family_pivots(field, alpha, k, t, h)
            alive = pivots is not None and len(
                {field.inv(w) for w in pivots if w}
            ) < field.q - 1
            if alive:
                result[(t, h)] = True
            else:
                still.append((t, h))
        pending = still
        if not pending:
            break
    for t, h in pending:
        result[(t, h)] = False
    return dict(sorted(result.items()))


# ---------------------------------------------------------------------------
# table replay
# ---------------------------------------------------------------------------

TABLE1_Q = 19
TABLE1_CELLS = [
    (n, k) for n in range(6, 11) for k in range(3, min(n - 2, 8))
]

TABLE2_MAX_N = {7: 6, 8: 8, 9: 9, 11: 10, 13: 12}


def table2_cells(q: int) -> list[tuple[int, int]]:
    return [
        (n, k)
        for n in range(6, TABLE2_MAX_N[q] + 1)
        for k in range(3, n - 2)
    ]


def reproduce_table1(jobs: int = 1, cells=None) -> list[CensusResult]:
    field = make_field(TABLE1_Q)
    out = []
    for n, k in cells or TABLE1_CELLS:
        out.append(census_star(field, n, k, jobs=jobs))
    return out


def reproduce_table2(
    qs=None, jobs: int = 1, inf_policy: str = "liberal", check_eta_bound: bool = False
) -> list[CensusResult]:
    out = []
    for q in qs or sorted(TABLE2_MAX_N):
        if q not in TABLE2_MAX_N:
            raise CensusError(f"table 2 covers q in {sorted(TABLE2_MAX_N)}")
        p, m = _factor_prime_power(q)
        field = make_field(p, m)
        for n, k in table2_cells(q):
            out.append(
                census_twisted(
                    field, n, k, inf_policy=inf_policy, jobs=jobs,
                    check_eta_bound=check_eta_bound,
                )
            )
    return out


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            if q != 1:
                raise CensusError("not a prime power")
            return p, m
    raise CensusError("not a prime power")


def rows_to_csv_lines(rows) -> list[str]:
    lines = ["q,n,k,family,t,h,total,inequivalent,non_grs"]
    for row in sorted(rows, key=lambda r: r.key()):
        t = "" if row.t is None else row.t
        h = "" if row.h is None else row.h
        lines.append(
            f"{row.q},{row.n},{row.k},{row.family},{t},{h},"
            f"{row.total},{row.inequivalent},{row.non_grs}"
        )
    return lines
