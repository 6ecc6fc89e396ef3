"""Monomial equivalence of MDS codes and the GRS membership test.

Monomial equivalence (coordinate permutation plus nonzero column scaling)
of an MDS [n, k] code is projective equivalence of the n-point arc formed
by the generator columns in PG(k-1, q).  Canonicalization therefore works
on points: for every ordered (d+1)-tuple of points (d = min(k, n-k), all
tuples are frames since the points form an arc) apply the unique projective
map sending the tuple to the standard frame, normalize and sort the image,
and keep the lexicographic minimum.  Two MDS codes are equivalent exactly
when their canonical images agree; moreover the set of all frame images is
the same for equivalent codes, which gives the census an O(1) per-code
classification against known classes.

The GRS test is the classical minor characterization on the entrywise
inverse of the systematic part.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .construct import LinearCode, make_code
from .galois import FiniteField
from .linalg import invert, kernel_basis, rref
from .mdscheck import is_mds_minors


class EquivalenceError(ValueError):
    pass


@dataclass(frozen=True)
class SystematicForm:
    """Row-reduced [I | A] together with the column order realizing it."""

    a: tuple[tuple[int, ...], ...]
    permutation: tuple[int, ...]


def systematic_form(code: LinearCode) -> SystematicForm:
    rows, pivots = rref(code.field, code.rows())
    if len(pivots) < code.k:
        raise EquivalenceError("generator matrix has rank below k")
    nonpivots = [c for c in range(code.n) if c not in pivots]
    a = tuple(tuple(row[c] for c in nonpivots) for row in rows)
    return SystematicForm(a, tuple(pivots) + tuple(nonpivots))


def _dual_rows(field: FiniteField, rows, n: int, k: int) -> list[list[int]]:
    red, pivots = rref(field, [list(r) for r in rows])
    if len(pivots) < k:
        raise EquivalenceError("generator matrix has rank below k")
    nonpivots = [c for c in range(n) if c not in pivots]
    r = n - k
    h_cols: dict[int, list[int]] = {}
    for j, col in enumerate(pivots):
        h_cols[col] = [field.neg(red[j][nonpivots[i]]) for i in range(r)]
    for j, col in enumerate(nonpivots):
        h_cols[col] = [int(i == j) for i in range(r)]
    return [[h_cols[c][i] for c in range(n)] for i in range(r)]


def dual(code: LinearCode) -> LinearCode:
    """Generator of the orthogonal space; [I | A] maps to [-A^T | I]."""
    return make_code(code.field, _dual_rows(code.field, code.rows(), code.n, code.k))


# ---------------------------------------------------------------------------
# GRS membership (minor characterization)
# ---------------------------------------------------------------------------

def _det3(field: FiniteField, m) -> int:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    t1 = field.mul(a, field.sub(field.mul(e, i), field.mul(f, h)))
    t2 = field.mul(b, field.sub(field.mul(d, i), field.mul(f, g)))
    t3 = field.mul(c, field.sub(field.mul(d, h), field.mul(e, g)))
    return field.add(field.sub(t1, t2), t3)


def _is_grs_of_systematic(field: FiniteField, a_rows, k: int, n: int) -> bool:
    if k < 3 or n - k < 3:
        return True
    tilde = [[field.inv(x) for x in row] for row in a_rows]
    for rs in combinations(range(k), 3):
        for cs in combinations(range(n - k), 3):
            sub = [[tilde[r][c] for c in cs] for r in rs]
            if _det3(field, sub) != 0:
                return False
    return True


def is_grs(code: LinearCode) -> bool:
    """Equivalent to a Reed-Solomon code?  Input must be MDS."""
    if not is_mds_minors(code):
        raise EquivalenceError("GRS characterization requires an MDS code")
    sf = systematic_form(code)
    return _is_grs_of_systematic(code.field, sf.a, code.k, code.n)


# ---------------------------------------------------------------------------
# projective points and frame normalization
# ---------------------------------------------------------------------------

def _normalize_column(field: FiniteField, col) -> tuple[int, ...]:
    lead = next((x for x in col if x), None)
    if lead is None:
        raise EquivalenceError("zero column in generator matrix")
    if lead == 1:
        return tuple(col)
    inv = field.inv(lead)
    return tuple(field.mul(inv, x) for x in col)


def points_of_rows(field: FiniteField, rows) -> list[tuple[int, ...]]:
    n = len(rows[0])
    pts = [
        _normalize_column(field, [row[j] for row in rows]) for j in range(n)
    ]
    if len(set(pts)) != n:
        raise EquivalenceError("repeated projective point; code is not MDS")
    return sorted(pts)


def reduced_points(code: LinearCode) -> tuple[list[tuple[int, ...]], int]:
    """Arc of the code or of its dual, whichever has smaller dimension."""
    if code.n - code.k < code.k:
        side = dual(code)
        return points_of_rows(side.field, side.rows()), code.n - code.k
    return points_of_rows(code.field, code.rows()), code.k


def _frame_image(field: FiniteField, pts, frame, labels_scratch=None):
    """Sorted integer labels of all points after normalizing one frame.

    ``frame`` is an ordered (d+1)-tuple of indices into pts; the map sends
    the first d points to the unit points and the last to the all-one point.
    """
    d = len(frame) - 1
    m = [[pts[frame[c]][r] for c in range(d)] for r in range(d)]
    target = pts[frame[d]]
    coeffs = _solve_square(field, m, target)
    b = [[field.mul(m[r][c], coeffs[c]) for c in range(d)] for r in range(d)]
    binv = invert(field, b)
    q = field.q
    labels = []
    for p in pts:
        vec = []
        for row in binv:
            acc = 0
            for x, y in zip(row, p):
                if x and y:
                    acc = field.add(acc, field.mul(x, y))
            vec.append(acc)
        lead_inv = None
        label = 0
        for coord in vec:
            if lead_inv is None and coord:
                lead_inv = field.inv(coord)
            if lead_inv is not None and coord:
                coord = field.mul(coord, lead_inv)
            label = label * q + coord
        labels.append(label)
    labels.sort()
    return tuple(labels)


def _solve_square(field: FiniteField, m, rhs) -> list[int]:
    aug = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    red, pivots = rref(field, aug)
    d = len(m)
    if pivots != list(range(d)):
        raise EquivalenceError("frame points are not in general position")
    sol = [red[i][-1] for i in range(d)]
    if any(x == 0 for x in sol):
        raise EquivalenceError("frame points are not in general position")
    return sol


def _orbit_images(field: FiniteField, pts, d: int):
    """All frame images of an arc; equal as sets across equivalent codes."""
    n = len(pts)
    images = set()
    for frame in permutations(range(n), d + 1):
        images.add(_frame_image(field, pts, frame))
    return images


@dataclass(frozen=True)
class CanonicalSignature:
    """Deterministic representative of a monomial-equivalence class."""

    q: int
    n: int
    k: int
    payload: tuple[int, ...]

    def hex(self) -> str:
        body = f"{self.q},{self.n},{self.k}:" + ",".join(map(str, self.payload))
        return body.encode("ascii").hex()


def _signature_of_points(field: FiniteField, pts, d: int, n: int, k: int):
    if d <= 1:
        return CanonicalSignature(field.q, n, k, ())
    best = min(_orbit_images(field, pts, d))
    return CanonicalSignature(field.q, n, k, best)


def canonical_form(code: LinearCode) -> CanonicalSignature:
    """Canonical signature; equal signatures == monomially equivalent (MDS)."""
    if not is_mds_minors(code):
        raise EquivalenceError("canonical form is defined for MDS codes only")
    pts, d = reduced_points(code)
    return _signature_of_points(code.field, pts, d, code.n, code.k)


# ---------------------------------------------------------------------------
# incremental classification (census engine)
# ---------------------------------------------------------------------------

class EquivalenceClassifier:
    """Groups MDS codes of one (q, n, k) into monomial-equivalence classes.

    Classifying a code costs a single frame normalization: the image is
    looked up against the stored orbits of all class representatives, and
    only a genuinely new class pays for its full orbit enumeration.
    """

    def __init__(self, field: FiniteField, n: int, k: int):
        self.field = field
        self.n = n
        self.k = k
        self.d = min(k, n - k)
        self._lookup: dict[tuple, int] = {}
        self.signatures: list[CanonicalSignature] = []
        self.counts: list[int] = []
        self.representatives: list[object] = []

    def classify_rows(self, rows, tag=None) -> int:
        fld = self.field
        if self.n - self.k < self.k:
            side_rows = _dual_rows(fld, rows, self.n, self.k)
        else:
            side_rows = rows
        pts = points_of_rows(fld, side_rows)
        if self.d <= 1:
            if not self.signatures:
                self.signatures.append(
                    CanonicalSignature(fld.q, self.n, self.k, ())
                )
                self.counts.append(0)
                self.representatives.append(tag)
            self.counts[0] += 1
            return 0
        probe = _frame_image(fld, pts, tuple(range(self.d + 1)))
        idx = self._lookup.get(probe)
        if idx is None:
            images = _orbit_images(fld, pts, self.d)
            assert probe in images
            idx = len(self.signatures)
            for img in images:
                self._lookup[img] = idx
            self.signatures.append(
                CanonicalSignature(fld.q, self.n, self.k, min(images))
            )
            self.counts.append(0)
            self.representatives.append(tag)
        self.counts[idx] += 1
        return idx

    def classify(self, code: LinearCode, tag=None) -> int:
        return self.classify_rows(code.rows(), tag)


def count_classes(codes) -> tuple[int, int, int]:
    """(total, inequivalent, non-GRS classes) for MDS codes of one shape."""
    codes = list(codes)
    if not codes:
        return (0, 0, 0)
    params = {(c.field.q, c.n, c.k) for c in codes}
    if len(params) != 1:
        raise EquivalenceError(f"mixed code parameters: {sorted(params)}")
    first = codes[0]
    for c in codes:
        if not is_mds_minors(c):
            raise EquivalenceError("count_classes expects MDS codes")
    classifier = EquivalenceClassifier(first.field, first.n, first.k)
    reps: dict[int, LinearCode] = {}
    for c in codes:
        idx = classifier.classify(c)
        reps.setdefault(idx, c)
    non_grs = sum(1 for idx, rep in reps.items() if not is_grs(rep))
    return (len(codes), len(classifier.signatures), non_grs)


# ---------------------------------------------------------------------------
# direct equivalence tests
# ---------------------------------------------------------------------------

def apply_monomial(code: LinearCode, perm, scalars) -> LinearCode:
    """Image under the isometry c -> [v_j * c_{perm(j)}]."""
    fld = code.field
    rows = [
        [fld.mul(scalars[j], row[perm[j]]) for j in range(code.n)]
        for row in code.rows()
    ]
    return make_code(fld, rows)


def brute_force_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """Permutation search with the scaling solved linearly (oracle route)."""
    if (c1.field, c1.n, c1.k) != (c2.field, c2.n, c2.k):
        return False
    fld, n, k = c1.field, c1.n, c1.k
    h2 = dual(c2).rows()
    g1 = c1.rows()
    for perm in permutations(range(n)):
        system = []
        for hrow in h2:
            for grow in g1:
                system.append([fld.mul(hrow[j], grow[perm[j]]) for j in range(n)])
        basis = kernel_basis(fld, system)
        if not basis:
            continue
        if len(basis) == 1:
            if all(x for x in basis[0]):
                return True
            continue
        for combo in product(range(fld.q), repeat=len(basis)):
            if not any(combo):
                continue
            vec = [0] * n
            for coef, bvec in zip(combo, basis):
                if coef:
                    vec = [fld.add(v, fld.mul(coef, b)) for v, b in zip(vec, bvec)]
            if all(vec):
                return True
    return False


def are_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """Signature comparison for MDS pairs, permutation search otherwise."""
    if (c1.field, c1.n, c1.k) != (c2.field, c2.n, c2.k):
        return False
    if is_mds_minors(c1) and is_mds_minors(c2):
        return canonical_form(c1) == canonical_form(c2)
    if c1.n > 9:
        raise EquivalenceError(
            "non-MDS equivalence uses the permutation search, limited to n <= 9"
        )
    return brute_force_equivalent(c1, c2)
