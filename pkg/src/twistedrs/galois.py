"""Exact arithmetic in GF(p^m) and enumeration of its sub-structures.

Field elements are plain integers in [0, q).  The integer is read as a
little-endian base-p digit vector giving the coordinates of the element in
the polynomial basis of the defining modulus.  Multiplication runs through
exp/log tables built from a fixed primitive element, so all operations are
exact table lookups.

The default modulus for GF(p^m) is the lexicographically smallest monic
irreducible polynomial of degree m over GF(p) (smallest integer encoding),
which keeps element labels reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

MAX_ORDER = 1 << 16

# Elements of F_q are ints; evaluation points may additionally be INF.
INF = "inf"


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients as little-endian digit lists
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo b over GF(p); b must be nonzero."""
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    lead_inv = pow(lead, p - 2, p)
    while True:
        _poly_trim(a)
        if len(a) - 1 < db:
            return a
        shift = len(a) - 1 - db
        factor = (a[-1] * lead_inv) % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p


def _poly_is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(poly)/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = [(enc // p**i) % p for i in range(d)] + [1]
            if not _poly_mod(poly, div, p):
                return False
    return True


def _int_to_poly(value: int, p: int, m: int) -> list[int]:
    return [(value // p**i) % p for i in range(m)]


def _poly_to_int(digits: list[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(digits))


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    if m == 1:
        return (0, 1)
    for enc in range(p**m):
        cand = _int_to_poly(enc, p, m) + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# the field itself
# ---------------------------------------------------------------------------

class FiniteField:
    """GF(p^m) with table-driven arithmetic, for q = p^m <= 2^16.

    Immutable after construction; safe to share between workers.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not _poly_is_irreducible(list(modulus), p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus

        self._build_tables()

    # -- table construction -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Polynomial-basis product without tables (used only during setup)."""
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        da = _int_to_poly(a, p, m)
        db = _int_to_poly(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        red = _poly_mod(prod, list(self.modulus), p)
        return _poly_to_int(red + [0] * (m - len(red)), p)

    def _element_order(self, a: int, factors: list[int]) -> bool:
        """True when a generates the multiplicative group."""
        for f in factors:
            e = (self.q - 1) // f
            x, base = 1, a
            while e:
                if e & 1:
                    x = self._raw_mul(x, base)
                base = self._raw_mul(base, base)
                e >>= 1
            if x == 1:
                return False
        return True

    def _build_tables(self):
        q = self.q
        n1 = q - 1
        factors = []
        rest, d = n1, 2
        while d * d <= rest:
            if rest % d == 0:
                factors.append(d)
                while rest % d == 0:
                    rest //= d
            d += 1
        if rest > 1:
            factors.append(rest)

        gen = None
        for cand in range(1, q):
            if self._element_order(cand, factors):
                gen = cand
                break
        assert gen is not None
        self.generator = gen

        exp = [0] * (2 * n1)
        log = [-1] * q
        x = 1
        for i in range(n1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        if x != 1:
            raise FieldError("exp table did not close; modulus is bad")
        for i in range(n1, 2 * n1):
            exp[i] = exp[i - n1]
        self.exp = exp
        self.log = log
        if any(v < 0 for v in log[1:]):
            raise FieldError("exp table is not a bijection onto F_q^*")

        self.neg_table = [self._digit_neg(a) for a in range(q)]
        self.inv_table = [0] + [exp[n1 - log[a]] for a in range(1, q)]

        # dense tables pay off for the census fields (q <= 49)
        if q <= 256:
            self.add_table = [
                [self._digit_add(a, b) for b in range(q)] for a in range(q)
            ]
            mul_row0 = [0] * q
            self.mul_table = [mul_row0] + [
                [0] + [exp[log[a] + log[b]] for b in range(1, q)]
                for a in range(1, q)
            ]
        else:
            self.add_table = None
            self.mul_table = None

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        out, mult = 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _digit_neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return (-a) % p
        out, mult = 0, 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a][b]
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        la = (self.log[a] * e) % (self.q - 1)
        return self.exp[la]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def minus_one(self) -> int:
        return self.neg_table[1]

    # -- serialization -------------------------------------------------------

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m}, q={self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


_FIELD_CACHE: dict[tuple, FiniteField] = {}


def make_field(p: int, m: int = 1, modulus=None) -> FiniteField:
    """Construct (and cache) GF(p^m) with the given or default modulus."""
    key = (p, m, tuple(modulus) if modulus is not None else None)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FiniteField(p, m, modulus)
        _FIELD_CACHE[key] = field
    return field


def field_from_descriptor(desc: dict) -> FiniteField:
    return make_field(int(desc["p"]), int(desc["m"]), desc.get("modulus"))


# ---------------------------------------------------------------------------
# substructures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicativeSubgroup:
    order: int
    elements: tuple[int, ...]

    def is_proper(self, field: FiniteField) -> bool:
        return self.order < field.q - 1


@dataclass(frozen=True)
class AdditiveSubgroup:
    order: int
    elements: tuple[int, ...]
    basis: tuple[int, ...]
    is_subfield: bool = False

    def is_proper(self, field: FiniteField) -> bool:
        return self.order < field.q


def multiplicative_subgroups(field: FiniteField) -> list[MultiplicativeSubgroup]:
    """One subgroup of F_q^* per divisor of q-1, sorted by order.

    The group is cyclic, so this list is exhaustive.
    """
    n1 = field.q - 1
    divisors = sorted(d for d in range(1, n1 + 1) if n1 % d == 0)
    out = []
    for d in divisors:
        step = n1 // d
        elems = sorted(field.exp[(step * i) % n1] for i in range(d))
        out.append(MultiplicativeSubgroup(d, tuple(elems)))
    return out


def _span(field: FiniteField, basis: list[int]) -> frozenset[int]:
    vecs = {0}
    for b in basis:
        scaled = []
        mult = b
        for _ in range(field.p - 1):
            scaled.append(mult)
            mult = field.add(mult, b)
        vecs |= {field.add(v, s) for v in vecs for s in scaled}
    return frozenset(vecs)


def gaussian_binomial(m: int, j: int, p: int) -> int:
    num = den = 1
    for i in range(j):
        num *= p ** (m - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def additive_subgroups(field: FiniteField, order: int) -> list[AdditiveSubgroup]:
    """All GF(p)-subspaces of (F_q, +) with the given proper p-power order."""
    p, m = field.p, field.m
    j = 0
    while p**j < order:
        j += 1
    if p**j != order or j >= m:
        raise FieldError(f"order {order} is not a proper power of {p} below q")
    if j == 0:
        return [AdditiveSubgroup(1, (0,), ())]
    seen: dict[frozenset[int], tuple[int, ...]] = {}
    for basis in combinations(range(1, field.q), j):
        sp = _span(field, list(basis))
        if len(sp) == order and sp not in seen:
            seen[sp] = basis
    subs = [
        AdditiveSubgroup(order, tuple(sorted(sp)), basis)
        for sp, basis in seen.items()
    ]
    subs.sort(key=lambda s: s.elements)
    expected = gaussian_binomial(m, j, p)
    assert len(subs) == expected, (len(subs), expected)
    return subs


def all_proper_additive_subgroups(field: FiniteField) -> list[AdditiveSubgroup]:
    out = []
    for j in range(field.m):
        out.extend(additive_subgroups(field, field.p**j))
    return out


def subfields(field: FiniteField) -> list[AdditiveSubgroup]:
    """Proper subfields, as multiplicatively closed additive subgroups."""
    out = []
    for d in range(1, field.m):
        if field.m % d:
            continue
        power = field.p**d
        elems = sorted(a for a in field.elements() if field.pow(a, power) == a)
        basis = _gf_p_basis(field, elems)
        out.append(AdditiveSubgroup(len(elems), tuple(elems), basis, is_subfield=True))
    return out


def _gf_p_basis(field: FiniteField, elems: list[int]) -> tuple[int, ...]:
    basis: list[int] = []
    span = {0}
    for e in elems:
        if e in span or e == 0:
            continue
        basis.append(e)
        span = set(_span(field, basis))
    return tuple(basis)
