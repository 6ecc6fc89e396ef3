"""Dense univariate polynomials over a FiniteField.

Coefficient lists are little-endian (index = degree).  The zero polynomial
is the empty list.  These helpers back evaluation, locator updates, and the
key-equation decoder; none of them mutate their inputs.
"""

from __future__ import annotations

from .galois import FiniteField


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: list[int]) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def add(field: FiniteField, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return trim(out)


def scale(field: FiniteField, a: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return [field.mul(x, c) for x in a]


def mul(field: FiniteField, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return trim(out)


def mul_linear(field: FiniteField, a: list[int], root: int) -> list[int]:
    """a(x) * (x - root)."""
    neg_r = field.neg(root)
    out = [0] + list(a)
    for i, ai in enumerate(a):
        out[i] = field.add(out[i], field.mul(ai, neg_r))
    return trim(out)


def div_linear(field: FiniteField, a: list[int], root: int) -> list[int]:
    """Exact quotient a(x) / (x - root); a must vanish at root."""
    n = len(a)
    out = [0] * (n - 1)
    carry = 0
    for i in range(n - 1, 0, -1):
        carry = field.add(a[i], field.mul(root, carry))
        out[i - 1] = carry
    return trim(out)


def divmod_poly(field: FiniteField, a: list[int], b: list[int]):
    """Quotient and remainder of a by b (b nonzero)."""
    a = list(a)
    db = degree(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = field.inv(b[-1])
    quot = [0] * max(0, len(a) - db)
    while degree(a) >= db:
        shift = degree(a) - db
        factor = field.mul(a[-1], inv_lead)
        quot[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(factor, bi))
        trim(a)
    return trim(quot), a


def evaluate(field: FiniteField, a: list[int], x: int) -> int:
    out = 0
    for c in reversed(a):
        out = field.add(field.mul(out, x), c)
    return out


def coeff(a: list[int], i: int) -> int:
    return a[i] if 0 <= i < len(a) else 0


def from_roots(field: FiniteField, roots) -> list[int]:
    out = [1]
    for r in roots:
        out = mul_linear(field, out, r)
    return out


def interpolate(field: FiniteField, xs: list[int], ys: list[int]) -> list[int]:
    """Unique polynomial of degree < len(xs) through the given points."""
    master = from_roots(field, xs)
    out: list[int] = []
    for x, y in zip(xs, ys):
        if y == 0:
            continue
        num = div_linear(field, master, x)
        denom = evaluate(field, num, x)
        out = add(field, out, scale(field, num, field.div(y, denom)))
    return out
