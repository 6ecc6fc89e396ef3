"""Decoding of twisted codes by exhaustive hook-coefficient guessing.

For every guess of the hook coefficient a_h the twist contribution is
subtracted from the received word and a plain RS decoder runs on what is
left; candidates whose recovered hook coefficient contradicts the guess are
dropped.  The RS core is key-equation (Gao) unique decoding at quadratic
cost.

With infinity among the evaluation points that coordinate equals eta * a_h
outright, so it pins the guess: one trusted-coordinate pass plus a second
pass over the remaining guesses with the pinned coordinate treated as
suspect, for a total of exactly q RS decodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .construct import TwistedCodeSpec, evaluate
from .galois import INF, FiniteField


class DecodeError(ValueError):
    pass


@dataclass(frozen=True)
class DecodeCandidate:
    codeword: tuple[int, ...]
    message: tuple[int, ...]
    hook_guess: int
    distance: int


@dataclass(frozen=True)
class DecodeResult:
    candidates: tuple[DecodeCandidate, ...]
    guesses: int

    def best(self) -> DecodeCandidate | None:
        return self.candidates[0] if self.candidates else None

    def to_json(self) -> dict:
        return {
            "guesses": self.guesses,
            "candidates": [
                {
                    "codeword": list(c.codeword),
                    "message": list(c.message),
                    "hook_guess": c.hook_guess,
                    "distance": c.distance,
                }
                for c in self.candidates
            ],
        }


def hamming(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def encode(spec: TwistedCodeSpec, message) -> list[int]:
    """Evaluate sum a_i x^i + eta * a_h * x^(k-1+t) on the point vector."""
    message = list(message)
    if len(message) != spec.k:
        raise DecodeError(f"message length {len(message)} != k = {spec.k}")
    fld = spec.field
    ell = spec.k - 1 + spec.t
    coeffs = message + [0] * (ell + 1 - spec.k)
    coeffs[ell] = fld.mul(spec.eta, message[spec.h])
    return evaluate(fld, coeffs, spec.alpha, ell)


def _gao(field: FiniteField, alpha, k: int, received):
    """Unique-decoding core: the message polynomial (deg < k) or None."""
    if k == 0:
        return []
    n = len(alpha)
    g0 = poly.from_roots(field, alpha)
    g1 = poly.interpolate(field, list(alpha), list(received))
    if not g1:
        return []
    r0, r1 = g0, g1
    v0, v1 = [], [1]
    while poly.degree(r1) * 2 >= n + k:
        quot, rem = poly.divmod_poly(field, r0, r1)
        r0, r1 = r1, rem
        v0, v1 = v1, poly.add(field, v0, poly.scale(field, poly.mul(field, quot, v1), field.minus_one()))
    if not v1:
        return None
    f, rem = poly.divmod_poly(field, r1, v1)
    if rem or poly.degree(f) >= k:
        return None
    return f


def rs_decode(field: FiniteField, alpha, k: int, received, tau: int):
    """Codeword of RS(alpha, k) within distance tau of received, or None."""
    alpha = list(alpha)
    n = len(alpha)
    if INF in alpha:
        raise DecodeError("rs_decode expects finite evaluation points")
    if not (0 <= tau <= (n - k) // 2):
        raise DecodeError(f"tau={tau} outside [0, {(n - k) // 2}]")
    if len(received) != n:
        raise DecodeError("received word length mismatch")
    f = _gao(field, alpha, k, received)
    if f is None:
        return None
    codeword = [poly.evaluate(field, f, a) for a in alpha]
    if hamming(codeword, received) > tau:
        return None
    return codeword, f


def twisted_decode(spec: TwistedCodeSpec, received, tau: int) -> DecodeResult:
    """All consistent candidates within distance tau, best first.

    When the error weight is at most tau the transmitted codeword is on the
    list; for MDS parameters it is the unique entry at distance <= tau.
    """
    fld, k, t, h = spec.field, spec.k, spec.t, spec.h
    n = spec.n
    if len(received) != n:
        raise DecodeError(f"received word has length {len(received)}, expected {n}")
    if not (0 <= tau <= (n - k) // 2):
        raise DecodeError(f"tau={tau} outside [0, {(n - k) // 2}]")
    received = list(received)
    ell = k - 1 + t

    found: dict[tuple[int, ...], DecodeCandidate] = {}
    guesses = 0

    if not spec.has_inf():
        twist_row = [fld.pow(a, ell) for a in spec.alpha]
        for guess in fld.elements():
            guesses += 1
            scale = fld.mul(spec.eta, guess)
            detwisted = [
                fld.sub(r, fld.mul(scale, w)) for r, w in zip(received, twist_row)
            ]
            f = _gao(fld, list(spec.alpha), k, detwisted)
            if f is None or poly.coeff(f, h) != guess:
                continue
            _admit(spec, f, guess, received, tau, found)
    else:
        inf_at = spec.alpha.index(INF)
        fin_alpha = [a for a in spec.alpha if a != INF]
        pinned = fld.mul(fld.inv(spec.eta), received[inf_at])
        order = [pinned] + [g for g in fld.elements() if g != pinned]
        for guess in order:
            guesses += 1
            _decode_inf_guess(spec, received, guess, inf_at, fin_alpha, tau, found)

    ranked = sorted(found.values(), key=lambda c: (c.distance, c.hook_guess))
    return DecodeResult(tuple(ranked), guesses)


def _decode_inf_guess(spec, received, guess, inf_at, fin_alpha, tau, found):
    """One hook guess with the infinity coordinate held out."""
    fld, k, t, h = spec.field, spec.k, spec.t, spec.h
    ell = k - 1 + t
    scale = fld.mul(spec.eta, guess)
    fin_received = [r for i, r in enumerate(received) if i != inf_at]
    detwisted = [
        fld.sub(r, fld.mul(scale, fld.pow(a, ell)))
        for r, a in zip(fin_received, fin_alpha)
    ]
    if h == k - 1:
        # the hook coefficient itself is known: shift it out and decode the
        # remaining degree <= k-2 part at full radius
        detwisted = [
            fld.sub(r, fld.mul(guess, fld.pow(a, h)))
            for r, a in zip(detwisted, fin_alpha)
        ]
        f = _gao(fld, fin_alpha, k - 1, detwisted)
        if f is None:
            return
        f = f + [0] * (k - 1 - len(f)) + [guess]
        f = poly.trim(f)
    else:
        f = _gao(fld, fin_alpha, k, detwisted)
        if f is None or poly.coeff(f, h) != guess:
            return
    _admit(spec, f, guess, received, tau, found)


def _admit(spec, f, guess, received, tau, found):
    fld = spec.field
    message = [poly.coeff(f, i) for i in range(spec.k)]
    codeword = tuple(encode(spec, message))
    dist = hamming(codeword, received)
    if dist > tau:
        return
    if codeword not in found or found[codeword].distance > dist:
        found[codeword] = DecodeCandidate(
            codeword, tuple(message), guess, dist
        )
