"""Exact univariate polynomials over the rationals.

Coefficients are stored low degree first as ``fractions.Fraction``.  Float
inputs are quantized once on entry (denominator bound 2**53) so every
decision downstream -- Sturm counts, square-free splits, sign tests -- is
exact.  Float root *refinement* is cosmetic and never feeds a decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

# Denominator bound used when quantizing float coefficients to rationals.
QUANT_DEN = 2**53


def to_fraction(x) -> Fraction:
    """Quantize a number to an exact rational (floats: denominator <= 2**53)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(x).limit_denominator(QUANT_DEN)


def _strip(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class RealPolynomial:
    """A real polynomial with exact rational coefficients, low degree first.

    The zero polynomial is represented by an empty coefficient tuple and
    has degree -1 by convention.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "RealPolynomial":
        return cls(tuple(_strip([to_fraction(c) for c in coeffs])))

    @classmethod
    def zero(cls) -> "RealPolynomial":
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        # Horner; exact when x is Fraction/int.
        acc = 0 if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def __mul__(self, other):
        if isinstance(other, RealPolynomial):
            if self.is_zero or other.is_zero:
                return RealPolynomial.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RealPolynomial(tuple(out))
        f = to_fraction(other)
        return RealPolynomial(tuple(_strip([c * f for c in self.coeffs])))

    __rmul__ = __mul__

    def __add__(self, other: "RealPolynomial") -> "RealPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return RealPolynomial(tuple(_strip(out)))

    def __neg__(self) -> "RealPolynomial":
        return RealPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RealPolynomial") -> "RealPolynomial":
        return self + (-other)

    def shift_degree(self, m: int) -> "RealPolynomial":
        """Multiply by X**m."""
        if self.is_zero:
            return self
        return RealPolynomial((Fraction(0),) * m + self.coeffs)

    def monic(self) -> "RealPolynomial":
        if self.is_zero:
            return self
        lc = self.leading
        return RealPolynomial(tuple(c / lc for c in self.coeffs))

    def divmod(self, other: "RealPolynomial"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d, lc = other.degree, other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            rem = _strip(rem)
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            q = rem[-1] / lc
            quo[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            rem.pop()
        return (RealPolynomial(tuple(_strip(quo))), RealPolynomial(tuple(_strip(rem))))

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*X")
            else:
                parts.append(f"{c}*X^{k}")
        return " + ".join(parts)


def poly_gcd(a: RealPolynomial, b: RealPolynomial) -> RealPolynomial:
    """Monic gcd by Euclid's algorithm (exact)."""
    while not b.is_zero:
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero:
        return a
    return a.monic()


def square_free_part(p: RealPolynomial) -> RealPolynomial:
    """p / gcd(p, p'); same distinct roots, all simple."""
    if p.is_zero:
        raise DomainError("square-free part of the zero polynomial")
    if p.degree == 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    q, _ = p.divmod(g)
    return q.monic()


def square_free_decomposition(p: RealPolynomial) -> list[tuple[RealPolynomial, int]]:
    """Yun's algorithm: p = c * prod q_i**i with the q_i square-free, coprime.

    Returns the nontrivial (q_i, i) factors.
    """
    if p.is_zero:
        raise DomainError("square-free decomposition of the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b, _ = p.divmod(a)
    c, _ = dp.divmod(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b, _ = b.divmod(g)
        c, _ = d.divmod(g)
        d = c - b.derivative()
        i += 1
    return out


def sturm_chain(p: RealPolynomial) -> list[RealPolynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_changes(signs: Sequence[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain: Sequence[RealPolynomial], x: Fraction) -> int:
    return _sign_changes([_sign(q(x)) for q in chain])


def _variations_at_inf(chain: Sequence[RealPolynomial], positive: bool) -> int:
    signs = []
    for q in chain:
        s = _sign(q.leading)
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _sign_changes(signs)


def count_real_roots(p: RealPolynomial, lo: Fraction | None = None,
                     hi: Fraction | None = None) -> int:
    """Number of *distinct* real roots of p in (lo, hi] (whole line by default)."""
    if p.is_zero:
        raise DomainError("root count of the zero polynomial")
    sf = square_free_part(p)
    if sf.degree <= 0:
        return 0
    chain = sturm_chain(sf)
    va = _variations_at(chain, lo) if lo is not None else _variations_at_inf(chain, False)
    vb = _variations_at(chain, hi) if hi is not None else _variations_at_inf(chain, True)
    return va - vb


def is_real_rooted(p: RealPolynomial) -> bool:
    """True iff every complex root of p is real (exact Sturm decision).

    Multiplicities are folded out through the square-free part: p is
    real-rooted iff its square-free part has as many distinct real roots
    as its degree.  Nonzero constants are vacuously real-rooted.
    """
    if p.is_zero:
        raise DomainError("real-rootedness of the zero polynomial is undefined")
    sf = square_free_part(p)
    if sf.degree <= 0:
        return True
    return count_real_roots(sf) == sf.degree


def cauchy_root_bound(p: RealPolynomial) -> Fraction:
    """B with all real roots of p inside [-B, B]."""
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return Fraction(1) + m / lc


def isolate_real_roots(p: RealPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each containing exactly one distinct real root."""
    sf = square_free_part(p)
    if sf.degree <= 0:
        return []
    chain = sturm_chain(sf)
    bound = cauchy_root_bound(sf)

    def var(x: Fraction) -> int:
        return _variations_at(chain, x)

    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, var(-bound), var(bound))]
    while stack:
        a, b, va, vb = stack.pop()
        k = va - vb
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        # Nudge off an exact root so interval endpoints stay regular.
        while sf(mid) == 0:
            mid += (b - a) / 64
        vm = var(mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    out.sort()
    return out


def refine_root(p: RealPolynomial, lo: Fraction, hi: Fraction, bits: int = 80) -> float:
    """Bisect a sign-changing bracket (a, b] down to ~2**-bits width; float out."""
    sf = square_free_part(p)
    flo, fhi = sf(lo), sf(hi)
    if fhi == 0:
        return float(hi)
    if flo == 0:
        return float(lo)
    if _sign(flo) == _sign(fhi):  # single root, no sign change: even-degree touch impossible on square-free
        raise DomainError("bracket does not change sign")
    width_target = (hi - lo) / Fraction(2**bits)
    while hi - lo > width_target:
        mid = (lo + hi) / 2
        fm = sf(mid)
        if fm == 0:
            return float(mid)
        if _sign(fm) == _sign(flo):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return float((lo + hi) / 2)


def real_roots_with_multiplicity(p: RealPolynomial) -> list[tuple[float, int]]:
    """All real roots of p as (float value, multiplicity), ascending.

    Isolation and multiplicity bookkeeping are exact; only the final
    refinement is floating point.
    """
    out: list[tuple[float, int]] = []
    for q, mult in square_free_decomposition(p):
        for lo, hi in isolate_real_roots(q):
            out.append((refine_root(q, lo, hi), mult))
    out.sort()
    return out
