"""Real root counting, isolation and refinement via Sturm sequences.

All queries are exact: evaluation points are rationals, the Sturm chain is
kept over Z with positive scaling only (signs must survive), and isolating
intervals have non-root rational endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EndpointRoot, NotSquarefree, ZeroInput
from .poly import Poly
from .rings import ZZ


@dataclass(frozen=True)
class RootIsolation:
    poly: Poly
    intervals: tuple       # ((lo, hi) Fractions, ascending, pairwise disjoint)

    @property
    def count(self):
        return len(self.intervals)


@dataclass(frozen=True)
class Signature:
    degree: int
    real_roots: int
    complex_pairs: int


def _positive_primitive(p):
    """Divide by the positive integer content; the sign is preserved."""
    c = p.content()
    if c in (0, 1):
        return p
    return Poly(ZZ, [x // c for x in p.coeffs], p.var)


def sturm_chain(p):
    """Sturm chain of an integer polynomial, scaled by positive constants."""
    p = _positive_primitive(p.map_ring(ZZ))
    if p.is_zero():
        raise ZeroInput("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree >= 1:
        chain.append(_positive_primitive(p.derivative()))
    while chain[-1].degree >= 1:
        rem = chain[-2].to_field() % chain[-1].to_field()
        if rem.is_zero():
            break
        den = 1
        for c in rem.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        rem = Poly(ZZ, [-(c * den) for c in rem.coeffs], p.var)
        chain.append(_positive_primitive(rem))
    return chain


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


def _variations(chain, x):
    signs = []
    for q in chain:
        v = q.eval(Fraction(x))
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p, lo, hi, chain=None):
    """Number of distinct real roots of p in (lo, hi]; p must be squarefree
    on the endpoints (EndpointRoot otherwise)."""
    if p.is_zero():
        raise ZeroInput("Sturm count of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if not p.eval(lo) or not p.eval(hi):
        raise EndpointRoot("polynomial vanishes at an endpoint")
    chain = chain or sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def root_bound(p):
    """Power of two exceeding the magnitude of every root (Cauchy bound)."""
    p = p.map_ring(ZZ)
    if p.degree < 1:
        raise ZeroInput("no roots to bound")
    top = abs(p.lc)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree else 0
    bound = 1 + (m + top - 1) // top
    b = 1
    while b < bound:
        b *= 2
    return b


def isolate(p):
    """Disjoint open isolating intervals, one per distinct real root.

    Endpoints are dyadic rationals and never roots; rational roots get a
    shrinking bracket around the exact value."""
    p = p.map_ring(ZZ)
    if p.degree < 1:
        raise ZeroInput("cannot isolate roots of a constant")
    work = p.squarefree_part().clear_denominators()
    chain = sturm_chain(work)
    b = root_bound(work)
    out = []
    stack = [(Fraction(-b), Fraction(b))]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(work, lo, hi, chain)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if work.eval(mid):
            stack.append((lo, mid))
            stack.append((mid, hi))
            continue
        # exact rational root at the midpoint: bracket it separately
        eps = (hi - lo) / 4
        while (not work.eval(mid - eps) or not work.eval(mid + eps)
               or sturm_count(work, mid - eps, mid + eps, chain) != 1):
            eps /= 2
        out.append((mid - eps, mid + eps))
        stack.append((lo, mid - eps))
        stack.append((mid + eps, hi))
    out.sort()
    return RootIsolation(work, tuple(out))


def refine(p, interval, width, chain=None):
    """Shrink an isolating interval below `width` (bisection, exact)."""
    p = p.map_ring(ZZ)
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    chain = chain or sturm_chain(p.squarefree_part().clear_denominators())
    work = chain[0]
    if sturm_count(work, lo, hi, chain) != 1:
        raise ValueError("interval does not isolate a single root")
    width = Fraction(width)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if not work.eval(mid):
            # rational root exactly at the midpoint; step slightly off it
            mid = lo + (hi - lo) * Fraction(3, 8)
            if not work.eval(mid):
                mid = lo + (hi - lo) * Fraction(5, 16)
        if sturm_count(work, lo, mid, chain) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def signature(p):
    """(real root count, complex-conjugate pair count) of a squarefree
    integer polynomial."""
    p = p.map_ring(ZZ)
    if p.degree < 1:
        raise ZeroInput("signature of a constant")
    if not p.is_squarefree():
        raise NotSquarefree("signature requires a squarefree polynomial")
    real = isolate(p).count
    return Signature(p.degree, real, (p.degree - real) // 2)
