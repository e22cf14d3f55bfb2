"""Constant-time arithmetic isomorphism predicates for the quartic families.

Every predicate here is a pure function of the integer parameters; the
brute-force oracle cross-validates each one on a census grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameterError, InvariantViolationError, NotApplicableError
from .graphs import AccordionParams, CirculantParams, normalize_length
from .modarith import steps_to_gcd

__all__ = [
    "AccAccVerdict",
    "CiAccVerdict",
    "accordion_is_bipartite",
    "accordion_is_circulant",
    "circulant_is_bipartite",
    "circulant_is_connected",
    "accordions_isomorphic",
    "unique_partner",
    "circulant_iso_torus",
    "torus_parameters",
    "circulant_iso_accordion",
    "find_accordion_param",
]


def accordion_is_bipartite(n: int, k: int) -> bool:
    """A[n,k] is bipartite iff both n and k are even."""
    p = AccordionParams(n, k)
    return p.n % 2 == 0 and p.k % 2 == 0


def accordion_is_circulant(n: int, k: int) -> bool:
    """A[n,k] is circulant iff k is odd, or k is even and n is odd, or k=2 and n is even."""
    p = AccordionParams(n, k)
    return p.k % 2 == 1 or (p.k % 2 == 0 and p.n % 2 == 1) or (p.k == 2 and p.n % 2 == 0)


def circulant_is_bipartite(n: int, a: int, b: int) -> bool:
    """Ci[2n,{a,b}] is bipartite iff both lengths are odd, in the connected case.

    A disconnected circulant splits into d = gcd(2n,a,b) copies of the
    circulant of order 2n/d with lengths a/d, b/d, so the same test applies
    to the component (never bipartite when the component order is odd).
    """
    p = CirculantParams(n, a, b)
    d = math.gcd(2 * p.n, p.a, p.b)
    return (2 * p.n // d) % 2 == 0 and (p.a // d) % 2 == 1 and (p.b // d) % 2 == 1


def circulant_is_connected(n: int, a: int, b: int) -> bool:
    """Ci[2n,{a,b}] is connected iff gcd(2n,a,b) = 1."""
    p = CirculantParams(n, a, b)
    return math.gcd(2 * p.n, p.a, p.b) == 1


@dataclass
class AccAccVerdict:
    """Outcome of the accordion-accordion isomorphism test."""

    n: int
    k1: int
    k2: int
    isomorphic: bool
    branch: str  # equal-k | case-minus | case-plus | not-isomorphic
    gcd1: int
    gcd2: int
    half_product: Optional[int]  # k1*k2/2 when both gcds are 2, else None


def accordions_isomorphic(n: int, k1: int, k2: int) -> AccAccVerdict:
    """Decide A[n,k1] ~ A[n,k2].

    For k1 != k2 the graphs are isomorphic iff gcd(n,k1) = gcd(n,k2) = 2 and
    k1*k2/2 == +-2 (mod n).  Both gcds being 2 makes k1*k2 divisible by 4, so
    the halving is exact.  The branch records which sign matched.
    """
    AccordionParams(n, k1)
    AccordionParams(n, k2)
    g1 = math.gcd(n, k1)
    g2 = math.gcd(n, k2)
    if k1 == k2:
        return AccAccVerdict(n, k1, k2, True, "equal-k", g1, g2, None)
    if g1 == 2 and g2 == 2:
        half = k1 * k2 // 2
        if (half + 2) % n == 0:
            return AccAccVerdict(n, k1, k2, True, "case-minus", g1, g2, half)
        if (half - 2) % n == 0:
            return AccAccVerdict(n, k1, k2, True, "case-plus", g1, g2, half)
        return AccAccVerdict(n, k1, k2, False, "not-isomorphic", g1, g2, half)
    return AccAccVerdict(n, k1, k2, False, "not-isomorphic", g1, g2, None)


def unique_partner(n: int, k1: int) -> Optional[int]:
    """The unique k2 != k1 with A[n,k1] ~ A[n,k2], or None.

    At most one partner can exist; finding two is an internal inconsistency.
    """
    AccordionParams(n, k1)
    partners = [
        k2
        for k2 in range(1, n // 2 + 1)
        if k2 != k1 and accordions_isomorphic(n, k1, k2).isomorphic
    ]
    if len(partners) > 1:
        raise InvariantViolationError(f"multiple partners for A[{n},{k1}]: {partners}")
    return partners[0] if partners else None


def _validated_torus_lengths(nprime: int, a1: int, a2: int) -> tuple[int, int]:
    if nprime < 5:
        raise InvalidParameterError(f"circulant order must be >= 5 for two lengths, got {nprime}")
    na1 = normalize_length(a1, nprime)
    na2 = normalize_length(a2, nprime)
    bound = (nprime - 1) // 2
    for name, val in (("a1", na1), ("a2", na2)):
        if not 1 <= val <= bound:
            raise InvalidParameterError(
                f"length {name}={val} (normalized) must lie in [1, {bound}] for order {nprime}"
            )
    if na1 == na2:
        raise InvalidParameterError(f"lengths must be distinct, both normalize to {na1}")
    return na1, na2


def circulant_iso_torus(nprime: int, a1: int, a2: int, n1: int, n2: int) -> bool:
    """Decide Ci[nprime,{a1,a2}] ~ C_{n1} [] C_{n2}.

    Holds iff nprime = n1*n2, the two gcds gcd(nprime,a_j) are {n1,n2} in
    some order, and gcd(n1,n2) = 1.
    """
    if n1 < 3 or n2 < 3:
        raise InvalidParameterError(f"cycle factors must be >= 3, got n1={n1}, n2={n2}")
    na1, na2 = _validated_torus_lengths(nprime, a1, a2)
    if nprime != n1 * n2 or math.gcd(n1, n2) != 1:
        return False
    g1 = math.gcd(nprime, na1)
    g2 = math.gcd(nprime, na2)
    return (g1 == n1 and g2 == n2) or (g1 == n2 and g2 == n1)


def torus_parameters(nprime: int, a1: int, a2: int) -> Optional[tuple[int, int]]:
    """Scan divisor pairs of nprime for one making the torus test true."""
    _validated_torus_lengths(nprime, a1, a2)
    for d in range(3, math.isqrt(nprime) + 1):
        if nprime % d != 0:
            continue
        e = nprime // d
        if e >= 3 and circulant_iso_torus(nprime, a1, a2, d, e):
            return (d, e)
    return None


@dataclass
class CiAccVerdict:
    """Outcome of the circulant-accordion isomorphism test.

    `swapped` records whether the inputs were reoriented so that a is the odd
    length (the mixed-parity test is stated for a odd, b even; the underlying
    graph is the same either way).  `sign` is +1 when b*q == +2*s*a (mod 2n)
    matched and -1 when the -2*s*a congruence matched (q = gcd(n,k), s the
    least multiplier with s*k == q mod n); it drives the witness construction.
    """

    n: int
    a: int
    b: int
    k: int
    regime: str  # bipartite | non-bipartite
    isomorphic: bool
    swapped: bool = False
    connected: bool = True
    q: Optional[int] = None
    steps: Optional[int] = None
    sign: Optional[int] = None


def circulant_iso_accordion(n: int, a: int, b: int, k: int) -> CiAccVerdict:
    """Decide Ci[2n,{a,b}] ~ A[n,k].

    Both lengths odd (bipartite circulant): isomorphic iff n is even, k = 2,
    gcd(2n,a) = gcd(2n,b) = 1 and a + b = n.

    Mixed parity (non-bipartite): with a odd and b even, isomorphic iff the
    circulant is connected, k is odd whenever n is even, gcd(2n,a) = gcd(n,k),
    and b*gcd(n,k) == +-2*s*a (mod 2n) where s is the least multiplier with
    s*k == gcd(n,k) (mod n).

    Both lengths even: the circulant is disconnected and can never match a
    (connected) accordion; raises NotApplicableError.
    """
    p = CirculantParams(n, a, b)
    AccordionParams(n, k)
    a, b = p.a, p.b
    two_n = 2 * n
    connected = math.gcd(two_n, a, b) == 1

    if a % 2 == 0 and b % 2 == 0:
        raise NotApplicableError(
            f"Ci[{two_n},{{{a},{b}}}] has both lengths even, hence is disconnected; "
            "it is never isomorphic to an accordion graph"
        )

    if a % 2 == 1 and b % 2 == 1:
        iso = (
            n % 2 == 0
            and k == 2
            and math.gcd(two_n, a) == 1
            and math.gcd(two_n, b) == 1
            and a + b == n
        )
        return CiAccVerdict(n, a, b, k, "bipartite", iso, connected=connected)

    swapped = a % 2 == 0
    ao, bo = (b, a) if swapped else (a, b)
    q = math.gcd(n, k)
    steps = steps_to_gcd(n, k)
    parity_ok = n % 2 == 1 or k % 2 == 1
    gcd_ok = math.gcd(two_n, ao) == q
    plus = (bo * q - 2 * steps * ao) % two_n == 0
    minus = (bo * q + 2 * steps * ao) % two_n == 0
    iso = connected and parity_ok and gcd_ok and (plus or minus)
    sign = (1 if plus else -1) if iso else None
    return CiAccVerdict(
        n, a, b, k, "non-bipartite", iso,
        swapped=swapped, connected=connected, q=q, steps=steps, sign=sign,
    )


def find_accordion_param(n: int, a: int, b: int) -> Optional[int]:
    """First k in [1, n//2] with Ci[2n,{a,b}] ~ A[n,k], or None."""
    p = CirculantParams(n, a, b)
    if p.a % 2 == 0 and p.b % 2 == 0:
        return None  # disconnected; no accordion partner exists
    for k in range(1, n // 2 + 1):
        if circulant_iso_accordion(n, a, b, k).isomorphic:
            return k
    return None
