"""Roots-of-unity torsion in the Bloch group of a number field.

Everything here runs inside the field itself.  The key quantity per prime p
is the largest exponent nu with 2*cos(2*pi/p^nu) in F.  Writing
c = 2*cos(2*pi/n) for n = p^nu, the sequences

    a_0 = 2,  a_1 = c,   a_{k+1} = c*a_k - a_{k-1}      (odd p)
    b_0 = -1, b_1 = 1,   b_{k+1} = c*b_k - b_{k-1}      (p = 2)

reproduce, without leaving F, the values x^k + x^-k and
(x^k - x^{-k+1})/(x - 1) for a root of unity x of order n.  The plain
torsion generators are the combinations of cross-ratios
z_k = a_{k+1}a_{k-1}/a_k^2 (resp. the b version), and the flattened
generators lift them over a symbolic log basis with one symbol per distinct
value, where the logs of v and -v are tied together by a half-unit.

For p = 2 the flattened generator is the half-sum over k = 1..n/2 plus an
explicit chi correction; the correction is what makes the wedge vanish and
the regulator land on pi^2/4-type values.  Orders are certified through the
regulator: rational reconstruction of each embedding's value against 4*pi^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from mpmath import mp

from .field import (NumberField, cos2pi_minpoly, element_in_field, euler_phi,
                    guard_digits)
from .extgroup import SymbolicBasis
from .bloch import BlochSum, ExtBlochSum, Flattening
from .regulator import NotTorsion, reg_vector, torsion_order


class TorsionError(Exception):
    pass


class NotApplicable(TorsionError):
    pass


def two_cos(nf, n, precision=48):
    """2*cos(2*pi/n) as an element of nf, or None if it does not lie there.

    The returned element is only pinned down up to Galois conjugacy (any
    primitive branch serves the constructions below equally)."""
    if n == 1:
        return nf.rational(2)
    if n == 2:
        return nf.rational(-2)
    coeffs = cos2pi_minpoly(n)
    if len(coeffs) - 1 > nf.degree:
        return None
    with mp.workdps(precision + guard_digits(precision)):
        approx = 2 * mp.cos(2 * mp.pi / n)
    return element_in_field(coeffs, approx, nf, precision)


def nu_p(nf, p, precision=48):
    """Largest nu with 2*cos(2*pi/p^nu) in the field.

    >>> nu_p(NumberField([-2, 0, 1]), 2)
    3
    """
    if p < 2 or any(p % q == 0 for q in range(2, int(math.isqrt(p)) + 1)):
        raise TorsionError(f"{p} is not prime")
    nu = 0
    while True:
        n = p ** (nu + 1)
        if n > 2 and euler_phi(n) // 2 > nf.degree:
            return nu
        if two_cos(nf, n, precision) is None:
            return nu
        nu += 1


@dataclass(frozen=True)
class TorsionProfile:
    """Per-prime table of the cosine exponents, the derived group order
    w = 2 * prod p^nu_p, and the reduced exponents nu'_p = nu_p - v_p(m)
    with m the order of the roots of unity of the field."""
    nu: dict
    nu_prime: dict
    w: int
    m: int
    primes: tuple = dc_field(default=())


def _primes_up_to(bound):
    out = []
    for n in range(2, bound + 1):
        if all(n % q for q in out):
            out.append(n)
    return out


def torsion_profile(nf, precision=48):
    """nu_p for every prime that could contribute (p - 1 <= 2*degree),
    plus w and the reduced exponents."""
    m = nf.torsion[0]
    nu = {}
    for p in _primes_up_to(max(5, 2 * nf.degree + 1)):
        nu[p] = nu_p(nf, p, precision)
    w = 2
    nu_prime = {}
    for p, v in nu.items():
        w *= p ** v
        vp = 0
        mm = m
        while mm % p == 0:
            mm //= p
            vp += 1
        nu_prime[p] = v - vp
    return TorsionProfile(nu=nu, nu_prime=nu_prime, w=w, m=m,
                          primes=tuple(sorted(nu)))


def _recurrence(c, first, second, length):
    seq = [first, second]
    while len(seq) < length:
        seq.append(c * seq[-1] - seq[-2])
    return seq


def beta_p(nf, p, precision=48):
    """The in-field torsion generator of the plain Bloch group at p.

    >>> beta_p(NumberField([0, 1]), 3).terms[0][0]
    2
    """
    nu = nu_p(nf, p, precision)
    if nu == 0:
        raise NotApplicable(f"no p-power cosines beyond nu = 0 for p = {p}")
    n = p ** nu
    c = two_cos(nf, n, precision)
    if p == 2:
        seq = _recurrence(c, nf.rational(-1), nf.rational(1), n // 2 + 2)
        span = range(1, n // 2 + 1)
    else:
        seq = _recurrence(c, nf.rational(2), c, n + 2)
        span = range(1, n + 1)
    terms = []
    for k in span:
        if seq[k].is_zero() or seq[k + 1].is_zero() or seq[k - 1].is_zero():
            raise TorsionError("degenerate recurrence value")
        z = seq[k + 1] * seq[k - 1] / seq[k] ** 2
        if z.is_zero() or z.is_one():
            raise TorsionError("degenerate cross-ratio in the generator")
        terms.append((1, z))
    return BlochSum(nf, terms)


def flattened_torsion(nf, p, precision=48):
    """The flattened torsion generator over a fresh symbolic log basis.

    Odd p: sum over k = 1..n of flattenings
        (l_{k+1} + l_{k-1} - 2 l_k,  l(c+2) + l(2-c) - 2 l_k).
    p = 2: half-range sum over k = 1..n/2 of
        (l_{k+1} + l_{k-1} - 2 l_k,  l(c+2) - 2 l_k)
    plus the chi part l(c+2) + half; without that correction the wedge of
    the half-sum does not vanish.  The wedge is verified before returning.
    """
    nu = nu_p(nf, p, precision)
    if nu == 0:
        raise NotApplicable(f"no p-power cosines beyond nu = 0 for p = {p}")
    n = p ** nu
    c = two_cos(nf, n, precision)
    basis = SymbolicBasis(nf)
    if p == 2:
        seq = _recurrence(c, nf.rational(-1), nf.rational(1), n // 2 + 2)
        span = range(1, n // 2 + 1)
    else:
        seq = _recurrence(c, nf.rational(2), c, n + 2)
        span = range(1, n + 1)
    lifts = [basis.symbol_signed(v) for v in seq]
    a_plus = basis.symbol_signed(c + nf.rational(2))
    terms = []
    chi_part = None
    if p == 2:
        for k in span:
            e = lifts[k + 1] + lifts[k - 1] - 2 * lifts[k]
            f = a_plus - 2 * lifts[k]
            terms.append((1, Flattening(e, f)))
        chi_part = a_plus + basis.element(1)
    else:
        a_minus = basis.symbol_signed(nf.rational(2) - c)
        for k in span:
            e = lifts[k + 1] + lifts[k - 1] - 2 * lifts[k]
            f = a_plus + a_minus - 2 * lifts[k]
            terms.append((1, Flattening(e, f)))
    out = ExtBlochSum(basis, terms, chi_part)
    if not out.is_in_Bhat():
        raise TorsionError("flattened generator has nonzero wedge")
    return out


def certify_order(s, precision=50, max_den=10 ** 4):
    """Certified order of a torsion element: the lcm over all embeddings of
    the order of its regulator value in C modulo 4*pi^2."""
    orders = []
    for v in reg_vector(s, precision):
        k = torsion_order(v, max_den=max_den)
        if k is None:
            raise NotTorsion("a regulator value admits no rational "
                             "reconstruction against 4*pi^2")
        orders.append(k)
    return math.lcm(*orders)
