"""Arbitrary-precision dilogarithm and the regulator of flattenings.

The dilogarithm uses the principal branch with cut along [1, oo), continuous
from below.  The regulator of a flattening with logarithm values (w0, w1)
over the cross-ratio z is

    Li2(z) + (1/2) * w0 * (Log(1-z) - 2*q*pi*i) - pi^2/6,

where w1 = Log(1-z) + 2*q*pi*i; it is well defined modulo 4*pi^2.  The
canonical representative has real part in [0, 4*pi^2); the symmetric range
[-2*pi^2, 2*pi^2) is available for display.  A pure chi part contributes
-pi*i times k_unit times its logarithm value.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp

from .field import PrecisionExhausted, guard_digits
from .extgroup import cover_to_C


class RegulatorError(Exception):
    pass


class LiftInconsistent(RegulatorError):
    pass


class RealSlotNotReal(RegulatorError):
    pass


class NotTorsion(RegulatorError):
    pass


def _li2_series(z):
    """Power series sum z^k / k^2; caller guarantees |z| <= 0.7."""
    tol = mp.mpf(10) ** (-mp.dps - 3)
    term = z
    acc = z
    k = 1
    while abs(term) > tol:
        k += 1
        term *= z
        acc += term / k ** 2
        if k > 100 * mp.dps + 1000:  # pragma: no cover
            raise PrecisionExhausted("dilogarithm series did not converge")
    return acc


def _li2_log_series(z):
    """Expansion in u = -Log(1-z), convergent for |u| < 2*pi; used on the
    annulus where neither z, 1/z nor 1-z is small."""
    u = -mp.log(1 - z)
    tol = mp.mpf(10) ** (-mp.dps - 3)
    acc = mp.mpc(0)
    upow = mp.mpc(u)
    fact = mp.mpf(1)
    n = 0
    while True:
        b = mp.bernoulli(n)
        if b != 0:
            term = b * upow / fact
            acc += term
            if n > 2 and abs(term) < tol:
                break
        n += 1
        upow *= u
        fact *= (n + 1)
        if n > 100 * mp.dps + 1000:  # pragma: no cover
            raise PrecisionExhausted("dilogarithm expansion did not converge")
    return acc


def li2(z, precision=50):
    """Principal-branch dilogarithm at the given decimal precision.

    >>> from mpmath import mp
    >>> abs(li2(1, 30) - mp.pi**2/6) < 1e-29
    True
    """
    with mp.workdps(precision + guard_digits(precision)):
        z = mp.mpc(z)
        if z == 0:
            out = mp.mpc(0)
        elif z == 1:
            out = mp.mpc(mp.pi ** 2 / 6)
        elif abs(z) <= mp.mpf("0.5"):
            out = _li2_series(z)
        elif abs(z) >= 2:
            # inversion; the principal logarithm of -z also gives the
            # limit from below on the cut [1, oo)
            inner = _li2_series(1 / z) if abs(1 / z) <= mp.mpf("0.5") else \
                mp.mpc(li2(1 / z, precision))
            out = -inner - mp.pi ** 2 / 6 - mp.log(-z) ** 2 / 2
        elif abs(1 - z) <= mp.mpf("0.5"):
            out = (mp.pi ** 2 / 6 - mp.log(z) * mp.log(1 - z)
                   - _li2_series(1 - z))
        else:
            out = _li2_log_series(z)
        with mp.workdps(precision):
            return +out


def bloch_wigner(z, precision=50):
    """The single-valued imaginary-part combination
    D(z) = Im Li2(z) + arg(1-z) * log|z|; zero on the reals."""
    with mp.workdps(precision + guard_digits(precision)):
        z = mp.mpc(z)
        if z == 0 or z == 1 or mp.im(z) == 0:
            return mp.mpf(0)
        out = mp.im(li2(z, precision + guard_digits(precision))) \
            + mp.arg(1 - z) * mp.log(abs(z))
        with mp.workdps(precision):
            return +out


class RegulatorValue:
    """A complex value well defined modulo 4*pi^2 (a real lattice)."""

    def __init__(self, value, precision):
        self.value = value
        self.precision = precision

    def _modulus(self):
        with mp.workdps(self.precision + guard_digits(self.precision)):
            return 4 * mp.pi ** 2

    def canonical(self):
        """Representative with real part in [0, 4*pi^2)."""
        with mp.workdps(self.precision + guard_digits(self.precision)):
            mod = 4 * mp.pi ** 2
            re = mp.re(self.value)
            re -= mp.floor(re / mod) * mod
            return +mp.mpc(re, mp.im(self.value))

    def symmetric(self):
        """Representative with real part in [-2*pi^2, 2*pi^2)."""
        with mp.workdps(self.precision + guard_digits(self.precision)):
            mod = 4 * mp.pi ** 2
            re = mp.re(self.value)
            re -= mp.floor(re / mod + mp.mpf("0.5")) * mod
            return +mp.mpc(re, mp.im(self.value))

    def __add__(self, other):
        if isinstance(other, RegulatorValue):
            return RegulatorValue(self.value + other.value,
                                  min(self.precision, other.precision))
        return RegulatorValue(self.value + other, self.precision)

    def __sub__(self, other):
        if isinstance(other, RegulatorValue):
            return RegulatorValue(self.value - other.value,
                                  min(self.precision, other.precision))
        return RegulatorValue(self.value - other, self.precision)

    def __mul__(self, n):
        return RegulatorValue(n * self.value, self.precision)

    __rmul__ = __mul__

    def distance(self, other):
        """Distance to another value (or plain complex) modulo 4*pi^2."""
        o = other.value if isinstance(other, RegulatorValue) else other
        with mp.workdps(self.precision + guard_digits(self.precision)):
            mod = 4 * mp.pi ** 2
            d = self.value - o
            re = mp.re(d)
            re -= mp.nint(re / mod) * mod
            return abs(mp.mpc(re, mp.im(d)))

    def close_to(self, other, tolerance=None):
        with mp.workdps(self.precision + guard_digits(self.precision)):
            if tolerance is None:
                tolerance = mp.mpf(10) ** (-self.precision + 10)
            return self.distance(other) < tolerance

    def __repr__(self):
        return f"RegulatorValue({self.symmetric()})"


def reg_flattening(fl, lift):
    """Regulator of one flattening under a covering at one embedding."""
    prec = lift.ctx.precision
    with mp.workdps(prec + guard_digits(prec)):
        w0 = lift.lift(fl.e)
        w1 = lift.lift(fl.f)
        z = lift.ctx.evaluate(fl.z)
        logz = mp.log(z)
        log1z = mp.log(1 - z)
        tol = mp.mpf(10) ** (-prec // 2)
        twopii = 2j * mp.pi
        p = mp.nint(mp.im(w0 - logz) / (2 * mp.pi))
        q = mp.nint(mp.im(w1 - log1z) / (2 * mp.pi))
        if abs(w0 - logz - p * twopii) > tol or \
           abs(w1 - log1z - q * twopii) > tol:
            raise LiftInconsistent("lift values do not exponentiate to the "
                                   "cross-ratio and its complement")
        val = li2(z, prec) + w0 * (log1z - q * twopii) / 2 - mp.pi ** 2 / 6
        return RegulatorValue(+val, prec)


def reg_sum(s, lift):
    """Regulator of a normalized combination: term regulators plus the chi
    contribution -pi*i * k_unit * lift(chi_part)."""
    prec = lift.ctx.precision
    with mp.workdps(prec + guard_digits(prec)):
        acc = mp.mpc(0)
        for n, fl in s.terms:
            acc += n * reg_flattening(fl, lift).value
        if not s.chi_part.is_zero():
            acc += -1j * mp.pi * lift.k_unit * lift.lift(s.chi_part)
        return RegulatorValue(+acc, prec)


def reg_vector(s, precision=50, tolerance=None):
    """One regulator value per real embedding (real part; the imaginary part
    must vanish) and per conjugate-pair representative."""
    basis = s.basis
    field = basis.field
    out = []
    with mp.workdps(precision + guard_digits(precision)):
        if tolerance is None:
            tolerance = mp.mpf(10) ** (-precision + 10)
        for ctx in field.embeddings(precision):
            lift = cover_to_C(basis, ctx)
            val = reg_sum(s, lift)
            if ctx.is_real:
                if abs(mp.im(val.value)) > tolerance:
                    raise RealSlotNotReal(
                        "regulator at a real embedding has imaginary part "
                        f"{mp.im(val.value)}")
                out.append(RegulatorValue(mp.re(val.value), precision))
            else:
                out.append(val)
    return out


def torsion_order(v, max_den=10 ** 4, tolerance=None):
    """Order of a regulator value as a torsion point of C/4pi^2: rational
    reconstruction of value / 4pi^2 by continued fractions.  Returns the
    denominator, or None when no reconstruction fits."""
    prec = v.precision
    with mp.workdps(prec + guard_digits(prec)):
        if tolerance is None:
            tolerance = mp.mpf(10) ** (-prec + 10)
        if abs(mp.im(v.value)) > tolerance:
            return None
        x = mp.re(v.value) / (4 * mp.pi ** 2)
        frac = _rational_reconstruct(x, max_den)
        if abs(x - mp.mpf(frac.numerator) / frac.denominator) > tolerance:
            return None
        return frac.denominator


def _rational_reconstruct(x, max_den):
    """Best rational approximation with bounded denominator, by continued
    fractions on an exact dyadic snapshot of x."""
    scale = 1 << mp.prec
    snap = Fraction(int(mp.nint(x * scale)), scale)
    return snap.limit_denominator(max_den)
