"""Integer-coordinate model of a central Z-extension E of the multiplicative
group of a number field.

E is generated by a lift of the torsion generator w (of order m) together
with lifts of declared free generators p_1, ..., p_r.  An element is a pair
(k, r): k the coefficient of the lifted torsion generator, r a sparse integer
exponent vector over the free generators.  The distinguished central element
1 is (m, 0) and its half is (m/2, 0) (m is even for a number field).

Two basis flavours share this coordinate model:

* MultBasis -- a fixed, multiplicatively independent generator list; elements
  of the subgroup of F* it spans can be lifted back to coordinates.
* SymbolicBasis -- a growable list of formal log symbols keyed by exact field
  values, with -1 in the torsion slot (m = 2); used where no global
  factorization of the occurring values is available.

Deciding that a formal sum of wedges e_i /\\ f_i vanishes in the exterior
square of E reduces, over a saturated basis of a number field, to two checks
in coordinates: every diagonal coefficient sum must be even and every
antisymmetrized off-diagonal sum must vanish.  (The general decision
procedure has two further conditions tied to torsion and 2-divisibility of
the distinguished generator; both degenerate here because E is torsion-free,
m is even so the torsion lift is not 2-divisible, and saturation excludes
2-divisible free generators.)
"""
from __future__ import annotations

import math
import warnings

import mpmath
from mpmath import mp

from .field import (FieldElement, FieldError, guard_digits)


class ExtGroupError(Exception):
    pass


class NotInSubgroup(ExtGroupError):
    pass


class BranchInvalid(ExtGroupError):
    pass


class UnsaturatedBasis(UserWarning):
    """A zero/nonzero verdict is only basis-relative: the generator list was
    not asserted to be saturated."""


class ExtElement:
    """(k, r)-coordinates of an element of E over a declared basis."""

    __slots__ = ("basis", "k", "r")

    def __init__(self, basis, k, r=()):
        self.basis = basis
        self.k = int(k)
        if isinstance(r, dict):
            items = r.items()
        else:
            items = r
        self.r = tuple(sorted((j, int(e)) for j, e in items if e != 0))

    def rdict(self):
        return dict(self.r)

    def coord(self, j):
        """Coordinate at free generator j; j = -1 addresses the torsion slot."""
        if j == -1:
            return self.k
        return dict(self.r).get(j, 0)

    def coords(self):
        """All coordinates as a dict keyed by generator index, torsion at -1."""
        d = {-1: self.k}
        d.update(dict(self.r))
        return d

    def __add__(self, other):
        if not isinstance(other, ExtElement) or other.basis is not self.basis:
            return NotImplemented
        r = self.rdict()
        for j, e in other.r:
            r[j] = r.get(j, 0) + e
        return ExtElement(self.basis, self.k + other.k, r)

    def __sub__(self, other):
        if not isinstance(other, ExtElement) or other.basis is not self.basis:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ExtElement(self.basis, -self.k, {j: -e for j, e in self.r})

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ExtElement(self.basis, n * self.k, {j: n * e for j, e in self.r})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ExtElement) and other.basis is self.basis
                and self.k == other.k and self.r == other.r)

    def __hash__(self):
        return hash((id(self.basis), self.k, self.r))

    def is_zero(self):
        return self.k == 0 and not self.r

    def sort_key(self):
        return (self.k, self.r)

    def __repr__(self):
        parts = [f"{self.k}*T"] if self.k else []
        for j, e in self.r:
            parts.append(f"{e}*g{j}")
        return "E(" + (" + ".join(parts) if parts else "0") + ")"

    def pi(self):
        return self.basis.pi(self)


class _BasisCommon:
    def element(self, k, r=()):
        return ExtElement(self, k, r)

    def iota(self, n=1):
        """The central element n in E: n times (m, 0)."""
        return ExtElement(self, n * self.m)

    def half(self):
        """The element 1/2; exists because m is even."""
        if self.m % 2:
            raise ExtGroupError("torsion order is odd; no half available")
        return ExtElement(self, self.m // 2)

    def pi(self, e):
        out = self.torsion_gen ** (e.k % self.m if self.m else e.k)
        for j, exp in e.r:
            out = out * self.gen_value(j) ** exp
        return out

    def wedge_is_zero(self, terms):
        """Decide whether sum n_i * (e_i /\\ f_i) vanishes in the exterior
        square of E, treating the torsion lift and the free generator lifts
        as a free basis.  terms: iterable of (n, ExtElement, ExtElement)."""
        terms = list(terms)
        keys = set()
        for _, e, f in terms:
            keys.update(e.coords())
            keys.update(f.coords())
        keys = sorted(keys)
        verdict = True
        for a in keys:
            diag = sum(n * e.coord(a) * f.coord(a) for n, e, f in terms)
            if diag % 2 != 0:
                verdict = False
                break
        if verdict:
            for i, a in enumerate(keys):
                for b in keys[i + 1:]:
                    off = sum(n * (e.coord(a) * f.coord(b)
                                   - e.coord(b) * f.coord(a))
                              for n, e, f in terms)
                    if off != 0:
                        verdict = False
                        break
                if not verdict:
                    break
        if not verdict and not self.saturated:
            warnings.warn("nonzero wedge verdict over an unsaturated basis",
                          UnsaturatedBasis, stacklevel=2)
        return verdict


class WedgeElement:
    """A formal integer combination of wedges, held unexpanded.  Zero-ness is
    decided only by the basis decision procedure, never by naive expansion."""

    def __init__(self, basis, terms):
        self.basis = basis
        self.terms = tuple((int(n), e, f) for n, e, f in terms)

    def __add__(self, other):
        if not isinstance(other, WedgeElement) or other.basis is not self.basis:
            return NotImplemented
        return WedgeElement(self.basis, self.terms + other.terms)

    def is_zero(self):
        return self.basis.wedge_is_zero(self.terms)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class MultBasis(_BasisCommon):
    """Torsion generator plus a fixed list of multiplicatively independent
    free generators of a subgroup of F*."""

    def __init__(self, field, free_gens, saturated=False, precision=50,
                 torsion_gen=None):
        self.field = field
        self.m, self.torsion_gen = field.torsion
        if torsion_gen is not None:
            # any primitive generator of the roots of unity may serve
            if not (torsion_gen ** self.m).is_one() or any(
                    (torsion_gen ** (self.m // q)).is_one()
                    for q in set(_prime_factors(self.m))):
                raise ExtGroupError("supplied torsion generator does not "
                                    f"have exact order {self.m}")
            self.torsion_gen = torsion_gen
        self.free_gens = list(free_gens)
        self.saturated = bool(saturated)
        self.precision = precision
        for p in self.free_gens:
            if p.is_zero():
                raise ExtGroupError("free generator is zero")
            if (p ** self.m).is_one():
                raise ExtGroupError("free generator is a root of unity")
        if self.free_gens:
            if field.degree == 1:
                # pairwise coprime integers > 1 are multiplicatively
                # independent; this also matches the exact lifting path
                vals = [p.as_fraction() for p in self.free_gens]
                if any(v.denominator != 1 or v <= 1 for v in vals):
                    raise ExtGroupError("rational basis values must be "
                                        "integers greater than one")
                if any(math.gcd(int(a), int(b)) != 1
                       for i, a in enumerate(vals) for b in vals[i + 1:]):
                    raise ExtGroupError("rational basis values must be "
                                        "pairwise coprime")
            elif not self._log_moduli_full_rank():
                raise ExtGroupError("free generators are multiplicatively "
                                    "dependent modulo roots of unity")

    def gen_value(self, j):
        return self.free_gens[j]

    def num_gens(self):
        return len(self.free_gens)

    def _log_moduli(self, precision=None):
        precision = precision or self.precision
        with mp.workdps(precision + guard_digits(precision)):
            rows = []
            for ctx in self.field.embeddings(precision):
                rows.append([mp.log(abs(ctx.evaluate(p)))
                             for p in self.free_gens])
            return rows

    def _log_moduli_full_rank(self):
        rows = self._log_moduli()
        g = len(self.free_gens)
        if len(rows) < g:
            return False
        with mp.workdps(self.precision):
            mat = mp.matrix(rows)
            # Gram matrix determinant bounded away from zero at working scale
            gram = mat.T * mat
            det = mp.det(gram)
            return abs(det) > mp.mpf(10) ** (-self.precision // 2)

    def log_lift(self, z, exp_bound=64):
        """Coordinates (k, r) of a field element lying in the subgroup
        generated by the basis; exact verification is the authority.

        Free exponents are recovered by least squares on log-moduli across
        all embeddings (exact small-prime factorization over Q), then k by
        exact matching of the remaining root of unity."""
        if not isinstance(z, FieldElement) or z.field != self.field:
            raise FieldError("element belongs to a different field")
        if z.is_zero():
            raise NotInSubgroup("zero is not in the multiplicative group")
        if self.field.degree == 1:
            r = self._factor_rational(z.as_fraction(), exp_bound)
        else:
            r = self._free_exponents(z, exp_bound)
        rest = z
        for j, e in enumerate(r):
            if e:
                rest = rest / self.gen_value(j) ** e
        for k in range(self.m):
            if self.torsion_gen ** k == rest:
                return ExtElement(self, k, {j: e for j, e in enumerate(r) if e})
        raise NotInSubgroup(f"{z!r} is not a product of basis generators")

    def fstar_wedge_is_zero(self, terms):
        """Decision in the exterior square of F* itself, where the torsion
        generator only has order m: on top of the free-coordinate checks the
        mixed torsion/free sums must vanish mod m and the torsion diagonal
        sum must be even (the torsion generator is not 2-divisible in F*,
        since a square root would be a root of unity of order 2m)."""
        terms = list(terms)
        keys = sorted({j for _, e, f in terms for j, _ in e.r + f.r})
        for a in keys:
            if sum(n * e.coord(a) * f.coord(a) for n, e, f in terms) % 2:
                return self._caveat(False)
        for i, a in enumerate(keys):
            for b in keys[i + 1:]:
                if sum(n * (e.coord(a) * f.coord(b) - e.coord(b) * f.coord(a))
                       for n, e, f in terms) != 0:
                    return self._caveat(False)
        for j in keys:
            mixed = sum(n * (f.k * e.coord(j) - e.k * f.coord(j))
                        for n, e, f in terms)
            if mixed % self.m != 0:
                return self._caveat(False)
        if sum(n * e.k * f.k for n, e, f in terms) % 2:
            return self._caveat(False)
        return True

    def _caveat(self, verdict):
        if not verdict and not self.saturated:
            warnings.warn("nonzero wedge verdict over an unsaturated basis",
                          UnsaturatedBasis, stacklevel=3)
        return verdict

    def _free_exponents(self, z, exp_bound):
        with mp.workdps(self.precision + guard_digits(self.precision)):
            rows = self._log_moduli()
            rhs = [mp.log(abs(ctx.evaluate(z)))
                   for ctx in self.field.embeddings(self.precision)]
            mat = mp.matrix(rows)
            b = mp.matrix(rhs)
            sol = mp.lu_solve(mat.T * mat, mat.T * b)
        out = []
        for x in sol:
            e = int(mp.nint(x))
            if abs(e) > exp_bound:
                raise NotInSubgroup("recovered exponent exceeds the bound")
            out.append(e)
        return out

    def _factor_rational(self, q, exp_bound):
        """Exact exponent recovery over Q: factor |q| over the basis values,
        which must be rational, by repeated exact division."""
        out = [0] * len(self.free_gens)
        num, den = abs(q.numerator), q.denominator
        for j, p in enumerate(self.free_gens):
            pv = p.as_fraction()
            if pv.denominator != 1 or pv <= 1:
                raise NotInSubgroup("rational factorization needs integer "
                                    "basis values greater than one")
            pv = pv.numerator
            while num % pv == 0 and out[j] < exp_bound:
                num //= pv
                out[j] += 1
            while den % pv == 0 and -out[j] < exp_bound:
                den //= pv
                out[j] -= 1
        if num != 1 or den != 1:
            raise NotInSubgroup(f"{q} does not factor over the basis")
        return out


class SymbolicBasis(_BasisCommon):
    """A growable free basis of formal log symbols keyed by exact field
    values, with -1 in the torsion slot.  Distinct values get distinct
    symbols; equal values share one, which is the only identification used."""

    def __init__(self, field):
        self.field = field
        self.m = 2
        self.torsion_gen = field.rational(-1)
        self.saturated = True
        self.values = []
        self._index = {}

    def gen_value(self, j):
        return self.values[j]

    def num_gens(self):
        return len(self.values)

    def symbol(self, value):
        """The basis element standing for a fixed logarithm of `value`."""
        if not isinstance(value, FieldElement) or value.field != self.field:
            raise FieldError("element belongs to a different field")
        if value.is_zero():
            raise ExtGroupError("no logarithm symbol for zero")
        if value.is_one():
            return ExtElement(self, 0)
        if value == self.field.rational(-1):
            return ExtElement(self, 1)
        j = self._index.get(value)
        if j is None:
            j = len(self.values)
            self.values.append(value)
            self._index[value] = j
        return ExtElement(self, 0, {j: 1})

    def symbol_signed(self, value):
        """Like symbol, but if the negated value already has a symbol, reuse
        it shifted by the torsion slot, so that the logarithms of v and -v
        always differ by exactly one half-unit."""
        if isinstance(value, FieldElement) and not value.is_zero():
            if value not in self._index and -value in self._index:
                return self.symbol(-value) + ExtElement(self, 1)
        return self.symbol(value)


class LogLift:
    """A covering of the extension into C at one embedding: an actual
    logarithm value per basis generator.  m * lambda_w is a multiple
    2*pi*i*k_unit of 2*pi*i with k_unit prime to m."""

    def __init__(self, basis, ctx, lambda_w, k_unit):
        self.basis = basis
        self.ctx = ctx
        self.lambda_w = lambda_w
        self.k_unit = k_unit
        self._lambda_p = {}

    def lambda_p(self, j):
        if j not in self._lambda_p:
            prec = self.ctx.precision
            with mp.workdps(prec + guard_digits(prec)):
                self._lambda_p[j] = mp.log(self.ctx.evaluate(
                    self.basis.gen_value(j)))
        return self._lambda_p[j]

    def lift(self, e):
        prec = self.ctx.precision
        with mp.workdps(prec + guard_digits(prec)):
            acc = e.k * self.lambda_w
            for j, exp in e.r:
                acc += exp * self.lambda_p(j)
            return +acc


def cover_to_C(basis, ctx, branch=None):
    """Build the covering of the basis into C at an embedding.  By default
    every generator gets its principal logarithm; an explicit branch value
    for the torsion generator may be supplied and is verified."""
    prec = ctx.precision
    m = basis.m
    with mp.workdps(prec + guard_digits(prec)):
        sigma_w = ctx.evaluate(basis.torsion_gen)
        if branch is None:
            lambda_w = mp.log(sigma_w)
        else:
            lambda_w = mp.mpc(branch)
            if abs(mp.exp(lambda_w) - sigma_w) > mp.mpf(10) ** (-prec // 2):
                raise BranchInvalid("explicit branch does not exponentiate "
                                    "to the torsion generator's image")
        ratio = m * lambda_w / (2j * mp.pi)
        k_unit = int(mp.nint(mp.re(ratio)))
        if abs(ratio - k_unit) > mp.mpf(10) ** (-prec // 2):
            raise BranchInvalid("m * lambda_w is not a multiple of 2*pi*i")
    if math.gcd(k_unit, m) != 1:
        raise BranchInvalid("branch does not define a covering: "
                            f"gcd({k_unit}, {m}) != 1")
    return LogLift(basis, ctx, lambda_w, k_unit)


def log_lift(z, basis, exp_bound=64):
    return basis.log_lift(z, exp_bound=exp_bound)


def pi(e, basis=None):
    return e.pi()


def wedge_is_zero(terms, basis=None):
    if basis is None:
        terms = list(terms)
        basis = terms[0][1].basis
    return basis.wedge_is_zero(terms)


def load_basis(field, fixture, precision=50):
    """Build a MultBasis from a fixture dict:
    { "free_gens": [[coeffs], ...], "saturated": true }."""
    gens = [field.element(c) for c in fixture["free_gens"]]
    return MultBasis(field, gens, saturated=bool(fixture.get("saturated")),
                     precision=precision)
