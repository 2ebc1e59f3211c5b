"""Flattenings, five-term relations and formal Bloch-type element algebra.

A flattening is a pair (e, f) of extension-group elements with
pi(e) + pi(f) = 1 and pi(e) outside {0, 1}.  Formal integer combinations of
flattenings carry an extra additive part tracked through the translation
homomorphism chi: translating a flattening by central elements (p, q) changes
the combination by chi(q*e - p*f + p*q), and chi kills even central elements.
Normalization merges, per cross-ratio, all translates onto one base
flattening and accumulates the difference in the chi part, giving a
deterministic normal form.

The PSL variant allows half-central translates and signs; a PSL-level
element lifts if and only if an explicit field element is a square, which
over a saturated basis means all its exponents are even.
"""
from __future__ import annotations

from .extgroup import (ExtElement, MultBasis, NotInSubgroup, WedgeElement)
from .field import FieldElement, FieldError


class BlochError(Exception):
    pass


class DegenerateTuple(BlochError):
    pass


class NotAFlattening(BlochError):
    pass


class Flattening:
    """A pair (e, f) over one basis with pi(e) + pi(f) = 1 exactly."""

    __slots__ = ("e", "f", "z")

    def __init__(self, e, f, _skip_check=False):
        if e.basis is not f.basis:
            raise NotAFlattening("components over different bases")
        self.e = e
        self.f = f
        self.z = e.pi()
        if not _skip_check:
            if self.z.is_zero() or self.z.is_one():
                raise NotAFlattening("cross-ratio must avoid 0 and 1")
            if not (self.z + f.pi()).is_one():
                raise NotAFlattening("pi(e) + pi(f) != 1")

    @property
    def basis(self):
        return self.e.basis

    def translate(self, p, q):
        """The flattening shifted by p and q central units."""
        iota = self.basis.iota()
        return Flattening(self.e + p * iota, self.f + q * iota,
                          _skip_check=True)

    def __eq__(self, other):
        return (isinstance(other, Flattening)
                and self.e == other.e and self.f == other.f)

    def __hash__(self):
        return hash((self.e, self.f))

    def sort_key(self):
        return (tuple(self.z.coeffs), self.e.sort_key(), self.f.sort_key())

    def __repr__(self):
        return f"Fl({self.e!r}, {self.f!r})"


class ExtBlochSum:
    """A normalized formal combination of flattenings plus a chi part.

    The chi part is an extension element taken modulo twice the central
    generator (chi kills even central elements)."""

    def __init__(self, basis, terms=(), chi_part=None):
        self.basis = basis
        raw_chi = chi_part if chi_part is not None else ExtElement(basis, 0)
        merged = {}
        for n, fl in terms:
            if n == 0:
                continue
            if fl.basis is not basis:
                raise BlochError("terms over different bases")
            key = (tuple(fl.z.coeffs),
                   fl.e.k % basis.m if basis.m else fl.e.k, fl.e.r,
                   fl.f.k % basis.m if basis.m else fl.f.k, fl.f.r)
            merged.setdefault(key, []).append((int(n), fl))
        out = []
        for key in sorted(merged):
            group = merged[key]
            any_fl = group[0][1]
            if basis.m:
                # canonical translate: central coordinates reduced to [0, m)
                base = Flattening(
                    ExtElement(basis, any_fl.e.k % basis.m, any_fl.e.r),
                    ExtElement(basis, any_fl.f.k % basis.m, any_fl.f.r),
                    _skip_check=True)
            else:
                base = any_fl
            total = 0
            for n, fl in group:
                p = (fl.e.k - base.e.k) // basis.m
                q = (fl.f.k - base.f.k) // basis.m
                if p or q:
                    shift = q * base.e - p * base.f + basis.iota(p * q)
                    raw_chi = raw_chi + n * shift
                total += n
            if total:
                out.append((total, base))
        out.sort(key=lambda t: t[1].sort_key())
        self.terms = tuple(out)
        self.chi_part = ExtElement(basis, raw_chi.k % (2 * basis.m),
                                   raw_chi.r)

    def __add__(self, other):
        if isinstance(other, ExtBlochSum) and other.basis is self.basis:
            return ExtBlochSum(self.basis, self.terms + other.terms,
                               self.chi_part + other.chi_part)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, ExtBlochSum) and other.basis is self.basis:
            return self + (-1) * other
        return NotImplemented

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ExtBlochSum(self.basis, [(n * c, fl) for c, fl in self.terms],
                           n * self.chi_part)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ExtBlochSum) and other.basis is self.basis
                and self.terms == other.terms
                and self.chi_part == other.chi_part)

    def __hash__(self):
        return hash((id(self.basis), self.terms, self.chi_part))

    def is_zero(self):
        return not self.terms and self.chi_part.is_zero()

    def __repr__(self):
        body = " + ".join(f"{n}*{fl!r}" for n, fl in self.terms) or "0"
        return f"EBS({body}; chi={self.chi_part!r})"

    def nu_hat(self):
        """The wedge of the combination; a chi term chi(e) contributes the
        wedge of e with the central generator (the difference of the wedges
        of its two defining flattenings)."""
        terms = [(n, fl.e, fl.f) for n, fl in self.terms]
        if not self.chi_part.is_zero():
            terms.append((1, self.chi_part, self.basis.iota()))
        return WedgeElement(self.basis, terms)

    def is_in_Bhat(self):
        return self.nu_hat().is_zero()

    def project(self):
        """The underlying plain combination of cross-ratios (chi terms have
        no cross-ratio image)."""
        field = self.basis.field
        return BlochSum(field, [(n, fl.z) for n, fl in self.terms])


class BlochSum:
    """A formal integer combination of field elements outside {0, 1}."""

    def __init__(self, field, terms):
        merged = {}
        order = {}
        for n, z in terms:
            if isinstance(z, (int,)) or not isinstance(z, FieldElement):
                z = field.rational(z)
            if z.is_zero() or z.is_one():
                raise DegenerateTuple("entries must avoid 0 and 1")
            merged[z] = merged.get(z, 0) + int(n)
            order.setdefault(z, len(order))
        self.field = field
        self.terms = tuple(sorted(((n, z) for z, n in merged.items() if n),
                                  key=lambda t: tuple(t[1].coeffs)))

    def __eq__(self, other):
        return (isinstance(other, BlochSum) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field.poly, self.terms))

    def __repr__(self):
        return "BS(" + (" + ".join(f"{n}*[{z!r}]" for n, z in self.terms)
                        or "0") + ")"

    def nu_terms(self, basis):
        """Wedge data of z /\\ (1 - z) per term, in basis coordinates."""
        out = []
        for n, z in self.terms:
            out.append((n, basis.log_lift(z), basis.log_lift(self.field.one - z)))
        return out

    def is_in_B(self, basis):
        """Membership in the kernel of z |-> z /\\ (1-z) over F*, decided in
        coordinates where the torsion generator has order m."""
        return basis.fstar_wedge_is_zero(self.nu_terms(basis))


def nu(s, basis):
    return s.nu_terms(basis)


def is_in_B(s, basis):
    return s.is_in_B(basis)


def nu_hat(s):
    return s.nu_hat()


def is_in_Bhat(s):
    return s.is_in_Bhat()


def chi(e):
    """The pure chi element of e: an empty combination with chi part e."""
    return ExtBlochSum(e.basis, (), e)


def normalize(basis, terms=(), chi_part=None):
    """Merge flattening translates per cross-ratio into the normal form."""
    return ExtBlochSum(basis, terms, chi_part)


def five_term(x, y):
    """The five cross-ratios (x, y, y/x, (1-1/x)/(1-1/y), (1-x)/(1-y)).

    All five must avoid 0 and 1; degenerate configurations are rejected."""
    field = x.field
    one = field.one
    for t in (x, y):
        if t.is_zero() or t.is_one():
            raise DegenerateTuple("x and y must avoid 0 and 1")
    if x == y:
        raise DegenerateTuple("x and y must be distinct")
    out = (x, y, y / x,
           (one - x.inverse()) / (one - y.inverse()),
           (one - x) / (one - y))
    for t in out:
        if t.is_zero() or t.is_one():
            raise DegenerateTuple("derived cross-ratio hit 0 or 1")
    return out


def lift_five_term(fl0, fl1):
    """Lift a five-term relation: from flattenings of x0 and x1 compute the
    remaining three flattenings by the defining linear equations.  The lift
    of 1 - x1/x0 is taken with canonical coordinates over the basis."""
    basis = fl0.basis
    if fl1.basis is not basis:
        raise NotAFlattening("flattenings over different bases")
    zs = five_term(fl0.z, fl1.z)
    e0, f0, e1, f1 = fl0.e, fl0.f, fl1.e, fl1.f
    try:
        f2 = basis.log_lift(basis.field.one - zs[2])
    except NotInSubgroup as exc:
        raise NotAFlattening(str(exc)) from None
    e2 = e1 - e0
    e3 = e1 - e0 - f1 + f0
    f3 = f2 - f1
    e4 = f0 - f1
    f4 = f2 - f1 + e0
    out = (fl0, fl1, Flattening(e2, f2), Flattening(e3, f3),
           Flattening(e4, f4))
    for fl, z in zip(out, zs):
        if fl.z != z:
            raise NotAFlattening("lifted tuple does not project to the "
                                 "five-term tuple")
    return out


def rho_hat(lifted):
    """Alternating sum of a lifted five-term tuple as a raw term list."""
    return [((-1) ** i, fl) for i, fl in enumerate(lifted)]


# ---------------------------------------------------------------------------
# PSL variant

class PSLFlattening:
    """A pair over doubled coordinates (allowing half-central translates)
    together with signs (s_e, s_f) recording s_e*pi(e) + s_f*pi(f) = 1."""

    __slots__ = ("e2", "f2", "signs", "basis")

    def __init__(self, basis, e2, f2, signs):
        # e2, f2 are coordinates of 2*e and 2*f, so halves stay integral
        self.basis = basis
        self.e2 = e2
        self.f2 = f2
        self.signs = signs

    def __eq__(self, other):
        return (isinstance(other, PSLFlattening) and self.e2 == other.e2
                and self.f2 == other.f2 and self.signs == other.signs)

    def __hash__(self):
        return hash((self.e2, self.f2, self.signs))

    def __repr__(self):
        return f"PSLFl({self.e2!r}/2, {self.f2!r}/2, {self.signs})"


class PSLSum:
    """Image of an ExtBlochSum at the PSL level: the chi part collapses to a
    single central coefficient modulo the central generator (the transfer
    relation makes chi of the half-unit vanish, and doubling identifies
    chi(2e) with twice the PSL-level chi of e)."""

    def __init__(self, basis, terms, chi_part):
        self.basis = basis
        self.terms = tuple(terms)
        self.chi_part = ExtElement(basis, chi_part.k % basis.m, chi_part.r)

    def __eq__(self, other):
        return (isinstance(other, PSLSum) and self.terms == other.terms
                and self.chi_part == other.chi_part)


def psl_project(s):
    """Project an ExtBlochSum to the PSL level."""
    terms = [(n, PSLFlattening(s.basis, 2 * fl.e, 2 * fl.f, (1, 1)))
             for n, fl in s.terms]
    return PSLSum(s.basis, terms, s.chi_part)


def psl_lift_obstruction(x, basis):
    """Whether x is a square in F*: over a saturated basis, all free
    exponents even and the torsion exponent even (m is even, so an odd
    power of the torsion generator has no square root in F*)."""
    e = basis.log_lift(x)
    liftable = e.k % 2 == 0 and all(exp % 2 == 0 for _, exp in e.r)
    if not liftable and not basis.saturated:
        import warnings
        from .extgroup import UnsaturatedBasis
        warnings.warn("non-square verdict over an unsaturated basis",
                      UnsaturatedBasis, stacklevel=2)
    return liftable


def change_torsion_generator(s, new_basis):
    """Transport an ExtBlochSum to a basis over a different torsion
    generator (same field, same free generators).

    If the new generator raised to a gives the old one, coordinates map by
    (k, r) -> (a*k, r); the chi part additionally picks up the factor a,
    because the covering takes the old central unit to a times the new one.
    The regulator vector is unchanged.
    """
    old = s.basis
    if new_basis.field != old.field:
        raise BlochError("transport requires the same field")
    if [new_basis.gen_value(j) for j in range(new_basis.num_gens())] != \
            [old.gen_value(j) for j in range(old.num_gens())]:
        raise BlochError("transport requires identical free generators")
    m = old.m
    a = next((k for k in range(1, m + 1)
              if new_basis.torsion_gen ** k == old.torsion_gen), None)
    if a is None:
        raise BlochError("new torsion generator does not reach the old one")

    def tr(e):
        return ExtElement(new_basis, a * e.k, dict(e.r))

    terms = [(n, Flattening(tr(fl.e), tr(fl.f))) for n, fl in s.terms]
    return ExtBlochSum(new_basis, terms, a * tr(s.chi_part))


# ---------------------------------------------------------------------------
# Galois action

def galois_apply(tau, s, basis=None):
    """Apply a field automorphism (given by the image of the generator)
    termwise.  For extension-level sums the coordinates are re-expressed by
    lifting the images of the basis generators over the same basis."""
    if isinstance(s, BlochSum):
        return BlochSum(s.field, [(n, z.substitute(tau)) for n, z in s.terms])
    if not isinstance(s, ExtBlochSum):
        raise BlochError("unsupported operand for the Galois action")
    basis = s.basis
    m = basis.m
    w_img = basis.torsion_gen.substitute(tau)
    k_img = next(k for k in range(m) if basis.torsion_gen ** k == w_img)
    gen_imgs = {}

    def push(e):
        out = ExtElement(basis, 0)
        out = out + ExtElement(basis, e.k * k_img)
        for j, exp in e.r:
            if j not in gen_imgs:
                gen_imgs[j] = basis.log_lift(basis.gen_value(j).substitute(tau))
            out = out + exp * gen_imgs[j]
        return out

    terms = [(n, Flattening(push(fl.e), push(fl.f))) for n, fl in s.terms]
    return ExtBlochSum(basis, terms, push(s.chi_part))
