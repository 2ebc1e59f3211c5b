"""Exact arithmetic in a number field F = Q[x]/(p(x)).

A field is described by a squarefree (and, by caller assertion, irreducible)
polynomial p with rational coefficients.  Elements are vectors of rationals of
length deg(p), i.e. residues of polynomials of degree < deg(p).  Polynomials
are dense low-to-high coefficient tuples.

Numeric embeddings evaluate elements at isolated complex roots of p at a
requested decimal precision.  Algebraic reconstruction (roots of unity,
automorphisms, membership of a described algebraic number) works by lattice
reduction against powers of the generator in one embedding followed by exact
verification; a failed verification is an error, never a wrong answer.
"""
from __future__ import annotations

import functools
from fractions import Fraction

import mpmath
from mpmath import mp


class FieldError(Exception):
    pass


class NotSquarefree(FieldError):
    pass


class DegreeZero(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class PrecisionExhausted(FieldError):
    pass


class ReconstructionFailed(FieldError):
    pass


def guard_digits(precision):
    """Internal guard digits: 20% of the requested precision, at least 10."""
    return max(10, precision // 5)


# ---------------------------------------------------------------------------
# dense polynomial helpers over Fraction

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if ci:
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
    return _trim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and _trim(a):
        k = len(a) - len(b)
        t = a[-1] / lead
        q[k] = t
        for j, cj in enumerate(b):
            a[k + j] -= t * cj
        a.pop()
    return _trim(q), _trim(a)


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _pderiv(a):
    return _trim([i * c for i, c in enumerate(a)][1:])


def _peval_frac(a, t):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


def _sign_at(a, t):
    v = _peval_frac(a, t)
    return (v > 0) - (v < 0)


def _sturm_chain(p):
    chain = [p, _pderiv(p)]
    while chain[-1]:
        rem = _pdivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(_pneg(rem))
    return [c for c in chain if c]


def _sign_changes(chain, t):
    signs = [s for s in (_sign_at(c, t) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p):
    """Number of distinct real roots of a squarefree rational polynomial."""
    chain = _sturm_chain(p)
    bound = 1 + max(abs(c) for c in p[:-1]) / abs(p[-1]) if len(p) > 1 else 1
    bound = Fraction(bound).limit_denominator(1) + 2
    return _sign_changes(chain, -bound) - _sign_changes(chain, bound)


# ---------------------------------------------------------------------------
# cyclotomic machinery

@functools.lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficient tuple (low-to-high) of the n-th cyclotomic polynomial.

    >>> cyclotomic(1)
    (-1, 1)
    >>> cyclotomic(6)
    (1, -1, 1)
    """
    if n <= 0:
        raise ValueError("cyclotomic index must be positive")
    poly = tuple(Fraction(c) for c in [-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = _pdivmod(poly, cyclotomic(d))[0]
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def euler_phi(n):
    out = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


@functools.lru_cache(maxsize=None)
def cos2pi_minpoly(n):
    """Minimal polynomial (low-to-high, monic) of 2*cos(2*pi/n) over Q.

    Obtained from the n-th cyclotomic polynomial: writing y = x + 1/x and
    using x^k + x^-k = D_k(y) with D_0 = 2, D_1 = y, D_{k+1} = y D_k - D_{k-1}.

    >>> cos2pi_minpoly(8)
    (Fraction(-2, 1), Fraction(0, 1), Fraction(1, 1))
    >>> cos2pi_minpoly(3)
    (Fraction(1, 1), Fraction(1, 1))
    """
    if n == 1:
        return (Fraction(-2), Fraction(1))
    if n == 2:
        return (Fraction(2), Fraction(1))
    phi = cyclotomic(n)
    h = (len(phi) - 1) // 2
    d_prev = (Fraction(2),)
    d_cur = (Fraction(0), Fraction(1))
    out = tuple([phi[h]])
    for k in range(1, h + 1):
        out = _padd(out, _pmul((phi[h + k],), d_cur if k == 1 else d_cur))
        if k < h:
            d_prev, d_cur = d_cur, _padd(_pmul((Fraction(0), Fraction(1)), d_cur), _pneg(d_prev))
    return out


# ---------------------------------------------------------------------------
# lattice reduction (LLL) over the integers, used for reconstruction

def lll_reduce(basis, delta=0.99):
    """LLL-reduce a list of integer vectors (rows).  Returns new rows.

    Basis rows stay exact integers; the Gram-Schmidt bookkeeping is done in
    high-precision floats sized to the largest entry, which is accurate
    enough for the size-reduction roundings used here.
    """
    b = [list(v) for v in basis]
    n = len(b)
    bits = max(max(abs(x) for x in row).bit_length() for row in b if any(row))
    with mp.workprec(4 * bits + 64):
        deltaf = mp.mpf(delta)
        mu = [[mp.mpf(0)] * n for _ in range(n)]
        norms = [mp.mpf(0)] * n
        bstar = []
        for i in range(n):
            v = [mp.mpf(x) for x in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    continue
                mu[i][j] = mp.fdot(map(mp.mpf, b[i]), bstar[j]) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms[i] = mp.fdot(v, v)

        def size_reduce(k, j):
            r = int(mp.nint(mu[k][j]))
            if r != 0:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                for i in range(j):
                    mu[k][i] -= r * mu[j][i]
                mu[k][j] -= r

        k = 1
        while k < n:
            size_reduce(k, k - 1)
            if norms[k] < (deltaf - mu[k][k - 1] ** 2) * norms[k - 1]:
                # swap rows k-1, k and update the Gram-Schmidt data in place
                m_ = mu[k][k - 1]
                bnew = norms[k] + m_ ** 2 * norms[k - 1]
                mu[k][k - 1] = m_ * norms[k - 1] / bnew
                norms[k] = norms[k - 1] * norms[k] / bnew
                norms[k - 1] = bnew
                b[k - 1], b[k] = b[k], b[k - 1]
                for j in range(k - 1):
                    mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
                for i in range(k + 1, n):
                    t = mu[i][k - 1]
                    mu[i][k - 1] = mu[k][k - 1] * t + \
                        (1 - mu[k][k - 1] * m_) * mu[i][k]
                    mu[i][k] = t - m_ * mu[i][k]
                k = max(k - 1, 1)
            else:
                for j in range(k - 2, -1, -1):
                    size_reduce(k, j)
                k += 1
        return [tuple(v) for v in b]


# ---------------------------------------------------------------------------

class FieldElement:
    """An element of a number field, stored as rational coordinates in the
    power basis 1, x, ..., x^(d-1) of the generator."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > field.degree:
            raise ValueError("coordinate vector longer than the field degree")
        coeffs += [Fraction(0)] * (field.degree - len(coeffs))
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.poly, self.coeffs))

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if abs(c) != 1 else ("x" if c == 1 else "-x"))
            else:
                parts.append(f"{c}*x^{i}" if abs(c) != 1 else (f"x^{i}" if c == 1 else f"-x^{i}"))
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"<{body}>"

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        if isinstance(other, FieldElement) and other.field == self.field:
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prod = _pmul(_trim(self.coeffs), _trim(other.coeffs))
        return FieldElement(self.field, _pdivmod(prod, self.field.poly)[1])

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("cannot invert zero")
        # extended Euclid: find u with u*self = 1 mod p
        a, b = self.field.poly, _trim(self.coeffs)
        s0, s1 = (), (Fraction(1),)
        while b:
            q, r = _pdivmod(a, b)
            a, b = b, r
            s0, s1 = s1, _padd(s0, _pneg(_pmul(q, s1)))
        if len(a) != 1:
            raise FieldError("defining polynomial is not irreducible: "
                             "nontrivial gcd found during inversion")
        inv = _pmul(s0, (Fraction(1) / a[0],))
        return FieldElement(self.field, _pdivmod(inv, self.field.poly)[1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- exact invariants --------------------------------------------------

    def min_poly(self):
        """Monic minimal polynomial over Q, found from the first linear
        dependence among the powers 1, a, a^2, ... (exact rational solve)."""
        d = self.field.degree
        powers = [self.field.one]
        for _ in range(d):
            powers.append(powers[-1] * self)
        # find smallest k with a^k in span of lower powers
        for k in range(1, d + 1):
            # solve sum_{j<k} c_j a^j = a^k  (d equations, k unknowns)
            sol = _solve_rational([[powers[j].coeffs[i] for j in range(k)]
                                   for i in range(d)],
                                  [powers[k].coeffs[i] for i in range(d)])
            if sol is not None:
                return tuple([-c for c in sol] + [Fraction(1)])
        raise FieldError("minimal polynomial search failed")  # pragma: no cover

    def evaluate(self, ctx):
        return ctx.evaluate(self)

    def substitute(self, image):
        """The image of this element under the field endomorphism sending the
        generator to `image` (an element of the same field)."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * image + self.field.rational(c)
        return acc


def _solve_rational(rows, rhs):
    """Solve the (possibly overdetermined) system rows * c = rhs exactly.
    Returns the solution vector or None if inconsistent."""
    m = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(rows, rhs)]
    nrows, ncols = len(m), len(m[0]) - 1
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if m[r][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = m[r][ncols]
    # free columns would make the solution non-unique; reject those
    if len(pivots) < ncols:
        return None
    return sol


class EmbeddingContext:
    """One complex embedding of a number field at a fixed decimal precision.

    Real embeddings come first (roots ascending), then one representative per
    conjugate pair (positive imaginary part, ordered by real part then
    imaginary part).  With conjugate=True evaluation returns the complex
    conjugate embedding of a pair representative.
    """

    def __init__(self, field, root_index, precision, conjugate=False):
        self.field = field
        self.root_index = root_index
        self.precision = precision
        self.conjugate = conjugate

    @property
    def is_real(self):
        return self.root_index < self.field.signature[0]

    def root(self):
        r = self.field.roots(self.precision)[self.root_index]
        return mpmath.conj(r) if self.conjugate else r

    def evaluate(self, a):
        if a.field != self.field:
            raise FieldError("element belongs to a different field")
        with mp.workdps(self.precision + guard_digits(self.precision)):
            t = self.root()
            acc = mp.mpc(0)
            for c in reversed(a.coeffs):
                acc = acc * t + mp.mpf(c.numerator) / mp.mpf(c.denominator)
            return +acc

    def conjugated(self):
        return EmbeddingContext(self.field, self.root_index, self.precision,
                                conjugate=not self.conjugate)


class NumberField:
    """The field Q[x]/(p(x)) for a squarefree rational polynomial p."""

    def __init__(self, coeffs):
        coeffs = _trim([Fraction(c) for c in coeffs])
        if len(coeffs) < 2:
            raise DegreeZero("defining polynomial must be nonconstant")
        lead = coeffs[-1]
        coeffs = tuple(c / lead for c in coeffs)
        g = _pgcd(coeffs, _pderiv(coeffs))
        if len(g) > 1:
            raise NotSquarefree("defining polynomial has repeated roots")
        self.poly = coeffs
        self.degree = len(coeffs) - 1
        self._root_cache = {}
        r1 = count_real_roots(self.poly)
        self.signature = (r1, (self.degree - r1) // 2)
        self.one = self.rational(1)
        self.zero = self.rational(0)
        self.gen = FieldElement(self, [0, 1] if self.degree > 1 else [-coeffs[0]])
        self.torsion = detect_roots_of_unity(self)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"NumberField({[str(c) for c in self.poly]})"

    def rational(self, q):
        return FieldElement(self, [Fraction(q)])

    def element(self, coeffs):
        return FieldElement(self, coeffs)

    # -- embeddings --------------------------------------------------------

    def roots(self, precision):
        """All d roots in the deterministic order, at the given precision."""
        if precision in self._root_cache:
            return self._root_cache[precision]
        r1 = self.signature[0]
        with mp.workdps(2 * precision + 40):
            coeffs_high_first = [mp.mpf(c.numerator) / mp.mpf(c.denominator)
                                 for c in reversed(self.poly)]
            try:
                raw = mpmath.polyroots(coeffs_high_first, maxsteps=500,
                                       extraprec=10 * precision)
            except mpmath.libmp.NoConvergence as exc:  # pragma: no cover
                raise PrecisionExhausted(str(exc)) from None
            raw = sorted(raw, key=lambda z: abs(mp.im(z)))
            reals = sorted((mp.mpc(mp.re(z)) for z in raw[:r1]),
                           key=lambda z: mp.re(z))
            upper = [z if mp.im(z) > 0 else mpmath.conj(z) for z in raw[r1:]]
            # one representative per conjugate pair
            upper = sorted(upper, key=lambda z: (mp.re(z), mp.im(z)))
            reps = upper[::2]
            ordered = [+z for z in reals + reps]
            for z in ordered:
                acc = mp.mpc(0)
                for c in coeffs_high_first:
                    acc = acc * z + c
                if abs(acc) > mp.mpf(10) ** (-precision):
                    raise PrecisionExhausted("root verification residue too large")
        self._root_cache[precision] = ordered
        return ordered

    def embedding(self, index, precision):
        if not 0 <= index < self.signature[0] + self.signature[1]:
            raise FieldError("embedding index out of range")
        return EmbeddingContext(self, index, precision)

    def embeddings(self, precision):
        return [self.embedding(i, precision)
                for i in range(self.signature[0] + self.signature[1])]

    def embedding_matching(self, approx, precision):
        """The embedding (possibly conjugated) whose generator value is
        closest to the given complex approximation."""
        best = None
        for ctx in self.embeddings(precision):
            for c in ([ctx] if ctx.is_real else [ctx, ctx.conjugated()]):
                d = abs(complex(c.root()) - complex(approx))
                if best is None or d < best[0]:
                    best = (d, c)
        return best[1]


def nf_new(coeffs):
    """Build a number field from the dense coefficient list of its defining
    polynomial (low-to-high).  The caller asserts irreducibility over Q;
    squarefreeness is verified here."""
    return NumberField(coeffs)


def fe_arith(a, b, op):
    """Dispatch arithmetic on field elements by operation name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, FieldElement) and b.is_zero():
            raise DivisionByZero("division by zero")
        return a / b
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


def evaluate(a, ctx):
    return ctx.evaluate(a)


# ---------------------------------------------------------------------------
# algebraic reconstruction

def reconstruct_at(nf, value, root_index, precision, den_bound=10 ** 6,
                   conjugate=False):
    """Find a field element whose image at the given embedding approximates
    `value`, by lattice reduction against powers of the generator.  The
    result is a candidate only; callers must verify it exactly."""
    d = nf.degree
    with mp.workdps(precision + guard_digits(precision)):
        ctx = EmbeddingContext(nf, root_index, precision, conjugate=conjugate)
        t = ctx.root()
        powers = [mp.mpc(1)]
        for _ in range(d - 1):
            powers.append(powers[-1] * t)
        scale = mp.mpf(10) ** (precision - 8)
        rows = []
        for j in range(d):
            rows.append([int(mp.nint(scale * mp.re(powers[j]))),
                         int(mp.nint(scale * mp.im(powers[j])))]
                        + [1 if i == j else 0 for i in range(d + 1)])
        rows.append([int(mp.nint(scale * mp.re(value))),
                     int(mp.nint(scale * mp.im(value)))]
                    + [0] * d + [1])
        reduced = lll_reduce(rows)
    for vec in reduced:
        denom = vec[2 + d]
        if denom == 0:
            continue
        coeffs = [Fraction(-vec[2 + j], denom) for j in range(d)]
        if all(abs(c.denominator) <= den_bound for c in coeffs):
            return FieldElement(nf, coeffs)
    raise ReconstructionFailed("no short lattice vector yields a candidate")


def element_in_field(min_poly_coeffs, approx, nf, precision=None,
                     den_bound=10 ** 6):
    """Search for an element of nf with the given minimal polynomial over Q.

    The target is described by its minimal polynomial (dense, low-to-high)
    plus a complex approximation of one of its conjugates.  Returns a
    FieldElement verified exactly (its minimal polynomial is recomputed and
    compared), or None when no embedding/root combination reconstructs.
    """
    q = _trim([Fraction(c) for c in min_poly_coeffs])
    if len(q) < 2:
        raise FieldError("minimal polynomial must be nonconstant")
    q = tuple(c / q[-1] for c in q)
    deg_q = len(q) - 1
    if nf.degree % deg_q != 0:
        return None
    if deg_q == 1:
        return nf.rational(-q[0])
    precision = precision or 48
    with mp.workdps(precision + guard_digits(precision)):
        roots_q = mpmath.polyroots([mp.mpf(c.numerator) / mp.mpf(c.denominator)
                                    for c in reversed(q)], maxsteps=500,
                                   extraprec=10 * precision)
        roots_q = sorted(roots_q,
                         key=lambda z: abs(complex(z) - complex(approx)))
    n_emb = nf.signature[0] + nf.signature[1]
    # q is a minimal polynomial, hence irreducible: if a root of q lies in
    # the field at all, every root of q is hit by some embedding, so scanning
    # all embeddings for the root closest to the approximation is complete.
    for root in roots_q[:1]:
        for idx in range(n_emb):
            for conj in ([False] if idx < nf.signature[0] else [False, True]):
                try:
                    cand = reconstruct_at(nf, root, idx, precision,
                                          den_bound, conjugate=conj)
                except ReconstructionFailed:
                    continue
                if _peval_field(q, cand).is_zero() and cand.min_poly() == q:
                    return cand
    return None


def _peval_field(poly, a):
    acc = a.field.zero
    for c in reversed(poly):
        acc = acc * a + a.field.rational(c)
    return acc


def detect_roots_of_unity(nf, precision=44):
    """The pair (m, w): m the order of the group of roots of unity of the
    field and w a verified generator (a root of the m-th cyclotomic
    polynomial, which certifies its exact order)."""
    d = nf.degree
    candidates = [m for m in range(2, 2 * d * d + 3, 2) if euler_phi(m) <= d]
    for m in sorted(candidates, reverse=True):
        if m == 2:
            return (2, nf.rational(-1))
        with mp.workdps(precision):
            approx = mp.expjpi(mp.mpf(2) / m)
        w = element_in_field(cyclotomic(m), approx, nf, precision)
        if w is not None:
            return (m, w)
    return (2, nf.rational(-1))  # pragma: no cover


def automorphisms(nf, precision=48):
    """Images of the generator under all automorphisms of the field:
    the roots of the defining polynomial that lie in the field itself,
    each verified exactly."""
    found = []
    n_emb = nf.signature[0] + nf.signature[1]
    with mp.workdps(precision + guard_digits(precision)):
        all_roots = list(nf.roots(precision))
        all_roots += [mpmath.conj(z) for z in all_roots[nf.signature[0]:]]
    for root in all_roots:
        for idx in range(n_emb):
            for conj in ([False] if idx < nf.signature[0] else [False, True]):
                try:
                    cand = reconstruct_at(nf, root, idx, precision,
                                          conjugate=conj)
                except ReconstructionFailed:
                    continue
                if _peval_field(nf.poly, cand).is_zero() and cand not in found:
                    found.append(cand)
                    break
            else:
                continue
            break
    found.sort(key=lambda a: a.coeffs)
    return found


def load_field(fixture):
    """Build a NumberField from a fixture dict:
    { "poly": [c0,...,cd], "assert_irreducible": true,
      "torsion_hint": {"order": m, "generator": [coeffs]} }.
    Hints are verified against the detected torsion, never trusted."""
    nf = nf_new(fixture["poly"])
    hint = fixture.get("torsion_hint")
    if hint is not None:
        m, w = nf.torsion
        if hint.get("order") != m:
            raise FieldError(f"torsion hint order {hint.get('order')} "
                             f"disagrees with detected order {m}")
        gen_hint = hint.get("generator")
        if gen_hint is not None:
            cand = nf.element(gen_hint)
            if not (_peval_field(cyclotomic(m), cand).is_zero()):
                raise FieldError("torsion hint generator does not have the "
                                 "declared order")
    return nf
