"""Exact scalar arithmetic for the verification engine.

The scalar ring is built in three layers:

* ``HalfLaurent`` -- Laurent polynomials in t = q^(1/2) with Gaussian
  rational coefficients (the exponent k stands for q^(k/2));
* ``LaurentFrac`` -- the fraction field of ``HalfLaurent``, reduced to a
  unique canonical form (monic denominator of valuation zero, gcd one);
* ``RadicalScalar`` -- finite sums of fraction-coefficient terms, each
  carrying a multiset of canonical polynomials under formal square roots.

Identical radicands multiply out exactly (sqrt(a)*sqrt(a) = a), so every
identity whose radicals only ever appear squared is decided exactly.
Numeric evaluation uses the principal branch throughout; only positive
rational squares and even powers of t are ever moved out of a root, which
keeps exact and principal-branch numeric values in agreement on the
positive real q axis.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd as _int_gcd


class ScalarError(Exception):
    """Base class for scalar arithmetic errors."""


class ZeroBase(ScalarError):
    """Numeric evaluation requested at q = 0."""


class Divergent(ScalarError):
    """The q -> 1 limit does not exist."""


class NotInvertible(ScalarError):
    """Division by a scalar with no inverse in the ring."""


class EvalPole(ScalarError):
    """Numeric evaluation hit a zero of a denominator."""


# Rational numbers are stdlib fractions: always reduced, denominator > 0.
Rational = Fraction


def _square_part(n: int) -> int:
    """Largest s such that s*s divides n (n > 0), by trial division."""
    s = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
        d += 1 if d == 2 else 2
    return s


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    num = _int_gcd(a.numerator * b.denominator, b.numerator * a.denominator)
    return Fraction(num, a.denominator * b.denominator)


class GaussRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __add__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        if not self.im and not other.im:
            return GaussRational(self.re * other.re)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise NotInvertible("division by zero")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        return self * other.inverse()

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaussRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        return f"({self.re}{sign}{imag})"


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)


def _coerce_gauss(x) -> GaussRational:
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(x)
    raise TypeError(f"cannot coerce {type(x)!r} to GaussRational")


class HalfLaurent:
    """Laurent polynomial in t = q^(1/2); exponent k means q^(k/2)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}
        self._hash = None

    @staticmethod
    def zero() -> "HalfLaurent":
        return HalfLaurent()

    @staticmethod
    def one() -> "HalfLaurent":
        return HalfLaurent({0: GR_ONE})

    @staticmethod
    def t_power(k: int) -> "HalfLaurent":
        return HalfLaurent({k: GR_ONE})

    @staticmethod
    def constant(c) -> "HalfLaurent":
        return HalfLaurent({0: _coerce_gauss(c)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: GR_ONE}

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, GR_ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return HalfLaurent(out)

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        return self + (-other)

    def __mul__(self, other: "HalfLaurent") -> "HalfLaurent":
        if self.is_one():
            return other
        if other.is_one():
            return self
        out: dict[int, GaussRational] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                s = out.get(k, GR_ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return HalfLaurent(out)

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: GaussRational) -> "HalfLaurent":
        if c.is_zero():
            return HalfLaurent.zero()
        return HalfLaurent({k: v * c for k, v in self.coeffs.items()})

    def shifted(self, k: int) -> "HalfLaurent":
        if k == 0:
            return self
        return HalfLaurent({e + k: c for e, c in self.coeffs.items()})

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero")
        return min(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero")
        return max(self.coeffs)

    def lead_coeff(self) -> GaussRational:
        return self.coeffs[self.degree()]

    def monic_pair(self) -> tuple["HalfLaurent", GaussRational]:
        """Return (self / lead, lead)."""
        lead = self.lead_coeff()
        inv = lead.inverse()
        return self.scale(inv), lead

    def derivative(self) -> "HalfLaurent":
        out = {}
        for k, c in self.coeffs.items():
            if k != 0:
                out[k - 1] = c * GaussRational(k)
        return HalfLaurent(out)

    def eval_t(self, t: complex) -> complex:
        total = 0j
        for k, c in self.coeffs.items():
            total += c.to_complex() * t**k
        return total

    def at_one(self) -> GaussRational:
        total = GR_ZERO
        for c in self.coeffs.values():
            total = total + c
        return total

    def subs_q(self, q: Fraction) -> GaussRational:
        """Exact value at a rational q; only integer powers of q allowed."""
        if q == 0:
            raise ZeroBase("q must be nonzero")
        total = GR_ZERO
        for k, c in self.coeffs.items():
            if k % 2:
                raise ScalarError("half-integer power of q has no rational value")
            total = total + c * GaussRational(q ** (k // 2))
        return total

    def items_key(self):
        return tuple(sorted((k, c.re, c.im) for k, c in self.coeffs.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfLaurent) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.items_key())
        return self._hash

    def __repr__(self) -> str:
        return f"HalfLaurent({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            parts.append(_render_term(c, k))
        return " + ".join(parts)


def _render_term(c: GaussRational, k: int) -> str:
    if k == 0:
        return str(c)
    if k % 2 == 0:
        e = k // 2
        qpart = "q" if e == 1 else f"q^{e}"
    else:
        qpart = f"q^({k}/2)"
    cs = str(c)
    if cs == "1":
        return qpart
    if cs == "-1":
        return f"-{qpart}"
    return f"{cs}*{qpart}"


def _poly_divmod(a: HalfLaurent, b: HalfLaurent) -> tuple[HalfLaurent, HalfLaurent]:
    """Polynomial division for valuation >= 0 operands, b nonzero."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = dict(a.coeffs)
    quo: dict[int, GaussRational] = {}
    db = b.degree()
    lb = b.coeffs[db]
    lb_inv = lb.inverse()
    while rem and max(rem) >= db:
        da = max(rem)
        coef = rem[da] * lb_inv
        quo[da - db] = coef
        for k, c in b.coeffs.items():
            key = k + da - db
            s = rem.get(key, GR_ZERO) - c * coef
            if s.is_zero():
                rem.pop(key, None)
            else:
                rem[key] = s
    return HalfLaurent(quo), HalfLaurent(rem)


def _poly_exact_div(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    q, r = _poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q


def poly_gcd(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    """Monic gcd of the valuation-stripped polynomial parts (1 if coprime).

    Units t^k are ignored: the result always has valuation 0.
    """
    if a.is_zero() and b.is_zero():
        return HalfLaurent.zero()
    if a.is_zero():
        return b.shifted(-b.valuation()).monic_pair()[0]
    if b.is_zero():
        return a.shifted(-a.valuation()).monic_pair()[0]
    x = a.shifted(-a.valuation())
    y = b.shifted(-b.valuation())
    while not y.is_zero():
        _, r = _poly_divmod(x, y)
        x = y
        if r.is_zero():
            y = HalfLaurent.zero()
        else:
            y = r.shifted(-r.valuation())
    return x.monic_pair()[0]


def squarefree_split(p: HalfLaurent) -> tuple[HalfLaurent, HalfLaurent]:
    """Write a monic valuation-0 polynomial p as s^2 * f with f squarefree.

    Both factors come back monic; works over any characteristic-0 field.
    """
    if p.degree() == 0:
        return HalfLaurent.one(), HalfLaurent.one()
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return HalfLaurent.one(), p
    w = _poly_exact_div(p, g)
    sg, fg = squarefree_split(g)
    f = _poly_exact_div(w, fg)
    s = sg * fg
    return s, f


class LaurentFrac:
    """Reduced quotient of half-Laurent polynomials.

    Canonical form: denominator monic with valuation 0 and coprime to the
    valuation-stripped numerator, so equal values compare equal.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: HalfLaurent, den: HalfLaurent | None = None):
        if den is None or den.is_one():
            self.num = num
            self.den = HalfLaurent.one()
            self._hash = None
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = HalfLaurent.zero()
            self.den = HalfLaurent.one()
            self._hash = None
            return
        vd = den.valuation()
        den0 = den.shifted(-vd)
        num = num.shifted(-vd)
        den0, lead = den0.monic_pair()
        num = num.scale(lead.inverse())
        if den0.degree() > 0:
            vn = num.valuation()
            num0 = num.shifted(-vn)
            g = poly_gcd(num0, den0)
            if g.degree() > 0:
                num0 = _poly_exact_div(num0, g)
                den0 = _poly_exact_div(den0, g)
            num = num0.shifted(vn)
        self.num = num
        self.den = den0
        self._hash = None

    @staticmethod
    def zero() -> "LaurentFrac":
        return LaurentFrac(HalfLaurent.zero())

    @staticmethod
    def one() -> "LaurentFrac":
        return LaurentFrac(HalfLaurent.one())

    @staticmethod
    def t_power(k: int) -> "LaurentFrac":
        return LaurentFrac(HalfLaurent.t_power(k))

    @staticmethod
    def constant(c) -> "LaurentFrac":
        return LaurentFrac(HalfLaurent.constant(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __add__(self, other: "LaurentFrac") -> "LaurentFrac":
        if self.den.is_one() and other.den.is_one():
            return LaurentFrac(self.num + other.num)
        return LaurentFrac(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "LaurentFrac":
        return LaurentFrac(-self.num, self.den)

    def __sub__(self, other: "LaurentFrac") -> "LaurentFrac":
        return self + (-other)

    def __mul__(self, other: "LaurentFrac") -> "LaurentFrac":
        if self.is_one():
            return other
        if other.is_one():
            return self
        return LaurentFrac(self.num * other.num, self.den * other.den)

    def inverse(self) -> "LaurentFrac":
        if self.is_zero():
            raise NotInvertible("division by zero")
        return LaurentFrac(self.den, self.num)

    def __truediv__(self, other: "LaurentFrac") -> "LaurentFrac":
        return self * other.inverse()

    def scale_gauss(self, c: GaussRational) -> "LaurentFrac":
        return LaurentFrac(self.num.scale(c), self.den)

    def eval_t(self, t: complex) -> complex:
        d = self.den.eval_t(t)
        if d == 0:
            raise EvalPole("denominator vanishes at this q")
        return self.num.eval_t(t) / d

    def at_one(self) -> GaussRational:
        d = self.den.at_one()
        if d.is_zero():
            raise Divergent("denominator vanishes at q = 1")
        return self.num.at_one() / d

    def subs_q(self, q: Fraction) -> GaussRational:
        d = self.den.subs_q(q)
        if d.is_zero():
            raise EvalPole("denominator vanishes at this q")
        return self.num.subs_q(q) / d

    def key(self):
        return (self.num.items_key(), self.den.items_key())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentFrac)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentFrac({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


class Radicand:
    """Canonical Laurent fraction kept under a formal square root.

    Invariants: numerator valuation 0 or 1, square content and polynomial
    square factors already extracted by ``_split_radical``, never equal
    to 1.  The denominator stays under the root, so numeric evaluation
    takes a single principal square root of the true value (rationalizing
    would flip the sign wherever the denominator is negative).
    """

    __slots__ = ("frac", "_key")

    def __init__(self, frac: LaurentFrac):
        self.frac = frac
        self._key = frac.key()

    def as_frac(self) -> LaurentFrac:
        return self.frac

    def eval_t(self, t: complex) -> complex:
        return self.frac.eval_t(t)

    def at_one(self) -> GaussRational:
        return self.frac.at_one()

    def sort_key(self):
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Radicand) and self._key == other._key

    def __lt__(self, other: "Radicand") -> bool:
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Radicand({self.frac!r})"

    def __str__(self) -> str:
        return f"sqrt({self.frac})"


def _split_gauss_square(c: GaussRational) -> tuple[Fraction, GaussRational]:
    """Write c = s^2 * c0 with s a positive rational; extraction is maximal
    over positive rational squares, so the result is canonical."""
    if not c.im:
        cr = c.re
        sign = 1 if cr > 0 else -1
        mag = abs(cr)
        ns = _square_part(mag.numerator)
        ds = _square_part(mag.denominator)
        s = Fraction(ns, ds)
        c0 = GaussRational(cr / (s * s))
        return s, c0
    g = _frac_gcd(abs(c.re), abs(c.im))
    gs = Fraction(_square_part(g.numerator), _square_part(g.denominator))
    inv = 1 / (gs * gs)
    return gs, GaussRational(c.re * inv, c.im * inv)


def _split_radical(r: LaurentFrac) -> tuple[LaurentFrac, Radicand | None]:
    """Decompose sqrt(r) as outside * sqrt(inside), inside canonical.

    Only even t-powers, positive rational squares and square polynomial
    factors move outside; the reduced denominator stays under the root.
    Returns (0, None) for r = 0 and (outside, None) when r is a perfect
    square.
    """
    if r.is_zero():
        return LaurentFrac.zero(), None
    v = r.num.valuation()
    a, b = divmod(v, 2)
    num0 = r.num.shifted(-v)
    pm, clead = num0.monic_pair()
    s_num, f_num = squarefree_split(pm)
    s_rat, c0 = _split_gauss_square(clead)
    # den = s_den^2 * f_den: the square part moves outside, the squarefree
    # part stays under the root (sqrt(x/f) = sqrt(x f)/f is not branch-safe).
    s_den, f_den = squarefree_split(r.den)
    inside = LaurentFrac(f_num.scale(c0).shifted(b), f_den)
    out_num = s_num.scale(GaussRational(s_rat)).shifted(a)
    outside = LaurentFrac(out_num, s_den)
    if inside.is_one():
        return outside, None
    return outside, Radicand(inside)


class RadicalScalar:
    """Ring element: sum of Laurent-fraction terms times formal radicals.

    ``terms`` maps a sorted tuple of distinct radicands to its coefficient;
    the empty tuple keys the radical-free part.  Addition merges like keys,
    multiplication cancels paired radicands exactly.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[tuple[Radicand, ...], LaurentFrac] | None = None):
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}
        self._hash = None

    # ---- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "RadicalScalar":
        return RadicalScalar()

    @staticmethod
    def one() -> "RadicalScalar":
        return RadicalScalar({(): LaurentFrac.one()})

    @staticmethod
    def from_frac(f: LaurentFrac) -> "RadicalScalar":
        return RadicalScalar({(): f})

    @staticmethod
    def constant(c) -> "RadicalScalar":
        return RadicalScalar({(): LaurentFrac.constant(c)})

    @staticmethod
    def t_power(k: int) -> "RadicalScalar":
        """q^(k/2)."""
        return RadicalScalar({(): LaurentFrac.t_power(k)})

    # ---- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        coeff = self.terms.get(())
        return coeff is not None and coeff.is_one()

    def is_fraction(self) -> bool:
        return all(k == () for k in self.terms)

    def as_fraction(self) -> LaurentFrac:
        if self.is_zero():
            return LaurentFrac.zero()
        if not self.is_fraction():
            raise ScalarError("value carries unresolved radicals")
        return self.terms[()]

    # ---- ring operations -----------------------------------------------

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return RadicalScalar(out)

    __radd__ = __add__

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if other is ONE:
            return self
        if self is ONE:
            return other if isinstance(other, RadicalScalar) else _coerce(other)
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_one():
            return other
        if other.is_one():
            return self
        if not self.terms or not other.terms:
            return RadicalScalar()
        out: dict[tuple[Radicand, ...], LaurentFrac] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                coeff = c1 * c2
                merged: list[Radicand] = []
                i = j = 0
                while i < len(k1) and j < len(k2):
                    r1, r2 = k1[i], k2[j]
                    if r1 == r2:
                        coeff = coeff * r1.as_frac()
                        i += 1
                        j += 1
                    elif r1 < r2:
                        merged.append(r1)
                        i += 1
                    else:
                        merged.append(r2)
                        j += 1
                merged.extend(k1[i:])
                merged.extend(k2[j:])
                key = tuple(merged)
                s = out.get(key)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return RadicalScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RadicalScalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = RadicalScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "RadicalScalar":
        """Exact inverse by successive conjugation over each radical."""
        if self.is_zero():
            raise NotInvertible("division by zero")
        if len(self.terms) == 1:
            ((key, coeff),) = self.terms.items()
            inv = coeff.inverse()
            for r in key:
                inv = inv * r.as_frac().inverse()
            return RadicalScalar({key: inv})
        rads = sorted({r for key in self.terms for r in key})
        for rad in reversed(rads):
            with_r: dict[tuple[Radicand, ...], LaurentFrac] = {}
            without_r: dict[tuple[Radicand, ...], LaurentFrac] = {}
            for key, c in self.terms.items():
                if rad in key:
                    with_r[tuple(r for r in key if r != rad)] = c
                else:
                    without_r[key] = c
            a = RadicalScalar(without_r)
            b = RadicalScalar(with_r)
            root = RadicalScalar({(rad,): LaurentFrac.one()})
            denom = a * a - b * b * RadicalScalar.from_frac(rad.as_frac())
            if denom.is_zero():
                continue
            return (a - b * root) * denom.inverse()
        raise NotInvertible("radicals are algebraically dependent")

    def __truediv__(self, other) -> "RadicalScalar":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "RadicalScalar":
        return _coerce(other) * self.inverse()

    # ---- comparisons ---------------------------------------------------

    def key(self):
        return tuple(
            sorted(
                (tuple(r.sort_key() for r in k), c.key())
                for k, c in self.terms.items()
            )
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussRational)):
            other = _coerce(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    # ---- evaluation ----------------------------------------------------

    def eval_with_flags(self, q_value: complex) -> tuple[complex, bool]:
        """Principal-branch numeric value plus a branch-cut warning flag.

        The flag is set when any radicand evaluates to a negative real
        number (the principal square root then sits on the branch cut).
        """
        if q_value == 0:
            raise ZeroBase("q must be nonzero")
        t = cmath.sqrt(complex(q_value))
        total = 0j
        branch_cut = False
        for key, coeff in self.terms.items():
            val = coeff.eval_t(t)
            for rad in key:
                rv = rad.eval_t(t)
                if rv.imag == 0.0 and rv.real < 0.0:
                    branch_cut = True
                val *= cmath.sqrt(rv)
            total += val
        return total, branch_cut

    def eval_at(self, q_value: complex) -> complex:
        return self.eval_with_flags(q_value)[0]

    def subs_q(self, q: Fraction) -> GaussRational:
        """Exact value at a rational q for radical-free even-power scalars."""
        total = GR_ZERO
        for key, coeff in self.terms.items():
            if key:
                raise ScalarError("value carries unresolved radicals")
            total = total + coeff.subs_q(q)
        return total

    def limit_q1(self) -> "RadicalScalar":
        """Value at q = 1 when finite; raises Divergent otherwise."""
        total = RadicalScalar.zero()
        for key, coeff in self.terms.items():
            c1 = coeff.at_one()
            term = RadicalScalar.constant(c1)
            for rad in key:
                rv = rad.at_one()
                term = term * sqrt(RadicalScalar.constant(rv))
            total = total + term
        return total

    # ---- rendering -----------------------------------------------------

    def __repr__(self) -> str:
        return f"RadicalScalar({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(r.sort_key() for r in k)):
            coeff = self.terms[key]
            cs = str(coeff)
            if key:
                roots = "*".join(str(r) for r in key)
                if cs == "1":
                    parts.append(roots)
                elif cs == "-1":
                    parts.append(f"-{roots}")
                else:
                    body = cs if coeff.den.is_one() and len(coeff.num.coeffs) == 1 else f"({cs})"
                    parts.append(f"{body}*{roots}")
            else:
                parts.append(cs)
        return " + ".join(parts)


def _coerce(x) -> RadicalScalar:
    if isinstance(x, RadicalScalar):
        return x
    if isinstance(x, int):
        if x == 1:
            return ONE
        if x == 0:
            return ZERO
        return RadicalScalar.constant(x)
    if isinstance(x, (Fraction, GaussRational)):
        return RadicalScalar.constant(x)
    if isinstance(x, LaurentFrac):
        return RadicalScalar.from_frac(x)
    if isinstance(x, HalfLaurent):
        return RadicalScalar.from_frac(LaurentFrac(x))
    raise TypeError(f"cannot coerce {type(x)!r} to RadicalScalar")


def sqrt(x: RadicalScalar) -> RadicalScalar:
    """Formal square root of a radical-free scalar (principal branch)."""
    x = _coerce(x)
    outside, rad = _split_radical(x.as_fraction())
    if rad is None:
        return RadicalScalar.from_frac(outside)
    return RadicalScalar({(rad,): outside})


# Convenience values used throughout the engine.

ZERO = RadicalScalar.zero()
ONE = RadicalScalar.one()
IMAG = RadicalScalar.constant(GR_I)


def qvar() -> RadicalScalar:
    """The deformation parameter q."""
    return RadicalScalar.t_power(2)


def qinv() -> RadicalScalar:
    return RadicalScalar.t_power(-2)


def q_half(k: int = 1) -> RadicalScalar:
    """q^(k/2)."""
    return RadicalScalar.t_power(k)


def q_plus_qinv() -> RadicalScalar:
    """The combination q + q^(-1)."""
    return qvar() + qinv()


def q_bracket_of(value: RadicalScalar) -> RadicalScalar:
    """(v - v^(-1)) / (q - q^(-1)) for an invertible v standing for q^E."""
    denom = qvar() - qinv()
    return (value - value.inverse()) / denom
