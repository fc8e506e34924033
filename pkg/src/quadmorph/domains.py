"""Exact coefficient domains: rationals, prime fields, Gaussian rationals.

Every element is kept in canonical form (reduced fraction, representative
in [0, p), Gaussian number with reduced rational parts), so equality is
plain ``==`` and hashing is safe.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class DomainError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GaussRat:
    """A Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussRat(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat(self.re / n, -self.im / n)

    def __eq__(self, other):
        return isinstance(other, GaussRat) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __bool__(self):
        return bool(self.re) or bool(self.im)


def _fmt_fraction(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Rationals:
    """The field Q, elements are ``fractions.Fraction``."""

    kind = "rationals"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def is_negative(self, a):
        # controls whether a term is joined with " - " in canonical strings
        return a < 0

    def abs(self, a):
        return -a if a < 0 else a

    def coeff_str(self, a):
        return _fmt_fraction(a)

    def parse_coeff(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"malformed rational {text!r}") from exc

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")


class PrimeField:
    """The field F_p for a prime p < 2**31, elements are ints in [0, p)."""

    kind = "prime-field"

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p) or p >= 2**31:
            raise DomainError(f"modulus {p} is not a prime < 2^31")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def is_negative(self, a):
        return False

    def abs(self, a):
        return a

    def coeff_str(self, a):
        return str(a)

    def parse_coeff(self, text):
        try:
            return int(text) % self.p
        except ValueError as exc:
            raise DomainError(f"malformed F_{self.p} coefficient {text!r}") from exc

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("prime-field", self.p))


class GaussianRationals:
    """The field Q(i), elements are GaussRat."""

    kind = "gaussian-rationals"
    characteristic = 0

    zero = GaussRat(0)
    one = GaussRat(1)
    i = GaussRat(0, 1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def from_int(self, n):
        return GaussRat(n)

    def is_negative(self, a):
        return a.re < 0 or (a.re == 0 and a.im < 0)

    def abs(self, a):
        return -a if self.is_negative(a) else a

    def coeff_str(self, a):
        if a.im == 0:
            return _fmt_fraction(a.re)
        im = _fmt_fraction(abs(a.im))
        sign = "+" if a.im > 0 else "-"
        return f"({_fmt_fraction(a.re)}{sign}{im}i)"

    def parse_coeff(self, text):
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1].strip()
        if not t.endswith("i"):
            try:
                return GaussRat(Fraction(t))
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"malformed Q(i) coefficient {text!r}") from exc
        body = t[:-1]
        # split R+Ii / R-Ii at the last top-level sign; bare "i", "-i", "2i" also accepted
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/":
                re_part, im_part = body[:k], body[k:]
                break
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        try:
            return GaussRat(Fraction(re_part), Fraction(im_part))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"malformed Q(i) coefficient {text!r}") from exc

    def __repr__(self):
        return "QI"

    def __eq__(self, other):
        return isinstance(other, GaussianRationals)

    def __hash__(self):
        return hash("gaussian-rationals")


QQ = Rationals()
QI = GaussianRationals()


def GF(p):
    return PrimeField(p)


def domain_from_tag(tag):
    """Resolve a CLI field tag: "q", "qi", or "fp:<prime>"."""
    tag = tag.lower()
    if tag == "q":
        return QQ
    if tag == "qi":
        return QI
    if tag.startswith("fp:"):
        return GF(int(tag[3:]))
    raise DomainError(f"unknown field tag {tag!r}")
