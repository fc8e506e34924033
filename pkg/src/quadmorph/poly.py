"""Sparse multivariate polynomials over an exact coefficient domain.

Terms live in a dict mapping exponent tuples to nonzero coefficients.
A RingSpec fixes the variable list, which variables are invertible
(Laurent), the term order, and an optional list of quotient relations.
Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

import heapq
import re

from .domains import DomainError, QQ


class RingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# term orders on exponent tuples
# ---------------------------------------------------------------------------

def degrevlex_key(m):
    """Sort key: max() over these keys picks the degrevlex-leading monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m):
    return m


ORDER_KEYS = {"degrevlex": degrevlex_key, "lex": lex_key}

_VAR_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9]*\Z")


class RingSpec:
    """A polynomial (or Laurent) ring presentation.

    variables   ordered names; invertible names may carry negative exponents
    order       "degrevlex" (default) or "lex"
    domain      coefficient domain (see quadmorph.domains)
    relations   generators of the quotient ideal, given as Poly or strings
    """

    def __init__(self, variables, invertible=(), order="degrevlex", domain=QQ, relations=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise RingError("duplicate variable names")
        for v in variables:
            if not _VAR_RE.match(v):
                raise RingError(f"bad variable name {v!r}")
        invertible = frozenset(invertible)
        if not invertible <= set(variables):
            raise RingError("invertible set is not a subset of the variables")
        if order not in ORDER_KEYS:
            raise RingError(f"unknown term order {order!r}")
        self.variables = variables
        self.invertible = invertible
        self.order = order
        self.domain = domain
        self.index = {v: i for i, v in enumerate(variables)}
        self.nvars = len(variables)
        self.order_key = ORDER_KEYS[order]
        self.zero_monomial = (0,) * self.nvars
        self._relations = tuple(
            self.parse(r) if isinstance(r, str) else r for r in relations
        )
        for r in self._relations:
            if r.ring is not self:
                raise RingError("relation lives in a different ring")

    @property
    def relations(self):
        return self._relations

    # -- constructors -------------------------------------------------

    def poly(self, terms):
        """Build a Poly from {exponent tuple: coefficient}, dropping zeros."""
        clean = {}
        zero = self.domain.zero
        for m, c in terms.items():
            if c == zero:
                continue
            self._check_monomial(m)
            clean[m] = c
        return Poly(self, clean)

    def _check_monomial(self, m):
        if len(m) != self.nvars:
            raise RingError("exponent vector has wrong length")
        for i, e in enumerate(m):
            if e < 0 and self.variables[i] not in self.invertible:
                raise RingError(
                    f"negative exponent on non-invertible variable {self.variables[i]}"
                )

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return Poly(self, {self.zero_monomial: self.domain.one})

    def const(self, c):
        if isinstance(c, int):
            c = self.domain.from_int(c)
        if c == self.domain.zero:
            return self.zero
        return Poly(self, {self.zero_monomial: c})

    def var(self, name, power=1):
        if name not in self.index:
            raise RingError(f"unknown variable {name!r}")
        m = [0] * self.nvars
        m[self.index[name]] = power
        self._check_monomial(tuple(m))
        return Poly(self, {tuple(m): self.domain.one})

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    # -- canonical grammar --------------------------------------------

    def parse(self, text):
        """Parse the canonical polynomial grammar.

        Terms are joined by " + " / " - "; a term is an optional
        coefficient (integer, a/b, or (a+bi)) followed by "*"-separated
        var^exp factors.  Exponents are nonzero integers, negative only
        on invertible variables.
        """
        text = text.strip()
        if text == "0":
            return self.zero
        start = 0
        sign = "+"
        if text and text[0] in "+-":
            sign = text[0]
            start = 1
        signed = []
        depth = 0
        cur = []
        prev_sig = ""  # last non-space char, to keep x^-1 in one token
        for ch in text[start:]:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise RingError(f"unbalanced parentheses in {text!r}")
            if ch in "+-" and depth == 0 and prev_sig != "^":
                body = "".join(cur).strip()
                if not body:
                    raise RingError(f"malformed polynomial {text!r}")
                signed.append((sign, body))
                sign, cur = ch, []
                prev_sig = ""
            else:
                cur.append(ch)
                if not ch.isspace():
                    prev_sig = ch
        last = "".join(cur).strip()
        if depth != 0 or not last:
            raise RingError(f"malformed polynomial {text!r}")
        signed.append((sign, last))
        terms = {}
        dom = self.domain
        zero = dom.zero
        for sign, chunk in signed:
            m, c = self._parse_term(chunk)
            if sign == "-":
                c = dom.neg(c)
            acc = dom.add(terms.get(m, zero), c)
            if acc == zero:
                terms.pop(m, None)
            else:
                terms[m] = acc
        return Poly(self, terms)

    def _parse_term(self, chunk):
        chunk = chunk.strip()
        if not chunk:
            raise RingError("empty term")
        dom = self.domain
        factors = self._split_factors(chunk)
        coeff = dom.one
        exps = [0] * self.nvars
        seen_coeff = False
        for pos, f in enumerate(factors):
            if f[0].isdigit() or f[0] == "(" or (f[0] == "-" and len(f) > 1):
                if pos != 0 or seen_coeff:
                    raise RingError(f"malformed token {f!r}")
                coeff = dom.parse_coeff(f)
                seen_coeff = True
                continue
            m = re.match(r"([a-zA-Z][a-zA-Z0-9]*)(?:\^(-?\d+))?\Z", f)
            if not m:
                raise RingError(f"malformed token {f!r}")
            name, exp = m.group(1), m.group(2)
            if name not in self.index:
                raise RingError(f"unknown variable {name!r}")
            e = 1 if exp is None else int(exp)
            if e == 0:
                raise RingError(f"zero exponent in token {f!r}")
            if e < 0 and name not in self.invertible:
                raise RingError(f"negative exponent on non-invertible variable {name}")
            exps[self.index[name]] += e
        return tuple(exps), coeff

    @staticmethod
    def _split_factors(chunk):
        # split on "*" but never inside a (a+bi) coefficient
        out, depth, cur = [], 0, []
        for ch in chunk:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "*" and depth == 0:
                out.append("".join(cur).strip())
                cur = []
            else:
                cur.append(ch)
        out.append("".join(cur).strip())
        if any(not f for f in out):
            raise RingError(f"malformed term {chunk!r}")
        return out

    def __repr__(self):
        quot = f" / <{len(self._relations)} relations>" if self._relations else ""
        inv = f", inv={sorted(self.invertible)}" if self.invertible else ""
        return f"RingSpec({','.join(self.variables)}; {self.order}; {self.domain!r}{inv}){quot}"


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        """Terms in descending term order (the canonical iteration order)."""
        key = self.ring.order_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self):
        if not self.terms:
            raise RingError("zero polynomial has no leading term")
        key = self.ring.order_key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        i = self.ring.index[name]
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def constant_coefficient(self):
        return self.terms.get(self.ring.zero_monomial, self.ring.domain.zero)

    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), self.ring.domain.zero)

    def is_constant(self):
        return all(m == self.ring.zero_monomial for m in self.terms)

    def variables_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.variables[i])
        return used

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, Poly) and self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        dom = self.ring.domain
        zero = dom.zero
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            acc = dom.add(out.get(m, zero), c)
            if acc == zero:
                out.pop(m, None)
            else:
                out[m] = acc
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.domain.neg
        return Poly(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        dom = self.ring.domain
        zero = dom.zero
        mul, add = dom.mul, dom.add
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                c = mul(c1, c2)
                acc = add(out.get(m, zero), c)
                if acc == zero:
                    out.pop(m, None)
                else:
                    out[m] = acc
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise RingError("polynomial powers take non-negative integer exponents")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed and n:
                base = base * base
        return result

    def scale(self, c):
        if isinstance(c, int):
            c = self.ring.domain.from_int(c)
        dom = self.ring.domain
        if c == dom.zero:
            return self.ring.zero
        mul = dom.mul
        return Poly(self.ring, {m: mul(c, co) for m, co in self.terms.items()})

    def mul_term(self, monomial, coeff):
        """Multiply by coeff * x^monomial (coeff nonzero in a field)."""
        mul = self.ring.domain.mul
        out = {}
        for m, c in self.terms.items():
            out[tuple(a + b for a, b in zip(m, monomial))] = mul(c, coeff)
        return Poly(self.ring, out)

    # -- morphism-style operations --------------------------------------

    def substitute(self, images, target=None):
        """Apply the ring map sending each variable to images[name].

        Every variable appearing in self must have an image; all images
        must live in one target ring over the same coefficient domain.
        Negative exponents require the image to be a single invertible term.
        """
        if target is None:
            some = next(iter(images.values()), None)
            if some is None:
                raise RingError("no images given")
            target = some.ring
        for name in self.variables_used():
            if name not in images:
                raise RingError(f"missing image for variable {name}")
        for img in images.values():
            if img.ring is not target:
                raise RingError("images live in different rings")
        if target.domain != self.ring.domain:
            raise RingError("substitute requires matching coefficient domains")
        dom = target.domain
        pow_cache = {}

        def image_power(name, e):
            got = pow_cache.get((name, e))
            if got is None:
                if e >= 0:
                    got = images[name] ** e
                else:
                    got = _invert_term_power(images[name], -e, target)
                pow_cache[(name, e)] = got
            return got

        acc = target.zero
        names = self.ring.variables
        for m, c in self.terms.items():
            part = target.const(c)
            for i, e in enumerate(m):
                if e:
                    part = part * image_power(names[i], e)
                    if part.is_zero():
                        break
            acc = acc + part
        return acc

    def evaluate(self, point):
        """Evaluate at a point given as {variable name: domain element}."""
        dom = self.ring.domain
        vals = []
        for v in self.ring.variables:
            if v not in point:
                raise RingError(f"missing value for variable {v}")
            val = point[v]
            if isinstance(val, int):
                val = dom.from_int(val)
            vals.append(val)
        total = dom.zero
        for m, c in self.terms.items():
            acc = c
            for i, e in enumerate(m):
                if not e:
                    continue
                v = vals[i]
                if e < 0:
                    if v == dom.zero:
                        raise ZeroDivisionError(
                            f"division by zero at invertible variable {self.ring.variables[i]}"
                        )
                    v = dom.inv(v)
                    e = -e
                for _ in range(e):
                    acc = dom.mul(acc, v)
            total = dom.add(total, acc)
        return total

    def map_coefficients(self, target_ring, fn):
        out = {}
        zero = target_ring.domain.zero
        for m, c in self.terms.items():
            c2 = fn(c)
            if c2 != zero:
                out[m] = c2
        return Poly(target_ring, out)

    # -- normal forms ----------------------------------------------------

    def clear_laurent(self):
        """Return (p * x^N, N) with N the componentwise negative-exponent depth."""
        if not self.terms:
            return self, (0,) * self.ring.nvars
        mins = [0] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e < mins[i]:
                    mins[i] = e
        if not any(mins):
            return self, tuple(0 for _ in mins)
        shift = tuple(-e for e in mins)
        out = {tuple(a + b for a, b in zip(m, shift)): c for m, c in self.terms.items()}
        return Poly(self.ring, out), shift

    def divmod_by(self, divisors):
        """Multivariate division: self = sum(q_i * d_i) + r, no term of r
        divisible by any leading monomial of the divisors.

        Divisor selection is first match in the given order; this plus the
        ring's term order makes the output deterministic.  Returns
        (quotients, remainder).
        """
        ring = self.ring
        dom = ring.domain
        divs = []
        for d in divisors:
            if d.ring is not ring:
                raise RingError("ring mismatch in division")
            if d.is_zero():
                raise RingError("zero divisor polynomial")
            lm, lc = d.leading()
            if any(e < 0 for e in lm):
                raise RingError("Laurent divisor; clear denominators first")
            divs.append((lm, dom.inv(lc), d.terms))
        if any(e < 0 for m in self.terms for e in m):
            raise RingError("Laurent dividend; clear denominators first")

        work = dict(self.terms)
        rem = {}
        quots = [dict() for _ in divs]
        # max-heap on the term order via negated sort keys
        if ring.order == "degrevlex":
            def hkey(m):
                return (-sum(m), tuple(reversed(m)))
        else:
            def hkey(m):
                return tuple(-e for e in m)
        heap = [(hkey(m), m) for m in work]
        heapq.heapify(heap)
        in_heap = set(work)

        def push(m):
            if m not in in_heap:
                heapq.heappush(heap, (hkey(m), m))
                in_heap.add(m)

        zero = dom.zero
        mul, add = dom.mul, dom.add
        while heap:
            _, m = heapq.heappop(heap)
            in_heap.discard(m)
            c = work.get(m)
            if c is None or c == zero:
                continue
            for qi, (lm, lc_inv, dterms) in enumerate(divs):
                if all(a >= b for a, b in zip(m, lm)):
                    shift = tuple(a - b for a, b in zip(m, lm))
                    factor = mul(c, lc_inv)
                    q = quots[qi]
                    q[shift] = add(q.get(shift, zero), factor)
                    del work[m]
                    for dm, dc in dterms.items():
                        t = tuple(a + b for a, b in zip(dm, shift))
                        if t == m:
                            continue
                        acc = add(work.get(t, zero), dom.neg(mul(factor, dc)))
                        if acc == zero:
                            work.pop(t, None)
                        else:
                            work[t] = acc
                            push(t)
                    break
            else:
                rem[m] = c
                del work[m]
        return [Poly(ring, q) for q in quots], Poly(ring, rem)

    def normal_form(self, divisors=None):
        """Canonical representative modulo the divisors (default: ring relations)."""
        if divisors is None:
            divisors = self.ring.relations
        if not divisors:
            return self
        _, r = self.divmod_by(divisors)
        return r

    def is_zero_mod(self, divisors=None):
        """Ideal membership for the (possibly Laurent) element.

        Negative exponents are cleared by multiplying with a monomial first;
        sound whenever the invertible variables are non-zero-divisors modulo
        the divisor set, which holds for all the quadric relations used here.
        """
        if divisors is None:
            divisors = self.ring.relations
        cleared, _ = self.clear_laurent()
        return cleared.normal_form(divisors).is_zero()

    def reduce_mod_p(self, prime, target_ring):
        """Coefficient-wise reduction of an integral Q-polynomial into F_p."""
        if self.ring.domain.kind != "rationals":
            raise DomainError("reduce_mod_p expects a polynomial over Q")
        if target_ring.domain.kind != "prime-field" or target_ring.domain.p != prime:
            raise DomainError("target ring must be over F_p for the same prime")
        out = {}
        for m, c in self.terms.items():
            if c.denominator != 1:
                raise DomainError(f"non-integral coefficient {c}")
            r = c.numerator % prime
            if r:
                out[m] = r
        return Poly(target_ring, out)

    # -- formatting ------------------------------------------------------

    def format(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        names = self.ring.variables
        pieces = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            neg = dom.is_negative(c)
            mag = dom.abs(c)
            factors = []
            for i, e in enumerate(m):
                if e == 0:
                    continue
                factors.append(names[i] if e == 1 else f"{names[i]}^{e}")
            if not factors:
                body = dom.coeff_str(mag)
            elif mag == dom.one:
                body = "*".join(factors)
            else:
                body = dom.coeff_str(mag) + "*" + "*".join(factors)
            if idx == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        s = self.format()
        if len(s) > 120:
            s = s[:117] + "..."
        return f"Poly({s})"


def _invert_term_power(img, k, target):
    """(single term)^-k, for substituting through negative Laurent exponents."""
    if len(img.terms) != 1:
        raise RingError("negative exponent needs a single-term (unit) image")
    (m, c), = img.terms.items()
    inv_m = tuple(-e for e in m)
    target._check_monomial(inv_m)
    inv_c = target.domain.inv(c)
    out = target.poly({inv_m: inv_c})
    return out ** k


def poly_gcd_content(p):
    """Integer content of a Q-polynomial (gcd of numerators over lcm of denominators)."""
    from math import gcd
    num = 0
    den = 1
    for c in p.terms.values():
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    return num, den
