"""Exact coefficient fields, monomial orders, and sparse multivariate polynomials.

Coefficient values are plain Python ints for prime fields (kept reduced into
``[0, p)``) and ``fractions.Fraction`` for the rationals (always in lowest
terms with positive denominator), so every operation in the library is exact;
no floating point is used anywhere.  Monomials are bare exponent tuples and
polynomials map monomials to nonzero coefficients.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class RingMismatchError(ValueError):
    pass


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoefficientField:
    """The rationals, or a prime field F_p for prime p.

    All arithmetic goes through this object; values themselves are raw ints
    (prime field) or Fractions (rationals).
    """

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None and not is_prime(p):
            raise FieldError("modulus %r is not prime" % (p,))
        self.p = p

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(p)

    @property
    def characteristic(self) -> int:
        return self.p if self.p is not None else 0

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def from_int(self, n):
        return n % self.p if self.p is not None else Fraction(n)

    def from_fraction(self, num, den=1):
        if self.p is not None:
            return num * pow(den, -1, self.p) % self.p
        return Fraction(num, den)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p is not None else a * b

    def neg(self, a):
        return -a % self.p if self.p is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p is not None else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and self.p == other.p

    def __hash__(self):
        return hash(("CoefficientField", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else "F%d" % self.p


QQ = CoefficientField.rationals()
GF32003 = CoefficientField.prime(32003)


# ---------------------------------------------------------------------------
# Monomials: bare exponent tuples.

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a, b):
    """True when a divides b componentwise."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(a, b):
    """Exponent vector of a / b; requires b | a."""
    return tuple(x - y for x, y in zip(a, b))

def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))

def mono_degree(a):
    return sum(a)


class MonomialOrder:
    """A monomial order: grevlex, lex or graded lex, with an optional variable
    permutation and an optional elimination block (block variables greatest).

    ``key`` returns a tuple that sorts monomials ascending in the order, which
    is what ``max``/``sorted`` consume throughout the Groebner engine.
    """

    __slots__ = ("kind", "perm", "block")

    def __init__(self, kind="grevlex", perm=None, block=None):
        if kind not in ("grevlex", "lex", "grlex"):
            raise ValueError("unknown order kind %r" % (kind,))
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None
        self.block = tuple(sorted(block)) if block else None

    @classmethod
    def grevlex(cls, perm=None):
        return cls("grevlex", perm)

    @classmethod
    def lex(cls, perm=None):
        return cls("lex", perm)

    @classmethod
    def grlex(cls, perm=None):
        return cls("grlex", perm)

    @classmethod
    def elimination(cls, block, kind="grevlex"):
        """Block order: total degree in ``block`` first, then ``kind`` overall."""
        return cls(kind, None, block)

    def key(self, m):
        if self.perm is not None:
            m = tuple(m[i] for i in self.perm)
        if self.kind == "grevlex":
            base = (sum(m), tuple(-e for e in reversed(m)))
        elif self.kind == "lex":
            base = (m,)
        else:
            base = (sum(m), m)
        if self.block is not None:
            return (sum(m[i] for i in self.block),) + base
        return base

    def compare(self, a, b):
        if len(a) != len(b):
            raise ValueError("monomials of different ambient dimension")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and (self.kind, self.perm, self.block)
                == (other.kind, other.perm, other.block))

    def __hash__(self):
        return hash((self.kind, self.perm, self.block))

    def __repr__(self):
        tag = self.kind
        if self.block:
            tag += "/elim%s" % (self.block,)
        return "MonomialOrder(%s)" % tag


def compare_monomials(order: MonomialOrder, a, b) -> int:
    """-1, 0 or 1 as a <, =, > b in the given order."""
    return order.compare(a, b)


GREVLEX = MonomialOrder.grevlex()


# ---------------------------------------------------------------------------
# Polynomial rings and polynomials.

class PolynomialRing:
    """A named polynomial ring over an exact coefficient field."""

    __slots__ = ("field", "names")

    def __init__(self, field: CoefficientField, names):
        names = tuple(names)
        if len(set(names)) != len(names) or not all(names):
            raise ValueError("variable names must be distinct and nonempty")
        self.field = field
        self.names = names

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one()})

    def constant(self, c) -> "Polynomial":
        c = self.field.from_int(c) if isinstance(c, int) else c
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = self.field.from_int(coeff) if isinstance(coeff, int) else coeff
        if not c:
            return self.zero()
        return Polynomial(self, {exps: c})

    def gen(self, i) -> "Polynomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def var_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError("no variable %r in ring %r" % (name, self)) from None

    def monomial_str(self, m) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing)
                and self.field == other.field and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return "%r[%s]" % (self.field, ",".join(self.names))


def _coerce_scalar(ring, c):
    if isinstance(c, int):
        return ring.field.from_int(c)
    if isinstance(c, Fraction) and ring.field.p is None:
        return c
    raise TypeError("cannot coerce %r into %r" % (c, ring.field))


class Polynomial:
    """Sparse polynomial: an immutable map from exponent tuples to nonzero
    coefficients.  The zero polynomial has an empty map and total degree -1.
    """

    __slots__ = ("ring", "_t")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self._t = terms

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def terms(self):
        """Term map view (monomial -> coefficient); treat as read-only."""
        return self._t

    def sorted_terms(self, order: MonomialOrder = GREVLEX, reverse=True):
        return sorted(self._t.items(), key=lambda kv: order.key(kv[0]),
                      reverse=reverse)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._t), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self._t}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """Degree when homogeneous and nonzero, else None."""
        degs = {sum(m) for m in self._t}
        return degs.pop() if len(degs) == 1 else None

    def graded_component(self, d: int) -> "Polynomial":
        if d < 0:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {m: c for m, c in self._t.items() if sum(m) == d})

    def homogeneous_components(self):
        out = {}
        for m, c in self._t.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(out.items())}

    def leading(self, order: MonomialOrder = GREVLEX):
        """(monomial, coefficient) of the leading term; error on zero."""
        m = max(self._t, key=order.key)
        return m, self._t[m]

    def constant_term(self):
        return self._t.get((0,) * self.ring.nvars, self.ring.field.zero())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operands live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(_coerce_scalar(self.ring, other))
        self._check(other)
        f = self.ring.field
        t = dict(self._t)
        for m, c in other._t.items():
            v = f.add(t.get(m, 0), c) if m in t else c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(_coerce_scalar(self.ring, other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce_scalar(self.ring, other)
            if not c:
                return self.ring.zero()
            f = self.ring.field
            return Polynomial(self.ring,
                              {m: f.mul(v, c) for m, v in self._t.items()})
        self._check(other)
        f = self.ring.field
        t = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                m = mono_mul(m1, m2)
                v = f.add(t[m], f.mul(c1, c2)) if m in t else f.mul(c1, c2)
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        """Multiply by a raw field element."""
        if not c:
            return self.ring.zero()
        f = self.ring.field
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self._t.items()})

    def monic(self, order: MonomialOrder = GREVLEX):
        if not self._t:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def mul_monomial(self, m, coeff=None):
        f = self.ring.field
        c = coeff if coeff is not None else f.one()
        return Polynomial(self.ring,
                          {mono_mul(t, m): f.mul(v, c) for t, v in self._t.items()})

    def substitute(self, assignment: dict) -> "Polynomial":
        """Substitute polynomials for variables; assignment maps indices to
        Polynomials (missing indices stay untouched)."""
        ring = self.ring
        out = ring.zero()
        for m, c in self._t.items():
            term = ring.constant(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                base = assignment.get(i)
                if base is None:
                    ei = [0] * ring.nvars
                    ei[i] = e
                    term = term * ring.monomial(ei)
                else:
                    term = term * base ** e
            out = out + term
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                try:
                    other = self.ring.constant(_coerce_scalar(self.ring, other))
                except TypeError:
                    return NotImplemented
            else:
                return NotImplemented
        return self.ring == other.ring and self._t == other._t

    def __str__(self):
        if not self._t:
            return "0"
        field = self.ring.field
        bits = []
        for m, c in self.sorted_terms(MonomialOrder.grlex()):
            ms = self.ring.monomial_str(m)
            neg = (field.p is None and c < 0) or (
                field.p is not None and c > field.p // 2)
            cpos = -c % field.p if (neg and field.p is not None) else (-c if neg else c)
            sign = "-" if neg else "+"
            if ms == "1":
                body = str(cpos)
            elif cpos == 1:
                body = ms
            else:
                body = "%s*%s" % (cpos, ms)
            bits.append((sign, body))
        first_sign, first_body = bits[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in bits[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "<poly %s>" % self


def graded_component(f: Polynomial, d: int) -> Polynomial:
    """Degree-d homogeneous part of f."""
    return f.graded_component(d)
