"""Exact arithmetic in abelian number fields Q(zeta_n) and finite fields F_{p^m}.

Cyclotomic elements are stored as integer coordinate vectors with a single
positive denominator, reduced modulo the n-th cyclotomic polynomial; finite
field elements as coefficient vectors modulo a fixed irreducible polynomial.
No floating point is used anywhere.
"""

import ast
from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, InvalidAutomorphism, ParseError

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


def _primes(n):
    """Prime factors of n, ascending, without multiplicity."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n):
    phi = n
    for q in _primes(n):
        phi -= phi // q
    return phi


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials with monic-up-to-sign divisor."""
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        q[k] = c
        if c:
            for j, y in enumerate(den):
                num[k + j] -= c * y
    return q, _poly_trim(num)


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    """Coefficients (ascending) of Phi_n, by the Moebius product recursion."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not rem
    _CYCLO_CACHE[n] = poly
    return poly


class FieldElement:
    """Immutable element of a CyclotomicField or a GaloisField."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, field, nums, den=1):
        self.field = field
        self.nums = nums
        self.den = den

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise TypeError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._add(self, self.field._neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._add(other, self.field._neg(self))

    def __neg__(self):
        return self.field._neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._mul(self, self.field.inverse(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._mul(other, self.field.inverse(self))

    def __pow__(self, k):
        return self.field.power(self, k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((id(self.field), self.nums, self.den))

    def __bool__(self):
        return any(self.nums)

    def is_zero(self):
        return not any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def sort_key(self):
        return tuple(Fraction(c, self.den) for c in self.nums)

    def __repr__(self):
        return "<%s in %s>" % (self.field.render(self), self.field)


def _normalize(nums, den):
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = den
    for c in nums:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        nums = [c // g for c in nums]
        den //= g
    if not any(nums):
        den = 1
    return tuple(nums), den


class CyclotomicField:
    """Q(zeta_n): vectors of length phi(n) over Q modulo Phi_n."""

    _cache = {}

    def __new__(cls, n):
        if n in cls._cache:
            return cls._cache[n]
        self = object.__new__(cls)
        cls._cache[n] = self
        self._init(n)
        return self

    def _init(self, n):
        if n < 1:
            raise ValueError("conductor must be >= 1")
        self.kind = "cyclotomic"
        self.n = n
        self.char = 0
        self.degree = euler_phi(n)
        self.modulus = cyclotomic_polynomial(n)
        # x^k mod Phi_n for every power that multiplication or the Galois
        # action can produce
        limit = max(n, 2 * self.degree - 1)
        rows = []
        for k in range(limit):
            if k < self.degree:
                row = [0] * self.degree
                row[k] = 1
            else:
                prev = rows[k - 1]
                row = [0] + list(prev[: self.degree - 1])
                lead = prev[self.degree - 1]
                if lead:
                    for j in range(self.degree):
                        row[j] -= lead * self.modulus[j]
            rows.append(tuple(row) if isinstance(row, list) else row)
        self._red = [tuple(r) for r in rows]
        self.zero = FieldElement(self, (0,) * self.degree, 1)
        one = [0] * self.degree
        one[0] = 1
        self.one = FieldElement(self, tuple(one), 1)

    def __repr__(self):
        return "Q(zeta_%d)" % self.n

    # -- construction -----------------------------------------------------

    def from_fraction(self, q):
        q = Fraction(q)
        nums = [0] * self.degree
        nums[0] = q.numerator
        nums, den = _normalize(nums, q.denominator)
        return FieldElement(self, nums, den)

    def from_int(self, k):
        return self.from_fraction(Fraction(k))

    def element(self, coeffs):
        """Element from rational coefficients in the power basis 1..zeta^(phi-1)."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("too many coefficients")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        nums, den = _normalize(nums, den)
        return FieldElement(self, nums, den)

    def zeta(self):
        """The distinguished primitive n-th root of unity."""
        return self.zeta_power(1)

    def zeta_power(self, k):
        nums = list(self._red[k % self.n]) if self.n > 1 else [1]
        return FieldElement(self, tuple(nums), 1)

    def root_of_unity(self, e):
        """Canonical primitive e-th root of unity zeta_n^(n/e)."""
        if self.n % e != 0:
            raise ValueError("no %d-th root of unity in %r" % (e, self))
        return self.zeta_power(self.n // e)

    # -- ring operations on raw data --------------------------------------

    def _add(self, x, y):
        dx, dy = x.den, y.den
        if dx == dy:
            nums = [a + b for a, b in zip(x.nums, y.nums)]
            den = dx
        else:
            nums = [a * dy + b * dx for a, b in zip(x.nums, y.nums)]
            den = dx * dy
        nums, den = _normalize(nums, den)
        return FieldElement(self, nums, den)

    def _neg(self, x):
        return FieldElement(self, tuple(-c for c in x.nums), x.den)

    def _mul(self, x, y):
        d = self.degree
        conv = [0] * (2 * d - 1)
        xn, yn = x.nums, y.nums
        for i in range(d):
            a = xn[i]
            if a:
                for j in range(d):
                    b = yn[j]
                    if b:
                        conv[i + j] += a * b
        nums = list(conv[:d])
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self._red[k]
                for j in range(d):
                    if row[j]:
                        nums[j] += c * row[j]
        nums, den = _normalize(nums, x.den * y.den)
        return FieldElement(self, nums, den)

    def inverse(self, x):
        if x.is_zero():
            raise DivisionByZero("division by zero in %r" % self)
        if x.is_rational():
            return self.from_fraction(1 / x.rational_value())
        # extended Euclid in Q[x] against Phi_n
        a = [Fraction(c, x.den) for c in x.nums]
        b = [Fraction(c) for c in self.modulus]

        def trim(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        def polydiv(num, den_):
            q = [Fraction(0)] * max(1, len(num) - len(den_) + 1)
            r = list(num)
            for k in range(len(r) - len(den_), -1, -1):
                c = r[k + len(den_) - 1] / den_[-1]
                q[k] = c
                if c:
                    for j in range(len(den_)):
                        r[k + j] -= c * den_[j]
            return q, trim(r)

        r0, r1 = trim(a), trim(b)
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = polydiv(r0, r1)
            s = list(s0)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        while len(s) <= i + j:
                            s.append(Fraction(0))
                        s[i + j] -= qc * sc
            r0, r1, s0, s1 = r1, r, s1, trim(s)
        if len(r0) != 1:
            raise ArithmeticError("element not invertible modulo Phi_n")
        c = r0[0]
        inv = [sc / c for sc in s0]
        inv += [Fraction(0)] * (self.degree - len(inv))
        return self.element(inv[: self.degree])

    def power(self, x, k):
        if k < 0:
            x = self.inverse(x)
            k = -k
        result = self.one
        base = x
        while k:
            if k & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            k >>= 1
        return result

    # -- Galois structure --------------------------------------------------

    def aut_identity(self):
        return 1 % self.n

    def aut_is_valid(self, a):
        return gcd(a % self.n, self.n) == 1

    def aut_normalize(self, a):
        a = a % self.n
        if gcd(a, self.n) != 1:
            raise InvalidAutomorphism("%d is not coprime to %d" % (a, self.n))
        return a

    def aut_compose(self, a, b):
        return (a * b) % self.n

    def aut_inverse(self, a):
        a = self.aut_normalize(a)
        return pow(a, -1, self.n) if self.n > 1 else 0

    def apply_aut(self, a, x):
        a = self.aut_normalize(a)
        d = self.degree
        nums = [0] * d
        for i in range(d):
            c = x.nums[i]
            if c:
                row = self._red[(a * i) % self.n]
                for j in range(d):
                    if row[j]:
                        nums[j] += c * row[j]
        nums, den = _normalize(nums, x.den)
        return FieldElement(self, nums, den)

    def aut_multiplier(self, a, e):
        """Exponent u with sigma_a(zeta_e) = zeta_e^u, for e | n."""
        if self.n % e != 0:
            raise ValueError("e must divide the conductor")
        return self.aut_normalize(a) % e if e > 1 else 0

    def galois_subgroup(self, generators):
        return GaloisSubgroup(self, generators)

    # -- parsing and rendering ---------------------------------------------

    symbol = "z"

    def parse(self, text):
        return _parse_expr(self, text)

    def render(self, x):
        return _render_poly(
            [Fraction(c, x.den) for c in x.nums], self.symbol
        )


class GaloisField:
    """F_{p^m} as F_p[t] modulo the first monic irreducible of degree m."""

    _cache = {}

    def __new__(cls, p, m):
        key = (p, m)
        if key in cls._cache:
            return cls._cache[key]
        self = object.__new__(cls)
        cls._cache[key] = self
        self._init(p, m)
        return self

    def _init(self, p, m):
        if p < 2 or any(p % q == 0 for q in _primes(p) if q != p):
            raise ValueError("p must be prime")
        if m < 1:
            raise ValueError("m must be >= 1")
        self.kind = "finite"
        self.p = p
        self.m = m
        self.char = p
        self.degree = m
        self.order = p ** m
        self.modulus = self._find_modulus()
        limit = 2 * m - 1
        rows = []
        for k in range(max(limit, 1)):
            if k < m:
                row = [0] * m
                row[k] = 1
            else:
                prev = rows[k - 1]
                row = [0] + list(prev[: m - 1])
                lead = prev[m - 1]
                if lead:
                    for j in range(m):
                        row[j] = (row[j] - lead * self.modulus[j]) % p
            rows.append(tuple(r % p for r in row))
        self._red = rows
        self.zero = FieldElement(self, (0,) * m, 1)
        one = [0] * m
        one[0] = 1
        self.one = FieldElement(self, tuple(one), 1)
        self._frob_rows = [self.power(self.element_from_ints(self._red[k]), p).nums
                           for k in range(m)]
        self._primitive = None

    def _find_modulus(self):
        # first monic irreducible of degree m, coefficient tuples ordered as
        # base-p integers
        p, m = self.p, self.m
        for code in range(p ** m):
            coeffs = []
            c = code
            for _ in range(m):
                coeffs.append(c % p)
                c //= p
            poly = coeffs + [1]
            if self._is_irreducible(poly):
                return poly
        raise AssertionError("no irreducible polynomial found")

    def _is_irreducible(self, poly):
        p, m = self.p, self.m
        if m == 1:
            return True

        def pmul(a, b):
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] = (out[i + j] + x * y) % p
            return pmod(out)

        def pmod(a):
            a = [c % p for c in a]
            for k in range(len(a) - 1, m - 1, -1):
                c = a[k]
                if c:
                    for j in range(m + 1):
                        a[k - m + j] = (a[k - m + j] - c * poly[j]) % p
            a = a[:m]
            while len(a) > 1 and a[-1] == 0:
                a.pop()
            return a

        def ppow_x(e):
            # x^e mod poly
            result = [1]
            base = [0, 1] if m > 1 else pmod([0, 1])
            while e:
                if e & 1:
                    result = pmul(result, base)
                base = pmul(base, base)
                e >>= 1
            return result

        def pgcd(a, b):
            a, b = list(a), list(b)
            while any(b):
                # reduce a mod b
                while len(a) >= len(b) and any(a):
                    if a[-1] == 0:
                        a.pop()
                        continue
                    c = a[-1] * pow(b[-1], -1, p) % p
                    shift = len(a) - len(b)
                    for j in range(len(b)):
                        a[shift + j] = (a[shift + j] - c * b[j]) % p
                    while len(a) > 1 and a[-1] == 0:
                        a.pop()
                    if len(a) < len(b):
                        break
                a, b = b, a
            while len(a) > 1 and a[-1] == 0:
                a.pop()
            return a

        # x^(p^m) == x mod poly
        xq = ppow_x(p ** m)
        xx = pmod([0, 1])
        if pmod([a - b for a, b in zip(xq + [0] * 4, xx + [0] * 4)]) != [0]:
            return False
        for q in _primes(m):
            xq = ppow_x(p ** (m // q))
            diff = [0] * max(len(xq), 2)
            for i, c in enumerate(xq):
                diff[i] = c
            diff[1] = (diff[1] - 1) % p
            g = pgcd(poly, pmod(diff))
            if len(g) > 1:
                return False
        return True

    def __repr__(self):
        return "F_%d^%d" % (self.p, self.m)

    # -- construction -----------------------------------------------------

    def element_from_ints(self, coeffs):
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(coeffs), 1)

    def element(self, coeffs):
        out = []
        for c in coeffs:
            c = Fraction(c)
            out.append(c.numerator * pow(c.denominator, -1, self.p) % self.p)
        return self.element_from_ints(out)

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise DivisionByZero("denominator divisible by the characteristic")
        return self.element_from_ints(
            [q.numerator * pow(q.denominator, -1, self.p) % self.p]
        )

    def from_int(self, k):
        return self.element_from_ints([k])

    def gen(self):
        return self.element_from_ints([0, 1] if self.m > 1 else [0])

    def primitive_element(self):
        """Smallest multiplicative generator in the canonical element order."""
        if self._primitive is not None:
            return self._primitive
        q1 = self.order - 1
        prime_parts = _primes(q1)
        for code in range(1, self.order):
            coeffs = []
            c = code
            for _ in range(self.m):
                coeffs.append(c % self.p)
                c //= self.p
            x = self.element_from_ints(coeffs)
            if all(self.power(x, q1 // r) != self.one for r in prime_parts):
                self._primitive = x
                return x
        raise AssertionError("no primitive element found")

    def root_of_unity(self, e):
        if (self.order - 1) % e != 0:
            raise ValueError("no %d-th root of unity in %r" % (e, self))
        return self.power(self.primitive_element(), (self.order - 1) // e)

    # -- ring operations ---------------------------------------------------

    def _add(self, x, y):
        return FieldElement(
            self, tuple((a + b) % self.p for a, b in zip(x.nums, y.nums)), 1
        )

    def _neg(self, x):
        return FieldElement(self, tuple((-a) % self.p for a in x.nums), 1)

    def _mul(self, x, y):
        m, p = self.m, self.p
        conv = [0] * (2 * m - 1) if m > 1 else [0]
        for i in range(m):
            a = x.nums[i]
            if a:
                for j in range(m):
                    b = y.nums[j]
                    if b:
                        conv[i + j] += a * b
        nums = list(conv[:m])
        for k in range(m, 2 * m - 1):
            c = conv[k]
            if c:
                row = self._red[k]
                for j in range(m):
                    nums[j] += c * row[j]
        return FieldElement(self, tuple(c % p for c in nums), 1)

    def inverse(self, x):
        if x.is_zero():
            raise DivisionByZero("division by zero in %r" % self)
        return self.power(x, self.order - 2)

    def power(self, x, k):
        if k < 0:
            x = self.inverse(x)
            k = -k
        result = self.one
        base = x
        while k:
            if k & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            k >>= 1
        return result

    # -- Galois structure --------------------------------------------------

    def aut_identity(self):
        return 0

    def aut_is_valid(self, a):
        return isinstance(a, int)

    def aut_normalize(self, a):
        if not isinstance(a, int):
            raise InvalidAutomorphism("Frobenius exponent must be an integer")
        return a % self.m

    def aut_compose(self, a, b):
        return (a + b) % self.m

    def aut_inverse(self, a):
        return (-a) % self.m

    def apply_aut(self, a, x):
        a = self.aut_normalize(a)
        for _ in range(a):
            nums = [0] * self.m
            for i in range(self.m):
                c = x.nums[i]
                if c:
                    row = self._frob_rows[i]
                    for j in range(self.m):
                        nums[j] += c * row[j]
            x = FieldElement(self, tuple(c % self.p for c in nums), 1)
        return x

    def aut_multiplier(self, a, e):
        if (self.order - 1) % e != 0:
            raise ValueError("e must divide p^m - 1")
        return pow(self.p, self.aut_normalize(a), e) if e > 1 else 0

    def galois_subgroup_from_fixed_degree(self, s):
        """Gal(l / F_{p^s}) for s | m, generated by the s-th Frobenius power."""
        if self.m % s != 0:
            raise ValueError("s must divide m")
        return GaloisSubgroup(self, [s])

    def galois_subgroup(self, generators):
        return GaloisSubgroup(self, generators)

    # -- parsing and rendering ---------------------------------------------

    symbol = "t"

    def parse(self, text):
        return _parse_expr(self, text)

    def render(self, x):
        return _render_poly([Fraction(c) for c in x.nums], self.symbol)


class GaloisSubgroup:
    """A subgroup of the Galois group of l/Q resp. l/F_p, closed under
    composition; its fixed field is the ground field k."""

    def __init__(self, field, generators):
        self.field = field
        gens = [field.aut_normalize(a) for a in generators]
        elems = {field.aut_identity()}
        frontier = list(elems)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = field.aut_compose(a, g)
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
            frontier = nxt
        self.generators = tuple(gens)
        self.elements = tuple(sorted(elems))
        self.order = len(self.elements)

    def __repr__(self):
        return "GaloisSubgroup(%r, %s)" % (self.field, list(self.generators))

    def __contains__(self, a):
        return self.field.aut_normalize(a) in self.elements

    def element_order(self, a):
        e = self.field.aut_identity()
        k = 1
        c = a
        while c != e:
            c = self.field.aut_compose(c, a)
            k += 1
        return k

    def is_cyclic(self):
        return any(self.element_order(a) == self.order for a in self.elements)

    def smallest_generator(self):
        for a in self.elements:
            if self.element_order(a) == self.order:
                return a
        raise ValueError("subgroup is not cyclic")

    def is_fixed(self, x):
        return all(self.field.apply_aut(g, x) == x for g in self.generators)

    def norm(self, x):
        out = self.field.one
        for a in self.elements:
            out = out * self.field.apply_aut(a, x)
        return out


def is_norm(target, subgroup, bound=8, candidate_cap=120000):
    """Decide whether `target` lies in the image of the norm map of `subgroup`.

    Returns YES / NO / UNKNOWN; UNKNOWN is never a wrong answer.  Deciders, in
    order: finite fields are always YES for nonzero targets; when the subgroup
    contains the inversion zeta -> zeta^-1 every norm is totally nonnegative,
    so negative rational targets are NO; otherwise a bounded search over
    integer coordinate vectors of height <= bound looks for a preimage,
    sparse vectors first so that high-degree fields still find the common
    small norms before the work cap applies.
    """
    field = subgroup.field
    if target.is_zero():
        raise ValueError("norm target must be nonzero")
    if not subgroup.is_fixed(target):
        raise ValueError("norm target must be fixed by the subgroup")
    if field.kind == "finite":
        return YES
    n = field.n
    if any(a == (n - 1) % n for a in subgroup.elements):
        if target.is_rational() and target.rational_value() < 0:
            return NO
    if target == field.one:
        return YES
    from itertools import combinations, product

    d = field.degree
    state = {"examined": 0}

    def try_vec(vec):
        state["examined"] += 1
        if not any(vec):
            return None
        x = FieldElement(field, vec, 1)
        if subgroup.norm(x) == target:
            return YES
        return None

    rng_full = [c for c in range(-bound, bound + 1)]
    # phase 1: vectors supported on at most two coordinates
    for i, j in combinations(range(d), 2):
        for ci, cj in product(rng_full, rng_full):
            vec = [0] * d
            vec[i], vec[j] = ci, cj
            if try_vec(tuple(vec)) == YES:
                return YES
            if state["examined"] > candidate_cap:
                return UNKNOWN
    # phase 2: full shell-ordered enumeration up to the work cap
    for shell in range(1, bound + 1):
        rng = range(-shell, shell + 1)
        for vec in product(rng, repeat=d):
            if max(abs(c) for c in vec) != shell:
                continue
            if try_vec(vec) == YES:
                return YES
            if state["examined"] > candidate_cap:
                return UNKNOWN
    return UNKNOWN


# -- expression parsing ----------------------------------------------------


def _parse_expr(field, text):
    if not isinstance(text, str):
        raise ParseError("field element must be a string, got %r" % (text,))
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval").body
    except SyntaxError as exc:
        raise ParseError("cannot parse %r: %s" % (text, exc)) from None
    return _eval_node(field, tree, text)


def _eval_int(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_int(node.operand, text)
    raise ParseError("exponent must be an integer in %r" % text)


def _eval_node(field, node, text):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int):
            return field.from_int(node.value)
        raise ParseError("only integer literals allowed in %r" % text)
    if isinstance(node, ast.Name):
        if node.id == field.symbol:
            if field.kind == "cyclotomic":
                return field.zeta()
            return field.gen()
        raise ParseError("unknown symbol %r in %r" % (node.id, text))
    if isinstance(node, ast.UnaryOp):
        val = _eval_node(field, node.operand, text)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        raise ParseError("unsupported unary operator in %r" % text)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval_node(field, node.left, text)
            return base ** _eval_int(node.right, text)
        left = _eval_node(field, node.left, text)
        right = _eval_node(field, node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_zero():
                raise DivisionByZero("division by zero in %r" % text)
            return left / right
        raise ParseError("unsupported operator in %r" % text)
    raise ParseError("unsupported syntax in %r" % text)


def _render_poly(coeffs, symbol):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            var = symbol if k == 1 else "%s^%d" % (symbol, k)
            body = var if mag == 1 else "%s*%s" % (mag, var)
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out
