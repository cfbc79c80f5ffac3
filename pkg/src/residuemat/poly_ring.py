"""Dense univariate polynomial arithmetic over a finite field: F_q[t].

A Poly stores an ascending tuple of field-element codes with no trailing
zeros, so representations are canonical and hashable.  The zero polynomial
is the empty tuple; its degree is the sentinel -inf, which makes the
degree inequalities deg(a + b) <= max(deg a, deg b) and
deg(a * b) = deg a + deg b hold without special-casing.

Irreducibility uses Rabin's deterministic test (t^(q^n) = t mod P and
gcd(t^(q^(n/l)) - t, P) = 1 for every prime l | n) and is cached on the
instance, since symbol evaluation revalidates its modulus on every call.

The text format is exact and round-trips: terms joined by '+' or '-',
descending powers preferred on output, prime coefficients as decimal
integers and extension coefficients as '{c0,c1,...}' digit vectors
(constant digit first).
"""

import re
from typing import Iterator

from .field_core import Field, _prime_factors

NEG_INF = float("-inf")


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    """Immutable polynomial over a fixed Field."""

    __slots__ = ("field", "coeffs", "_irred", "_frob")

    def __init__(self, field: Field, coeffs=()):
        q = field.q
        cl = list(coeffs)
        for c in cl:
            if not isinstance(c, int) or not 0 <= c < q:
                raise ValueError(f"coefficient {c!r} out of range [0, {q})")
        self.field = field
        self.coeffs = tuple(_trim(cl))
        self._irred = None
        self._frob = None

    @classmethod
    def _make(cls, field: Field, coeffs: list) -> "Poly":
        # trusted constructor: coefficients already valid, list may be trimmed in place
        self = object.__new__(cls)
        self.field = field
        self.coeffs = tuple(_trim(coeffs))
        self._irred = None
        self._frob = None
        return self

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coeff(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        f = _same_field(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = f.add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly._make(f, out)

    def __neg__(self):
        neg = self.field.neg
        return Poly._make(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        f = _same_field(self, other)
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        sub = f.sub
        for i, c in enumerate(b):
            out[i] = sub(out[i], c)
        return Poly._make(f, out)

    def __mul__(self, other):
        f = _same_field(self, other)
        return Poly._make(f, _mul_raw(f, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        f = _same_field(self, other)
        qt, rm = _divmod_raw(f, list(self.coeffs), other.coeffs)
        return Poly._make(f, qt), Poly._make(f, rm)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate at a field element by Horner's rule."""
        f = self.field
        out = 0
        for c in reversed(self.coeffs):
            out = f.add(f.mul(out, x), c)
        return out

    def scale(self, c: int) -> "Poly":
        """Multiply by the scalar c."""
        mul = self.field.mul
        return Poly._make(self.field, [mul(c, x) for x in self.coeffs])

    def monic(self) -> "Poly":
        """The associate with leading coefficient 1."""
        if not self.coeffs:
            raise ValueError("zero polynomial cannot be made monic")
        lc = self.coeffs[-1]
        return self if lc == 1 else self.scale(self.field.inv(lc))

    def __repr__(self):
        return f"Poly({self.field!r}, '{format_poly(self)}')"


def _same_field(a: Poly, b: Poly) -> Field:
    if not isinstance(b, Poly):
        raise TypeError(f"expected Poly, got {type(b).__name__}")
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field!r} vs {b.field!r}")
    return a.field


def zero(field: Field) -> Poly:
    return Poly._make(field, [])


def one(field: Field) -> Poly:
    return Poly._make(field, [1])


def variable(field: Field) -> Poly:
    """The monomial t."""
    return Poly._make(field, [0, 1])


def constant(field: Field, c: int) -> Poly:
    return Poly(field, (c,))


# -- raw coefficient-list kernels ------------------------------------------
#
# The symbol computation spends nearly all of its time in modular
# exponentiation, so the multiply-and-reduce kernel below carries three
# specialised inner loops (prime field, tabulated extension field, generic)
# with every field operation inlined or bound to a local.


def _mul_raw(f: Field, a, b) -> list:
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    if f.m == 1:
        p = f.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        res[i + j] = (res[i + j] + x * y) % p
    else:
        exp, log, qm1 = f.exp, f.log, f.q - 1
        addt = f._addt
        if addt is not None:
            q = f.q
            for i, x in enumerate(a):
                if x:
                    lx = log[x]
                    for j, y in enumerate(b):
                        if y:
                            res[i + j] = addt[res[i + j] * q + exp[(lx + log[y]) % qm1]]
        else:
            add = f.add
            for i, x in enumerate(a):
                if x:
                    lx = log[x]
                    for j, y in enumerate(b):
                        if y:
                            res[i + j] = add(res[i + j], exp[(lx + log[y]) % qm1])
    return _trim(res)


def _divmod_raw(f: Field, a: list, b) -> tuple:
    """Quotient and remainder of a by b; a is consumed."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    inv_lead = f.inv(b[-1])
    mul, sub = f.mul, f.sub
    qt = [0] * (len(a) - db)
    for pos in range(len(a) - 1, db - 1, -1):
        c = a[pos]
        if c:
            fac = mul(c, inv_lead)
            off = pos - db
            qt[off] = fac
            for i in range(db):
                bi = b[i]
                if bi:
                    a[off + i] = sub(a[off + i], mul(fac, bi))
            a[pos] = 0
    del a[db:]
    return qt, _trim(a)


def _mulmod_raw(f: Field, a, b, mod) -> list:
    """(a * b) mod a monic modulus, with the reduction fused in."""
    if not a or not b:
        return []
    la, lb, dm = len(a), len(b), len(mod) - 1
    res = [0] * (la + lb - 1)
    if f.m == 1:
        p = f.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        res[i + j] = (res[i + j] + x * y) % p
        for pos in range(la + lb - 2, dm - 1, -1):
            c = res[pos]
            if c:
                off = pos - dm
                for i in range(dm):
                    mi = mod[i]
                    if mi:
                        res[off + i] = (res[off + i] - c * mi) % p
        del res[dm:]
        return _trim(res)
    exp, log, qm1 = f.exp, f.log, f.q - 1
    addt = f._addt
    if addt is not None:
        q, negt = f.q, f._negt
        for i, x in enumerate(a):
            if x:
                lx = log[x]
                for j, y in enumerate(b):
                    if y:
                        res[i + j] = addt[res[i + j] * q + exp[(lx + log[y]) % qm1]]
        for pos in range(la + lb - 2, dm - 1, -1):
            c = res[pos]
            if c:
                lc = log[c]
                off = pos - dm
                for i in range(dm):
                    mi = mod[i]
                    if mi:
                        res[off + i] = addt[
                            res[off + i] * q + negt[exp[(lc + log[mi]) % qm1]]
                        ]
        del res[dm:]
        return _trim(res)
    add, sub, mul = f.add, f.sub, f.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] = add(res[i + j], mul(x, y))
    for pos in range(la + lb - 2, dm - 1, -1):
        c = res[pos]
        if c:
            off = pos - dm
            for i in range(dm):
                mi = mod[i]
                if mi:
                    res[off + i] = sub(res[off + i], mul(c, mi))
    del res[dm:]
    return _trim(res)


def _gcd_raw(f: Field, a, b) -> list:
    a, b = list(a), list(b)
    while b:
        _, a = _divmod_raw(f, a, b)
        a, b = b, a
    if a and a[-1] != 1:
        inv_lead = f.inv(a[-1])
        mul = f.mul
        a = [mul(inv_lead, c) for c in a]
    return a


def _xgcd_raw(f: Field, a, b) -> tuple:
    """Monic g plus Bezout coefficients (g, s, t) with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        qt, rm = _divmod_raw(f, r0, r1)
        r0, r1 = r1, rm
        s0, s1 = s1, _sub_raw(f, s0, _mul_raw(f, qt, s1))
        t0, t1 = t1, _sub_raw(f, t0, _mul_raw(f, qt, t1))
    if r0 and r0[-1] != 1:
        inv_lead = f.inv(r0[-1])
        mul = f.mul
        r0 = [mul(inv_lead, c) for c in r0]
        s0 = [mul(inv_lead, c) for c in s0]
        t0 = [mul(inv_lead, c) for c in t0]
    return r0, s0, t0


def _sub_raw(f: Field, a, b) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    sub = f.sub
    for i, c in enumerate(b):
        out[i] = sub(out[i], c)
    return _trim(out)


# -- public ring operations --------------------------------------------------


def divrem(a: Poly, b: Poly) -> tuple:
    """(quotient, remainder) with deg r < deg b."""
    return divmod(a, b)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    f = _same_field(a, b)
    return Poly._make(f, _gcd_raw(f, a.coeffs, b.coeffs))


def mod_pow(a: Poly, e: int, modulus: Poly) -> Poly:
    """a^e mod modulus by binary exponentiation; e is an arbitrary int >= 0."""
    f = _same_field(a, modulus)
    if e < 0:
        raise ValueError("negative exponent")
    if modulus.is_zero():
        raise ZeroDivisionError("zero modulus")
    mod = modulus.monic().coeffs
    if len(mod) == 1:
        return zero(f)
    _, base = _divmod_raw(f, list(a.coeffs), mod)
    out = [1]
    while e:
        if e & 1:
            out = _mulmod_raw(f, out, base, mod)
        e >>= 1
        if e:
            base = _mulmod_raw(f, base, base, mod)
    return Poly._make(f, out)


def norm(P: Poly) -> int:
    """|P| = q^deg(P), the size of the residue ring F_q[t]/(P)."""
    if P.is_zero():
        raise ValueError("zero polynomial has no finite norm")
    return P.field.q ** (len(P.coeffs) - 1)


def is_irreducible(P: Poly) -> bool:
    """Rabin's deterministic irreducibility test, cached on the instance."""
    if P._irred is None:
        P._irred = _rabin(P)
    return P._irred


def _rabin(P: Poly) -> bool:
    f = P.field
    n = len(P.coeffs) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    # cheap pre-filter: a root in F_q means a linear factor (worth a scan
    # only while the field is small)
    if f.q <= 64:
        for c in range(f.q):
            if P(c) == 0:
                return False
    mod = P.monic().coeffs
    t = [0, 1]
    # t^(q^n) must come back to t ...
    img = t
    for _ in range(n):
        img = _pow_q_raw(f, img, mod)
    if _sub_raw(f, img, t):
        return False
    # ... and must not come back early at any maximal proper divisor n/l.
    for ell in _prime_factors(n):
        img = t
        for _ in range(n // ell):
            img = _pow_q_raw(f, img, mod)
        if len(_gcd_raw(f, _sub_raw(f, img, t), mod)) > 1:
            return False
    return True


def _pow_q_raw(f: Field, a, mod) -> list:
    e = f.q
    out, base = [1], list(a)
    while e:
        if e & 1:
            out = _mulmod_raw(f, out, base, mod)
        e >>= 1
        if e:
            base = _mulmod_raw(f, base, base, mod)
    return out


def monic_from_code(field: Field, degree: int, code: int) -> Poly:
    """The code-th monic polynomial of the given degree, in the lexicographic
    order of coefficient vectors with the constant coefficient most
    significant (so the top sub-leading coefficient varies fastest)."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    q = field.q
    if not 0 <= code < q**degree:
        raise ValueError(f"code {code} out of range [0, {q**degree})")
    coeffs = [0] * degree + [1]
    for i in range(degree - 1, -1, -1):
        code, coeffs[i] = divmod(code, q)
    return Poly._make(field, coeffs)


def enumerate_monic(field: Field, degree: int) -> Iterator[Poly]:
    """All q^degree monic polynomials of exactly this degree, in
    monic_from_code order (the order the field modulus search uses too)."""
    for code in range(field.q**degree):
        yield monic_from_code(field, degree, code)


def monic_irreducibles(field: Field, degree: int) -> Iterator[Poly]:
    """All monic irreducibles of exactly this degree, in enumerate_monic order."""
    for P in enumerate_monic(field, degree):
        if is_irreducible(P):
            yield P


def count_monic_irreducibles(field: Field, degree: int) -> int:
    """Gauss' necklace count: (1/n) * sum_{e | n} mu(n/e) q^e."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    q, n = field.q, degree
    total = 0
    for e in range(1, n + 1):
        if n % e == 0:
            total += _moebius(n // e) * q**e
    return total // n


def _moebius(n: int) -> int:
    out = 1
    for p in _prime_factors(n):
        if n % (p * p) == 0:
            return 0
        out = -out
    return out


# -- residue coding ----------------------------------------------------------


def from_code(field: Field, code: int) -> Poly:
    """Polynomial whose base-q digits (little-endian) are the given code."""
    if code < 0:
        raise ValueError("code must be >= 0")
    q = field.q
    coeffs = []
    while code:
        code, digit = divmod(code, q)
        coeffs.append(digit)
    return Poly._make(field, coeffs)


def to_code(P: Poly) -> int:
    """Inverse of from_code."""
    q = P.field.q
    out = 0
    for c in reversed(P.coeffs):
        out = out * q + c
    return out


# -- text format -------------------------------------------------------------

_TERM_RE = re.compile(
    r"""
    (?: (?P<coeff> \{[0-9,\s]*\} | [0-9]+ ) \s* (?: \* \s* (?P<tv1> t (?:\s*\^\s*(?P<pow1>[0-9]+))? ) )?
      | (?P<tv2> t (?:\s*\^\s*(?P<pow2>[0-9]+))? )
    )
    """,
    re.VERBOSE,
)


def parse_poly(text: str, field: Field) -> Poly:
    """Parse the exact text format; inverse of format_poly up to term order."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")

    def skip_ws(i: int) -> int:
        while i < len(s) and s[i].isspace():
            i += 1
        return i

    # split into signed terms at top level (no parentheses in the grammar)
    terms = []
    pos = skip_ws(0)
    sign = 1
    if s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos = skip_ws(pos + 1)
    while True:
        m = _TERM_RE.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        terms.append((sign, m))
        pos = skip_ws(m.end())
        if pos == len(s):
            break
        if s[pos] not in "+-":
            raise ValueError(f"expected '+' or '-' near {s[pos:]!r}")
        sign = -1 if s[pos] == "-" else 1
        pos = skip_ws(pos + 1)
        if pos == len(s):
            raise ValueError("dangling sign at end of polynomial")
    coeffs: dict = {}
    for sign, m in terms:
        if m.group("tv2") is not None:
            power = int(m.group("pow2")) if m.group("pow2") else 1
            c = 1
        else:
            c = _parse_coeff(m.group("coeff"), field)
            if m.group("tv1") is not None:
                power = int(m.group("pow1")) if m.group("pow1") else 1
            else:
                power = 0
        if sign < 0:
            c = field.neg(c)
        coeffs[power] = field.add(coeffs.get(power, 0), c)
    out = [0] * (max(coeffs) + 1 if coeffs else 0)
    for power, c in coeffs.items():
        out[power] = c
    return Poly._make(field, out)


def _parse_coeff(token: str, field: Field) -> int:
    token = token.strip()
    if token.startswith("{"):
        if field.m == 1:
            raise ValueError("digit-vector coefficients need an extension field")
        inner = token[1:-1].strip()
        digits = [int(x) for x in inner.split(",")] if inner else []
        if not digits:
            raise ValueError("empty coefficient digit vector")
        return field.element_from_coeffs(digits)
    value = int(token)
    if field.m > 1:
        if value >= field.p:
            raise ValueError(
                f"bare integer coefficient {value} out of prime-subfield range"
            )
        return value
    return value % field.p


def format_poly(P: Poly) -> str:
    """Canonical text: descending powers, zero terms omitted, '0' for zero."""
    if P.is_zero():
        return "0"
    f = P.field
    parts = []
    for power in range(len(P.coeffs) - 1, -1, -1):
        c = P.coeffs[power]
        if not c:
            continue
        if power == 0:
            parts.append(_format_coeff(c, f))
        elif c == 1:
            parts.append(_tpow(power))
        else:
            parts.append(f"{_format_coeff(c, f)}*{_tpow(power)}")
    return " + ".join(parts)


def _format_coeff(c: int, field: Field) -> str:
    if field.m == 1:
        return str(c)
    return "{" + ",".join(str(d) for d in field.coeffs_of(c)) + "}"


def _tpow(power: int) -> str:
    return "t" if power == 1 else f"t^{power}"
