"""Sparse exact polynomials in q, t, z and rational functions in q, t.

Terms are dicts mapping exponent triples (dq, dt, dz) to nonzero exact
coefficients (int where integral, RAT otherwise).  The fixed term order is
graded lexicographic with q > t > z.  Rational functions keep a lazily
normalized num/den pair: the denominator is made primitive with positive
leading coefficient, but no polynomial gcd is ever computed; final results
are certified polynomial through divide_exact.
"""

from __future__ import annotations

from math import gcd, lcm

from .rationals import RAT, normalize_scalar

Expo = tuple[int, int, int]

_SCALAR_TYPES = (int, type(RAT(1)))


class NotDivisible(Exception):
    """Exact polynomial division failed; signals an internal computation bug."""


def _grlex(e: Expo):
    return (e[0] + e[1] + e[2], e)


class QTZPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Expo, object] | None = None, clean: bool = True):
        if terms is None:
            self.terms = {}
        elif clean:
            self.terms = {}
            for e, c in terms.items():
                c = normalize_scalar(c)
                if c:
                    self.terms[e] = c
        else:
            self.terms = terms

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> QTZPoly:
        return cls({}, clean=False)

    @classmethod
    def constant(cls, c) -> QTZPoly:
        c = normalize_scalar(c)
        return cls({(0, 0, 0): c} if c else {}, clean=False)

    @classmethod
    def monomial(cls, dq: int = 0, dt: int = 0, dz: int = 0, coeff=1) -> QTZPoly:
        coeff = normalize_scalar(coeff)
        return cls({(dq, dt, dz): coeff} if coeff else {}, clean=False)

    # -- structure ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, _SCALAR_TYPES):
            other = QTZPoly.constant(other)
        if not isinstance(other, QTZPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((e, str(c)) for e, c in self.terms.items()))

    def leading_exponent(self) -> Expo:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex)

    def degrees(self) -> tuple[int, int, int]:
        """Componentwise maximal (deg_q, deg_t, deg_z); (0,0,0) for 0."""
        dq = dt = dz = 0
        for (a, b, c) in self.terms:
            dq, dt, dz = max(dq, a), max(dt, b), max(dz, c)
        return dq, dt, dz

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def constant_term(self):
        return self.terms.get((0, 0, 0), 0)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> QTZPoly:
        if isinstance(other, _SCALAR_TYPES):
            other = QTZPoly.constant(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = normalize_scalar(s)
            elif e in acc:
                del acc[e]
        return QTZPoly(acc, clean=False)

    __radd__ = __add__

    def __neg__(self) -> QTZPoly:
        return QTZPoly({e: -c for e, c in self.terms.items()}, clean=False)

    def __sub__(self, other) -> QTZPoly:
        if isinstance(other, _SCALAR_TYPES):
            other = QTZPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> QTZPoly:
        return (-self) + other

    def __mul__(self, other) -> QTZPoly:
        if isinstance(other, _SCALAR_TYPES):
            other = normalize_scalar(other)
            if not other:
                return QTZPoly.zero()
            return QTZPoly(
                {e: normalize_scalar(c * other) for e, c in self.terms.items()},
                clean=False,
            )
        if not isinstance(other, QTZPoly):
            return NotImplemented
        acc: dict[Expo, object] = {}
        get = acc.get
        for (a1, b1, c1), x1 in self.terms.items():
            for (a2, b2, c2), x2 in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                s = get(e, 0) + x1 * x2
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        for e, c in acc.items():
            acc[e] = normalize_scalar(c)
        return QTZPoly(acc, clean=False)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QTZPoly:
        if k < 0:
            raise ValueError("negative power")
        result = QTZPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- specialization -------------------------------------------------

    def substitute(self, q=None, t=None, z=None) -> QTZPoly:
        """Exact partial evaluation; unset variables stay formal."""
        acc: dict[Expo, object] = {}
        for (a, b, c), x in self.terms.items():
            if q is not None:
                x = x * q**a
                a = 0
            if t is not None:
                x = x * t**b
                b = 0
            if z is not None:
                x = x * z**c
                c = 0
            e = (a, b, c)
            s = acc.get(e, 0) + x
            if s:
                acc[e] = normalize_scalar(s)
            elif e in acc:
                del acc[e]
        return QTZPoly(acc, clean=False)

    def evaluate(self, q, t, z=1):
        total = 0
        for (a, b, c), x in self.terms.items():
            total += x * q**a * t**b * z**c
        return normalize_scalar(total)

    def swap_qt(self) -> QTZPoly:
        return QTZPoly({(b, a, c): x for (a, b, c), x in self.terms.items()}, clean=False)

    def coefficient_of_z(self, k: int) -> QTZPoly:
        """The z^k slab, as a polynomial in q, t only."""
        return QTZPoly(
            {(a, b, 0): x for (a, b, c), x in self.terms.items() if c == k},
            clean=False,
        )

    def shift_z(self, k: int) -> QTZPoly:
        return QTZPoly(
            {(a, b, c + k): x for (a, b, c), x in self.terms.items()}, clean=False
        )

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c) in sorted(self.terms, key=lambda e: (e[2], e[0], e[1])):
            coeff = self.terms[(a, b, c)]
            factors = []
            for name, exp in (("z", c), ("q", a), ("t", b)):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    __repr__ = __str__


ZERO = QTZPoly.zero()
ONE = QTZPoly.constant(1)
Q = QTZPoly.monomial(dq=1)
T = QTZPoly.monomial(dt=1)
Z = QTZPoly.monomial(dz=1)


def poly_from_str(s: str) -> QTZPoly:
    """Parse the report text form back into a polynomial."""
    from .rationals import scalar_from_str

    s = s.strip()
    if s in ("", "0"):
        return QTZPoly.zero()
    s = s.replace("- ", "-").replace("+ ", "+").replace(" ", "")
    chunks = []
    current = ""
    for ch in s:
        if ch in "+-" and current and current[-1] not in "+-/^*":
            chunks.append(current)
            current = ch if ch == "-" else ""
        else:
            current += ch
    chunks.append(current)
    acc = QTZPoly.zero()
    for chunk in chunks:
        chunk = chunk.lstrip("+")
        sign = 1
        while chunk.startswith("-"):
            sign = -sign
            chunk = chunk[1:]
        coeff = sign
        dq = dt = dz = 0
        for factor in chunk.split("*"):
            if not factor:
                continue
            if factor[0] in "qtz":
                name, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if name == "q":
                    dq += e
                elif name == "t":
                    dt += e
                elif name == "z":
                    dz += e
                else:
                    raise ValueError(f"unknown variable {name!r}")
            else:
                coeff = coeff * scalar_from_str(factor)
        acc = acc + QTZPoly.monomial(dq, dt, dz, coeff)
    return acc


def divide_exact(num: QTZPoly, den: QTZPoly) -> QTZPoly:
    """Return p with p*den == num, or raise NotDivisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return QTZPoly.zero()
    den_lead = den.leading_exponent()
    den_lc = den.terms[den_lead]
    rem = dict(num.terms)
    quot: dict[Expo, object] = {}
    while rem:
        lead = max(rem, key=_grlex)
        e = (lead[0] - den_lead[0], lead[1] - den_lead[1], lead[2] - den_lead[2])
        if e[0] < 0 or e[1] < 0 or e[2] < 0:
            raise NotDivisible(f"leading term {lead} not divisible by {den_lead}")
        c = rem[lead]
        if isinstance(c, int) and isinstance(den_lc, int) and c % den_lc == 0:
            qc = c // den_lc
        else:
            qc = normalize_scalar(RAT(c) / den_lc)
        quot[e] = qc
        for (a, b, cc), x in den.terms.items():
            key = (e[0] + a, e[1] + b, e[2] + cc)
            s = rem.get(key, 0) - qc * x
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return QTZPoly(quot, clean=False)


def _poly_content(p: QTZPoly):
    """Positive rational r such that p/r is primitive (integer, gcd 1)."""
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        if isinstance(c, int):
            num_gcd = gcd(num_gcd, abs(c))
        else:
            num_gcd = gcd(num_gcd, abs(int(c.numerator)))
            den_lcm = lcm(den_lcm, int(c.denominator))
    return normalize_scalar(RAT(num_gcd, den_lcm))


class RatFun:
    """Rational function in q, t: an exact num/den pair of polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: QTZPoly, den: QTZPoly = ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.degrees()[2] != 0:
            raise ValueError("denominator must not involve z")
        if num.is_zero():
            self.num = ZERO
            self.den = ONE
            return
        scale = _poly_content(den)
        lead = den.terms[den.leading_exponent()]
        if lead < 0:
            scale = -scale
        if scale != 1:
            inv = normalize_scalar(RAT(1) / scale)
            den = den * inv
            num = num * inv
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, c) -> RatFun:
        return cls(QTZPoly.constant(c))

    @classmethod
    def from_poly(cls, p: QTZPoly) -> RatFun:
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> RatFun:
        if isinstance(other, QTZPoly):
            other = RatFun(other)
        if self.den.terms == other.den.terms:
            return RatFun(self.num + other.num, self.den)
        return RatFun(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> RatFun:
        return self + (-other)

    def __mul__(self, other) -> RatFun:
        if isinstance(other, QTZPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return RatFun(self.num * other, self.den)
        return RatFun(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, QTZPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        raise TypeError("RatFun is unhashable (lazy normal form)")

    def to_polynomial(self) -> QTZPoly:
        """Certify the value is a polynomial and return it."""
        return divide_exact(self.num, self.den)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__
