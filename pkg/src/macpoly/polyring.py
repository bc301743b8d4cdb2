"""Exact sparse arithmetic in Z[x_1..x_n, q, t] and factored q,t-fractions.

Two value types carry every computation in this package:

* :class:`MPoly` -- sparse polynomial with arbitrary-precision integer
  coefficients in the x variables plus the two parameters q and t.
* :class:`QtRational` -- a q,t-polynomial divided by a multiset of binomial
  factors 1 - q^a t^b.  Denominators are never expanded, so cancellation is
  exact divisibility testing, not multivariate gcd.

Values are immutable once built and compare by canonical term map.  Rational
coefficients appear only after :func:`specialize` substitutes non-integer
points; the core ring stays over the integers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Scalar = Union[int, Fraction]

#: sentinel for "leave this variable alone" in specialize()
KEEP = "keep"


class DimensionError(ValueError):
    """Two operands disagree on the ambient x-variable count."""


class NonPolynomialError(ArithmeticError):
    """A value that has to be polynomial kept a nontrivial denominator."""


class EvaluationError(ZeroDivisionError):
    """A substitution point makes a denominator factor vanish."""


def _normalize_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Monomial(NamedTuple):
    """Exponents of one term: x exponent vector plus q and t exponents."""

    x: tuple[int, ...]
    q: int
    t: int

    def degree(self) -> int:
        return sum(self.x) + self.q + self.t

    def key(self) -> tuple:
        # graded lexicographic with x_1 > ... > x_n > q > t
        return (self.degree(), self.x, self.q, self.t)

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            self.q + other.q,
            self.t + other.t,
        )

    def divides(self, other: "Monomial") -> bool:
        return (
            self.q <= other.q
            and self.t <= other.t
            and all(a <= b for a, b in zip(self.x, other.x))
        )

    def quotient_by(self, other: "Monomial") -> "Monomial":
        """self / other, assuming ``other.divides(self)``."""
        return Monomial(
            tuple(a - b for a, b in zip(self.x, other.x)),
            self.q - other.q,
            self.t - other.t,
        )


class MPoly:
    """Sparse exact polynomial; ``terms`` maps Monomial -> nonzero coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | None = None):
        cleaned: dict[Monomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono.x) != n:
                    raise DimensionError(
                        f"monomial has {len(mono.x)} x-exponents, ambient n={n}"
                    )
                if any(e < 0 for e in mono.x) or mono.q < 0 or mono.t < 0:
                    raise ValueError(f"negative exponent in {mono}")
                c = _normalize_scalar(coeff)
                if c:
                    cleaned[mono] = c
        self.n = n
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c: Scalar) -> "MPoly":
        return cls(n, {Monomial((0,) * n, 0, 0): c})

    @classmethod
    def one(cls, n: int) -> "MPoly":
        return cls.const(n, 1)

    @classmethod
    def monomial(
        cls,
        n: int,
        x: Sequence[int] = (),
        q: int = 0,
        t: int = 0,
        coeff: Scalar = 1,
    ) -> "MPoly":
        xs = tuple(x) if x else (0,) * n
        return cls(n, {Monomial(xs, q, t): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def constant_term(self) -> Scalar:
        return self.terms.get(Monomial((0,) * self.n, 0, 0), 0)

    def leading(self) -> tuple[Monomial, Scalar]:
        """Leading term in the canonical graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=Monomial.key)
        return mono, self.terms[mono]

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].key(), reverse=True)

    def _check(self, other: "MPoly") -> None:
        if self.n != other.n:
            raise DimensionError(f"ambient mismatch: {self.n} vs {other.n}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = acc.get(mono, 0) + coeff
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        out = MPoly.__new__(MPoly)
        out.n = self.n
        out.terms = acc
        return out

    def __neg__(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        out.n = self.n
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly | Scalar") -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero(self.n)
            out = MPoly.__new__(MPoly)
            out.n = self.n
            out.terms = {
                m: _normalize_scalar(c * other) for m, c in self.terms.items()
            }
            return out
        self._check(other)
        acc: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                c = acc.get(mono, 0) + c1 * c2
                if c:
                    acc[mono] = c
                else:
                    acc.pop(mono, None)
        out = MPoly.__new__(MPoly)
        out.n = self.n
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def mul_monomial(self, x: Sequence[int] = (), q: int = 0, t: int = 0) -> "MPoly":
        shift = Monomial(tuple(x) if x else (0,) * self.n, q, t)
        out = MPoly.__new__(MPoly)
        out.n = self.n
        out.terms = {m * shift: c for m, c in self.terms.items()}
        return out

    # -- structural helpers --------------------------------------------------

    def extended(self, n: int) -> "MPoly":
        """Embed into a larger ambient by padding x-exponents with zeros."""
        if n < self.n:
            raise DimensionError(f"cannot shrink ambient {self.n} -> {n}")
        if n == self.n:
            return self
        pad = (0,) * (n - self.n)
        out = MPoly.__new__(MPoly)
        out.n = n
        out.terms = {Monomial(m.x + pad, m.q, m.t): c for m, c in self.terms.items()}
        return out

    def swap_qt(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        out.n = self.n
        out.terms = {Monomial(m.x, m.t, m.q): c for m, c in self.terms.items()}
        return out

    def swap_x(self, i: int, j: int) -> "MPoly":
        """Exchange the variables x_i and x_j (1-based)."""
        acc: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            xs = list(m.x)
            xs[i - 1], xs[j - 1] = xs[j - 1], xs[i - 1]
            acc[Monomial(tuple(xs), m.q, m.t)] = c
        out = MPoly.__new__(MPoly)
        out.n = self.n
        out.terms = acc
        return out

    def qt_coefficients(self) -> dict[tuple[int, ...], "MPoly"]:
        """Group terms by x-part; values are q,t-only polynomials (n = 0)."""
        acc: dict[tuple[int, ...], dict[Monomial, Scalar]] = {}
        for m, c in self.terms.items():
            acc.setdefault(m.x, {})[Monomial((), m.q, m.t)] = c
        return {x: MPoly(0, terms) for x, terms in acc.items()}

    def is_qt_only(self) -> bool:
        return all(not any(m.x) for m in self.terms)

    # -- substitution --------------------------------------------------------

    def specialize(
        self,
        q: Scalar | str = KEEP,
        t: Scalar | str = KEEP,
        x: Mapping[int, Scalar] | None = None,
    ) -> "MPoly":
        """Substitute exact values for q, t, and/or x variables (1-based keys).

        The result keeps the same ambient n (substituted variables simply stop
        appearing); coefficients may become Fractions for non-integer points.
        """
        x = x or {}
        acc: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            coeff: Scalar = c
            if q is not KEEP:
                coeff *= Fraction(q) ** m.q if isinstance(q, Fraction) else q**m.q
            if t is not KEEP:
                coeff *= Fraction(t) ** m.t if isinstance(t, Fraction) else t**m.t
            xs = list(m.x)
            for idx, val in x.items():
                e = xs[idx - 1]
                if e:
                    coeff *= val**e
                xs[idx - 1] = 0
            if not coeff:
                continue
            mono = Monomial(
                tuple(xs),
                m.q if q is KEEP else 0,
                m.t if t is KEEP else 0,
            )
            cc = acc.get(mono, 0) + coeff
            if cc:
                acc[mono] = cc
            else:
                acc.pop(mono, None)
        return MPoly(self.n, acc)

    # -- serialization / display ----------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"x": list(m.x), "q": m.q, "t": m.t, "c": str(c)}
                for m, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "MPoly":
        n = obj["n"]
        terms = {
            Monomial(tuple(term["x"]), term["q"], term["t"]): int(term["c"])
            for term in obj["terms"]
        }
        return cls(n, terms)

    @classmethod
    def from_json(cls, s: str) -> "MPoly":
        return cls.from_json_obj(json.loads(s))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m.x):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e:
                    factors.append(f"x{i + 1}^{e}")
            if m.q == 1:
                factors.append("q")
            elif m.q:
                factors.append(f"q^{m.q}")
            if m.t == 1:
                factors.append("t")
            elif m.t:
                factors.append(f"t^{m.t}")
            body = "*".join(factors)
            if not body:
                text = str(c)
            elif c == 1:
                text = body
            elif c == -1:
                text = f"-{body}"
            else:
                text = f"{c}*{body}"
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__


# -- division ----------------------------------------------------------------


def divmod_poly(p: MPoly, d: MPoly) -> tuple[MPoly, MPoly]:
    """Multivariate division of p by a single divisor d (graded-lex order).

    Returns (quotient, remainder); remainder is zero iff d divides p exactly.
    Divisors used in this package have a +/-1 leading coefficient, so integer
    coefficients never force anything into the remainder spuriously.
    """
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lead_mono, lead_coeff = d.leading()
    quo: dict[Monomial, Scalar] = {}
    rem: dict[Monomial, Scalar] = {}
    work = dict(p.terms)
    while work:
        mono = max(work, key=Monomial.key)
        coeff = work.pop(mono)
        if lead_mono.divides(mono):
            if isinstance(coeff, int) and isinstance(lead_coeff, int):
                factor: Scalar = (
                    coeff // lead_coeff
                    if coeff % lead_coeff == 0
                    else Fraction(coeff, lead_coeff)
                )
            else:
                factor = _normalize_scalar(Fraction(coeff) / Fraction(lead_coeff))
            if isinstance(factor, Fraction):
                # divisor leading coefficient does not divide: park in remainder
                rem[mono] = coeff
                continue
            shift = mono.quotient_by(lead_mono)
            quo[shift] = quo.get(shift, 0) + factor
            for m2, c2 in d.terms.items():
                if m2 == lead_mono:
                    continue
                key = m2 * shift
                c = work.get(key, 0) - factor * c2
                if c:
                    work[key] = c
                else:
                    work.pop(key, None)
        else:
            rem[mono] = coeff
    return MPoly(p.n, quo), MPoly(p.n, rem)


def exact_div(p: MPoly, d: MPoly) -> MPoly:
    """Divide exactly, raising :class:`NonPolynomialError` on a remainder."""
    quo, rem = divmod_poly(p, d)
    if not rem.is_zero():
        raise NonPolynomialError(f"{d} does not divide exactly (remainder {rem})")
    return quo


# -- q,t building blocks -------------------------------------------------------


def one_minus_qt(a: int, b: int, n: int = 0) -> MPoly:
    """The binomial 1 - q^a t^b in ambient n."""
    return MPoly.one(n) - MPoly.monomial(n, q=a, t=b)


def pochhammer_tt(m: int, n: int = 0) -> MPoly:
    """(t;t)_m = prod_{i=1..m} (1 - t^i); the empty product for m = 0."""
    if m < 0:
        raise ValueError("negative Pochhammer index")
    result = MPoly.one(n)
    for i in range(1, m + 1):
        result = result * one_minus_qt(0, i, n)
    return result


def gaussian_binomial(m: int, k: int, n: int = 0) -> MPoly:
    """t-binomial coefficient (m choose k)_t, computed by exact division."""
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got ({m}, {k})")
    num = pochhammer_tt(m, n)
    den = pochhammer_tt(k, n) * pochhammer_tt(m - k, n)
    return exact_div(num, den)


def t_multinomial(total: int, parts: Sequence[int], n: int = 0) -> MPoly:
    """Gaussian multinomial (total choose parts)_t as an honest polynomial.

    Computed as a telescoping product of Gaussian binomials, each by exact
    division; a zero remainder is guaranteed and enforced.
    """
    parts = list(parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    result = MPoly.one(n)
    acc = 0
    for p in parts:
        acc += p
        result = result * gaussian_binomial(acc, p, n)
    return result


# -- factored q,t-rational functions -------------------------------------------


class QtFactor(NamedTuple):
    """Denominator factor 1 - q^a t^b with b >= 1 (never zero as a polynomial)."""

    a: int
    b: int

    def poly(self, n: int = 0) -> MPoly:
        return one_minus_qt(self.a, self.b, n)


def _reduce(num: MPoly, den: tuple[QtFactor, ...]) -> tuple[MPoly, tuple[QtFactor, ...]]:
    if num.is_zero():
        return num, ()
    remaining = list(den)
    progress = True
    while progress and remaining:
        progress = False
        for i, f in enumerate(remaining):
            quo, rem = divmod_poly(num, f.poly())
            if rem.is_zero():
                num = quo
                del remaining[i]
                progress = True
                break
    return num, tuple(sorted(remaining))


class QtRational:
    """Element of Z[q,t] localized at the binomials 1 - q^a t^b.

    The denominator is a multiset of :class:`QtFactor`; construction reduces
    to a fixpoint by exact division, so equal values usually have equal parts
    (equality still cross-multiplies to be safe).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: Iterable[QtFactor] = ()):
        if num.n != 0:
            raise DimensionError("QtRational numerators are q,t-only (n = 0)")
        den = tuple(QtFactor(*f) for f in den)
        for f in den:
            if f.b < 1 or f.a < 0:
                raise ValueError(f"invalid denominator factor {f}")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def from_int(cls, c: Scalar) -> "QtRational":
        return cls(MPoly.const(0, c))

    @classmethod
    def zero(cls) -> "QtRational":
        return cls(MPoly.zero(0))

    @classmethod
    def one(cls) -> "QtRational":
        return cls.from_int(1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __mul__(self, other: "QtRational | MPoly | Scalar") -> "QtRational":
        if isinstance(other, (int, Fraction)):
            other = QtRational.from_int(other)
        elif isinstance(other, MPoly):
            other = QtRational(other)
        return QtRational(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __add__(self, other: "QtRational") -> "QtRational":
        if isinstance(other, (int, Fraction)):
            other = QtRational.from_int(other)
        from collections import Counter

        mine, theirs = Counter(self.den), Counter(other.den)
        lcm = mine | theirs
        num = self.num
        for f, mult in (lcm - mine).items():
            for _ in range(mult):
                num = num * f.poly()
        onum = other.num
        for f, mult in (lcm - theirs).items():
            for _ in range(mult):
                onum = onum * f.poly()
        return QtRational(num + onum, tuple(lcm.elements()))

    def __neg__(self) -> "QtRational":
        out = QtRational.__new__(QtRational)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other: "QtRational") -> "QtRational":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QtRational.from_int(other)
        if not isinstance(other, QtRational):
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        left = self.num
        for f in other.den:
            left = left * f.poly()
        right = other.num
        for f in self.den:
            right = right * f.poly()
        return left == right

    def __hash__(self):
        raise TypeError("QtRational is not hashable (compare by value)")

    def to_polynomial(self) -> MPoly:
        """Extract the numerator when the denominator has fully cancelled."""
        if self.den:
            raise NonPolynomialError(
                f"denominator factors {self.den} survive reduction"
            )
        return self.num

    def specialize(self, q: Scalar | str = KEEP, t: Scalar | str = KEEP):
        """Evaluate q and/or t.

        Both given: returns an exact scalar.  q=0 with t kept: returns a new
        QtRational (every factor with a > 0 becomes 1).  Other partial
        substitutions would break the factored-denominator form.
        """
        if q is not KEEP and t is not KEEP:
            den_val: Scalar = 1
            for f in self.den:
                den_val *= 1 - Fraction(q) ** f.a * Fraction(t) ** f.b
            if den_val == 0:
                raise EvaluationError(f"denominator vanishes at q={q}, t={t}")
            num_val = self.num.specialize(q=q, t=t).constant_term()
            return _normalize_scalar(Fraction(num_val) / Fraction(den_val))
        if q == 0 and t is KEEP:
            return QtRational(
                self.num.specialize(q=0), [f for f in self.den if f.a == 0]
            )
        if q is KEEP and t is KEEP:
            return self
        raise ValueError("unsupported partial substitution for QtRational")

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        den = "*".join(
            f"(1-q^{f.a}*t^{f.b})".replace("q^1*", "q*").replace("t^1)", "t)").replace("q^0*", "")
            for f in sorted(self.den)
        )
        return f"({self.num}) / {den}"

    __repr__ = __str__
