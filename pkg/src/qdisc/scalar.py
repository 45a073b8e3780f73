"""Exact scalar arithmetic for the quantum disc tower.

Every coefficient in this package is an element of Q(s), the field of
rational functions in one indeterminate ``s`` with arbitrary-precision
rational coefficients.  The deformation parameter ``q`` is ``s**2``, so
half-integer powers of ``q`` stay polynomial.  On top of Q(s) sits
:class:`TSeries`, a power series in a second formal parameter ``t``
truncated at a run-wide order.

There is no floating point anywhere: numeric instantiation substitutes an
exact rational for ``s`` and returns a :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union


# ---------------------------------------------------------------------------
# sparse univariate polynomials over Q: {exponent: Fraction}, no zero values
# ---------------------------------------------------------------------------

_F0 = Fraction(0)
_F1 = Fraction(1)


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, _F0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def _pneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _psub(a: dict, b: dict) -> dict:
    return _padd(a, _pneg(b))


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e, _F0) + ca * cb
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def _pscale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _pdeg(a: dict) -> int:
    return max(a) if a else -1


def _pval(a: dict) -> int:
    return min(a) if a else 0


def _pmonic(a: dict) -> dict:
    if not a:
        return {}
    lc = a[max(a)]
    if lc == 1:
        return dict(a)
    return {e: c / lc for e, c in a.items()}


def _pmod(a: dict, b: dict) -> dict:
    # b must be nonzero; remainder of Euclidean division
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        factor = r[dr] / lb
        shift = dr - db
        for e, c in b.items():
            e2 = e + shift
            v = r.get(e2, _F0) - factor * c
            if v:
                r[e2] = v
            elif e2 in r:
                del r[e2]
    return r


def _pdivmod(a: dict, b: dict) -> tuple[dict, dict]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = max(b)
    lb = b[db]
    q: dict = {}
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        factor = r[dr] / lb
        shift = dr - db
        q[shift] = q.get(shift, _F0) + factor
        for e, c in b.items():
            e2 = e + shift
            v = r.get(e2, _F0) - factor * c
            if v:
                r[e2] = v
            elif e2 in r:
                del r[e2]
    return q, r


def _pgcd(a: dict, b: dict) -> dict:
    """Monic gcd; Euclid with monic remainders to keep coefficients tame."""
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    # monomial fast path: gcd(p, c*s^k) = s^min(val p, k)
    if len(a) == 1 or len(b) == 1:
        e = min(_pval(a), _pval(b))
        return {e: _F1}
    a, b = _pmonic(a), _pmonic(b)
    while b:
        a, b = b, _pmonic(_pmod(a, b))
    return a


def _peval(a: dict, x: Fraction) -> Fraction:
    total = _F0
    for e, c in a.items():
        total += c * x**e
    return total


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _pstr(a: dict) -> str:
    """Canonical text: terms by ascending power of s, sign-aware joins."""
    if not a:
        return "0"
    parts = []
    for e in sorted(a):
        c = a[e]
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _frac_str(mag)
        else:
            var = "s" if e == 1 else f"s^{e}"
            body = var if mag == 1 else f"{_frac_str(mag)}*{var}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# QScalar: the field Q(s), q = s^2
# ---------------------------------------------------------------------------

_ONE_P = {0: _F1}

ScalarLike = Union["QScalar", int, Fraction]


class QScalar:
    """A rational function in ``s`` over Q, kept in canonical form.

    Canonical means: gcd(numerator, denominator) = 1, denominator monic and
    nonzero, zero stored as 0/1.  Equality is therefore plain syntactic
    comparison.  Values are immutable; all arithmetic returns new objects.
    Conjugation is the identity (the coefficient field models real-valued
    functions of real q), so the algebra involutions never touch scalars.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: dict, den: dict | None = None, _canonical: bool = False):
        if den is None:
            den = _ONE_P
        if _canonical:
            self.num = num
            self.den = den
            self._hash = None
            return
        if not den:
            raise ZeroDivisionError("QScalar with zero denominator")
        if not num:
            self.num = {}
            self.den = _ONE_P
            self._hash = None
            return
        if den == _ONE_P:
            self.num = dict(num)
            self.den = _ONE_P
        else:
            g = _pgcd(num, den)
            if _pdeg(g) > 0 or _pval(g) > 0:
                num, _ = _pdivmod(num, g)
                den, _ = _pdivmod(den, g)
            lc = den[max(den)]
            if lc != 1:
                inv = 1 / lc
                num = _pscale(num, inv)
                den = _pscale(den, inv)
            self.num = num
            self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "QScalar":
        return QScalar({0: Fraction(n)} if n else {})

    @staticmethod
    def from_fraction(c: Fraction) -> "QScalar":
        return QScalar({0: Fraction(c)} if c else {})

    @staticmethod
    def s_power(n: int) -> "QScalar":
        """s**n, with negative n landing in the denominator."""
        if n >= 0:
            return QScalar({n: _F1}, None, _canonical=True)
        return QScalar(dict(_ONE_P), {-n: _F1}, _canonical=True)

    @staticmethod
    def q_power(n: int) -> "QScalar":
        """q**n = s**(2n)."""
        return QScalar.s_power(2 * n)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE_P and self.den == _ONE_P

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: ScalarLike) -> "QScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if self.den == _ONE_P:
                return QScalar(num, None, _canonical=True)
            return QScalar(num, self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return QScalar(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other: ScalarLike) -> "QScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: ScalarLike) -> "QScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other: ScalarLike) -> "QScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _ONE_P and other.den == _ONE_P:
            return QScalar(_pmul(self.num, other.num), None, _canonical=True)
        return QScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "QScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("QScalar division by zero")
        return QScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other: ScalarLike) -> "QScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int) -> "QScalar":
        if n < 0:
            return (ONE / self) ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))
            self._hash = h
        return h

    # -- output -------------------------------------------------------------

    def __str__(self) -> str:
        if self.den == _ONE_P:
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    def __repr__(self) -> str:
        return f"QScalar({self})"


def _coerce(x) -> "QScalar":
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return QScalar.from_int(x)
    if isinstance(x, Fraction):
        return QScalar.from_fraction(x)
    return NotImplemented


ZERO = QScalar({})
ONE = QScalar.from_int(1)
S = QScalar.s_power(1)
Q = QScalar.q_power(1)


def qpochhammer(a: ScalarLike, base_exponent: int, n: int) -> QScalar:
    """The shifted factorial prod_{i<n} (1 - a * q**(base_exponent*i)).

    ``base_exponent`` may be negative; ``n`` must be >= 0 (n = 0 gives 1).
    """
    if n < 0:
        raise ValueError("qpochhammer needs n >= 0")
    a = _coerce(a)
    out = ONE
    for i in range(n):
        out = out * (ONE - a * QScalar.q_power(base_exponent * i))
    return out


def eval_numeric(x: QScalar, s0: Fraction) -> Fraction:
    """Substitute the exact rational s0 for s.  Raises on a pole."""
    s0 = Fraction(s0)
    den = _peval(x.den, s0)
    if den == 0:
        raise ZeroDivisionError(f"pole at s = {s0}")
    return _peval(x.num, s0) / den


# ---------------------------------------------------------------------------
# TSeries: truncated power series in t over Q(s)
# ---------------------------------------------------------------------------


class TSeries:
    """A power series in the formal parameter t, truncated at t**order.

    ``coeffs[n]`` is the coefficient of t**n; the tuple always has
    ``order + 1`` entries.  All arithmetic is modulo t**(order+1) and the
    order is fixed per run: combining series of different orders raises
    rather than silently truncating to the shorter one.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[QScalar], order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def zero(order: int) -> "TSeries":
        return TSeries((ZERO,) * (order + 1), order)

    @staticmethod
    def one(order: int) -> "TSeries":
        return TSeries((ONE,) + (ZERO,) * order, order)

    @staticmethod
    def constant(c: ScalarLike, order: int) -> "TSeries":
        return TSeries((_coerce(c),) + (ZERO,) * order, order)

    @staticmethod
    def geometric(c: ScalarLike, order: int) -> "TSeries":
        """1 / (1 - c*t) truncated: coefficients 1, c, c^2, ..."""
        c = _coerce(c)
        coeffs = [ONE]
        for _ in range(order):
            coeffs.append(coeffs[-1] * c)
        return TSeries(coeffs, order)

    @staticmethod
    def from_rational(num: Sequence[ScalarLike], den: Sequence[ScalarLike], order: int) -> "TSeries":
        """Taylor expansion of num(t)/den(t); den must not vanish at t = 0."""
        num_c = [_coerce(c) for c in num]
        den_c = [_coerce(c) for c in den]
        if not den_c or den_c[0].is_zero():
            raise ValueError("denominator vanishes at t = 0: not a formal power series")
        n = TSeries([num_c[i] if i < len(num_c) else ZERO for i in range(order + 1)], order)
        d = TSeries([den_c[i] if i < len(den_c) else ZERO for i in range(order + 1)], order)
        return n * d.inverse()

    def _check(self, other: "TSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    def constant_term(self) -> QScalar:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, TSeries):
            self._check(other)
            return TSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        head = (self.coeffs[0] + c,) + self.coeffs[1:]
        return TSeries(head, self.order)

    __radd__ = __add__

    def __neg__(self):
        return TSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, TSeries):
            self._check(other)
            return TSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)
        return self.__add__(-_coerce(other))

    def __mul__(self, other):
        if isinstance(other, TSeries):
            self._check(other)
            out = [ZERO] * (self.order + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j in range(self.order + 1 - i):
                    b = other.coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return TSeries(out, self.order)
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return TSeries(tuple(a * c for a in self.coeffs), self.order)

    __rmul__ = __mul__

    def inverse(self) -> "TSeries":
        """Multiplicative inverse mod t**(order+1); constant term must be nonzero."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ValueError("TSeries with zero constant term has no inverse")
        inv0 = ONE / c0
        out = [inv0] + [ZERO] * self.order
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                ck = self.coeffs[k]
                if not ck.is_zero():
                    acc = acc + ck * out[n - k]
            out[n] = -inv0 * acc
        return TSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TSeries):
            self._check(other)
            return self * other.inverse()
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self * (ONE / c)

    def tshift(self, j: int) -> "TSeries":
        """Multiply by t**j, dropping what falls past the truncation order."""
        if j < 0:
            raise ValueError("tshift needs j >= 0")
        if j == 0:
            return self
        out = (ZERO,) * min(j, self.order + 1) + self.coeffs[: max(self.order + 1 - j, 0)]
        return TSeries(out, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            tpow = "" if n == 0 else ("*t" if n == 1 else f"*t^{n}")
            parts.append(f"({c}){tpow}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TSeries[{self.order}]({self})"
