"""The quantum disc algebra in its normal-ordered basis.

Elements are finite sums  sum a_{jk} z^j zs^k  where ``zs`` denotes the
adjoint generator and the two generators satisfy the single commutation
relation  zs*z = q^2 z*zs + (1 - q^2).  Multiplication rewrites every
misordered ``zs z`` pair one swap at a time; since the normal-ordered
monomials form a basis, the normal form is unique regardless of rewrite
strategy, and the per-block results are memoized.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .scalar import ONE, QScalar, TSeries, ZERO, _coerce

# the two constants of the commutation relation zs*z = q^2 z*zs + (1 - q^2)
_Q2 = QScalar.q_power(2)
_ONE_MINUS_Q2 = ONE - _Q2

CoeffLike = Union[QScalar, int, Fraction]


class NCPoly:
    """An element of the quantum disc algebra, normal-ordered.

    ``terms`` maps (j, k) to the coefficient of z^j zs^k; zero coefficients
    are never stored, so the zero element has an empty map and equality is
    plain dict comparison.  Instances are immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms or {}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly({})

    @staticmethod
    def one() -> "NCPoly":
        return NCPoly({(0, 0): ONE})

    @staticmethod
    def monomial(j: int, k: int, coeff: CoeffLike = 1) -> "NCPoly":
        if j < 0 or k < 0:
            raise ValueError("monomial exponents must be >= 0")
        c = _coerce(coeff)
        if c.is_zero():
            return NCPoly({})
        return NCPoly({(j, k): c})

    @staticmethod
    def scalar(c: CoeffLike) -> "NCPoly":
        return NCPoly.monomial(0, 0, c)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
        return NCPoly(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: CoeffLike) -> "NCPoly":
        c = _coerce(c)
        if c.is_zero():
            return NCPoly({})
        return NCPoly({key: v * c for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return nc_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything; NCPoly * NCPoly goes via __mul__
        return self.scale(other)

    # -- involution and inspection -------------------------------------------

    def involution(self) -> "NCPoly":
        """The algebra involution: (z^j zs^k)* = z^k zs^j, scalars fixed."""
        return NCPoly({(k, j): c for (j, k), c in self.terms.items()})

    def coefficient(self, j: int, k: int) -> QScalar:
        return self.terms.get((j, k), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return self.terms.keys()

    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        return max((j + k for j, k in self.terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- canonical text -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for j, k in sorted(self.terms, key=lambda jk: (jk[0] + jk[1], jk[0])):
            parts.append(_term_str(j, k, self.terms[(j, k)]))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def _mono_str(j: int, k: int) -> str:
    factors = []
    if j:
        factors.append("z" if j == 1 else f"z^{j}")
    if k:
        factors.append("zs" if k == 1 else f"zs^{k}")
    return "*".join(factors)


def _term_str(j: int, k: int, c: QScalar) -> str:
    cs = str(c)
    wrapped = f"({cs})" if (" + " in cs or " - " in cs) else cs
    mono = _mono_str(j, k)
    if not mono:
        return wrapped
    if c.is_one():
        return mono
    if c == QScalar.from_int(-1):
        return f"-{mono}"
    return f"{wrapped}*{mono}"


# ---------------------------------------------------------------------------
# normal ordering
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _zstar_block_z(b: int) -> tuple:
    """Normal form of zs^b * z, moving the single z left one swap at a time."""
    if b == 0:
        return (((1, 0), ONE),)
    out: dict = {}
    # zs^b z = q^2 (zs^(b-1) z) zs + (1 - q^2) zs^(b-1)
    for (j, k), c in _zstar_block_z(b - 1):
        out[(j, k + 1)] = _Q2 * c
    key = (0, b - 1)
    prev = out.get(key)
    out[key] = _ONE_MINUS_Q2 if prev is None else prev + _ONE_MINUS_Q2
    return tuple(out.items())


@lru_cache(maxsize=None)
def _normal_block(b: int, c: int) -> tuple:
    """Normal form of zs^b * z^c as ((j, k), coeff) pairs."""
    if b == 0:
        return (((c, 0), ONE),)
    if c == 0:
        return (((0, b), ONE),)
    out: dict = {}
    for (j, k), w in _zstar_block_z(b):
        # zs^b z^c = sum w * z^j (zs^k z^(c-1))
        for (j2, k2), w2 in _normal_block(k, c - 1):
            key = (j + j2, k2)
            v = w * w2
            prev = out.get(key)
            v = v if prev is None else prev + v
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return tuple(out.items())


def nc_mul(f: NCPoly, g: NCPoly) -> NCPoly:
    """Product in the quantum disc algebra, result normal-ordered."""
    out: dict = {}
    for (a, b), ca in f.terms.items():
        for (c, d), cb in g.terms.items():
            coeff = ca * cb
            for (j, k), w in _normal_block(b, c):
                key = (a + j, k + d)
                v = coeff * w
                prev = out.get(key)
                v = v if prev is None else prev + v
                if v.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = v
    return NCPoly(out)


def involution(f: NCPoly) -> NCPoly:
    return f.involution()


def nc_mul_left_z_power(i: int, f: NCPoly) -> NCPoly:
    """z^i * f without rewriting: a holomorphic left factor only shifts j."""
    if i < 0:
        raise ValueError("power must be >= 0")
    if i == 0:
        return f
    return NCPoly({(j + i, k): c for (j, k), c in f.terms.items()})


def nc_mul_right_zstar_power(i: int, f: NCPoly) -> NCPoly:
    """f * zs^i without rewriting: an antiholomorphic right factor shifts k."""
    if i < 0:
        raise ValueError("power must be >= 0")
    if i == 0:
        return f
    return NCPoly({(j, k + i): c for (j, k), c in f.terms.items()})


Z = NCPoly.monomial(1, 0)
ZS = NCPoly.monomial(0, 1)


# ---------------------------------------------------------------------------
# tensor square
# ---------------------------------------------------------------------------


class TensorPoly:
    """An element of the tensor square of the quantum disc algebra.

    ``terms`` maps (j1, k1, j2, k2) to the coefficient of
    z^j1 zs^k1 (x) z^j2 zs^k2, each leg normal-ordered; no zeros stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms or {}

    @staticmethod
    def zero() -> "TensorPoly":
        return TensorPoly({})

    @staticmethod
    def from_polys(f: NCPoly, g: NCPoly) -> "TensorPoly":
        out = {}
        for (j1, k1), c1 in f.terms.items():
            for (j2, k2), c2 in g.terms.items():
                out[(j1, k1, j2, k2)] = c1 * c2
        return TensorPoly(out)

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
        return TensorPoly(out)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def scale(self, c: CoeffLike) -> "TensorPoly":
        c = _coerce(c)
        if c.is_zero():
            return TensorPoly({})
        return TensorPoly({key: v * c for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            return tensor_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def flip(self) -> "TensorPoly":
        """Swap the tensor legs."""
        return TensorPoly({(j2, k2, j1, k1): c for (j1, k1, j2, k2), c in self.terms.items()})

    def involution_each_leg(self) -> "TensorPoly":
        return TensorPoly({(k1, j1, k2, j2): c for (j1, k1, j2, k2), c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "TensorPoly(0)"
        bits = []
        for (j1, k1, j2, k2) in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[(j1, k1, j2, k2)]
            bits.append(f"({c})*[{_mono_str(j1, k1) or '1'} (x) {_mono_str(j2, k2) or '1'}]")
        return "TensorPoly(" + " + ".join(bits) + ")"


def tensor_mul(F: TensorPoly, G: TensorPoly) -> TensorPoly:
    """Leg-wise product on the tensor square."""
    out: dict = {}
    for (a1, b1, a2, b2), cf in F.terms.items():
        for (c1, d1, c2, d2), cg in G.terms.items():
            coeff = cf * cg
            left = _normal_block(b1, c1)
            right = _normal_block(b2, c2)
            for (j1, k1), w1 in left:
                cw = coeff * w1
                for (j2, k2), w2 in right:
                    key = (a1 + j1, k1 + d1, a2 + j2, k2 + d2)
                    v = cw * w2
                    prev = out.get(key)
                    v = v if prev is None else prev + v
                    if v.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = v
    return TensorPoly(out)


# ---------------------------------------------------------------------------
# windowed formal series
# ---------------------------------------------------------------------------


class WindowError(ValueError):
    """Raised when a windowed series is read outside its window."""


class WindowedSeries:
    """A formal series sum a_{jk}(t) z^j zs^k known only for j, k <= window.

    Berezin-type symbols of operators are genuine infinite series; an
    instance of this class is the honest finite restriction, and every
    comparison or read beyond the window is an error rather than a guess.
    Entries are t-series of one common truncation order.
    """

    __slots__ = ("window", "order", "entries")

    def __init__(self, window: int, order: int, entries: dict | None = None):
        self.window = window
        self.order = order
        self.entries = {}
        for (j, k), ts in (entries or {}).items():
            if j > window or k > window:
                raise WindowError(f"entry ({j},{k}) outside window {window}")
            if ts.order != order:
                raise ValueError("mixed truncation orders in WindowedSeries")
            if not ts.is_zero():
                self.entries[(j, k)] = ts

    def entry(self, j: int, k: int) -> TSeries:
        if j > self.window or k > self.window or j < 0 or k < 0:
            raise WindowError(f"({j},{k}) outside window {self.window}")
        got = self.entries.get((j, k))
        return got if got is not None else TSeries.zero(self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WindowedSeries):
            return NotImplemented
        return (
            self.window == other.window
            and self.order == other.order
            and self.entries == other.entries
        )

    def t_coefficient(self, n: int) -> NCPoly:
        """The NCPoly restriction of the t^n coefficient (window part only)."""
        out = {}
        for key, ts in self.entries.items():
            c = ts.coeffs[n]
            if not c.is_zero():
                out[key] = c
        return NCPoly(out)

    def __repr__(self) -> str:
        return f"WindowedSeries(window={self.window}, entries={len(self.entries)})"
