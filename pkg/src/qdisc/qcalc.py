"""First-order differential calculus on the quantum disc.

The calculus is generated by the one-forms dz, dzs and the four bimodule
relations

    z * dz  = q^-2 dz * z        zs * dz  = q^2  dz * zs
    z * dzs = q^-2 dzs * z       zs * dzs = q^2  dzs * zs

Partial derivatives are read off by writing d(monomial) with the Leibniz
rule and pushing each differential letter to the far right (for the
right-handed derivatives) or far left (left-handed) one swap at a time.
That rewriting is the source of truth here; no closed-form coefficient
formulas are assumed.

On top of the derivatives sit the second-order operator ``box`` (the
q-deformed Laplace-Beltrami operator of the disc), its lift ``box_tilde``
to the tensor square, and the multiplication map ``m0``.
"""

from __future__ import annotations

from .qpoly import NCPoly, TensorPoly, nc_mul
from .scalar import ONE, QScalar

# cost of swapping a differential letter rightward past a generator:
#   dz * z   -> q^2  z  * dz        dz * zs  -> q^-2 zs * dz
#   dzs * z  -> q^2  z  * dzs       dzs * zs -> q^-2 zs * dzs
# (each line is one of the four bimodule relations read right-to-left)
_RIGHT_COST = {"z": QScalar.q_power(2), "zs": QScalar.q_power(-2)}
_LEFT_COST = {"z": QScalar.q_power(-2), "zs": QScalar.q_power(2)}


def _push_through(letters: tuple, coeff: QScalar, costs: dict) -> tuple:
    """Move one differential past a run of generators, one swap at a time."""
    for g in letters:
        coeff = coeff * costs[g]
    return coeff


def d_partial(f: NCPoly, side: str, variable: str) -> NCPoly:
    """One of the four partial derivatives of the calculus.

    ``side`` is "right" or "left" (which defining expansion of df the
    coefficient is read from), ``variable`` is "z" or "zstar".
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    if variable not in ("z", "zstar"):
        raise ValueError(f"variable must be 'z' or 'zstar', got {variable!r}")
    out = NCPoly.zero()
    wrt_z = variable == "z"
    costs = _RIGHT_COST if side == "right" else _LEFT_COST
    for (j, k), c in f.terms.items():
        word = ("z",) * j + ("zs",) * k
        # d(word): one term per letter equal to the differential variable
        for pos, letter in enumerate(word):
            if (letter == "z") != wrt_z:
                continue
            rest = word[:pos] + word[pos + 1 :]
            if side == "right":
                coeff = _push_through(word[pos + 1 :], c, costs)
            else:
                coeff = _push_through(word[:pos], c, costs)
            # removing one letter from a sorted word leaves it sorted
            jj = rest.count("z")
            out = out + NCPoly.monomial(jj, len(rest) - jj, coeff)
    return out


# (1 - z*zs)^2, the weight that makes box second order
_W = NCPoly.one() - NCPoly.monomial(1, 1)
_W2 = nc_mul(_W, _W)
_Q2 = QScalar.q_power(2)

# middle factor of box_tilde: q^-2 (1(x)1 - (1+q^-2) zs(x)z + q^-2 zs^2(x)z^2)
_MID = TensorPoly(
    {
        (0, 0, 0, 0): QScalar.q_power(-2),
        (0, 1, 1, 0): -(ONE + QScalar.q_power(-2)) * QScalar.q_power(-2),
        (0, 2, 2, 0): QScalar.q_power(-4),
    }
)


def box(f: NCPoly) -> NCPoly:
    """The invariant second-order operator (1 - z zs)^2 d_zs d_z (left form).

    Both defining expressions are evaluated, the left-weighted one with
    left derivatives and q^2 times the right-derivative form weighted on
    the right; they must agree, and a disagreement (impossible unless the
    calculus itself is broken) raises.
    """
    left_inner = d_partial(f, "left", "z")
    left_outer = d_partial(left_inner, "left", "zstar")
    left_form = nc_mul(_W2, left_outer)

    right_inner = d_partial(f, "right", "z")
    right_outer = d_partial(right_inner, "right", "zstar")
    right_form = nc_mul(right_outer, _W2).scale(_Q2)

    if left_form != right_form:
        raise RuntimeError("the two defining forms of box disagree")
    return left_form


def box_tilde(F: TensorPoly) -> TensorPoly:
    """Lift of box to the tensor square.

    Term by term:  (d^(r)f1/dzs (x) 1) * MID * (1 (x) d^(l)f2/dz)  with the
    fixed middle factor MID = q^-2 (1(x)1 - (1+q^-2) zs(x)z + q^-2 zs^2(x)z^2),
    products taken leg-wise.
    """
    out: dict = {}
    for (j1, k1, j2, k2), c in F.terms.items():
        da = d_partial(NCPoly.monomial(j1, k1), "right", "zstar")
        if da.is_zero():
            continue
        db = d_partial(NCPoly.monomial(j2, k2), "left", "z")
        if db.is_zero():
            continue
        for (a1, b1, a2, b2), w in _MID.terms.items():
            left = nc_mul(da, NCPoly.monomial(a1, b1))
            right = nc_mul(NCPoly.monomial(a2, b2), db)
            cw = c * w
            for (lj, lk), cl in left.terms.items():
                for (rj, rk), cr in right.terms.items():
                    key = (lj, lk, rj, rk)
                    v = cw * cl * cr
                    prev = out.get(key)
                    v = v if prev is None else prev + v
                    if v.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = v
    return TensorPoly(out)


def m0(F: TensorPoly) -> NCPoly:
    """Multiply the two tensor legs back together."""
    out = NCPoly.zero()
    for (j1, k1, j2, k2), c in F.terms.items():
        prod = nc_mul(NCPoly.monomial(j1, k1), NCPoly.monomial(j2, k2))
        out = out + prod.scale(c)
    return out
