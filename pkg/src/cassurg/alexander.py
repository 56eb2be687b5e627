"""Alexander polynomials and the derived surgery quantities.

Two independent routes are implemented:

* knots: the Seifert-matrix route, ``det(V - t V^T)`` normalized to the
  symmetric representative with value 1 at ``t = 1``;
* links (any number of components): the Wirtinger/Fox-calculus route over
  the multivariable Laurent ring.

For the Fox route the Alexander matrix has one row per crossing and one
column per generator.  Deleting the column of a designated generator and
one (redundant) row leaves a square minor whose determinant is, up to
units, ``Delta`` for knots and ``(t_j - 1) * Delta`` for links with at
least two components; the exact division by ``t_j - 1`` is performed in
the Laurent ring.  Unit normalization follows one canonical rule (lowest
exponents zero, lexicographically smallest monomial positive); the global
sign entering ``zeta`` is calibrated once so that the Borromean rings give
``zeta = +1``.
"""

from __future__ import annotations

from .algebra import LaurentPoly, poly_det, poly_eval_derivatives
from .braidform import seifert_matrix
from .diagram import DiagramError, FramedLinkDiagram
from .wirtinger import wirtinger

__all__ = ["alexander_knot", "half_ddelta1", "alexander_link", "zeta",
           "ZETA_SIGN", "seifert_matrix"]

# Calibration: fixed once against the Borromean-rings fixture, whose
# canonically normalized polynomial is -(t1 - 1)(t2 - 1)(t3 - 1).
ZETA_SIGN = -1


# ---------------------------------------------------------------------------
# Knots via the Seifert matrix
# ---------------------------------------------------------------------------

def alexander_knot(d: FramedLinkDiagram) -> LaurentPoly:
    """Alexander polynomial of a knot, symmetric with ``Delta(1) = 1``."""
    v = seifert_matrix(d)
    n = len(v)
    variables = ("t",)
    if n == 0:
        return LaurentPoly.constant(1, variables)
    t = LaurentPoly.var("t", variables)
    m = [[LaurentPoly.constant(v[i][j], variables) - t * v[j][i]
          for j in range(n)] for i in range(n)]
    p = poly_det(m)
    at_one = p.eval_at_ones()
    if at_one not in (1, -1):
        raise DiagramError(
            f"det(V - tV^T) evaluates to {at_one} at t=1; expected a unit")
    if at_one < 0:
        p = -p
    lo, = p.min_exponents()
    hi, = p.max_exponents()
    if (lo + hi) % 2:
        raise DiagramError("Alexander polynomial has odd exponent span")
    p = p.shift((-(lo + hi) // 2,))
    if p != p.invert_variables():
        raise DiagramError("normalized Alexander polynomial is not symmetric")
    return p


def half_ddelta1(d: FramedLinkDiagram) -> int:
    """Half the second derivative of the Alexander polynomial at 1.

    Always an integer for the symmetric normalization; a non-integral value
    signals a normalization bug and raises.
    """
    delta = alexander_knot(d)
    second = poly_eval_derivatives(delta, (2,))
    if second % 2:
        raise DiagramError(
            f"Delta''(1) = {second} is odd; normalization is broken")
    return second // 2


# ---------------------------------------------------------------------------
# Links via Wirtinger presentations and Fox calculus
# ---------------------------------------------------------------------------

def _fox_matrix(d: FramedLinkDiagram,
                variables: tuple[str, ...]) -> tuple[list[list[LaurentPoly]], int, int]:
    """Abelianized Fox Jacobian of the Wirtinger presentation.

    Returns (matrix rows=relations cols=generators, deleted generator index,
    its component).  Rows of the relation ``o^e s o^-e d^-1``:

        e = +1:  d/do = 1 - T_s        d/ds = T_o        d/dd = -1
        e = -1:  d/do = (T_s - 1)/T_o  d/ds = 1/T_o      d/dd = -1
    """
    p = wirtinger(d)
    m = p.n_generators()
    if m != len(d.crossings):
        raise DiagramError(
            "a component of the diagram never passes under another strand; "
            "the square Wirtinger matrix needs one underpass per generator")
    zero = LaurentPoly.constant(0, variables)
    one = LaurentPoly.constant(1, variables)

    def tvar(comp: int, exp: int = 1) -> LaurentPoly:
        e = tuple(exp if k == comp - 1 else 0 for k in range(len(variables)))
        return LaurentPoly(variables, {e: 1})

    rows: list[list[LaurentPoly]] = []
    for over, sign, src, dst in p.relation_data:
        row = [zero] * m
        t_s = tvar(p.gen_components[src - 1])
        if sign > 0:
            contrib = {over: one - t_s,
                       src: tvar(p.gen_components[over - 1])}
        else:
            t_o_inv = tvar(p.gen_components[over - 1], -1)
            contrib = {over: t_o_inv * (t_s - one),
                       src: t_o_inv}
        for gen, val in contrib.items():
            row[gen - 1] = row[gen - 1] + val
        row[dst - 1] = row[dst - 1] - one
        rows.append(row)
    drop_gen = p.meridians[0]
    return rows, drop_gen, p.gen_components[drop_gen - 1]


def alexander_link(d: FramedLinkDiagram) -> LaurentPoly:
    """Multivariable Alexander polynomial ``Delta(t1, ..., tn)``.

    Split (disconnected) diagrams return 0, matching the classical
    convention.  For one component the single variable is named ``t`` and
    the minor itself is the polynomial; for two or more the minor carries
    an extra factor ``t_j - 1`` which is divided out exactly.
    """
    n = d.n_components()
    if n < 1:
        raise DiagramError("diagram has no components")
    variables = ("t",) if n == 1 else tuple(f"t{k}" for k in range(1, n + 1))
    if not d.is_connected():
        return LaurentPoly.constant(0, variables)
    if not d.crossings:
        # connected with no crossings: the unknot
        return LaurentPoly.constant(1, variables)
    rows, drop_gen, drop_comp = _fox_matrix(d, variables)
    minor = [row[:drop_gen - 1] + row[drop_gen:] for row in rows[:-1]]
    if not minor:
        return LaurentPoly.constant(1, variables)
    delta = poly_det(minor)
    if n >= 2:
        try:
            delta = delta.div_exact_tj_minus_1(drop_comp - 1)
        except Exception as exc:
            raise DiagramError(
                f"Wirtinger minor is not divisible by (t{drop_comp} - 1); "
                "the presentation is inconsistent") from exc
    return delta.normalized()


def zeta(d: FramedLinkDiagram) -> int:
    """Mixed first partial of the multivariable Alexander polynomial at 1.

    Computed from the canonically normalized polynomial; the global sign is
    calibrated so that the standard Borromean rings give +1.
    """
    delta = alexander_link(d)
    raw = poly_eval_derivatives(delta, (1,) * len(delta.variables))
    return ZETA_SIGN * raw
