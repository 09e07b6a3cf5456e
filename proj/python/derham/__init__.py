"""Exact de Rham complexes of piecewise polynomial algebras on polyhedra.

Thin wrapper over the C++ core. Structured inputs and outputs are plain
dicts/lists matching the CLI JSON schemas; exact rational values are returned
as :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

try:
    from . import _derham
except ImportError:  # running against a build tree, module next to the package
    import _derham

__all__ = [
    "validate",
    "betti",
    "pair",
    "xi",
    "witness",
    "h0",
    "stokes",
]


def validate(polyhedron):
    """Check the polyhedron axioms. Returns {"valid": bool, "violations": [...]}."""
    return json.loads(_derham.validate(json.dumps(polyhedron)))


def betti(polyhedron, mode="simplicial", max_degree=3):
    """Betti report, either simplicial or truncated piecewise de Rham."""
    if mode == "simplicial":
        return json.loads(_derham.betti_simplicial(json.dumps(polyhedron)))
    if mode == "derham":
        return json.loads(_derham.betti_derham(json.dumps(polyhedron), max_degree))
    raise ValueError("mode must be 'simplicial' or 'derham'")


def pair(form, chain):
    """Exact integral of a polynomial form over an affine chain."""
    return Fraction(_derham.pair(json.dumps(form), json.dumps(chain)))


def xi(algebra, form, chain):
    """Pair an algebraic form with a chain lying in the variety."""
    return Fraction(
        _derham.xi(json.dumps(algebra), json.dumps(form), json.dumps(chain))
    )


def witness(n, max_degree=6):
    """Non-exactness report for the n-torus witness form."""
    return json.loads(_derham.witness(n, max_degree))


def h0(polyhedron):
    """Compare dim H^0 with the number of connected components."""
    return json.loads(_derham.h0(json.dumps(polyhedron)))


def stokes(form, chain):
    """Both sides of the Stokes identity, as exact Fractions."""
    rep = json.loads(_derham.stokes(json.dumps(form), json.dumps(chain)))
    rep["integral_d_form"] = Fraction(rep["integral_d_form"])
    rep["integral_boundary"] = Fraction(rep["integral_boundary"])
    return rep
