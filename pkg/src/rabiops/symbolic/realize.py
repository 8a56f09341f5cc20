"""Bridges between the symbolic engine and truncated matrices."""
from __future__ import annotations

import numpy as np

from ..hilbert import Space
from ..operators import Op, identity, ladder, spin
from ..params import ModelParams, derive
from .engine import DEFINITIONS, named
from .parser import Add, Atom, Comm, Expr, Mul, Neg, Num, Pow, parse
from .rewrite import Canonical


def realize(c: Canonical, space: Space, params: ModelParams) -> Op:
    """Matrix of a canonical form: sum coeff * ad^m a^n * spin."""
    a = ladder(space, "a").data
    ad = ladder(space, "ad").data
    spins = {"I": np.eye(space.dim, dtype=complex)}
    for s in ("sp", "sm", "sz"):
        spins[s] = spin(space, s).data
    out = np.zeros((space.dim, space.dim), dtype=complex)
    for (m, n, s), coeff in c.terms:
        z = coeff.evaluate(params.omega, params.omega0, params.g)
        mat = np.linalg.matrix_power(ad, m) @ np.linalg.matrix_power(a, n) @ spins[s]
        out += z * mat
    return Op(space, "realized", out)


def evaluate_numeric(e: Expr | str, space: Space, params: ModelParams) -> Op:
    """Multiply truncated matrices in the order written, with no reordering.

    This is the independent route against which :func:`realize` of the
    normal-ordered form is checked.
    """
    if isinstance(e, str):
        e = parse(e)
    d = derive(params)
    leaves = {
        "a": ladder(space, "a").data,
        "ad": ladder(space, "ad").data,
        "sp": spin(space, "sp").data,
        "sm": spin(space, "sm").data,
        "sz": spin(space, "sz").data,
    }
    one = identity(space).data
    scalars = {"omega": params.omega, "omega0": params.omega0, "g": params.g, "i": 1j,
               "alpha": d.alpha, "alphabar": d.alpha_bar}

    def ev(node):
        if isinstance(node, Num):
            return float(node.value) * one
        if isinstance(node, Atom):
            if node.name in leaves:
                return leaves[node.name]
            if node.name in scalars:
                return scalars[node.name] * one
            if node.name in DEFINITIONS or node.name == "HR":
                return ev(named(node.name))
            raise KeyError(node.name)
        if isinstance(node, Add):
            return sum(sign * ev(t) for sign, t in node.terms)
        if isinstance(node, Mul):
            out = ev(node.factors[0])
            for f in node.factors[1:]:
                out = out @ ev(f)
            return out
        if isinstance(node, Neg):
            return -ev(node.arg)
        if isinstance(node, Pow):
            base = ev(node.base)
            if node.exp < 0:
                return np.linalg.matrix_power(np.linalg.inv(base), -node.exp)
            return np.linalg.matrix_power(base, node.exp)
        if isinstance(node, Comm):
            x, y = ev(node.left), ev(node.right)
            return x @ y - y @ x
        raise TypeError(node)

    return Op(space, "direct", np.asarray(ev(e), dtype=complex))
