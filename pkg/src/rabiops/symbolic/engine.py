"""Evaluation of expression trees to canonical normal-ordered form."""
from __future__ import annotations

from fractions import Fraction

from .coeff import Coeff
from .parser import (
    NAMED_ATOMS,
    OPERATOR_ATOMS,
    Add,
    Atom,
    Comm,
    Expr,
    Mul,
    Neg,
    Num,
    Pow,
    parse,
)
from .rewrite import Canonical

# Operator definitions with hbar = 1.
DEFINITIONS = {
    "N": "ad*a + sp*sm",
    "Nbar": "a*ad + sm*sp",
    "A": "alpha*sz + a*sp + ad*sm",
    "Abar": "alphabar*sz + a*sm + ad*sp",
    "H": "omega*N + 2*g*(alpha*sz + a*sp + ad*sm) - 1/2*omega",
    "Hbar": "omega*Nbar + 2*g*(alphabar*sz + a*sm + ad*sp) - 1/2*omega",
    "H_1c": "omega*ad*a + omega0*sz + 2*g*(a*sp + ad*sm)",
    "Hbar_1d": "omega*a*ad + omega0*sz + 2*g*(a*sm + ad*sp)",
    "H_3f": "omega*A^2 + 2*g*A - 1/4*omega*alpha^2 - 1/2*omega",
    "Hbar_3f": "omega*Abar^2 + 2*g*Abar - 1/4*omega*alphabar^2 + 1/2*omega",
    "HR_1a": "1/2*omega*(ad*a + a*ad) + omega0*sz + g*(a + ad)*(sp + sm)",
}
NAMES = tuple(DEFINITIONS) + ("HR",)

_ALPHA = Coeff.symbol("omega0") * Coeff.symbol("g", -1) * Fraction(1, 2) \
    - Coeff.symbol("omega") * Coeff.symbol("g", -1) * Fraction(1, 2)
_ALPHA_BAR = Coeff.symbol("omega0") * Coeff.symbol("g", -1) * Fraction(1, 2) \
    + Coeff.symbol("omega") * Coeff.symbol("g", -1) * Fraction(1, 2)

_SCALARS = {
    "omega": Coeff.symbol("omega"),
    "omega0": Coeff.symbol("omega0"),
    "g": Coeff.symbol("g"),
    "i": Coeff.const(0, 1),
    "alpha": _ALPHA,
    "alphabar": _ALPHA_BAR,
}


def named(name: str, r: Fraction | int | str = 0) -> Expr:
    """Expression tree of a named operator; ``HR`` takes an exact chirality ``r``."""
    if name == "HR":
        r = Fraction(r)
        if not -1 <= r <= 1:
            raise ValueError("chirality out of range")
        return Num((1 + r) / 2) * Atom("H") + Num((1 - r) / 2) * Atom("Hbar")
    if name not in DEFINITIONS:
        raise KeyError(f"unknown named operator {name!r}; expected one of {NAMES}")
    return parse(DEFINITIONS[name])


def normal_order(e: Expr | str, env: dict[str, Expr] | None = None) -> Canonical:
    """Reduce an expression to its canonical normal-ordered form.

    ``env`` overrides the meaning of named atoms (used for fault injection).
    """
    if isinstance(e, str):
        e = parse(e)
    cache: dict[str, Canonical] = {}
    return _eval(e, env or {}, cache)


def _eval(e: Expr, env: dict, cache: dict) -> Canonical:
    if isinstance(e, Num):
        return Canonical.scalar(e.value)
    if isinstance(e, Atom):
        name = e.name
        if name in OPERATOR_ATOMS:
            return Canonical.letter(name)
        if name in _SCALARS:
            return Canonical.scalar(_SCALARS[name])
        if name in env or name in NAMED_ATOMS or name in DEFINITIONS:
            if name not in cache:
                cache[name] = _eval(env[name] if name in env else named(name), env, cache)
            return cache[name]
        raise KeyError(f"unknown atom {name!r}")
    if isinstance(e, Add):
        out = Canonical()
        for sign, sub in e.terms:
            v = _eval(sub, env, cache)
            out = out + v if sign > 0 else out - v
        return out
    if isinstance(e, Mul):
        out = _eval(e.factors[0], env, cache)
        for f in e.factors[1:]:
            out = out * _eval(f, env, cache)
        return out
    if isinstance(e, Neg):
        return -_eval(e.arg, env, cache)
    if isinstance(e, Pow):
        base = _eval(e.base, env, cache)
        if e.exp < 0:
            if not base.is_scalar():
                raise ValueError("negative powers are only defined for scalar monomials")
            return Canonical.scalar(base.scalar_part() ** e.exp)
        out = Canonical.scalar(1)
        for _ in range(e.exp):
            out = out * base
        return out
    if isinstance(e, Comm):
        x, y = _eval(e.left, env, cache), _eval(e.right, env, cache)
        return x * y - y * x
    raise TypeError(f"not an expression node: {e!r}")


def _as_expr(e) -> Expr:
    return parse(e) if isinstance(e, str) else e


def is_zero(e, env=None) -> bool:
    return normal_order(e, env).is_zero()


def equal(e1, e2, env=None) -> bool:
    return normal_order(_as_expr(e1) - _as_expr(e2), env).is_zero()


def commutator_sym(e1, e2, env=None) -> Canonical:
    return normal_order(Comm(_as_expr(e1), _as_expr(e2)), env)
