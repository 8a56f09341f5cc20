"""Normal-ordering term rewriting over the boson / spin-1/2 algebra.

Rewrite rules:

* boson letters and spin letters commute with each other;
* ``a ad -> ad a + 1`` applied to the leftmost offending pair until the boson
  word reads ``ad^m a^n``;
* spin words collapse pairwise through the spin-1/2 multiplication table onto
  the basis ``{I, sp, sm, sz}``.

Each boson swap removes one inversion and each spin step shortens the word, so
rewriting terminates; the normal form is unique.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeff import Coeff

SPIN_BASIS = ("I", "sp", "sm", "sz")
_HALF = Fraction(1, 2)

# (left, right) -> {basis element: coefficient}
SPIN_TABLE: dict[tuple[str, str], dict[str, Fraction]] = {
    ("sp", "sp"): {},
    ("sm", "sm"): {},
    ("sp", "sm"): {"I": _HALF, "sz": Fraction(1)},
    ("sm", "sp"): {"I": _HALF, "sz": Fraction(-1)},
    ("sz", "sp"): {"sp": _HALF},
    ("sp", "sz"): {"sp": -_HALF},
    ("sz", "sm"): {"sm": -_HALF},
    ("sm", "sz"): {"sm": _HALF},
    ("sz", "sz"): {"I": Fraction(1, 4)},
}

Key = tuple[int, int, str]  # (power of ad, power of a, spin)


def _key_order(key: Key):
    m, n, s = key
    return (m, n, SPIN_BASIS.index(s))


@lru_cache(maxsize=None)
def normal_order_boson_word(word: tuple[str, ...]) -> tuple[tuple[tuple[int, int], int], ...]:
    """Rewrite a boson word to ``sum c * ad^m a^n`` using ``a ad -> ad a + 1``.

    Returns ``((m, n), count)`` pairs with integer coefficients.
    """
    for i in range(len(word) - 1):
        if word[i] == "a" and word[i + 1] == "ad":
            swapped = word[:i] + ("ad", "a") + word[i + 2:]
            contracted = word[:i] + word[i + 2:]
            out: dict[tuple[int, int], int] = {}
            for part in (swapped, contracted):
                for mn, c in normal_order_boson_word(part):
                    out[mn] = out.get(mn, 0) + c
            return tuple(sorted((mn, c) for mn, c in out.items() if c))
    m = word.count("ad")
    return (((m, len(word) - m), 1),)


def reduce_spin_word(word: tuple[str, ...]) -> dict[str, Fraction]:
    acc: dict[str, Fraction] = {"I": Fraction(1)}
    for letter in word:
        nxt: dict[str, Fraction] = {}
        for s, c in acc.items():
            prod = {letter: Fraction(1)} if s == "I" else SPIN_TABLE[(s, letter)]
            for s2, c2 in prod.items():
                nxt[s2] = nxt.get(s2, Fraction(0)) + c * c2
        acc = {s: c for s, c in nxt.items() if c}
    return acc


def normal_order_word(word: tuple[str, ...]) -> dict[Key, Fraction]:
    """Normal-order an arbitrary word in ``a ad sp sm sz``."""
    bosons = tuple(x for x in word if x in ("a", "ad"))
    spins = tuple(x for x in word if x in ("sp", "sm", "sz"))
    if len(bosons) + len(spins) != len(word):
        raise ValueError(f"unknown letters in {word}")
    out: dict[Key, Fraction] = {}
    spin_part = reduce_spin_word(spins)
    for (m, n), c in normal_order_boson_word(bosons):
        for s, cs in spin_part.items():
            out[(m, n, s)] = out.get((m, n, s), Fraction(0)) + c * cs
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _product_key(k1: Key, k2: Key) -> tuple[tuple[Key, Fraction], ...]:
    m1, n1, s1 = k1
    m2, n2, s2 = k2
    word = ("ad",) * m1 + ("a",) * n1 + ("ad",) * m2 + ("a",) * n2
    spins = tuple(s for s in (s1, s2) if s != "I")
    return tuple(normal_order_word(word + spins).items())


class Canonical:
    """Normal-ordered sum ``sum coeff * ad^m a^n * spin`` sorted by ``(m, n, spin)``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Key, Coeff] | None = None):
        clean = {k: Coeff.coerce(c) for k, c in (terms or {}).items()}
        self._terms = {k: clean[k] for k in sorted(clean, key=_key_order) if not clean[k].is_zero()}

    @classmethod
    def scalar(cls, c) -> "Canonical":
        return cls({(0, 0, "I"): Coeff.coerce(c)})

    @classmethod
    def letter(cls, name: str) -> "Canonical":
        if name == "a":
            return cls({(0, 1, "I"): Coeff.const(1)})
        if name == "ad":
            return cls({(1, 0, "I"): Coeff.const(1)})
        if name in ("sp", "sm", "sz"):
            return cls({(0, 0, name): Coeff.const(1)})
        raise ValueError(f"unknown operator letter {name!r}")

    @property
    def terms(self) -> tuple[tuple[Key, Coeff], ...]:
        return tuple(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(k == (0, 0, "I") for k in self._terms)

    def scalar_part(self) -> Coeff:
        return self._terms.get((0, 0, "I"), Coeff())

    def __eq__(self, other) -> bool:
        return isinstance(other, Canonical) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "Canonical") -> "Canonical":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return Canonical(out)

    def __neg__(self) -> "Canonical":
        return Canonical({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Canonical") -> "Canonical":
        return self + (-other)

    def scale(self, c) -> "Canonical":
        c = Coeff.coerce(c)
        return Canonical({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: "Canonical") -> "Canonical":
        out: dict[Key, Coeff] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                c12 = c1 * c2
                for k, q in _product_key(k1, k2):
                    term = c12 * q
                    out[k] = out[k] + term if k in out else term
        return Canonical(out)

    def adjoint(self) -> "Canonical":
        """Formal adjoint: ad <-> a, sp <-> sm, conjugated coefficients."""
        flip = {"I": "I", "sp": "sm", "sm": "sp", "sz": "sz"}
        return Canonical({(n, m, flip[s]): c.conj() for (m, n, s), c in self._terms.items()})

    def format(self) -> str:
        """Print in the parser's own syntax, highest-order terms first."""
        if not self._terms:
            return "0"
        parts = []
        for (m, n, s), c in reversed(list(self._terms.items())):
            ops = []
            if m:
                ops.append("ad" if m == 1 else f"ad^{m}")
            if n:
                ops.append("a" if n == 1 else f"a^{n}")
            if s != "I":
                ops.append(s)
            parts.append(_format_term(c, "*".join(ops)))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Canonical({self.format()!r})"


def _format_term(c: Coeff, ops: str) -> str:
    text = c.format()
    if not ops:
        return text if c.is_monomial() else f"({text})"
    if not c.is_monomial():
        return f"({text})*{ops}"
    if text == "1":
        return ops
    if text == "-1":
        return f"-{ops}"
    return f"{text}*{ops}"
