"""Sparse exact polynomials in the three census variables b3, r3, y.

A polynomial is stored as a mapping from exponent triples (i, j, k) to
nonzero rational coefficients, where a triple stands for the monomial
b3^i * r3^j * y^k.  Coefficients are `fractions.Fraction`, so all ring
operations and rational evaluations are exact.  The zero polynomial is
the empty mapping; canonical order of terms is lexicographic on the
exponent triple, which makes the serialized form unique (two polynomials
are equal iff their serialized forms are byte-identical).

Instances are immutable by convention: no public method mutates `self`,
and the internal term mapping is never handed out directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Exponent = tuple[int, int, int]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar (int or Fraction), got {type(value).__name__}")


class Poly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                i, j, k = exp
                if i < 0 or j < 0 or k < 0:
                    raise ValueError(f"negative exponent in {exp}")
                c = _as_fraction(coeff)
                if c:
                    clean[(int(i), int(j), int(k))] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(0, 0, 0): value})

    @classmethod
    def term(cls, coeff: Scalar, i: int = 0, j: int = 0, k: int = 0) -> "Poly":
        return cls({(i, j, k): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Terms in canonical (lexicographic) order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        return self._terms.get((i, j, k), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _wrap({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return ZERO
            return _wrap({exp: c * v for exp, v in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                exp = (i1 + i2, j1 + j2, k1 + k2)
                s = out.get(exp, Fraction(0)) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        return _wrap(out)

    __rmul__ = __mul__

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, u, v, w):
        """Evaluate at b3=u, r3=v, y=w.

        Exact when the inputs are int/Fraction; floating otherwise.
        """
        total = None
        for (i, j, k), c in self._terms.items():
            term = c * u**i * v**j * w**k
            total = term if total is None else total + term
        if total is None:
            return Fraction(0) if _all_exact(u, v, w) else 0.0
        return total

    def swap_colours(self) -> "Poly":
        """Exchange the roles of b3 and r3."""
        return _wrap({(j, i, k): c for (i, j, k), c in self._terms.items()})

    def blue_to_red(self) -> "Poly":
        """Substitute b3 -> r3 (exponents merge)."""
        out: dict[Exponent, Fraction] = {}
        for (i, j, k), c in self._terms.items():
            exp = (0, i + j, k)
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return _wrap(out)

    def red_to_blue(self) -> "Poly":
        """Substitute r3 -> b3 (exponents merge)."""
        out: dict[Exponent, Fraction] = {}
        for (i, j, k), c in self._terms.items():
            exp = (i + j, 0, k)
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return _wrap(out)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        """Canonical JSON form: a list of terms in lexicographic exponent order.

        Coefficients are serialized as rational strings so exactness survives
        the round trip.
        """
        return [
            {"i": i, "j": j, "k": k, "c": str(c)}
            for (i, j, k), c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json_obj(cls, data: Iterable[dict]) -> "Poly":
        terms: dict[Exponent, Fraction] = {}
        for entry in data:
            exp = (int(entry["i"]), int(entry["j"]), int(entry["k"]))
            if exp in terms:
                raise ValueError(f"duplicate exponent triple {exp}")
            terms[exp] = Fraction(entry["c"])
        return cls(terms)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j, k), c in sorted(self._terms.items()):
            factors = []
            for name, e in (("b3", i), ("r3", j), ("y", k)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(str(c) + "*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _wrap(terms: dict[Exponent, Fraction]) -> Poly:
    p = Poly.__new__(Poly)
    p._terms = terms
    return p


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return NotImplemented


def _all_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


ZERO = Poly()
ONE = Poly.const(1)
B3 = Poly.term(1, 1, 0, 0)
R3 = Poly.term(1, 0, 1, 0)
Y = Poly.term(1, 0, 0, 1)
