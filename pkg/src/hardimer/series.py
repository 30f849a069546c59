"""Truncated noncommutative power series over the census polynomial ring.

A series assigns a `Poly` coefficient to every word over {'b', 'r'} up to
a fixed truncation length.  Addition is termwise; multiplication is the
Cauchy product over all factorizations of a word; both are exact for all
words up to the truncation.  A series is *proper* when its empty-word
coefficient vanishes; the star S* = 1 + S + S^2 + ... of a proper series
is computed by the fixpoint iteration T <- 1 + S*T, which stabilizes on
words of length <= L after L rounds.

The distance between two series is 2^-kappa with kappa the length of the
shortest disagreeing word.  Truncation caps what the metric can see:
series that agree on all words up to the common truncation get distance 0.

`solve_recursive` and `solve_rational` both produce the census generating
series, split by the first letter of the word: the length-n coefficient
of closed_blue + closed_red on word w equals census(w) for every nonempty
w.  The recursive route builds homogeneous layers; the rational route
evaluates a closed form built from one-block series and a star.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .chdc import ALPHABET, BLUE, RED, validate_word
from .poly import B3, ONE, R3, Y, ZERO, Poly


class TruncatedSeries:
    __slots__ = ("max_len", "_coeffs")

    def __init__(self, max_len: int, coeffs: Mapping[str, Poly] | None = None):
        if max_len < 0:
            raise ValueError("truncation length must be nonnegative")
        self.max_len = max_len
        clean: dict[str, Poly] = {}
        if coeffs:
            for word, poly in coeffs.items():
                validate_word(word)
                if len(word) > max_len:
                    raise ValueError(f"word {word!r} exceeds truncation length {max_len}")
                if poly:
                    clean[word] = poly
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, max_len: int) -> "TruncatedSeries":
        return cls(max_len)

    @classmethod
    def one(cls, max_len: int) -> "TruncatedSeries":
        return cls(max_len, {"": ONE})

    @classmethod
    def letter(cls, colour: str, max_len: int) -> "TruncatedSeries":
        return cls(max_len, {colour: ONE})

    # -- inspection --------------------------------------------------------

    def coefficient(self, word: str) -> Poly:
        validate_word(word)
        if len(word) > self.max_len:
            raise ValueError(f"word {word!r} lies beyond the truncation length {self.max_len}")
        return self._coeffs.get(word, ZERO)

    @property
    def is_proper(self) -> bool:
        return "" not in self._coeffs

    def support(self) -> list[str]:
        """Words with nonzero coefficient, in length-then-lex order."""
        return sorted(self._coeffs, key=lambda w: (len(w), w))

    def items(self) -> Iterator[tuple[str, Poly]]:
        for w in self.support():
            yield w, self._coeffs[w]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.max_len == other.max_len and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        shown = ", ".join(f"{w or '1'}: {p}" for w, p in list(self.items())[:6])
        extra = "" if len(self._coeffs) <= 6 else f", ... ({len(self._coeffs)} terms)"
        return f"TruncatedSeries(L={self.max_len}, {{{shown}{extra}}})"

    # -- semiring operations -------------------------------------------------

    def _check_len(self, other: "TruncatedSeries") -> None:
        if self.max_len != other.max_len:
            raise ValueError(f"truncation lengths differ: {self.max_len} vs {other.max_len}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_len(other)
        out = dict(self._coeffs)
        for w, p in other._coeffs.items():
            s = out.get(w, ZERO) + p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return _wrap(self.max_len, out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_len(other)
        out = dict(self._coeffs)
        for w, p in other._coeffs.items():
            s = out.get(w, ZERO) - p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return _wrap(self.max_len, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy (concatenation) product, truncated."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_len(other)
        L = self.max_len
        out: dict[str, Poly] = {}
        for u, pu in self._coeffs.items():
            room = L - len(u)
            for v, pv in other._coeffs.items():
                if len(v) > room:
                    continue
                w = u + v
                s = out.get(w, ZERO) + pu * pv
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return _wrap(L, out)

    def __rmul__(self, scalar) -> "TruncatedSeries":
        """Left external multiplication by a ring element."""
        if isinstance(scalar, (int, Fraction)):
            scalar = Poly.const(scalar)
        if not isinstance(scalar, Poly):
            return NotImplemented
        out: dict[str, Poly] = {}
        if scalar:
            for w, p in self._coeffs.items():
                s = scalar * p
                if s:
                    out[w] = s
        return _wrap(self.max_len, out)

    def star(self) -> "TruncatedSeries":
        """Star of a proper series: fixpoint of T <- 1 + self * T."""
        if not self.is_proper:
            raise ValueError("star requires a proper series (zero empty-word coefficient)")
        T = TruncatedSeries.one(self.max_len)
        for _ in range(self.max_len):
            T = TruncatedSeries.one(self.max_len) + self * T
        return T

    def left_quotient(self, prefix: str) -> "TruncatedSeries":
        """Series of coefficients of prefix*x for all x; truncation shrinks by |prefix|."""
        validate_word(prefix)
        if len(prefix) > self.max_len:
            raise ValueError(f"prefix {prefix!r} exceeds truncation length {self.max_len}")
        L = self.max_len - len(prefix)
        out: dict[str, Poly] = {}
        for w, p in self._coeffs.items():
            if w.startswith(prefix):
                out[w[len(prefix):]] = p
        return _wrap(L, out)

    def truncate(self, max_len: int) -> "TruncatedSeries":
        if max_len > self.max_len:
            raise ValueError(f"cannot extend truncation {self.max_len} to {max_len}")
        return _wrap(max_len, {w: p for w, p in self._coeffs.items() if len(w) <= max_len})

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "max_len": self.max_len,
            "terms": [{"word": w, "poly": p.to_json_obj()} for w, p in self.items()],
        }

    @classmethod
    def from_json_obj(cls, data: dict) -> "TruncatedSeries":
        coeffs = {t["word"]: Poly.from_json_obj(t["poly"]) for t in data["terms"]}
        return cls(int(data["max_len"]), coeffs)


def _wrap(max_len: int, coeffs: dict[str, Poly]) -> TruncatedSeries:
    s = TruncatedSeries.__new__(TruncatedSeries)
    s.max_len = max_len
    s._coeffs = coeffs
    return s


def distance(a: TruncatedSeries, b: TruncatedSeries) -> Fraction:
    """Ultrametric distance 2^-kappa, kappa = shortest disagreement length.

    Series that agree on every word up to the common truncation get 0;
    a disagreement beyond the truncation is invisible by construction.
    """
    L = min(a.max_len, b.max_len)
    kappa: int | None = None
    for w in set(a._coeffs) | set(b._coeffs):
        if len(w) > L:
            continue
        if a._coeffs.get(w, ZERO) != b._coeffs.get(w, ZERO):
            if kappa is None or len(w) < kappa:
                kappa = len(w)
    if kappa is None:
        return Fraction(0)
    return Fraction(1, 2**kappa)


def block_series(colour: str, max_len: int) -> TruncatedSeries:
    """Series of a single leading block: a bare vertex or one complete dimer.

    For blue this is  b + b3*b^2 + b3*y * b (y r)* r b  -- a lone blue
    vertex, an adjacent blue dimer, or a blue dimer enclosing a run of
    inner red vertices, each inner vertex weighted by y.  The truncation
    of the rational expression is exact.
    """
    if colour not in (BLUE, RED):
        raise ValueError(f"invalid colour {colour!r}")
    other = RED if colour == BLUE else BLUE
    mark = B3 if colour == BLUE else R3
    c = TruncatedSeries.letter(colour, max_len)
    o = TruncatedSeries.letter(other, max_len)
    inner_run = (Y * o).star()  # 1 + y*o + y^2*o^2 + ...
    return c + mark * (c * c) + (mark * Y) * (c * o * inner_run * c)


@dataclass
class SeriesSystem:
    """Census series split by first letter (closed_*), plus, for the
    recursive route, the open-dimer remainder series (open_*).

    closed_blue collects words starting with 'b' weighted by their census;
    open_blue collects remainders of a blue dimer opened just before the
    word: a run of inner 'r' vertices, the closing 'b', then anything.
    Open remainders therefore start with 'r' whenever inner vertices are
    present.
    """

    closed_blue: TruncatedSeries
    closed_red: TruncatedSeries
    open_blue: TruncatedSeries | None = None
    open_red: TruncatedSeries | None = None

    @property
    def total(self) -> TruncatedSeries:
        return self.closed_blue + self.closed_red


def solve_recursive(max_len: int) -> SeriesSystem:
    """Build the census series layer by layer.

    Layer n holds the degree-n coefficients.  A closed word starting with
    'b' is a free vertex followed by anything, or a dimer opener followed
    by an open remainder (weight b3).  An open remainder closes after k
    inner vertices (weight y^k).  Layers below 1 are zero; layer 1 is the
    bare letter.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    L = max_len
    # Per-layer dictionaries word -> Poly, indexed 1..L.
    closed: dict[str, list[dict[str, Poly]]] = {c: [dict() for _ in range(L + 1)] for c in ALPHABET}
    opened: dict[str, list[dict[str, Poly]]] = {c: [dict() for _ in range(L + 1)] for c in ALPHABET}
    for c in ALPHABET:
        closed[c][1] = {c: ONE}
        opened[c][1] = {c: ONE}

    def _accumulate(target: dict[str, Poly], prefix: str, factor: Poly, layer: dict[str, Poly]) -> None:
        for w, p in layer.items():
            word = prefix + w
            s = target.get(word, ZERO) + factor * p
            if s:
                target[word] = s
            else:
                target.pop(word, None)

    for n in range(2, L + 1):
        for c in ALPHABET:
            o = RED if c == BLUE else BLUE
            mark = B3 if c == BLUE else R3
            both_prev: dict[str, Poly] = dict(closed[BLUE][n - 1])
            for w, p in closed[RED][n - 1].items():
                both_prev[w] = both_prev.get(w, ZERO) + p
            new_closed: dict[str, Poly] = {}
            _accumulate(new_closed, c, ONE, both_prev)
            _accumulate(new_closed, c, mark, opened[c][n - 1])
            closed[c][n] = new_closed
            new_open: dict[str, Poly] = {}
            _accumulate(new_open, c, ONE, both_prev)
            for k in range(1, n - 1):
                both_k: dict[str, Poly] = dict(closed[BLUE][n - 1 - k])
                for w, p in closed[RED][n - 1 - k].items():
                    both_k[w] = both_k.get(w, ZERO) + p
                _accumulate(new_open, o * k + c, Poly.term(1, 0, 0, k), both_k)
            word = o * (n - 1) + c
            p = Poly.term(1, 0, 0, n - 1)
            new_open[word] = new_open.get(word, ZERO) + p
            opened[c][n] = new_open

    def _collect(layers: list[dict[str, Poly]]) -> TruncatedSeries:
        coeffs: dict[str, Poly] = {}
        for layer in layers[1:]:
            coeffs.update(layer)
        return TruncatedSeries(L, coeffs)

    return SeriesSystem(
        closed_blue=_collect(closed[BLUE]),
        closed_red=_collect(closed[RED]),
        open_blue=_collect(opened[BLUE]),
        open_red=_collect(opened[RED]),
    )


def solve_rational(max_len: int) -> SeriesSystem:
    """Census series from the closed form.

    With P the sum of the two one-block series, the full census series is
    P*, and the blue-start part is (1 - A_red) * P* - 1 (symmetrically for
    red).  Exact up to the truncation.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    L = max_len
    one = TruncatedSeries.one(L)
    a_blue = block_series(BLUE, L)
    a_red = block_series(RED, L)
    p_star = (a_blue + a_red).star()
    closed_blue = (one - a_red) * p_star - one
    closed_red = (one - a_blue) * p_star - one
    return SeriesSystem(closed_blue=closed_blue, closed_red=closed_red)

