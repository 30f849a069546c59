"""Linear word representations of the census series.

The census series restricted to blue-starting words is recognizable: its
coefficients live in a rank-19 stable module, so there are 19x19 matrices
M_b, M_r over the polynomial ring with

    coefficient(w) = initial^T * M_{w_1} * ... * M_{w_n} * final

for every nonempty word w.  `blue_start_rep` ships that representation as
literal data; `red_start_rep` is its colour mirror (swap the letter
matrices and exchange b3 <-> r3); `census_rep` is their block-diagonal
sum, a 38-dimensional representation whose coefficient on any nonempty
word equals the full census polynomial.

The reduced representation drops the basis element for the constant
series 1, which only matters for the empty word: initial^T final = 1 here
while the census of the empty word is 1 as well, but the blue-start part
alone vanishes on the empty word.  `coefficient` therefore requires a
nonempty word.

`specialize` pre-evaluates the matrix entries at a numeric point and
returns a light evaluator for repeated use; arithmetic is exact for
int/Fraction points and floating otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .chdc import BLUE, RED, validate_word
from .poly import B3, ONE, R3, Y, ZERO, Poly

DIM = 19


def _dense(rows: dict[int, dict[int, Poly]], dim: int) -> tuple[tuple[Poly, ...], ...]:
    """Dense row-major matrix from 1-indexed sparse row data."""
    out = []
    for r in range(1, dim + 1):
        row = rows.get(r, {})
        out.append(tuple(row.get(c, ZERO) for c in range(1, dim + 1)))
    return tuple(out)


def _vector(entries: dict[int, Poly], dim: int) -> tuple[Poly, ...]:
    return tuple(entries.get(i, ZERO) for i in range(1, dim + 1))


# Letter matrices for the blue-start representation.  Row p describes the
# left quotient of the p-th module generator by the letter; entries are
# 1-indexed column -> coefficient.
_MAT_B_ROWS: dict[int, dict[int, Poly]] = {
    1: {1: ONE, 5: B3, 15: B3 * Y},
    2: {1: ONE, 2: Y, 5: B3, 15: B3 * Y},
    4: {4: Y},
    5: {1: ONE},
    6: {2: ONE},
    7: {4: ONE},
    12: {1: ONE, 5: B3, 15: B3 * Y},
    13: {1: ONE},
    16: {3: ONE},
    17: {14: ONE},
    18: {15: ONE},
    19: {5: ONE},
}

_MAT_R_ROWS: dict[int, dict[int, Poly]] = {
    1: {1: ONE, 3: R3, 7: R3 * Y},
    2: {1: ONE, 3: R3, 7: R3 * Y},
    3: {1: ONE},
    4: {1: ONE},
    8: {5: ONE},
    9: {6: ONE},
    10: {7: ONE},
    11: {3: ONE},
    12: {1: ONE, 3: R3, 7: R3 * Y, 12: Y},
    13: {13: Y},
    14: {12: ONE},
    15: {13: ONE},
}

_INITIAL = {1: ONE, 3: -ONE, 10: -(R3 * Y), 11: -R3}
_FINAL = {1: ONE, 2: ONE, 12: ONE}


class LinRep:
    """A linear word representation (initial vector, letter matrices, final vector).

    Treat instances as immutable; matrices are dense row-major tuples of
    Poly, matching the dump format.
    """

    def __init__(
        self,
        dim: int,
        initial: tuple[Poly, ...],
        mat_b: tuple[tuple[Poly, ...], ...],
        mat_r: tuple[tuple[Poly, ...], ...],
        final: tuple[Poly, ...],
    ):
        if not (len(initial) == len(final) == len(mat_b) == len(mat_r) == dim):
            raise ValueError("representation pieces disagree on dimension")
        for m in (mat_b, mat_r):
            if any(len(row) != dim for row in m):
                raise ValueError("letter matrices must be square")
        self.dim = dim
        self.initial = initial
        self.mat_b = mat_b
        self.mat_r = mat_r
        self.final = final
        self._sparse_rows = {
            BLUE: _sparse_rows(mat_b),
            RED: _sparse_rows(mat_r),
        }

    def matrix(self, colour: str) -> tuple[tuple[Poly, ...], ...]:
        if colour == BLUE:
            return self.mat_b
        if colour == RED:
            return self.mat_r
        raise ValueError(f"invalid colour {colour!r}")

    def coefficient(self, word: str) -> Poly:
        """Series coefficient of a nonempty word, by a left-to-right vector chain."""
        validate_word(word)
        if not word:
            raise ValueError("the reduced representation does not cover the empty word")
        vec: dict[int, Poly] = {i: p for i, p in enumerate(self.initial) if p}
        for letter in word:
            rows = self._sparse_rows[letter]
            nxt: dict[int, Poly] = {}
            for p, coeff in vec.items():
                for q, entry in rows[p]:
                    s = nxt.get(q, ZERO) + coeff * entry
                    if s:
                        nxt[q] = s
                    else:
                        nxt.pop(q, None)
            vec = nxt
            if not vec:
                return ZERO
        total = ZERO
        for i, coeff in vec.items():
            if self.final[i]:
                total = total + coeff * self.final[i]
        return total

    def specialize(self, u, v, w) -> "NumericRep":
        """Pre-evaluate all entries at (b3, r3, y) = (u, v, w)."""
        return NumericRep(self, u, v, w)

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "initial": [p.to_json_obj() for p in self.initial],
            "mat_b": [[p.to_json_obj() for p in row] for row in self.mat_b],
            "mat_r": [[p.to_json_obj() for p in row] for row in self.mat_r],
            "final": [p.to_json_obj() for p in self.final],
        }


def _sparse_rows(mat: tuple[tuple[Poly, ...], ...]) -> list[list[tuple[int, Poly]]]:
    return [[(q, entry) for q, entry in enumerate(row) if entry] for row in mat]


class NumericRep:
    """A representation with entries evaluated at a fixed numeric point.

    Exact (int/Fraction arithmetic) when the point is exact, floating
    otherwise; integer points additionally stay in plain int arithmetic.
    """

    def __init__(self, rep: LinRep, u, v, w):
        self.dim = rep.dim
        self.point = (u, v, w)
        ev = _entry_evaluator(u, v, w)
        self.initial = [ev(p) for p in rep.initial]
        self.final = [ev(p) for p in rep.final]
        self.rows = {}
        for colour, rows in rep._sparse_rows.items():
            out_rows = []
            for row in rows:
                vals = [(q, val) for q, entry in row for val in (ev(entry),) if _nonzero(val)]
                out_rows.append(vals)
            self.rows[colour] = out_rows
        self.zero = ev(ZERO)

    def step(self, vec: list, letter: str) -> list:
        """One letter of the left-to-right chain: vec -> vec * M_letter."""
        rows = self.rows[letter]
        out = [self.zero] * self.dim
        for p, coeff in enumerate(vec):
            if not _nonzero(coeff):
                continue
            for q, entry in rows[p]:
                out[q] = out[q] + coeff * entry
        return out

    def start(self) -> list:
        return list(self.initial)

    def finish(self, vec: list):
        return sum((c * f for c, f in zip(vec, self.final)), self.zero)

    def coefficient(self, word: str):
        validate_word(word)
        if not word:
            raise ValueError("the reduced representation does not cover the empty word")
        vec = self.start()
        for letter in word:
            vec = self.step(vec, letter)
        return self.finish(vec)


def _nonzero(x) -> bool:
    return x != 0


def _entry_evaluator(u, v, w) -> Callable[[Poly], object]:
    exact = all(isinstance(x, (int, Fraction)) for x in (u, v, w))
    if exact and all(Fraction(x).denominator == 1 for x in (u, v, w)):
        ui, vi, wi = int(u), int(v), int(w)

        def ev_int(p: Poly) -> int:
            val = p.evaluate(ui, vi, wi)
            return int(val) if isinstance(val, Fraction) else val

        return ev_int
    if exact:
        return lambda p: Fraction(p.evaluate(Fraction(u), Fraction(v), Fraction(w)))
    return lambda p: float(p.evaluate(float(u), float(v), float(w)))


def blue_start_rep() -> LinRep:
    """The 19-dimensional representation of the blue-starting census part."""
    return LinRep(
        dim=DIM,
        initial=_vector(_INITIAL, DIM),
        mat_b=_dense(_MAT_B_ROWS, DIM),
        mat_r=_dense(_MAT_R_ROWS, DIM),
        final=_vector(_FINAL, DIM),
    )


def red_start_rep() -> LinRep:
    """Colour mirror of `blue_start_rep`: swap letter roles and b3 <-> r3."""
    base = blue_start_rep()
    return LinRep(
        dim=DIM,
        initial=tuple(p.red_to_blue() for p in base.initial),
        mat_b=tuple(tuple(p.red_to_blue() for p in row) for row in base.mat_r),
        mat_r=tuple(tuple(p.blue_to_red() for p in row) for row in base.mat_b),
        final=base.final,
    )


def census_rep() -> LinRep:
    """Block-diagonal sum of the blue-start and red-start representations.

    Its coefficient on any nonempty word is the census polynomial of that
    word.
    """
    a = blue_start_rep()
    b = red_start_rep()
    dim = a.dim + b.dim
    zrow = (ZERO,) * a.dim

    def block(m1, m2):
        top = tuple(row + zrow for row in m1)
        bottom = tuple(zrow + row for row in m2)
        return top + bottom

    return LinRep(
        dim=dim,
        initial=a.initial + b.initial,
        mat_b=block(a.mat_b, b.mat_b),
        mat_r=block(a.mat_r, b.mat_r),
        final=a.final + b.final,
    )


def rep_diff(left: LinRep, right: LinRep) -> list[tuple]:
    """Entry-for-entry discrepancies between two representations.

    Returns (piece, index..., left entry, right entry) tuples; empty means
    equal.
    """
    out: list[tuple] = []
    if left.dim != right.dim:
        return [("dim", left.dim, right.dim)]
    for name in ("initial", "final"):
        for i, (x, y) in enumerate(zip(getattr(left, name), getattr(right, name))):
            if x != y:
                out.append((name, i + 1, str(x), str(y)))
    for name in ("mat_b", "mat_r"):
        for r, (row_l, row_r) in enumerate(zip(getattr(left, name), getattr(right, name))):
            for c, (x, y) in enumerate(zip(row_l, row_r)):
                if x != y:
                    out.append((name, r + 1, c + 1, str(x), str(y)))
    return out
