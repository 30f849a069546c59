"""Per-word configuration sums and their level aggregates.

`config_sum(word, u, v, w)` evaluates the census of one word at a numeric
point: the sum of u^i v^j w^k over the word's configurations.  It runs on
the 38-dimensional census representation specialized at the point, so it
is exact for rational inputs.

`level_sum(n, u, v, w)` is the aggregate over all 2^n words of length n
of the *reciprocal* census value at the sign-flipped point (-u, -v, w);
words where that value vanishes are singular and either abort the sum or
are skipped and reported.  `damped_partial_sums` accumulates levels under
exponential damping exp(-gamma*n) and reports crude tail diagnostics.

Exactness: level sums are exact (Fraction arithmetic) whenever u, v, w
are int/Fraction; floating inputs switch to float arithmetic with
Neumaier-compensated summation over words in lexicographic order, so the
reduction order is fixed and reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chdc import BLUE, RED, swap_word, validate_word
from .linrep import NumericRep, census_rep

# Full enumeration of 2^n words; keep n within desk scale.
MAX_LEVEL = 20

_rep_cache: dict[tuple, NumericRep] = {}


def _specialized(u, v, w) -> NumericRep:
    key = (type(u).__name__, u, type(v).__name__, v, type(w).__name__, w)
    rep = _rep_cache.get(key)
    if rep is None:
        rep = census_rep().specialize(u, v, w)
        _rep_cache[key] = rep
    return rep


def _all_exact(*vals) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in vals)


def config_sum(word: str, u, v, w):
    """Census of one word evaluated at (u, v, w); exact over rationals."""
    validate_word(word)
    if not word:
        return Fraction(1) if _all_exact(u, v, w) else 1.0
    return _specialized(u, v, w).coefficient(word)


def swap_eval_check(word: str, u, v, w) -> bool:
    """Two-evaluation identity for a word bundled with its colour swap.

    Evaluating the word's census at (u, v, w) and again with u, v
    exchanged must equal config_sum(word) + config_sum(swapped word),
    because swapping colours mirrors the census in b3 <-> r3.
    """
    direct = config_sum(word, u, v, w) + config_sum(word, v, u, w)
    paired = config_sum(word, u, v, w) + config_sum(swap_word(word), u, v, w)
    return direct == paired


class SingularWordError(ArithmeticError):
    """A word whose sign-flipped census value is zero, so its reciprocal blows up."""

    def __init__(self, word: str, n: int):
        super().__init__(f"singular word {word!r} at level {n}: census(-u, -v, w) = 0")
        self.word = word
        self.n = n


@dataclass
class LevelEntry:
    """One level of the reciprocal sum: value and any singular words skipped."""

    n: int
    value: object
    singular_words: list[str] = field(default_factory=list)
    max_reciprocal: float = 0.0


def level_sum(n: int, u, v, w, *, skip_singular: bool = False, exact: bool | None = None) -> LevelEntry:
    """Sum of 1 / census(-u, -v, w) over all words of length n.

    The sign flip is applied internally: callers pass the user-facing
    point.  Exact by default for rational inputs; pass exact=False to
    force floating arithmetic.  A zero denominator raises
    SingularWordError unless skip_singular, in which case the word is
    recorded and left out.
    """
    if not (1 <= n <= MAX_LEVEL):
        raise ValueError(f"level must be between 1 and {MAX_LEVEL}, got {n}")
    if exact is None:
        exact = _all_exact(u, v, w)
    if exact and not _all_exact(u, v, w):
        raise ValueError("exact level sums need int or Fraction inputs")
    if exact:
        point = (Fraction(-u), Fraction(-v), Fraction(w))
    else:
        point = (-float(u), -float(v), float(w))
    rep = _specialized(*point)
    entry = LevelEntry(n=n, value=Fraction(0) if exact else 0.0)

    total = Fraction(0) if exact else 0.0
    comp = 0.0  # Neumaier compensation (float mode only)
    max_recip = 0.0
    word: list[str] = []

    # Depth-first over the prefix tree, 'b' branch first, sharing the
    # vector chain between words with a common prefix; leaves are reached
    # in lexicographic order, fixing the float reduction order.
    def visit(vec, depth):
        nonlocal total, comp, max_recip
        if depth == n:
            den = rep.finish(vec)
            if den == 0:
                w_str = "".join(word)
                if not skip_singular:
                    raise SingularWordError(w_str, n)
                entry.singular_words.append(w_str)
                return
            recip = Fraction(1, 1) / den if exact else 1.0 / den
            mag = abs(float(recip))
            if mag > max_recip:
                max_recip = mag
            if exact:
                total += recip
            else:
                t = total + recip
                if abs(total) >= abs(recip):
                    comp += (total - t) + recip
                else:
                    comp += (recip - t) + total
                total = t
            return
        for letter in (BLUE, RED):
            word.append(letter)
            visit(rep.step(vec, letter), depth + 1)
            word.pop()

    visit(rep.start(), 0)
    entry.value = total if exact else total + comp
    entry.max_reciprocal = max_recip
    return entry


@dataclass
class TransferParams:
    """Inputs of the damped level aggregation."""

    u: object
    v: object
    w: object
    gamma: float
    n_max: int


@dataclass
class SumReport:
    """Damped partial sums with crude tail diagnostics.

    partial_sums[m] is sum over n <= m+1 of exp(-gamma*n) * level value.
    The remainder bound assumes every unseen level obeys
    |level n| <= 2^n * max observed reciprocal, summed geometrically; it
    is infinite when 2*exp(-gamma) >= 1.  The converged flag is the crude
    monotone test gamma > ln 2 + growth, where growth estimates how fast
    the worst per-word reciprocal grows from level to level.
    """

    params: TransferParams
    levels: list[LevelEntry]
    partial_sums: list[float]
    remainder_bound: float
    converged: bool
    mode: str


def damped_partial_sums(params: TransferParams, *, skip_singular: bool = False, exact: bool | None = None) -> SumReport:
    """Accumulate exp(-gamma*n)-damped level sums for n = 1..n_max."""
    if params.n_max < 1:
        raise ValueError("n_max must be at least 1")
    if exact is None:
        exact = _all_exact(params.u, params.v, params.w)
    levels = [
        level_sum(n, params.u, params.v, params.w, skip_singular=skip_singular, exact=exact)
        for n in range(1, params.n_max + 1)
    ]
    partial_sums: list[float] = []
    acc = 0.0
    for entry in levels:
        acc += math.exp(-params.gamma * entry.n) * float(entry.value)
        partial_sums.append(acc)

    max_recip = max((e.max_reciprocal for e in levels), default=0.0)
    ratio = 2.0 * math.exp(-params.gamma)
    if ratio < 1.0 and max_recip > 0.0:
        remainder = max_recip * ratio ** (params.n_max + 1) / (1.0 - ratio)
    elif max_recip == 0.0:
        remainder = 0.0
    else:
        remainder = math.inf

    growth = 0.0
    for prev, cur in zip(levels, levels[1:]):
        if prev.max_reciprocal > 0.0 and cur.max_reciprocal > 0.0:
            growth = max(growth, math.log(cur.max_reciprocal) - math.log(prev.max_reciprocal))
    converged = params.gamma > math.log(2.0) + growth

    return SumReport(
        params=params,
        levels=levels,
        partial_sums=partial_sums,
        remainder_bound=remainder,
        converged=converged,
        mode="exact" if exact else "float",
    )
