"""Derivation of the blue-start representation from quotient calculus.

The stable module behind the representation is spanned by products of
four atoms: the letters 'b' and 'r' and the geometric stars (y b)* and
(y r)*.  Nineteen such products S_1..S_19 span the module; together with
the census star P* (P = both one-block series) the twenty series
T_1 = 1, T_{p+1} = S_p * P* close under left quotients.

Left quotients follow two rules:

    a^-1 (X Y) = (a^-1 X) Y + (X, empty) * (a^-1 Y)
    a^-1 (X*)  = (a^-1 X) X*          (X proper)

Applied structurally to atom products these rules land back on the atom
products themselves, giving each quotient as an explicit combination of
the T basis -- that combination *is* a matrix row.  (The spanning set is
not linearly independent -- e.g. (y b)* = 1 + y * b (y b)* -- so rows
read off a generic solver would not be unique; applying the rules
structurally pins down the same canonical rows every time.)

`derive_blue_rep` assembles the full 20x20 matrices, checks that the row
and column of the constant series vanish, reduces to 19x19, and verifies
every row against truncated-series arithmetic: the actual left quotient
of T_i must match the claimed combination coefficient-for-coefficient up
to the working truncation.  Any failure raises DerivationError naming the
offending basis element.
"""

from __future__ import annotations

from .chdc import BLUE, RED
from .linrep import DIM, LinRep
from .poly import B3, ONE, R3, Y, ZERO, Poly
from .series import TruncatedSeries, block_series

# Atoms: letters plus the two geometric stars.
A_B = "b"
A_R = "r"
STAR_B = "(yb)*"
STAR_R = "(yr)*"

Product = tuple[str, ...]
Combination = dict[Product, Poly]

# The nineteen spanning products, in module order (index 0 <-> S_1 = 1).
BASIS: tuple[Product, ...] = (
    (),
    (STAR_B,),
    (A_R,),
    (STAR_B, A_R),
    (A_B,),
    (A_B, STAR_B),
    (A_B, STAR_B, A_R),
    (A_R, A_B),
    (A_R, A_B, STAR_B),
    (A_R, A_B, STAR_B, A_R),
    (A_R, A_R),
    (STAR_R,),
    (STAR_R, A_B),
    (A_R, STAR_R),
    (A_R, STAR_R, A_B),
    (A_B, A_R),
    (A_B, A_R, STAR_R),
    (A_B, A_R, STAR_R, A_B),
    (A_B, A_B),
)
BASIS_INDEX = {prod: idx for idx, prod in enumerate(BASIS)}

# One-block series expressed over the basis products.
BLOCK_BLUE: Combination = {
    (A_B,): ONE,
    (A_B, A_B): B3,
    (A_B, A_R, STAR_R, A_B): B3 * Y,
}
BLOCK_RED: Combination = {
    (A_R,): ONE,
    (A_R, A_R): R3,
    (A_R, A_B, STAR_B, A_R): R3 * Y,
}


class DerivationError(RuntimeError):
    """The quotient calculus left the spanning module or failed verification."""


def _atom_constant(atom: str) -> int:
    """Empty-word coefficient of an atom (stars contain 1, letters do not)."""
    return 1 if atom in (STAR_B, STAR_R) else 0


def _product_constant(prod: Product) -> int:
    c = 1
    for atom in prod:
        c *= _atom_constant(atom)
    return c


def _atom_quotient(letter: str, atom: str) -> Combination:
    if atom == letter:
        return {(): ONE}
    if atom == STAR_B and letter == A_B:
        return {(STAR_B,): Y}
    if atom == STAR_R and letter == A_R:
        return {(STAR_R,): Y}
    return {}


def _add_into(target: Combination, prod: Product, coeff: Poly) -> None:
    s = target.get(prod, ZERO) + coeff
    if s:
        target[prod] = s
    else:
        target.pop(prod, None)


def product_quotient(letter: str, prod: Product) -> Combination:
    """Left quotient of an atom product, by the product rule head-first."""
    if not prod:
        return {}
    head, rest = prod[0], prod[1:]
    out: Combination = {}
    for p, coeff in _atom_quotient(letter, head).items():
        _add_into(out, p + rest, coeff)
    if _atom_constant(head):
        for p, coeff in product_quotient(letter, rest).items():
            _add_into(out, p, coeff)
    return out


def combination_quotient(letter: str, comb: Combination) -> Combination:
    out: Combination = {}
    for prod, coeff in comb.items():
        for p, c in product_quotient(letter, prod).items():
            _add_into(out, p, coeff * c)
    return out


def _to_basis_coords(comb: Combination, context: str) -> dict[int, Poly]:
    coords: dict[int, Poly] = {}
    for prod, coeff in comb.items():
        idx = BASIS_INDEX.get(prod)
        if idx is None:
            raise DerivationError(f"quotient of {context} leaves the module: product {prod!r}")
        coords[idx] = coeff
    return coords


def derive_rows(letter: str) -> list[dict[int, Poly]]:
    """Rows of the letter matrix over the basis T_{p+1} = S_p * P*.

    Row p (0-indexed) expands  letter^-1 (S_p P*)  =
        (letter^-1 S_p) P*  +  (S_p, empty) (letter^-1 P) P*.
    Both summands are combinations of S_q P* terms, i.e. columns q.
    """
    p_quot = combination_quotient(letter, {**BLOCK_BLUE, **BLOCK_RED})
    p_coords = _to_basis_coords(p_quot, "the block sum")
    rows: list[dict[int, Poly]] = []
    for p, prod in enumerate(BASIS):
        row: dict[int, Poly] = {}
        for idx, coeff in _to_basis_coords(
            product_quotient(letter, prod), f"basis element {p + 1}"
        ).items():
            _add_into_row(row, idx, coeff)
        if _product_constant(prod):
            for idx, coeff in p_coords.items():
                _add_into_row(row, idx, coeff)
        rows.append(row)
    return rows


def _add_into_row(row: dict[int, Poly], idx: int, coeff: Poly) -> None:
    s = row.get(idx, ZERO) + coeff
    if s:
        row[idx] = s
    else:
        row.pop(idx, None)


def derived_initial() -> dict[int, Poly]:
    """Coordinates of the blue-start series over the T basis (constant dropped).

    The closed form (1 - A_red) P* - 1 expands to
        P* - sum(A_red coords) P* - 1;
    dropping the constant leaves entries on P* itself and on the A_red
    products.
    """
    coords: dict[int, Poly] = {0: ONE}  # the P* column
    for prod, coeff in BLOCK_RED.items():
        coords[BASIS_INDEX[prod]] = -coeff
    return coords


def derived_final() -> dict[int, Poly]:
    """Empty-word coefficients (S_p, empty) * (P*, empty) of the basis."""
    return {p: ONE for p, prod in enumerate(BASIS) if _product_constant(prod)}


# ---------------------------------------------------------------------------
# Truncated-series verification
# ---------------------------------------------------------------------------


def _atom_series(atom: str, max_len: int) -> TruncatedSeries:
    if atom in (A_B, A_R):
        return TruncatedSeries.letter(atom, max_len)
    letter = A_B if atom == STAR_B else A_R
    return (Y * TruncatedSeries.letter(letter, max_len)).star()


def _product_series(prod: Product, max_len: int) -> TruncatedSeries:
    out = TruncatedSeries.one(max_len)
    for atom in prod:
        out = out * _atom_series(atom, max_len)
    return out


def _basis_series(max_len: int) -> list[TruncatedSeries]:
    p_star = (block_series(BLUE, max_len) + block_series(RED, max_len)).star()
    return [_product_series(prod, max_len) * p_star for prod in BASIS]


def verify_rows(check_len: int = 7) -> None:
    """Check every derived row against truncated-series quotients.

    For each basis series T and letter a, the series a^-1 T must equal the
    row combination of basis series, coefficient for coefficient up to
    length check_len - 1.  Raises DerivationError on the first mismatch.
    """
    full = _basis_series(check_len)
    cut = [t.truncate(check_len - 1) for t in full]
    for letter in (BLUE, RED):
        for p, row in enumerate(derive_rows(letter)):
            actual = full[p].left_quotient(letter).truncate(check_len - 1)
            claimed = TruncatedSeries.zero(check_len - 1)
            for q, coeff in row.items():
                claimed = claimed + coeff * cut[q]
            if actual != claimed:
                raise DerivationError(
                    f"row for basis element {p + 1}, letter {letter!r} fails series verification"
                )


def derive_blue_rep(check_len: int = 7) -> LinRep:
    """Rebuild the blue-start representation from the quotient calculus.

    Assembles the full matrices over the twenty-element basis (constant
    series first), checks that the constant's row and column vanish, drops
    them, and verifies every surviving row on truncated series before
    returning the 19-dimensional representation.
    """
    mats = {}
    for letter in (BLUE, RED):
        rows = derive_rows(letter)
        # Full 20x20: index 0 is the constant series 1; its quotient is 0,
        # and no quotient of the other basis elements produces it back.
        full = [[ZERO] * (DIM + 1) for _ in range(DIM + 1)]
        for p, row in enumerate(rows):
            for q, coeff in row.items():
                full[p + 1][q + 1] = coeff
        if any(full[0][q] for q in range(DIM + 1)):
            raise DerivationError("constant row does not vanish")
        if any(full[p][0] for p in range(DIM + 1)):
            raise DerivationError("constant column does not vanish")
        mats[letter] = tuple(tuple(full[p][q] for q in range(1, DIM + 1)) for p in range(1, DIM + 1))
    verify_rows(check_len)
    initial = [ZERO] * DIM
    for idx, coeff in derived_initial().items():
        initial[idx] = coeff
    final = [ZERO] * DIM
    for idx, coeff in derived_final().items():
        final[idx] = coeff
    return LinRep(
        dim=DIM,
        initial=tuple(initial),
        mat_b=mats[BLUE],
        mat_r=mats[RED],
        final=tuple(final),
    )
