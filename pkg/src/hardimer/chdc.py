"""Coloured hard-dimer configurations on two-colour vertex sequences.

A *word* is a string over the alphabet {'b', 'r'} whose letters are the
colours of vertices 1..n placed on a line.  A *dimer* joins two vertices
of the same colour with no vertex of that colour strictly between them
(the "nearest same colour" rule).  A *configuration* is a set of dimers
whose spans [left, right] are pairwise disjoint as vertex-index sets:
dimers may not share endpoints, cross, or nest.  The empty configuration
is always valid.

The *type* of a configuration is the triple (i, j, k) where i counts blue
dimers, j red dimers, and k the vertices strictly inside dimer spans.
The census polynomial of a word collects all its configurations as
monomials b3^i r3^j y^k; counting is exact.

A configuration is also encoded as a planted plane tree whose nodes are
the root mark, coloured vertices, and a bud/leaf pair per dimer (buds
carry charge -1, leaves +1, coloured vertices 0).  `to_tree`/`from_tree`
implement that bijection; see the grammar notes above `to_tree`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .poly import ONE, Poly

BLUE = "b"
RED = "r"
ALPHABET = (BLUE, RED)

# DFS enumeration materializes every configuration; the count grows like
# 1.618^n for one-colour words, so cap the word length to keep memory sane.
MAX_ENUM_LEN = 24


def validate_word(word: str) -> str:
    """Check that `word` is a string over {'b', 'r'}; return it unchanged."""
    if not isinstance(word, str):
        raise TypeError(f"word must be a string, got {type(word).__name__}")
    for ch in word:
        if ch not in (BLUE, RED):
            raise ValueError(f"invalid character {ch!r} in word (letters must be 'b' or 'r')")
    return word


def swap_colour(colour: str) -> str:
    return RED if colour == BLUE else BLUE


def swap_word(word: str) -> str:
    """Exchange blue and red letters."""
    return "".join(swap_colour(c) for c in validate_word(word))


def words_of_length(n: int) -> Iterable[str]:
    """All words of length n in lexicographic order ('b' < 'r')."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        yield ""
        return
    for prefix in words_of_length(n - 1):
        yield prefix + BLUE
        yield prefix + RED


@dataclass(frozen=True, order=True)
class Dimer:
    """A link between two same-colour vertices, 1-indexed, left < right."""

    colour: str
    left: int
    right: int

    def __post_init__(self):
        if self.colour not in ALPHABET:
            raise ValueError(f"invalid dimer colour {self.colour!r}")
        if not (1 <= self.left < self.right):
            raise ValueError(f"dimer endpoints must satisfy 1 <= left < right, got ({self.left}, {self.right})")

    @property
    def inner(self) -> int:
        """Number of vertices strictly inside the span."""
        return self.right - self.left - 1

    def overlaps(self, other: "Dimer") -> bool:
        """True when the spans share at least one vertex index."""
        return not (self.right < other.left or other.right < self.left)

    def to_json_obj(self) -> dict:
        return {"colour": self.colour, "left": self.left, "right": self.right}

    @classmethod
    def from_json_obj(cls, data: dict) -> "Dimer":
        return cls(colour=data["colour"], left=int(data["left"]), right=int(data["right"]))


@dataclass(frozen=True)
class Configuration:
    word: str
    dimers: frozenset[Dimer]

    @classmethod
    def of(cls, word: str, dimers: Iterable[Dimer] = ()) -> "Configuration":
        return cls(word=validate_word(word), dimers=frozenset(dimers))

    def sorted_dimers(self) -> list[Dimer]:
        return sorted(self.dimers, key=lambda d: d.left)

    def to_json_obj(self) -> dict:
        return {
            "word": self.word,
            "dimers": [d.to_json_obj() for d in self.sorted_dimers()],
        }

    @classmethod
    def from_json_obj(cls, data: dict) -> "Configuration":
        return cls.of(data["word"], (Dimer.from_json_obj(d) for d in data["dimers"]))


class TypeTriple(NamedTuple):
    i: int  # blue dimers
    j: int  # red dimers
    k: int  # inner vertices


def candidate_dimers(word: str) -> list[Dimer]:
    """Every dimer the word admits, ordered by left endpoint.

    For each colour, consecutive occurrences are chained left to right;
    only those nearest pairs satisfy the no-same-colour-between rule.
    """
    validate_word(word)
    out: list[Dimer] = []
    last: dict[str, int] = {}
    for pos, colour in enumerate(word, start=1):
        if colour in last:
            out.append(Dimer(colour=colour, left=last[colour], right=pos))
        last[colour] = pos
    out.sort(key=lambda d: d.left)
    return out


def dimer_fits_word(word: str, dimer: Dimer) -> bool:
    """Endpoint colours match and no same-colour vertex sits strictly inside."""
    n = len(word)
    if dimer.right > n:
        return False
    c = dimer.colour
    if word[dimer.left - 1] != c or word[dimer.right - 1] != c:
        return False
    return all(word[p - 1] != c for p in range(dimer.left + 1, dimer.right))


def is_valid(config: Configuration) -> bool:
    """Check every dimer individually and pairwise span disjointness."""
    validate_word(config.word)
    dimers = config.sorted_dimers()
    for d in dimers:
        if not dimer_fits_word(config.word, d):
            return False
    for a, b in zip(dimers, dimers[1:]):
        if a.overlaps(b):
            return False
    return True


def enumerate_configs(word: str) -> list[Configuration]:
    """All valid configurations, including the empty one.

    Depth-first over the candidate list in left-endpoint order, excluding
    before including, so the output order is deterministic.  Because
    candidates are processed by increasing left endpoint, a new dimer
    conflicts with the chosen set iff its left endpoint does not clear the
    rightmost occupied vertex.
    """
    validate_word(word)
    if len(word) > MAX_ENUM_LEN:
        raise ValueError(f"word length {len(word)} exceeds enumeration bound {MAX_ENUM_LEN}")
    candidates = candidate_dimers(word)
    out: list[Configuration] = []
    chosen: list[Dimer] = []

    def walk(idx: int, max_right: int) -> None:
        if idx == len(candidates):
            out.append(Configuration(word=word, dimers=frozenset(chosen)))
            return
        walk(idx + 1, max_right)
        d = candidates[idx]
        if d.left > max_right:
            chosen.append(d)
            walk(idx + 1, max(max_right, d.right))
            chosen.pop()

    walk(0, 0)
    return out


def config_type(config: Configuration) -> TypeTriple:
    """Type triple of a valid configuration; raises on invalid input."""
    if not is_valid(config):
        raise ValueError(f"invalid configuration on word {config.word!r}: {config.sorted_dimers()}")
    i = sum(1 for d in config.dimers if d.colour == BLUE)
    j = sum(1 for d in config.dimers if d.colour == RED)
    k = sum(d.inner for d in config.dimers)
    return TypeTriple(i, j, k)


def census(word: str) -> Poly:
    """Census polynomial: sum of b3^i r3^j y^k over all configurations.

    Runs its own DFS over candidate dimers (it does not materialize
    Configuration objects), accumulating one integer count per type.
    """
    validate_word(word)
    candidates = candidate_dimers(word)
    counts: dict[tuple[int, int, int], int] = {}

    def walk(idx: int, max_right: int, i: int, j: int, k: int) -> None:
        if idx == len(candidates):
            key = (i, j, k)
            counts[key] = counts.get(key, 0) + 1
            return
        walk(idx + 1, max_right, i, j, k)
        d = candidates[idx]
        if d.left > max_right:
            if d.colour == BLUE:
                walk(idx + 1, d.right, i + 1, j, k + d.inner)
            else:
                walk(idx + 1, d.right, i, j + 1, k + d.inner)

    walk(0, 0, 0, 0, 0)
    return Poly(counts)


def census_to_json_obj(poly: Poly) -> list[dict]:
    """Census JSON: integer multiplicities in lexicographic type order."""
    out = []
    for (i, j, k), c in poly.items():
        if c.denominator != 1:
            raise ValueError(f"census multiplicities must be integers, got {c} at {(i, j, k)}")
        out.append({"i": i, "j": j, "k": k, "m": int(c)})
    return out


# ---------------------------------------------------------------------------
# Tree encoding
#
# A configuration maps to a planted plane tree as follows.  Scan the word
# left to right.  A vertex not touching a dimer becomes a node whose only
# child is the tree of the remaining suffix.  A vertex opening a dimer
# becomes a node with two children: a bud, and the *closing* vertex of
# that dimer.  The closing vertex in turn carries the vertices strictly
# inside the span as a chain hanging below it (nearest first from the
# bottom), terminated by a leaf, plus optionally the tree of the suffix
# after the span.  Each dimer thus contributes one bud/leaf pair, and the
# inner vertices become the bivalent chain between the closing vertex and
# the leaf.  Charges (leaf +1, bud -1, coloured 0) let a parser tell the
# two child roles apart: a suffix subtree has charge 0 while the
# chain-to-leaf branch has charge +1.
# ---------------------------------------------------------------------------

ROOT = "root"
BUD = "bud"
LEAF = "leaf"


@dataclass(frozen=True)
class TreeNode:
    """Node of the tree encoding; `kind` is 'root', 'bud', 'leaf', 'b' or 'r'."""

    kind: str
    children: tuple["TreeNode", ...] = ()

    def __post_init__(self):
        if self.kind not in (ROOT, BUD, LEAF, BLUE, RED):
            raise ValueError(f"invalid tree node kind {self.kind!r}")
        if self.kind in (BUD, LEAF) and self.children:
            raise ValueError(f"{self.kind} nodes cannot have children")


def charge(node: TreeNode) -> int:
    """Sum of charges over the subtree: leaves +1, buds -1, others 0."""
    own = 1 if node.kind == LEAF else -1 if node.kind == BUD else 0
    return own + sum(charge(c) for c in node.children)


def to_tree(config: Configuration) -> TreeNode:
    """Encode a valid configuration as a tree planted on a root mark."""
    if not is_valid(config):
        raise ValueError(f"invalid configuration on word {config.word!r}: {config.sorted_dimers()}")
    word = config.word
    opens = {d.left: d for d in config.dimers}

    def build(pos: int) -> TreeNode | None:
        if pos > len(word):
            return None
        colour = word[pos - 1]
        d = opens.get(pos)
        if d is None:
            rest = build(pos + 1)
            return TreeNode(colour, (rest,) if rest else ())
        # Opening vertex: bud plus the closing vertex of the dimer.
        after = build(d.right + 1)
        branch: TreeNode = TreeNode(LEAF)
        for p in range(d.left + 1, d.right):  # inner chain, nearest at the bottom
            branch = TreeNode(word[p - 1], (branch,))
        closing_children = (branch,) if after is None else (branch, after)
        closing = TreeNode(colour, closing_children)
        return TreeNode(colour, (TreeNode(BUD), closing))

    top = build(1)
    return TreeNode(ROOT, (top,) if top else ())


class TreeStructureError(ValueError):
    """Raised when a tree does not parse back into a configuration."""


def _parse(node: TreeNode, pos: int, dimers: list[Dimer]) -> tuple[str, int]:
    """Parse the subtree at `node` as a suffix starting at vertex `pos`.

    Returns (word piece, next free position) and appends recovered dimers.
    """
    if node.kind not in (BLUE, RED):
        raise TreeStructureError(f"expected a coloured vertex, found {node.kind!r}")
    colour = node.kind
    kids = node.children
    if len(kids) == 0:
        return colour, pos + 1
    if len(kids) == 1 and kids[0].kind in (BLUE, RED) and charge(kids[0]) == 0:
        rest, nxt = _parse(kids[0], pos + 1, dimers)
        return colour + rest, nxt
    # Otherwise this vertex opens a dimer: expect a bud and a closing subtree.
    buds = [k for k in kids if k.kind == BUD]
    closers = [k for k in kids if k.kind != BUD]
    if len(kids) != 2 or len(buds) != 1 or len(closers) != 1:
        raise TreeStructureError(f"coloured vertex has unparseable children {[k.kind for k in kids]}")
    closer = closers[0]
    if closer.kind != colour:
        raise TreeStructureError(f"dimer endpoints disagree: {colour!r} opened, {closer.kind!r} closes")
    if charge(closer) != 1:
        raise TreeStructureError(f"closing subtree must carry charge 1, found {charge(closer)}")
    inner, after = _split_closer(closer)
    left = pos
    right = pos + 1 + len(inner)
    for p, c in enumerate(inner, start=pos + 1):
        if c == colour:
            raise TreeStructureError("inner chain repeats the dimer colour")
    dimers.append(Dimer(colour=colour, left=left, right=right))
    word = colour + "".join(inner) + colour
    if after is None:
        return word, right + 1
    rest, nxt = _parse(after, right + 1, dimers)
    return word + rest, nxt


def _split_closer(closer: TreeNode) -> tuple[list[str], TreeNode | None]:
    """Split a closing vertex into its inner chain letters and the suffix subtree.

    The chain branch is the one with charge +1 (it ends in the leaf);
    a charge-0 branch, if present, is the suffix.  Chain letters are
    returned in original word order (the chain stores them bottom-up).
    """
    chain_branch: TreeNode | None = None
    after: TreeNode | None = None
    for kid in closer.children:
        c = charge(kid)
        if c == 1 and chain_branch is None:
            chain_branch = kid
        elif c == 0 and after is None and kid.kind in (BLUE, RED):
            after = kid
        else:
            raise TreeStructureError(f"unparseable branch of kind {kid.kind!r} with charge {c}")
    if chain_branch is None:
        raise TreeStructureError("closing vertex is missing its leaf branch")
    letters: list[str] = []
    node = chain_branch
    while node.kind in (BLUE, RED):
        letters.append(node.kind)
        if len(node.children) != 1:
            raise TreeStructureError("inner chain vertices must be bivalent")
        node = node.children[0]
    if node.kind != LEAF:
        raise TreeStructureError(f"inner chain must end in a leaf, found {node.kind!r}")
    letters.reverse()  # chain hangs nearest-to-closer first; restore word order
    return letters, after


def from_tree(tree: TreeNode) -> Configuration:
    """Decode a tree back into its configuration; raises TreeStructureError."""
    if tree.kind != ROOT:
        raise TreeStructureError(f"top node must be the root mark, found {tree.kind!r}")
    if charge(tree) != 0:
        raise TreeStructureError(f"full tree must have charge 0, found {charge(tree)}")
    if not tree.children:
        return Configuration(word="", dimers=frozenset())
    if len(tree.children) != 1:
        raise TreeStructureError("root mark must have exactly one child")
    dimers: list[Dimer] = []
    word, _ = _parse(tree.children[0], 1, dimers)
    config = Configuration(word=word, dimers=frozenset(dimers))
    if not is_valid(config):
        raise TreeStructureError(f"decoded configuration is invalid on {word!r}")
    return config
