"""Exact similarity, attribute gravity, and the stress tests they invite.

The similarity score compares two bit matrices cell by cell after
zero-padding the narrower one on the right, and divides by the full
padded cell count.  It is a statement about matrices, not families:
probe_conjecture below hunts for rewrite pairs that keep both value
families intact yet move the score, and max_similarity_over_orderings
quantifies how much of a score gap is mere column order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .core import SoftSet, SoftSetError, require_same_universe
from .relations import max_family, min_family, random_equivalent_variant

__all__ = [
    "AntichainProfile",
    "ConjectureProbe",
    "EmptyDenominator",
    "MAX_PERMUTED_ATTRIBUTES",
    "TooManyAttributes",
    "antichain_profile",
    "fraction_str",
    "gravity",
    "gravity_domination",
    "is_permutation_basis",
    "max_similarity_over_orderings",
    "probe_conjecture",
    "similarity",
]

MAX_PERMUTED_ATTRIBUTES = 8


class EmptyDenominator(SoftSetError):
    """Similarity is undefined without universe elements and attributes."""


class TooManyAttributes(SoftSetError):
    """The factorial ordering search is refused beyond the supported width."""


def fraction_str(q: Fraction) -> str:
    """Always "num/den", reduced; str(Fraction) would drop the /1."""
    return f"{q.numerator}/{q.denominator}"


def similarity(s: SoftSet, f: SoftSet) -> Fraction:
    """Fraction of cells on which the two matrices agree, exactly.

    The narrower matrix is padded on the right with all-zero columns to
    the wider width n, and the count runs over all m*n cells, so a pad
    column scores the zero entries of the matching wider column.  The
    padded comparison is the same whichever operand is wider, which
    makes the score symmetric.
    """
    require_same_universe(s, f)
    m = len(s.universe)
    na = len(s.attributes)
    nb = len(f.attributes)
    n = max(na, nb)
    if m == 0 or n == 0:
        raise EmptyDenominator(
            "similarity needs a nonempty universe and at least one attribute"
        )
    a = s.to_matrix().bits
    b = f.to_matrix().bits
    agree = 0
    for i in range(m):
        ra = a[i]
        rb = b[i]
        for j in range(n):
            if (ra[j] if j < na else 0) == (rb[j] if j < nb else 0):
                agree += 1
    return Fraction(agree, m * n)


def gravity(s: SoftSet) -> dict[str, int]:
    """Column sums of the matrix, keyed by attribute: the size of each value."""
    return {a: len(s.value(a)) for a in s.attributes}


def gravity_domination(s: SoftSet, f: SoftSet) -> bool:
    """Pointwise gravity comparison through containment witnesses.

    True when every attribute of f with a nonempty value has a witness
    attribute of s whose nonempty value sits inside it; containment
    forces the witness's gravity to stay at or below the target's, so
    each column of f dominates some column of s even when the column
    sum totals refuse to line up.
    """
    require_same_universe(s, f)
    gs = gravity(s)
    gf = gravity(f)
    for b in f.attributes:
        target = f.value(b)
        if not target:
            continue
        if not any(
            s.value(a) and s.value(a) <= target and gs[a] <= gf[b]
            for a in s.attributes
        ):
            return False
    return True


def max_similarity_over_orderings(s: SoftSet, f: SoftSet) -> Fraction:
    """Best similarity over column reorderings of the narrower operand.

    Column order is presentation rather than content, so the comparison
    may shop for the best alignment.  The search permutes the narrower
    matrix's columns (the right operand when widths tie; with equal
    widths the choice of side cannot change the maximum), while pad
    columns keep comparing against the wider tail.  Never below the
    unpermuted score.
    """
    require_same_universe(s, f)
    m = len(s.universe)
    na = len(s.attributes)
    nb = len(f.attributes)
    n = max(na, nb)
    p = min(na, nb)
    if m == 0 or n == 0:
        raise EmptyDenominator(
            "similarity needs a nonempty universe and at least one attribute"
        )
    if p > MAX_PERMUTED_ATTRIBUTES:
        raise TooManyAttributes(
            f"{p} permutable attributes exceed the bound of {MAX_PERMUTED_ATTRIBUTES}"
        )
    wide, narrow = (s, f) if na >= nb else (f, s)
    wbits = wide.to_matrix().bits
    nbits = narrow.to_matrix().bits
    # agreements in the padded tail do not move with the permutation
    tail = sum(1 for i in range(m) for j in range(p, n) if wbits[i][j] == 0)
    score = [
        [
            sum(1 for i in range(m) if wbits[i][j] == nbits[i][c])
            for c in range(p)
        ]
        for j in range(p)
    ]
    best = 0
    for perm in permutations(range(p)):
        total = sum(score[j][perm[j]] for j in range(p))
        if total > best:
            best = total
    return Fraction(best + tail, m * n)


def is_permutation_basis(s: SoftSet) -> bool:
    """Square matrix whose columns are distinct standard basis vectors.

    Equivalently: as many attributes as elements, every value a
    singleton, no two values equal.  These are the only 0/1 matrices
    with linearly independent spanning columns.
    """
    if len(s.attributes) != len(s.universe):
        return False
    hits = []
    for a in s.attributes:
        v = s.value(a)
        if len(v) != 1:
            return False
        hits.append(next(iter(v)))
    return len(set(hits)) == len(hits)


@dataclass(frozen=True)
class AntichainProfile:
    injective: bool
    all_minimal: bool
    all_maximal: bool


def antichain_profile(s: SoftSet) -> AntichainProfile:
    """Shape report used by the similarity-equals-one hypotheses.

    all_minimal asks that tau be exactly its own minimal family, so an
    empty value in tau fails it (the minimal family never contains the
    empty set); all_maximal dually rejects a full-universe value.
    """
    subsets = [s.value(a) for a in s.attributes]
    fam = s.tau()
    return AntichainProfile(
        injective=len(set(subsets)) == len(subsets),
        all_minimal=fam <= min_family(s),
        all_maximal=fam <= max_family(s),
    )


@dataclass(frozen=True)
class ConjectureProbe:
    original: tuple[SoftSet, SoftSet]
    rewritten: tuple[SoftSet, SoftSet]
    original_similarity: Fraction
    rewritten_similarity: Fraction

    @property
    def differs(self) -> bool:
        return self.original_similarity != self.rewritten_similarity


def probe_conjecture(
    s: SoftSet, f: SoftSet, trials: int = 100, seed: int = 0
) -> list[ConjectureProbe]:
    """Hunt for family-preserving rewrites that move the similarity score.

    Each trial rewrites s and f independently (duplication, renaming,
    duplicate-dropping, reordering; the universe never changes), so
    both sides of every probe are equivalent to the originals by
    construction.  Duplication changes the width and with it the
    denominator, so probes with differs=True are routine; each one
    witnesses that the score is not invariant across equivalent pairs.
    """
    if trials < 1:
        raise SoftSetError("trials must be at least 1")
    rng = random.Random(seed)
    base = similarity(s, f)
    probes = []
    for _ in range(trials):
        s2 = random_equivalent_variant(s, rng)
        f2 = random_equivalent_variant(f, rng)
        probes.append(
            ConjectureProbe((s, f), (s2, f2), base, similarity(s2, f2))
        )
    return probes
