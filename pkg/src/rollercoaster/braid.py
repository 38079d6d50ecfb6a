"""Positive braid words, their closures, and crossing-count reductions.

Conventions:

* Strand positions are numbered 1 (top) to n (bottom).  A word is read
  left to right; letter (i, +1) crosses positions i and i+1 with the
  strand entering at position i passing over.  (i, -1) is the same
  crossing with the strand entering at position i passing under.
* The closure joins each right endpoint to the left endpoint at the
  same position, wrapping around behind the braid.
* Traversal of the closure starts at the top-left corner of position 1
  heading right.  Crossing ids in the closure Gauss sequence are the
  1-based letter positions of the word.

For a positive word whose closure is a knot, the traversal meets
a = |above-set| crossings first from above and b = |below-set| first
from below, and a - b = n - 1 always holds.  Smoothing an innermost
bigon drops both counts by one; resolving the first ascending strand's
crossing with its predecessor and removing the resulting closed strand
drops them by m+1 and m.  Iterating terminates at a word with n-1
letters, where b = 0.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .codes import Basepoint, GaussCode, OVER, UNDER
from .warp import warp_from


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        if self.strands < 1:
            raise ValueError("braid needs at least one strand")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.strands - 1:
                raise ValueError(f"generator index {idx} out of range for {self.strands} strands")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")

    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.letters)

    def __str__(self) -> str:
        return " ".join(str(i * s) for i, s in self.letters) or "<empty>"


@dataclass(frozen=True)
class Bigon:
    """Two letter positions (0-based, i < j) where the same two strands
    cross, with no pair of strands crossing twice strictly between."""

    i: int
    j: int
    strands: tuple[int, int]


@dataclass(frozen=True)
class RemovalCertificate:
    """Witness for one strand-removal step: the letter position of the
    resolved crossing, the left-edge position of the removed strand, and
    the number m of crossings the removed strand passed over (equally,
    under)."""

    crossing: int
    strand: int
    m: int


_TOKEN = re.compile(r"^(?:(-?\d+)|s(\d+)(?:\^(-?\d+))?)$")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``1 2 -1`` or ``s1 s2 s1^-1`` style words.

    Strand count defaults to one more than the largest generator index.
    """
    letters: list[tuple[int, int]] = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        match = _TOKEN.match(tok)
        if match is None:
            raise ValueError(f"malformed braid token {tok!r}")
        if match.group(1) is not None:
            v = int(match.group(1))
            if v == 0:
                raise ValueError("generator index 0 is not allowed")
            letters.append((abs(v), 1 if v > 0 else -1))
        else:
            idx = int(match.group(2))
            if idx == 0:
                raise ValueError("generator index 0 is not allowed")
            power = int(match.group(3)) if match.group(3) else 1
            sign = 1 if power > 0 else -1
            letters.extend((idx, sign) for _ in range(abs(power)))
    n = strands if strands is not None else max((i for i, _ in letters), default=0) + 1
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# closure combinatorics

def permutation(word: BraidWord) -> dict[int, int]:
    """Left-edge position -> right-edge position of the same strand."""
    perm = {}
    for start in range(1, word.strands + 1):
        pos = start
        for idx, _ in word.letters:
            if pos == idx:
                pos = idx + 1
            elif pos == idx + 1:
                pos = idx
        perm[start] = pos
    return perm


def closure_components(word: BraidWord) -> int:
    perm = permutation(word)
    seen: set[int] = set()
    cycles = 0
    for start in perm:
        if start in seen:
            continue
        cycles += 1
        pos = start
        while pos not in seen:
            seen.add(pos)
            pos = perm[pos]
    return cycles


def _closure_walk(word: BraidWord) -> list[tuple[int, bool]]:
    """Passages of the closure traversal from the top-left corner, as
    (1-based letter position, entered-at-upper-position) pairs."""
    if closure_components(word) != 1:
        raise ValueError("closure is a link, not a knot")
    passages = []
    pos = 1
    for _ in range(word.strands):
        for slot, (idx, _) in enumerate(word.letters, start=1):
            if pos == idx:
                passages.append((slot, True))
                pos = idx + 1
            elif pos == idx + 1:
                passages.append((slot, False))
                pos = idx
    assert pos == 1
    return passages


def closure_gauss(word: BraidWord) -> tuple[GaussCode, Basepoint]:
    """Gauss sequence of the closure, traversed from the top-left corner."""
    passages = []
    for slot, upper in _closure_walk(word):
        sign = word.letters[slot - 1][1]
        over = upper if sign > 0 else not upper
        passages.append((slot, OVER if over else UNDER))
    return GaussCode(tuple(passages)), Basepoint(0, forward=True)


def ab_counts(word: BraidWord) -> tuple[int, int]:
    """(above, below) counts of the top-left traversal of the closure."""
    if not word.letters:
        if word.strands != 1:
            raise ValueError("closure is a link, not a knot")
        return (0, 0)
    code, base = closure_gauss(word)
    result = warp_from(code, base)
    return (len(result.above), len(result.below))


def positive_unknotting(word: BraidWord) -> int:
    """(C - n + 1) / 2: the unknotting number, genus, and ascending
    number of the closure of a positive braid word."""
    if not word.is_positive():
        raise ValueError("word is not positive")
    if closure_components(word) != 1:
        raise ValueError("closure is a link, not a knot")
    c, n = len(word.letters), word.strands
    assert (c - n + 1) % 2 == 0
    return (c - n + 1) // 2


# ---------------------------------------------------------------------------
# bigons

def _slot_pairs(word: BraidWord) -> list[tuple[int, int]]:
    """For each letter, the two strands crossing there, as left-edge
    starting positions (upper first)."""
    occupant = list(range(1, word.strands + 1))
    pairs = []
    for idx, _ in word.letters:
        upper, lower = occupant[idx - 1], occupant[idx]
        pairs.append((upper, lower))
        occupant[idx - 1], occupant[idx] = lower, upper
    return pairs


def _adjacent_bigons(word: BraidWord) -> list[Bigon]:
    pairs = _slot_pairs(word)
    by_pair: dict[tuple[int, int], list[int]] = {}
    for slot, pair in enumerate(pairs):
        by_pair.setdefault(tuple(sorted(pair)), []).append(slot)
    found = []
    for pair, slots in by_pair.items():
        for i, j in zip(slots, slots[1:]):
            found.append(Bigon(i, j, pair))
    return found


def find_innermost_bigon(word: BraidWord) -> Bigon | None:
    """Leftmost innermost bigon, or None when every pair of strands
    crosses at most once."""
    candidates = _adjacent_bigons(word)
    innermost = [
        b
        for b in candidates
        if not any(b.i < o.i and o.j < b.j for o in candidates)
    ]
    return min(innermost, key=lambda b: b.i) if innermost else None


def smooth_bigon(word: BraidWord, bigon: Bigon) -> BraidWord:
    """Delete the bigon's two letters.  The closure stays a knot and the
    (above, below) counts each drop by one."""
    candidates = _adjacent_bigons(word)
    innermost = {
        b for b in candidates if not any(b.i < o.i and o.j < b.j for o in candidates)
    }
    if bigon not in innermost:
        raise ValueError(f"{bigon} is not an innermost bigon of this word")
    letters = tuple(l for k, l in enumerate(word.letters) if k not in (bigon.i, bigon.j))
    return BraidWord(word.strands, letters)


# ---------------------------------------------------------------------------
# strand removal

def remove_first_ascending_strand(word: BraidWord) -> tuple[BraidWord, RemovalCertificate]:
    """Resolve the crossing between the first ascending traversal strand
    and its predecessor, then delete the closed strand this creates.

    Requires a positive bigon-free word with knot closure on at least
    two strands.  The resulting word has one strand fewer, and its
    (above, below) counts are (a - m - 1, b - m).
    """
    if not word.is_positive():
        raise ValueError("word is not positive")
    if word.strands < 2:
        raise ValueError("nothing to remove from a one-strand word")
    if find_innermost_bigon(word) is not None:
        raise ValueError("word has a bigon; smooth it first")
    if closure_components(word) != 1:
        raise ValueError("closure is a link, not a knot")

    perm = permutation(word)
    order = [1]
    while len(order) < word.strands:
        order.append(perm[order[-1]])

    first_up = next((t for t in range(1, word.strands) if perm[order[t]] < order[t]), None)
    assert first_up is not None, "some traversal strand must ascend"
    prev_start, cur_start = order[first_up - 1], order[first_up]

    pairs = _slot_pairs(word)
    matches = [k for k, p in enumerate(pairs) if set(p) == {prev_start, cur_start}]
    assert len(matches) == 1, "bigon-free words cross each strand pair at most once"
    resolved = matches[0]

    # walk the strand that becomes closed once `resolved` is smoothed
    pos = cur_start
    heights = []
    involved = []
    overs = 0
    for slot, (idx, _) in enumerate(word.letters):
        heights.append(pos)
        if pos in (idx, idx + 1):
            if slot == resolved:
                continue
            involved.append(slot)
            if pos == idx:
                overs += 1
                pos = idx + 1
            else:
                pos = idx
    assert pos == cur_start, "removed strand must close up at its own height"
    assert len(involved) % 2 == 0 and overs == len(involved) // 2
    m = len(involved) // 2

    dropped = set(involved) | {resolved}
    letters = []
    for slot, (idx, sign) in enumerate(word.letters):
        if slot in dropped:
            continue
        letters.append((idx - 1 if idx > heights[slot] else idx, sign))
    return (
        BraidWord(word.strands - 1, tuple(letters)),
        RemovalCertificate(crossing=resolved, strand=cur_start, m=m),
    )


@dataclass(frozen=True)
class ReductionStep:
    action: str
    detail: Bigon | RemovalCertificate
    counts_before: tuple[int, int]
    counts_after: tuple[int, int]
    word: BraidWord


def reduce_to_base(word: BraidWord) -> tuple[BraidWord, list[ReductionStep]]:
    """Smooth bigons and remove ascending strands until n-1 letters
    remain.  At that point b = 0 and a = n - 1."""
    if not word.is_positive():
        raise ValueError("word is not positive")
    steps = []
    current = word
    while len(current.letters) > current.strands - 1:
        before = ab_counts(current)
        bigon = find_innermost_bigon(current)
        if bigon is not None:
            current = smooth_bigon(current, bigon)
            steps.append(ReductionStep("smooth", bigon, before, ab_counts(current), current))
        else:
            current, cert = remove_first_ascending_strand(current)
            steps.append(ReductionStep("remove", cert, before, ab_counts(current), current))
    return current, steps


# ---------------------------------------------------------------------------
# sampling

def random_positive_braid_knot(n_max: int, c_max: int, seed: int) -> BraidWord:
    """Deterministic positive braid word with knot closure, every
    generator used at least once, strands <= n_max, letters <= c_max."""
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    if c_max < n_max - 1:
        raise ValueError(f"c_max={c_max} cannot close a knot on up to {n_max} strands")
    rng = random.Random(seed)
    while True:
        n = rng.randint(2, n_max)
        c = rng.randint(n - 1, c_max)
        letters = [(g, 1) for g in range(1, n)]
        letters += [(rng.randint(1, n - 1), 1) for _ in range(c - (n - 1))]
        rng.shuffle(letters)
        word = BraidWord(n, tuple(letters))
        if closure_components(word) == 1:
            return word
