"""Knot diagram codes: Dowker-Thistlethwaite sequences and Gauss sequences.

Conventions used throughout the package:

* A diagram with c crossings is traversed once, giving 2c passages that
  carry labels 1..2c in traversal order.  Each crossing is passed twice,
  once with an odd label and once with an even label.
* A DT code lists, for the odd labels 1, 3, ..., 2c-1 in order, the even
  label paired with each.  Crossing i is the crossing owning odd label
  2i-1.  A positive entry means the odd-labelled passage runs over; a
  negative entry means the even-labelled passage runs over.  Alternating
  diagrams are exactly the ones admitting an all-positive code.
* A Gauss sequence lists the 2c passages as (crossing-id, role) pairs,
  role "O" for an over-passage and "U" for an under-passage.
* Basepoints live on edges.  Edge k (0 <= k < 2c) is the arc entered
  after passage k-1 and ending at passage k, indices mod 2c, so forward
  traversal from edge k meets passage k first and backward traversal
  meets passage k-1 first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

OVER = "O"
UNDER = "U"


class FramingError(ValueError):
    """A Gauss sequence admits no odd/even crossing labelling."""


@dataclass(frozen=True)
class DTCode:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        c = len(self.entries)
        seen = set()
        for e in self.entries:
            if e == 0:
                raise ValueError("DT entries must be nonzero even integers, got 0")
            if e % 2 != 0:
                raise ValueError(f"odd entry {e}: DT entries must be even integers")
            if abs(e) in seen:
                raise ValueError(f"duplicate DT entry magnitude {abs(e)}")
            seen.add(abs(e))
        if seen != set(range(2, 2 * c + 1, 2)):
            raise ValueError(f"DT entries must cover 2..{2 * c} exactly once, got {sorted(seen)}")

    @property
    def crossings(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_dt(self)


@dataclass(frozen=True)
class GaussCode:
    passages: tuple[tuple[int, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple((int(i), r) for i, r in self.passages))
        roles: dict[int, list[str]] = {}
        for ident, role in self.passages:
            if role not in (OVER, UNDER):
                raise ValueError(f"bad strand role {role!r}")
            roles.setdefault(ident, []).append(role)
        for ident, rs in roles.items():
            if sorted(rs) != [OVER, UNDER]:
                raise ValueError(f"crossing {ident} must occur exactly once over and once under")

    @property
    def crossings(self) -> int:
        return len(self.passages) // 2

    def __str__(self) -> str:
        return format_gauss(self)


@dataclass(frozen=True)
class Basepoint:
    edge: int
    forward: bool = True

    def __str__(self) -> str:
        return f"edge {self.edge} {'forward' if self.forward else 'backward'}"


# ---------------------------------------------------------------------------
# parsing and formatting

def parse_dt(text: str) -> DTCode:
    """Parse a DT code from ``[4, 6, 2]`` or bare ``4 6 2`` form."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [t for t in re.split(r"[,\s]+", body.strip()) if t]
    entries = []
    for tok in tokens:
        try:
            entries.append(int(tok))
        except ValueError:
            raise ValueError(f"malformed DT token {tok!r}") from None
    return DTCode(tuple(entries))


def format_dt(code: DTCode) -> str:
    return "[" + ", ".join(str(e) for e in code.entries) + "]"


def parse_gauss(text: str) -> GaussCode:
    """Parse a Gauss sequence of signed crossing ids, positive = over.

    ``1 -3 2 -1 3 -2`` is a trefoil.
    """
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    passages = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"malformed Gauss token {tok!r}") from None
        if v == 0:
            raise ValueError("crossing ids must be nonzero")
        passages.append((abs(v), OVER if v > 0 else UNDER))
    return GaussCode(tuple(passages))


def format_gauss(code: GaussCode) -> str:
    return " ".join(str(i) if r == OVER else str(-i) for i, r in code.passages)


def read_dt_lines(lines) -> list[DTCode]:
    """Read one bracketed DT code per line; ``#`` starts a comment."""
    codes = []
    for n, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            codes.append(parse_dt(body))
        except ValueError as exc:
            raise ValueError(f"line {n}: {exc}") from None
    return codes


# ---------------------------------------------------------------------------
# conversions

def dt_to_gauss(code: DTCode) -> GaussCode:
    """Expand a DT code into its Gauss sequence.

    Crossing i sits at odd label 2i-1 and even label ``abs(entries[i-1])``.
    """
    c = code.crossings
    slots: list[tuple[int, str] | None] = [None] * (2 * c)
    for i, entry in enumerate(code.entries, start=1):
        odd = 2 * i - 1
        even = abs(entry)
        odd_role, even_role = (OVER, UNDER) if entry > 0 else (UNDER, OVER)
        slots[odd - 1] = (i, odd_role)
        slots[even - 1] = (i, even_role)
    return GaussCode(tuple(slots))  # type: ignore[arg-type]


def gauss_to_dt(code: GaussCode) -> DTCode:
    """Collapse a Gauss sequence to a DT code with labels starting at the
    first listed passage.

    Raises FramingError when some crossing is met at two labels of equal
    parity; such sequences exist only for non-planar pairings, and
    canonical_dt searches the framings that do work.
    """
    labels: dict[int, list[tuple[int, str]]] = {}
    for pos, (ident, role) in enumerate(code.passages, start=1):
        labels.setdefault(ident, []).append((pos, role))
    entries: dict[int, int] = {}
    for ident, pair in labels.items():
        (p1, r1), (p2, r2) = pair
        if p1 % 2 == p2 % 2:
            raise FramingError(f"crossing {ident} met at labels {p1} and {p2} of equal parity")
        odd, odd_role, even = (p1, r1, p2) if p1 % 2 == 1 else (p2, r2, p1)
        entries[odd] = even if odd_role == OVER else -even
    return DTCode(tuple(entries[2 * i - 1] for i in range(1, len(labels) + 1)))


def rotate(code: GaussCode, shift: int) -> GaussCode:
    """Move the basepoint so traversal starts at passage ``shift``."""
    k = shift % len(code.passages) if code.passages else 0
    return GaussCode(code.passages[k:] + code.passages[:k])


def reverse(code: GaussCode) -> GaussCode:
    """Traverse in the opposite direction; roles are unchanged."""
    return GaussCode(code.passages[::-1])


def mirror(code: GaussCode) -> GaussCode:
    """Flip over/under at every crossing."""
    flipped = tuple((i, UNDER if r == OVER else OVER) for i, r in code.passages)
    return GaussCode(flipped)


def dt_mirror(code: DTCode) -> DTCode:
    return DTCode(tuple(-e for e in code.entries))


def canonical_dt(code) -> DTCode:
    """Lexicographically least DT code over all 2c rotations and both
    traversal directions.  Used for deduplication."""
    if isinstance(code, DTCode):
        code = dt_to_gauss(code)
    best = None
    for g in (code, reverse(code)):
        for k in range(len(code.passages)):
            try:
                cand = gauss_to_dt(rotate(g, k)).entries
            except FramingError:
                continue
            if best is None or cand < best:
                best = cand
    if best is None:
        raise FramingError("no rotation admits an odd/even labelling")
    return DTCode(best)


# ---------------------------------------------------------------------------
# diagram reductions

def is_reduced(code: GaussCode) -> bool:
    """True when no crossing is nugatory.

    A crossing is nugatory exactly when the ids strictly between its two
    passages are closed under pairing: removing the crossing would
    disconnect the diagram there.
    """
    where: dict[int, list[int]] = {}
    for pos, (ident, _) in enumerate(code.passages):
        where.setdefault(ident, []).append(pos)
    for ident, (p, q) in where.items():
        counts: dict[int, int] = {}
        for other, _ in code.passages[p + 1 : q]:
            counts[other] = counts.get(other, 0) + 1
        if all(v == 2 for v in counts.values()):
            return False
    return True
