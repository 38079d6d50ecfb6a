"""Kauffman bracket and Jones polynomial of planar diagrams.

Polynomials are integer Laurent polynomials whose exponents count
quarter powers of t (so the substitution A = t^(-1/4) stays integral).
The bracket of the crossingless unknot is 1, a positive kink multiplies
it by -A^3, and the Jones polynomial is the bracket rescaled by
(-A^3)^(-writhe) with A = t^(-1/4); knots always land on integer powers
of t.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .embed import PlanarDiagram, writhe


class Laurent:
    """Laurent polynomial with integer coefficients, no zeros stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def term(cls, coeff: int, exp: int) -> "Laurent":
        return cls({exp: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out)

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = Laurent({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "Laurent":
        """Multiply by the variable to the k-th quarter power."""
        return Laurent({e + k: c for e, c in self.coeffs.items()})

    def scale(self, k: int) -> "Laurent":
        return Laurent({e: k * c for e, c in self.coeffs.items()})

    def mirror(self) -> "Laurent":
        """Substitute t -> 1/t (negate every exponent)."""
        return Laurent({-e: c for e, c in self.coeffs.items()})

    def eval_at_unit(self, u: int) -> int:
        """Value at t = u for u in {1, -1}; needs integer t-powers."""
        if u not in (1, -1):
            raise ValueError("only t = 1 and t = -1 are supported")
        total = 0
        for e, c in self.coeffs.items():
            if e % 4 != 0:
                raise ValueError("polynomial has fractional t-powers")
            total += c if (u == 1 or (e // 4) % 2 == 0) else -c
        return total

    def span(self) -> Fraction:
        """Difference of extreme t-exponents (0 for constants)."""
        if not self.coeffs:
            return Fraction(0)
        return Fraction(max(self.coeffs) - min(self.coeffs), 4)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                body = str(abs(c))
            else:
                q = Fraction(e, 4)
                power = "t" if q == 1 else f"t^{q}" if q.denominator == 1 else f"t^({q})"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            parts.append(("- " if c < 0 else "+ ") + body)
        lead = parts[0].replace("+ ", "").replace("- ", "-")
        return " ".join([lead] + parts[1:])

    def __repr__(self) -> str:
        return f"Laurent({self.coeffs!r})"


_DELTA = Laurent({2: -1, -2: -1})
ONE = Laurent({0: 1})


class BracketCapExceeded(ValueError):
    pass


class AmbiguousMatch(Exception):
    """Several reference knots share the computed Jones polynomial."""

    def __init__(self, names):
        self.names = tuple(names)
        super().__init__("ambiguous identification: " + ", ".join(self.names))


def _smoothing_arcs(crossing, use_a: bool):
    """Slot pairs joined by the A- or B-smoothing.

    The A-smoothing joins each over-strand slot to its clockwise
    neighbour; this yields -A^3 for the positive kink.
    """
    p = crossing.over[0]
    if use_a:
        return ((p, (p + 3) % 4), ((p + 2) % 4, (p + 1) % 4))
    return ((p, (p + 1) % 4), ((p + 2) % 4, (p + 3) % 4))


def kauffman_bracket(diagram: PlanarDiagram, cap: int = 16) -> Laurent:
    """State-sum bracket: sum over all 2^c smoothings of
    A^(a-b) * delta^(loops-1)."""
    c = diagram.size
    if c > cap:
        raise BracketCapExceeded(f"{c} crossings exceeds the cap of {cap}")
    if c == 0:
        return ONE

    darts = [(ci, s) for ci in range(c) for s in range(4)]
    index = {d: i for i, d in enumerate(darts)}
    ends: dict[int, list[int]] = {}
    for ci, x in enumerate(diagram.crossings):
        for s, e in enumerate(x.edges):
            ends.setdefault(e, []).append(index[(ci, s)])
    arcs = [
        (_smoothing_arcs(x, True), _smoothing_arcs(x, False))
        for x in diagram.crossings
    ]

    delta_pow = [ONE]
    for _ in range(2 * c):
        delta_pow.append(delta_pow[-1] * _DELTA)

    total = Laurent({})
    for state in range(1 << c):
        parent = list(range(4 * c))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

        for pair in ends.values():
            union(pair[0], pair[1])
        a_count = 0
        for ci in range(c):
            use_a = not (state >> ci) & 1
            a_count += 1 if use_a else -1
            for s1, s2 in arcs[ci][0 if use_a else 1]:
                union(index[(ci, s1)], index[(ci, s2)])
        loops = len({find(v) for v in range(4 * c)})
        total = total + delta_pow[loops - 1].shift(a_count)
    return total


def jones(diagram: PlanarDiagram, cap: int = 16) -> Laurent:
    """Jones polynomial, normalized so the unknot gives 1.

    Exponents are quarter powers of t; knots give integer powers.
    """
    w = writhe(diagram)
    bracket = kauffman_bracket(diagram, cap=cap)
    f = bracket.shift(-3 * w)
    if w % 2:
        f = -f
    return Laurent({-e: c for e, c in f.coeffs.items()})


# ---------------------------------------------------------------------------
# identification against a reference table

def parse_jones_refs(lines) -> dict[str, Laurent]:
    refs: dict[str, Laurent] = {}
    for n, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = [f.strip() for f in body.split(";")]
        if len(fields) < 2:
            raise ValueError(f"line {n}: expected 'name; exp:coeff ...; note'")
        name, terms = fields[0], fields[1]
        coeffs = {}
        for item in terms.split():
            exp, _, coeff = item.partition(":")
            coeffs[int(exp)] = int(coeff)
        if name in refs:
            raise ValueError(f"line {n}: duplicate reference entry {name}")
        refs[name] = Laurent(coeffs)
    return refs


def load_jones_refs(path=None) -> dict[str, Laurent]:
    """Reference Jones polynomials; defaults to the packaged table."""
    if path is None:
        text = resources.files("rollercoaster.data").joinpath("jones_refs.dat").read_text()
        return parse_jones_refs(text.splitlines())
    with open(path, encoding="utf-8") as handle:
        return parse_jones_refs(handle)


def match_jones(poly: Laurent, refs: dict[str, Laurent]) -> list[str]:
    """Reference names whose polynomial equals poly up to t -> 1/t."""
    mirrored = poly.mirror()
    return sorted(name for name, ref in refs.items() if ref == poly or ref == mirrored)


def identify(diagram: PlanarDiagram, refs: dict[str, Laurent]) -> str | None:
    """Name the diagram's knot by Jones polynomial, up to mirror image.

    Returns None when nothing matches and raises AmbiguousMatch when
    several reference knots share the polynomial.
    """
    names = match_jones(jones(diagram), refs)
    if not names:
        return None
    if len(names) > 1:
        raise AmbiguousMatch(names)
    return names[0]
