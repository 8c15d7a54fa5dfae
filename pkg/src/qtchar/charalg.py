"""Monomial and character algebra for l-weights.

An l-weight is encoded by a monomial in formal variables Y_{i,c}, where i
is a Dynkin node and c a spectral parameter.  Spectral parameters live on
q-power orbits and are stored as (orbit, integer shift) pairs; the base
point of each orbit stays symbolic, so parameters on distinct orbits never
collide and no complex arithmetic is performed.

Each monomial carries three sparse maps keyed by (orbit, node, shift):

``w``
    highest-weight exponents, i.e. the multiplicities of the Drinfeld
    roots the monomial descends from;
``v``
    lowering exponents, one unit per inverse A-variable applied;
``y``
    the resulting Y-variable exponents, a pure function of (w, v).

The A-variable convention is A_{i,n} = Y_{i,n-1} Y_{i,n+1} prod_{j~i}
Y_{j,n}^{-1}, so one lowering step at (i, n) multiplies y by
Y_{i,n-1}^{-1} Y_{i,n+1}^{-1} prod_{j~i} Y_{j,n}.

Monomials compare and hash by their y map alone; (w, v) ride along as
payload for the twisted fusion product.
"""

from __future__ import annotations

import re

from .errors import NodeOutOfRange, ParseError
from .rootdata import RootDatum
from .tpoly import TPoly

DEFAULT_ORBIT = "a"

# Key type used in all sparse maps: (orbit, node, shift).


def y_exponents(datum: RootDatum, w: dict, v: dict) -> dict:
    """Y-exponent map from highest-weight and lowering data."""
    y = {}

    def bump(key, delta):
        val = y.get(key, 0) + delta
        if val:
            y[key] = val
        else:
            y.pop(key, None)

    for key, mult in w.items():
        if mult:
            bump(key, mult)
    for (orbit, i, n), mult in v.items():
        if not mult:
            continue
        bump((orbit, i, n - 1), -mult)
        bump((orbit, i, n + 1), -mult)
        for j in datum.neighbors(i):
            bump((orbit, j, n), mult)
    return y


def _canonical_key(y: dict) -> tuple:
    return tuple(sorted(y.items()))


class Monomial:
    """An l-weight label: (w, v) data plus derived Y-exponents."""

    __slots__ = ("datum", "w", "v", "y", "key", "vdeg", "_hash")

    def __init__(self, datum: RootDatum, w: dict, v: dict):
        self.datum = datum
        self.w = {k: m for k, m in w.items() if m}
        self.v = {k: m for k, m in v.items() if m}
        self.y = y_exponents(datum, self.w, self.v)
        self.key = _canonical_key(self.y)
        self.vdeg = sum(self.v.values())
        self._hash = hash(self.key)

    @classmethod
    def _raw(cls, datum, w, v, y, vdeg):
        # Internal fast path: trusts that y matches (w, v).
        self = cls.__new__(cls)
        self.datum = datum
        self.w = w
        self.v = v
        self.y = y
        self.key = _canonical_key(y)
        self.vdeg = vdeg
        self._hash = hash(self.key)
        return self

    @classmethod
    def highest(cls, datum: RootDatum, node: int, shift: int = 0,
                orbit: str = DEFAULT_ORBIT) -> "Monomial":
        """The dominant monomial Y_{node, orbit shift} (v = 0)."""
        if not 1 <= node <= datum.rank:
            raise NodeOutOfRange(f"node {node} not in 1..{datum.rank}")
        return cls(datum, {(orbit, node, shift): 1}, {})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.key == other.key

    def __hash__(self):
        return self._hash

    def apply_lowering(self, i: int, shift: int,
                       orbit: str = DEFAULT_ORBIT) -> "Monomial":
        """Multiply by the inverse A-variable A_{i, orbit shift}^{-1}."""
        v = dict(self.v)
        k = (orbit, i, shift)
        v[k] = v.get(k, 0) + 1
        y = dict(self.y)

        def bump(key, delta):
            val = y.get(key, 0) + delta
            if val:
                y[key] = val
            else:
                y.pop(key, None)

        bump((orbit, i, shift - 1), -1)
        bump((orbit, i, shift + 1), -1)
        for j in self.datum.neighbors(i):
            bump((orbit, j, shift), 1)
        return Monomial._raw(self.datum, self.w, v, y, self.vdeg + 1)

    def lowered_many(self, i: int, steps: dict) -> "Monomial":
        """Apply A_{i, orbit shift}^{-1} with multiplicity for every
        ((orbit, shift), mult) in ``steps``; order-free."""
        v = dict(self.v)
        y = dict(self.y)
        vdeg = self.vdeg
        adjacent = self.datum.neighbors(i)

        def bump(key, delta):
            val = y.get(key, 0) + delta
            if val:
                y[key] = val
            else:
                y.pop(key, None)

        for (orbit, n), mult in steps.items():
            if not mult:
                continue
            k = (orbit, i, n)
            v[k] = v.get(k, 0) + mult
            vdeg += mult
            bump((orbit, i, n - 1), -mult)
            bump((orbit, i, n + 1), -mult)
            for j in adjacent:
                bump((orbit, j, n), mult)
        return Monomial._raw(self.datum, self.w, v, y, vdeg)

    def i_part(self, i: int) -> dict:
        """Exponents of node i, as a map (orbit, shift) -> exponent."""
        return {(o, n): e for (o, j, n), e in self.y.items() if j == i}

    def is_i_dominant(self, i: int) -> bool:
        return all(e >= 0 for (o, j, n), e in self.y.items() if j == i)

    def is_dominant(self) -> bool:
        return all(e >= 0 for e in self.y.values())

    def shifted(self, delta: int) -> "Monomial":
        """Translate every spectral shift by ``delta`` (all orbits)."""
        w = {(o, i, n + delta): m for (o, i, n), m in self.w.items()}
        v = {(o, i, n + delta): m for (o, i, n), m in self.v.items()}
        y = {(o, i, n + delta): m for (o, i, n), m in self.y.items()}
        return Monomial._raw(self.datum, w, v, y, self.vdeg)

    def orbits(self) -> set:
        out = {o for (o, _, _) in self.w}
        out.update(o for (o, _, _) in self.v)
        return out

    def __str__(self):
        return render_monomial(self.y)

    def __repr__(self):
        return f"Monomial({render_monomial(self.y) or '1'})"


def merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    """Product of two l-weights: componentwise sums of (w, v, y)."""
    w = dict(m1.w)
    for k, m in m2.w.items():
        w[k] = w.get(k, 0) + m
    v = dict(m1.v)
    for k, m in m2.v.items():
        v[k] = v.get(k, 0) + m
    y = dict(m1.y)
    for k, e in m2.y.items():
        val = y.get(k, 0) + e
        if val:
            y[k] = val
        else:
            y.pop(k, None)
    return Monomial._raw(m1.datum, w, v, y, m1.vdeg + m2.vdeg)


# -- text format -------------------------------------------------------
#
# Each factor Y_{i, orbit shift}^m is written ``i_n``, ``i_n^m`` or, on a
# non-default orbit, ``i_n@orbit^m``; factors are space separated and the
# identity monomial renders as ``1``.

_FACTOR_RE = re.compile(
    r"^(\d+)_(-?\d+)(?:@([A-Za-z][A-Za-z0-9]*))?(?:\^(-?\d+))?$"
)


def parse_monomial(s: str, datum: RootDatum) -> dict:
    """Parse monomial text into a Y-exponent map keyed (orbit, node, shift)."""
    y = {}
    text = s.strip()
    if text in ("", "1"):
        return y
    pos = 0
    for factor in text.split():
        pos = s.index(factor, pos)
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ParseError(f"malformed factor {factor!r} at position {pos}",
                             position=pos)
        node = int(m.group(1))
        if not 1 <= node <= datum.rank:
            raise NodeOutOfRange(
                f"node {node} not in 1..{datum.rank} (factor {factor!r})")
        shift = int(m.group(2))
        orbit = m.group(3) or DEFAULT_ORBIT
        exp = int(m.group(4)) if m.group(4) else 1
        key = (orbit, node, shift)
        val = y.get(key, 0) + exp
        if val:
            y[key] = val
        else:
            y.pop(key, None)
        pos += len(factor)
    return y


def render_monomial(y: dict) -> str:
    """Canonical text for a Y-exponent map; inverse of parse_monomial."""
    if not y:
        return "1"
    parts = []
    for (orbit, node, shift), exp in sorted(
            y.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2])):
        tag = f"{node}_{shift}"
        if orbit != DEFAULT_ORBIT:
            tag += f"@{orbit}"
        if exp != 1:
            tag += f"^{exp}"
        parts.append(tag)
    return " ".join(parts)


# -- characters --------------------------------------------------------


class Character:
    """Finite map Monomial -> TPoly with a distinguished highest monomial."""

    __slots__ = ("datum", "highest", "terms")

    def __init__(self, datum: RootDatum, highest: Monomial, terms: dict):
        self.datum = datum
        self.highest = highest
        self.terms = terms

    def sorted_terms(self) -> list[tuple[Monomial, TPoly]]:
        """Terms in canonical order: lowering degree, then monomial key."""
        return sorted(self.terms.items(), key=lambda mv: (mv[0].vdeg, mv[0].key))

    def coefficient(self, text: str) -> TPoly:
        """Coefficient of the monomial given in text form (0 if absent)."""
        key = _canonical_key(parse_monomial(text, self.datum))
        for m, c in self.terms.items():
            if m.key == key:
                return c
        return TPoly.zero()

    def mass_at_t1(self) -> int:
        """Total dimension: sum of all coefficients evaluated at t = 1."""
        return sum(c.mass() for c in self.terms.values())

    def shifted(self, delta: int) -> "Character":
        terms = {m.shifted(delta): c for m, c in self.terms.items()}
        return Character(self.datum, self.highest.shifted(delta), terms)

    def orbits(self) -> list[str]:
        out = set()
        for m in self.terms:
            out.update(m.orbits())
        return sorted(out)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return (f"Character({self.datum.family}{self.datum.rank}, "
                f"highest={self.highest!r}, {len(self.terms)} terms)")


def trivial_character(datum: RootDatum) -> Character:
    """The character of the trivial module: the identity monomial alone."""
    one = Monomial(datum, {}, {})
    return Character(datum, one, {one: TPoly.one()})


# -- l-weight and Drinfeld views ---------------------------------------


class LWeightView:
    """Per-node numerator/denominator root multisets of an l-weight.

    Positive Y-exponents populate the numerator with multiplicity,
    negative ones the denominator.  Only the root multisets are recorded;
    scalar prefactors of the generating series are a display convention
    and are left out.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: dict, denominator: dict):
        self.numerator = numerator      # node -> sorted list of (orbit, shift)
        self.denominator = denominator

    def reconstruct_y(self) -> dict:
        y = {}
        for node, roots in self.numerator.items():
            for (orbit, shift) in roots:
                key = (orbit, node, shift)
                y[key] = y.get(key, 0) + 1
        for node, roots in self.denominator.items():
            for (orbit, shift) in roots:
                key = (orbit, node, shift)
                val = y.get(key, 0) - 1
                if val:
                    y[key] = val
                else:
                    y.pop(key, None)
        return y


def monomial_to_lweight(m: Monomial) -> LWeightView:
    num: dict = {}
    den: dict = {}
    for (orbit, node, shift), exp in m.y.items():
        side = num if exp > 0 else den
        side.setdefault(node, []).extend([(orbit, shift)] * abs(exp))
    for table in (num, den):
        for node in table:
            table[node].sort()
    return LWeightView(num, den)


def drinfeld_roots(chi: Character) -> dict:
    """Multiset of Drinfeld roots per node, read off the highest monomial.

    Node i receives shift n with the multiplicity of the highest-weight
    exponent at (i, n).  The global spectral offset appearing in the
    generating-series normalization is a display convention and is not
    applied to the shifts.
    """
    assert not chi.highest.v, "highest monomial must have no lowering data"
    roots: dict = {i: [] for i in chi.datum.nodes}
    for (orbit, node, shift), mult in chi.highest.w.items():
        roots[node].extend([(orbit, shift)] * mult)
    for node in roots:
        roots[node].sort()
    return roots
