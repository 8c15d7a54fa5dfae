"""Twisted product of q,t-characters.

The product of two characters is not the plain monomial product: each pair
of factor monomials contributes with a shift t^{2p}, where p is the rank of
the positively-weighted attracting block of the tangent space at the
corresponding fixed-point pair.  That rank is an explicit bilinear form in
the (w, v) payloads of the two monomials, pairing entries on the same
spectral orbit only:

    p(m1, m2) = sum over (orbit, i, n) of
        w1[i,n] v2[i,n-1] + v1[i,n] w2[i,n-1]
        - v1[i,n] v2[i,n] - v1[i,n] v2[i,n-2]
        + sum_{j ~ i} v1[j,n] v2[i,n-1]

Cross-orbit pairs contribute nothing, so characters on disjoint orbits
multiply coefficient-by-coefficient.

A product coefficient sums the contributions of every factorization of
its monomial, one per fixed-locus piece.  For generic parameter placement
those pieces assemble into a single connected locus and the sum is a
hard-Lefschetz Poincare polynomial; special interleaving gaps can leave
the locus reducible, in which case the coefficient is still correct but
not palindromic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charalg import (
    DEFAULT_ORBIT,
    Character,
    Monomial,
    merge_monomials,
)
from .errors import NegativeTwist, QtCharError
from .rootdata import RootDatum
from .tpoly import TPoly


@dataclass(frozen=True)
class FactorSpec:
    """One fundamental factor of a standard module."""

    node: int
    shift: int = 0
    orbit: str = DEFAULT_ORBIT

    def sort_key(self):
        return (self.orbit, self.shift, self.node)


def as_factor(spec) -> FactorSpec:
    if isinstance(spec, FactorSpec):
        return spec
    return FactorSpec(*spec)


def bb_twist(datum: RootDatum, m1: Monomial, m2: Monomial) -> int:
    """Rank of the positive attracting block for the ordered pair
    (earlier factor monomial, later factor monomial)."""
    w2, v2 = m2.w, m2.v
    p = 0
    for (orbit, i, n), a in m1.w.items():
        p += a * v2.get((orbit, i, n - 1), 0)
    for (orbit, j, n), a in m1.v.items():
        p += a * (
            w2.get((orbit, j, n - 1), 0)
            - v2.get((orbit, j, n), 0)
            - v2.get((orbit, j, n - 2), 0)
        )
        for i in datum.neighbors(j):
            p += a * v2.get((orbit, i, n - 1), 0)
    if p < 0:
        raise NegativeTwist(
            f"negative attracting rank {p} for pair ({m1!r}, {m2!r})")
    return p


def twisted_product(datum: RootDatum, chi1: Character,
                    chi2: Character) -> Character:
    """Fuse two characters: coefficient of a product monomial is the sum
    over factorizations of t^{2p} times the product of factor coefficients."""
    assert chi1.datum == chi2.datum == datum
    index: dict[Monomial, Monomial] = {}
    terms: dict[Monomial, TPoly] = {}
    for m1, c1 in chi1.terms.items():
        for m2, c2 in chi2.terms.items():
            p = bb_twist(datum, m1, m2)
            m = merge_monomials(m1, m2)
            contrib = (c1 * c2).shifted(2 * p)
            canon = index.setdefault(m, m)
            if canon is m:
                terms[m] = contrib
            else:
                # equal y within one character forces equal (w, v) payloads
                assert canon.w == m.w and canon.v == m.v
                terms[canon] = terms[canon] + contrib
    highest = merge_monomials(chi1.highest, chi2.highest)
    return Character(datum, highest, terms)


def standard_module_qt(datum: RootDatum, factors, depth_cap: int = 200,
                       audit: bool = True) -> Character:
    """q,t-character of the standard module with the given fundamental
    factors; independent of the order in which factors are listed."""
    from . import fm

    specs = [as_factor(f) for f in factors]
    if not specs:
        raise QtCharError("standard module needs at least one factor")
    specs.sort(key=FactorSpec.sort_key)

    base: dict[tuple[int, str], Character] = {}
    chis = []
    for f in specs:
        chi = base.get((f.node, f.orbit))
        if chi is None:
            chi = fm.fundamental_qt(datum, f.node, 0, f.orbit,
                                    depth_cap=depth_cap, audit=audit)
            base[(f.node, f.orbit)] = chi
        chis.append(chi.shifted(f.shift) if f.shift else chi)

    out = chis[0]
    for chi in chis[1:]:
        out = twisted_product(datum, out, chi)
    return out
