"""Worklist expansion of q,t-characters of minuscule modules.

Starting from the single dominant monomial, monomials are processed in
non-decreasing lowering degree.  Whenever a direction i still has
unexplained mass at a popped monomial whose node-i exponents are all
nonnegative, that residual is expanded by the simple rank-one
q,t-character of the node-i exponent multiset, embedded back through the
inverse A-variables of node i.

Bookkeeping: a per-direction ledger records how much coefficient mass each
direction has generated at every monomial.  A popped monomial's
coefficient is pinned by the ledgers of the directions in which it carries
a negative exponent (every generator of the monomial has strictly smaller
lowering degree, so those ledgers are complete by pop time); all such
directions must agree, and a residual at a non-dominant direction must
vanish.  This converts the unproven bookkeeping assumptions into runtime
checks, and `audit_expansion` re-verifies the finished character by
peeling the per-direction decomposition off it from scratch.
"""

from __future__ import annotations

import heapq
from functools import lru_cache

from .charalg import Character, Monomial
from .errors import DepthExceeded, InconsistentExpansion, NonMinuscule
from .rootdata import RootDatum
from .sl2 import sl2_simple_qt
from .tpoly import TPoly

DEFAULT_DEPTH_CAP = 200

_ZERO = TPoly.zero()


def _ipart_roots(ipart: dict) -> tuple:
    """Dominant node-i exponent map -> sorted root multiset tuple."""
    roots = []
    for (orbit, n), exp in ipart.items():
        roots.extend([(orbit, n)] * exp)
    return tuple(sorted(roots))


def _template_images(m: Monomial, i: int, template: Character):
    """Embed a rank-one template at monomial m in direction i.

    Yields (template monomial, host image) for every template term, the
    template highest mapping to m itself.
    """
    for tm in template.terms:
        if tm.vdeg == 0:
            yield tm, m
            continue
        steps = {(orbit, n): mult for (orbit, _one, n), mult in tm.v.items()}
        yield tm, m.lowered_many(i, steps)


@lru_cache(maxsize=None)
def _template_step_pairs(root_tuple: tuple) -> tuple:
    """Single lowering steps between members of one rank-one template,
    as (source key, target key, (orbit, shift)) triples."""
    template = sl2_simple_qt(root_tuple)
    keys = {tm.key for tm in template.terms}
    orbits = sorted({o for (o, _s) in root_tuple})
    lo = min(n for tm in template.terms for (_o, _1, n) in tm.y) - 1
    hi = max(n for tm in template.terms for (_o, _1, n) in tm.y) + 1
    pairs = []
    for tm in template.terms:
        for orbit in orbits:
            for n in range(lo, hi + 1):
                t2 = tm.apply_lowering(1, n, orbit)
                if t2.key in keys:
                    pairs.append((tm.key, t2.key, (orbit, n)))
    return tuple(pairs)


def fundamental_qt(datum: RootDatum, node: int, shift: int = 0,
                   orbit: str = "a", depth_cap: int = DEFAULT_DEPTH_CAP,
                   audit: bool = True) -> Character:
    """q,t-character of the fundamental module with highest l-weight
    Y_{node, orbit shift}.

    Raises NonMinuscule if a second dominant monomial appears,
    InconsistentExpansion if the per-direction bookkeeping disagrees, and
    DepthExceeded past ``depth_cap`` lowering steps.
    """
    highest = Monomial.highest(datum, node, shift, orbit)
    hkey = highest.key
    monomials: dict[tuple, Monomial] = {hkey: highest}
    result: dict[tuple, TPoly] = {hkey: TPoly.one()}
    ledgers: dict[int, dict[tuple, TPoly]] = {i: {} for i in datum.nodes}
    heap: list[tuple[int, tuple]] = [(0, hkey)]
    enqueued = {hkey}

    while heap:
        _vdeg, key = heapq.heappop(heap)
        m = monomials[key]

        if key == hkey:
            coeff = result[hkey]
        else:
            negative = sorted({j for (_o, j, _n), e in m.y.items() if e < 0})
            if not negative:
                raise NonMinuscule(
                    f"second dominant monomial {m!r}; the expansion only "
                    f"applies to modules with a single dominant l-weight")
            coeff = ledgers[negative[0]].get(key, _ZERO)
            for i in negative[1:]:
                if ledgers[i].get(key, _ZERO) != coeff:
                    raise InconsistentExpansion(
                        f"directions {negative[0]} and {i} disagree on the "
                        f"coefficient of {m!r}")
            result[key] = coeff

        for i in datum.nodes:
            residual = coeff - ledgers[i].get(key, _ZERO)
            if not residual:
                continue
            ipart = m.i_part(i)
            if any(e < 0 for e in ipart.values()):
                raise InconsistentExpansion(
                    f"unexplained mass {residual} in direction {i} at the "
                    f"non-dominant monomial {m!r}")
            if not residual.is_positive():
                raise InconsistentExpansion(
                    f"negative residual {residual} in direction {i} at {m!r}")
            ledgers[i][key] = coeff
            if not ipart:
                continue
            template = sl2_simple_qt(_ipart_roots(ipart))
            ledger = ledgers[i]
            for tm, img in _template_images(m, i, template):
                if tm.vdeg == 0:
                    continue
                if img.vdeg > depth_cap:
                    raise DepthExceeded(
                        f"lowering degree {img.vdeg} exceeds cap {depth_cap}")
                contrib = residual * template.terms[tm]
                ikey = img.key
                ledger[ikey] = ledger.get(ikey, _ZERO) + contrib
                if ikey not in monomials:
                    monomials[ikey] = img
                if ikey not in enqueued:
                    enqueued.add(ikey)
                    heapq.heappush(heap, (img.vdeg, ikey))

    terms = {monomials[k]: c for k, c in result.items() if c}
    chi = Character(datum, highest, terms)
    if audit:
        audit_expansion(chi)
    return chi


def decompose_direction(chi: Character, i: int):
    """Peel the direction-i decomposition off a character.

    Expresses the character as a sum over i-dominant monomials m of
    c_m(t) times the simple rank-one character of the node-i exponents of
    m, embedded at m.  Returns (sites, edges) where ``sites`` lists the
    (monomial, c_m) pairs and ``edges`` the lowering steps interior to the
    embedded rank-one strings, as (from, to, i, (orbit, shift)) tuples.

    Raises InconsistentExpansion if no such decomposition exists.
    """
    index = {m.key: m for m in chi.terms}
    residue = {m.key: c for m, c in chi.terms.items()}
    sites = []
    edges = []
    for m, _full in chi.sorted_terms():
        c = residue.get(m.key, _ZERO)
        if not c:
            continue
        if not m.is_i_dominant(i):
            raise InconsistentExpansion(
                f"direction {i}: leftover mass {c} at non-dominant {m!r}")
        if not c.is_positive():
            raise InconsistentExpansion(
                f"direction {i}: negative peel coefficient {c} at {m!r}")
        sites.append((m, c))
        ipart = m.i_part(i)
        if not ipart:
            residue[m.key] = _ZERO
            continue
        roots = _ipart_roots(ipart)
        template = sl2_simple_qt(roots)
        images = {}
        for tm, img in _template_images(m, i, template):
            if img.key not in index:
                raise InconsistentExpansion(
                    f"direction {i}: string monomial {img!r} expected below "
                    f"{m!r} is missing from the character")
            images[tm.key] = index[img.key]
            residue[img.key] = residue.get(img.key, _ZERO) - c * template.terms[tm]
        for src_key, dst_key, step in _template_step_pairs(roots):
            edges.append((images[src_key], images[dst_key], i, step))
    leftovers = [index[k] for k, c in residue.items() if c]
    if leftovers:
        raise InconsistentExpansion(
            f"direction {i}: decomposition does not close; leftover mass at "
            f"{leftovers[0]!r}")
    return sites, edges


def audit_expansion(chi: Character) -> None:
    """Verify that every direction's decomposition of the character exists
    with nonnegative coefficients; hard error otherwise."""
    for i in chi.datum.nodes:
        decompose_direction(chi, i)


def string_edges(chi: Character) -> list:
    """All lowering-step edges interior to the per-direction strings of a
    character, deduplicated and canonically sorted.  This is the edge set
    a printed character graph shows."""
    seen = set()
    out = []
    for i in chi.datum.nodes:
        _sites, edges = decompose_direction(chi, i)
        for (src, dst, node, step) in edges:
            tag = (src.key, dst.key, node, step)
            if tag not in seen:
                seen.add(tag)
                out.append((src, dst, node, step))
    out.sort(key=lambda e: (e[0].vdeg, e[0].key, e[2], e[1].key))
    return out
