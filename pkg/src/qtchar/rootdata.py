"""Simply laced root data: Cartan matrices and Dynkin diagram adjacency.

Only types A_n (n >= 1), D_n (n >= 4) and E_6, E_7, E_8 are supported.
Nodes are numbered 1..rank with the following conventions, chosen to match
the worked character tables shipped as fixtures:

* A_n is the path 1 - 2 - ... - n.
* D_n is the path 1 - 2 - ... - (n-2) with the two fork leaves n-1 and n
  attached to node n-2.  For D_4 this puts the trivalent node at 2, adjacent
  to 1, 3 and 4.
* E_n is the path 1 - 2 - ... - (n-1) with node n attached to node 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NodeOutOfRange, UnsupportedType

_FAMILIES = ("A", "D", "E")


@dataclass(frozen=True)
class RootDatum:
    """Immutable simply laced Cartan datum.

    ``cartan`` is the rank x rank Cartan matrix (tuple of tuples, 0-indexed
    internally) and ``adjacency`` maps each 1-based node to the sorted tuple
    of its Dynkin neighbours.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rank:
            raise NodeOutOfRange(f"node {i} not in 1..{self.rank}")
        return self.adjacency[i - 1]

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def __repr__(self):
        return f"RootDatum({self.family}{self.rank})"


def _edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        if rank < 1:
            raise UnsupportedType(f"A_n needs n >= 1, got {rank}")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise UnsupportedType(f"D_n needs n >= 4, got {rank}")
        path = [(i, i + 1) for i in range(1, rank - 2)]
        return path + [(rank - 2, rank - 1), (rank - 2, rank)]
    if family == "E":
        if rank not in (6, 7, 8):
            raise UnsupportedType(f"E_n needs n in {{6,7,8}}, got {rank}")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(3, rank)]
    raise UnsupportedType(f"unknown family {family!r}")


def build_root_datum(family: str, rank: int) -> RootDatum:
    """Construct the root datum for a simply laced pair (family, rank)."""
    family = str(family).upper()
    if family not in _FAMILIES:
        raise UnsupportedType(f"family must be one of {_FAMILIES}, got {family!r}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise UnsupportedType(f"rank must be an integer, got {rank!r}")
    edges = _edges(family, rank)
    adj = [set() for _ in range(rank)]
    for a, b in edges:
        adj[a - 1].add(b)
        adj[b - 1].add(a)
    adjacency = tuple(tuple(sorted(s)) for s in adj)
    cartan = tuple(
        tuple(
            2 if i == j else (-1 if (j + 1) in adjacency[i] else 0)
            for j in range(rank)
        )
        for i in range(rank)
    )
    return RootDatum(family, rank, cartan, adjacency)


def parse_type(text: str) -> RootDatum:
    """Parse a label like ``"D4"`` or ``"e6"`` into a root datum."""
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in _FAMILIES or not text[1:].isdigit():
        raise UnsupportedType(f"cannot parse Dynkin type {text!r}")
    return build_root_datum(text[0].upper(), int(text[1:]))


def neighbors(datum: RootDatum, i: int) -> list[int]:
    """Sorted list of Dynkin neighbours of node ``i``."""
    return list(datum.neighbors(i))
