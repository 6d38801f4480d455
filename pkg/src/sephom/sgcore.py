"""Signed graphs: construction, switching, balance checks, equivalence."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple


class EdgeColour(Enum):
    BLUE = "+"
    RED = "-"
    BICOLOURED = "*"

    @property
    def unicoloured(self) -> bool:
        return self is not EdgeColour.BICOLOURED


BLUE = EdgeColour.BLUE
RED = EdgeColour.RED
BICOLOURED = EdgeColour.BICOLOURED


@dataclass(frozen=True)
class Switching:
    """A set of vertices at which all incident unicoloured edges flip sign."""

    flipped: frozenset

    def __init__(self, flipped: Iterable[int] = ()):
        object.__setattr__(self, "flipped", frozenset(flipped))


@dataclass(frozen=True)
class Bipartition:
    black: frozenset
    white: frozenset

    def side(self, v: int) -> int:
        """0 for white, 1 for black."""
        return 1 if v in self.black else 0


class SignedGraph:
    """An irreflexive signed graph on vertices 0..n-1.

    Each unordered vertex pair carries at most one edge record; a bicoloured
    edge stands for a coincident red-blue pair and is a single record.
    """

    def __init__(self, n: int, edges: Iterable[Tuple[int, int, EdgeColour]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        colour_of = {}
        for u, v, c in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"unknown vertex id in edge {u}-{v}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not isinstance(c, EdgeColour):
                raise ValueError(f"bad edge colour {c!r}")
            key = (u, v) if u < v else (v, u)
            if key in colour_of:
                raise ValueError(f"parallel edge records on {key[0]}-{key[1]}")
            colour_of[key] = c
        self.edges = tuple(sorted((u, v, colour_of[(u, v)]) for u, v in colour_of))
        self._colour = colour_of
        adj = [0] * n
        bic = [0] * n
        for (u, v), c in colour_of.items():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if c is BICOLOURED:
                bic[u] |= 1 << v
                bic[v] |= 1 << u
        self.adj_mask = adj
        self.bic_mask = bic

    def colour(self, u: int, v: int) -> Optional[EdgeColour]:
        return self._colour.get((u, v) if u < v else (v, u))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def neighbours(self, v: int):
        return _bits(self.adj_mask[v])

    def unicoloured_edges(self):
        return [(u, v, c) for u, v, c in self.edges if c is not BICOLOURED]

    def bicoloured_edges(self):
        return [(u, v) for u, v, c in self.edges if c is BICOLOURED]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, edges={list(self.edges)!r})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def apply_switching(g: SignedGraph, s: Switching) -> SignedGraph:
    """Toggle blue/red on unicoloured edges with exactly one endpoint in s."""
    for v in s.flipped:
        if not (0 <= v < g.n):
            raise ValueError(f"unknown vertex id {v} in switching")
    flip = s.flipped
    edges = []
    for u, v, c in g.edges:
        if c.unicoloured and ((u in flip) != (v in flip)):
            c = RED if c is BLUE else BLUE
        edges.append((u, v, c))
    return SignedGraph(g.n, edges)


def relabel(g: SignedGraph, phi: Sequence[int]) -> SignedGraph:
    """Rename vertex v to phi[v]; phi must be a permutation of 0..n-1."""
    if sorted(phi) != list(range(g.n)):
        raise ValueError("relabeling is not a permutation")
    return SignedGraph(g.n, [(phi[u], phi[v], c) for u, v, c in g.edges])


def walk_sign(g: SignedGraph, walk: Sequence[int], bic_signs: Sequence[str] = ()) -> str:
    """Sign of a walk: product of step signs, bicoloured steps as chosen.

    bic_signs supplies one "+"/"-" per bicoloured step, in walk order.
    """
    bit = 0
    used = 0
    for u, v in zip(walk, walk[1:]):
        c = g.colour(u, v)
        if c is None:
            raise ValueError(f"walk step {u}-{v} is not an edge")
        if c is BICOLOURED:
            if used >= len(bic_signs):
                raise ValueError("missing sign choice for bicoloured step")
            choice = bic_signs[used]
            if choice not in ("+", "-"):
                raise ValueError(f"bad sign choice {choice!r}")
            used += 1
            bit ^= choice == "-"
        else:
            bit ^= c is RED
    if used != len(bic_signs):
        raise ValueError("too many sign choices for bicoloured steps")
    return "-" if bit else "+"


def _uniform_switching(g: SignedGraph, target: EdgeColour) -> Optional[Switching]:
    """Switching under which every unicoloured edge gets the target colour."""
    assign = [-1] * g.n
    uni_adj = [[] for _ in range(g.n)]
    for u, v, c in g.edges:
        if c.unicoloured:
            uni_adj[u].append((v, c))
            uni_adj[v].append((u, c))
    for root in range(g.n):
        if assign[root] >= 0:
            continue
        assign[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v, c in uni_adj[u]:
                want = assign[u] ^ (c is not target)
                if assign[v] < 0:
                    assign[v] = want
                    stack.append(v)
                elif assign[v] != want:
                    return None
    return Switching(v for v in range(g.n) if assign[v] == 1)


def is_balanced(g: SignedGraph) -> Optional[Switching]:
    """A switching making every edge blue, if one exists."""
    if any(c is BICOLOURED for _, _, c in g.edges):
        return None
    return _uniform_switching(g, BLUE)


def is_anti_balanced(g: SignedGraph) -> Optional[Switching]:
    """A switching making every edge red, if one exists."""
    if any(c is BICOLOURED for _, _, c in g.edges):
        return None
    return _uniform_switching(g, RED)


def is_semi_balanced(g: SignedGraph) -> Optional[Switching]:
    """A switching making every unicoloured edge blue, if one exists."""
    return _uniform_switching(g, BLUE)


def bipartition(g: SignedGraph) -> Optional[Bipartition]:
    """A 2-colouring of the underlying graph; the least vertex of each
    component goes to the white side."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in g.neighbours(u):
                if side[v] < 0:
                    side[v] = side[u] ^ 1
                    stack.append(v)
                elif side[v] == side[u]:
                    return None
    return Bipartition(
        black=frozenset(v for v in range(g.n) if side[v] == 1),
        white=frozenset(v for v in range(g.n) if side[v] == 0),
    )


def _matching_switching(g: SignedGraph, h: SignedGraph) -> Optional[Switching]:
    """Switching of g making it equal to h (same vertex ids, same structure)."""
    assign = [-1] * g.n
    uni = [[] for _ in range(g.n)]
    for u, v, c in g.edges:
        if c.unicoloured:
            uni[u].append((v, c is not h.colour(u, v)))
            uni[v].append((u, c is not h.colour(u, v)))
    for root in range(g.n):
        if assign[root] >= 0:
            continue
        assign[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v, diff in uni[u]:
                want = assign[u] ^ diff
                if assign[v] < 0:
                    assign[v] = want
                    stack.append(v)
                elif assign[v] != want:
                    return None
    return Switching(v for v in range(g.n) if assign[v] == 1)


def switching_equivalent(
    g: SignedGraph, h: SignedGraph
) -> Optional[Tuple[Tuple[int, ...], Switching]]:
    """A vertex bijection phi and switching s with relabel(apply_switching(g, s), phi) == h.

    Intended for small graphs; bicoloured edges must map onto bicoloured
    edges and the unicoloured structure must match up to switching.
    """
    n = g.n
    if n != h.n or len(g.edges) != len(h.edges):
        return None
    if len(g.bicoloured_edges()) != len(h.bicoloured_edges()):
        return None

    def signature(gr: SignedGraph, v: int) -> Tuple[int, int]:
        bic = bin(gr.bic_mask[v]).count("1")
        return (bin(gr.adj_mask[v]).count("1") - bic, bic)

    gsig = [signature(g, v) for v in range(n)]
    hsig = [signature(h, v) for v in range(n)]
    if sorted(gsig) != sorted(hsig):
        return None

    phi = [-1] * n
    used = [False] * n

    def extend(v: int) -> Optional[Tuple[Tuple[int, ...], Switching]]:
        if v == n:
            mapped = relabel(g, phi)
            s_img = _matching_switching(mapped, h)
            if s_img is None:
                return None
            s = Switching(u for u in range(n) if phi[u] in s_img.flipped)
            return tuple(phi), s
        for w in range(n):
            if used[w] or gsig[v] != hsig[w]:
                continue
            ok = True
            for u in range(v):
                gb = g.bic_mask[v] >> u & 1
                ga = g.adj_mask[v] >> u & 1
                hb = h.bic_mask[w] >> phi[u] & 1
                ha = h.adj_mask[w] >> phi[u] & 1
                if ga != ha or gb != hb:
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used[w] = True
            found = extend(v + 1)
            if found is not None:
                return found
            phi[v] = -1
            used[w] = False
        return None

    return extend(0)


__all__ = [
    "EdgeColour",
    "BLUE",
    "RED",
    "BICOLOURED",
    "SignedGraph",
    "Switching",
    "Bipartition",
    "apply_switching",
    "relabel",
    "walk_sign",
    "is_balanced",
    "is_anti_balanced",
    "is_semi_balanced",
    "bipartition",
    "switching_equivalent",
]
