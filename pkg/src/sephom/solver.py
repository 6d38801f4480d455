"""List-homomorphism solvers: arc consistency, the region/GF(2) algorithm
for the small unbalanced cycle target, an ordered search solver, and the
exhaustive oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

from .sgcore import BICOLOURED, RED, SignedGraph, Switching
from . import targets
from .ordering import Ordering, verify_min_ordering, verify_special


@dataclass(frozen=True)
class Instance:
    g: SignedGraph
    lists: Tuple[FrozenSet[int], ...]

    def __init__(self, g: SignedGraph, lists: Iterable[Iterable[int]]):
        frozen = tuple(frozenset(x) for x in lists)
        if len(frozen) != g.n:
            raise ValueError("need one list per vertex")
        if any(a < 0 for l in frozen for a in l):
            raise ValueError("negative list value")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "lists", frozen)


@dataclass(frozen=True)
class Solution:
    mapping: Tuple[int, ...]
    switching: Switching


@dataclass(frozen=True)
class Gf2System:
    variables: Tuple[Hashable, ...]
    equations: Tuple[Tuple[FrozenSet[Hashable], int], ...]

    def __init__(self, variables, equations):
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(
            self, "equations", tuple((frozenset(vs), b & 1) for vs, b in equations)
        )


def gf2_solve(sys: Gf2System) -> Optional[Dict[Hashable, int]]:
    """One solution of the system (free variables 0), or absent."""
    idx: Dict[Hashable, int] = {}
    for v in sys.variables:
        if v in idx:
            raise ValueError("duplicate variable %r" % (v,))
        idx[v] = len(idx)
    pivots: Dict[int, Tuple[int, int]] = {}
    for vs, bit in sys.equations:
        mask = 0
        for v in vs:
            if v not in idx:
                raise ValueError("undeclared variable %r" % (v,))
            mask |= 1 << idx[v]
        while mask:
            low = mask & -mask
            c = low.bit_length() - 1
            if c not in pivots:
                break
            pm, pb = pivots[c]
            mask ^= pm
            bit ^= pb
        if mask == 0:
            if bit:
                return None
            continue
        pivots[(mask & -mask).bit_length() - 1] = (mask, bit)
    values = [0] * len(idx)
    for c in sorted(pivots, reverse=True):
        mask, bit = pivots[c]
        acc = bit
        rest = mask ^ (1 << c)
        while rest:
            low = rest & -rest
            acc ^= values[low.bit_length() - 1]
            rest ^= low
        values[c] = acc
    return {v: values[i] for v, i in idx.items()}


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _components(g: SignedGraph, vertices: Optional[Iterable[int]] = None) -> List[List[int]]:
    pool = set(range(g.n)) if vertices is None else set(vertices)
    comps: List[List[int]] = []
    seen: set = set()
    for start in sorted(pool):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in _bits(g.adj_mask[v]):
                if w in pool and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _mask_of(values: Iterable[int]) -> int:
    m = 0
    for a in values:
        m |= 1 << a
    return m


def _check_lists(inst: Instance, h: SignedGraph) -> None:
    if any(a >= h.n for l in inst.lists for a in l):
        raise ValueError("list value outside the target")


class _AcNet:
    """Per-edge support masks over target values, with trailed propagation."""

    def __init__(self, g: SignedGraph, h: SignedGraph):
        self.nbrs: List[List[Tuple[int, List[int]]]] = [[] for _ in range(g.n)]
        hadj, hbic = h.adj_mask, h.bic_mask
        for u, v, c in g.edges:
            sup = hbic if c is BICOLOURED else hadj
            self.nbrs[u].append((v, sup))
            self.nbrs[v].append((u, sup))

    def run(
        self,
        masks: List[int],
        seeds: Iterable[int],
        trail: Optional[List[Tuple[int, int]]] = None,
    ) -> bool:
        queue = deque(seeds)
        queued = set(queue)
        while queue:
            w = queue.popleft()
            queued.discard(w)
            for u, sup in self.nbrs[w]:
                old = masks[u]
                new = 0
                for a in _bits(old):
                    if sup[a] & masks[w]:
                        new |= 1 << a
                if new != old:
                    if trail is not None:
                        trail.append((u, old))
                    masks[u] = new
                    if new == 0:
                        return False
                    if u not in queued:
                        queued.add(u)
                        queue.append(u)
        return True


def arc_consistency(
    inst: Instance, h: SignedGraph
) -> Optional[Tuple[FrozenSet[int], ...]]:
    """Fixpoint of the underlying and bicoloured support passes; absent when
    a list empties. Every solution survives."""
    _check_lists(inst, h)
    masks = [_mask_of(l) for l in inst.lists]
    if 0 in masks:
        return None
    if not _AcNet(inst.g, h).run(masks, range(inst.g.n)):
        return None
    return tuple(frozenset(_bits(m)) for m in masks)


class _ParityDsu:
    """Union-find with edge parities and rollback, no path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.par = [0] * n
        self.rank = [0] * n

    def find(self, v: int) -> Tuple[int, int]:
        p = 0
        while self.parent[v] != v:
            p ^= self.par[v]
            v = self.parent[v]
        return v, p

    def union(self, u: int, v: int, bit: int, trail: List[Tuple[int, int, int]]) -> bool:
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            return pu ^ pv == bit
        if self.rank[ru] > self.rank[rv]:
            ru, rv = rv, ru
            pu, pv = pv, pu
        trail.append((ru, rv, self.rank[rv]))
        self.parent[ru] = rv
        self.par[ru] = pu ^ pv ^ bit
        if self.rank[ru] == self.rank[rv]:
            self.rank[rv] += 1
        return True

    def undo(self, trail: List[Tuple[int, int, int]]) -> None:
        while trail:
            child, root, old_rank = trail.pop()
            self.parent[child] = child
            self.par[child] = 0
            self.rank[root] = old_rank


def solve_oracle(
    inst: Instance, h: SignedGraph, stats: Optional[dict] = None
) -> Optional[Solution]:
    """Exact decision by backtracking over maps with arc-consistency pruning;
    switching feasibility is tracked as incremental parity constraints, one
    per edge whose image is unicoloured."""
    _check_lists(inst, h)
    if stats is not None:
        stats.setdefault("backtracks", 0)
    g = inst.g
    masks = [_mask_of(l) for l in inst.lists]
    if 0 in masks:
        return None
    net = _AcNet(g, h)
    if not net.run(masks, range(g.n)):
        return None
    img = [-1] * g.n
    dsu = _ParityDsu(g.n)

    def search(todo: List[int]) -> bool:
        if not todo:
            return True
        v = min(todo, key=lambda x: (bin(masks[x]).count("1"), x))
        rest = [x for x in todo if x != v]
        for a in _bits(masks[v]):
            ok = True
            pairs = []
            for u in _bits(g.adj_mask[v]):
                if img[u] < 0:
                    continue
                ic = h.colour(a, img[u])
                c = g.colour(v, u)
                if ic is None or (c is BICOLOURED and ic is not BICOLOURED):
                    ok = False
                    break
                if c is not BICOLOURED and ic is not BICOLOURED:
                    pairs.append((u, (c is RED) != (ic is RED)))
            dsu_trail: List[Tuple[int, int, int]] = []
            if ok:
                for u, bit in pairs:
                    if not dsu.union(v, u, bit, dsu_trail):
                        ok = False
                        break
            ac_trail: List[Tuple[int, int]] = []
            if ok:
                old = masks[v]
                if old != 1 << a:
                    ac_trail.append((v, old))
                    masks[v] = 1 << a
                ok = net.run(masks, [v], ac_trail)
            if ok:
                img[v] = a
                if search(rest):
                    return True
                img[v] = -1
            for u, old in reversed(ac_trail):
                masks[u] = old
            dsu.undo(dsu_trail)
            if stats is not None:
                stats["backtracks"] += 1
        return False

    for comp in _components(g):
        if not search(comp):
            return None
    bits = []
    for v in range(g.n):
        _, p = dsu.find(v)
        if p:
            bits.append(v)
    return Solution(mapping=tuple(img), switching=Switching(bits))


_H_WHITE = _mask_of((0, 2, 5))
_H_BLACK = _mask_of((1, 3, 4))


def solve_h1(inst: Instance) -> Optional[Solution]:
    """Region decomposition against the canonical 6-vertex unbalanced cycle
    target: side assignment, arc consistency, boundary grounding on {b, w},
    and one GF(2) system per component tying region choices to boundary
    switchings."""
    h = targets.build_h1()
    _check_lists(inst, h)
    g = inst.g
    net = _AcNet(g, h)
    base = [_mask_of(l) for l in inst.lists]
    mapping = [-1] * g.n
    switch = [0] * g.n
    for comp in _components(g):
        side = _bipartition_of(g, comp)
        if side is None:
            return None
        done = False
        for p0_mask, p1_mask in ((_H_BLACK, _H_WHITE), (_H_WHITE, _H_BLACK)):
            masks = list(base)
            ok = True
            for v in comp:
                masks[v] &= p0_mask if side[v] == 0 else p1_mask
                if masks[v] == 0:
                    ok = False
                    break
            if not ok or not net.run(masks, comp):
                continue
            result = _solve_h1_component(g, comp, masks)
            if result is not None:
                for v, a, p in result:
                    mapping[v] = a
                    switch[v] = p
                done = True
                break
        if not done:
            return None
    return Solution(
        mapping=tuple(mapping), switching=Switching(v for v in range(g.n) if switch[v])
    )


def _bipartition_of(g: SignedGraph, comp: List[int]) -> Optional[Dict[int, int]]:
    side: Dict[int, int] = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        v = queue.popleft()
        for w in _bits(g.adj_mask[v]):
            if w not in side:
                side[w] = side[v] ^ 1
                queue.append(w)
            elif side[w] == side[v]:
                return None
    return side


def _solve_h1_component(
    g: SignedGraph, comp: List[int], masks: List[int]
) -> Optional[List[Tuple[int, int, int]]]:
    hw = {v: bool(masks[v] & _H_WHITE) for v in comp}
    boundary = [v for v in comp if masks[v] & 0b001001]
    ground = {v: 0 if masks[v] & 1 else 3 for v in boundary}
    interior = [v for v in comp if v not in ground]
    regions = _components(g, interior)

    variables: List[Hashable] = [("s", a) for a in boundary]
    equations: List[Tuple[FrozenSet[Hashable], int]] = []
    records = []

    def add_eq(vs: Iterable[Hashable], bit: int) -> None:
        sym: set = set()
        for v in vs:
            sym ^= {v}
        equations.append((frozenset(sym), bit))

    for ridx, region in enumerate(regions):
        sigma = {region[0]: 0}
        queue = deque([region[0]])
        in_region = set(region)
        while queue:
            x = queue.popleft()
            for y in _bits(g.adj_mask[x]):
                if y not in in_region:
                    continue
                bit = sigma[x] ^ (g.colour(x, y) is RED)
                if y not in sigma:
                    sigma[y] = bit
                    queue.append(y)
                elif sigma[y] != bit:
                    return None
        t_ok = all(masks[k] >> (2 if hw[k] else 1) & 1 for k in region)
        s_ok = all(masks[k] >> (5 if hw[k] else 4) & 1 for k in region)
        if not t_ok and not s_ok:
            return None
        first: Dict[int, Tuple[int, int]] = {}
        for k in region:
            for a in _bits(g.adj_mask[k]):
                if a not in ground:
                    continue
                a_e = (g.colour(a, k) is RED) ^ sigma[k]
                cls = 0 if ground[a] == 0 else 1
                if cls not in first:
                    first[cls] = (a, a_e)
                else:
                    a0, e0 = first[cls]
                    add_eq([("s", a), ("s", a0)], a_e ^ e0)
        free = t_ok and s_ok
        if free:
            variables.append(("z", ridx))
        if 0 in first and 1 in first:
            (ab, eb), (aw, ew) = first[0], first[1]
            vs: List[Hashable] = [("s", ab), ("s", aw)]
            bit = eb ^ ew
            if free:
                vs.append(("z", ridx))
            elif s_ok:
                bit ^= 1
            add_eq(vs, bit)
        records.append((region, sigma, t_ok, s_ok, free, first))

    sol = gf2_solve(Gf2System(variables, equations))
    if sol is None:
        return None
    out: List[Tuple[int, int, int]] = []
    for a in boundary:
        out.append((a, ground[a], sol[("s", a)]))
    for ridx, (region, sigma, t_ok, s_ok, free, first) in enumerate(records):
        if free:
            use_t = sol[("z", ridx)] == 0
        else:
            use_t = t_ok
        cb = None
        cw = None
        if 0 in first:
            a0, e0 = first[0]
            cb = e0 ^ sol[("s", a0)]
        if 1 in first:
            a0, e0 = first[1]
            cw = e0 ^ sol[("s", a0)]
        if use_t:
            tau = cb if cb is not None else (cw if cw is not None else 0)
            for k in region:
                out.append((k, 2 if hw[k] else 1, sigma[k] ^ tau))
        else:
            d = cw if cw is not None else (1 ^ cb if cb is not None else 0)
            for k in region:
                out.append((k, 5 if hw[k] else 4, sigma[k] ^ (0 if hw[k] else 1) ^ d))
    return out


def solve_ordered(
    inst: Instance, h: SignedGraph, o: Ordering, stats: Optional[dict] = None
) -> Optional[Solution]:
    """Exact search over (target vertex, switch bit) values, ordered by o
    with the + bit first; arc consistency after every assignment and
    chronological backtracking, counting backtracks."""
    if verify_min_ordering(h, o) is not None or verify_special(h, o) is not None:
        raise ValueError("ordering fails verification on the target")
    if any(c is RED for _, _, c in h.edges):
        raise ValueError("target not normalized: red unicoloured edge")
    _check_lists(inst, h)
    if stats is not None:
        stats.setdefault("backtracks", 0)
    g = inst.g
    rank = {a: i for i, a in enumerate(o.white_order)}
    rank.update({a: i for i, a in enumerate(o.black_order)})
    doms: List[List[Tuple[int, int]]] = [
        sorted(((a, p) for a in l for p in (0, 1)), key=lambda v: (rank[v[0]], v[1]))
        for l in inst.lists
    ]
    masks = [(1 << len(d)) - 1 for d in doms]
    if 0 in masks:
        return None

    sup: Dict[Tuple[int, int], List[int]] = {}
    for u, v, c in g.edges:
        for x, y in ((u, v), (v, u)):
            rows = []
            for a, p in doms[x]:
                m = 0
                for j, (b, q) in enumerate(doms[y]):
                    col = h.colour(a, b)
                    if col is None:
                        continue
                    if c is BICOLOURED:
                        good = col is BICOLOURED
                    else:
                        good = col is BICOLOURED or (p ^ q) == (c is RED)
                    if good:
                        m |= 1 << j
                rows.append(m)
            sup[(x, y)] = rows

    nbrs: List[List[int]] = [[] for _ in range(g.n)]
    for u, v, _ in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def propagate(seeds: List[int], trail: List[Tuple[int, int]]) -> bool:
        queue = deque(seeds)
        queued = set(queue)
        while queue:
            w = queue.popleft()
            queued.discard(w)
            for u in nbrs[w]:
                rows = sup[(u, w)]
                old = masks[u]
                new = 0
                for i in _bits(old):
                    if rows[i] & masks[w]:
                        new |= 1 << i
                if new != old:
                    trail.append((u, old))
                    masks[u] = new
                    if new == 0:
                        return False
                    if u not in queued:
                        queued.add(u)
                        queue.append(u)
        return True

    init: List[Tuple[int, int]] = []
    if not propagate(list(range(g.n)), init):
        return None

    chosen = [-1] * g.n

    def search(todo: List[int]) -> bool:
        if not todo:
            return True
        v, rest = todo[0], todo[1:]
        for i in _bits(masks[v]):
            trail: List[Tuple[int, int]] = []
            old = masks[v]
            if old != 1 << i:
                trail.append((v, old))
                masks[v] = 1 << i
            if propagate([v], trail):
                chosen[v] = i
                if search(rest):
                    return True
                chosen[v] = -1
            for u, o_ in reversed(trail):
                masks[u] = o_
            if stats is not None:
                stats["backtracks"] += 1
        return False

    for comp in _components(g):
        if not search(comp):
            return None
    mapping = tuple(doms[v][chosen[v]][0] for v in range(g.n))
    flips = [v for v in range(g.n) if doms[v][chosen[v]][1]]
    return Solution(mapping=mapping, switching=Switching(flips))


def check_solution(inst: Instance, h: SignedGraph, sol: Solution) -> List[str]:
    """Independent validity report; empty means valid."""
    problems: List[str] = []
    g = inst.g
    if len(sol.mapping) != g.n:
        return ["mapping length %d, expected %d" % (len(sol.mapping), g.n)]
    if any(not 0 <= v < g.n for v in sol.switching.flipped):
        return ["switching names a vertex outside the instance"]
    for v, a in enumerate(sol.mapping):
        if not 0 <= a < h.n:
            problems.append("vertex %d mapped outside the target" % v)
        elif a not in inst.lists[v]:
            problems.append("vertex %d mapped to %d, not in its list" % (v, a))
    if problems:
        return problems
    flip = sol.switching.flipped
    for u, v, c in g.edges:
        ic = h.colour(sol.mapping[u], sol.mapping[v])
        if ic is None:
            problems.append("edge %d %d maps to a non-edge" % (u, v))
            continue
        if c is BICOLOURED:
            if ic is not BICOLOURED:
                problems.append("bicoloured edge %d %d maps to %s" % (u, v, ic.value))
            continue
        if ic is BICOLOURED:
            continue
        sign = (c is RED) ^ (u in flip) ^ (v in flip)
        if sign != (ic is RED):
            problems.append("edge %d %d has the wrong image sign" % (u, v))
    return problems


__all__ = [
    "Instance",
    "Solution",
    "Gf2System",
    "gf2_solve",
    "arc_consistency",
    "solve_oracle",
    "solve_h1",
    "solve_ordered",
    "check_solution",
]
