"""Naive reference implementations and generators shared by the tests.

Every oracle here prefers clarity over speed: exhaustive loops straight
from the definitions, no bitmask tricks, no pruning beyond what keeps the
test sizes fast. The library must agree with these on every input tried.
"""

import itertools

from hypothesis import strategies as st

from sephom import (
    BICOLOURED,
    BLUE,
    RED,
    SignedGraph,
    Switching,
    apply_switching,
)
from sephom.solver import Instance


def all_switchings(n):
    """Every vertex subset, as a Switching."""
    for bits in range(1 << n):
        yield Switching(v for v in range(n) if bits >> v & 1)


def brute_balanced(g):
    """Some switching making every edge blue, by trying all of them."""
    for s in all_switchings(g.n):
        if all(c is BLUE for _, _, c in apply_switching(g, s).edges):
            return s
    return None


def brute_anti_balanced(g):
    """Some switching making every edge red, by trying all of them."""
    for s in all_switchings(g.n):
        if all(c is RED for _, _, c in apply_switching(g, s).edges):
            return s
    return None


def brute_semi_balanced(g):
    """Some switching making every unicoloured edge blue."""
    for s in all_switchings(g.n):
        sw = apply_switching(g, s)
        if all(c is BLUE for _, _, c in sw.edges if c is not BICOLOURED):
            return s
    return None


def brute_chain_exists(g):
    """Chain existence straight from the definition.

    A chain is a walk pair U = u, u_1..u_{k-1}, v and D = u, d_1..d_{k-1}, v
    with k >= 2 where u u_1 and d_{k-1} v are unicoloured, u d_1 and
    u_{k-1} v bicoloured, and each interior step either advances on edges
    with d_i u_{i+1} a non-edge or on bicoloured edges with d_i u_{i+1} not
    bicoloured. Interior steps do not depend on the position, so closure
    over the pairs (u_i, d_i) decides existence.
    """

    def uni(x, y):
        c = g.colour(x, y)
        return c is not None and c is not BICOLOURED

    def bic(x, y):
        return g.colour(x, y) is BICOLOURED

    seen = set()
    for u in range(g.n):
        for x in range(g.n):
            for y in range(g.n):
                if uni(u, x) and bic(u, y):
                    seen.add((x, y))
    frontier = sorted(seen)
    while frontier:
        fresh = []
        for x, y in frontier:
            if any(bic(x, v) and uni(y, v) for v in range(g.n)):
                return True
            for xp in range(g.n):
                for yp in range(g.n):
                    case_a = (
                        g.adjacent(x, xp)
                        and g.adjacent(y, yp)
                        and not g.adjacent(y, xp)
                    )
                    case_b = bic(x, xp) and bic(y, yp) and not bic(y, xp)
                    if (case_a or case_b) and (xp, yp) not in seen:
                        seen.add((xp, yp))
                        fresh.append((xp, yp))
        frontier = fresh
    return False


def brute_chain_min_steps(g):
    """Fewest steps k of any chain, or None.

    Same closure as brute_chain_exists, walked layer by layer: seeds sit at
    position 1, each layer adds one interior step, and a chain accepted after
    d expansions has k = d + 2.
    """

    def uni(x, y):
        c = g.colour(x, y)
        return c is not None and c is not BICOLOURED

    def bic(x, y):
        return g.colour(x, y) is BICOLOURED

    seen = set()
    for u in range(g.n):
        for x in range(g.n):
            for y in range(g.n):
                if uni(u, x) and bic(u, y):
                    seen.add((x, y))
    frontier = sorted(seen)
    depth = 0
    while frontier:
        fresh = []
        for x, y in frontier:
            if any(bic(x, v) and uni(y, v) for v in range(g.n)):
                return depth + 2
            for xp in range(g.n):
                for yp in range(g.n):
                    case_a = (
                        g.adjacent(x, xp)
                        and g.adjacent(y, yp)
                        and not g.adjacent(y, xp)
                    )
                    case_b = bic(x, xp) and bic(y, yp) and not bic(y, xp)
                    if (case_a or case_b) and (xp, yp) not in seen:
                        seen.add((xp, yp))
                        fresh.append((xp, yp))
        frontier = fresh
        depth += 1
    return None


def brute_gf2(variables, equations):
    """One satisfying GF(2) assignment by trying every combination."""
    names = list(variables)
    assert len(names) <= 20, "oracle limited to 20 variables"
    for bits in range(1 << len(names)):
        value = {v: bits >> i & 1 for i, v in enumerate(names)}
        if all(sum(value[v] for v in lhs) % 2 == rhs for lhs, rhs in equations):
            return value
    return None


def solution_errors(inst, h, mapping, flipped):
    """Violations of the homomorphism conditions, from the definition.

    A solution switches the instance at the flipped set, then maps every
    edge onto a target edge: bicoloured edges onto bicoloured edges, and a
    unicoloured edge of colour c onto a bicoloured edge or one of colour c.
    """
    flipped = set(flipped)
    errors = []
    for v, a in enumerate(mapping):
        if a not in inst.lists[v]:
            errors.append("value of %d not in its list" % v)
    for u, v, c in inst.g.edges:
        if c is not BICOLOURED and (u in flipped) != (v in flipped):
            c = RED if c is BLUE else BLUE
        ic = h.colour(mapping[u], mapping[v])
        if ic is None:
            errors.append("edge %d-%d maps to a non-edge" % (u, v))
        elif c is BICOLOURED:
            if ic is not BICOLOURED:
                errors.append("bicoloured edge %d-%d maps unicoloured" % (u, v))
        elif ic is not BICOLOURED and ic is not c:
            errors.append("edge %d-%d maps to the wrong sign" % (u, v))
    return errors


def brute_lhom(inst, h):
    """Exhaustive list homomorphism search over all switchings and maps."""
    g = inst.g
    assert g.n <= 12, "oracle limited to 12 vertices"
    domains = [sorted(l) for l in inst.lists]
    if any(not d for d in domains):
        return None
    for bits in range(1 << g.n):
        flipped = frozenset(v for v in range(g.n) if bits >> v & 1)
        for mapping in itertools.product(*domains):
            if not solution_errors(inst, h, mapping, flipped):
                return mapping, flipped
    return None


def brute_lhom_all(inst, h):
    """Every solution, as (mapping, flipped) pairs."""
    g = inst.g
    assert g.n <= 12, "oracle limited to 12 vertices"
    domains = [sorted(l) for l in inst.lists]
    if any(not d for d in domains):
        return
    for bits in range(1 << g.n):
        flipped = frozenset(v for v in range(g.n) if bits >> v & 1)
        for mapping in itertools.product(*domains):
            if not solution_errors(inst, h, mapping, flipped):
                yield mapping, flipped


def naive_arc_consistency(inst, h):
    """Arc consistency by repeated scanning over plain sets."""
    lists = [set(l) for l in inst.lists]
    changed = True
    while changed:
        changed = False
        for u, v, c in inst.g.edges:
            for x, y in ((u, v), (v, u)):
                keep = set()
                for a in lists[x]:
                    for b in lists[y]:
                        ic = h.colour(a, b)
                        if ic is None:
                            continue
                        if c is BICOLOURED and ic is not BICOLOURED:
                            continue
                        keep.add(a)
                        break
                if keep != lists[x]:
                    lists[x] = keep
                    changed = True
    if any(not l for l in lists):
        return None
    return tuple(frozenset(l) for l in lists)


def random_signed_graph(rng, n, p_edge=0.5, p_bic=0.25, p_red=0.25):
    """Random irreflexive signed graph on n vertices."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() >= p_edge:
                continue
            r = rng.random()
            if r < p_bic:
                colour = BICOLOURED
            elif r < p_bic + p_red:
                colour = RED
            else:
                colour = BLUE
            edges.append((u, v, colour))
    return SignedGraph(n, edges)


def random_bipartite_signed_graph(rng, n, p_edge=0.5, p_bic=0.25, p_red=0.25):
    """Random signed graph whose underlying graph is bipartite."""
    side = [rng.randrange(2) for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] == side[v] or rng.random() >= p_edge:
                continue
            r = rng.random()
            if r < p_bic:
                colour = BICOLOURED
            elif r < p_bic + p_red:
                colour = RED
            else:
                colour = BLUE
            edges.append((u, v, colour))
    return SignedGraph(n, edges)


def random_lists(rng, n, target_n, max_size=3):
    return [
        frozenset(rng.sample(range(target_n), rng.randint(1, min(max_size, target_n))))
        for _ in range(n)
    ]


def random_instance(rng, n, h, p_edge=0.4, bipartite=False, max_list=3):
    maker = random_bipartite_signed_graph if bipartite else random_signed_graph
    g = maker(rng, n, p_edge)
    return Instance(g, random_lists(rng, n, h.n, max_list))


def random_path_target(rng, n, p_chord=0.3):
    """Blue path with a random set of odd-distance chords bicoloured."""
    edges = [(i, i + 1, BLUE) for i in range(n - 1)]
    for i in range(n):
        for j in range(i + 3, n, 2):
            if rng.random() < p_chord:
                edges.append((i, j, BICOLOURED))
    return SignedGraph(n, edges)


def random_switching(rng, n):
    return Switching(v for v in range(n) if rng.randrange(2))


def random_relabel(rng, g):
    """A relabeled copy of g and the permutation used."""
    from sephom import relabel

    phi = list(range(g.n))
    rng.shuffle(phi)
    return relabel(g, phi), tuple(phi)


def reduction_occurrences(csp, ell):
    """Occurrence vertices per variable, following the reduction layout:
    one gadget block of ell + 3 vertices per quadruple, in order."""
    span = ell + 3
    occ = {}
    for k, (qa, qb, qc, qd) in enumerate(csp.quads):
        base = k * span
        occ.setdefault(qa, []).append(base)
        occ.setdefault(qb, []).append(base + ell + 1)
        occ.setdefault(qc, []).append(base + ell)
        occ.setdefault(qd, []).append(base + ell + 2)
    return occ


def gadget_images_rigid(mapping, nquads, ell):
    """Each gadget's inner spine maps onto the long path or onto the short
    path, never a mix."""
    span = ell + 3
    for k in range(nquads):
        base = k * span
        inner = [mapping[base + i] for i in range(1, ell)]
        on_long = all(val == i for i, val in enumerate(inner, start=1))
        on_short = all(val in (ell + 1, ell + 2) for val in inner)
        if not (on_long or on_short):
            return False
    return True


def occurrences_switched_coherently(occ, flipped):
    """No variable with one occurrence switched and another not."""
    return all(len({v in flipped for v in vs}) == 1 for vs in occ.values())


@st.composite
def signed_graph_st(draw, max_n=7):
    """Hypothesis strategy: an arbitrary small signed graph."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            colour = draw(st.sampled_from((None, BLUE, RED, BICOLOURED)))
            if colour is not None:
                edges.append((u, v, colour))
    return SignedGraph(n, edges)
