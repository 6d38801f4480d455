"""Command-line front end and the canonical target enumerator."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, List, Optional, Sequence, Tuple

from .sgcore import (
    BICOLOURED,
    BLUE,
    RED,
    SignedGraph,
    Switching,
    apply_switching,
    is_semi_balanced,
    switching_equivalent,
)
from . import targets
from .classify import NP_COMPLETE, POLYNOMIAL, classify, verdict_dict
from .files import ParseError, parse_graph, parse_instance, parse_quadcsp, serialize_graph, serialize_instance
from .hardness import build_reduction
from .ordering import Ordering
from .solver import Instance, Solution, check_solution, solve_h1, solve_oracle, solve_ordered
from .witness import witness_dict


def enum_targets(kind: str, max_n: int) -> Iterator[SignedGraph]:
    """Canonical separable targets: one representative per relabeling and
    switching class, smallest sizes first."""
    if kind == "path":
        if max_n > 14:
            raise ValueError("path enumeration capped at 14 vertices")
        yield from _enum_paths(max_n)
    elif kind == "cycle":
        if max_n > 12:
            raise ValueError("cycle enumeration capped at 12 vertices")
        yield from _enum_cycles(max_n)
    else:
        raise ValueError("unknown kind %r" % kind)


def _min_image(mask: int, perms: List[List[int]]) -> int:
    best = mask
    for perm in perms:
        image = 0
        m = mask
        while m:
            low = m & -m
            image |= 1 << perm[low.bit_length() - 1]
            m ^= low
        if image < best:
            best = image
    return best


def _enum_paths(max_n: int) -> Iterator[SignedGraph]:
    for n in range(1, max_n + 1):
        chords = [(i, j) for i in range(n) for j in range(i + 3, n, 2)]
        index = {ch: k for k, ch in enumerate(chords)}
        reflect = [
            index[(n - 1 - j, n - 1 - i)] for i, j in chords
        ]
        spine = [(i, i + 1, BLUE) for i in range(n - 1)]
        for mask in range(1 << len(chords)):
            if _min_image(mask, [reflect]) < mask:
                continue
            extra = [
                (chords[k][0], chords[k][1], BICOLOURED)
                for k in range(len(chords))
                if mask >> k & 1
            ]
            yield SignedGraph(n, spine + extra)


def _enum_cycles(max_n: int) -> Iterator[SignedGraph]:
    for n in range(4, max_n + 1, 2):
        chords = []
        for i in range(n):
            for j in range(i + 1, n):
                d = min(j - i, n - (j - i))
                if d >= 3 and d % 2 == 1:
                    chords.append((i, j))
        index = {ch: k for k, ch in enumerate(chords)}
        perms = []
        for r in range(n):
            for flip in (False, True):
                perm = []
                for i, j in chords:
                    a = (r - i) % n if flip else (i + r) % n
                    b = (r - j) % n if flip else (j + r) % n
                    perm.append(index[(a, b) if a < b else (b, a)])
                perms.append(perm)
        ring = [(i, i + 1, BLUE) for i in range(n - 1)]
        for mask in range(1 << len(chords)):
            if _min_image(mask, perms) < mask:
                continue
            extra = [
                (chords[k][0], chords[k][1], BICOLOURED)
                for k in range(len(chords))
                if mask >> k & 1
            ]
            for last in (BLUE, RED):
                yield SignedGraph(n, ring + [(0, n - 1, last)] + extra)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(payload) -> None:
    print(json.dumps(payload))


def _solution_payload(
    sol: Optional[Solution], stats: dict
) -> Tuple[dict, int]:
    if sol is None:
        return {
            "decision": "no",
            "map": None,
            "switch": None,
            "stats": {"backtracks": stats.get("backtracks", 0)},
        }, 1
    return {
        "decision": "yes",
        "map": list(sol.mapping),
        "switch": sorted(sol.switching.flipped),
        "stats": {"backtracks": stats.get("backtracks", 0)},
    }, 0


def _translate(
    sol: Optional[Solution], phi: Sequence[int], s: Switching
) -> Optional[Solution]:
    if sol is None:
        return None
    inv = [0] * len(phi)
    for v, image in enumerate(phi):
        inv[image] = v
    mapping = tuple(inv[a] for a in sol.mapping)
    flips = [
        v
        for v in range(len(sol.mapping))
        if (v in sol.switching.flipped) ^ (mapping[v] in s.flipped)
    ]
    return Solution(mapping=mapping, switching=Switching(flips))


def _solve_via_h1(target: SignedGraph, inst: Instance, stats: dict) -> Optional[Solution]:
    found = switching_equivalent(target, targets.build_h1())
    if found is None:
        raise ValueError("target is not equivalent to the 6-vertex unbalanced cycle")
    phi, s = found
    stats.setdefault("backtracks", 0)
    lifted = Instance(inst.g, [frozenset(phi[a] for a in l) for l in inst.lists])
    return _translate(solve_h1(lifted), phi, s)


def _solve_via_ordering(
    target: SignedGraph, inst: Instance, o: Ordering, stats: dict
) -> Optional[Solution]:
    nu = is_semi_balanced(target)
    if nu is None:
        raise ValueError("target is not semi-balanced")
    normalized = apply_switching(target, nu)
    sol = solve_ordered(inst, normalized, o, stats)
    return _translate(sol, tuple(range(target.n)), nu)


def _cmd_solve(args) -> int:
    target = parse_graph(_read(args.target))
    inst = parse_instance(_read(args.instance), target.n)
    stats: dict = {}
    if args.alg == "oracle":
        sol = solve_oracle(inst, target, stats)
    elif args.alg == "h1":
        sol = _solve_via_h1(target, inst, stats)
    else:
        verdict = classify(target)
        if verdict.complexity == NP_COMPLETE:
            if args.alg == "ordered":
                raise ValueError("target is NP-complete; no ordering exists")
            raise ValueError(
                "target is NP-complete (%s); rerun with --alg oracle" % verdict.reason
            )
        if args.alg == "auto" and verdict.reason == "MatchesH1":
            sol = _solve_via_h1(target, inst, stats)
        else:
            if verdict.ordering is None or verdict.reason == "MatchesH1":
                raise ValueError("no usable ordering for this target")
            sol = _solve_via_ordering(target, inst, verdict.ordering, stats)
    if sol is not None:
        problems = check_solution(inst, target, sol)
        assert not problems, problems
    payload, status = _solution_payload(sol, stats)
    _emit(payload)
    return status


def _cmd_classify(args) -> int:
    verdict = classify(parse_graph(_read(args.target)))
    _emit(verdict_dict(verdict))
    return 0 if verdict.complexity == POLYNOMIAL else 1


def _cmd_witness(args) -> int:
    verdict = classify(parse_graph(_read(args.target)))
    if verdict.witness is None:
        _emit(None)
        return 1
    _emit(witness_dict(verdict.witness))
    return 0


def _cmd_ordering(args) -> int:
    verdict = classify(parse_graph(_read(args.target)))
    if verdict.ordering is None:
        print("no ordering: target classified NP-complete", file=sys.stderr)
        return 1
    _emit(
        {
            "white": list(verdict.ordering.white_order),
            "black": list(verdict.ordering.black_order),
        }
    )
    return 0


def _cmd_gadget(args) -> int:
    csp = parse_quadcsp(_read(args.csp))
    sys.stdout.write(serialize_instance(build_reduction(csp, args.ell)))
    return 0


def _cmd_enum(args) -> int:
    for g in enum_targets(args.kind, args.max_n):
        _emit({"graph": serialize_graph(g), "verdict": verdict_dict(classify(g))})
    return 0


def _cmd_verify(args) -> int:
    target = parse_graph(_read(args.target))
    inst = parse_instance(_read(args.instance), target.n)
    data = json.loads(_read(args.solution))
    if not isinstance(data, dict) or "map" not in data or "switch" not in data:
        raise ValueError("solution file needs map and switch entries")
    sol = Solution(
        mapping=tuple(data["map"]), switching=Switching(data["switch"])
    )
    problems = check_solution(inst, target, sol)
    _emit({"valid": not problems, "problems": problems})
    return 0 if not problems else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sephom",
        description="Dichotomy tools for list homomorphism to separable signed graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("classify", help="classify a target file")
    p.add_argument("target")
    p.set_defaults(fn=_cmd_classify)
    p = sub.add_parser("solve", help="solve an instance against a target")
    p.add_argument("target")
    p.add_argument("instance")
    p.add_argument("--alg", choices=("auto", "h1", "ordered", "oracle"), default="auto")
    p.set_defaults(fn=_cmd_solve)
    p = sub.add_parser("oracle", help="solve with the exhaustive oracle")
    p.add_argument("target")
    p.add_argument("instance")
    p.set_defaults(fn=_cmd_solve, alg="oracle")
    p = sub.add_parser("witness", help="hardness witness for a target")
    p.add_argument("target")
    p.set_defaults(fn=_cmd_witness)
    p = sub.add_parser("ordering", help="special min ordering for a target")
    p.add_argument("target")
    p.set_defaults(fn=_cmd_ordering)
    p = sub.add_parser("gadget", help="compile a quadruple CSP to an instance")
    p.add_argument("csp")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(fn=_cmd_gadget)
    p = sub.add_parser("enum", help="stream canonical targets with verdicts")
    p.add_argument("--type", dest="kind", choices=("path", "cycle"), required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.set_defaults(fn=_cmd_enum)
    p = sub.add_parser("verify", help="check a solution file")
    p.add_argument("target")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(fn=_cmd_verify)
    return parser


def run(argv: Sequence[str]) -> int:
    try:
        args = _parser().parse_args(list(argv))
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        return args.fn(args)
    except ParseError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = ["enum_targets", "run", "main"]
