"""Command-line interface: every engine operation behind one entry point.

One request per process invocation.  JSON with sorted keys is the machine
format; ``--format text`` renders compact human output instead, complexes in
arrow form ("P1 -> P2<-1>").  Identical mathematical requests print
byte-identical output; only ``selftest`` text lines carry (diagnostic,
varying) timings, and its JSON omits them.

Exit codes: 0 success, 1 domain error (a well-formed request the
mathematics rejects), 2 usage error (malformed request).

``--graph`` accepts the shorthand a2..a9, d4..d6, e6..e8 or a path to a
JSON graph file.  Words are space-separated nonzero signed integers
("1 2 -1").  The environment variable ZIGZAGCAT_THREADS bounds internal
parallelism (wall counting fans out per ball element).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from fractions import Fraction

from .acceptance import format_record, run_all
from .action import apply_word, canonical_tuple, tuple_digest
from .burau import burau_of_word, decat_consistency
from .complexes import (Complex, assert_valid, digest, euler_class,
                        gaussian_reduce, hom_total_dims, hom_trigraded_dims,
                        projective)
from .coxeter import CoxeterGraph, graph_from_spec, validate_word
from .curves import crossings_with_standard_arc, curve_to_complex
from .laurent import Laurent
from .metrics import digne_gobet_check, enumerate_interval, spread, word_length_bfs
from .stability import (BASIC_TRANSITIONS, EXTENDED_TRANSITIONS, STATE_SETS,
                        apply_word as _stab_apply_word, count_separating_walls,
                        expand_word, hn_support, nf_certified, nf_expand,
                        normal_form, recognition_report, separating_walls,
                        stable_objects, support_union)


class UsageError(Exception):
    """A malformed request (exit code 2), as opposed to a well-formed one
    the mathematics rejects (ValueError, exit code 1)."""


# ---------------------------------------------------------------------------
# request parsing helpers

def _parse_word(text: str) -> list[int]:
    letters = []
    for token in text.split():
        try:
            v = int(token)
        except ValueError:
            raise UsageError(
                f"word token {token!r} is not a signed integer") from None
        if v == 0:
            raise UsageError("word letters are nonzero signed integers")
        letters.append(v)
    return letters


def _load_graph(spec: str) -> CoxeterGraph:
    try:
        return graph_from_spec(spec)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid graph {spec!r}: {exc}") from exc


def _object(g: CoxeterGraph, name: str) -> Complex:
    m = re.fullmatch(r"P(\d+)", name)
    if not m:
        raise UsageError(f"object {name!r} is not of the form P<vertex>")
    v = int(m.group(1))
    if v not in g.vertices:
        raise ValueError(f"no vertex {v} in this graph")
    return projective(g, v)


def _jsonable(obj):
    """Normalize payloads for json.dumps: tuple keys become comma-joined
    strings, sets become sorted lists, exact scalars print themselves."""
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if isinstance(key, tuple):
                key = ",".join(str(p) for p in key)
            elif not isinstance(key, str):
                key = str(key)
            out[key] = _jsonable(value)
        return out
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(x) for x in obj)
    if isinstance(obj, (Laurent, Fraction)):
        return str(obj)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def _word_str(word) -> str:
    return " ".join(str(x) for x in word) if word else "e"


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (payload, text, exit status)

def _cmd_act(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    c = apply_word(word, _object(g, args.object), reduce=not args.no_reduce)
    return c.to_json(), c.text(), 0


def _cmd_canon(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    t = canonical_tuple(g, word)
    names = [f"P{v}" for v in g.generator_vertices()]
    payload = {
        "digest": tuple_digest(t),
        "objects": {name: {"digest": digest(c), "text": c.text()}
                    for name, c in zip(names, t)},
    }
    lines = [f"{name}: {digest(c)}  {c.text()}" for name, c in zip(names, t)]
    lines.append(f"tuple: {tuple_digest(t)}")
    return payload, "\n".join(lines), 0


def _cmd_reduce(args):
    g = _load_graph(args.graph)
    if args.complex == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.complex) as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read complex file: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"complex file is not JSON: {exc}") from exc
    try:
        c = Complex.from_json(g, data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed complex JSON: {exc}") from exc
    try:
        assert_valid(c)
    except AssertionError as exc:
        # well-formed JSON describing a non-complex: domain error, not usage
        raise ValueError(str(exc)) from None
    r = gaussian_reduce(c)
    return r.to_json(), r.text(), 0


def _cmd_hom(args):
    g = _load_graph(args.graph)
    src_word = _parse_word(args.source_word)
    tgt_word = _parse_word(args.target_word)
    validate_word(g, src_word)
    validate_word(g, tgt_word)
    src = apply_word(src_word, _object(g, args.source))
    tgt = apply_word(tgt_word, _object(g, args.target))
    tri = hom_trigraded_dims(src, tgt)
    by_degree, total = hom_total_dims(src, tgt)
    payload = {"trigraded": tri, "by_degree": by_degree, "total": total}
    lines = [f"({h},{l},{m}): {d}" for (h, l, m), d in sorted(tri.items())]
    lines += [f"degree {h}: {d}" for h, d in sorted(by_degree.items())]
    lines.append(f"total: {total}")
    return payload, "\n".join(lines), 0


def _cmd_euler(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    c = apply_word(word, _object(g, args.object))
    classes = euler_class(c)
    payload = {"classes": {f"P{v}": val for v, val in classes.items()}}
    lines = [f"P{v}: {val}" for v, val in sorted(classes.items())]
    return payload, "\n".join(lines) or "0", 0


def _matrix_text(mj: dict) -> str:
    vertices = mj["vertices"]
    cells = {(e["row"], e["col"]): e["value"] for e in mj["entries"]}
    grid = [[str(cells.get((r, c), "0")) for c in vertices] for r in vertices]
    widths = [max(len(grid[i][j]) for i in range(len(vertices)))
              for j in range(len(vertices))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths))
             for row in grid]
    return "\n".join(lines)


def _cmd_burau(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    mj = burau_of_word(g, word).to_json()
    return mj, _matrix_text(mj), 0


def _cmd_decat_check(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    ok, report = decat_consistency(g, word)
    payload = {"ok": ok, "report": report}
    return payload, "consistent" if ok else "inconsistent", 0


def _cmd_curve(args):
    g = _load_graph(args.graph)
    if args.curve_cmd == "to-complex":
        c = curve_to_complex(g, args.curve)
        return c.to_json(), c.text(), 0
    report = crossings_with_standard_arc(g, args.curve, args.arc)
    lines = [f"{key}: {value}" for key, value in sorted(report.items())]
    return report, "\n".join(lines), 0


def _cmd_spread(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    value = spread(g, word, args.grading)
    return {"grading": args.grading, "spread": value}, str(value), 0


def _cmd_wordlen(args):
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    validate_word(g, word)
    value = word_length_bfs(g, word, args.grading, bound=args.bound)
    payload = {"grading": args.grading, "bound": args.bound, "length": value}
    text = str(value) if value is not None else f"not found within bound {args.bound}"
    return payload, text, 0


def _cmd_interval(args):
    from .coxeter import graph_a

    if args.check_digne_gobet and args.kind != "dual":
        raise UsageError("--check-digne-gobet applies to --kind dual")
    g = graph_a(args.n)
    elements = enumerate_interval(g, args.kind)
    payload = {"kind": args.kind, "n": args.n,
               "count": len(elements), "elements": elements}
    lines = [f"{len(elements)} elements"]
    lines += [_word_str(w) for w in elements]
    if args.check_digne_gobet:
        ok, certificates = digne_gobet_check(g)
        payload["digne_gobet"] = {"ok": ok, "certificates": certificates}
        lines.append(f"digne-gobet: {'ok' if ok else 'FAILED'}")
    return payload, "\n".join(lines), 0


def _cmd_support(args):
    word = _parse_word(args.word)
    plain = expand_word(word)
    base = stable_objects()
    slots = {name: sorted(hn_support(_stab_apply_word(plain, obj)))
             for name, obj in base.items()}
    union = sorted(support_union(word))
    payload = {"slots": slots, "union": union}
    lines = [f"{name}: {' '.join(slots[name])}" for name in sorted(slots)]
    lines.append(f"union: {' '.join(union)}")
    return payload, "\n".join(lines), 0


def _automaton_dump(variant: str) -> dict:
    table = BASIC_TRANSITIONS if variant == "basic" else EXTENDED_TRANSITIONS
    states = sorted({s for s, _ in table} | set(table.values()))
    alphabet = sorted({letter for _, letter in table})
    edges = [{"from": s, "letter": letter, "to": t}
             for (s, letter), t in sorted(table.items())]
    return {
        "variant": variant,
        "states": [{"name": s, "support": sorted(STATE_SETS[s])} for s in states],
        "alphabet": alphabet,
        "edges": edges,
    }


def _cmd_recognize(args):
    if args.dump:
        payload = _automaton_dump(args.variant)
        lines = [f"{e['from']} -({e['letter']})-> {e['to']}"
                 for e in payload["edges"]]
        return payload, "\n".join(lines), 0
    if args.word is None:
        raise UsageError("--word is required unless --dump is given")
    word = _parse_word(args.word)
    report = recognition_report(word, args.variant, args.start)
    if report["accepted"]:
        text = "accepted (" + ", ".join(report["final_states"]) + ")"
    else:
        position = max(r["failed_at"] for r in report["runs"])
        text = f"rejected at position {position} from the right"
    return report, text, 0


def _cmd_normalform(args):
    word = _parse_word(args.word)
    nf = normal_form(word)
    gamma_power, runs = nf
    payload = {
        "gamma_power": gamma_power,
        "runs": [[letter, mult] for letter, mult in runs],
        "expanded_word": nf_expand(nf),
        "certified": nf_certified(word),
    }
    parts = [f"gamma^{gamma_power}"]
    parts += [f"{letter}^{mult}" for letter, mult in runs]
    text = " ".join(parts) + ("  [certified]" if payload["certified"] else "")
    return payload, text, 0


def _cmd_walls(args):
    x = _parse_word(args.x)
    y = _parse_word(args.y)
    walls = separating_walls(x, y, args.radius)
    payload = {"radius": args.radius, "count": len(walls)}
    lines = [str(len(walls))]
    if args.list:
        payload["walls"] = walls
        lines += [f"mu=[{_word_str(w['mu'])}] separator={w['separator']} "
                  f"slot={w['slot']}" for w in walls]
    return payload, "\n".join(lines), 0


def _cmd_selftest(args):
    numbers = None
    if args.only:
        try:
            numbers = [int(tok) for tok in args.only.replace(",", " ").split()]
        except ValueError:
            raise UsageError(
                f"--only wants comma-separated criterion numbers, got {args.only!r}"
            ) from None
    records = run_all(numbers)
    if not records:
        raise UsageError(f"no criteria matched {args.only!r}")
    as_expected = all(rec["ok"] != rec["expected_failure"] for rec in records)
    payload = {
        "ok": as_expected,
        "records": [{k: v for k, v in rec.items() if k != "seconds"}
                    for rec in records],
    }
    text = "\n".join(format_record(rec) for rec in records)
    return payload, text, 0 if as_expected else 1


# ---------------------------------------------------------------------------
# parser

def _add_format(parser, default="json"):
    parser.add_argument("--format", choices=("json", "text"), default=default,
                        help=f"output format (default {default})")


def _add_graph(parser):
    parser.add_argument("--graph", required=True,
                        help="a2..a9, d4..d6, e6..e8, or a JSON graph file")


def _add_word(parser, name="--word", required=True, help_text=None):
    parser.add_argument(name, required=required,
                        help=help_text or 'space-separated signed letters, e.g. "1 2 -1"')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zigzagcat",
        description="Exact engine for braid group actions on complexes of "
                    "projective modules over zigzag algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", help="apply a braid word to a projective")
    _add_graph(p)
    _add_word(p)
    p.add_argument("--object", required=True, help="projective, e.g. P1")
    p.add_argument("--no-reduce", action="store_true",
                   help="skip Gaussian reduction of the image")
    _add_format(p)
    p.set_defaults(handler=_cmd_act)

    p = sub.add_parser("canon", help="canonical tuple digest of a braid word")
    _add_graph(p)
    _add_word(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_canon)

    p = sub.add_parser("reduce", help="Gaussian-reduce a complex JSON file")
    _add_graph(p)
    p.add_argument("--complex", required=True,
                   help="path to a complex JSON file, or - for stdin")
    _add_format(p)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("hom", help="morphism space dimensions between images")
    _add_graph(p)
    p.add_argument("--source", required=True, help="projective, e.g. P1")
    p.add_argument("--target", required=True, help="projective, e.g. P2")
    p.add_argument("--source-word", default="", help="braid word applied to the source")
    p.add_argument("--target-word", default="", help="braid word applied to the target")
    _add_format(p)
    p.set_defaults(handler=_cmd_hom)

    p = sub.add_parser("euler", help="Euler class of an image complex")
    _add_graph(p)
    _add_word(p)
    p.add_argument("--object", required=True, help="projective, e.g. P1")
    _add_format(p)
    p.set_defaults(handler=_cmd_euler)

    p = sub.add_parser("burau", help="Burau matrix of a braid word")
    _add_graph(p)
    _add_word(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_burau)

    p = sub.add_parser("decat-check",
                       help="compare the Euler classes of a word's images "
                            "against its Burau matrix")
    _add_graph(p)
    _add_word(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_decat_check)

    p = sub.add_parser("curve", help="curve dictionary operations")
    curve_sub = p.add_subparsers(dest="curve_cmd", required=True)
    q = curve_sub.add_parser("to-complex", help="complex of a combinatorial curve")
    _add_graph(q)
    q.add_argument("--curve", required=True, help='curve text, e.g. "1 O2 E3"')
    _add_format(q)
    q.set_defaults(handler=_cmd_curve)
    q = curve_sub.add_parser("crossings",
                             help="intersections with a standard arc")
    _add_graph(q)
    q.add_argument("--curve", required=True, help='curve text, e.g. "1 O2 E3"')
    q.add_argument("--arc", required=True, type=int, help="gap index of the arc")
    _add_format(q)
    q.set_defaults(handler=_cmd_curve)

    p = sub.add_parser("spread", help="layer spread of a braid word")
    _add_graph(p)
    _add_word(p)
    p.add_argument("--grading", choices=("classical", "dual"), default="classical")
    _add_format(p)
    p.set_defaults(handler=_cmd_spread)

    p = sub.add_parser("wordlen", help="word length by breadth-first search")
    _add_graph(p)
    _add_word(p)
    p.add_argument("--grading", choices=("classical", "dual"), default="classical")
    p.add_argument("--bound", type=int, default=6, help="search depth bound")
    _add_format(p)
    p.set_defaults(handler=_cmd_wordlen)

    p = sub.add_parser("interval",
                       help="enumerate a weak interval in linear type A")
    p.add_argument("--kind", choices=("classical", "dual"), required=True)
    p.add_argument("--n", type=int, required=True, help="rank of the linear graph")
    p.add_argument("--check-digne-gobet", action="store_true",
                   help="certify dual interval elements as a * b^-1 over "
                        "classical interval pairs")
    _add_format(p)
    p.set_defaults(handler=_cmd_interval)

    p = sub.add_parser("support",
                       help="Harder-Narasimhan supports of the transported "
                            "stable triple (three strands)")
    _add_word(p, help_text='dual letters, e.g. "3 -2" (1,2 twists; 3 band; 4 rotation)')
    _add_format(p)
    p.set_defaults(handler=_cmd_support)

    p = sub.add_parser("recognize", help="run a landing automaton on a word")
    p.add_argument("--variant", choices=("basic", "extended"), default="basic")
    p.add_argument("--start", choices=("A", "B", "C", "M"), default=None,
                   help="start state (default: every natural start)")
    _add_word(p, required=False)
    p.add_argument("--dump", action="store_true",
                   help="export the automaton (states, labels, edges) instead")
    _add_format(p)
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("normalform",
                       help="rotating normal form of a three-strand dual word")
    _add_word(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_normalform)

    p = sub.add_parser("walls",
                       help="count walls separating two transported triples")
    p.add_argument("--x", required=True, help="dual word for the first point")
    p.add_argument("--y", required=True, help="dual word for the second point")
    p.add_argument("--radius", type=int, required=True, help="ball radius budget")
    p.add_argument("--list", action="store_true", help="include the walls themselves")
    _add_format(p)
    p.set_defaults(handler=_cmd_walls)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", default=None,
                   help='subset of criteria, e.g. "1,7"')
    _add_format(p, default="text")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, text, status = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
