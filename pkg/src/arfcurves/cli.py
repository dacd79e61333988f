"""Command-line front end exposing every library operation.

Machine output is canonical JSON (sorted keys, compact separators) so
golden tests can compare bytes; tree renderings are plain text.  Inputs
are file paths, inline JSON objects, or ``-`` for standard input.  Exit
codes: 0 on success, 1 on a domain error, 2 on malformed input or
arguments.
"""

import argparse
import json
import sys

from .branch_ring import (arf_closure_value_semigroup, curve_from_dict,
                          curves_equivalent, multiplicity_tree_of_curve, value_set)
from .char_vectors import (build_character_vectors, charset_from_dict,
                           charset_to_dict, reduce_characters,
                           smallest_arf_containing)
from .errors import DomainError, InputError
from .good_semigroup import (GoodSemigroup, good_from_dict, good_to_dict,
                             is_arf_good, is_good, is_local)
from .mult_tree import (render_ascii, render_dot, semigroup_to_tree,
                        tree_from_dict, tree_intersection, tree_to_dict,
                        tree_to_semigroup)
from .numerical import (MultiplicitySequence, arf_characters, arf_closure,
                        is_arf, semigroup_from_dict, semigroup_to_dict,
                        semigroup_to_seq, seq_to_semigroup)


def dumps(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def read_json(source):
    """JSON object from a path, an inline literal, or stdin when `-`."""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise InputError("cannot read %r: %s" % (source, exc))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON in %r: %s" % (source, exc))
    if not isinstance(data, dict):
        raise InputError("expected a JSON object in %r" % (source,))
    return data


def _require(data, keys, what):
    missing = [key for key in keys if key not in data]
    if missing:
        raise InputError("%s literal is missing %s" % (what, ", ".join(missing)))
    return data


def read_numerical(source):
    data = read_json(source)
    if "generators" not in data and not (
            "conductor" in data and "small_elements" in data):
        raise InputError(
            "semigroup literal needs either generators or conductor + small_elements")
    return semigroup_from_dict(data)


def read_good(source):
    return good_from_dict(
        _require(read_json(source), ("d", "conductor", "small_elements"), "semigroup"))


def read_tree(source):
    return tree_from_dict(_require(read_json(source), ("d", "nodes"), "tree"))


def read_charset(source):
    return charset_from_dict(_require(read_json(source), ("d", "vectors"), "character-set"))


def read_curve(source, truncation=None):
    data = read_json(source)
    if truncation is not None:
        data = dict(data, truncation=truncation)
    return curve_from_dict(data)


def parse_bound(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError("bound must be comma-separated integers, got %r" % (text,))


def parse_witness(text):
    parts = text.split(":")
    if len(parts) != 2:
        raise InputError("witness node must be LEVEL:BRANCH, got %r" % (text,))
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError("witness node must be LEVEL:BRANCH, got %r" % (text,))


def render_tree(tree, form):
    if form == "ascii":
        return render_ascii(tree)
    if form == "dot":
        return render_dot(tree)
    return dumps(tree_to_dict(tree))


def closed(S):
    """S itself when Arf, otherwise its Arf closure.

    The multiplicity sequence and the characters of a semigroup are those
    of its blowup chain, which the Arf closure shares, so both commands
    accept any numerical semigroup.
    """
    if is_arf(S):
        return S
    multiplicity = S.small_elements[1] if len(S.small_elements) > 1 else 1
    generators = [s for s in S.small_elements if s]
    generators.extend(S.conductor + i for i in range(multiplicity))
    return arf_closure(generators)


def cmd_closure(args):
    return dumps(semigroup_to_dict(arf_closure(args.generators)))


def cmd_seq(args):
    seq = semigroup_to_seq(closed(read_numerical(args.input)))
    return dumps({"prefix": list(seq.prefix)})


def cmd_unseq(args):
    data = _require(read_json(args.input), ("prefix",), "sequence")
    return dumps(semigroup_to_dict(seq_to_semigroup(MultiplicitySequence(data["prefix"]))))


def cmd_characters(args):
    return dumps({"characters": sorted(arf_characters(closed(read_numerical(args.input))))})


def cmd_check(args):
    data = _require(read_json(args.input), ("d", "conductor", "small_elements"), "semigroup")
    good, reason = is_good(data["d"], data["conductor"], data["small_elements"])
    report = {"is_good": good, "is_local": None, "is_arf": None, "reason": reason}
    if good:
        S = GoodSemigroup(data["d"], data["conductor"], data["small_elements"])
        report["is_local"] = is_local(S)
        report["is_arf"] = is_arf_good(S)
    return dumps(report)


def cmd_tree_from_semigroup(args):
    return dumps(tree_to_dict(semigroup_to_tree(read_good(args.input))))


def cmd_tree_to_semigroup(args):
    return dumps(good_to_dict(tree_to_semigroup(read_tree(args.input))))


def cmd_tree_intersect(args):
    return dumps(tree_to_dict(tree_intersection(read_tree(args.first),
                                                read_tree(args.second))))


def cmd_tree_render(args):
    return render_tree(read_tree(args.input), args.format)


def cmd_chars_build(args):
    witness = parse_witness(args.witness_node) if args.witness_node else None
    V = build_character_vectors(read_good(args.input), witness_node=witness)
    return dumps(charset_to_dict(V))


def cmd_chars_reduce(args):
    V = reduce_characters(read_charset(args.charset), read_good(args.semigroup))
    return dumps(charset_to_dict(V))


def cmd_chars_closure(args):
    return dumps(good_to_dict(smallest_arf_containing(read_charset(args.input))))


def cmd_curve_tree(args):
    tree = multiplicity_tree_of_curve(read_curve(args.input, args.truncation))
    return render_tree(tree, args.format)


def cmd_curve_semigroup(args):
    S = arf_closure_value_semigroup(read_curve(args.input, args.truncation))
    return dumps(good_to_dict(S))


def cmd_curve_values(args):
    values = value_set(read_curve(args.input, args.truncation), parse_bound(args.bound))
    return dumps({"values": [list(v) for v in sorted(values)]})


def cmd_curve_equiv(args):
    equivalent = curves_equivalent(read_curve(args.first, args.truncation),
                                   read_curve(args.second, args.truncation))
    return dumps({"equivalent": equivalent})


def _add_format(parser, default):
    parser.add_argument("--format", choices=("json", "ascii", "dot"), default=default,
                        help="output form (default %(default)s)")


def _add_truncation(parser):
    parser.add_argument("--truncation", type=int, default=None,
                        help="override the truncation order of the curve literal")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="arfcurves",
        description="Arf semigroups, multiplicity trees and equivalence of algebroid curves.")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("closure", help="Arf closure of a numerical semigroup")
    sub.add_argument("generators", type=int, nargs="+", metavar="GEN")
    sub.set_defaults(handler=cmd_closure)

    sub = commands.add_parser("seq", help="multiplicity sequence of a numerical semigroup, via its Arf closure")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_seq)

    sub = commands.add_parser("unseq", help="Arf semigroup of a multiplicity sequence")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_unseq)

    sub = commands.add_parser("characters", help="Arf characters of a numerical semigroup, via its Arf closure")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_characters)

    sub = commands.add_parser("check", help="good/local/Arf status of a semigroup of N^d")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_check)

    tree = commands.add_parser("tree", help="multiplicity-tree operations").add_subparsers(
        dest="tree_command", required=True)
    sub = tree.add_parser("from-semigroup", help="tree of an Arf good semigroup")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_tree_from_semigroup)
    sub = tree.add_parser("to-semigroup", help="good semigroup of a tree")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_tree_to_semigroup)
    sub = tree.add_parser("intersect", help="tree of the intersection semigroup")
    sub.add_argument("first")
    sub.add_argument("second")
    sub.set_defaults(handler=cmd_tree_intersect)
    sub = tree.add_parser("render", help="draw a tree")
    sub.add_argument("input")
    _add_format(sub, "ascii")
    sub.set_defaults(handler=cmd_tree_render)

    chars = commands.add_parser("chars", help="character-vector operations").add_subparsers(
        dest="chars_command", required=True)
    sub = chars.add_parser("build", help="character vectors of an Arf good semigroup")
    sub.add_argument("input")
    sub.add_argument("--witness-node", default=None, metavar="LEVEL:BRANCH",
                     help="node for the added pair witness, when one is needed")
    sub.set_defaults(handler=cmd_chars_build)
    sub = chars.add_parser("reduce", help="drop vectors the rest already determine")
    sub.add_argument("charset")
    sub.add_argument("semigroup")
    sub.set_defaults(handler=cmd_chars_reduce)
    sub = chars.add_parser("closure", help="smallest Arf semigroup containing the vectors")
    sub.add_argument("input")
    sub.set_defaults(handler=cmd_chars_closure)

    curve = commands.add_parser("curve", help="parametrized-curve operations").add_subparsers(
        dest="curve_command", required=True)
    sub = curve.add_parser("tree", help="multiplicity tree of a curve")
    sub.add_argument("input")
    _add_truncation(sub)
    _add_format(sub, "json")
    sub.set_defaults(handler=cmd_curve_tree)
    sub = curve.add_parser("semigroup", help="value semigroup of the Arf closure")
    sub.add_argument("input")
    _add_truncation(sub)
    sub.set_defaults(handler=cmd_curve_semigroup)
    sub = curve.add_parser("values", help="value set of the curve inside a box")
    sub.add_argument("input")
    sub.add_argument("--bound", required=True, metavar="a,b",
                     help="far corner of the value box, comma-separated")
    _add_truncation(sub)
    sub.set_defaults(handler=cmd_curve_values)
    sub = curve.add_parser("equiv", help="decide equivalence of two curves")
    sub.add_argument("first")
    sub.add_argument("second")
    _add_truncation(sub)
    sub.set_defaults(handler=cmd_curve_equiv)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code is None else int(exc.code)
    try:
        output = args.handler(args)
    except InputError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2
    except DomainError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 1
    if output is not None:
        print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
