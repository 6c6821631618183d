"""Command line front end.

Subcommands wrap one library call each and render the result as text or
JSON.  Exit codes: 0 on success, 1 when a precondition is violated (the
message names it), 2 on usage errors.  Output is deterministic for a
fixed request and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blockone import (
    block_chart,
    chart_to_json,
    gl_to_json,
    lambda_minus,
    lambda_plus,
    to_gl,
)
from .characters import parabolic_verma_character, tensor_project_verify, translate_char, verma_character
from .linkage import atypicality, linked_approx, linked_sim, same_central_char, witness_to_json, wt
from .reduction import normalize_block, reduction_to_json
from .scalars import Scalar
from .selfcheck import run_selfcheck
from .weights import Weight, weight_from_json, weight_to_json
from .zigzag import build

__all__ = ["main"]


class UsageError(Exception):
    pass


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _load_weight(path: str) -> Weight:
    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as err:
        raise ValueError(f"cannot read {path}: {err.strerror}") from err
    except json.JSONDecodeError as err:
        raise ValueError(f"{path} is not valid JSON: {err}") from err
    return weight_from_json(payload)


def _parse_scalar(text: str) -> Scalar:
    """A bare name is a symbol; anything else uses the scalar grammar."""
    try:
        return Scalar.symbol(text)
    except ValueError:
        return Scalar.parse(text)


def _character_json(char) -> dict:
    rows = sorted(
        (weight.text(), weight_to_json(weight), coeff)
        for weight, coeff in char.terms_as_weights().items())
    return {
        "anchor": weight_to_json(char.anchor),
        "depth": char.depth,
        "terms": [
            {"weight": payload, "coeff": coeff}
            for _, payload, coeff in rows
        ],
    }


def _cmd_reduce(ns) -> tuple[dict, list[str], int]:
    result = normalize_block(_load_weight(ns.weight))
    lines = [
        f"levi: {result.levi_text()}",
        f"reduced: {result.reduced.text()}",
    ]
    lines.extend(
        f"move: {move.alpha.text()} {move.flag}" for move in result.moves)
    lines.extend(f"note: {note}" for note in result.notes)
    return reduction_to_json(result), lines, 0


def _cmd_linked(ns) -> tuple[dict, list[str], int]:
    a = _load_weight(ns.a)
    b = _load_weight(ns.b)
    payload: dict = {"relation": ns.relation}
    if ns.relation == "central":
        verdict = same_central_char(a, b)
        payload["linked"] = verdict
        return payload, [f"central: {'yes' if verdict else 'no'}"], 0
    if ns.relation == "sim":
        verdict = linked_sim(a, b)
        payload["linked"] = verdict
        return payload, [f"sim: {'yes' if verdict else 'no'}"], 0
    witness = linked_approx(a, b)
    payload["linked"] = witness is not None
    payload["witness"] = None if witness is None else witness_to_json(witness)
    if witness is None:
        return payload, ["approx: no (no witness within bound)"], 0
    lines = [
        "approx: yes",
        f"witness w: {list(witness.w)}",
    ]
    if witness.pairs:
        lines.extend(
            f"witness pair: {alpha.text()} k={k.text()}"
            for alpha, k in witness.pairs)
    else:
        lines.append("witness pairs: none")
    return payload, lines, 0


def _cmd_atyp(ns) -> tuple[dict, list[str], int]:
    degree = atypicality(_load_weight(ns.weight))
    return {"atypicality": degree}, [f"atypicality: {degree}"], 0


def _cmd_wt(ns) -> tuple[dict, list[str], int]:
    vector = wt(_load_weight(ns.weight), _parse_scalar(ns.s), ns.ell)
    payload = {"entries": [[a, c] for a, c in vector.entries]}
    return payload, [f"wt: {vector.text()}"], 0


def _cmd_char(ns) -> tuple[dict, list[str], int]:
    weight = _load_weight(ns.weight)
    if ns.kind == "M":
        char = verma_character(weight, ns.depth)
    else:
        if ns.ell is None:
            raise UsageError("char K needs --ell")
        char = parabolic_verma_character(weight, ns.ell, ns.depth)
    payload = {"kind": ns.kind}
    payload.update(_character_json(char))
    return payload, char.text_lines(), 0


def _cmd_translate(ns) -> tuple[dict, list[str], int]:
    weight = _load_weight(ns.weight)
    s = _parse_scalar(ns.s)
    char = translate_char(ns.kind, ns.a, weight, s, ns.ell, ns.depth)
    payload = {"kind": ns.kind, "a": ns.a}
    payload.update(_character_json(char))
    lines = char.text_lines()
    status = 0
    if ns.verify:
        ok = tensor_project_verify(weight, ns.ell, ns.a, ns.kind, ns.depth, s)
        payload["verified"] = ok
        lines.append(f"verify: {'pass' if ok else 'FAIL'}")
        status = 0 if ok else 1
    return payload, lines, status


def _cmd_neighbour(ns) -> tuple[dict, list[str], int]:
    step = lambda_minus if ns.subcommand == "lambda-minus" else lambda_plus
    result = step(_load_weight(ns.weight), _parse_scalar(ns.s), ns.ell)
    return weight_to_json(result), [result.text()], 0


def _cmd_block_quiver(ns) -> tuple[dict, list[str], int]:
    chart = block_chart(
        _load_weight(ns.weight), _parse_scalar(ns.s), ns.ell, ns.window)
    payload = chart_to_json(chart)
    size = 2 * ns.window + 1
    lines = [f"center: {chart.center.text()}", f"window: {ns.window}"]
    lines.extend(
        f"vertex {i}: {chart.weight_at(i).text()}"
        for i in range(-ns.window, ns.window + 1))
    lines.extend(
        f"D[{i - ns.window}]: " + " ".join(str(x) for x in chart.verma_flags[i])
        for i in range(size))
    lines.extend(
        f"C[{i - ns.window}]: " + " ".join(str(x) for x in chart.cartan[i])
        for i in range(size))
    lines.append(
        "edges: " + " ".join(f"({i},{j})" for i, j in chart.edges))
    lines.append("boundary: " + " ".join(str(i) for i in chart.boundary))
    if ns.figure:
        from .plots import chart_figure, save_figure

        save_figure(chart_figure(chart), ns.figure)
        payload["figure"] = ns.figure
        lines.append(f"figure: {ns.figure}")
    return payload, lines, 0


def _cmd_glmap(ns) -> tuple[dict, list[str], int]:
    nu = to_gl(_load_weight(ns.weight), _parse_scalar(ns.s), ns.ell)
    return gl_to_json(nu), [nu.text()], 0


def _cmd_zigzag(ns) -> tuple[dict, list[str], int]:
    algebra = build(ns.window)
    payload: dict = {
        "window": ns.window,
        "dimension": algebra.dimension,
        "basis": [b.text() for b in algebra.basis],
    }
    lines = [b.text() for b in algebra.basis]
    if ns.table:
        table = algebra.table_lines()
        payload["table"] = table
        lines.extend(table)
    if ns.radical:
        layers = algebra.radical_series()
        payload["radical"] = [[b.text() for b in layer] for layer in layers]
        lines.extend(
            f"rad^{k + 1} dim {len(layer)}: "
            + " ".join(b.text() for b in layer)
            for k, layer in enumerate(layers))
    if ns.submodules is not None:
        module = algebra.projective_module_basis(ns.submodules)
        found = sorted(algebra.projective_submodules(ns.submodules),
                       key=lambda sub: (len(sub), sub))
        payload["projective"] = [b.text() for b in module]
        payload["submodules"] = [[b.text() for b in sub] for sub in found]
        lines.append(
            f"projective {ns.submodules} dim {len(module)}: "
            + " ".join(b.text() for b in module))
        lines.extend(
            f"submodule dim {len(sub)}: " + " ".join(b.text() for b in sub)
            for sub in found)
    if ns.figure:
        from .plots import save_figure, zigzag_figure

        save_figure(zigzag_figure(algebra), ns.figure)
        payload["figure"] = ns.figure
        lines.append(f"figure: {ns.figure}")
    return payload, lines, 0


def _cmd_selfcheck(ns) -> tuple[dict, list[str], int]:
    report = run_selfcheck(seed=ns.seed, cases=ns.cases)
    return report.to_json(), report.text_lines(), 0 if report.ok else 1


def _weight_argument(parser):
    parser.add_argument("weight", metavar="weight.json",
                        help="path to a weight JSON file")


def _family_arguments(parser):
    parser.add_argument("--s", required=True, metavar="SYM",
                        help="coset representative: a symbol name or a "
                             "scalar literal")
    parser.add_argument("--ell", required=True, type=int,
                        help="size of the first coordinate group")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--seed", type=_u64, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="qblocks",
        description="block combinatorics for highest weight modules")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--seed", type=_u64, default=0)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("reduce", parents=[common],
                       help="sort a weight into class-contiguous normal form")
    _weight_argument(p)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("linked", parents=[common],
                       help="test a linkage relation between two weights")
    p.add_argument("a", metavar="a.json")
    p.add_argument("b", metavar="b.json")
    p.add_argument("--relation", choices=("sim", "approx", "central"),
                   default="approx")
    p.set_defaults(handler=_cmd_linked)

    p = sub.add_parser("atyp", parents=[common],
                       help="atypicality degree of a weight")
    _weight_argument(p)
    p.set_defaults(handler=_cmd_atyp)

    p = sub.add_parser("wt", parents=[common],
                       help="block label of a weight in a coordinate family")
    _weight_argument(p)
    _family_arguments(p)
    p.set_defaults(handler=_cmd_wt)

    p = sub.add_parser("char", parents=[common],
                       help="truncated character of a highest weight module")
    p.add_argument("kind", choices=("M", "K"))
    _weight_argument(p)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--depth", required=True, type=int)
    p.set_defaults(handler=_cmd_char)

    p = sub.add_parser("translate", parents=[common],
                       help="translation functor on an induced character")
    p.add_argument("kind", choices=("E", "F"))
    _weight_argument(p)
    p.add_argument("--a", required=True, type=int)
    _family_arguments(p)
    p.add_argument("--depth", required=True, type=int)
    p.add_argument("--verify", action="store_true",
                   help="also check the tensor-and-project identity")
    p.set_defaults(handler=_cmd_translate)

    for name, blurb in (("lambda-minus", "lower neighbour in its block"),
                        ("lambda-plus", "upper neighbour in its block")):
        p = sub.add_parser(name, parents=[common], help=blurb)
        _weight_argument(p)
        _family_arguments(p)
        p.set_defaults(handler=_cmd_neighbour)

    p = sub.add_parser("block-quiver", parents=[common],
                       help="chart of an atypicality-one block")
    _weight_argument(p)
    _family_arguments(p)
    p.add_argument("--window", required=True, type=int)
    p.add_argument("--figure", metavar="PATH", default=None,
                   help="also render the quiver to an image file")
    p.set_defaults(handler=_cmd_block_quiver)

    p = sub.add_parser("glmap", parents=[common],
                       help="general linear weight dictionary")
    _weight_argument(p)
    _family_arguments(p)
    p.set_defaults(handler=_cmd_glmap)

    p = sub.add_parser("zigzag", parents=[common],
                       help="truncated zigzag algebra over a vertex window")
    p.add_argument("--window", required=True, type=int)
    p.add_argument("--table", action="store_true")
    p.add_argument("--radical", action="store_true")
    p.add_argument("--submodules", type=int, default=None, metavar="i")
    p.add_argument("--figure", metavar="PATH", default=None,
                   help="also render the quiver to an image file")
    p.set_defaults(handler=_cmd_zigzag)

    p = sub.add_parser("selfcheck", parents=[common],
                       help="run every randomized oracle suite")
    p.add_argument("--cases", type=int, default=25)
    p.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        payload, lines, status = ns.handler(ns)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except (ValueError, AssertionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if ns.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
