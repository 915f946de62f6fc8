"""Command-line frontend.

One binary with verb-noun subcommands; ``--json`` switches machine output.
Exit codes: 0 success, 1 domain error (witness echoed on stderr), 2 usage.
Numeric set-code input accepts decimal and 0x-hexadecimal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cardinals, collapse, hf, ordinals, wellorder, zfc
from .domains import FinDomain, cantor_bernstein
from .errors import KernelError, ValidationError

CMP_WORDS = {-1: "less", 0: "equal", 1: "greater"}
BRACES_LIMIT = 1 << 16  # codes below this also print in braces form


def _parse_code(text: str) -> int:
    stripped = text.strip()
    if stripped.startswith("{"):
        return hf.encode(stripped)
    try:
        return int(stripped, 0)
    except ValueError:
        raise ValidationError(
            "expected a set code (decimal, 0x hex, or braces)", witness=(text,)
        ) from None


def _emit_code(code: int, as_json: bool) -> None:
    if as_json:
        out = {"code": code}
        if code < BRACES_LIMIT:
            out["braces"] = hf.decode(code)
        print(json.dumps(out))
    elif code < BRACES_LIMIT:
        print(f"{code}  {hf.decode(code)}")
    else:
        print(code)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(value, as_json: bool) -> None:
    if as_json:
        print(json.dumps(value))
    elif isinstance(value, (dict, list)):
        print(json.dumps(value, indent=2))
    else:
        print(value)


# ---------------------------------------------------------------------------
# subcommand handlers


def _run_hf(args) -> None:
    op = args.op
    if op == "eval":
        _emit_code(_parse_code(args.value), args.json)
    elif op == "decode":
        print(hf.decode(_parse_code(args.value)))
    elif op == "encode":
        _emit({"code": hf.encode(args.value)} if args.json else hf.encode(args.value),
              args.json)
    elif op == "union":
        _emit_code(hf.set_union_axiom(_parse_code(args.value)), args.json)
    elif op == "powerset":
        _emit_code(hf.powerset(_parse_code(args.value)), args.json)
    elif op == "closure":
        _emit_code(hf.transitive_closure(_parse_code(args.value)), args.json)
    elif op == "stage":
        _emit(hf.stage(_parse_code(args.value)), args.json)
    elif op == "choice":
        _emit_code(hf.choice_fn(_parse_code(args.value)), args.json)


def _run_ordinal(args) -> None:
    op = args.op
    if op == "cmp":
        a, b = (ordinals.parse_ordinal(x) for x in args.values[:2])
        _emit(CMP_WORDS[ordinals.cmp(a, b)], args.json)
    elif op == "succ":
        _emit(str(ordinals.succ(ordinals.parse_ordinal(args.values[0]))), args.json)
    elif op == "sup":
        hs = [ordinals.parse_ordinal(x) for x in args.values]
        _emit(str(ordinals.sup(hs)), args.json)
    elif op == "cofinality":
        _emit(ordinals.cofinality(ordinals.parse_ordinal(args.values[0])), args.json)
    elif op == "pair":
        a, b = (int(x, 0) for x in args.values[:2])
        _emit(ordinals.pair_index(a, b), args.json)
    elif op == "unpair":
        a, b = ordinals.unpair(int(args.values[0], 0))
        _emit([a, b] if args.json else f"{a} {b}", args.json)
    elif op == "classify":
        order = wellorder.FinWellOrder.from_json(_read_input(args.values[0]))
        _emit(str(ordinals.classify_finite(order)), args.json)


def _check_argcount(args, counts: dict[str, int], parser) -> None:
    need = counts.get(args.op)
    if need is not None and len(args.values) < need:
        parser.error(f"'{args.op}' needs at least {need} argument(s)")


def _run_cardinal(args) -> None:
    op = args.op
    parse = cardinals.parse_cardinal
    if op == "cmp":
        _emit(CMP_WORDS[cardinals.card_cmp(parse(args.values[0]), parse(args.values[1]))],
              args.json)
    elif op == "product":
        _emit(str(cardinals.card_product(parse(args.values[0]), parse(args.values[1]))),
              args.json)
    elif op == "union":
        _emit(str(cardinals.card_union(parse(args.values[0]), parse(args.values[1]))),
              args.json)
    elif op == "beth":
        _emit(str(cardinals.beth(ordinals.parse_ordinal(args.values[0]))), args.json)
    elif op == "rank":
        _emit(str(cardinals.rank_of_cardinal(parse(args.values[0]))), args.json)
    elif op == "stronglimit":
        _emit(cardinals.is_strong_limit(parse(args.values[0])), args.json)


def _run_collapse(args) -> None:
    text = _read_input(args.graph)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        graph = collapse.graph_from_json(text)
    else:
        graph = collapse.parse_graph_text(text)
    mapping = collapse.collapse(graph)
    if args.json:
        print(collapse.collapse_to_json(graph, mapping))
    else:
        for v in graph.vertices.elements:
            code = mapping[v]
            braces = hf.decode(code) if code < BRACES_LIMIT else "..."
            print(f"{v}: {code}  {braces}")


def _run_zfc(args) -> None:
    spec = args.model
    if spec.startswith("vk:") or spec.startswith("{"):
        model = zfc.parse_model_spec(spec)
    else:
        model = zfc.parse_model_spec(_read_input(spec))
    reports = zfc.check_all(model)
    if args.json:
        print(zfc.reports_to_json(reports))
    else:
        print(zfc.reports_to_table(reports))


def _run_cb(args) -> None:
    data = json.loads(_read_input(args.injections))
    try:
        dom_a = FinDomain(data["A"])
        dom_b = FinDomain(data["B"])
        f, g = data["f"], data["g"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"injections JSON needs A, B, f, g: {exc}") from None
    bijection = cantor_bernstein(dom_a, dom_b, f, g)
    _emit(bijection, args.json)


def _run_wo(args) -> None:
    op = args.op
    if op == "recurse":
        order = wellorder.FinWellOrder.from_json(_read_input(args.values[0]))
        limit = args.limit
        if args.condition != "rank":
            raise ValidationError(
                "only the built-in 'rank' condition is available",
                witness=(args.condition,),
            )

        def step(partial, _label):
            if limit is not None and len(partial) >= limit:
                return wellorder.UNDEFINED
            return len(partial)

        _emit(wellorder.recurse(order, step), args.json)
    elif op == "iso":
        a = wellorder.FinWellOrder.from_json(_read_input(args.values[0]))
        b = wellorder.FinWellOrder.from_json(_read_input(args.values[1]))
        _emit(wellorder.max_order_iso(a, b), args.json)
    elif op == "fromchoice":
        domain = FinDomain(json.loads(_read_input(args.values[0])))
        table = wellorder.choice_table_from_json(_read_input(args.values[1]))
        order = wellorder.well_order_from_choice(domain, table)
        _emit(list(order.by_rank()), args.json)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setkernel",
        description="Symbolic set theory kernel: hereditarily finite sets, "
                    "ordinal notations, well-orders, collapse, ZFC checking.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_hf = sub.add_parser("hf", help="hereditarily finite set operations")
    p_hf.add_argument("op", choices=["eval", "decode", "encode", "union",
                                     "powerset", "closure", "stage", "choice"])
    p_hf.add_argument("value", help="set code (decimal/0x) or braces term")
    p_hf.set_defaults(func=_run_hf)

    p_ord = sub.add_parser("ordinal", help="ordinal notation operations")
    p_ord.add_argument("op", choices=["cmp", "succ", "sup", "cofinality",
                                      "pair", "unpair", "classify"])
    p_ord.add_argument("values", nargs="+",
                       help="notations, naturals, or a well-order JSON path")
    p_ord.set_defaults(func=_run_ordinal, argcounts={
        "cmp": 2, "succ": 1, "sup": 1, "cofinality": 1, "pair": 2,
        "unpair": 1, "classify": 1,
    })

    p_card = sub.add_parser("cardinal", help="symbolic cardinal operations")
    p_card.add_argument("op", choices=["cmp", "product", "union", "beth",
                                       "rank", "stronglimit"])
    p_card.add_argument("values", nargs="+", help="fin:<n> / beth:<ordinal>")
    p_card.set_defaults(func=_run_cardinal, argcounts={
        "cmp": 2, "product": 2, "union": 2, "beth": 1, "rank": 1,
        "stronglimit": 1,
    })

    p_col = sub.add_parser("collapse", help="collapse a well-founded graph")
    p_col.add_argument("graph", help="graph file ('-' for stdin): text or pairing JSON")
    p_col.set_defaults(func=_run_collapse)

    p_zfc = sub.add_parser("zfc", help="audit a membership model")
    p_zfc.add_argument("verb", choices=["check"])
    p_zfc.add_argument("model", help="vk:<k>, inline pairing JSON, or a file path")
    p_zfc.set_defaults(func=_run_zfc)

    p_cb = sub.add_parser("cb", help="explicit bijection from two injections")
    p_cb.add_argument("injections", help="JSON file with A, B, f, g ('-' for stdin)")
    p_cb.set_defaults(func=_run_cb)

    p_wo = sub.add_parser("wo", help="well-order engine")
    p_wo.add_argument("op", choices=["recurse", "iso", "fromchoice"])
    p_wo.add_argument("values", nargs="+", help="well-order / domain / choice files")
    p_wo.add_argument("--condition", default="rank",
                      help="recursion condition name (recurse only)")
    p_wo.add_argument("--limit", type=int, default=None,
                      help="stop the recursion after this many values")
    p_wo.set_defaults(func=_run_wo, argcounts={
        "recurse": 1, "iso": 2, "fromchoice": 2,
    })

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    counts = getattr(args, "argcounts", None)
    if counts is not None:
        _check_argcount(args, counts, parser)
    try:
        args.func(args)
    except KernelError as exc:
        witness = getattr(exc, "witness", None)
        print(f"error: {exc}", file=sys.stderr)
        if witness is not None:
            print(f"witness: {witness!r}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
