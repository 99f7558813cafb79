"""Command line front end.  See docs/unshuffle.1.md for the full page.

Exit status: 0 success, 1 verification mismatch, 2 usage error,
3 enumeration infeasible under the requested engine and cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bsgs import DEFAULT_CAP, EnumerationCapExceeded, StabilizerChain, bfs_enumerate
from .elmsley import perfect_elmsley_word, unshuffle_swap_word
from .groups import (
    FAMILIES,
    family_generators,
    power_of_two_exponent,
    predict_group,
    verify_deck_sizes,
    write_report,
)
from .perm import Permutation
from .shuffles import (
    Step,
    as_word,
    check_deck_size,
    format_word,
    shuffle_order,
    shuffle_permutation,
    word_permutation,
)

OK, MISMATCH, USAGE, INFEASIBLE = 0, 1, 2, 3


def _arrangement_text(p: Permutation) -> str:
    return ",".join(map(str, p.arrangement()))


def _walk_word(word, deck_size):
    """(label, arrangement) pairs: the sorted deck, then one entry per step."""
    current = Permutation.identity(deck_size)
    states = [("start", current.arrangement())]
    for step in as_word(word):
        current = current * shuffle_permutation(step, deck_size)
        states.append((str(step), current.arrangement()))
    return states, current


def _print_steps(states) -> None:
    for label, arrangement in states:
        print(f"{label}: {','.join(map(str, arrangement))}")


def _parse_step(token: str) -> Step:
    word = as_word(token)
    if len(word) != 1:
        raise ValueError(f"expected a single shuffle symbol, got {token!r}")
    return word[0]


def _parse_generators(gens: str, deck_size: int):
    if gens == "LR":
        return family_generators("unshuffle", deck_size)
    if gens == "IO":
        return family_generators("perfect", deck_size)
    words = [w.strip() for w in gens.split(",")]
    if not all(words):
        raise ValueError(f"bad generator list {gens!r}")
    return tuple(word_permutation(w, deck_size) for w in words)


def _parse_permutation(text: str, deck_size: int) -> Permutation:
    if text.lstrip().startswith("("):
        p = Permutation.from_cycle_text(text, deck_size)
    else:
        p = Permutation.from_image_text(text)
    if p.degree != deck_size:
        raise ValueError(f"permutation degree {p.degree} does not match deck size {deck_size}")
    return p


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_shuffle(args) -> int:
    word = as_word(args.word)
    states, final = _walk_word(word, args.deck)
    if args.format == "json":
        payload = {
            "deck": args.deck,
            "word": format_word(word),
            "arrangement": list(final.arrangement()),
        }
        if args.show_steps:
            payload["steps"] = [
                {"step": label, "arrangement": list(arr)} for label, arr in states
            ]
        _emit_json(payload)
    elif args.show_steps:
        _print_steps(states)
    else:
        print(_arrangement_text(final))
    return OK


def _cmd_perm(args) -> int:
    p = shuffle_permutation(_parse_step(args.symbol), args.deck)
    print(p.to_cycle_text() if args.format == "cycles" else p.to_image_text())
    return OK


def _cmd_order(args) -> int:
    step = _parse_step(args.symbol)
    if step.letter in ("L", "R") and not step.inverted:
        order = shuffle_order(step.letter, args.deck)
    else:
        order = shuffle_permutation(step, args.deck).order()
    if args.format == "json":
        _emit_json({"deck": args.deck, "symbol": str(step), "order": order})
    else:
        print(order)
    return OK


def _cmd_swap(args) -> int:
    k = power_of_two_exponent(args.deck)
    if k is None or k < 1:
        raise ValueError(f"swap words need a power-of-two deck size, got {args.deck}")
    word = unshuffle_swap_word(args.a, args.b, k)
    states, final = _walk_word(word, args.deck)
    if args.format == "json":
        _emit_json(
            {
                "deck": args.deck,
                "a": args.a,
                "b": args.b,
                "word": format_word(word),
                "steps": [{"step": label, "arrangement": list(arr)} for label, arr in states],
            }
        )
    else:
        print(format_word(word))
        _print_steps(states)
    return OK


def _cmd_elmsley(args) -> int:
    word = perfect_elmsley_word(args.target, args.deck)
    if args.format == "json":
        payload = {"deck": args.deck, "target": args.target, "word": format_word(word)}
        if args.show_steps:
            states, _ = _walk_word(word, args.deck)
            payload["steps"] = [
                {"step": label, "arrangement": list(arr)} for label, arr in states
            ]
        _emit_json(payload)
    else:
        print(format_word(word))
        if args.show_steps:
            states, _ = _walk_word(word, args.deck)
            _print_steps(states)
    return OK


def _cmd_group_order(args) -> int:
    gens = _parse_generators(args.gens, args.deck)
    if args.engine == "bfs":
        engine_used, order = "bfs", bfs_enumerate(gens, args.cap).order
    else:
        engine_used, order = "schreier", StabilizerChain(gens).order
    if args.format == "json":
        _emit_json(
            {
                "deck": args.deck,
                "gens": args.gens,
                "engine_used": engine_used,
                "order": str(order),
            }
        )
    else:
        print(order)
    return OK


def _cmd_group_predict(args) -> int:
    prediction = predict_group(args.family, args.deck)
    if args.format == "json":
        _emit_json(
            {
                "deck": prediction.deck_size,
                "family": prediction.family,
                "case": prediction.case,
                "order": str(prediction.order),
                "order_factored": prediction.order_factored,
                "characterization": prediction.characterization,
            }
        )
    else:
        print(f"case: {prediction.case}")
        print(f"order: {prediction.order} ({prediction.order_factored})")
        print(f"structure: {prediction.characterization}")
    return OK


def _cmd_group_member(args) -> int:
    gens = _parse_generators(args.gens, args.deck)
    p = _parse_permutation(args.perm, args.deck)
    member = StabilizerChain(gens).contains(p)
    if args.format == "json":
        _emit_json({"deck": args.deck, "gens": args.gens, "member": member})
    else:
        print("true" if member else "false")
    return OK


def _record_line(record) -> str:
    computed = "?" if record.computed_order is None else record.computed_order
    signs = ",".join(f"{s:+d}" for s in record.parities)
    line = (
        f"2n={record.two_n} family={record.family} engine={record.engine_used} "
        f"computed={computed} predicted={record.predicted_order} "
        f"({record.predicted_order_factored}) match={'yes' if record.match else 'NO'} "
        f"signs=({signs})"
    )
    if record.kernel_order_computed is not None:
        line += f" kernel={record.kernel_order_computed}/{record.kernel_order_predicted}"
    return line


def _cmd_verify(args) -> int:
    if args.min > args.max:
        raise ValueError(f"--min {args.min} exceeds --max {args.max}")
    sizes = [s for s in range(args.min, args.max + 1) if s % 2 == 0]
    if not sizes:
        raise ValueError(f"no even deck sizes in [{args.min}, {args.max}]")
    for s in sizes:
        check_deck_size(s)
    records = verify_deck_sizes(sizes, engine=args.engine, cap=args.cap)
    if args.out:
        write_report(records, args.out)
    if args.format == "json":
        _emit_json([r.to_fields() for r in records])
    else:
        for record in records:
            print(_record_line(record))
        matches = sum(r.match for r in records)
        print(f"{len(records)} records, {matches} match")
    if any(r.computed_order is None for r in records):
        return INFEASIBLE
    if not all(r.match for r in records):
        return MISMATCH
    return OK


def _add_deck(parser, required=True):
    parser.add_argument("--deck", type=int, required=required, help="deck size (even)")


def _add_format(parser, choices=("text", "json"), default="text"):
    parser.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unshuffle",
        description="Card-shuffle permutation words and the groups they generate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", help="apply a shuffle word to a sorted deck")
    _add_deck(p)
    p.add_argument("--word", required=True, help="shuffle word, e.g. RL'V")
    p.add_argument("--show-steps", action="store_true", help="print the deck after each step")
    _add_format(p)
    p.set_defaults(handler=_cmd_shuffle)

    p = sub.add_parser("perm", help="print one shuffle as a permutation")
    _add_deck(p)
    p.add_argument("--symbol", required=True, help="one of L R I O V, optional ' for inverse")
    _add_format(p, choices=("images", "cycles"), default="images")
    p.set_defaults(handler=_cmd_perm)

    p = sub.add_parser("order", help="order of a single shuffle")
    _add_deck(p)
    p.add_argument("--symbol", required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_order)

    p = sub.add_parser("swap", help="k-shuffle word exchanging two cards on a 2^k deck")
    _add_deck(p)
    p.add_argument("--a", type=int, required=True, help="first position")
    p.add_argument("--b", type=int, required=True, help="second position")
    _add_format(p)
    p.set_defaults(handler=_cmd_swap)

    p = sub.add_parser("elmsley", help="perfect-shuffle word moving the top card")
    _add_deck(p)
    p.add_argument("--target", type=int, required=True, help="destination position")
    p.add_argument("--show-steps", action="store_true")
    _add_format(p)
    p.set_defaults(handler=_cmd_elmsley)

    p = sub.add_parser("group-order", help="exact order of a generated group")
    _add_deck(p)
    p.add_argument("--gens", default="LR", help="LR, IO, or comma-separated shuffle words")
    p.add_argument("--engine", choices=("auto", "bfs", "schreier"), default="auto")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="BFS element cap")
    _add_format(p)
    p.set_defaults(handler=_cmd_group_order)

    p = sub.add_parser("group-predict", help="theoretical group order and structure")
    _add_deck(p)
    p.add_argument("--family", choices=sorted(FAMILIES), default="unshuffle")
    _add_format(p)
    p.set_defaults(handler=_cmd_group_predict)

    p = sub.add_parser("group-member", help="membership test by sifting")
    _add_deck(p)
    p.add_argument("--gens", default="LR")
    p.add_argument("--perm", required=True, help='image text "2,5,1,4,0,3" or cycle text "(0 2)(1 4)"')
    _add_format(p)
    p.set_defaults(handler=_cmd_group_member)

    p = sub.add_parser("verify", help="check computed group orders against predictions")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, default=52)
    p.add_argument("--engine", choices=("auto", "bfs", "schreier"), default="auto")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out", help="write a JSON report to this path")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.handler(args)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INFEASIBLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
