"""Command-line front end.

Every subcommand reads and writes the transducer document format, on
files or standard streams (`-` means stdin/stdout).  Exit codes:
0 success (or a true predicate), 1 a false predicate, 2 any error.

Composition order is left to right everywhere: `compose A B` builds the
map x -> (x applied to A) applied to B.
"""

import argparse
import sys

from .words import Alphabet, EventuallyPeriodicPoint, WordError, format_word
from .machine import CORE, TransducerError, canonical_form, eval_point
from .minimize import minimize
from .algebra import (
    NotInvertible,
    PrefixCodeMap,
    compose,
    from_prefix_code_map,
    invert,
    twist_transducer,
)
from .synchro import core_of, sync_level, witness_pair
from .classify import classify_subgroup, is_in_Gnr, order_in_On, \
    outer_class_equal
from .document import ParseError, parse, parse_prefix_map, serialize
from .randgen import random_gnr_element, random_transducer


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path):
    return parse(_read(path))


def main(argv=None):
    top = argparse.ArgumentParser(
        prog="cantrans",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, help_, *specs):
        p = sub.add_parser(name, help=help_)
        for args, kwargs in specs:
            p.add_argument(*args, **kwargs)
        return p

    infile = (("file",), {"help": "transducer document ('-' for stdin)"})
    outfile = (("-o", "--output"), {"default": "-",
                                    "help": "output file (default stdout)"})

    cmd("validate", "check all non-degeneracy rules", infile)
    cmd("minimize", "reduce to the unique minimal machine", infile, outfile)
    cmd("canon", "print the canonical form", infile)
    cmd("eval", "apply the map to an eventually periodic point", infile,
        (("--point",), {"required": True,
                        "help": "point as 'preperiod | period' token lists"}),
        (("--state",), {"default": None,
                        "help": "start state (core-mode machines)"}),
        (("--depth",), {"type": int, "default": None,
                        "help": "also print this many letters of the image"}))
    cmd("compose", "compose two machines, left to right",
        (("first",), {"help": "applied first"}),
        (("second",), {"help": "applied second"}), outfile)
    cmd("invert", "invert a homeomorphism's machine", infile, outfile)
    cmd("sync", "synchronization level, core states, or a witness pair",
        infile)
    cmd("core", "extract the core as a document", infile, outfile)
    cmd("member", "prefix-exchange group membership (exit 0 yes, 1 no)",
        infile)
    cmd("classify", "subgroup flags summary line", infile)
    cmd("order", "order of a core in the outer-class group", infile,
        (("--cap",), {"type": int, "default": 64,
                      "help": "power search cap (default 64)"}))
    cmd("outer-eq", "same outer class? (exit 0 yes, 1 no)",
        (("first",), {}), (("second",), {}))
    cmd("make-prefix-map", "build a machine from 'eta -> zeta' lines",
        (("file",), {"help": "map file ('-' for stdin)"}),
        (("--n",), {"type": int, "required": True}),
        (("--r",), {"type": int, "required": True}), outfile)
    cmd("make-twist", "machine applying a digit permutation everywhere",
        (("--n",), {"type": int, "required": True}),
        (("--r",), {"type": int, "required": True}),
        (("--perm",), {"required": True,
                       "help": "images of 0..n-1, comma separated"}),
        outfile)
    cmd("random", "seeded random machine",
        (("--n",), {"type": int, "required": True}),
        (("--r",), {"type": int, "required": True}),
        (("--states",), {"type": int, "default": 3}),
        (("--max-out",), {"type": int, "default": 2}),
        (("--seed",), {"type": int, "default": 0}),
        (("--gnr",), {"action": "store_true",
                      "help": "draw a prefix-exchange map instead"}),
        outfile)

    args = top.parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, WordError, TransducerError, NotInvertible,
            OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args):
    if args.command == "validate":
        t = parse(_read(args.file))
        print(f"valid: {len(t.states)} states")
        return 0

    if args.command == "minimize":
        _write(args.output, serialize(minimize(_load(args.file))))
        return 0

    if args.command == "canon":
        print(canonical_form(minimize(_load(args.file))).decode())
        return 0

    if args.command == "eval":
        t = _load(args.file)
        point = EventuallyPeriodicPoint.parse(args.point)
        image = eval_point(t, point, state=args.state)
        print(image)
        if args.depth is not None:
            print(format_word(image.expand(args.depth)))
        return 0

    if args.command == "compose":
        c = compose(_load(args.first), _load(args.second))
        _write(args.output, serialize(c))
        return 0

    if args.command == "invert":
        _write(args.output, serialize(invert(_load(args.file))))
        return 0

    if args.command == "sync":
        t = _load(args.file)
        level = sync_level(t)
        if level is None:
            pair = witness_pair(t)
            print(f"not synchronizing; witness pair {pair[0]} / {pair[1]}")
            return 1
        core = core_of(t)
        print(f"level: {level}")
        print("core states: " + " ".join(str(q) for q in core.states))
        return 0

    if args.command == "core":
        _write(args.output, serialize(core_of(_load(args.file))))
        return 0

    if args.command == "member":
        yes = is_in_Gnr(_load(args.file))
        print("yes" if yes else "no")
        return 0 if yes else 1

    if args.command == "classify":
        flags = classify_subgroup(_load(args.file))
        yn = lambda b: "y" if b else "n"  # noqa: E731
        print(f"G:{yn(flags.in_Gnr)} P:{yn(flags.in_Pn)} "
              f"L:{yn(flags.in_Ln)} sync-level:{flags.level} "
              f"core-states:{flags.core_states}")
        return 0

    if args.command == "order":
        t = _load(args.file)
        if t.mode != CORE:
            t = core_of(minimize(t))
        kind, k = order_in_On(t, cap=args.cap)
        print(kind if k is None else f"{kind} {k}")
        return 0

    if args.command == "outer-eq":
        same = outer_class_equal(_load(args.first), _load(args.second))
        print("equal" if same else "different")
        return 0 if same else 1

    if args.command == "make-prefix-map":
        dom, ran = parse_prefix_map(_read(args.file))
        alphabet = Alphabet(args.n, args.r)
        t = from_prefix_code_map(PrefixCodeMap(dom, ran), alphabet)
        _write(args.output, serialize(t))
        return 0

    if args.command == "make-twist":
        sigma = tuple(int(v) for v in args.perm.split(","))
        t = twist_transducer(sigma, Alphabet(args.n, args.r))
        _write(args.output, serialize(t))
        return 0

    if args.command == "random":
        alphabet = Alphabet(args.n, args.r)
        if args.gnr:
            t = random_gnr_element(alphabet, args.seed)
        else:
            t = random_transducer(alphabet, args.states, args.max_out,
                                  args.seed)
        _write(args.output, serialize(t))
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
