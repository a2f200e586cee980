"""Command-line front-end.

Subcommands: star (full expansion), enum (L / Q / A listings), word
(3-word codec) and verify (oracle cross-check).  Exit codes: 0 ok,
1 verification failure, 2 input error, 3 internal path mismatch.
All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import algebra, cubes, expansion, oracle, tables, words

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_PATH_MISMATCH = 3


def _parse_multiindex(text: str) -> tuple:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError(f"bad multi-index {text!r}")
    if not values or any(v < 0 for v in values):
        raise ValueError(f"bad multi-index {text!r}")
    return values


def _parse_monomials(text: str) -> tuple:
    out = []
    for part in text.split(","):
        sm = algebra.parse_monomial(part.strip())
        if sm.coeff != 1:
            raise ValueError(
                f"monomial {part!r} must have coefficient 1"
            )
        out.append(sm.mono)
    return tuple(out)


def _parse_word(text: str) -> words.ThreeWord:
    text = text.strip()
    if not text:
        return words.ThreeWord(())
    if "\n" in text:
        rows = [
            [int(v) for v in line.split(",")]
            for line in text.splitlines()
            if line.strip()
        ]
        if len(rows) != 3 or len({len(r) for r in rows}) != 1:
            raise ValueError("expected three equal-length rows")
        cols = tuple(zip(*rows))
    else:
        cols = []
        for chunk in text.split(";"):
            chunk = chunk.strip().strip("()")
            parts = [int(v) for v in chunk.split(",")]
            if len(parts) != 3:
                raise ValueError(f"bad word column {chunk!r}")
            cols.append(tuple(parts))
        cols = tuple(cols)
    return words.ThreeWord(cols)


def _render_word(omega: words.ThreeWord) -> str:
    return ";".join(f"({s},{i},{j})" for s, i, j in omega.columns)


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n" if text else text)
    elif text:
        print(text)


def _add_spec_args(parser, need_pq=True):
    parser.add_argument("--alpha", required=True)
    parser.add_argument("--beta", required=True)
    parser.add_argument("--n", type=int, required=True)
    if need_pq:
        parser.add_argument("--p", required=True)
        parser.add_argument("--q", required=True)


def _read_spec(args, need_pq=True):
    alpha = _parse_multiindex(args.alpha)
    beta = _parse_multiindex(args.beta)
    spec = {"alpha": alpha, "beta": beta, "n": args.n}
    if tables.weight(alpha) > args.n or tables.weight(beta) > args.n:
        raise ValueError("margin weights exceed n")
    if need_pq:
        p = _parse_monomials(args.p)
        q = _parse_monomials(args.q)
        if len(p) != len(alpha) or len(q) != len(beta):
            raise ValueError("monomial lists must match multi-index lengths")
        spec["p"] = p
        spec["q"] = q
    return spec


def cmd_star(args) -> int:
    spec = _read_spec(args)
    paths = ["enumerate", "lift"] if args.path == "both" else [args.path]
    results = [
        expansion.star_product(
            spec["alpha"], spec["beta"], spec["p"], spec["q"], spec["n"],
            path=path,
        )
        for path in paths
    ]
    if len(results) == 2:
        canon = [
            sorted((t.hbar, t.scalar, t.slots) for t in r.terms())
            for r in results
        ]
        if canon[0] != canon[1]:
            print("error: enumerate and lift paths disagree", file=sys.stderr)
            return EXIT_PATH_MISMATCH
    _emit(expansion.render(results[0], args.format), args.output)
    return EXIT_OK


def cmd_enum(args) -> int:
    alpha = _parse_multiindex(args.alpha)
    beta = _parse_multiindex(args.beta)
    kind = args.kind
    if kind == "L":
        items = tables.enumerate_L(alpha, beta, args.n)
        lines = [
            ",".join(str(v) for row in g.rows for v in row) for g in items
        ]
    else:
        if args.m is None:
            raise ValueError(f"enum {kind} requires --m")
        if kind == "A":
            items = words.enumerate_A(alpha, beta, args.n, args.m)
            lines = [_render_word(w) for w in items]
        else:
            items = cubes.enumerate_Q(alpha, beta, args.n, args.m)
            btable = None
            pad = None
            if args.p and args.q:
                p = _parse_monomials(args.p)
                q = _parse_monomials(args.q)
                btable = algebra.build_B(p, q)
                pad = cubes.contributing_support(p, q) + 1
            if args.levels is not None:
                pad = args.levels
            lines = [
                ",".join(
                    str(v)
                    for v in cubes.to_vector(
                        g, layout=args.layout, btable=btable, levels=pad
                    )
                )
                for g in items
            ]
    if args.count_only:
        _emit(str(len(items)), args.output)
    else:
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def cmd_word(args) -> int:
    if args.action == "encode":
        if args.shape is None:
            raise ValueError("encode requires --shape a,b")
        a, b = _parse_multiindex(args.shape)
        vec = (
            [int(v) for v in args.input.split(",")]
            if args.input.strip()
            else []
        )
        gamma = cubes.from_vector(vec, layout="by-level", shape=(a, b))
        _emit(_render_word(words.encode(gamma)), args.output)
        return EXIT_OK
    omega = _parse_word(args.input)
    bad = words.validate_word(omega)
    if bad is not None:
        print(f"error: invalid word: {bad}", file=sys.stderr)
        return EXIT_INPUT
    if args.action == "decode":
        shape = None
        if args.shape:
            shape = tuple(_parse_multiindex(args.shape))
        gamma = words.decode(omega, shape=shape)
        vec = cubes.to_vector(gamma, layout="by-level")
        _emit(",".join(str(v) for v in vec), args.output)
    else:  # stats
        n_cols, s, m, alpha, beta = words.word_stats(omega)
        _emit(
            f"N={n_cols} s={s} m={m} "
            f"alpha={','.join(map(str, alpha))} "
            f"beta={','.join(map(str, beta))}",
            args.output,
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _read_spec(args)
    report = oracle.verify(
        spec["alpha"], spec["beta"], spec["p"], spec["q"], spec["n"],
        drop_scalars=args.inject_drop_scalar,
    )
    lines = [
        f"oracle identity: {'ok' if report.identity_ok else 'FAIL'}",
        f"classical slice: {'ok' if report.classical_ok else 'FAIL'}",
        f"path agreement:  {'ok' if report.paths_ok else 'FAIL'}",
    ]
    lines.extend(report.details)
    _emit("\n".join(lines), args.output)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qstar",
        description="Exact star products of elementary multisymmetric functions",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("QSTAR_THREADS", "1")),
        help="worker hint; results are identical for any value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_star = sub.add_parser("star", help="compute a star product expansion")
    _add_spec_args(p_star)
    p_star.add_argument(
        "--path", choices=["enumerate", "lift", "both"], default="enumerate"
    )
    p_star.add_argument("--format", choices=["text", "json"], default="text")
    p_star.add_argument("--output")
    p_star.set_defaults(func=cmd_star)

    p_enum = sub.add_parser("enum", help="list L, Q or A elements")
    p_enum.add_argument("kind", choices=["L", "Q", "A"])
    _add_spec_args(p_enum, need_pq=False)
    p_enum.add_argument("--m", type=int)
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument(
        "--layout", choices=["by-level", "by-pair"], default="by-level"
    )
    p_enum.add_argument("--p", help="pads Q vectors to the support bound")
    p_enum.add_argument("--q")
    p_enum.add_argument("--levels", type=int, help="pad Q vectors to this many levels")
    p_enum.add_argument("--output")
    p_enum.set_defaults(func=cmd_enum)

    p_word = sub.add_parser("word", help="3-word codec")
    p_word.add_argument("action", choices=["encode", "decode", "stats"])
    p_word.add_argument("input", help="word text, or a by-level vector for encode")
    p_word.add_argument("--shape", help="a,b matrix shape")
    p_word.add_argument("--output")
    p_word.set_defaults(func=cmd_word)

    p_verify = sub.add_parser("verify", help="cross-check against the oracle")
    _add_spec_args(p_verify)
    p_verify.add_argument(
        "--inject-drop-scalar",
        action="store_true",
        help=argparse.SUPPRESS,  # negative-control test hook
    )
    p_verify.add_argument("--output")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
