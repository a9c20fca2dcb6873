"""CLI entry point for morphic-words."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from morphic_words.catalog import CATALOG, get
from morphic_words.errors import LikelyPeriodic, MorphicError, NotFound
from morphic_words.fixedpoint import MorphicPresentation, mortal_letters
from morphic_words.morphism import occurring_letters
from morphic_words.nonuniformize import (
    PipelineConfig,
    expanding_letters,
    first_letter_recurs,
    nonuniformize,
    periodic_presentation,
)
from morphic_words.specfile import emit_spec, read_spec, write_spec
from morphic_words.verify import (
    VerificationReport,
    verify_nonuniform_presentation,
    verify_prefix_equal,
    verify_result_commutation,
)
from morphic_words.words import runs_between_zeros

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morphic-words",
        description="Morphic words: fixed points, codings and non-uniform presentations",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log progress (-vv for debug)")
    sub = parser.add_subparsers(dest="command", required=True)

    source_help = "Spec file, or the name of a catalog entry"

    gen = sub.add_parser("generate", help="Print a prefix of the presented sequence")
    gen.add_argument("spec", help=source_help)
    gen.add_argument("-n", type=int, default=32, help="Prefix length")
    gen.add_argument("--compact", action="store_true", help="Concatenate single-character symbols")

    tr = sub.add_parser("transform", help="Build a non-uniform presentation")
    tr.add_argument("spec", help=source_help)
    tr.add_argument("-o", "--output", type=str, help="Write the resulting spec to this file")
    tr.add_argument("--assert-aperiodic", action="store_true", help="Skip the periodicity guard")
    tr.add_argument("--bound", type=int, default=64, help="Largest exponent tried for an expanding letter")
    tr.add_argument("--squaring-bound", type=int, default=8, help="Largest number of squarings")
    tr.add_argument("--guard-length", type=int, default=4096, help="Prefix length inspected by the guard")
    tr.add_argument("--max-preperiod", type=int, default=64)
    tr.add_argument("--max-period", type=int, default=64)
    tr.add_argument("--check", type=int, default=0, metavar="N", help="Verify the result on N letters")
    tr.add_argument("--periodic", action="store_true", help="Present a likely periodic input directly")

    ver = sub.add_parser("verify", help="Compare two presentations")
    ver.add_argument("spec_a", help=source_help)
    ver.add_argument("spec_b", help=source_help)
    ver.add_argument("-n", type=int, default=10_000, help="Prefix length")

    an = sub.add_parser("analyze", help="Describe a morphism")
    an.add_argument("spec", help=source_help)
    an.add_argument("--bound", type=int, default=64, help="Largest exponent tried for expanding letters")

    runs = sub.add_parser("runs", help="Run lengths of --one letters between consecutive --zero letters")
    runs.add_argument("spec", help=source_help)
    runs.add_argument("--zero", default="0")
    runs.add_argument("--one", default="1")
    runs.add_argument("-n", type=int, default=1000, help="Prefix length scanned")

    cat = sub.add_parser("catalog", help="List catalog entries, or print one as a spec")
    cat.add_argument("name", nargs="?")

    sw = sub.add_parser("sweep", help="Run the pipeline on random uniform presentations")
    sw.add_argument("-n", "--samples", type=int, default=50)
    sw.add_argument("--seed", type=int, default=42)
    sw.add_argument("--length", type=int, default=10_000, help="Prefix length compared per sample")
    sw.add_argument("--coded", action="store_true", help="Add a random coding to two letters")
    sw.add_argument("--output", type=str, help="Save the results to CSV")

    return parser


def load(source: str) -> MorphicPresentation:
    """A spec file path, falling back to a catalog name."""
    if not os.path.exists(source) and source in CATALOG:
        return get(source).presentation
    return read_spec(source)


def print_report(report: VerificationReport) -> None:
    print(report.to_frame().to_string(index=False))
    print("PASS" if report.overall else "FAIL")


# ── Commands ────────────────────────────────────────────────────────────────

def cmd_generate(args) -> int:
    word = load(args.spec).prefix(args.n)
    print(word.compact() if args.compact else str(word))
    return EXIT_OK


def cmd_transform(args) -> int:
    p = load(args.spec)
    config = PipelineConfig(
        expanding_bound=args.bound,
        squaring_bound=args.squaring_bound,
        guard_length=args.guard_length,
        max_preperiod=args.max_preperiod,
        max_period=args.max_period,
        assert_aperiodic=args.assert_aperiodic,
    )
    try:
        result = nonuniformize(p, config)
    except LikelyPeriodic as exc:
        if not args.periodic:
            raise
        print(f"periodic form: {exc.form}")
        item = periodic_presentation(exc.form)
        report = verify_nonuniform_presentation(item, p, args.check) if args.check else None
    else:
        print("--- Non-uniform presentation ---")
        for key, value in result.summary().items():
            print(f"  {key + ':':<14}{value}")
        item = result
        report = None
        if args.check:
            report = VerificationReport.combine(
                [verify_nonuniform_presentation(result, p, args.check), verify_result_commutation(result, 10)]
            )

    if args.output:
        write_spec(item, args.output)
        print(f"Spec saved to {args.output}")
    else:
        print(emit_spec(item), end="")

    if report is not None:
        print_report(report)
        return EXIT_OK if report.overall else EXIT_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_prefix_equal(load(args.spec_a), load(args.spec_b), args.n)
    print_report(report)
    return EXIT_OK if report.overall else EXIT_FAILED


def cmd_analyze(args) -> int:
    p = load(args.spec)
    m = p.morphism
    occurring = occurring_letters(m, p.start)
    mortal = mortal_letters(m)
    print(f"alphabet:        {m.domain}")
    print(f"start:           {p.start}")
    print(f"uniform arity:   {m.uniform_arity if m.uniform_arity is not None else 'non-uniform'}")
    print("prolongable:     yes")
    print("occurring:       {" + ", ".join(s for s in m.domain if s in occurring) + "}")
    print("mortal:          {" + ", ".join(s for s in m.domain if s in mortal) + "}")
    print(f"start recurs:    {'yes' if first_letter_recurs(m, p.start) else 'no'}")
    expanding = expanding_letters(m, p.start, args.bound)
    print("expanding:       " + (", ".join(f"{b} (e={e})" for b, e in expanding.items()) or "none"))
    if not p.coding.is_identity:
        print(f"coding:          {p.coding}")
    print("\n--- Incidence matrix ---")
    print(m.incidence_matrix().to_frame().to_string())
    return EXIT_OK


def cmd_runs(args) -> int:
    word = load(args.spec).prefix(args.n)
    print(" ".join(str(r) for r in runs_between_zeros(word, args.zero, args.one)))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        for name in CATALOG:
            print(f"  {name:<16}{get(name).notes}")
        return EXIT_OK
    print(emit_spec(get(args.name).presentation), end="")
    return EXIT_OK


def cmd_sweep(args) -> int:
    from morphic_words.sweep import pipeline_sweep, random_presentations

    presentations = random_presentations(args.samples, seed=args.seed, coded=args.coded)
    if not presentations:
        raise NotFound(50 * args.samples, "random presentation passing the periodicity guard")
    df = pipeline_sweep(presentations, n=args.length)
    print(f"\n--- Sweep ({len(df)} presentations) ---")
    print(f"  passed:            {int(df['passed'].sum())}")
    if "alphabet_out" in df:
        print(f"  mean added letters:{(df['alphabet_out'] - df['alphabet_in']).mean():.2f}")
        print(f"  max power applied: {int(df['power_applied'].max())}")
    if args.output:
        df.to_csv(args.output, index=False)
        print(f"\nResults saved to {args.output}")
    return EXIT_OK if bool(df["passed"].all()) else EXIT_FAILED


COMMANDS = {
    "generate": cmd_generate,
    "transform": cmd_transform,
    "verify": cmd_verify,
    "analyze": cmd_analyze,
    "runs": cmd_runs,
    "catalog": cmd_catalog,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s",
        )
    try:
        return COMMANDS[args.command](args)
    except MorphicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
