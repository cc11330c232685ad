"""Command-line interface.

Subcommands: ``classify`` (verdicts and witnesses for words), ``runs``
(maximal repetitions of one word), ``census`` (exhaustive classification of
every word of a length), ``count`` (closed-form counts and bounds), and
``bench`` (timing on seeded random words).

Words are read as UTF-8 text but classified at the byte level by default, so
the hot path never re-encodes; ``--unicode`` switches to codepoint symbols.
Exit codes: 0 success, 1 audit failure, 2 usage or input error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import random
import statistics
import sys
import time
from string import ascii_lowercase

from .classify import Verdict, classify_fast, classify_oracle
from .counting import (
    DEFAULT_CENSUS_BUDGET,
    BudgetExceededError,
    OracleMismatchError,
    census,
    count_primitive,
    count_report,
)
from .repetitions import find_maximal_repetitions
from .words import Alphabet, Word

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    """Usage or input problem; reported on stderr with exit code 2."""


def _symbols_of(text: str, unicode_mode: bool) -> str:
    if unicode_mode:
        return text
    # each UTF-8 byte becomes one symbol; ASCII input is unchanged
    return text.encode("utf-8").decode("latin-1")


def _read_lines(handle) -> list[str]:
    words = []
    for lineno, line in enumerate(handle, start=1):
        text = line.rstrip("\r\n")
        if not text.strip():
            print(f"warning: skipping blank line {lineno}", file=sys.stderr)
            continue
        words.append(text)
    return words


def _gather_words(args) -> list[str]:
    if args.words and args.file:
        raise CliError("give words as arguments or with --file, not both")
    if args.words:
        return list(args.words)
    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                return _read_lines(handle)
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc}") from exc
    return _read_lines(sys.stdin)


def _workers_from_env() -> int:
    raw = os.environ.get("INSROBUST_THREADS")
    if raw is None:
        return 0
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"INSROBUST_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise CliError("INSROBUST_THREADS must be >= 0")
    return value


def _classification_record(text: str, result) -> dict:
    record: dict = {"word": text, "verdict": result.verdict.value}
    if result.verdict is Verdict.NON_PRIMITIVE:
        record["root"] = result.root.chars
        record["exponent"] = result.exponent
    elif result.verdict is Verdict.NON_INS_ROBUST:
        record["witnesses"] = [
            {
                "position": wit.position,
                "letter": wit.letter,
                "root": wit.root.chars,
                "power": wit.power,
            }
            for wit in result.witnesses
        ]
    return record


def _classification_line(text: str, result) -> str:
    if result.verdict is Verdict.NON_PRIMITIVE:
        return f"{text}\tnon-primitive\t{result.root.chars}^{result.exponent}"
    if result.verdict is Verdict.INS_ROBUST:
        return f"{text}\tins-robust"
    wit = result.witnesses[0]
    line = (
        f"{text}\tnon-ins-robust\t"
        f"insert {wit.letter} at {wit.position} -> {wit.root.chars}^{wit.power}"
    )
    if len(result.witnesses) > 1:
        line += f"\t(+{len(result.witnesses) - 1} more)"
    return line


def _cmd_classify(args) -> int:
    if args.format == "csv":
        raise CliError("csv output is only available for census and count")
    words = _gather_words(args)
    if not words:
        raise CliError("no input words")
    texts = [_symbols_of(word, args.unicode) for word in words]
    if any(not text for text in texts):
        raise CliError("words must be non-empty")
    if args.alphabet is not None:
        symbols = _symbols_of(args.alphabet, args.unicode)
    else:
        symbols = "".join(sorted(set().union(*map(set, texts))))
        if len(symbols) < 2:
            raise CliError(
                "inferred alphabet has fewer than two symbols;"
                " pass --alphabet to widen it"
            )
    try:
        alphabet = Alphabet(symbols)
        if len(alphabet) < 2:
            raise CliError("alphabet must contain at least two symbols")
        classifier = classify_oracle if args.oracle else classify_fast
        for text in texts:
            result = classifier(Word(text, alphabet))
            if args.format == "jsonl":
                print(json.dumps(_classification_record(text, result), separators=(",", ":")))
            else:
                print(_classification_line(text, result))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return EXIT_OK


def _cmd_runs(args) -> int:
    if args.format == "csv":
        raise CliError("csv output is only available for census and count")
    text = _symbols_of(args.word, args.unicode)
    rows = []
    if text:
        word = Word(text, Alphabet("".join(sorted(set(text)))))
        rows = sorted(
            find_maximal_repetitions(word), key=lambda run: (run.start, run.length)
        )
    if args.format == "jsonl":
        for run in rows:
            record = {
                "start": run.start,
                "length": run.length,
                "period": run.period,
                "exponent": float(run.exponent),
            }
            print(json.dumps(record, separators=(",", ":")))
    else:
        print("start\tlength\tperiod\texponent")
        for run in rows:
            print(f"{run.start}\t{run.length}\t{run.period}\t{float(run.exponent):g}")
    return EXIT_OK


_VERDICT_ORDER = (Verdict.NON_PRIMITIVE, Verdict.INS_ROBUST, Verdict.NON_INS_ROBUST)


def _cmd_census(args) -> int:
    if args.n < 1:
        raise CliError("census requires a word length n >= 1")
    if not 2 <= args.k <= 26:
        raise CliError("census alphabet size must be between 2 and 26 (letters a..z)")
    if args.format == "csv" and args.list:
        raise CliError("--list is not available with csv; use human or jsonl")
    alphabet = Alphabet(ascii_lowercase[: args.k])
    report = census(
        args.n,
        alphabet,
        list_words=args.list,
        budget=args.budget,
        audit_oracle=args.oracle,
        workers=_workers_from_env(),
    )
    tallies = {
        Verdict.NON_PRIMITIVE: report.non_primitive,
        Verdict.INS_ROBUST: report.ins_robust,
        Verdict.NON_INS_ROBUST: report.non_ins_robust,
    }
    if args.format == "jsonl":
        record: dict = {
            "n": report.n,
            "k": report.k,
            "non_primitive": report.non_primitive,
            "ins_robust": report.ins_robust,
            "non_ins_robust": report.non_ins_robust,
        }
        if report.words is not None:
            record["words"] = {
                verdict.value: list(report.words[verdict]) for verdict in _VERDICT_ORDER
            }
        print(json.dumps(record, separators=(",", ":")))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "k", "non_primitive", "ins_robust", "non_ins_robust"])
        writer.writerow(
            [report.n, report.k, report.non_primitive, report.ins_robust, report.non_ins_robust]
        )
    else:
        print(f"census n={report.n} k={report.k} total={report.total}")
        for verdict in _VERDICT_ORDER:
            print(f"{verdict.value}\t{tallies[verdict]}")
        if report.words is not None:
            for verdict in _VERDICT_ORDER:
                for entry in report.words[verdict]:
                    print(f"list\t{verdict.value}\t{entry}")
    return EXIT_OK


def _cmd_count(args) -> int:
    n, k = args.n, args.k
    if n < 1:
        raise CliError("count requires a word length n >= 1")
    if k < 1:
        raise CliError("count requires an alphabet size k >= 1")
    total = k**n
    primitive = count_primitive(n, k)
    bounds = count_report(n, k) if n >= 2 and k >= 2 else None
    note = "bounds require n >= 2 and k >= 2"
    if args.format == "jsonl":
        record: dict = {
            "n": n,
            "k": k,
            "total": total,
            "primitive": primitive,
            "non_primitive": total - primitive,
        }
        if bounds is not None:
            record["non_ins_robust_upper"] = bounds.non_ins_robust_upper
            record["ins_robust_lower"] = bounds.ins_robust_lower
            record["vacuous"] = bounds.vacuous
        else:
            record["note"] = note
        print(json.dumps(record, separators=(",", ":")))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            [
                "n",
                "k",
                "total",
                "primitive",
                "non_primitive",
                "non_ins_robust_upper",
                "ins_robust_lower",
            ]
        )
        upper = bounds.non_ins_robust_upper if bounds is not None else ""
        lower = bounds.ins_robust_lower if bounds is not None else ""
        writer.writerow([n, k, total, primitive, total - primitive, upper, lower])
    else:
        print(f"count n={n} k={k}")
        print(f"total\t{total}")
        print(f"primitive\t{primitive}")
        print(f"non-primitive\t{total - primitive}")
        if bounds is not None:
            print(f"non-ins-robust-upper\t{bounds.non_ins_robust_upper}")
            suffix = " (vacuous)" if bounds.vacuous else ""
            print(f"ins-robust-lower\t{bounds.ins_robust_lower}{suffix}")
        else:
            print(f"note: {note}")
    return EXIT_OK


def _parse_sizes(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if lo < 1 or hi < lo:
                raise CliError(f"bad size range {text!r}")
            sizes = []
            n = lo
            while n <= hi:
                sizes.append(n)
                n *= 2
            return sizes
        sizes = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise CliError(f"sizes must be integers, got {text!r}") from None
    if not sizes or any(size < 1 for size in sizes):
        raise CliError(f"bad sizes {text!r}")
    return sizes


def _random_binary_word(n: int, seed: int) -> str:
    rng = random.Random(seed * 1_000_003 + n)
    return "".join(rng.choices("ab", k=n))


def _loglog_slope(points: list[tuple[int, float]]) -> float:
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(seconds, 1e-9)) for _, seconds in points]
    mean_x = statistics.fmean(xs)
    mean_y = statistics.fmean(ys)
    numerator = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    denominator = sum((x - mean_x) ** 2 for x in xs)
    return numerator / denominator


def _cmd_bench(args) -> int:
    if args.trials < 1:
        raise CliError("bench needs at least one trial")
    sizes = _parse_sizes(args.sizes)
    alphabet = Alphabet("ab")
    fast_medians: list[tuple[int, float]] = []
    print("n\tfast_median_s\tfast_mean_s\toracle_s\tratio")
    for n in sizes:
        word = Word(_random_binary_word(n, args.seed), alphabet)
        times = []
        for _ in range(args.trials):
            started = time.perf_counter()
            classify_fast(word)
            times.append(time.perf_counter() - started)
        fast_median = statistics.median(times)
        fast_mean = statistics.fmean(times)
        fast_medians.append((n, fast_median))
        oracle_seconds = None
        if n <= args.oracle_cutoff:
            started = time.perf_counter()
            classify_oracle(word)
            oracle_seconds = time.perf_counter() - started
        oracle_text = f"{oracle_seconds:.6f}" if oracle_seconds is not None else "-"
        ratio_text = (
            f"{oracle_seconds / fast_median:.1f}"
            if oracle_seconds is not None and fast_median > 0
            else "-"
        )
        print(f"{n}\t{fast_median:.6f}\t{fast_mean:.6f}\t{oracle_text}\t{ratio_text}")
    if len(fast_medians) >= 2:
        print(f"slope\t{_loglog_slope(fast_medians):.3f}")
    else:
        print("slope\t- (need at least two sizes)")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="insrobust",
        description="Decide primitivity and insertion-robustness of finite words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classify words as non-primitive / ins-robust / non-ins-robust"
    )
    p_classify.add_argument(
        "words", nargs="*", help="words to classify (default: read stdin, one per line)"
    )
    p_classify.add_argument("--file", help="read words from a file, one per line")
    p_classify.add_argument(
        "--alphabet", help="explicit alphabet symbols (default: inferred from the whole batch)"
    )
    p_classify.add_argument(
        "--oracle",
        action="store_true",
        help="use the exhaustive insertion oracle and list every witness",
    )
    p_classify.add_argument("--format", choices=("human", "jsonl", "csv"), default="human")
    p_classify.add_argument(
        "--unicode", action="store_true", help="treat input as codepoints instead of bytes"
    )

    p_runs = sub.add_parser("runs", help="list the maximal repetitions of a word")
    p_runs.add_argument("word")
    p_runs.add_argument("--format", choices=("human", "jsonl", "csv"), default="human")
    p_runs.add_argument(
        "--unicode", action="store_true", help="treat input as codepoints instead of bytes"
    )

    p_census = sub.add_parser(
        "census", help="classify every word of length n over the first k lowercase letters"
    )
    p_census.add_argument("n", type=int)
    p_census.add_argument("k", type=int)
    p_census.add_argument("--list", action="store_true", help="include the words of each class")
    p_census.add_argument(
        "--oracle", action="store_true", help="audit every verdict against the insertion oracle"
    )
    p_census.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_CENSUS_BUDGET,
        help="maximum number of classifications (default %(default)s)",
    )
    p_census.add_argument("--format", choices=("human", "jsonl", "csv"), default="human")

    p_count = sub.add_parser("count", help="closed-form counts and bounds")
    p_count.add_argument("n", type=int)
    p_count.add_argument("k", type=int)
    p_count.add_argument("--format", choices=("human", "jsonl", "csv"), default="human")

    p_bench = sub.add_parser("bench", help="time the classifier on seeded random words")
    p_bench.add_argument(
        "--sizes", default="4096..1048576", help="doubling range A..B or a comma list"
    )
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument(
        "--oracle-cutoff",
        type=int,
        default=20000,
        help="largest n at which the oracle is also timed",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "classify": _cmd_classify,
        "runs": _cmd_runs,
        "census": _cmd_census,
        "count": _cmd_count,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
