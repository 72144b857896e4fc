"""CLI entry point using Typer."""

import json
import math
from contextlib import contextmanager
from enum import Enum
from importlib.metadata import version as get_version
from typing import Iterator, Optional

import typer
from dotenv import load_dotenv

# Load .env file so SEQC_* settings can live next to the project
load_dotenv()


def _get_seqc_version() -> str:
    """Get seqc version from package metadata."""
    try:
        return get_version("seqc")
    except Exception:
        return "unknown"


from seqc.aperiodic import bm_profile, linear_complexity_N, rational_complexity, rational_complexity_fast
from seqc.bitseq import FiniteWord, PeriodicSequence, parse_sequence, reverse
from seqc.config import get_config, resolve_threads, setup_logging
from seqc.constructions import FAMILIES, FamilySpec, random_tail, verify_family
from seqc.errors import PreconditionError, PropertyFailure, ReferenceMismatch, SeqcError
from seqc.expectation import asymptotics_report, enumerate_expectations, proof_constants
from seqc.numtheory import enumerate_reversible_pairs, mult_order_2
from seqc.periodic import (
    adic_symmetric_periodic,
    linear_complexity_periodic,
    verify_l_sequence_reversal,
    verify_mersenne_maximality,
)
from seqc.reference import GAP_TABLES, PAIR_TABLES, check_gaps, check_pairs, load_table
from seqc.schemas import (
    ALL_MEASURES,
    PAIR_TSV_HEADER,
    AsymptoticsRow,
    Measure,
    expectation_tsv_header,
)
from seqc.suites import SUITES, run_suite

app = typer.Typer(
    name="seqc",
    help="Symmetric 2-adic, rational and linear complexity of binary sequences",
)


class OutputFormat(str, Enum):
    tsv = "tsv"
    json = "json"


class PairMode(str, Enum):
    pp = "pp"
    pc = "pc"


@contextmanager
def _exit_on_error() -> Iterator[None]:
    """Map library errors to their exit codes, message on stderr."""
    try:
        yield
    except SeqcError as e:
        typer.secho(f"Error: {e}", fg=typer.colors.RED, err=True)
        raise typer.Exit(e.exit_code)


def _parse_measures(text: str) -> tuple[Measure, ...]:
    chosen = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in chosen if m not in ALL_MEASURES]
    if unknown or not chosen:
        raise PreconditionError(f"unknown measures {unknown}; choose from {', '.join(ALL_MEASURES)}")
    return tuple(m for m in ALL_MEASURES if m in chosen)


def _parse_bit_range(text: str) -> tuple[int, int]:
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(low), int(high)
    except ValueError:
        raise typer.BadParameter(f"expected a range like 2..8, got {text!r}", param_hint="--bits")


def _emit_json(data: object) -> None:
    typer.echo(json.dumps(data))


def _analyze_word(w: FiniteWord, chosen: tuple[Measure, ...]) -> dict:
    rev = reverse(w)
    result: dict = {"N": w.length, "sequence": w.to_text(), "reverse": rev.to_text()}
    if "rat" in chosen or "2adic" in chosen:
        forward, backward = rational_complexity_fast(w), rational_complexity_fast(rev)
        if "rat" in chosen:
            result["rat"] = {
                "value": forward.norm,
                "reverse": backward.norm,
                "symmetric": min(forward.norm, backward.norm),
                "witness": forward.model_dump(),
                "witness_rev": backward.model_dump(),
            }
        if "2adic" in chosen:
            result["2adic"] = {
                "value": math.log2(forward.norm),
                "reverse": math.log2(backward.norm),
                "symmetric": math.log2(min(forward.norm, backward.norm)),
            }
    if "lin" in chosen or "linexp" in chosen:
        profile = bm_profile(w)
        backward_l = linear_complexity_N(rev)
        if "lin" in chosen:
            result["lin"] = {
                "value": profile.final,
                "reverse": backward_l,
                "symmetric": min(profile.final, backward_l),
                "profile": profile.entries,
                "recurrence": profile.recurrence,
            }
        if "linexp" in chosen:
            result["linexp"] = {
                "value": 1 << profile.final,
                "reverse": 1 << backward_l,
                "symmetric": 1 << min(profile.final, backward_l),
            }
    return result


def _analyze_periodic(seq: PeriodicSequence, chosen: tuple[Measure, ...]) -> dict:
    result: dict = {"T": seq.period, "sequence": seq.initial.to_text(), "value": seq.initial.value}
    if "rat" in chosen or "2adic" in chosen:
        forward, backward, smaller = adic_symmetric_periodic(seq)
        if "rat" in chosen:
            result["rat"] = {
                "value": forward.connection,
                "reverse": backward.connection,
                "symmetric": min(forward.connection, backward.connection),
            }
        if "2adic" in chosen:
            result["2adic"] = {
                "value": forward.lambda_bits,
                "reverse": backward.lambda_bits,
                "symmetric": smaller,
                "report": forward.model_dump(),
                "report_rev": backward.model_dump(),
            }
    if "lin" in chosen or "linexp" in chosen:
        forward_l = linear_complexity_periodic(seq)
        backward_l = linear_complexity_periodic(seq.reversed())
        if "lin" in chosen:
            result["lin"] = {"value": forward_l, "reverse": backward_l, "symmetric": min(forward_l, backward_l)}
        if "linexp" in chosen:
            result["linexp"] = {
                "value": 1 << forward_l,
                "reverse": 1 << backward_l,
                "symmetric": 1 << min(forward_l, backward_l),
            }
    return result


@app.command()
def analyze(
    sequence: str = typer.Argument(..., help="Word as bits (s_0 first), bits:..., nat:v/N or v/N"),
    periodic: Optional[int] = typer.Option(
        None, "--periodic", "-p", help="Treat the word as one period of length T"
    ),
    measures: str = typer.Option(
        ",".join(ALL_MEASURES), "--measures", "-m", help="Comma-separated: rat,2adic,lin,linexp"
    ),
    output: OutputFormat = typer.Option(OutputFormat.json, "--format", "-f", help="Output format"),
) -> None:
    """Measures of one word (or periodic sequence) and of its reversal."""
    setup_logging()
    with _exit_on_error():
        chosen = _parse_measures(measures)
        w = parse_sequence(sequence)
        if periodic is not None:
            if periodic != w.length:
                raise PreconditionError(f"--periodic {periodic} but the word has length {w.length}")
            result = _analyze_periodic(PeriodicSequence(w), chosen)
        else:
            result = _analyze_word(w, chosen)

    if output is OutputFormat.json:
        _emit_json(result)
        return
    typer.echo("measure\tvalue\treverse\tsymmetric")
    for key in ("rat", "2adic", "lin", "linexp"):
        if key in result:
            block = result[key]
            typer.echo(f"{key}\t{block['value']}\t{block['reverse']}\t{block['symmetric']}")


@app.command()
def expected(
    n_min: int = typer.Option(2, "--min", help="Smallest word length N"),
    n_max: int = typer.Option(..., "--max", help="Largest word length N"),
    measures: str = typer.Option(
        ",".join(ALL_MEASURES), "--measures", "-m", help="Comma-separated: rat,2adic,lin,linexp"
    ),
    check_paper: bool = typer.Option(
        False, "--check-paper", help="Compare rat/linexp gaps with the published tables"
    ),
    asymptotics: bool = typer.Option(
        False, "--asymptotics", help="Print the report-only asymptotic comparison instead"
    ),
    bounds: bool = typer.Option(
        False, "--bounds", help="Add the family lower bounds M1+M2 and K1+K2 to each row"
    ),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", help="Worker processes"),
    output: OutputFormat = typer.Option(OutputFormat.tsv, "--format", "-f", help="Output format"),
) -> None:
    """Exact expected complexities over all words of length N, one row per N."""
    setup_logging()
    with _exit_on_error():
        chosen = _parse_measures(measures)
        max_n = get_config().expectation.max_n
        if not 1 <= n_min <= n_max <= max_n:
            raise PreconditionError(f"need 1 <= --min <= --max <= {max_n}, got {n_min}..{n_max}")
        workers = resolve_threads(threads)

        if asymptotics:
            if output is OutputFormat.tsv:
                typer.echo(AsymptoticsRow.header())
            for arow in asymptotics_report(max(2, n_min), n_max, workers):
                typer.echo(arow.to_tsv_row() if output is OutputFormat.tsv else json.dumps(arow.model_dump()))
            return

        if output is OutputFormat.tsv:
            header = expectation_tsv_header(chosen)
            if bounds:
                header += "\tm1_plus_m2\tk1_plus_k2\tm_over_n\tk_over_n"
            typer.echo(header)

        gaps: dict[str, list[tuple[int, object]]] = {m: [] for m in GAP_TABLES if m in chosen}
        for n in range(n_min, n_max + 1):
            row = enumerate_expectations(n, chosen, workers)
            for m in gaps:
                gaps[m].append((n, row.difference(m)))
            constants = proof_constants(n) if bounds and n >= 2 else None
            if output is OutputFormat.json:
                data = row.to_json_dict()
                if constants is not None:
                    data["bounds"] = constants.model_dump(mode="json")
                _emit_json(data)
            else:
                line = row.to_tsv_row(chosen)
                if bounds:
                    line += _bounds_cells(constants)
                typer.echo(line)

        if check_paper:
            _check_gap_tables(gaps)


def _bounds_cells(constants) -> str:
    if constants is None:
        return "\t\t\t\t"
    n = constants.N
    rat, lin = constants.rational_bound, constants.linexp_bound
    return f"\t{float(rat):.6f}\t{float(lin):.6f}\t{float(rat) / n:.6f}\t{float(lin) / n:.6f}"


def _check_gap_tables(gaps: dict[str, list[tuple[int, object]]]) -> None:
    if not gaps:
        raise PreconditionError("--check-paper needs the rat or linexp measure")
    offending: list[int] = []
    messages: list[str] = []
    for measure, rows in gaps.items():
        check = check_gaps(rows, GAP_TABLES[measure])
        for warning in check.warnings:
            typer.secho(f"Warning: {warning}", fg=typer.colors.YELLOW, err=True)
        messages += check.mismatches
        offending += [n for n, _ in rows if any(m.startswith(f"N={n}:") for m in check.mismatches)]
    if messages:
        raise ReferenceMismatch(
            f"published table mismatch at N={sorted(set(offending))}: " + "; ".join(messages),
            offending=sorted(set(offending)),
        )


@app.command()
def pairs(
    bits: str = typer.Option("2..8", "--bits", "-b", help="Bit-length range t_min..t_max"),
    mode: PairMode = typer.Option(PairMode.pp, "--mode", help="pp: q prime, p < q; pc: q composite"),
    check_paper: bool = typer.Option(False, "--check-paper", help="Compare with the published table"),
    output: OutputFormat = typer.Option(OutputFormat.tsv, "--format", "-f", help="Output format"),
) -> None:
    """Reversible pairs (p, q) with the orders of 2 modulo p and q."""
    setup_logging()
    t_min, t_max = _parse_bit_range(bits)
    with _exit_on_error():
        rows = enumerate_reversible_pairs(t_min, t_max, mode.value)
        if output is OutputFormat.tsv:
            typer.echo(PAIR_TSV_HEADER)
            for pair in rows:
                typer.echo(pair.to_tsv_row())
        else:
            for pair in rows:
                _emit_json(pair.model_dump())

        if check_paper:
            check = check_pairs(rows, PAIR_TABLES[mode.value], t_min, t_max)
            for warning in check.warnings:
                typer.secho(f"Warning: {warning}", fg=typer.colors.YELLOW, err=True)
            if not check.ok:
                raise ReferenceMismatch(
                    f"{check.table}: " + "; ".join(check.mismatches), offending=check.mismatches
                )


@app.command()
def construct(
    family: str = typer.Argument(..., help=f"One of: {', '.join(FAMILIES)}"),
    params: Optional[list[str]] = typer.Argument(None, help="Parameters as key=value (N=8 k=5 ...)"),
    tail: Optional[str] = typer.Option(None, "--tail", help="Tail bits s_(k+1)..s_(N-1), or 'random'"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for --tail random"),
    output: OutputFormat = typer.Option(OutputFormat.json, "--format", "-f", help="Output format"),
) -> None:
    """Build a sequence family member and check each of its claims."""
    setup_logging()
    with _exit_on_error():
        pairs_in = list(params or [])
        if tail == "random":
            if seed is None:
                raise PreconditionError("--tail random needs --seed")
            base = FamilySpec.from_pairs(family, pairs_in)
            pairs_in.append(f"tail={random_tail(base.get('N') - base.get('k') - 1, seed)}")
        elif tail is not None:
            pairs_in.append(f"tail={tail}")
        spec = FamilySpec.from_pairs(family, pairs_in)
        report = verify_family(spec)

        if output is OutputFormat.json:
            _emit_json(report.to_json_dict())
        else:
            typer.echo(f"# {report.family} {report.sequence}")
            typer.echo("claim\tpassed\tinformational\tdetail")
            for claim in report.claims:
                typer.echo(f"{claim.name}\t{claim.passed}\t{claim.informational}\t{claim.detail}")

        if not report.passed:
            failed = [c.name for c in report.claims if not c.passed and not c.informational]
            raise PropertyFailure(f"{family}: claim failed: {failed[0]}", failures=failed)


@app.command()
def verify(
    suite: str = typer.Option(..., "--suite", "-s", help=f"One of: {', '.join(SUITES)}, or all"),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", help="Worker processes"),
) -> None:
    """Run property suites; exit 5 on the first failing assertion."""
    setup_logging()
    with _exit_on_error():
        names = list(SUITES) if suite == "all" else [suite]
        if suite != "all" and suite not in SUITES:
            raise PreconditionError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}, all")
        workers = resolve_threads(threads)
        failures: list[str] = []
        for name in names:
            report = run_suite(name, workers)
            _emit_json(report.to_json_dict())
            failures += [f"{name}: {f}" for f in report.failures]
        if failures:
            raise PropertyFailure(failures[0], failures=failures)


@app.command()
def selftest() -> None:
    """Quick consistency checks of the main operations on known values."""
    setup_logging()
    typer.echo(f"Checking seqc v{_get_seqc_version()}...\n")

    all_passed = True

    def check_item(name: str, passed: bool, detail: str = "") -> None:
        nonlocal all_passed
        status = "✅" if passed else "❌"
        msg = f"{status} {name}"
        if detail:
            msg += f": {detail}"
        typer.echo(msg)
        if not passed:
            all_passed = False

    typer.echo("--- Finite words ---")
    word = parse_sequence("0001")
    analysis = _analyze_word(word, ALL_MEASURES)
    check_item(
        "rational complexity of 0001",
        (analysis["rat"]["value"], analysis["rat"]["reverse"]) == (8, 1),
        f"{analysis['rat']['value']}, reverse {analysis['rat']['reverse']}",
    )
    check_item(
        "linear complexity of 0001",
        (analysis["lin"]["value"], analysis["lin"]["reverse"]) == (4, 1),
        f"{analysis['lin']['value']}, reverse {analysis['lin']['reverse']}",
    )
    agree = all(
        rational_complexity_fast(FiniteWord(v, 8)).norm == rational_complexity(FiniteWord(v, 8)).norm
        for v in range(256)
    )
    check_item("fast rational complexity matches the scan (N=8)", agree)

    typer.echo("\n--- Periodic sequences ---")
    report = verify_l_sequence_reversal(220752, 18)
    check_item(
        "period-18 l-sequence and reversal",
        (report.connection, report.connection_rev) == (19, 171),
        f"connections {report.connection}, {report.connection_rev}",
    )
    check_item("Mersenne period 5 is maximal", verify_mersenne_maximality(5))
    first = load_table("reversible-primes")["rows"][0]
    check_item(
        "orders of 2 for the first reversible pair",
        [mult_order_2(first[0]), mult_order_2(first[1])] == first[2:],
        f"{first[0]}, {first[1]}",
    )

    typer.echo("\n--- Expectations ---")
    row = enumerate_expectations(2)
    check_item(
        "N=2 rational and 2^L expectations",
        (str(row.e_rat), str(row.e_rat_sym), str(row.e_linexp), str(row.e_linexp_sym))
        == ("5/4", "1", "9/4", "7/4"),
    )

    typer.echo("\n" + "=" * 40)
    if all_passed:
        typer.echo("✅ All checks passed!")
    else:
        typer.echo("❌ Some checks failed.")
        raise typer.Exit(PropertyFailure.exit_code)


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"seqc v{_get_seqc_version()}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show version and exit"
    ),
) -> None:
    """Symmetric 2-adic, rational and linear complexity of binary sequences."""


if __name__ == "__main__":
    app()
