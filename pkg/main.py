"""
Cube Genus - Command-line entry point

Usage:
    python main.py list
    python main.py build --n 5 --cycle 1,3,5,2,4
    python main.py family --n 7 --format json
    python main.py verify --surface t5.json
    python main.py table --n 10
    python main.py export --n 4 --seed 7 --out q4.off
    python main.py mobius --n 4

Exit status: 0 when every certificate passes, 1 when one fails, 2 on
invalid input or I/O failure.
"""

import argparse
import logging
import os
import sys

# Add project root to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.config import Settings  # noqa: E402
from core.context import RunContext  # noqa: E402
from core.errors import DomainError  # noqa: E402
from core.jobs import get_job, list_jobs  # noqa: E402
from core.jobs.base import dumps_json  # noqa: E402
from core.mesh import PROJECTIONS  # noqa: E402
from core.result import RunReport  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CERTIFICATE_FAILED = 1
EXIT_INVALID_INPUT = 2

TABLE_COLUMNS = [
    ("n", "n"),
    ("v", "v"),
    ("e", "e"),
    ("faces", "|F|"),
    ("formula_genus", "formula"),
    ("constructed_genus", "constructed"),
    ("lower_bound", "bound"),
    ("tight", "tight"),
]


def configure_logging(debug: bool) -> None:
    """Logs go to stderr so stdout stays machine-readable."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    common.add_argument("--timing", action="store_true", help="Include wall time in the report")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    parser = argparse.ArgumentParser(
        description="Genus surfaces of the hypercube from the 2-skeleton of the n-cube",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    subparsers.add_parser("list", help="List available commands")

    build = subparsers.add_parser("build", parents=[common], help="Build and certify T(Z)")
    build.add_argument("--n", type=int, required=True, help="Cube dimension")
    build.add_argument("--cycle", help="Hamiltonian cycle, e.g. 1,3,5,2,4 (default 1..n)")
    build.add_argument("--out", help="Write the serialized surface here")

    family = subparsers.add_parser("family", parents=[common], help="Build and certify a parallel family")
    family.add_argument("--n", type=int, required=True, help="Cube dimension")
    family.add_argument("--decomposition", help="JSON file with a list of color sequences")
    family.add_argument("--out", help="Write the serialized family here")

    verify = subparsers.add_parser("verify", parents=[common], help="Re-certify a serialized surface")
    verify.add_argument("--surface", required=True, help="JSON file written by build --out")

    table = subparsers.add_parser("table", parents=[common], help="Genus table for n = 3..N")
    table.add_argument("--n", type=int, required=True, help="Largest dimension N")
    table.add_argument("--build-limit", type=int, default=None, help="Construct surfaces up to this n")

    export = subparsers.add_parser("export", parents=[common], help="Write T(Z) as an OFF mesh")
    export.add_argument("--n", type=int, required=True, help="Cube dimension")
    export.add_argument("--cycle", help="Hamiltonian cycle (default 1..n)")
    export.add_argument("--seed", type=int, default=None, help="Projection seed (default 0)")
    export.add_argument("--projection", choices=list(PROJECTIONS), default="generic")
    export.add_argument("--out", help="OFF file to write (stdout if omitted)")

    mobius = subparsers.add_parser("mobius", parents=[common], help="Search for a Möbius strip")
    mobius.add_argument("--n", type=int, required=True, help="Cube dimension")
    mobius.add_argument("--max-length", type=int, default=None, help="Longest strip to try")

    return parser


def job_params(args: argparse.Namespace) -> dict:
    """Command-specific flags as job keyword arguments."""
    shared = {"command", "format", "timing", "debug"}
    return {
        key: value
        for key, value in vars(args).items()
        if key not in shared and value is not None
    }


def render_text(report: RunReport, include_timing: bool = False) -> str:
    lines = [f"{report.command}: {report.status.value}"]
    if report.parameters:
        params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
        lines.append(f"  Parameters: {params}")

    if "table" in report.artifacts:
        lines.append("")
        lines.extend(_render_table(report.artifacts["table"]))

    if report.certificates:
        lines.append("")
        lines.append(f"  Certificates ({report.certificates_passed} passed, {report.certificates_failed} failed):")
        for c in report.certificates:
            mark = "PASS" if c.passed else "FAIL"
            subject = f" [{c.subject}]" if c.subject else ""
            lines.append(f"    {mark} {c.name}{subject}")

    if report.genus:
        lines.append("")
        lines.append("  Genus:")
        for label, values in report.genus.items():
            text = ", ".join(f"{k}={v}" for k, v in values.items())
            lines.append(f"    {label}: {text}")

    for key in ("face_count", "coverage", "mesh", "surface_file", "family_file", "mesh_file"):
        if key in report.artifacts:
            lines.append(f"  {key}: {report.artifacts[key]}")
    if "witness" in report.artifacts:
        witness = report.artifacts["witness"]
        if witness:
            lines.append(f"  Möbius strip: {witness['length']} faces, {witness['reversals']} reversals")
            lines.extend(f"    {face}" for face in witness["faces"])
        else:
            lines.append("  Möbius strip: none found")

    if report.errors:
        lines.append("")
        lines.append(f"  Errors ({len(report.errors)}):")
        lines.extend(f"    - {error}" for error in report.errors)

    if include_timing and report.duration_seconds is not None:
        lines.append(f"  Duration: {report.duration_seconds:.2f}s")

    text = "\n".join(lines) + "\n"
    if "off" in report.artifacts:
        text += "\n" + report.artifacts["off"]
    return text


def _render_table(rows: list[dict]) -> list[str]:
    def cell(row: dict, key: str) -> str:
        value = row[key]
        if isinstance(value, bool):
            return "yes" if value else "no"
        return str(value)

    widths = [
        max([len(header)] + [len(cell(row, key)) for row in rows])
        for key, header in TABLE_COLUMNS
    ]
    header = "  ".join(h.rjust(w) for (_, h), w in zip(TABLE_COLUMNS, widths))
    body = [
        "  ".join(cell(row, key).rjust(w) for (key, _), w in zip(TABLE_COLUMNS, widths))
        for row in rows
    ]
    return ["  " + header] + ["  " + line for line in body]


def run_command(args: argparse.Namespace) -> int:
    """Run one job and print its report; returns the exit status."""
    settings = Settings.from_args(args)
    job_class = get_job(args.command)
    if job_class is None:
        available = [j["name"] for j in list_jobs()]
        print(f"Error: Unknown command '{args.command}'. Available: {', '.join(available)}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    params = job_params(args)
    ctx = RunContext.for_cli(command=args.command, debug=args.debug, parameters=params)

    try:
        report = job_class(ctx, settings=settings).execute(**params)
    except DomainError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    if settings.output_format == "json":
        sys.stdout.write(dumps_json(report.to_dict(include_timing=settings.include_timing)))
    else:
        sys.stdout.write(render_text(report, include_timing=settings.include_timing))
    return report.exit_code


def cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_OK

    configure_logging(getattr(args, "debug", False))

    if args.command == "list":
        jobs = list_jobs()
        print("\nAvailable Commands:")
        print("-" * 60)
        for job in jobs:
            tags = ", ".join(job.get("tags", [])) or "none"
            print(f"  {job['name']}")
            print(f"    Description: {job.get('description', 'No description')}")
            print(f"    Tags: {tags}")
            print()
        print(f"Total: {len(jobs)} commands")
        return EXIT_OK

    return run_command(args)


if __name__ == "__main__":
    sys.exit(cli())
