#!/usr/bin/env python3
"""
Coprime Toolkit
Main application entry point
"""

import re
import sys
import argparse
from pathlib import Path

# Internal modules
from utils.logger import setup_logger
from utils.config import load_config, Config
from core.arith import totient
from core.errors import DomainError, OutputError, ToolkitError
from core.goldbach import bertrand_check, bertrand_sweep, goldbach_pairs, line_points
from core.twins import twin_count_upto, twin_pairs_upto
from core.unit_group import (UnitClass, build_group, cyclic_subgroup,
                             generators_by_order, order_census)
from core.verifier import GoldbachVerifier
from render.cayley import (build_table, check_table_order, export_line_csv, export_table_csv,
                           format_table_text)
from render.raster import build_orbit_mask, goldbach_accent, render_orbit_mask, render_table_ppm

# Global variables
logger = None
config = None

EXIT_OK = 0
EXIT_INTERRUPTED = 130

_DECIMAL = re.compile(r"[0-9]+")


class ToolkitArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage problems as DomainError"""

    def error(self, message):
        raise DomainError(f"{self.prog}: {message}")


def decimal(text):
    """Plain decimal integer; signs, hex and underscores are rejected"""
    if not _DECIMAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def positive(text):
    value = decimal(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def write_output(path, data):
    """Write bytes or text (LF only) to path"""
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e.strerror or e}") from e
    logger.info(f"Wrote {len(data)} bytes to {path}")


def check_ceiling(value, what):
    """Reject sieve-sized work beyond sweep.max_target before any allocation"""
    if value > config.sweep.max_target:
        raise DomainError(
            f"{what} {value} exceeds the ceiling {config.sweep.max_target} (sweep.max_target)"
        )


def emit(lines):
    for line in lines:
        sys.stdout.write(f"{line}\n")


def cmd_totient(args):
    if args.m < 1:
        raise DomainError(f"totient expects m >= 1, got {args.m}")
    emit([totient(args.m)])


def cmd_group(args):
    group = build_group(args.m)
    emit([len(group)])
    if args.list:
        emit(group.elements)


def cmd_cayley(args):
    check_table_order(args.m, config.render.max_table_order)
    group = build_group(args.m)
    table = build_table(group, max_order=config.render.max_table_order)
    cell_px = args.cell_px or config.render.cell_px

    if args.format == "ppm":
        if not args.out:
            raise DomainError("cayley --format ppm requires --out <path>")
        write_output(args.out, render_table_ppm(table, cell_px, config.render.max_image_side))
        return

    text = export_table_csv(table) if args.format == "csv" else format_table_text(table)
    if args.out:
        write_output(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_goldbach(args):
    check_ceiling(args.two_m, "2m")
    report = goldbach_pairs(args.two_m)
    emit(f"{p} {q}" for p, q in report.prime_pairs)
    if args.candidates:
        prime = set(report.prime_pairs)
        emit(f"candidate {x} {y} {'meets' if (x, y) in prime else 'fails'}"
             for x, y in report.candidate_pairs)
    if args.points:
        write_output(args.points, export_line_csv(line_points(args.two_m)))


def cmd_verify(args):
    checkpoint = args.checkpoint or config.sweep.checkpoint_path
    verifier = GoldbachVerifier(config, logger)
    ckpt = verifier.run(args.start, args.stop, checkpoint,
                        workers=args.workers, stride=args.stride)
    emit([f"verified_upto={ckpt.verified_upto}",
          f"min_pairs={ckpt.min_pair_count}@{ckpt.min_pair_at}"])


def cmd_twins(args):
    check_ceiling(args.upto, "--upto")
    if args.count:
        emit([twin_count_upto(args.upto)])
    else:
        emit(f"{pair.p} {pair.q}" for pair in twin_pairs_upto(args.upto))


def cmd_orbits(args):
    if args.render:
        check_table_order(args.m, config.render.max_table_order)
    group = build_group(args.m)

    if args.generator is None:
        if args.render:
            raise DomainError("orbits --render requires --generator")
        census = order_census(group)
        generators = generators_by_order(group)
        emit(f"{order} {count} {generators[order].rep}" for order, count in census.items())
        return

    generator = UnitClass.of(args.generator, args.m)
    orbit = cyclic_subgroup(generator)
    emit([" ".join(map(str, orbit.reps())), f"order={orbit.order}"])

    if args.render:
        table = build_table(group, max_order=config.render.max_table_order)
        accent = goldbach_accent(table) if args.accent_goldbach else None
        mask = build_orbit_mask(table, generator, accent)
        cell_px = args.cell_px or config.render.cell_px
        write_output(args.render, render_orbit_mask(mask, cell_px, config.render.max_image_side))


def cmd_bertrand(args):
    if args.sweep:
        check_ceiling(args.m, "--sweep bound")
        report = bertrand_sweep(3, args.m)
        emit([f"checked={report.checked}",
              f"tightest={report.tightest_m}:{report.tightest_witness}"])
    else:
        emit([bertrand_check(args.m)])


def parse_arguments(argv):
    """Parse command line arguments"""
    parser = ToolkitArgumentParser(prog="coprime-toolkit",
                                   description='Coprime residue groups, Goldbach pairs and twin primes')
    parser.add_argument('--config', type=str, help='Path to custom config file')
    parser.add_argument('--verbose', action='store_true', help='Log progress to stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('totient', help="Euler's phi of m")
    p.add_argument('m', type=decimal)
    p.set_defaults(handler=cmd_totient)

    p = sub.add_parser('group', help='Unit group modulo m')
    p.add_argument('m', type=decimal)
    p.add_argument('--list', action='store_true', help='List the canonical representatives')
    p.set_defaults(handler=cmd_group)

    p = sub.add_parser('cayley', help='Cayley table of the unit group modulo m')
    p.add_argument('m', type=decimal)
    p.add_argument('--format', choices=('text', 'csv', 'ppm'), default='csv')
    p.add_argument('--out', type=str)
    p.add_argument('--cell-px', type=positive)
    p.set_defaults(handler=cmd_cayley)

    p = sub.add_parser('goldbach', help='Prime pairs summing to an even number')
    p.add_argument('two_m', type=decimal, metavar='2m')
    p.add_argument('--candidates', action='store_true', help='Also list coprime candidates')
    p.add_argument('--points', type=str, help='Write the x + y = 2m classification CSV')
    p.set_defaults(handler=cmd_goldbach)

    p = sub.add_parser('verify', help='Checkpointed Goldbach sweep')
    p.add_argument('--from', dest='start', type=decimal, required=True)
    p.add_argument('--to', dest='stop', type=decimal, required=True)
    p.add_argument('--checkpoint', type=str)
    p.add_argument('--workers', type=positive)
    p.add_argument('--stride', type=positive)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('twins', help='Twin primes up to n')
    p.add_argument('--upto', type=decimal, required=True)
    p.add_argument('--count', action='store_true', help='Print only the number of pairs')
    p.set_defaults(handler=cmd_twins)

    p = sub.add_parser('orbits', help='Cyclic subgroups of the unit group modulo m')
    p.add_argument('m', type=decimal)
    p.add_argument('--generator', type=decimal)
    p.add_argument('--render', type=str, help='Write the orbit mask as PPM')
    p.add_argument('--cell-px', type=positive)
    p.add_argument('--accent-goldbach', action='store_true',
                   help='Mark cells holding prime pair members of m')
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser('bertrand', help='Prime strictly between m and 2m')
    p.add_argument('m', type=decimal)
    p.add_argument('--sweep', action='store_true', help='Check every m from 3 up to m')
    p.set_defaults(handler=cmd_bertrand)

    return parser.parse_args(argv)


def initialize_system(args):
    """Load configuration and set up logging"""
    global logger, config

    config = load_config(args.config)
    level = "INFO" if args.verbose else config.general.log_level
    logger = setup_logger(config.general.log_directory, config.general.log_to_file, level)


def report_error(code, message):
    sys.stderr.write(f"ERROR {code}: {message}\n")


def run(argv=None):
    """Run one subcommand and return the process exit status"""
    try:
        args = parse_arguments(sys.argv[1:] if argv is None else argv)
    except ToolkitError as e:
        report_error(e.exit_code, e.message)
        return e.exit_code
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK

    initialize_system(args)

    try:
        args.handler(args)
    except ToolkitError as e:
        report_error(e.exit_code, e.message)
        if getattr(e, "report", None):
            logger.error(f"Report: {e.report}")
        return e.exit_code
    except KeyboardInterrupt:
        report_error(EXIT_INTERRUPTED, "interrupted")
        logger.info("Received shutdown signal")
        return EXIT_INTERRUPTED
    except Exception as e:
        report_error(1, f"unexpected error: {e}")
        logger.exception("Unexpected error")
        return 1
    finally:
        sys.stdout.flush()

    logger.info(f"Finished {args.command} (configuration from {args.config or Config.CONFIG_PATH})")
    return EXIT_OK


def main():
    """Main application entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
