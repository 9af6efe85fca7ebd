# This file is part of hyperrep
# Copyright (C) 2024 The hyperrep developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
__doc__ = """
Command line front end.

Usage::

    hyperrep [-v|-vv] gen --n 30 --r 3 --delta 4 --seed 1 -o g.hg
    hyperrep decompose g.hg -o g.dec
    hyperrep represent g.hg --mode general --seed 7 -o g.rep
    hyperrep verify g.hg g.rep [--samples 1000 --seed 3]
    hyperrep exact g.hg (--k 1 | --tilde) [--max-t 8 --max-n 8]
    hyperrep bounds --n 1000000 --r 3 --delta 10 [--scan --scan-to 100] [--csv out.csv]

Every run first echoes its effective configuration as ``# key=value``
lines; result lines start with ``RESULT``, ``VIOLATION``, ``SUPPORT`` or
``BOUND``. Exit codes: 0 success, 1 invalid configuration or input,
2 verification failed, 3 retries exhausted or search caps exceeded.
"""

import argparse
import csv
import dataclasses
import logging
import sys

from dataclasses import dataclass
from typing import List, Optional, Sequence

from hyperrep.bounds import (
    check_size_against_bound,
    scan_counting_argument,
    verify_counting_argument
)
from hyperrep.core import degree_profile, gen_random_linear, gen_union_of_matchings
from hyperrep.errors import CapExceededError, RetriesExhaustedError
from hyperrep.represent import (
    BuildOptions,
    Mode,
    OracleLimits,
    build_representation,
    decompose,
    format_report,
    sampled_verify,
    theta_k_exact,
    theta_tilde_exact,
    verify_representation
)
from hyperrep.text import (
    dump_decomposition,
    dump_hypergraph,
    dump_representation,
    format_number,
    parse_hypergraph,
    parse_representation
)

__all__ = ['RunConfig', 'main']

logger = logging.getLogger('hyperrep')

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3


@dataclass(frozen=True)
class RunConfig:
    """Effective configuration of one run; unset options are None."""

    command: str
    input: Optional[str] = None
    rep: Optional[str] = None
    output: Optional[str] = None
    model: Optional[str] = None
    n: Optional[int] = None
    r: Optional[int] = None
    delta: Optional[int] = None
    seed: Optional[int] = None
    mode: Optional[str] = None
    max_family_retries: Optional[int] = None
    max_build_retries: Optional[int] = None
    scale: Optional[float] = None
    threads: Optional[int] = None
    samples: Optional[int] = None
    k: Optional[int] = None
    tilde: Optional[bool] = None
    max_t: Optional[int] = None
    max_n: Optional[int] = None
    scan: Optional[bool] = None
    scan_to: Optional[int] = None
    csv: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        values = vars(args)
        names = [f.name for f in dataclasses.fields(cls)]
        return cls(**{name: values.get(name) for name in names})

    def comments(self) -> List[str]:
        """Returns ``key=value`` for every set option, in declaration order."""
        result = []
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, bool):
                value = str(value).lower()
            elif isinstance(value, float):
                value = format_number(value)
            result.append(f'{f.name}={value}')
        return result


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _write(path: str, text: str) -> None:
    with open(path, 'w', encoding='ascii', newline='\n') as ofp:
        ofp.write(text)
    logger.info('wrote %s', path)


def _read(path: str) -> str:
    with open(path, 'r', encoding='ascii') as ifp:
        return ifp.read()


def cmd_gen(config: RunConfig, out) -> int:
    if config.model == 'linear':
        graph = gen_random_linear(config.n, config.r, config.delta, config.seed)
    else:
        graph = gen_union_of_matchings(config.n, config.r, config.delta, config.seed)

    text = dump_hypergraph(graph, config.comments())
    if config.output:
        _write(config.output, text)
    else:
        out.write(text)
    print(f'RESULT edges={len(graph)} max_degree={degree_profile(graph).max_degree}', file=out)
    return EXIT_OK


def cmd_decompose(config: RunConfig, out) -> int:
    graph = parse_hypergraph(_read(config.input))
    decomposition = decompose(graph)
    if config.output:
        _write(config.output, dump_decomposition(graph, decomposition, config.comments()))

    delta = graph.max_degree
    print(f'RESULT L={decomposition.L} bound={max(delta - 1, 0) * graph.r + 1}', file=out)
    return EXIT_OK


def cmd_represent(config: RunConfig, out) -> int:
    graph = parse_hypergraph(_read(config.input))
    options = BuildOptions(
        max_family_retries=config.max_family_retries,
        max_build_retries=config.max_build_retries,
        constant_scale=config.scale,
        workers=config.threads
    )
    rep = build_representation(graph, config.mode, config.seed, options)
    if config.output:
        _write(config.output, dump_representation(rep, config.comments()))

    meta = rep.metadata
    print(f'RESULT mode={meta.mode} L={meta.L} t={meta.t} k={rep.k} '
          f'ground_size={rep.ground_size} build_attempts={meta.build_attempts} '
          f'family_attempts={sum(meta.family_attempts)}', file=out)
    if meta.scale == 1:
        within = check_size_against_bound(rep, graph)
        print(f'RESULT size_bound={str(within).lower()}', file=out)
    return EXIT_OK


def cmd_verify(config: RunConfig, out) -> int:
    graph = parse_hypergraph(_read(config.input))
    rep = parse_representation(_read(config.rep))
    if config.samples is not None:
        report = sampled_verify(graph, rep, config.samples, config.seed)
    else:
        report = verify_representation(graph, rep)
    out.write(format_report(report))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_exact(config: RunConfig, out) -> int:
    graph = parse_hypergraph(_read(config.input))
    limits = OracleLimits(max_n=config.max_n, max_t=config.max_t)
    if config.tilde:
        result = theta_tilde_exact(graph, limits)
    else:
        result = theta_k_exact(graph, config.k, limits)

    print(f'RESULT value={result.value} witness_k={result.witness_k}', file=out)
    for support in result.supports:
        print(f'SUPPORT {" ".join(map(str, support))}', file=out)
    return EXIT_OK


def _csv_value(value) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    return format_number(value)


def _write_csv(path: str, reports: Sequence) -> None:
    names = [f.name for f in dataclasses.fields(reports[0])] if reports else []
    with open(path, 'w', encoding='ascii', newline='') as ofp:
        writer = csv.writer(ofp, lineterminator='\n')
        writer.writerow(names)
        for report in reports:
            writer.writerow([_csv_value(getattr(report, name)) for name in names])
    logger.info('wrote %s', path)


def cmd_bounds(config: RunConfig, out) -> int:
    if config.scan:
        scan = scan_counting_argument(config.r, config.delta, config.n, config.scan_to,
                                      keep_reports=bool(config.csv))
        for name in ('start', 'stop', 'first_claim', 'first_intermediate', 'first_argument'):
            value = getattr(scan, name)
            print(f'BOUND {name:<20} {"-" if value is None else value}', file=out)
        print(f'BOUND {"regressions":<20} {" ".join(map(str, scan.regressions)) or "-"}',
              file=out)
        reports = list(scan.reports)
    else:
        if config.n is None:
            raise ValueError('--n is required without --scan')
        report = verify_counting_argument(config.n, config.r, config.delta)
        for f in dataclasses.fields(report):
            print(f'BOUND {f.name:<20} {_csv_value(getattr(report, f.name)) or "-"}', file=out)
        reports = [report]

    if config.csv:
        _write_csv(config.csv, reports)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Returns the argument parser of the ``hyperrep`` command."""
    parser = _Parser(prog='hyperrep', description='k-representations of '
                     'bounded-degree uniform hypergraphs')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress (-v) or details (-vv) to standard error')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    gen = commands.add_parser('gen', help='Generate a random hypergraph (.hg)')
    gen.add_argument('--model', choices=('matchings', 'linear'), default='matchings',
                     help='Union of random matchings or greedy random linear hypergraph')
    gen.add_argument('--n', type=int, required=True, help='Vertex count')
    gen.add_argument('--r', type=int, default=3, help='Uniformity')
    gen.add_argument('--delta', type=int, required=True, help='Degree bound')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('-o', '--output', help='Output file (default: standard output)')
    gen.set_defaults(func=cmd_gen)

    dec = commands.add_parser('decompose', help='Split the edges into matchings (.dec)')
    dec.add_argument('input', help='Input hypergraph (.hg)')
    dec.add_argument('-o', '--output', help='Output file')
    dec.set_defaults(func=cmd_decompose)

    rep = commands.add_parser('represent', help='Build a verified k-representation (.rep)')
    rep.add_argument('input', help='Input hypergraph (.hg)')
    rep.add_argument('--mode', choices=[str(m) for m in Mode], default=str(Mode.GENERAL))
    rep.add_argument('--seed', type=int, default=0)
    rep.add_argument('--max-family-retries', type=int, default=100)
    rep.add_argument('--max-build-retries', type=int, default=10)
    rep.add_argument('--scale', type=float, default=1.0,
                     help='Multiplier for the segment size t')
    rep.add_argument('--threads', type=int, default=1,
                     help='Sample families of different matchings in parallel')
    rep.add_argument('-o', '--output', help='Output file')
    rep.set_defaults(func=cmd_represent)

    ver = commands.add_parser('verify', help='Check a representation against a hypergraph')
    ver.add_argument('input', help='Hypergraph (.hg)')
    ver.add_argument('rep', help='Representation (.rep)')
    ver.add_argument('--samples', type=int, help='Check only this many random non-edges')
    ver.add_argument('--seed', type=int, default=0)
    ver.set_defaults(func=cmd_verify)

    exact = commands.add_parser('exact', help='Exact search on tiny hypergraphs')
    exact.add_argument('input', help='Hypergraph (.hg)')
    which = exact.add_mutually_exclusive_group(required=True)
    which.add_argument('--k', type=int, help='Fixed threshold')
    which.add_argument('--tilde', action='store_true', default=None,
                       help='Minimize over all thresholds')
    exact.add_argument('--max-t', type=int, default=8)
    exact.add_argument('--max-n', type=int, default=8)
    exact.set_defaults(func=cmd_exact)

    bounds = commands.add_parser('bounds', help='Evaluate the counting lower bound')
    bounds.add_argument('--n', type=int, help='Vertex count (scan start with --scan)')
    bounds.add_argument('--r', type=int, default=3)
    bounds.add_argument('--delta', type=int, required=True)
    bounds.add_argument('--scan', action='store_true', default=None,
                        help='Scan n for the first point where each inequality holds')
    bounds.add_argument('--scan-to', type=int, default=1000)
    bounds.add_argument('--csv', help='Also write the report(s) as CSV')
    bounds.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Runs the command line and returns the exit status.

    :param argv: the arguments, defaults to ``sys.argv[1:]``
    :type argv: Sequence[str], optional
    :param out: stream for results, defaults to standard output
    :return: the exit status
    :rtype: int
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as error:
        logging.getLogger('hyperrep').error('%s', error)
        return EXIT_CONFIG

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format='%(levelname)-5s - %(message)s',
                        stream=sys.stderr, force=True)

    config = RunConfig.from_args(args)
    for line in config.comments():
        print(f'# {line}', file=out)

    try:
        return args.func(config, out)
    except (RetriesExhaustedError, CapExceededError) as error:
        logger.error('[%s] %s', type(error).__name__, error)
        return EXIT_LIMIT
    except (ValueError, TypeError, SyntaxError, OSError) as error:
        logger.error('[%s] %s', type(error).__name__, error)
        return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())
