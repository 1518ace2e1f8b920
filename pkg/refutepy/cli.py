"""
This module provides the command line interface ``refute``

Subcommands
-----------
run:
    Search for a counter-example of a conjecture with one of the search algorithms (the default subcommand)
verify:
    Check whether a given graph refutes a conjecture with the residual-checked eigensolver
bench:
    Run (conjecture, algorithm) cells over several seeds and print the table of times to refutation
list:
    Print the registered conjectures

Exit codes are 0 if the conjecture is refuted, 1 if it is not and 2 on errors.

"""
import argparse
import dataclasses
import json
import logging
import math
import os
import sys
from typing import Any, Dict, List, Optional, Tuple

from pydantic import Field
from pydantic.dataclasses import dataclass

from refutepy import __version__, LIB_INSTALLED
from refutepy.graph import Graph, GraphClass, graph_in_class, parse_edge_list, to_edge_list, to_dot
from refutepy.graph.converters import from_dict, write_edge_list
from refutepy.spectral import RangeDefinition
from refutepy.spectral.spectral_errors import EigenResidualError
from refutepy.conjectures import Conjecture, score, is_counterexample, list_conjectures, VIOLATION_EPSILON
from refutepy.algorithms import ALGORITHMS, SearchParams, SearchOutcome, run_search, prepare_conjecture
from refutepy.algorithms.search import UnknownAlgorithmError
from refutepy.algorithms import benchmark

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED, EXIT_NOT_REFUTED, EXIT_ERROR = 0, 1, 2
OUTPUT_FORMATS = ('edges', 'dot', 'json')
JSON_SCHEMA_VERSION = 1
THREADS_ENV_VAR = 'REFUTE_THREADS'

HYPERPARAMETERS = (
    ('nmcs_level', int), ('lnmcs_level', int), ('lnmcs_playouts', int), ('lnmcs_ratio', float),
    ('uct_constant', float), ('rave_ref', float), ('rave_bias', float), ('beam_width', int),
    ('nrpa_level', int), ('nrpa_iterations', int), ('nrpa_alpha', float), ('gbfs_open_cap', int),
    ('max_iterations', int), ('max_evaluations', int),
)


@dataclass(frozen=True)
class RunConfig:
    """Everything a ``refute run`` call depends on

    Parameters
    ----------
    conjecture: `str`
        Id of a registered conjecture, e.g. "graffiti-197"
    algorithm: `str`
        One of 'nmcs', 'lnmcs', 'nrpa', 'uct', 'rave', 'grave', 'gbfs', 'beam'
    params: `SearchParams`
        Hyperparameters, seed and budget of the search
    target_size: `int`
        Number of vertices the construction may reach. The default target of the conjecture if not given
    min_size: `int`
        Overrides the smallest size of a counter-example
    graph_class: `str`
        Overrides the class of graphs to search in
    range_definition: `str`
        Overrides the range definition ('diff' or 'distinct-count')
    relaxed_class: `bool`
        Build any graphs and check the class of the conjecture on counter-examples only
    output_format: `str`
        One of 'edges', 'dot', 'json'
    output: `str`
        Path to write the result to. Standard output if not given
    plot: `str`
        Path to save the drawing of the best graph to

    """
    conjecture: str
    algorithm: str
    params: SearchParams = dataclasses.field(default_factory=SearchParams)
    target_size: Optional[int] = Field(None, ge=1)
    min_size: Optional[int] = Field(None, ge=2)
    graph_class: Optional[str] = None
    range_definition: Optional[str] = None
    relaxed_class: bool = False
    output_format: str = 'edges'
    output: Optional[str] = None
    plot: Optional[str] = None

    @property
    def seed(self) -> Optional[int]:
        return self.params.seed

    @property
    def budget_seconds(self) -> float:
        return self.params.budget_seconds

    def to_dict(self) -> Dict[str, Any]:
        return {
            'conjecture': self.conjecture, 'algorithm': self.algorithm, 'params': self.params.to_dict(),
            'target_size': self.target_size, 'min_size': self.min_size, 'graph_class': self.graph_class,
            'range_definition': self.range_definition, 'relaxed_class': self.relaxed_class,
            'output_format': self.output_format,
        }


def _finite_or_none(x: Optional[float]) -> Optional[float]:
    return x if x is not None and math.isfinite(x) else None


def _format_float(x: Optional[float]) -> str:
    x = _finite_or_none(x)
    return 'undefined' if x is None else f"{x:.10f}"


##################
# refute run     #
##################
def run(config: RunConfig) -> SearchOutcome:
    """Run the search described by ``config``"""
    if config.algorithm not in ALGORITHMS:
        raise UnknownAlgorithmError(config.algorithm)
    if config.output_format not in OUTPUT_FORMATS:
        raise ValueError(f'Unknown output format "{config.output_format}". Possible values are: {OUTPUT_FORMATS}')

    return run_search(
        config.algorithm, config.conjecture, config.params, target_size=config.target_size,
        graph_class=config.graph_class, min_size=config.min_size,
        range_definition=config.range_definition, relaxed_class=config.relaxed_class,
    )


def outcome_document(outcome: SearchOutcome, config: RunConfig) -> Dict[str, Any]:
    """Return the JSON document of a run: the outcome fields and the config echo with the seed actually used"""
    config_echo = config.to_dict()
    config_echo['params']['seed'] = outcome.seed
    return {'schema': JSON_SCHEMA_VERSION, **outcome.to_dict(), 'config': config_echo}


def outcome_summary(outcome: SearchOutcome) -> str:
    """Return the human readable outcome with the graph in the edge list format"""
    verdict = 'refuted' if outcome.refuted else 'not refuted'
    lines = [
        f"Conjecture {outcome.conjecture_id} {verdict} by {outcome.algorithm} (seed {outcome.seed}) "
        f"in {outcome.elapsed_seconds:.2f} s after {outcome.evaluations} evaluations",
    ]
    if outcome.best_graph is None:
        lines.append('No graph has been scored')
        return '\n'.join(lines) + '\n'

    if not outcome.refuted:
        lines.append('Best graph found:')
    lines += [
        f"n: {outcome.n}",
        f"Edges: {to_edge_list(outcome.best_graph)}",
        f"lhs: {_format_float(outcome.lhs)}",
        f"rhs: {_format_float(outcome.rhs)}",
        f"score: {_format_float(outcome.best_score)}",
    ]
    return '\n'.join(lines) + '\n'


def _write_text(text: str, path: Optional[str]):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


def verified_outcome(outcome: SearchOutcome, config: RunConfig) -> SearchOutcome:
    """Return ``outcome`` with the margin of its graph recomputed by ``verify_graph``

    A refutation that does not survive the residual-checked eigensolver is reported as not refuted.
    """
    if outcome.best_graph is None:
        return outcome

    conj = prepare_conjecture(
        config.conjecture, graph_class=config.graph_class, min_size=config.min_size,
        range_definition=config.range_definition, relaxed_class=config.relaxed_class,
    )
    try:
        report = verify_graph(conj, outcome.best_graph, violation_epsilon=config.params.violation_epsilon)
    except EigenResidualError as e:
        logger.warning('The best graph of the run could not be verified: %s', e)
        return dataclasses.replace(outcome, refuted=False)

    refuted = outcome.refuted and report['verdict'] == 'refuted'
    if outcome.refuted and not refuted:
        logger.warning('The counter-example of %s did not survive the verification (verified score %s)',
                       outcome.conjecture_id, _format_float(report['score']))
    return dataclasses.replace(
        outcome, refuted=refuted, lhs=report['lhs'], rhs=report['rhs'],
        best_score=report['score'] if report['score'] is not None else outcome.best_score,
    )


def run_command(args: argparse.Namespace) -> int:
    config = run_config_from_args(args)
    outcome = verified_outcome(run(config), config)

    summary = outcome_summary(outcome)
    if config.output_format == 'edges':
        sys.stdout.write(summary)
        if config.output is not None and outcome.best_graph is not None:
            write_edge_list(outcome.best_graph, config.output)
    else:
        sys.stderr.write(summary)
        if config.output_format == 'dot':
            document = to_dot(outcome.best_graph) if outcome.best_graph is not None else 'graph G {\n}\n'
        else:
            document = json.dumps(outcome_document(outcome, config), indent=2) + '\n'
        _write_text(document, config.output)

    if config.plot is not None and outcome.best_graph is not None:
        if not LIB_INSTALLED['matplotlib']:
            raise ValueError('Drawing a graph with --plot requires matplotlib package')
        from refutepy.visualizer import save_graph_drawing

        title = f"{outcome.conjecture_id}: score {_format_float(outcome.best_score)}"
        save_graph_drawing(outcome.best_graph, config.plot, title=title)

    return EXIT_REFUTED if outcome.refuted else EXIT_NOT_REFUTED


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    params = SearchParams().with_overrides(
        seed=args.seed, budget_seconds=args.budget,
        restarts=False if args.no_restarts else None,
        **{name: getattr(args, name) for name, _ in HYPERPARAMETERS},
    )
    return RunConfig(
        conjecture=args.conjecture, algorithm=args.algorithm.lower(), params=params,
        target_size=args.target, min_size=args.min_size, graph_class=args.graph_class,
        range_definition=args.range_definition, relaxed_class=args.relaxed_class,
        output_format=args.output_format, output=args.output, plot=args.plot,
    )


##################
# refute verify  #
##################
def load_graph_source(path: Optional[str] = None, edges: Optional[str] = None) -> Tuple[Graph, Optional[dict]]:
    """Read a graph from an edge list file, a JSON document (of a graph or of a run) or an edge list string

    Returns
    -------
    graph: `Graph`
    document: `dict`
        The JSON document the graph comes from. None for edge lists

    """
    if edges is not None:
        return parse_edge_list(edges), None
    if path is None:
        raise ValueError('Either an edge list file or the --edges option should be given')

    with open(path, 'r', encoding='utf-8') as f:
        data = f.read()
    if not data.lstrip().startswith('{'):
        return parse_edge_list(data), None

    document = json.loads(data)
    if document.get('edges') is None:
        raise ValueError(f'The JSON document "{path}" holds no graph')
    return from_dict(document), document


def verify_graph(conj: Conjecture, g: Graph, violation_epsilon: float = VIOLATION_EPSILON) -> Dict[str, Any]:
    """Score ``g`` against ``conj`` with the residual-checked eigensolver and report every check"""
    report = score(conj, g, verify=True)
    refuted = is_counterexample(conj, g, violation_epsilon=violation_epsilon, report=report)
    return {
        'schema': JSON_SCHEMA_VERSION,
        'conjecture': conj.id,
        'n': g.n,
        'edges': to_edge_list(g),
        'graph_class': conj.counterexample_class.value,
        'class_confirmed': graph_in_class(g, conj.counterexample_class),
        'connected': g.is_connected(),
        'min_size': conj.min_size,
        'range_definition': conj.range_definition.value if conj.range_definition is not None else None,
        'lhs': _finite_or_none(report.lhs),
        'rhs': _finite_or_none(report.rhs),
        'score': _finite_or_none(report.score),
        'verdict': 'refuted' if refuted else 'holds',
    }


def verification_summary(report: Dict[str, Any]) -> str:
    class_check = 'confirmed' if report['class_confirmed'] else 'not confirmed'
    lines = [
        f"conjecture: {report['conjecture']}",
        f"n: {report['n']}",
        f"class: {report['graph_class']} ({class_check})",
        f"connected: {'yes' if report['connected'] else 'no'}",
        f"lhs: {_format_float(report['lhs'])}",
        f"rhs: {_format_float(report['rhs'])}",
        f"score: {_format_float(report['score'])}",
        f"verdict: {report['verdict']}",
    ]
    if report['range_definition'] is not None:
        lines.insert(2, f"range definition: {report['range_definition']}")
    return '\n'.join(lines) + '\n'


def verify_command(args: argparse.Namespace) -> int:
    g, document = load_graph_source(args.source, args.edges)
    run_config = (document or {}).get('config') or {}

    conjecture_id = args.conjecture or (document or {}).get('conjecture')
    if conjecture_id is None:
        raise ValueError('The conjecture to verify should be given with --conjecture')

    conj = prepare_conjecture(
        conjecture_id,
        graph_class=args.graph_class or run_config.get('graph_class'),
        min_size=args.min_size or run_config.get('min_size'),
        range_definition=args.range_definition or run_config.get('range_definition'),
    )
    report = verify_graph(conj, g)
    if args.output_format == 'json':
        _write_text(json.dumps(report, indent=2) + '\n', args.output)
    else:
        _write_text(verification_summary(report), args.output)
    return EXIT_REFUTED if report['verdict'] == 'refuted' else EXIT_NOT_REFUTED


##################
# refute bench   #
##################
def bench_threads() -> int:
    """The number of parallel bench runs allowed by the REFUTE_THREADS environment variable (1 by default)"""
    value = os.environ.get(THREADS_ENV_VAR, '1')
    try:
        n_threads = int(value)
    except ValueError:
        raise ValueError(f'{THREADS_ENV_VAR} should be a positive integer, got "{value}"')
    if n_threads < 1:
        raise ValueError(f'{THREADS_ENV_VAR} should be a positive integer, got "{value}"')
    return n_threads


def bench_command(args: argparse.Namespace) -> int:
    cells = [benchmark.BenchCell.parse(text) for text in args.cells] if args.cells else None
    results = benchmark.run_bench(
        cells, n_seeds=args.seeds, budget_seconds=args.budget, first_seed=args.first_seed,
        n_jobs=bench_threads(), use_tqdm=not args.no_progress,
    )
    summary = benchmark.summarize_bench(results)
    sys.stdout.write(benchmark.bench_table(summary).to_string() + '\n')

    if args.output is not None:
        if args.output.endswith('.json'):
            document = {
                'schema': JSON_SCHEMA_VERSION,
                'runs': json.loads(results.to_json(orient='records')),
                'summary': json.loads(summary.to_json(orient='records')),
            }
            _write_text(json.dumps(document, indent=2) + '\n', args.output)
        else:
            results.to_csv(args.output, index=False, lineterminator='\n')
    return EXIT_OK


##################
# refute list    #
##################
def list_command(args: argparse.Namespace) -> int:
    lines = [f"{'id':<14} {'class':<14} {'min size':>8} {'target':>6}  statement"]
    for conj in list_conjectures():
        lines.append(
            f"{conj.id:<14} {conj.counterexample_class.value:<14} {conj.min_size:>8} {conj.default_target:>6}  "
            f"{conj.statement}")
    sys.stdout.write('\n'.join(lines) + '\n')
    return EXIT_OK


##################
# Parser         #
##################
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log search progress (-v for INFO, -vv for DEBUG)')

    parser = argparse.ArgumentParser(
        prog='refute', description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command')

    class_choices = [c.value for c in GraphClass]
    range_choices = [r.value for r in RangeDefinition]

    run_parser = subparsers.add_parser(
        'run', parents=[common], help='Search for a counter-example',
        description='Search for a counter-example. The margin of the reported graph is recomputed '
                    'with the residual-checked eigensolver before it is written',
    )
    run_parser.add_argument('-c', '--conjecture', required=True, help='Conjecture id, e.g. graffiti-197')
    run_parser.add_argument('-a', '--algorithm', required=True, help=f'One of: {", ".join(ALGORITHMS)}')
    run_parser.add_argument('--target', type=int, default=None, help='Number of vertices to build up to')
    run_parser.add_argument('--budget', type=float, default=None, help='Time budget in seconds (900 by default)')
    run_parser.add_argument('--seed', type=int, default=None, help='Random seed (OS entropy by default)')
    run_parser.add_argument('--min-size', type=int, default=None, dest='min_size')
    run_parser.add_argument('--class', choices=class_choices, default=None, dest='graph_class')
    run_parser.add_argument('--range-definition', choices=range_choices, default=None, dest='range_definition')
    run_parser.add_argument('--relaxed-class', action='store_true', dest='relaxed_class',
                            help='Build any graphs and check the class on counter-examples only')
    run_parser.add_argument('--format', choices=OUTPUT_FORMATS, default='edges', dest='output_format')
    run_parser.add_argument('-o', '--output', default=None, help='File to write the result to')
    run_parser.add_argument('--plot', default=None, help='Image file to draw the best graph to')
    run_parser.add_argument('--no-restarts', action='store_true', dest='no_restarts',
                            help='Do not restart nested searches until the budget is exhausted')
    hyper_group = run_parser.add_argument_group('hyperparameters')
    for name, type_ in HYPERPARAMETERS:
        hyper_group.add_argument(f"--{name.replace('_', '-')}", type=type_, default=None, dest=name)
    run_parser.set_defaults(func=run_command)

    verify_parser = subparsers.add_parser('verify', parents=[common], help='Check a graph against a conjecture')
    verify_parser.add_argument('source', nargs='?', default=None,
                               help='Edge list file, graph JSON or the JSON output of "refute run"')
    verify_parser.add_argument('--edges', default=None, help='Edge list given inline, e.g. "0-1, 1-2"')
    verify_parser.add_argument('-c', '--conjecture', default=None)
    verify_parser.add_argument('--class', choices=class_choices, default=None, dest='graph_class')
    verify_parser.add_argument('--min-size', type=int, default=None, dest='min_size')
    verify_parser.add_argument('--range-definition', choices=range_choices, default=None, dest='range_definition')
    verify_parser.add_argument('--format', choices=('text', 'json'), default='text', dest='output_format')
    verify_parser.add_argument('-o', '--output', default=None)
    verify_parser.set_defaults(func=verify_command)

    bench_parser = subparsers.add_parser('bench', parents=[common], help='Reproduce the table of times to refutation')
    bench_parser.add_argument('cells', nargs='*',
                              help='Cells like "graffiti-30:beam" or "graffiti-30:beam:beam_width=80". '
                                   'All published cells by default')
    bench_parser.add_argument('--seeds', type=int, default=1, help='Number of seeds per stochastic cell')
    bench_parser.add_argument('--first-seed', type=int, default=0, dest='first_seed')
    bench_parser.add_argument('--budget', type=float, default=900, help='Time budget of each run in seconds')
    bench_parser.add_argument('-o', '--output', default=None, help='CSV (or .json) file to write the runs to')
    bench_parser.add_argument('--no-progress', action='store_true', dest='no_progress')
    bench_parser.set_defaults(func=bench_command)

    list_parser = subparsers.add_parser('list', parents=[common], help='List the registered conjectures')
    list_parser.set_defaults(func=list_command)
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s: %(message)s', stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``refute`` command. Return the exit code"""
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith('-') and argv[0] not in {'-h', '--help', '--version'}:
        argv = ['run'] + argv

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code is None else e.code

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    configure_logging(args.verbose)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ArithmeticError) as e:
        logger.debug('refute %s failed', args.command, exc_info=True)
        sys.stderr.write(f"refute: error: {e}\n")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
