"""The ``hlab`` command: reproducible experiments written as report files.

Exit codes: 0 for a positive verdict, 1 for a negative one (non-matroid,
greedy gap, infeasible cover), 2 for any error.
"""
import argparse
import io
import logging
import os
import sys

from ..core import (
    WeightFunction,
    brute_force_max,
    greedy,
    has_exchange_property,
    is_hereditary,
    theorem1_witness,
    weight_of,
)
from ..cover import (
    Permutation,
    assignment_matrix,
    cover_from_permutation,
    enumerate_assignment_solutions,
    lemma_hmc_check,
    min_cycle_cover,
)
from ..error import ContractError, HlabError, format_error
from ..instances import (
    FIGURE1_PERMUTATION_C,
    FIGURE1_PERMUTATION_D,
    DEFAULT_SEED,
    FIGURE1_PI_STAR,
    figure1_graph,
    random_cnf,
)
from ..language.parser import parse_cnf, parse_family, parse_graph
from ..language.printer import print_graph
from ..language.source import Source
from ..limits import (
    COVER_VERTICES,
    FAMILY_GROUND,
    HCP_VERTICES,
    MISP_VERTICES,
    SAT_VARIABLES,
    check_capacity,
)
from ..problems import FamilyOracle, HcpOracle, MispOracle, SatOracle, hamiltonian_cycles
from ..pyutils.bits import iter_bits, mask_of
from ..sequential import (
    POLICIES,
    PROBLEMS,
    classify_growth,
    dump_trace,
    sequential_build,
    uf_verdict_sheet,
)
from ..sequential.executors import SyncExecutor, ThreadExecutor
from .config import FORMATS, RunConfig, parse_int_list, parse_sizes
from .reports import Report, validate_report, write_output

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
    from ..core import SetFamily
    from ..instances import Graph
    from ..problems import IndependenceOracle

__all__ = ["build_parser", "main", "SUBCOMMANDS"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

DEFAULT_SIZES = {"misp": "4..16", "hcp": "6..9", "sat": "3..8"}
SHEET_SAT_VARIABLES = 6


def _read(path):
    # type: (Optional[str]) -> Source
    if path is None:
        raise ContractError("This subcommand needs --input.")
    with io.open(path, encoding="utf-8") as handle:
        return Source(handle.read(), path)


def _family(config):
    # type: (RunConfig) -> SetFamily
    family = parse_family(_read(config.input()))
    check_capacity(FAMILY_GROUND, family.ground.size, config.caps[FAMILY_GROUND])
    return family


def _graph(config, cap_names):
    # type: (RunConfig, Sequence[str]) -> Graph
    path = config.input()
    graph = figure1_graph() if path is None else parse_graph(_read(path))
    for name in cap_names:
        check_capacity(name, graph.n, config.caps[name])
    return graph


def _edge_labels(graph, mask):
    # type: (Graph, int) -> List[str]
    return [graph.edge_label(e) for e in iter_bits(mask)]


def cmd_matroid(config):
    # type: (RunConfig) -> Tuple[Report, int]
    family = _family(config)
    describe = family.ground.describe
    hereditary, witness = is_hereditary(family)
    exchange, violation = has_exchange_property(family)
    gap = None
    if violation is not None:
        # greedy loss under the weights built from the violation
        w = theorem1_witness(family, violation)
        gap = brute_force_max(family, w)[1] - weight_of(greedy(family, w), w)
    data = {
        "family_id": os.path.basename(config.input() or ""),
        "ground": family.ground.size,
        "maximal_sets": [describe(mask) for mask in family.maximal_sets()],
        "members": len(family),
        "hereditary": hereditary,
        "hereditary_witness": [describe(m) for m in witness] if witness else None,
        "exchange": exchange,
        "violation": violation.to_dict(family) if violation else None,
        "matroid": hereditary and exchange,
        "greedy_gap": gap,
    }
    return Report(data), EXIT_OK if data["matroid"] else EXIT_NEGATIVE


def cmd_greedy(config):
    # type: (RunConfig) -> Tuple[Report, int]
    family = _family(config)
    describe = family.ground.describe
    raw = config.options.get("weights")
    if raw is None:
        raise ContractError("greedy needs --weights, a list of integers or 'witness'.")
    if raw == "witness":
        exchange, violation = has_exchange_property(family)
        if exchange:
            raise ContractError("A matroid has no witness weights.")
        w = theorem1_witness(family, violation)  # type: ignore
    else:
        w = WeightFunction(parse_int_list(raw))

    chosen = greedy(family, w)
    best, best_weight = brute_force_max(family, w)
    greedy_weight = weight_of(chosen, w)
    data = {
        "weights": list(w.weights),
        "greedy": describe(chosen),
        "greedy_weight": greedy_weight,
        "optimum": describe(best),
        "optimum_weight": best_weight,
        "gap": best_weight - greedy_weight,
    }
    return Report(data), EXIT_OK if data["gap"] == 0 else EXIT_NEGATIVE


def cmd_figure1(config):
    # type: (RunConfig) -> Tuple[Report, int]
    graph = figure1_graph()
    for name in (HCP_VERTICES, COVER_VERTICES):
        check_capacity(name, graph.n, config.caps[name])
    matrix = assignment_matrix(graph)
    sigma_c = Permutation.from_one_based(FIGURE1_PERMUTATION_C)
    sigma_d = Permutation.from_one_based(FIGURE1_PERMUTATION_D)
    cover_c = cover_from_permutation(graph, sigma_c)
    cover_d = cover_from_permutation(graph, sigma_d)

    cycles = hamiltonian_cycles(graph)
    cycle_masks = [graph.edge_mask_of_cycle(cycle) for cycle in cycles]
    pi_star = mask_of(e - 1 for e in FIGURE1_PI_STAR)
    dead = HcpOracle(graph).dead_elements()
    best = min_cycle_cover(graph)

    data = {
        "graph": print_graph(graph),
        "matrix_c": matrix.to_text(circled=sigma_c.images),
        "matrix_d": matrix.to_text(circled=sigma_d.images),
        "permutation_c": sigma_c.to_one_based(),
        "permutation_d": sigma_d.to_one_based(),
        "cover_c": cover_c.to_dict(),
        "cover_d": cover_d.to_dict(),
        "part_counts": [cover_c.part_count, cover_d.part_count],
        "hamiltonian_cycles": [
            {
                "vertices": [graph.vertex_label(v) for v in cycle],
                "edges": _edge_labels(graph, mask),
            }
            for cycle, mask in zip(cycles, cycle_masks)
        ],
        "hamiltonian_cycle_count": len(cycles),
        "pi_star_is_hamiltonian": pi_star in cycle_masks,
        "uniqueness_claim": "confirmed" if len(cycles) == 1 else "contradicted",
        "dead_edges": [graph.edge_label(e) for e in dead],
        "min_cycle_cover": best.to_dict() if best is not None else None,
    }
    return Report(data), EXIT_OK


def cmd_mvdccp(config):
    # type: (RunConfig) -> Tuple[Report, int]
    graph = _graph(config, (COVER_VERTICES, HCP_VERTICES))
    best = min_cycle_cover(graph)
    solutions = sum(1 for _ in enumerate_assignment_solutions(graph))
    lemma = lemma_hmc_check(graph)
    data = {
        "vertices": graph.n,
        "edges": graph.m,
        "feasible": best is not None,
        "min_cycle_cover": best.to_dict() if best is not None else None,
        "part_count": best.part_count if best is not None else None,
        "assignment_solutions": solutions,
        "lemma": lemma.to_dict(),
    }
    return Report(data), EXIT_OK if best is not None else EXIT_NEGATIVE


def cmd_classify(config):
    # type: (RunConfig) -> Tuple[Report, int]
    problem = config.options["problem"]
    sizes = parse_sizes(config.options.get("sizes") or DEFAULT_SIZES[problem])
    threads = config.options.get("threads") or 0
    executor = ThreadExecutor(pool=threads) if threads else SyncExecutor()
    try:
        report = classify_growth(
            problem,
            sizes,
            seed=config.seed,
            samples=config.options.get("samples") or 3,
            executor=executor,
            caps=config.caps,
        )
    finally:
        executor.clean()
    return Report(report.to_dict(), rows=report.to_rows()), EXIT_OK


def _oracle(problem, config, source=None):
    # type: (str, RunConfig, Optional[Source]) -> IndependenceOracle
    caps = config.caps
    if problem in ("misp", "hcp"):
        graph = figure1_graph() if source is None else parse_graph(source)
        if problem == "misp":
            check_capacity(MISP_VERTICES, graph.n, caps[MISP_VERTICES])
            return MispOracle(graph, name=source.name if source else "figure1")
        check_capacity(HCP_VERTICES, graph.n, caps[HCP_VERTICES])
        return HcpOracle(graph, name=source.name if source else "figure1")
    if problem == "sat":
        if source is None:
            formula = random_cnf(
                SHEET_SAT_VARIABLES, 4 * SHEET_SAT_VARIABLES, config.seed, planted=True
            )
            name = "planted-3cnf"
        else:
            formula = parse_cnf(source)
            name = source.name
        check_capacity(SAT_VARIABLES, formula.num_vars, caps[SAT_VARIABLES])
        return SatOracle(formula, name=name)
    if problem == "family":
        if source is None:
            raise ContractError("The family problem needs --input.")
        family = parse_family(source)
        check_capacity(FAMILY_GROUND, family.ground.size, caps[FAMILY_GROUND])
        return FamilyOracle(family, name=source.name)
    raise ContractError('Unknown problem "{}".'.format(problem))


def cmd_sheet(config):
    # type: (RunConfig) -> Tuple[Report, int]
    oracles = []
    for problem in ("misp", "hcp", "sat"):
        for path in config.options.get(problem) or []:
            oracles.append(_oracle(problem, config, _read(path)))
    if not oracles:
        oracles = [_oracle(problem, config) for problem in ("misp", "hcp", "sat")]
    sheet = uf_verdict_sheet(oracles)
    return Report(sheet.to_dict(), rows=sheet.to_rows()), EXIT_OK


def cmd_trace(config):
    # type: (RunConfig) -> Tuple[Report, int]
    path = config.input()
    oracle = _oracle(
        config.options["problem"], config, _read(path) if path is not None else None
    )
    order = config.options.get("order")
    trace = sequential_build(
        oracle,
        config.options.get("policy") or "first-feasible",
        seed=config.seed,
        order=[e - 1 for e in parse_int_list(order)] if order else None,
    )
    return Report(trace.to_dict(), rows=trace.to_dict()["steps"], text=dump_trace(trace)), EXIT_OK


SUBCOMMANDS = {
    "matroid": cmd_matroid,
    "greedy": cmd_greedy,
    "figure1": cmd_figure1,
    "mvdccp": cmd_mvdccp,
    "classify": cmd_classify,
    "sheet": cmd_sheet,
    "trace": cmd_trace,
}  # type: Dict[str, Callable[[RunConfig], Tuple[Report, int]]]


def _seed(value):
    # type: (str) -> int
    return int(value, 0)


def build_parser():
    # type: () -> argparse.ArgumentParser
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", help="instance file")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", help="report path, standard output when omitted")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hlab", description="Experiments on hereditary set systems."
    )
    subparsers = parser.add_subparsers(dest="subcommand")
    subparsers.required = True

    subparsers.add_parser("matroid", parents=[common], help="heredity and exchange check")
    greedy_parser = subparsers.add_parser(
        "greedy", parents=[common], help="greedy against brute force"
    )
    greedy_parser.add_argument("--weights", help="comma separated integers or 'witness'")
    subparsers.add_parser("figure1", parents=[common], help="the worked 8-vertex example")
    subparsers.add_parser("mvdccp", parents=[common], help="minimum cycle cover")

    classify_parser = subparsers.add_parser(
        "classify", parents=[common], help="extension work growth"
    )
    classify_parser.add_argument("problem", choices=sorted(PROBLEMS))
    classify_parser.add_argument("--sizes", help="size range A..B")
    classify_parser.add_argument("--samples", type=int, default=3)
    classify_parser.add_argument("--threads", type=int, default=0)

    sheet_parser = subparsers.add_parser(
        "sheet", parents=[common], help="observed cost against claimed classes"
    )
    for problem in ("misp", "hcp", "sat"):
        sheet_parser.add_argument("--" + problem, action="append", metavar="FILE")

    trace_parser = subparsers.add_parser(
        "trace", parents=[common], help="one sequential construction"
    )
    trace_parser.add_argument("problem", choices=sorted(set(PROBLEMS) | {"family"}))
    trace_parser.add_argument("--policy", choices=sorted(POLICIES), default="first-feasible")
    trace_parser.add_argument("--order", help="1-based element numbers for given-order")
    return parser


def main(argv=None, environ=None, stdout=None, stderr=None):
    # type: (Optional[List[str]], Optional[Dict[str, str]], Any, Any) -> int
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = RunConfig.from_args(args, environ)
        logger.debug("Running %r", config)
        report, code = SUBCOMMANDS[config.subcommand](config)
        validate_report(config.subcommand, report.data)
        write_output(report.render(config.format), config.out, stdout)
    except (HlabError, IOError, OSError) as error:
        logger.error("hlab %s failed", args.subcommand, exc_info=args.verbose)
        stderr.write(u"{}\n".format(format_error(error)["message"]))
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
