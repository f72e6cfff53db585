import argparse
import logging
import sys
from typing import List, Optional

from algebra.assoc import ass, find_witness
from algebra.errors import AlgebraError
from algebra.ideal import power, require_proper
from algebra.powers import ass_sequence, indices
from config import settings
from polyhedra.linsys import (
    SystemKind,
    build_colon_system,
    build_power_system,
    build_sat_system,
    delta_exact,
    hadamard_bound,
    theorem1_bound,
)
from polyhedra.matrix_dump import dumps, read_dump, write_dump
from polyhedra.sigma import bound_report
from utils.ideal_parser import parse_ideal
from utils.output import (
    print_json,
    render_ass,
    render_bounds,
    render_delta,
    render_sequence,
    render_system,
    render_verify,
    support_str,
)
from utils.verification import verify_ideal

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging() -> None:
    logging.basicConfig(level=getattr(logging, settings.log_level, logging.WARNING), format=LOG_FORMAT)
    if settings.log_file:
        file_handler = logging.FileHandler(settings.log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(file_handler)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Machine-readable output, numbers as decimal strings')

    with_ideal = argparse.ArgumentParser(add_help=False, parents=[common])
    with_ideal.add_argument('ideal', help='Monomials separated by commas, e.g. "x1^2*x2, x2^3"')
    with_ideal.add_argument('--vars', type=int, help='Number of variables r (default: largest index used)')

    parser = argparse.ArgumentParser(
        description='Associated primes of powers of monomial ideals and bounds on their stabilization'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('ass', parents=[with_ideal], help='Associated primes of R/I^n')
    p.add_argument('--power', type=int, default=1, help='Power n (default: 1)')
    p.add_argument('--witness', action='store_true', help='Search a witness monomial for every prime')

    p = sub.add_parser('sequence', parents=[with_ideal], help='Ass(R/I^n) for n = 1..N and the indices')
    p.add_argument('--max-n', type=int, default=settings.n_max, help=f'Largest power (default: {settings.n_max})')
    p.add_argument('--window', type=int, default=settings.confirmation_window, help='Confirmation window')

    sub.add_parser('bounds', parents=[with_ideal], help='sigma1 and sigma2 at raw and reduced parameters')

    p = sub.add_parser('system', parents=[with_ideal], help='Build an inequality system')
    p.add_argument('--power-kind', choices=['power', 'colon', 'sat'], default='colon')
    p.add_argument('--sat-n', type=int, default=1, help='Scale N of the sat system (default: 1)')
    p.add_argument('--dump', help='Write the system to this file')

    p = sub.add_parser('verify', parents=[with_ideal], help='Run the oracle suites on one ideal')
    p.add_argument('--max-n', type=int, default=settings.verify_system_max_n, help='Largest power checked')
    p.add_argument('--no-sat', action='store_true', help='Skip the sat scaling search')

    p = sub.add_parser('delta', parents=[common], help='Delta of a dumped system')
    p.add_argument('file', help='Matrix dump written by "system --dump"')
    p.add_argument('--order-cap', type=int, default=settings.delta_order_cap, help='Largest minor order')

    return parser


def _ass(args, ideal, names) -> int:
    require_proper(ideal, "ass")
    P = power(ideal, args.power)
    supports = ass(P)
    witnesses = [find_witness(P, M) for M in supports] if args.witness else None
    if args.json:
        data = {
            "ideal": ideal.to_str(names), "vars": names, "power": args.power,
            "ass": [support_str(M, names) for M in supports], "supports": supports,
        }
        if witnesses is not None:
            data["witnesses"] = [w._asdict() for w in witnesses]
        print_json(data)
    else:
        render_ass(ideal.to_str(names), supports, names, args.power, witnesses)
    return 0


def _sequence(args, ideal, names) -> int:
    profile = ass_sequence(ideal, args.max_n)
    report = indices(profile, args.window)
    if args.json:
        print_json({
            "ideal": ideal.to_str(names), "vars": names, "n_max": profile.n_max,
            "sequence": profile.sequence, "indices": report,
        })
    else:
        render_sequence(profile, report, names)
    return 0


def _bounds(args, ideal, names) -> int:
    report = bound_report(ideal)
    if args.json:
        print_json({"ideal": ideal.to_str(names), "vars": names, "report": report})
    else:
        render_bounds(report)
    return 0


def _system(args, ideal, names) -> int:
    kind = SystemKind(args.power_kind)
    if kind is SystemKind.POWER:
        system = build_power_system(ideal)
    elif kind is SystemKind.COLON:
        system = build_colon_system(ideal)
    else:
        system = build_sat_system(ideal, args.sat_n)
    if args.dump:
        write_dump(system, args.dump)
    if args.json:
        print_json({"ideal": ideal.to_str(names), "vars": names, "system": system})
    else:
        render_system(system, dumps(system))
    return 0


def _verify(args, ideal, names) -> int:
    report = verify_ideal(ideal, args.max_n, names, include_sat=not args.no_sat)
    if args.json:
        print_json({"ok": report.ok, "report": report})
    else:
        render_verify(report)
    return 0 if report.ok else 1


def _delta(args) -> int:
    system = read_dump(args.file)
    delta = delta_exact(system, args.order_cap)
    hadamard = hadamard_bound(system)
    theorem = theorem1_bound(system, delta=delta)
    if args.json:
        print_json({"delta": delta, "cap_exceeded": delta.cap_exceeded, "hadamard": hadamard, "theorem1": theorem})
    else:
        render_delta(delta, hadamard, theorem)
    return 0


COMMANDS = {
    'ass': _ass,
    'sequence': _sequence,
    'bounds': _bounds,
    'system': _system,
    'verify': _verify,
}


def run(args: argparse.Namespace) -> int:
    if args.command == 'delta':
        return _delta(args)
    ideal, names = parse_ideal(args.ideal, args.vars)
    logger.info(f"{args.command}: I = {ideal.to_str(names)} in {ideal.r} variables")
    return COMMANDS[args.command](args, ideal, names)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the command line, run one command and map errors to exit codes"""
    args = build_parser().parse_args(argv)
    configure_logging()
    try:
        return run(args)
    except AlgebraError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    exit(main())
