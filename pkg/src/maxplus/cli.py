"""Command-line front end.

Every subcommand reads JSON inputs, runs one library pipeline and writes a
JSON (or CSV) artifact.  Runs are deterministic given the argv and input
files.  Exit codes: 0 success, 1 domain outcomes (no fixed point reached, no
observer solution, work ceiling hit), 2 malformed inputs or I/O failures.
Errors are reported as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .congruences import Congruence, kernel_of
from .core import Matrix, matrix_from_json, matrix_to_json
from .errors import (ConstraintViolation, MaxplusError, NotConverged,
                     NotReconstructible, NotSolvable, ResourceExceeded)
from .invariance import max_controlled_invariant, min_conditioned_invariant_closed
from .observer import run_observer, synthesize_observer
from .semimodules import Semimodule, volume
from .teg import (TegSpec, compile_teg, embed_trajectory, extend_interval_system,
                  extend_output_matrix, sample_trajectory, write_trajectory_csv)

_RETRYABLE = (NotConverged, NotSolvable, NotReconstructible, ResourceExceeded,
              ConstraintViolation)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_matrix(path: str, allow_top: bool = False) -> Matrix:
    return matrix_from_json(_load_json(path), allow_top=allow_top)


def _cmd_invariant_controlled(args) -> int:
    a = _load_matrix(args.A)
    b = _load_matrix(args.B)
    k = Semimodule.from_json(_load_json(args.K))
    report = max_controlled_invariant(a, b, k, max_iter=args.max_iter)
    _emit(report.to_json(), args.out)
    if not report.converged:
        _error_json("NotConverged", f"no fixed point after {report.iterations} iterations",
                    iterations=report.iterations)
        return 1
    return 0


def _cmd_invariant_conditioned(args) -> int:
    c = _load_matrix(args.C)
    a = _load_matrix(args.A)
    v = Congruence.from_json(_load_json(args.V))
    w = min_conditioned_invariant_closed(c, a, v, max_iter=args.max_iter)
    _emit(w.to_json(), args.out)
    return 0


def _cmd_observer_synth(args) -> int:
    f = _load_matrix(args.F)
    a = _load_matrix(args.A)
    c = _load_matrix(args.C)
    obs = synthesize_observer(f, a, c)
    _emit({"F": matrix_to_json(obs.F), "U": matrix_to_json(obs.U),
           "V": matrix_to_json(obs.V)}, args.out)
    return 0


def _cmd_volume(args) -> int:
    gens = _load_matrix(args.gens)
    result = volume(Semimodule.from_matrix(gens), box_bound=args.bound)
    _emit(result.to_json(), args.out)
    return 0


def _cmd_teg_compile(args) -> int:
    spec = TegSpec.from_json(_load_json(args.teg))
    abar, c = compile_teg(spec)
    _emit({"interval_matrix": abar.to_json(), "C": matrix_to_json(c)}, args.out)
    return 0


def _cmd_simulate(args) -> int:
    spec = TegSpec.from_json(_load_json(args.teg))
    abar, c_orig = compile_teg(spec)
    e, a, emap = extend_interval_system(abar)
    traj = sample_trajectory(abar, args.horizon, args.seed, c_orig)
    embedded = embed_trajectory(traj, emap, e, a)
    observer_states = None
    if args.observe:
        c_ext = extend_output_matrix(c_orig, emap)
        w = min_conditioned_invariant_closed(c_ext, a, kernel_of(e),
                                             max_iter=args.max_iter)
        obs = synthesize_observer(w.kernel_form(), a, c_ext)
        observer_states = run_observer(obs, embedded[0], traj.outputs[:-1])
    with open(args.csv, "w", encoding="utf-8", newline="") as fh:
        write_trajectory_csv(fh, embedded, traj.outputs, observer_states)
    return 0


def _error_json(kind: str, message: str, **extra) -> None:
    payload = {"error": kind, "message": message}
    payload.update(extra)
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxplus",
        description="Max-plus invariant spaces, observers and event-graph simulation.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("invariant-controlled",
                       help="maximal controlled invariant semimodule inside K")
    p.add_argument("--A", required=True, help="state matrix JSON")
    p.add_argument("--B", required=True, help="input matrix JSON")
    p.add_argument("--K", required=True, help="semimodule JSON to stay inside")
    p.add_argument("--max-iter", type=int, default=64)
    p.add_argument("--out", default=None, help="fixpoint report JSON (default stdout)")
    p.set_defaults(func=_cmd_invariant_controlled)

    p = sub.add_parser("invariant-conditioned",
                       help="minimal closed conditioned invariant congruence containing V")
    p.add_argument("--C", required=True, help="observation matrix JSON")
    p.add_argument("--A", required=True, help="state matrix JSON")
    p.add_argument("--V", required=True, help="kernel-form congruence JSON")
    p.add_argument("--max-iter", type=int, default=64)
    p.add_argument("--out", default=None, help="congruence JSON (default stdout)")
    p.set_defaults(func=_cmd_invariant_conditioned)

    p = sub.add_parser("observer-synth",
                       help="greatest (U, V) with F A = U F (+) V C")
    p.add_argument("--F", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--C", required=True)
    p.add_argument("--out", default=None, help="observer bundle JSON (default stdout)")
    p.set_defaults(func=_cmd_observer_synth)

    p = sub.add_parser("volume", help="normalized point count of a generated span")
    p.add_argument("--gens", required=True, help="generator matrix JSON")
    p.add_argument("--bound", dest="bound", type=int, default=None,
                   help="coordinate box bound (default: entry spread times dim + 1)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("teg-compile",
                       help="holding-time and observation matrices of an event graph")
    p.add_argument("--teg", required=True, help="TEG spec JSON")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_teg_compile)

    p = sub.add_parser("simulate",
                       help="sample the uncertain system, embed it, optionally observe it")
    p.add_argument("--teg", required=True, help="TEG spec JSON")
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--observe", action="store_true",
                   help="run the full invariant/observer pipeline and add z columns")
    p.add_argument("--max-iter", type=int, default=64)
    p.add_argument("--csv", required=True, help="trajectory CSV output path")
    p.set_defaults(func=_cmd_simulate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotConverged as exc:
        _error_json("NotConverged", str(exc), iterations=exc.iterations)
        return 1
    except _RETRYABLE as exc:
        _error_json(type(exc).__name__, str(exc))
        return 1
    except MaxplusError as exc:
        _error_json(type(exc).__name__, str(exc))
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        _error_json(type(exc).__name__, str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
