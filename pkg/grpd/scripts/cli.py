#   Copyright (c) 2026 grpd Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Command line main program."""

import argparse
import json
import logging
import sys

from grpd.core.errors import GrpdError, ParseError, ValidationError
from grpd.core.frames import frame_dphi, frame_is_sbis
from grpd.core.report import Report, emit_report
from grpd.core.vb_groupoid import vbg_core, vbg_dual, vbg_validate
from grpd.data.sampler import DEFAULT_BASEPAIRS, DEFAULT_PER_ARROW, sample_frames
from grpd.data.spec_reader import load_spec, save_spec
import grpd.suites as suites
from grpd.utils import Timer, default_seed, parse_args, str2bool

logger = logging.getLogger("grpd")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _add_run_args(parser, sampling=False, trials=False):
    group = parser.add_argument_group("Run")
    group.add_argument("--seed", type=int, default=default_seed(),
                       help="The seed of every random choice; defaults to $GRPD_SEED or 0.")
    group.add_argument("--format", type=str, default="text", choices=["text", "machine"],
                       help="The report format written to stdout.")
    group.add_argument("--log_level", type=str, default="WARNING",
                       choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                       help="The logging level of messages written to stderr.")
    if sampling:
        group.add_argument("--per_arrow", "--per-arrow", dest="per_arrow", type=int, default=DEFAULT_PER_ARROW,
                           help="The number of sampled frames per arrow.")
        group.add_argument("--basepairs", type=int, default=DEFAULT_BASEPAIRS,
                           help="The number of sampled base pairs per object.")
    if trials:
        group.add_argument("--trials", type=int, default=100,
                           help="The number of random trials per check.")
        group.add_argument("--progress", type=str2bool, default=False,
                           help="Whether to show a progress bar per suite.")
    return group


def setup_parser():
    """Setup command line arguments."""
    parser = argparse.ArgumentParser(prog="grpd",
                                     description="Exact checks of VB-groupoids and their frame bundles.")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    validate = subparsers.add_parser("validate", help="Check the VB-groupoid axioms of a spec file.")
    validate.add_argument("spec", type=str, help="A spec file or the name of a bundled fixture.")
    _add_run_args(validate)

    core = subparsers.add_parser("core", help="Print the core and the core-anchor per object.")
    core.add_argument("spec", type=str)
    _add_run_args(core)

    frames = subparsers.add_parser("frames", help="Sample s-bisection frames.")
    frames.add_argument("spec", type=str)
    _add_run_args(frames, sampling=True)

    check = subparsers.add_parser("check", help="Run verification suites.")
    check.add_argument("spec", type=str)
    _add_run_args(check, sampling=True, trials=True)
    suites.add_cmdline_args(check)

    dual = subparsers.add_parser("dual", help="Write the dual VB-groupoid.")
    dual.add_argument("spec", type=str)
    dual.add_argument("-o", "--output", type=str, required=True, help="The output spec file.")
    _add_run_args(dual)
    return parser


def run_validate(args):
    vb = load_spec(args.spec, validate=False)
    report = Report("validate", instance=vb.name)
    validation = vbg_validate(vb)
    report.check("vb_axioms", validation.ok, witness=lambda: {"violations": len(validation.failures)})
    return report.merge(validation)


def run_core(args):
    vb = load_spec(args.spec)
    report = Report("core", instance=vb.name)
    for x in vb.base.objects:
        core, anchor = vbg_core(vb, x)
        report.check("core_rank", core.dim == vb.l, witness=lambda: {"object": x, "core": core.basis})
        report.note(f"{x}: core basis {core.basis.to_grid()}, core-anchor {anchor.to_grid()}")
    return report


def run_frames(args):
    vb = load_spec(args.spec)
    sample = sample_frames(vb, args.seed, args.per_arrow, args.basepairs)
    report = Report("frames", instance=vb.name, seed=args.seed)
    if sample.is_empty():
        report.note("empty frame sample")
    for g in vb.base.arrows:
        for i, f in enumerate(sample.frames[g]):
            report.check("sample_sbis", frame_is_sbis(vb, g, f.Phi), i, witness=lambda: {"arrow": g, "frame": f.Phi})
            report.note(f"{g}[{i}]: frame {f.Phi.to_grid()}, moment {frame_dphi(f).to_grid()}")
    return report


def run_check(args):
    vb = load_spec(args.spec)
    sample = sample_frames(vb, args.seed, args.per_arrow, args.basepairs)
    report = Report("check", instance=vb.name, seed=args.seed)
    timer = Timer()
    for suite in suites.create_suites(args):
        name = type(suite).__name__
        with timer.lap(name):
            report.merge(suite.run(vb, sample))
        logger.info("%s on %s: %.2fs", name, vb.name, timer.laps[name])
    logger.info("check on %s: %.2fs", vb.name, timer.total)
    return report


def run_dual(args):
    vb = load_spec(args.spec)
    dual = vbg_dual(vb)
    report = Report("dual", instance=vb.name)
    report.check("dual_valid", vbg_validate(dual).ok)
    save_spec(dual, args.output)
    report.note(f"wrote {dual.name} to {args.output}")
    return report


COMMANDS = {
    "validate": run_validate,
    "core": run_core,
    "frames": run_frames,
    "check": run_check,
    "dual": run_dual,
}


def cli_run(argv=None, stdout=None):
    """Run one command; returns the exit code and the report written to `stdout`."""
    if stdout is None:
        stdout = sys.stdout.buffer
    parser = setup_parser()
    try:
        args = parse_args(parser, argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE, Report("usage")
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT, stream=sys.stderr, force=True)
    if args.command == "check":
        args.load(args.config_path, "Suite")
    logger.debug("args: %s", json.dumps(args))

    try:
        report = COMMANDS[args.command](args)
    except (ParseError, FileNotFoundError) as err:
        print(f"grpd {args.command}: {err}", file=sys.stderr)
        return EXIT_USAGE, Report(args.command)
    except ValidationError as err:
        report = Report(args.command)
        report.fail("vb_axioms", error=str(err))
        if err.report is not None:
            report.merge(err.report)
    except GrpdError as err:
        report = Report(args.command)
        report.fail("run", error=f"{type(err).__name__}: {err}")

    color = args.format == "text" and stdout.isatty()
    stdout.write(emit_report(report, args.format, color=color))
    stdout.flush()
    return (EXIT_OK if report.ok else EXIT_FAILED), report


def main():
    code, _ = cli_run(sys.argv[1:])
    sys.exit(code)


if __name__ == "__main__":
    main()
