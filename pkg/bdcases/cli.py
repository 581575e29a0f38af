# ========================================================================
#
#  Copyright the BDCaseModels contributors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0.txt
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#
# ========================================================================

"""The ``bdcases`` command line.

Exit codes: 0 the queried property holds, 1 it does not, 2 usage, parse,
file format or capacity error, 3 ill-formed case model, 4 representation
mismatch, 5 a case is not determinate.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .Logger import Logger
from .arguments import STATUS_KINDS, Argument, Polarity, classify, classify_classical
from .case_models import (
    CaseModel,
    counterpart,
    dump_model,
    load_model,
    validate,
    validate_classical,
)
from .classical import classical_counter_valuation
from .classical import DEFAULT_CLASSICAL_VAR_CAP
from .enumeration import DEFAULT_VAR_CAP
from .errors import (
    BDCaseError,
    InvalidModel,
    NotDeterminate,
)
from .formula import variables
from .sampling import random_argument
from .semantics import RELATIONS, counter_valuation
from .syntax import parse_inner, parse_outer
from .two_layered import dump_mu, eval_outer, mu_counterpart, verify_representation

logger = logging.getLogger(__name__)

EXIT_HOLDS = 0
EXIT_DOES_NOT_HOLD = 1
EXIT_USAGE = 2
EXIT_INVALID_MODEL = 3
EXIT_MISMATCH = 4
EXIT_NOT_DETERMINATE = 5

OUTPUT_FORMATS = ("text", "json")
DEFAULT_SEED = 0


@dataclass(frozen=True)
class CliConfig:
    """Options shared by every subcommand."""

    var_cap: int = DEFAULT_VAR_CAP
    classical_var_cap: int = DEFAULT_CLASSICAL_VAR_CAP
    output: str = "text"
    seed: int = DEFAULT_SEED
    relation: str = "support"
    verbose: bool = False

    def __post_init__(self):
        for name in ("var_cap", "classical_var_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(
                f"Unknown output ({self.output}), valid values are {OUTPUT_FORMATS}"
            )
        if self.relation not in RELATIONS:
            raise ValueError(
                f"Unknown relation ({self.relation}), valid values are {tuple(RELATIONS)}"
            )

    @property
    def json(self) -> bool:
        return self.output == "json"

    def cap(self, classical: bool = False) -> int:
        return self.classical_var_cap if classical else self.var_cap


def _emit(config: CliConfig, text: str, data) -> None:
    if config.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path: str, config: CliConfig) -> CaseModel:
    model = load_model(path)
    if model.is_classical:
        report = validate_classical(model, var_cap=config.cap(classical=True))
    else:
        report = validate(model, var_cap=config.var_cap)
    if not report.ok:
        raise InvalidModel(report)
    return model


def _load_bd(path: str, config: CliConfig) -> CaseModel:
    model = _load(path, config)
    if model.is_classical:
        raise BDCaseError(f"{path} is a classical model; this command needs a BD case model")
    return model


def _argument(args) -> Argument:
    return Argument(parse_inner(args.phi), parse_inner(args.chi))


def cmd_validate(args, config: CliConfig) -> int:
    model = load_model(args.file)
    if model.is_classical:
        report = validate_classical(model, var_cap=config.cap(classical=True))
    else:
        report = validate(model, var_cap=config.var_cap)
    lines = ["ok"] if report.ok else []
    lines += [f"{v.kind} {' '.join(v.cases)}" for v in report.violations]
    _emit(
        config,
        "\n".join(lines),
        {
            "ok": report.ok,
            "classical": model.is_classical,
            "violations": [
                {"kind": v.kind, "cases": list(v.cases)} for v in report.violations
            ],
        },
    )
    return EXIT_HOLDS if report.ok else EXIT_INVALID_MODEL


def cmd_entails(args, config: CliConfig) -> int:
    phi, chi = parse_inner(args.phi), parse_inner(args.chi)
    if args.classical:
        counter = classical_counter_valuation(phi, chi, var_cap=config.cap(classical=True))
        values = None if counter is None else {p: str(b) for p, b in counter.items()}
    else:
        counter = counter_valuation(phi, chi, var_cap=config.var_cap)
        values = None if counter is None else {p: str(x) for p, x in counter.items()}
    if values is None:
        text = "holds"
    else:
        shown = " ".join(f"{p}={x}" for p, x in values.items())
        text = f"does not hold\ncounter-valuation: {shown}"
    _emit(config, text, {"holds": values is None, "counter_valuation": values})
    return EXIT_HOLDS if values is None else EXIT_DOES_NOT_HOLD


def _flag(value: bool) -> str:
    return "true" if value else "false"


def cmd_classify(args, config: CliConfig) -> int:
    model = _load(args.file, config)
    arg = _argument(args)
    if model.is_classical:
        status = classify_classical(model, arg, var_cap=config.cap(classical=True))
        lines = [f"{kind} {_flag(getattr(status, kind))}" for kind in STATUS_KINDS]
        lines += [
            f"witnesses {kind}: {' '.join(sorted(status.witnesses[kind]))}".rstrip()
            for kind in STATUS_KINDS
        ]
    else:
        status = classify(model, arg, relation=config.relation, var_cap=config.var_cap)
        lines = [f"{'status':<20} {'pos':<6} {'neg':<6} strong"]
        for kind in STATUS_KINDS:
            row = [f"{_flag(status.holds(kind, pol)):<6}" for pol in Polarity]
            lines.append(f"{kind:<20} {' '.join(row).rstrip()}")
        for kind in STATUS_KINDS:
            for pol in Polarity:
                names = " ".join(sorted(status.witnesses[kind, pol]))
                lines.append(f"witnesses {kind} {pol.value}: {names}".rstrip())
    lines.append(f"presumptive {_flag(status.presumptive)}")
    _emit(config, "\n".join(lines), status.as_dict())
    return EXIT_HOLDS


def cmd_counterpart(args, config: CliConfig) -> int:
    model = _load(args.file, config)
    if not model.is_classical:
        raise BDCaseError(f"{args.file} is not a classical model")
    translated = dump_model(counterpart(model))
    _emit(config, translated.rstrip("\n"), {"model": translated})
    return EXIT_HOLDS


def cmd_mu(args, config: CliConfig) -> int:
    model = _load_bd(args.file, config)
    mu = mu_counterpart(model, var_cap=config.var_cap)
    qg = mu.model
    data = {
        "points": [
            {
                "point": w,
                "case": mu.case_of_point[w],
                "mass": str(qg.mu({w})),
                "valuation": {p: str(x) for p, x in qg.points.valuation(w).items()},
            }
            for w in qg.points.points
        ],
        "capacity": qg.mu.kind,
    }
    _emit(config, dump_mu(mu).rstrip("\n"), data)
    return EXIT_HOLDS


def cmd_eval(args, config: CliConfig) -> int:
    model = _load_bd(args.file, config)
    alpha = parse_outer(args.alpha)
    value = eval_outer(mu_counterpart(model, var_cap=config.var_cap).model, alpha)
    _emit(config, str(value), {"value": str(value), "holds": value == 1})
    return EXIT_HOLDS if value == 1 else EXIT_DOES_NOT_HOLD


def cmd_verify(args, config: CliConfig) -> int:
    model = _load_bd(args.file, config)
    arguments = [_argument(args)]
    if args.sample:
        rng = np.random.default_rng(config.seed)
        signature = model.signature or tuple(sorted(set(variables(arguments[0].premise))))
        arguments += [random_argument(rng, signature) for _ in range(args.sample)]
    mu = mu_counterpart(model, var_cap=config.var_cap)

    lines, data, ok = [], [], True
    for arg in arguments:
        report = verify_representation(
            model, arg, relation=config.relation, var_cap=config.var_cap, counterpart=mu
        )
        ok = ok and report.ok
        for instance in report.instances:
            verdict = "agree" if instance.agrees else "DISAGREE"
            lines.append(f"{verdict} {arg} {instance}")
        data.append(
            {
                "argument": str(arg),
                "ok": report.ok,
                "instances": [
                    {
                        "kind": i.kind,
                        "polarity": i.polarity.value,
                        "witness": i.witness,
                        "status": i.expected,
                        "value": str(i.value),
                        "agrees": i.agrees,
                    }
                    for i in report.instances
                ],
            }
        )
    _emit(config, "\n".join(lines), {"ok": ok, "arguments": data})
    return EXIT_HOLDS if ok else EXIT_MISMATCH


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdcases",
        description="Paraconsistent case models: entailment, argument statuses "
        "and their two-layered representation.",
    )
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    parser.add_argument(
        "--var-cap",
        type=int,
        default=None,
        help=f"maximum number of variables to enumerate (default {DEFAULT_VAR_CAP}, "
        f"{DEFAULT_CLASSICAL_VAR_CAP} for classical checks)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for sampled arguments (default %(default)s)",
    )
    parser.add_argument(
        "--relation",
        choices=tuple(RELATIONS),
        default="support",
        help="relation between a case and a formula (default %(default)s)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    commands = parser.add_subparsers(dest="command", required=True)

    command = commands.add_parser("validate", help="check a case-model file")
    command.add_argument("file")
    command.set_defaults(func=cmd_validate)

    command = commands.add_parser("entails", help="decide phi entails chi")
    command.add_argument("--classical", action="store_true", help="two-valued entailment")
    command.add_argument("phi")
    command.add_argument("chi")
    command.set_defaults(func=cmd_entails)

    command = commands.add_parser("classify", help="status matrix of an argument")
    command.add_argument("file")
    command.add_argument("phi")
    command.add_argument("chi")
    command.set_defaults(func=cmd_classify)

    command = commands.add_parser("counterpart", help="translate a classical model")
    command.add_argument("file")
    command.set_defaults(func=cmd_counterpart)

    command = commands.add_parser("mu", help="print the mu-counterpart of a model")
    command.add_argument("file")
    command.set_defaults(func=cmd_mu)

    command = commands.add_parser("eval", help="evaluate an outer formula")
    command.add_argument("file")
    command.add_argument("alpha")
    command.set_defaults(func=cmd_eval)

    command = commands.add_parser("verify", help="check the representation of an argument")
    command.add_argument("file")
    command.add_argument("phi")
    command.add_argument("chi")
    command.add_argument(
        "--sample",
        type=int,
        default=0,
        metavar="N",
        help="also verify N random arguments drawn with --seed",
    )
    command.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        caps = {}
        if args.var_cap is not None:
            caps = {"var_cap": args.var_cap, "classical_var_cap": args.var_cap}
        config = CliConfig(
            **caps,
            output="json" if args.json else "text",
            seed=args.seed,
            relation=args.relation,
            verbose=args.verbose,
        )
    except ValueError as err:
        parser.error(str(err))

    with Logger(level=logging.DEBUG if config.verbose else logging.WARNING):
        try:
            return args.func(args, config)
        except InvalidModel as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_INVALID_MODEL
        except NotDeterminate as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_NOT_DETERMINATE
        except (BDCaseError, OSError) as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_USAGE
