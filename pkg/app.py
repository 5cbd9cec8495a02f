# encoding:utf-8

import argparse
import sys

import config as settings
from command import command_factory
from command.run_config import RunConfig
from common import const
from common.errors import ToolkitError, ValidationError
from common.log import logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=const.TOOLKIT, description="Two-part wear simulation, rate estimation and replacement policy optimisation.")
    parser.add_argument("verb", choices=const.VERBS)
    parser.add_argument("--config", help="JSON settings file (default ./config.json, then config-template.json)")
    parser.add_argument("--seed", type=int, help="override the seed setting")
    parser.add_argument("--out", help="override the output directory")
    parser.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="override any setting; VALUE is parsed as JSON when possible")
    return parser


def apply_overrides(cfg, args):
    for item in args.set:
        if "=" not in item:
            raise ValidationError("--set expects KEY=VALUE, got {}".format(item))
        key, value = item.split("=", 1)
        cfg[key.strip()] = settings.parse_value(value)
    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.out is not None:
        cfg["output_dir"] = args.out
    settings.apply_debug()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = settings.load_config(args.config)
        apply_overrides(cfg, args)
        rc = RunConfig.from_settings(dict(settings.conf()), settings.config_dir)
        command = command_factory.create_command(args.verb)
        logger.info("[CMD] {} seed={} config={} -> {}".format(args.verb, rc.seed, rc.config_hash, rc.output_dir))
        return command.run(rc)
    except ToolkitError as e:
        logger.error("[CMD] {} failed: {}".format(args.verb, e))
        return e.exit_code
    except Exception as e:
        logger.error("[CMD] {} failed unexpectedly".format(args.verb))
        logger.exception(e)
        return const.EXIT_UNEXPECTED


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
