#!/usr/bin/env python3

import sys

import click
import yaml

from akdual.akdual_run import analyze, diagram, resolve_convention, sweep, verify_pattern
from akdual.config import CONVENTIONS, ConfigError, default_configuration, load_config_file
from akdual.dual import AdjudicationError
from akdual.pattern import PatternError, load_pattern_file
from akdual.report import render, write_sweep_csv

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


class AkdGroup(click.Group):
    """Runs commands with standalone_mode off so every exit goes through the 0 / 1 / 2 contract."""

    def main(self, *args, **kwargs):
        kwargs['standalone_mode'] = False
        try:
            rv = super().main(*args, **kwargs)
        except click.exceptions.Abort:
            click.echo("ERROR: aborted", err=True)
            sys.exit(EXIT_INVALID)
        except click.ClickException as e:
            click.echo("ERROR: %s" % e.format_message(), err=True)
            sys.exit(EXIT_INVALID)
        sys.exit(rv or EXIT_OK)


def error(message):
    click.echo("ERROR: %s" % message, err=True)
    return EXIT_INVALID


def load_config(config_path):
    if config_path is None:
        return default_configuration()
    return load_config_file(config_path)


def emit(text, out_path):
    if out_path is None:
        click.echo(text, nl=False)
    else:
        with open(out_path, "w") as f:
            f.write(text)


def setup(config_path, input_path, convention):
    """Config, pattern and sign convention for a single-pattern command."""
    config = load_config(config_path)
    pattern = load_pattern_file(input_path) if input_path is not None else None
    conv = resolve_convention(convention or config['convention'], config)
    return config, pattern, conv


INPUT_ERRORS = (PatternError, ConfigError, OSError, yaml.YAMLError)

config_option = click.option('--config', 'config_path', type=click.Path(), default=None,
                             help="YAML file overriding the default configuration")
convention_option = click.option('--convention', type=click.Choice(CONVENTIONS), default=None,
                                 help="sign convention (default: the configured one)")
format_option = click.option('--format', 'fmt', type=click.Choice(["human", "machine"]),
                             default="human")
out_option = click.option('--out', 'out_path', type=click.Path(), default=None,
                          help="write the report here instead of stdout")


@click.group(cls=AkdGroup)
def cmdline():
    pass


@cmdline.command(name="analyze")
@click.argument('input_path', type=click.Path())
@config_option
@convention_option
@format_option
@out_option
@click.option('--timings', is_flag=True, default=False)
def analyze_cmd(input_path, config_path, convention, fmt, out_path, timings):
    try:
        _, pattern, conv = setup(config_path, input_path, convention)
        emit(render(analyze(pattern, conv, timings), fmt), out_path)
    except INPUT_ERRORS as e:
        return error(e)
    return EXIT_OK


@cmdline.command(name="verify")
@click.argument('input_path', type=click.Path())
@config_option
@convention_option
@format_option
@out_option
@click.option('--timings', is_flag=True, default=False)
@click.option('--verbose', is_flag=True, default=False)
@click.option('--corrupt-mu', is_flag=True, default=False, hidden=True)
def verify_cmd(input_path, config_path, convention, fmt, out_path, timings, verbose, corrupt_mu):
    try:
        config, pattern, conv = setup(config_path, input_path, convention)
        report, log = verify_pattern(pattern, conv, config, corrupt=corrupt_mu, timings=timings)
        if verbose:
            click.echo(log, nl=False, err=True)
        emit(render(report, fmt), out_path)
    except AdjudicationError as e:
        click.echo("ERROR: %s" % e, err=True)
        return EXIT_FAILED
    except INPUT_ERRORS as e:
        return error(e)
    return EXIT_OK if report.passed else EXIT_FAILED


@cmdline.command(name="sweep")
@click.option('--n-max', type=int, required=True)
@config_option
@convention_option
@format_option
@out_option
@click.option('-n', '--num-processes', type=int, default=None)
@click.option('--csv', 'csv_path', type=click.Path(), default=None,
              help="also write the per-pattern table as CSV")
@click.option('--verbose', is_flag=True, default=False)
def sweep_cmd(n_max, config_path, convention, fmt, out_path, num_processes, csv_path, verbose):
    try:
        config, _, conv = setup(config_path, None, convention)
        if not (0 <= n_max <= config['sweep_ceiling']):
            return error("--n-max must be in 0..%d (sweep_ceiling), got %d" %
                         (config['sweep_ceiling'], n_max))
        processes = num_processes or config['num_processes']
        if processes < 1:
            return error("--num-processes must be >= 1")
        report, rows = sweep(n_max, conv, config, processes, verbose)
        if csv_path is not None:
            write_sweep_csv(rows, csv_path)
        emit(render(report, fmt), out_path)
    except AdjudicationError as e:
        click.echo("ERROR: %s" % e, err=True)
        return EXIT_FAILED
    except INPUT_ERRORS as e:
        return error(e)
    return EXIT_OK if report.passed else EXIT_FAILED


@cmdline.command(name="diagram")
@click.argument('input_path', type=click.Path())
@click.option('--out', 'out_path', type=click.Path(), required=True)
@config_option
def diagram_cmd(input_path, out_path, config_path):
    try:
        config = load_config(config_path)
        pattern = load_pattern_file(input_path)
    except INPUT_ERRORS as e:
        return error(e)
    try:
        diagram(pattern, out_path, config)
    except OSError as e:
        return error("cannot write diagram to %s: %s" % (out_path, e))
    return EXIT_OK


if __name__ == '__main__':
    cmdline()
