from multiprocessing import Pool
import sys
import time

from akdual.category import serialize
from akdual.closed_forms import compare_with_closed_form
from akdual.core_diagram import (admissible_chains, check_chain_bijection, check_intersections,
                                 check_relation_polygons)
from akdual.dual import (SignConvention, adjudicate_sign, adjudication_verdict, build_dual,
                         check_dual_structure, check_unitality, corrupt_mu, compare_quadratic)
from akdual.ext import check_oracle_agreement, global_dimension
from akdual.figures import render_svg
from akdual.generator.enumerate import bnk_parameter, patterns_up_to
from akdual.report import RunReport, sweep_table_records
from akdual.sequences import (check_dagger_bound, check_inversion, check_monotone,
                              check_reflection, check_relation_tail, counting_duality,
                              format_vertex, sequence_table)
from akdual.slog import get_slog, init_slog, slog, slog_check
from akdual.stasheff import verify_ainfty


def print_block(string, file=sys.stdout):
    print('{0}\n{1}\n{0}'.format('=' * 80, string), file=file)


def resolve_convention(name, config):
    """SignConvention for a config/CLI name; `auto` adjudicates over n <= adjudicate_n_max."""
    if name == "auto":
        conv, _ = adjudicate_sign(config['adjudicate_n_max'])
        return conv
    return SignConvention(name)


def pattern_section(pattern):
    section = pattern.as_dict()
    if pattern.redundant:
        section['warnings'] = ["redundant relation (%d,%d) discarded: it contains another relation"
                               % r for r in pattern.redundant]
    return section


def sequences_section(pattern):
    table = sequence_table(pattern)
    return {
        'plain': {s.base: [format_vertex(v) for v in s.values] for s in table.plain},
        'dagger': {s.base: [format_vertex(v) for v in s.values] for s in table.dagger},
    }


def run_checks(pattern, conv, config, corrupt=False):
    """Every verification that applies to `pattern`, in report order.

    Returns:
        (GradedBasisCategory, list): the (possibly corrupted) dual and its CheckReports.
    """
    n = pattern.n
    dual = build_dual(pattern, conv)
    if corrupt:
        dual = corrupt_mu(dual)
    checks = [
        check_dual_structure(pattern, dual),
        check_unitality(dual),
        verify_ainfty(dual, n + 1),
        check_monotone(pattern),
        check_inversion(pattern),
        check_dagger_bound(pattern),
        counting_duality(pattern),
        check_relation_tail(pattern),
        check_reflection(pattern),
        check_oracle_agreement(pattern, dual, n + config['ext_extra_degrees']),
        check_intersections(pattern),
        check_relation_polygons(pattern),
        check_chain_bijection(pattern, dual),
    ]
    if pattern.is_quadratic():
        checks.append(compare_quadratic(pattern, conv))
    k = bnk_parameter(pattern)
    if k is not None:
        checks.append(compare_with_closed_form(n, k, conv))
    return dual, checks


def analyze(pattern, conv, timings=False):
    start = time.perf_counter()
    report = RunReport("analyze")
    report.add('pattern', pattern_section(pattern))
    report.add('convention', conv.value)
    report.add('sequences', sequences_section(pattern))
    report.add('dual', serialize(build_dual(pattern, conv)))
    if timings:
        report.timings = {'total': time.perf_counter() - start}
    return report


def verify_pattern(pattern, conv, config, corrupt=False, timings=False):
    start = time.perf_counter()
    init_slog()
    slog("verify %s (%s)" % (pattern, conv.value))
    dual, checks = run_checks(pattern, conv, config, corrupt)
    checked = time.perf_counter()

    report = RunReport("verify")
    report.add('pattern', pattern_section(pattern))
    report.add('convention', conv.value)
    report.add('sequences', sequences_section(pattern))
    report.add('dual', serialize(dual))
    report.add('global_dimension', global_dimension(pattern))
    report.add('chains', [{'vertices': list(c.vertices), 'value': c.value}
                          for c in admissible_chains(pattern, dual)])
    for check in checks:
        slog_check(check.name, check)
        report.add_check(check)
    if timings:
        report.timings = {'checks': checked - start, 'total': time.perf_counter() - start}
    return report, get_slog()


# columns left empty for patterns the check does not apply to
OPTIONAL_CHECKS = ("quadratic", "closed_form")


def _pattern_key(pattern):
    return (pattern.n, pattern.relations)


def init_worker(config, conv):
    global worker_config, worker_conv
    worker_config = config
    worker_conv = conv


def sweep_worker(pattern):
    """Runs the verify suite on one pattern plus the A-infinity check under the other convention."""
    init_slog()
    slog("sweep %s" % pattern)
    _, checks = run_checks(pattern, worker_conv, worker_config)
    row = {'pattern': str(pattern), 'n': pattern.n, 'm': pattern.m}
    row.update({name: None for name in OPTIONAL_CHECKS})
    ainfty = {}
    for check in checks:
        slog_check(check.name, check)
        row[check.name] = check.passed
        if check.name == "ainfty":
            ainfty[worker_conv.value] = check.passed
    for other in SignConvention:
        if other is not worker_conv:
            report = verify_ainfty(build_dual(pattern, other), pattern.n + 1)
            ainfty[other.value] = report.passed
    return _pattern_key(pattern), row, get_slog(), ainfty


def sweep(n_max, conv, config, num_processes=1, verbose=False):
    """Verify suite over every pattern with n <= n_max and the sign adjudication.

    Returns:
        (RunReport, list): the report and the table rows in canonical pattern order.
    """
    patterns = sorted(patterns_up_to(n_max), key=_pattern_key)
    if verbose:
        print_block("SWEEP n <= %d: %d patterns, convention %s, %d process(es)"
                    % (n_max, len(patterns), conv.value, num_processes), file=sys.stderr)
    if num_processes > 1:
        with Pool(processes=num_processes, initializer=init_worker, initargs=[config, conv]) as pool:
            results = pool.map(sweep_worker, patterns)
    else:
        init_worker(config, conv)
        results = [sweep_worker(p) for p in patterns]
    results.sort(key=lambda r: r[0])

    failing_conv = {c.value: [] for c in SignConvention}
    rows = []
    for (key, row, log, ainfty), pattern in zip(results, patterns):
        rows.append(row)
        if verbose:
            print(log, end="", file=sys.stderr)
        for value, ok in ainfty.items():
            if not ok:
                failing_conv[value].append(str(pattern))
    if n_max < 3:
        _, failing_conv = adjudicate_sign(3)
    verdict = adjudication_verdict(failing_conv)

    check_names = [k for k in rows[0] if k not in ('pattern', 'n', 'm')]
    failing = [r['pattern'] for r in rows if any(r[name] is False for name in check_names)]
    report = RunReport("sweep")
    report.add('sweep', {
        'n_max': n_max,
        'convention': conv.value,
        'patterns': len(rows),
        'checks': check_names,
        'failing': len(failing),
        'minimal_failing_pattern': failing[0] if failing else None,
    })
    report.add('adjudication', {
        'n_max': max(n_max, 3),
        'default': verdict.value,
        'failing': failing_conv,
    })
    report.add('sweep_table', sweep_table_records(rows))
    report.add('passed', not failing)
    return report, rows


def diagram(pattern, out_path, config):
    svg = render_svg(pattern, config)
    with open(out_path, "wb") as f:
        f.write(svg)
    return len(svg)
