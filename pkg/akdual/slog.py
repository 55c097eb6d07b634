"""
io.StringIO based log for sweep workers: each pattern's checks are logged into a buffer
and handed back to the parent as one block, so concurrent and serial sweeps emit the
same log in the same (canonical) order.
"""

import io

__buffered_log__ = io.StringIO("")

def init_slog():
    global __buffered_log__
    __buffered_log__ = io.StringIO("")
    return

def slog(*args):
    print(*args, file=__buffered_log__)

def slog_check(name, report):
    status = "pass" if report.passed else "FAIL (%d)" % len(report.failures)
    slog("  %-18s %6d checked  %s" % (name, report.checked, status))

def get_slog():
    return __buffered_log__.getvalue()
