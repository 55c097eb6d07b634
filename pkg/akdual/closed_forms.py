from akdual.category import GradedBasisCategory, Morphism, hom_table, mu_eval
from akdual.checks import CheckReport
from akdual.dual import SignConvention, add_units, build_dual, eta, obj
from akdual.generator.enumerate import bnk_pattern
from akdual.pattern import PatternError


def bnk_degree(p, q, k):
    """Degree of the one-dimensional hom(B(p), B(q)) of B_{n,k}, or None when it vanishes."""
    if p < q:
        return None
    l, r = divmod(p - q, k)
    if r == 0:
        return 2 * l
    if r == 1:
        return 2 * l + 1
    return None


def stated_chains(n, k):
    """mu^k(eta_{p-k+1}^1, ..., eta_p^1) = eta_p^2 for k <= p <= n, as (key, output) pairs."""
    return [(tuple(eta(q + 1, q) for q in range(p - k, p)), eta(p, p - k)) for p in range(k, n + 1)]


def closed_form_bnk(n, k):
    """Hom table of B_{n,k} from the closed formula together with the stated mu^k chains."""
    if not (2 <= k <= n):
        raise PatternError("B_{n,k} needs 2 <= k <= n, got n=%d k=%d" % (n, k))
    morphisms = []
    for p in range(n, -1, -1):
        for q in range(p, -1, -1):
            d = bnk_degree(p, q, k)
            if d is not None:
                morphisms.append(Morphism(eta(p, q), obj(p), obj(q), d, identity=(p == q)))
    table = {key: (1, out) for key, out in stated_chains(n, k)}
    add_units(morphisms, table)
    return GradedBasisCategory([obj(p) for p in range(n, -1, -1)], morphisms, table,
                               name="closed form B_{%d,%d}" % (n, k))


def compare_with_closed_form(n, k, conv=SignConvention.LAST_ARG):
    report = CheckReport("closed_form")
    built = build_dual(bnk_pattern(n, k), conv)
    closed = closed_form_bnk(n, k)
    ours, theirs = hom_table(built), hom_table(closed)
    report.checked += 1
    if ours.shape != theirs.shape or (ours != theirs).any():
        homs = lambda cat: {(f.src, f.dst, f.degree) for f in cat.non_identity()}
        report.fail(reason="hom tables differ",
                    only_built=sorted(map(list, homs(built) - homs(closed))),
                    only_closed_form=sorted(map(list, homs(closed) - homs(built))))
    for key, out in stated_chains(n, k):
        report.checked += 1
        value = mu_eval(built, key)
        if value.is_zero() or value.basis != out:
            report.fail(chain=list(key), expected=out, got=str(value))
        elif value.coefficient != 1:
            report.notes.setdefault('signs', {})[out] = int(value.coefficient)
    return report
