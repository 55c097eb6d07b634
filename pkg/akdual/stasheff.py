"""A-infinity associativity relations on basis chains.

For a composable chain a_1, ..., a_d (a_1 applied first) the relation is

    sum over i, j of (-1)^{star_i} mu^{d-j+1}(a_d, ..., a_{i+j+1}, mu^j(a_{i+j}, ..., a_{i+1}), a_i, ..., a_1) = 0

with star_i = sum_{l <= i} (|a_l| - 1).
"""

from fractions import Fraction

from akdual.category import mu_eval
from akdual.checks import CheckReport


def stasheff_terms(degrees):
    """(i, j, sign) for every term of the relation on a chain with the given degrees.

    Args:
        degrees (list): |a_1|, ..., |a_d| in application order.

    Returns:
        list of (i, j, sign): the inner mu^j eats a_{i+1}..a_{i+j}; the outer map is mu^{d-j+1}.
    """
    d = len(degrees)
    terms = []
    for j in range(1, d + 1):
        for i in range(0, d - j + 1):
            star = sum(deg - 1 for deg in degrees[:i])
            terms.append((i, j, -1 if star % 2 else 1))
    return terms


def relation_sum(cat, chain):
    """The signed sum of the relation on `chain` (labels in application order a_1..a_d),
    as a dict output label -> coefficient with zero coefficients dropped.
    """
    args = [cat.morphism(x) for x in chain]
    total = {}
    for i, j, sign in stasheff_terms([a.degree for a in args]):
        inner = mu_eval(cat, tuple(reversed(chain[i:i + j])))
        if inner.is_zero():
            continue
        outer_chain = list(chain[:i]) + [inner.basis] + list(chain[i + j:])
        outer = mu_eval(cat, tuple(reversed(outer_chain)))
        if outer.is_zero():
            continue
        total[outer.basis] = total.get(outer.basis, Fraction(0)) + sign * inner.coefficient * outer.coefficient
    return {label: c for label, c in total.items() if c != 0}


def composable_chains(cat, max_chain):
    """Composable basis chains (application order) of length 1..max_chain, identities included."""
    outgoing = {}
    for f in cat.morphisms:
        outgoing.setdefault(f.src, []).append(f)

    def extend(chain):
        yield chain
        if len(chain) < max_chain:
            for f in outgoing.get(cat.morphism(chain[-1]).dst, []):
                yield from extend(chain + [f.label])

    for f in cat.morphisms:
        yield from extend([f.label])


def verify_ainfty(cat, max_chain):
    """Checks the A-infinity relation on every composable chain up to length max_chain.

    Chains whose relation has no basis morphism of the right degree to land in are counted
    but skip evaluation. Failures list the chain as mu arguments (a_d, ..., a_1).
    """
    if max_chain < 1:
        raise ValueError("max_chain must be >= 1")
    report = CheckReport("ainfty")
    degrees_between = {}
    for f in cat.morphisms:
        degrees_between.setdefault((f.src, f.dst), set()).add(f.degree)

    failures = []
    for chain in composable_chains(cat, max_chain):
        report.checked += 1
        args = [cat.morphism(x) for x in chain]
        target = sum(a.degree for a in args) + 3 - len(args)
        if target not in degrees_between.get((args[0].src, args[-1].dst), ()):
            continue
        total = relation_sum(cat, chain)
        if total:
            failures.append((list(reversed(chain)), total))

    order = {f.label: i for i, f in enumerate(cat.morphisms)}
    failures.sort(key=lambda e: (len(e[0]), [order[x] for x in e[0]]))
    for chain, total in failures:
        report.fail(chain=chain, terms={label: int(c) if c.denominator == 1 else str(c)
                                        for label, c in sorted(total.items())})
    return report
