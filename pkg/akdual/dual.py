"""The A-infinity Koszul dual B_{S,T} of a relation pattern and its comparisons.

Objects are B(n) < B(n-1) < ... < B(0). For every p and 1 <= i <= l_p there is one basis
morphism eta(p, a_i^(p)): B(p) -> B(a_i^(p)) of degree i; eta(p,p) is the identity of B(p).
"""

from enum import Enum

from akdual.category import GradedBasisCategory, Morphism, categories_isomorphic, mu_eval
from akdual.checks import CheckReport
from akdual.generator.enumerate import patterns_up_to
from akdual.pattern import PatternError, compose_paths, path_survives, quadratic_complement
from akdual.sequences import sequence_table
from akdual.stasheff import verify_ainfty


class AdjudicationError(RuntimeError):
    pass


class SignConvention(Enum):
    LAST_ARG = "last-arg"
    FIRST_ARG = "first-arg"

    def sign(self, first_degree, last_degree, out_degree):
        """(-1)^{(|a|+1)|out|} with a the last-applied (LAST_ARG) or first-applied argument."""
        deg = last_degree if self is SignConvention.LAST_ARG else first_degree
        return -1 if ((deg + 1) * out_degree) % 2 else 1


def obj(p):
    return "B(%d)" % p


def eta(p, q):
    return "eta(%d,%d)" % (p, q)


def _a_obj(i):
    return "A(%d)" % i


def xi(i, j):
    return "xi(%d,%d)" % (i, j)


def add_units(morphisms, table):
    """Strictly unital mu^2 values: mu^2(a, 1) = a and mu^2(1, a) = (-1)^{|a|} a."""
    identities = {f.src: f for f in morphisms if f.identity}
    for f in morphisms:
        if f.identity:
            table[(f.label, f.label)] = (1, f.label)
            continue
        table[(f.label, identities[f.src].label)] = (1, f.label)
        table[(identities[f.dst].label, f.label)] = (-1 if f.degree % 2 else 1, f.label)


def build_dual(pattern, conv=SignConvention.LAST_ARG):
    """B_{S,T} with mu^d (d >= 2) nonzero exactly on chains eta(j_0,j_1), ..., eta(j_{d-1},j_d)
    whose composite hom(B(j_0), B(j_d)) is nonzero in degree sum + 2 - d.
    """
    plain = sequence_table(pattern).plain
    n = pattern.n
    degree = {}
    morphisms = []
    for p in range(n, -1, -1):
        for i, q in enumerate(plain[p].values):
            degree[(p, q)] = i
            morphisms.append(Morphism(eta(p, q), obj(p), obj(q), i, identity=(i == 0)))

    below = {p: [q for q in plain[p].values[1:]] for p in range(n + 1)}
    table = {}

    def extend(chain, total):
        # chain j_0 > j_1 > ... as vertices, total = sum of degrees so far
        for nxt in below[chain[-1]]:
            longer = chain + [nxt]
            deg_sum = total + degree[(chain[-1], nxt)]
            d = len(longer) - 1
            out = degree.get((longer[0], nxt))
            if d >= 2 and out is not None and out == deg_sum + 2 - d:
                first = degree[(longer[0], longer[1])]
                last = degree[(longer[-2], nxt)]
                key = tuple(eta(a, b) for a, b in reversed(list(zip(longer, longer[1:]))))
                table[key] = (conv.sign(first, last, out), eta(longer[0], nxt))
            extend(longer, deg_sum)

    for p in range(n, -1, -1):
        extend([p], 0)
    add_units(morphisms, table)
    return GradedBasisCategory([obj(p) for p in range(n, -1, -1)], morphisms, table,
                               name="B %s %s" % (pattern, conv.value))


def check_unitality(cat):
    report = CheckReport("unitality")
    for f in cat.non_identity():
        report.checked += 1
        right = mu_eval(cat, (f.label, cat.identity(f.src).label))
        left = mu_eval(cat, (cat.identity(f.dst).label, f.label))
        expected_left = -1 if f.degree % 2 else 1
        if (right.basis, right.coefficient) != (f.label, 1):
            report.fail(morphism=f.label, side="mu2(a,1)", value=str(right))
        if (left.basis, left.coefficient) != (f.label, expected_left):
            report.fail(morphism=f.label, side="mu2(1,a)", value=str(left))
    return report


def check_dual_structure(pattern, cat):
    """Hom spaces of dimension <= 1, mu^1 = 0, and deg eta(p, a_j^(p)) = j."""
    report = CheckReport("dual_structure")
    plain = sequence_table(pattern).plain
    for p in pattern.vertices:
        for q in pattern.vertices:
            report.checked += 1
            homs = cat.hom(obj(p), obj(q))
            index = plain[p].index_of(q)
            if len(homs) > 1:
                report.fail(source=p, target=q, reason="hom dimension %d" % len(homs))
            elif (index is None) != (len(homs) == 0):
                report.fail(source=p, target=q, reason="hom does not follow the sequence of p")
            elif homs and homs[0].degree != index:
                report.fail(source=p, target=q, reason="degree %d != index %d" % (homs[0].degree, index))
    for key in cat.mu_table:
        if len(key) == 1:
            report.fail(mu1=list(key))
    return report


def corrupt_mu(cat):
    """Copy of `cat` with mu^2(a, 1_src) negated for its first non-identity morphism a."""
    table = dict(cat.mu_table)
    targets = cat.non_identity()
    if targets:
        f = targets[0]
        key = (f.label, cat.identity(f.src).label)
        c, out = table[key]
        table[key] = (-c, out)
    return GradedBasisCategory(cat.objects, cat.morphisms, table, name=cat.name + " corrupted")


def quadratic_side(pattern, conv=SignConvention.LAST_ARG):
    """A((R_{S^c,T^c})^op): objects A(n) < ... < A(0), one morphism A(j) -> A(i) of degree j - i
    per surviving path (i, j) of the complement pattern, mu^2 = composition of paths.
    """
    comp = quadratic_complement(pattern)
    n = pattern.n
    morphisms = []
    for j in range(n, -1, -1):
        for i in range(j, -1, -1):
            if path_survives(comp, i, j):
                morphisms.append(Morphism(xi(i, j), _a_obj(j), _a_obj(i), j - i, identity=(i == j)))
    paths = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1) if path_survives(comp, i, j)]
    table = {}
    for (i, j) in paths:
        for (j2, k) in paths:
            if j2 != j:
                continue
            product = compose_paths(comp, (i, j), (j, k))
            if product is not None:
                # xi(j,k): A(k) -> A(j) first, then xi(i,j): A(j) -> A(i)
                table[(xi(i, j), xi(j, k))] = (conv.sign(k - j, j - i, k - i), xi(*product))
    add_units(morphisms, table)
    return GradedBasisCategory([_a_obj(i) for i in range(n, -1, -1)], morphisms, table,
                               name="A %s %s" % (comp, conv.value))


def compare_quadratic(pattern, conv=SignConvention.LAST_ARG):
    """B_{S,T} against A((R_{S^c,T^c})^op), plus the exchange of products and relations."""
    if not pattern.is_quadratic():
        raise PatternError("compare_quadratic needs quadratic relations, got %s" % (pattern,))
    report = CheckReport("quadratic")
    b = build_dual(pattern, conv)
    a = quadratic_side(pattern, conv)
    report.checked += 1
    if not categories_isomorphic(b, a):
        report.fail(reason="B is not isomorphic to the complement side")
    for j in range(pattern.n - 1):
        report.checked += 1
        product = path_survives(pattern, j, j + 2)
        dual_product = not mu_eval(b, (eta(j + 1, j), eta(j + 2, j + 1))).is_zero()
        if product == dual_product:
            report.fail(vertex=j, algebra_product=product, dual_product=dual_product)
    return report


def adjudication_verdict(failing):
    """The default convention given {convention value: failing patterns}.

    LAST_ARG wins ties; both conventions failing raises AdjudicationError.
    """
    if not failing[SignConvention.LAST_ARG.value]:
        return SignConvention.LAST_ARG
    if not failing[SignConvention.FIRST_ARG.value]:
        return SignConvention.FIRST_ARG
    raise AdjudicationError("both sign conventions fail the A-infinity relations: %s" % failing)


def adjudicate_sign(n_max):
    """Runs verify_ainfty with max_chain = n + 1 on every pattern with n <= n_max under both
    conventions.

    Returns:
        (SignConvention, dict): the default convention and, per convention value, the
        failing patterns.
    """
    if n_max < 3:
        raise ValueError("adjudicate_sign needs n_max >= 3, got %d" % n_max)
    failing = {c.value: [] for c in SignConvention}
    for pattern in patterns_up_to(n_max):
        for conv in SignConvention:
            report = verify_ainfty(build_dual(pattern, conv), pattern.n + 1)
            if not report.passed:
                failing[conv.value].append(str(pattern))
    return adjudication_verdict(failing), failing
