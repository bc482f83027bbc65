"""Decision procedure for the defining identity, via exact multilinearization.

The identity under test is

    beta*((y x^2) x - ((y x) x) x) + gamma*(y x^3 - ((y x) x) x) = 0

for all x, y, with (beta, gamma) != (0, 0).  It is homogeneous of degree 3 in
x and degree 1 in y, so over a field with more than 3 elements and
characteristic not in {2, 3} it holds for all elements iff its full
polarization vanishes on all basis tuples.  That finite sweep is the decision
authority; sampling random element pairs is only a cross-check.

Trees are nested pairs whose leaves name variables; `linearize_identity` turns
any such homogeneous identity (degree <= 3 per variable) into a multilinear
form by summing over all assignments of a variable's slots to its leaf
positions.
"""

from dataclasses import dataclass
from itertools import permutations

from .algebra import Algebra, Element, GajParams
from .fields import Field, Scalar
from .linalg import Matrix, Subspace, kernel, unit_vector, vec_add, vec_scale, zero_vector

# Trees for the three degree-4 words, with slot leaves:
# slots 0,1,2 hold copies of x, slot 3 holds y.
_T_OUTER = ((3, (0, 1)), 2)      # (y x^2) x
_T_NESTED = (((3, 0), 1), 2)     # ((y x) x) x
_T_CUBE = (3, ((0, 1), 2))       # y x^3  with x^3 = (x x) x

_PERMS3 = tuple(permutations((0, 1, 2)))


def _eval_tree(algebra: Algebra, tree, slots):
    if isinstance(tree, int):
        return slots[tree]
    left = _eval_tree(algebra, tree[0], slots)
    right = _eval_tree(algebra, tree[1], slots)
    return algebra.multiply_coords(left, right)


def _polarized_parts(algebra: Algebra, x0, x1, x2, y):
    """Coefficient vectors of beta and gamma in the polarized identity.

    Returns (B, G) with the polarized left side equal to beta*B + gamma*G,
    where the x-slots are filled with x0, x1, x2 in all 6 orders.
    """
    n = algebra.dim
    beta_acc = [algebra.field.zero] * n
    gamma_acc = [algebra.field.zero] * n
    xs = (x0, x1, x2)
    for p in _PERMS3:
        slots = (xs[p[0]], xs[p[1]], xs[p[2]], y)
        t_outer = _eval_tree(algebra, _T_OUTER, slots)
        t_nested = _eval_tree(algebra, _T_NESTED, slots)
        t_cube = _eval_tree(algebra, _T_CUBE, slots)
        for k in range(n):
            beta_acc[k] = beta_acc[k] + t_outer[k] - t_nested[k]
            gamma_acc[k] = gamma_acc[k] + t_cube[k] - t_nested[k]
    return tuple(beta_acc), tuple(gamma_acc)


def _basis_quadruples(n: int):
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                for l in range(n):
                    yield i, j, k, l


def gaj_defect(x: Element, y: Element, params: GajParams) -> Element:
    """Left side of the defining identity at the pair (x, y); zero means it holds there."""
    if x.algebra != y.algebra:
        raise ValueError("elements of different algebras")
    alg = x.algebra
    slots = (x.coords, x.coords, x.coords, y.coords)
    t_outer = _eval_tree(alg, _T_OUTER, slots)
    t_nested = _eval_tree(alg, _T_NESTED, slots)
    t_cube = _eval_tree(alg, _T_CUBE, slots)
    b, g = params.beta, params.gamma
    coords = tuple(
        b * (t_outer[k] - t_nested[k]) + g * (t_cube[k] - t_nested[k])
        for k in range(alg.dim)
    )
    return Element(alg, coords)


def check_gaj_identity(algebra: Algebra, params: GajParams) -> bool:
    """Whether the identity holds for ALL pairs of elements.

    Decided by sweeping the full polarization over basis quadruples, with the
    three x-slots restricted to non-decreasing index triples (the polarized
    form is symmetric in them).
    """
    if algebra.field != params.field:
        raise ValueError("parameters and algebra use different fields")
    key = (params.beta, params.gamma)
    cached = algebra._gaj_cache.get(key)
    if cached is not None:
        return cached
    n = algebra.dim
    units = [unit_vector(algebra.field, n, i) for i in range(n)]
    b, g = params.beta, params.gamma
    result = True
    for i, j, k, l in _basis_quadruples(n):
        bp, gp = _polarized_parts(algebra, units[i], units[j], units[k], units[l])
        if any(b * bc + g * gc for bc, gc in zip(bp, gp)):
            result = False
            break
    algebra._gaj_cache[key] = result
    return result


@dataclass(frozen=True)
class ParameterSpace:
    """All (beta, gamma) for which the identity holds, minus the origin.

    `solutions` is a subspace of F^2; by linearity of the identity in the
    parameters it is always one of: the origin only, a line through the
    origin, or all of F^2.  The excluded point (0, 0) is implicit.
    """

    field: Field
    solutions: Subspace

    @property
    def kind(self) -> str:
        return {0: "origin-only", 1: "line", 2: "plane"}[self.solutions.dim]

    def contains(self, beta, gamma) -> bool:
        b = self.field.scalar(beta)
        g = self.field.scalar(gamma)
        if not b and not g:
            return False
        return self.solutions.contains_vector((b, g))


def solve_parameter_space(algebra: Algebra) -> ParameterSpace:
    """Kernel of the linear map (beta, gamma) -> all polarized defect coordinates."""
    n = algebra.dim
    field = algebra.field
    units = [unit_vector(field, n, i) for i in range(n)]
    rows = []
    for i, j, k, l in _basis_quadruples(n):
        bp, gp = _polarized_parts(algebra, units[i], units[j], units[k], units[l])
        for bc, gc in zip(bp, gp):
            if bc or gc:
                rows.append((bc, gc))
    if not rows:
        return ParameterSpace(field, Subspace.full(field, 2))
    return ParameterSpace(field, kernel(Matrix(field, rows)))


def _tree_variables(tree, counts):
    if isinstance(tree, str):
        counts[tree] = counts.get(tree, 0) + 1
        return
    _tree_variables(tree[0], counts)
    _tree_variables(tree[1], counts)


def _substitute(tree, mapping):
    if isinstance(tree, str):
        return mapping[tree]
    return (_substitute(tree[0], mapping), _substitute(tree[1], mapping))


@dataclass(frozen=True)
class MultilinearForm:
    """Full polarization of a homogeneous identity.

    `slots` maps each variable to the slot indices it received; evaluating at
    equal arguments in a variable's slots recovers deg! times that variable's
    contribution (6 for a cubic slot group).  The form is symmetric within
    each slot group by construction.
    """

    arity: int
    slots: tuple[tuple[str, tuple[int, ...]], ...]
    terms: tuple[tuple[Scalar, object], ...]

    def evaluate(self, *elements: Element) -> Element:
        if len(elements) != self.arity:
            raise ValueError(f"form expects {self.arity} arguments")
        alg = elements[0].algebra
        for e in elements:
            if e.algebra != alg:
                raise ValueError("elements of different algebras")
        coords = [e.coords for e in elements]
        acc = zero_vector(alg.field, alg.dim)
        for coeff, slot_trees in self.terms:
            term_acc = zero_vector(alg.field, alg.dim)
            for tree in slot_trees:
                term_acc = vec_add(term_acc, _eval_tree(alg, tree, coords))
            acc = vec_add(acc, vec_scale(coeff, term_acc))
        return Element(alg, acc)


def linearize_identity(
    field: Field, terms, variables=None
) -> MultilinearForm:
    """Polarize a homogeneous identity into a multilinear form.

    `terms` is a sequence of (coefficient, tree) pairs where trees are nested
    2-tuples with string leaves naming variables.  All terms must have the
    same multidegree, and no variable may appear with degree above 3 (the
    characteristic restriction only guarantees soundness up to that degree).
    """
    terms = [(field.scalar(c), t) for c, t in terms]
    if not terms:
        raise ValueError("identity needs at least one term")
    degs = None
    for _, tree in terms:
        counts: dict[str, int] = {}
        _tree_variables(tree, counts)
        if degs is None:
            degs = counts
        elif counts != degs:
            raise ValueError("identity terms are not multihomogeneous")
    for var, d in degs.items():
        if d > 3:
            raise ValueError(f"degree {d} in variable {var!r} unsupported (max 3)")
    if variables is None:
        variables = sorted(degs)
    else:
        variables = list(variables)
        if sorted(variables) != sorted(degs):
            raise ValueError("variable list does not match the identity")
    slot_map = []
    next_slot = 0
    for var in variables:
        idxs = tuple(range(next_slot, next_slot + degs[var]))
        slot_map.append((var, idxs))
        next_slot += degs[var]
    compiled_terms = []
    for coeff, tree in terms:
        assignments = [{}]
        for var, idxs in slot_map:
            new_assignments = []
            for base in assignments:
                for perm in permutations(idxs):
                    upd = dict(base)
                    upd[var] = list(perm)
                    new_assignments.append(upd)
            assignments = new_assignments
        slot_trees = []
        for assignment in assignments:
            position = {var: 0 for var in degs}

            def fill(node):
                if isinstance(node, str):
                    i = position[node]
                    position[node] += 1
                    return assignment[node][i]
                return (fill(node[0]), fill(node[1]))

            slot_trees.append(fill(tree))
        compiled_terms.append((coeff, tuple(slot_trees)))
    return MultilinearForm(
        arity=next_slot,
        slots=tuple(slot_map),
        terms=tuple(compiled_terms),
    )


def gaj_identity_form(params: GajParams) -> MultilinearForm:
    """The defining identity, fully polarized, with x-slots 0..2 and y-slot 3."""
    b, g = params.beta, params.gamma
    terms = [
        (b, (("y", ("x", "x")), "x")),           # (y x^2) x
        (-(b + g), ((("y", "x"), "x"), "x")),    # ((y x) x) x
        (g, ("y", (("x", "x"), "x"))),           # y x^3
    ]
    return linearize_identity(params.field, terms, variables=("x", "y"))
