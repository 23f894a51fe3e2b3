# tests/oracles.py - Brute-Force Oracles for the Test Suite
from itertools import combinations, product

from utils.lattice_helpers import dot, integer_kernel_basis, primitive_part, rank


def magic_square_equations(n):
    """Difference equations of n x n magic squares (rows, columns, both diagonals equal row 0)"""
    def cell(i, j):
        return i * n + j

    def row_minus_first(indices):
        eq = [0] * (n * n)
        for k in indices:
            eq[k] += 1
        for j in range(n):
            eq[cell(0, j)] -= 1
        return tuple(eq)

    equations = [row_minus_first([cell(i, j) for j in range(n)]) for i in range(1, n)]
    equations += [row_minus_first([cell(i, j) for i in range(n)]) for j in range(n)]
    equations.append(row_minus_first([cell(i, i) for i in range(n)]))
    equations.append(row_minus_first([cell(i, n - 1 - i) for i in range(n)]))
    return equations


def facet_forms_brute(generators, dim):
    """Primitive facet forms of a full-dimensional cone by trying all (d-1)-subsets"""
    forms = set()
    for subset in combinations(generators, dim - 1):
        if rank(list(subset), dim) < dim - 1:
            continue
        normal = primitive_part(integer_kernel_basis(list(subset), dim)[0])
        values = [dot(normal, g) for g in generators]
        if all(v >= 0 for v in values):
            forms.add(normal)
        elif all(v <= 0 for v in values):
            forms.add(tuple(-a for a in normal))
    return sorted(forms)


def cone_points(forms, bound, dim):
    """Nonzero lattice points of {x : forms >= 0} in the box [-bound, bound]^dim"""
    points = []
    for x in product(range(-bound, bound + 1), repeat=dim):
        if any(x) and all(dot(f, x) >= 0 for f in forms):
            points.append(x)
    return points


def brute_hilbert_basis(forms, bound, dim):
    """Irreducible points of a cone inside the nonnegative orthant.

    `bound` must exceed the entries of every basis element.
    """
    points = cone_points(forms, bound, dim)
    basis = []
    for x in points:
        reducible = any(y != x and all(dot(f, x) >= dot(f, y) for f in forms) for y in points)
        if not reducible:
            basis.append(x)
    return basis


def count_degree(forms, grading, k, bound, dim):
    """Number of cone points of degree k (0 included when k == 0)"""
    if k == 0:
        return 1
    return sum(1 for x in cone_points(forms, bound, dim) if dot(grading, x) == k)


def hilbert_box(generators):
    """Per-coordinate bounds for the Hilbert basis of a cone with nonnegative generators.

    Every basis element lies in the parallelotope of some d generators, so
    coordinate j stays below the sum of the d largest entries in column j.
    """
    dim = len(generators[0])
    return [sum(sorted((g[j] for g in generators), reverse=True)[:dim]) for j in range(dim)]


def box_size(bounds):
    size = 1
    for b in bounds:
        size *= b + 1
    return size


def orthant_hilbert_basis(forms, bounds):
    """Hilbert basis of a pointed full-dimensional cone inside the box prod [0, bounds[j]].

    Points are visited by ascending total degree, so a reducible point is
    always reduced by an irreducible one found before it.
    """
    points = []
    for x in product(*(range(b + 1) for b in bounds)):
        if not any(x):
            continue
        sigma = tuple(dot(f, x) for f in forms)
        if min(sigma) >= 0:
            points.append((sum(sigma), x, sigma))
    points.sort()
    basis = []
    for _, x, sigma in points:
        if not any(all(a >= b for a, b in zip(sigma, s)) for _, s in basis):
            basis.append((x, sigma))
    return sorted(x for x, _ in basis)


def random_nonnegative_cone(rng, dim, count, top):
    """Full-dimensional cone over `count` generators with entries in [0, top]"""
    while True:
        gens = sorted({tuple(rng.randint(0, top) for _ in range(dim)) for _ in range(count)})
        if rank(gens, dim) == dim:
            return gens


def random_lattice_polytope(rng, dim, count, side=3):
    """Cone over lattice points of [0, side]^(dim-1) at height 1, full-dimensional"""
    while True:
        points = sorted({tuple(rng.randint(0, side) for _ in range(dim - 1)) + (1,) for _ in range(count)})
        if rank(points, dim) == dim:
            return points


def count_dilated(forms, k, dim, side=3):
    """Cone points at height k over the box [0, k * side]^(dim-1)"""
    return sum(1 for p in product(range(k * side + 1), repeat=dim - 1)
               if all(dot(f, p + (k,)) >= 0 for f in forms))


def is_shelling(index_sets):
    """True iff the simplices, in this order, form a shelling.

    Cell i meets every earlier cell j inside a facet of i shared with an
    earlier cell: some vertex v of i - j has i - {v} in an earlier cell.
    """
    cells = [frozenset(c) for c in index_sets]
    for i, cell in enumerate(cells):
        earlier = cells[:i]
        W = {v for v in cell if any(cell - {v} <= other for other in earlier)}
        for other in earlier:
            if not (cell - other) & W:
                return False
    return True
