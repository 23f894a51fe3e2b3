# utils/cone_helpers.py - Cone Construction, Standard Map and Extreme Rays
import logging

from models.cone import ConeState, SupportForm
from models.errors import DimMismatchError
from models.lattice import AMBIENT_LATTICE
from utils.fourier_motzkin import dual_cone
from utils.lattice_helpers import integer_kernel_basis, primitive_part, rank, to_full_dimensional
from utils.reduction_logic import graded_value

logger = logging.getLogger(__name__)


def standard_map(x, cone):
    """sigma(x) and tdeg(x) for a working-coordinate vector x"""
    if len(x) != cone.dim:
        raise DimMismatchError(f'vector of length {len(x)} for a cone of dimension {cone.dim}')
    return graded_value(tuple(x), cone.support_forms)


def forms_are_pointed(forms, dim):
    """A cone is pointed iff its support forms have full rank"""
    coeffs = [getattr(f, 'coeffs', f) for f in forms]
    return rank(coeffs, dim) == dim


def is_pointed(cone):
    return forms_are_pointed(cone.support_forms, cone.dim)


def extreme_ray_flags(generators, forms, dim):
    """Flag generators on which the vanishing support forms have rank d-1"""
    flags = []
    for g in generators:
        vanishing = [f.coeffs for f in forms if f.evaluate(g) == 0]
        flags.append(any(g) and rank(vanishing, dim) == dim - 1)
    return tuple(flags)


def extreme_ray_vectors(cone):
    """Distinct primitive extreme rays in working coordinates, in generator order"""
    rays = []
    seen = set()
    for g, flag in zip(cone.generators, cone.extreme_ray_flags):
        if flag:
            ray = primitive_part(g)
            if ray not in seen:
                seen.add(ray)
                rays.append(ray)
    return rays


def extreme_rays(cone):
    """Extreme rays (primitive in the working lattice) in ambient coordinates, sorted"""
    ambient = {cone.embedding.to_ambient(r) for r in extreme_ray_vectors(cone)}
    return sorted(ambient)


def create_cone_state(generators, lattice_mode=AMBIENT_LATTICE, threshold=None, listeners=None):
    """Transform to full-dimensional coordinates and compute the support forms.

    Zero and duplicate generators are dropped; non-primitive generators are
    kept as given.
    """
    unique = []
    seen = set()
    for g in generators:
        g = tuple(g)
        if any(g) and g not in seen:
            seen.add(g)
            unique.append(g)
    embedding, working = to_full_dimensional(unique or [tuple(g) for g in generators], lattice_mode)
    dim = embedding.rank
    forms = tuple(dual_cone(working, threshold=threshold, listeners=listeners))
    pointed = forms_are_pointed(forms, dim)
    flags = extreme_ray_flags(working, forms, dim) if pointed else tuple(False for _ in working)
    logger.info(f'Cone of dimension {dim} (ambient {embedding.ambient_dim}): {len(working)} generators, '
                f'{len(forms)} support forms, pointed={pointed}')
    return ConeState(dim=dim, generators=tuple(working), support_forms=forms, embedding=embedding,
                     pointed=pointed, extreme_ray_flags=flags)


def cone_from_forms(dim, forms, generators, embedding, pointed=None):
    """ConeState for known support forms (no hull computation)"""
    forms = tuple(f if isinstance(f, SupportForm) else SupportForm(tuple(f)) for f in forms)
    if pointed is None:
        pointed = forms_are_pointed(forms, dim)
    generators = tuple(tuple(g) for g in generators)
    flags = extreme_ray_flags(generators, forms, dim) if pointed else tuple(False for _ in generators)
    return ConeState(dim=dim, generators=generators, support_forms=forms, embedding=embedding,
                     pointed=pointed, extreme_ray_flags=flags)


def ambient_support_forms(cone):
    """Primitive support forms in ambient coordinates, sorted"""
    forms = {primitive_part(cone.embedding.form_to_ambient(f.coeffs)) for f in cone.support_forms}
    return [SupportForm(f) for f in sorted(forms)]


def span_equations(embedding):
    """Integral forms cutting out the linear span of the working lattice"""
    if embedding.rank == embedding.ambient_dim:
        return []
    return sorted(integer_kernel_basis(embedding.backward, embedding.ambient_dim))
