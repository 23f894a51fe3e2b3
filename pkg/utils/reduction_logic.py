# utils/reduction_logic.py - Reduction of Candidate Sets to Hilbert Bases
import logging

from models.cone import GradedValue
from models.errors import UnsortedInputError

logger = logging.getLogger(__name__)


def graded_value(x, forms):
    """GradedValue of x with respect to `forms` (SupportForm objects or coefficient tuples)"""
    sigma = []
    for form in forms:
        coeffs = getattr(form, 'coeffs', form)
        sigma.append(sum(a * b for a, b in zip(coeffs, x)))
    return GradedValue.from_sigma(x, sigma)


def as_value(item):
    """GradedValue behind a Candidate (or the value itself)"""
    return getattr(item, 'value', item)


def reduces(y, x):
    """True iff y reduces x, i.e. x != y and x - y lies in the monoid"""
    if x.vector == y.vector:
        return False
    return all(a >= b for a, b in zip(x.sigma_values, y.sigma_values))


def reduce_to_hilbert_basis(candidates):
    """Extract the Hilbert basis from candidates sorted by ascending total degree.

    The candidates must contain at most one element per residue class modulo
    units. Successful reducers move to the head of the list.
    """
    values = []
    for item in candidates:
        value = as_value(item)
        if value.tdeg == 0:
            logger.debug(f'Unit {value.vector} dropped before reduction')
            continue
        if values and value.tdeg < values[-1].tdeg:
            raise UnsortedInputError(f'total degree {value.tdeg} of {value.vector} follows {values[-1].tdeg}')
        values.append(value)
    if not values:
        return []

    min_deg = values[0].tdeg
    basis = [v for v in values if v.tdeg == min_deg]
    reordered = 0
    for x in values[len(basis):]:
        for j, y in enumerate(basis):
            if 2 * y.tdeg > x.tdeg:
                basis.append(x)
                break
            if reduces(y, x):
                if j:
                    basis.insert(0, basis.pop(j))
                    reordered += 1
                break
        else:
            basis.append(x)
    logger.debug(f'Reduction: {len(values)} candidates -> {len(basis)} irreducible ({reordered} reorders)')
    return basis


def auto_reduce(items, forms=None):
    """Maximal subset without units in which no element reduces another.

    With `forms` the standard map is recomputed for these forms; otherwise the
    cached values are used. Lower total degree wins, ties go to the
    lexicographically smaller vector.
    """
    keyed = []
    for item in items:
        value = graded_value(as_value(item).vector, forms) if forms is not None else as_value(item)
        if value.tdeg == 0 and not any(value.sigma_values):
            continue
        keyed.append((value, item))
    keyed.sort(key=lambda pair: pair[0].sort_key())

    kept = []
    for value, item in keyed:
        if not any(reduces(y, value) for y, _ in kept):
            kept.append((value, item))
    return [item for _, item in kept]
