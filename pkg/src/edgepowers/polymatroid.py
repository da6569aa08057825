"""Exchange-property checks for discrete polymatroid base families."""

from __future__ import annotations

from typing import NamedTuple

from .bounded_powers import GeneratorSet, Vector
from .errors import InputError


class ExchangeViolation(NamedTuple):
    u: Vector
    v: Vector
    i: int


def check_exchange(bases: GeneratorSet) -> ExchangeViolation | None:
    """Return None if ``bases`` satisfies the exchange property.

    The property: for all ``u, v`` and every ``i`` with ``u[i] > v[i]`` there
    is ``j`` with ``u[j] < v[j]`` and ``u - e_i + e_j`` in the family.  On
    failure the first offending ``(u, v, i)`` is returned, scanning ``u`` and
    ``v`` in monomial lex order (``x_1 > x_2 > ...``, so larger exponent
    vectors come first) and ``i`` upwards.
    """
    members = bases.members[::-1]
    n = bases.n
    for u in members:
        for v in members:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in bases:
                            ok = True
                            break
                if not ok:
                    return ExchangeViolation(u, v, i)
    return None


def dual_matroidal(bases: GeneratorSet) -> GeneratorSet:
    """Complements of squarefree bases: ``b -> (1, ..., 1) - b``."""
    if any(x not in (0, 1) for b in bases for x in b):
        raise InputError("dual_matroidal needs squarefree (0/1) bases")
    n = bases.n
    return GeneratorSet(tuple(tuple(1 - x for x in b) for b in bases), n - bases.degree)
