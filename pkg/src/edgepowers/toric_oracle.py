"""Brute-force Hilbert functions of monomial subalgebras.

The ring generated by a ``GeneratorSet`` is graded by the number of factors,
so ``H(k)`` is the number of distinct sums of ``k`` generators.  For the
normal Cohen-Macaulay domains handled here the h-vector has degree below the
Krull dimension ``d``; ``h_vector`` checks a three-coefficient zero margin past
``d`` and refuses to answer when it fails.  Gorensteinness is read off as
palindromicity of the h-vector.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb, gcd, prod
from typing import Literal, Sequence

import numpy as np

from .bounded_powers import GeneratorSet
from .errors import BudgetExceeded, HilbertSeriesError, InputError

DEFAULT_MAX_ELEMENTS = 10**7
_INT64_LIMIT = 2**62

Method = Literal["oracle", "classification", "both"]


@dataclass(frozen=True)
class HilbertData:
    dim: int
    values: tuple[int, ...]
    hvector: tuple[int, ...]

    @property
    def palindromic(self) -> bool:
        return self.hvector == self.hvector[::-1]


@dataclass(frozen=True)
class GorensteinVerdict:
    """Outcome of a Gorenstein decision.

    ``hilbert`` is the oracle's evidence on the ring itself; ``reduced`` holds
    the oracle evidence for a Veronese-type model when a classification case
    delegates to one.
    """

    gorenstein: bool
    method: Method
    case: str | None = None
    hilbert: HilbertData | None = None
    reduced: HilbertData | None = None


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free elimination on Python ints."""
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                row = [p[col] * x - f * y for x, y in zip(m[r], p)]
                g = gcd(*row)
                m[r] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == len(m):
            break
    return rank


def krull_dim(gens: GeneratorSet) -> int:
    if not len(gens):
        raise InputError("empty generator set")
    base = gens.members[0]
    return exact_rank([[x - y for x, y in zip(b, base)] for b in gens.members[1:]]) + 1


def is_polynomial_ring(gens: GeneratorSet) -> bool:
    return len(gens) == krull_dim(gens)


def _packing(arr: np.ndarray, kmax: int) -> tuple[np.ndarray, list[int]]:
    # drop constant columns: they add k * const to every k-fold sum
    keep = [j for j in range(arr.shape[1]) if arr[:, j].min() != arr[:, j].max()]
    sub = arr[:, keep]
    weights, w = [], 1
    for j in range(sub.shape[1]):
        weights.append(w)
        w *= kmax * int(sub[:, j].max()) + 1
    return sub, weights


def hilbert_function(
    gens: GeneratorSet,
    kmax: int,
    *,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    deadline: float | None = None,
) -> tuple[int, ...]:
    """``H(0), ..., H(kmax)``: sizes of the iterated sumsets of ``gens``.

    Raises BudgetExceeded when a layer would hold more than ``max_elements``
    candidate sums, or when ``time.monotonic()`` passes ``deadline``.
    """
    if not len(gens):
        raise InputError("empty generator set")
    if kmax < 0:
        raise InputError("kmax must be >= 0")
    arr = gens.as_array()
    sub, weights = _packing(arr, max(kmax, 1))
    s = len(gens)
    span = prod(kmax * int(sub[:, j].max()) + 1 for j in range(sub.shape[1])) if sub.shape[1] else 1
    values = [1]
    if span < _INT64_LIMIT:
        codes = sub @ np.array(weights, dtype=np.int64) if weights else np.zeros(s, dtype=np.int64)
        cur = np.zeros(1, dtype=np.int64)
        for _ in range(kmax):
            _check_budget(cur.size * s, max_elements, deadline)
            cur = np.unique((cur[:, None] + codes[None, :]).ravel())
            values.append(int(cur.size))
    else:
        pycodes = [sum(int(x) * w for x, w in zip(row, weights)) for row in sub.tolist()]
        layer = {0}
        for _ in range(kmax):
            _check_budget(len(layer) * s, max_elements, deadline)
            layer = {x + c for x in layer for c in pycodes}
            values.append(len(layer))
    return tuple(values)


def _check_budget(candidates: int, max_elements: int, deadline: float | None) -> None:
    if candidates > max_elements:
        raise BudgetExceeded(f"sumset layer needs {candidates} elements (budget {max_elements})")
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exceeded")


def h_vector(
    gens: GeneratorSet,
    *,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    deadline: float | None = None,
) -> HilbertData:
    d = krull_dim(gens)
    K = d + 3
    H = hilbert_function(gens, K, max_elements=max_elements, deadline=deadline)
    h = [sum((-1) ** i * comb(d, i) * H[j - i] for i in range(min(j, d) + 1)) for j in range(K + 1)]
    if any(h[j] for j in range(d + 1, K + 1)):
        raise HilbertSeriesError(f"Hilbert function not polynomial within margin: h = {h}")
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    if h[0] != 1 or any(x < 0 for x in h):
        raise HilbertSeriesError(f"h-vector {h} is not that of a Cohen-Macaulay domain")
    if any(a > b for a, b in zip(H, H[1:])):
        raise HilbertSeriesError(f"Hilbert function {H} decreases")
    return HilbertData(d, H, tuple(h))


def gorenstein_oracle(
    gens: GeneratorSet,
    *,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    deadline: float | None = None,
) -> GorensteinVerdict:
    data = h_vector(gens, max_elements=max_elements, deadline=deadline)
    return GorensteinVerdict(data.palindromic, "oracle", None, data)
