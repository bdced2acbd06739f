"""The Taylor complex on r generators: bitmask faces, multidegrees, incidences.

A face is a subset of {0..r-1} stored as an int bitmask; bit k corresponds to
generator k, so the canonical face order (characteristic vector read with the
first generator least significant) is plain integer order.
"""
from __future__ import annotations

from typing import Iterable

from .monomials import Monomial, MonomialIdeal, lcm, one

PRECOMPUTE_CAP = 20


class FaceError(ValueError):
    """A face index lies outside the generator range."""


class IncidenceError(ValueError):
    """The two faces are not a codimension-1 inclusion pair."""


def mask_of(sigma: int | Iterable[int], r: int | None = None) -> int:
    """Normalize a face given as a bitmask or an iterable of 0-based indices."""
    if isinstance(sigma, int):
        return sigma
    mask = 0
    for i in sigma:
        if i < 0 or (r is not None and i >= r):
            raise FaceError(f"generator index {i} out of range")
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def face_dim(mask: int) -> int:
    return mask.bit_count() - 1


def face_multidegree(I: MonomialIdeal, sigma: int | Iterable[int]) -> Monomial:
    """lcm of the generators indexed by sigma; the empty face has degree 1."""
    mask = mask_of(sigma, I.r)
    if mask >> I.r:
        raise FaceError(f"face {bin(mask)} exceeds {I.r} generators")
    deg = one(I.nvars)
    for i in indices_of(mask):
        deg = lcm(deg, I.generators[i])
    return deg


def incidence(sigma: int | Iterable[int], tau: int | Iterable[int]) -> int:
    """Boundary sign [sigma : tau] for tau = sigma minus one element.

    The sign is (-1)^k where the removed index is the (k+1)-th smallest
    member of sigma.  Any consistent convention works; this one is pinned by
    the d*d = 0 property test.
    """
    s, t = mask_of(sigma), mask_of(tau)
    removed = s & ~t
    if (t & ~s) or removed.bit_count() != 1:
        raise IncidenceError(f"{bin(s)} / {bin(t)} is not a codimension-1 pair")
    below = s & (removed - 1)
    return -1 if below.bit_count() % 2 else 1


def edge_targets(sigma: int | Iterable[int], r: int) -> list[int]:
    """All supersets of sigma with exactly one more element, in increasing j."""
    mask = mask_of(sigma, r)
    return [mask | (1 << j) for j in range(r) if not mask & (1 << j)]


def facets(mask: int) -> list[tuple[int, int]]:
    """(facet, sign) pairs for the simplicial boundary of a face."""
    out = []
    for pos, i in enumerate(indices_of(mask)):
        out.append((mask & ~(1 << i), -1 if pos % 2 else 1))
    return out


class TaylorComplex:
    """Multidegree cache over all 2^r faces of the full simplex.

    Degrees are stored fully precomputed for r <= PRECOMPUTE_CAP and memoized
    lazily above that.  Read-only after construction.
    """

    def __init__(self, I: MonomialIdeal, precompute_cap: int = PRECOMPUTE_CAP):
        self.ideal = I
        self.r = I.r
        self._gen_exps = [g.exponents for g in I.generators]
        self._nvars = I.nvars
        if I.r <= precompute_cap:
            self._degrees: list[tuple[int, ...]] | None = self._precompute()
            self._cache: dict[int, tuple[int, ...]] = {}
        else:
            self._degrees = None
            self._cache = {0: (0,) * self._nvars}

    def _precompute(self) -> list[tuple[int, ...]]:
        n = self._nvars
        degs = [(0,) * n] * (1 << self.r)
        for mask in range(1, 1 << self.r):
            low = mask & (mask - 1)
            i = (mask & -mask).bit_length() - 1
            prev = degs[low]
            gen = self._gen_exps[i]
            degs[mask] = tuple(max(a, b) for a, b in zip(prev, gen))
        return degs

    def exponents(self, mask: int) -> tuple[int, ...]:
        if self._degrees is not None:
            return self._degrees[mask]
        hit = self._cache.get(mask)
        if hit is None:
            low = mask & (mask - 1)
            i = (mask & -mask).bit_length() - 1
            prev = self.exponents(low)
            hit = tuple(max(a, b) for a, b in zip(prev, self._gen_exps[i]))
            self._cache[mask] = hit
        return hit

    def multidegree(self, mask: int) -> Monomial:
        return Monomial(self.exponents(mask))

    def total_degree(self, mask: int) -> int:
        return sum(self.exponents(mask))

    def faces(self) -> range:
        return range(1 << self.r)
