"""Matching-producing pruning sweeps over the Taylor complex, plus validation.

All sweeps share the same skeleton: for step j = 1..r, scan the faces sigma
with sigma_j = 0 in canonical order and prune the edge sigma -> sigma+e_j when
both endpoints are still unmatched and the step's degree condition holds.
Pruning an edge removes both endpoints from the survivor pool immediately.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .monomials import MonomialIdeal, lcm, monomial_str
from .taylor import TaylorComplex, indices_of


@dataclass(frozen=True)
class TraceStep:
    """One pruned edge: at step `step` (1-based) the edge sigma -> sigma+e_j."""

    step: int
    sigma: int
    j: int  # 0-based direction, step == j + 1 within its sweep
    sweep: int = 1


@dataclass(frozen=True)
class Matching:
    """A set of pruned edges (sigma, j), sigma -> sigma + e_j, with provenance."""

    r: int
    edges: tuple[tuple[int, int], ...]
    trace: tuple[TraceStep, ...]
    kind: str = "pruned"
    sweeps: int = 1  # productive sweeps used (fixpoint algorithms only)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def matched_cells(self) -> frozenset[int]:
        cells: set[int] = set()
        for sigma, j in self.edges:
            cells.add(sigma)
            cells.add(sigma | (1 << j))
        return frozenset(cells)

    def survivors(self) -> frozenset[int]:
        dead = self.matched_cells()
        return frozenset(m for m in range(1 << self.r) if m not in dead)


@dataclass(frozen=True)
class MatchingReport:
    is_matching: bool
    is_homogeneous: bool
    is_acyclic: bool

    @property
    def all_ok(self) -> bool:
        return self.is_matching and self.is_homogeneous and self.is_acyclic


def empty_matching(I: MonomialIdeal) -> Matching:
    return Matching(I.r, (), (), kind="taylor")


def _sweep(
    tc: TaylorComplex,
    alive: set[int],
    eligible: Callable[[int, int], bool] | None,
    condition: Callable[[int, int], bool],
    sweep_no: int,
) -> list[TraceStep]:
    """One full r-step sweep on the surviving faces; mutates `alive`."""
    r = tc.r
    pruned: list[TraceStep] = []
    for j in range(r):
        bit = 1 << j
        for sigma in sorted(alive):
            if sigma & bit or sigma not in alive:
                continue
            tau = sigma | bit
            if tau not in alive:
                continue
            if eligible is not None and not eligible(sigma, j):
                continue
            if condition(sigma, tau):
                alive.discard(sigma)
                alive.discard(tau)
                pruned.append(TraceStep(j + 1, sigma, j, sweep_no))
    return pruned


def prune_with(
    I: MonomialIdeal,
    eligible: Callable[[int, int], bool] | None = None,
    kind: str = "custom",
) -> Matching:
    """Single pruning sweep with an optional per-edge eligibility predicate.

    `eligible(sigma, j)` filters candidate edges before the homogeneity test;
    passing None gives the plain pruned matching.
    """
    tc = TaylorComplex(I)
    alive = set(tc.faces())
    same_degree = lambda s, t: tc.exponents(s) == tc.exponents(t)
    steps = _sweep(tc, alive, eligible, same_degree, 1)
    return Matching(I.r, tuple((t.sigma, t.j) for t in steps), tuple(steps), kind)


def prune_taylor(I: MonomialIdeal) -> Matching:
    """The pruned matching: step j prunes every surviving homogeneous edge
    sigma -> sigma+e_j."""
    return prune_with(I, None, kind="pruned")


def prune_lyubeznik(I: MonomialIdeal) -> Matching:
    """Pruning whose survivors form the Lyubeznik subcomplex.

    The edge sigma -> sigma+e_j is eligible at step j when generator j
    divides the lcm of the members of sigma larger than j.  On faces
    supported entirely above j this is the plain homogeneity condition, and
    it is what pairs every face with an unrooted tail against its partner.
    """
    tc = TaylorComplex(I)
    gens = [g.exponents for g in I.generators]

    def eligible(sigma: int, j: int) -> bool:
        high = sigma & ~((1 << (j + 1)) - 1)
        tail = tc.exponents(high)
        return all(a <= b for a, b in zip(gens[j], tail))

    return prune_with(I, eligible, kind="lyubeznik")


def lyubeznik_direct(I: MonomialIdeal) -> frozenset[int]:
    """Independent construction of the Lyubeznik subcomplex.

    A face {i_0 < ... < i_s} belongs iff for every tail {i_t, ..., i_s} and
    every j < i_t, generator j does not divide the tail's lcm.  Used only as
    an oracle for prune_lyubeznik.
    """
    tc = TaylorComplex(I)
    gens = I.generators
    out = set()
    for mask in tc.faces():
        idx = indices_of(mask)
        ok = True
        for t in range(len(idx)):
            tail = 0
            for i in idx[t:]:
                tail |= 1 << i
            tail_deg = tc.multidegree(tail)
            for j in range(idx[t]):
                if all(a <= b for a, b in zip(gens[j].exponents, tail_deg.exponents)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(mask)
    return frozenset(out)


def nu_prune(I: MonomialIdeal) -> Matching:
    """Pruned matching followed by a total-degree-shift pass on the survivors.

    The second pass prunes sigma -> sigma+e_j when the total degrees differ by
    exactly one; it is a degree-shift matching, so the combined result is an
    approximation only and is excluded from exactness claims.  The empty face
    never participates as a lower endpoint.
    """
    tc = TaylorComplex(I)
    alive = set(tc.faces())
    first = _sweep(
        tc, alive, None, lambda s, t: tc.exponents(s) == tc.exponents(t), 1
    )
    shift = lambda s, t: s != 0 and tc.total_degree(s) == tc.total_degree(t) - 1
    second = _sweep(tc, alive, None, shift, 2)
    steps = tuple(first + second)
    return Matching(
        I.r, tuple((t.sigma, t.j) for t in steps), steps, kind="nu-approximation"
    )


def _simplicial_candidates(tc: TaylorComplex, alive: set[int]) -> list[TraceStep]:
    """Virtual plain-pruning sweep on `alive` (not mutated)."""
    pool = set(alive)
    return _sweep(tc, pool, None, lambda s, t: tc.exponents(s) == tc.exponents(t), 1)


def _strict_superfaces(mask: int, r: int) -> Iterable[int]:
    universe = (1 << r) - 1
    free = universe & ~mask
    # iterate nonempty submasks of the free positions
    sub = free
    while sub:
        yield mask | sub
        sub = (sub - 1) & free


def prune_simplicial(I: MonomialIdeal) -> Matching:
    """Pruning filtered so the surviving faces stay closed under subsets.

    Each sweep first computes the plain pruning of the current subcomplex,
    then keeps only those edges (sigma, j) whose strict superfaces of sigma,
    apart from the partner sigma+e_j, are all gone by the end of step j -
    counting cells removed in earlier sweeps and cells removed by kept edges
    of this sweep at steps <= j.  The filter is shrunk to a self-consistent
    fixpoint before the sweep is applied, and whole sweeps repeat until one
    prunes nothing.
    """
    tc = TaylorComplex(I)
    r = I.r
    alive = set(tc.faces())
    all_steps: list[TraceStep] = []
    productive = 0
    for sweep_no in range(1, (1 << r) + 2):
        if sweep_no == (1 << r) + 1:
            raise RuntimeError("simplicial pruning failed to reach a fixpoint")
        candidates = _simplicial_candidates(tc, alive)
        kept = list(candidates)
        while True:
            killed_at: dict[int, int] = {}  # cell -> step when it dies this sweep
            for t in kept:
                killed_at[t.sigma] = t.step
                killed_at[t.sigma | (1 << t.j)] = t.step
            ok: list[TraceStep] = []
            for t in kept:
                partner = t.sigma | (1 << t.j)
                good = True
                for sup in _strict_superfaces(t.sigma, r):
                    if sup == partner or sup not in alive:
                        continue
                    if killed_at.get(sup, 1 << 30) > t.step:
                        good = False
                        break
                if good:
                    ok.append(t)
            if len(ok) == len(kept):
                break
            kept = ok
        if not kept:
            break
        productive += 1
        for t in kept:
            alive.discard(t.sigma)
            alive.discard(t.sigma | (1 << t.j))
            all_steps.append(TraceStep(t.step, t.sigma, t.j, sweep_no))
    return Matching(
        r,
        tuple((t.sigma, t.j) for t in all_steps),
        tuple(all_steps),
        kind="simplicial",
        sweeps=max(productive, 1),
    )


def intersection_generators(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    """Pairwise-lcm generating set of J * K's intersection, in grid order:
    lcm(m_1, k_1), ..., lcm(m_s, k_1), lcm(m_1, k_2), ...  Possibly non-minimal."""
    if J.variables != K.variables:
        raise ValueError("J and K must share the ambient variables")
    gens = []
    for k in K.generators:
        for m in J.generators:
            gens.append(lcm(m, k))
    return MonomialIdeal(J.variables, tuple(gens))


def partial_prune_intersection(J: MonomialIdeal, K: MonomialIdeal) -> Matching:
    """Partial pruning of the pairwise-lcm Taylor complex of the intersection.

    Grid vertex q*s+i stands for lcm(m_i, k_q); the edge sigma -> sigma+e_j,
    j = q*s+i, is pruned when the original generators involved in sigma
    already include both i and the K-side generator q.  Survivors other than
    the empty face are in degree-preserving bijection with the faces of the
    ambient Taylor complex supported on both blocks.
    """
    s, t = J.r, K.r
    if s == 0 or t == 0:
        raise ValueError("both parts of the splitting need at least one generator")
    grid = intersection_generators(J, K)
    tc = TaylorComplex(grid)

    pair_masks = []
    for q in range(t):
        for i in range(s):
            pair_masks.append((1 << i) | (1 << (s + q)))

    def involved(mask: int) -> int:
        out = 0
        for v in indices_of(mask):
            out |= pair_masks[v]
        return out

    alive = set(tc.faces())
    condition = lambda sigma, tau: True
    eligible = lambda sigma, j: involved(sigma) & pair_masks[j] == pair_masks[j]
    steps = _sweep(tc, alive, eligible, condition, 1)
    return Matching(
        grid.r, tuple((st.sigma, st.j) for st in steps), tuple(steps), kind="partial"
    )


def verify_matching(r: int, matching: Matching, I: MonomialIdeal) -> MatchingReport:
    """Check the matching, homogeneity and acyclicity properties directly.

    Acyclicity is decided by a topological sort of the full face graph with
    the matched arrows reversed; this also covers degree-shift matchings
    where the per-multidegree shortcut would not apply.
    """
    tc = TaylorComplex(I)
    seen: set[int] = set()
    is_matching = True
    for sigma, j in matching.edges:
        if sigma & (1 << j):
            is_matching = False
            break
        tau = sigma | (1 << j)
        if sigma in seen or tau in seen:
            is_matching = False
            break
        seen.add(sigma)
        seen.add(tau)

    is_homogeneous = all(
        tc.exponents(sigma) == tc.exponents(sigma | (1 << j))
        for sigma, j in matching.edges
    )

    reversed_up = {}  # lower cell -> upper cell for matched edges
    for sigma, j in matching.edges:
        reversed_up[sigma] = sigma | (1 << j)

    n = 1 << r
    indeg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for mask in range(1, n):
        for i in indices_of(mask):
            sub = mask & ~(1 << i)
            if reversed_up.get(sub) == mask:
                adj[sub].append(mask)
                indeg[mask] += 1
            else:
                adj[mask].append(sub)
                indeg[sub] += 1
    queue = [m for m in range(n) if indeg[m] == 0]
    seen_count = 0
    while queue:
        node = queue.pop()
        seen_count += 1
        for nxt in adj[node]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                queue.append(nxt)
    is_acyclic = seen_count == n

    return MatchingReport(is_matching, is_homogeneous, is_acyclic)


def render_trace(matching: Matching, I: MonomialIdeal) -> list[str]:
    """Trace lines, one per pruned edge: step, characteristic vector, degree.

    `I` must be the ideal whose Taylor complex the matching lives on (the
    grid ideal for partial prunings).
    """
    tc = TaylorComplex(I)
    lines = []
    for t in matching.trace:
        vec = "".join("1" if t.sigma & (1 << k) else "0" for k in range(matching.r))
        deg = monomial_str(tc.multidegree(t.sigma), I.variables)
        lines.append(f"step={t.step} sigma={vec} j={t.step} deg={deg}")
    return lines
