"""Chain complexes on critical cells, the gradient-flow differential, and the
d*d = 0 / exactness / minimality checks.

Homological degree i >= 1 is spanned by the critical (i-1)-dimensional faces;
degree 0 by the empty face.  Differential entries are signed monomials stored
sparsely as (row, col) -> (coefficient, degree-ratio exponents).
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .monomials import Monomial, MonomialIdeal, monomial_str
from .pruning import Matching, verify_matching
from .taylor import TaylorComplex, facets


class InvalidMatchingError(ValueError):
    """The matching failed validation (not vertex-disjoint, inhomogeneous or cyclic)."""


Entry = tuple[int, tuple[int, ...]]  # coefficient, exponent vector of the monomial


@dataclass(frozen=True)
class ChainComplex:
    """Critical cells per homological degree plus (optionally) differentials."""

    variables: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]
    degrees: tuple[tuple[tuple[int, ...], ...], ...]
    diffs: tuple[dict[tuple[int, int], Entry], ...] | None = None
    # diffs[i] is d_{i+1}: F_{i+1} -> F_i, so len(diffs) == len(cells) - 1

    @property
    def length(self) -> int:
        return len(self.cells)

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def diff(self, i: int) -> dict[tuple[int, int], Entry]:
        """d_i: F_i -> F_{i-1}, for 1 <= i < length."""
        if self.diffs is None:
            raise ValueError("differentials not set")
        return self.diffs[i - 1]

    def dump_lines(self) -> list[str]:
        lines = []
        for i, cells in enumerate(self.cells):
            lines.append(f"F{i}: {len(cells)} cells")
            if self.diffs is not None and i >= 1:
                for (row, col), (coeff, exps) in sorted(self.diff(i).items()):
                    mono = monomial_str(Monomial(exps), self.variables)
                    sign = "+" if coeff >= 0 else "-"
                    lines.append(f"d{i}[{row},{col}] = {sign}{abs(coeff)}*{mono}")
        return lines


def _critical_by_degree(I: MonomialIdeal, matching: Matching):
    tc = TaylorComplex(I)
    survivors = sorted(matching.survivors())
    buckets: dict[int, list[int]] = {}
    for mask in survivors:
        buckets.setdefault(mask.bit_count(), []).append(mask)
    top = max(buckets) if buckets else 0
    cells = tuple(tuple(buckets.get(i, ())) for i in range(top + 1))
    degrees = tuple(
        tuple(tc.exponents(m) for m in level) for level in cells
    )
    return tc, cells, degrees


def critical_complex(
    I: MonomialIdeal, matching: Matching, validate: bool = True
) -> ChainComplex:
    """Basis of the reduced complex: critical cells ordered canonically per degree."""
    if validate:
        report = verify_matching(I.r, matching, I)
        if not report.all_ok:
            raise InvalidMatchingError(f"rejected matching: {report}")
    _, cells, degrees = _critical_by_degree(I, matching)
    return ChainComplex(I.variables, cells, degrees)


def morse_differential(
    I: MonomialIdeal, matching: Matching, validate: bool = True
) -> ChainComplex:
    """Reduced differential via gradient-flow accumulation.

    The coefficient of critical sigma' in d(sigma) sums the weights of all
    gradient paths from the facets of sigma down to sigma'.  Instead of
    enumerating paths, each dimension's flow graph (cell -> facets of its
    match partner) is walked once in topological order, pushing coefficient
    sums; reversed arrows contribute -[partner : cell] and direct arrows the
    plain incidence sign.  The monomial part of every entry is forced by the
    degree difference of its endpoints.
    """
    base = critical_complex(I, matching, validate=validate)
    tc = TaylorComplex(I)

    partner_up: dict[int, int] = {}
    for sigma, j in matching.edges:
        partner_up[sigma] = sigma | (1 << j)
    matched_lower = set(partner_up)
    critical_index: dict[int, tuple[int, int]] = {}
    for i, level in enumerate(base.cells):
        for col, mask in enumerate(level):
            critical_index[mask] = (i, col)

    # Flow successors within one dimension: cell -> [(next_cell, weight)].
    def flow_out(cell: int) -> list[tuple[int, int]]:
        up = partner_up[cell]
        sign_up = -_incidence_cached(up, cell)
        out = []
        for facet, sign in facets(up):
            if facet != cell:
                out.append((facet, sign_up * sign))
        return out

    incid: dict[tuple[int, int], int] = {}

    def _incidence_cached(mask: int, sub: int) -> int:
        key = (mask, sub)
        hit = incid.get(key)
        if hit is None:
            removed = mask & ~sub
            below = mask & (removed - 1)
            hit = -1 if below.bit_count() % 2 else 1
            incid[key] = hit
        return hit

    # Topological order of matched-lower cells per dimension, shared by all
    # columns of that dimension.
    def topo_for_dim(dim_cells: set[int]) -> list[int]:
        nodes = [c for c in dim_cells if c in matched_lower]
        node_set = set(nodes)
        indeg = {c: 0 for c in nodes}
        succ: dict[int, list[int]] = {c: [] for c in nodes}
        for c in nodes:
            for nxt, _ in flow_out(c):
                if nxt in node_set:
                    succ[c].append(nxt)
                    indeg[nxt] += 1
        order = []
        stack = [c for c in nodes if indeg[c] == 0]
        while stack:
            c = stack.pop()
            order.append(c)
            for nxt in succ[c]:
                indeg[nxt] -= 1
                if indeg[nxt] == 0:
                    stack.append(nxt)
        if len(order) != len(nodes):
            raise InvalidMatchingError("cycle detected in gradient flow")
        return order

    diffs: list[dict[tuple[int, int], Entry]] = []
    for i in range(1, base.length):
        entries: dict[tuple[int, int], Entry] = {}
        level_dim_cells: set[int] = set()
        for mask in base.cells[i]:
            for facet, _ in facets(mask):
                level_dim_cells.add(facet)
        for cell in list(level_dim_cells):
            if cell in matched_lower:
                stack = [cell]
                while stack:
                    c = stack.pop()
                    for nxt, _ in flow_out(c):
                        if nxt not in level_dim_cells:
                            level_dim_cells.add(nxt)
                            if nxt in matched_lower:
                                stack.append(nxt)
        order = topo_for_dim(level_dim_cells)

        for col, sigma in enumerate(base.cells[i]):
            coeffs: dict[int, int] = {}
            for facet, sign in facets(sigma):
                coeffs[facet] = coeffs.get(facet, 0) + sign
            for c in order:
                val = coeffs.pop(c, 0)
                if not val:
                    continue
                for nxt, w in flow_out(c):
                    coeffs[nxt] = coeffs.get(nxt, 0) + val * w
            sig_exp = tc.exponents(sigma)
            for cell, val in coeffs.items():
                if not val:
                    continue
                hit = critical_index.get(cell)
                if hit is None:
                    continue  # matched-upper cells absorb nothing
                deg, row = hit
                if deg != i - 1:
                    raise InvalidMatchingError("flow escaped its dimension")
                cell_exp = tc.exponents(cell)
                ratio = tuple(a - b for a, b in zip(sig_exp, cell_exp))
                if any(e < 0 for e in ratio):
                    raise InvalidMatchingError("non-divisible differential entry")
                entries[(row, col)] = (val, ratio)
        diffs.append(entries)

    return ChainComplex(base.variables, base.cells, base.degrees, tuple(diffs))


def check_d_squared(C: ChainComplex) -> bool:
    """Exact polynomial check that consecutive differentials compose to zero."""
    if C.diffs is None:
        raise ValueError("differentials not set")
    for i in range(2, C.length):
        lo = C.diff(i - 1)  # F_{i-1} -> F_{i-2}
        hi = C.diff(i)  # F_i -> F_{i-1}
        by_col: dict[int, list[tuple[int, int, tuple[int, ...]]]] = {}
        for (row, col), (coeff, exps) in hi.items():
            by_col.setdefault(col, []).append((row, coeff, exps))
        lo_by_col: dict[int, list[tuple[int, int, tuple[int, ...]]]] = {}
        for (row, col), (coeff, exps) in lo.items():
            lo_by_col.setdefault(col, []).append((row, coeff, exps))
        for col, terms in by_col.items():
            acc: dict[tuple[int, tuple[int, ...]], int] = {}
            for mid, c1, e1 in terms:
                for row, c2, e2 in lo_by_col.get(mid, ()):
                    exps = tuple(a + b for a, b in zip(e1, e2))
                    key = (row, exps)
                    acc[key] = acc.get(key, 0) + c1 * c2
            if any(v != 0 for v in acc.values()):
                return False
    return True


def _strand_ranks(
    C: ChainComplex, alpha: tuple[int, ...], char: int, in_ideal: bool
) -> bool:
    """Exactness of the alpha-strand: homology zero in degrees >= 1 and the
    degree-0 cokernel 0 or 1 according to whether x^alpha lies in the ideal."""
    present: list[list[int]] = []
    index: list[dict[int, int]] = []
    for level in C.degrees:
        keep = [
            k
            for k, exps in enumerate(level)
            if all(e <= a for e, a in zip(exps, alpha))
        ]
        present.append(keep)
        index.append({k: pos for pos, k in enumerate(keep)})

    sizes = [len(p) for p in present]
    ranks = [0] * (C.length + 1)
    for i in range(1, C.length):
        if not present[i]:
            continue
        rows: dict[int, dict[int, int]] = {}
        keep_cols = index[i]
        keep_rows = index[i - 1]
        for (row, col), (coeff, _) in C.diff(i).items():
            if col in keep_cols and row in keep_rows:
                rows.setdefault(keep_cols[col], {})[keep_rows[row]] = coeff
        ranks[i] = linalg.rank(list(rows.values()), char)

    for i in range(1, C.length):
        h = sizes[i] - ranks[i] - ranks[i + 1]
        if h != 0:
            return False
    coker = sizes[0] - ranks[1]
    return coker == (0 if in_ideal else 1)


def check_exactness(I: MonomialIdeal, C: ChainComplex, char: int = 0) -> bool:
    """True iff the complex is a resolution of the quotient over the given field.

    Strands are checked at every distinct lcm-lattice multidegree; between
    lattice degrees the strands do not change.
    """
    linalg.check_characteristic(char)
    if C.diffs is None:
        raise ValueError("differentials not set")
    tc = TaylorComplex(I)
    lattice = {tc.exponents(mask) for mask in tc.faces()}
    gens = [g.exponents for g in I.generators]
    for alpha in sorted(lattice):
        in_ideal = any(all(e <= a for e, a in zip(g, alpha)) for g in gens)
        if not _strand_ranks(C, alpha, char, in_ideal):
            return False
    return True


def check_minimal(C: ChainComplex) -> bool:
    """No differential entry is a nonzero integer times the unit monomial."""
    if C.diffs is None:
        raise ValueError("differentials not set")
    for d in C.diffs:
        for coeff, exps in d.values():
            if coeff != 0 and all(e == 0 for e in exps):
                return False
    return True


def check_minimal_over(C: ChainComplex, char: int) -> bool:
    """Minimality over a specific field: unit entries vanishing mod p do not count."""
    linalg.check_characteristic(char)
    if C.diffs is None:
        raise ValueError("differentials not set")
    for d in C.diffs:
        for coeff, exps in d.values():
            if all(e == 0 for e in exps):
                if char == 0 and coeff != 0:
                    return False
                if char != 0 and coeff % char != 0:
                    return False
    return True


def syntactic_minimality(I: MonomialIdeal, matching: Matching) -> bool:
    """No two surviving cells sigma, sigma+e_j share a multidegree.

    An equal-degree inclusion pair of critical cells is exactly a unit entry
    of the naive differential; pairs whose upper cell was matched away do not
    count against minimality.
    """
    tc = TaylorComplex(I)
    alive = matching.survivors()
    for sigma in alive:
        exps = tc.exponents(sigma)
        for j in range(I.r):
            if sigma & (1 << j):
                continue
            tau = sigma | (1 << j)
            if tau in alive and tc.exponents(tau) == exps:
                return False
    return True
