"""The module side: ideal components, quotient characters, Frobenius series.

Each homogeneous component of the quotient is handled by exact linear
algebra: the ideal component is spanned by generator * monomial products,
an integer echelon basis is extracted, and the character of a permutation
is the trace on the ambient component minus the trace restricted to the
ideal.  A dense mod-p elimination may be used first as a one-sided
certificate that a component is full (rank over F_p = dim forces rank over
Q = dim); everything else is exact rational arithmetic.

Degree exploration is frontier-driven.  If a component vanishes, so do the
components one step up in a or b (any higher monomial is a variable times
a monomial lying in the ideal), so each theta-row of the degree lattice is
explored until a closed band of zeros is found, then one configurable
extra band beyond it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .characters import character_table
from .linalg import Echelon, ConsistencyError
from .partitions import (
    Partition,
    Permutation,
    cycles_of,
    partitions_of,
    perm_of_cycle_type,
    z_mu,
)
from .qtz import QTZPoly
from .rationals import RAT, normalize_scalar
from .series import FrobeniusSeries
from .superring import (
    SuperMonomial,
    TriDegree,
    apply_perm_mono,
    enumerate_monomials,
    ideal_generators,
    mono_mul,
)

MODP_PRIME = 1_048_573  # 20 bits: float64 block updates stay exact below 2^53
MODP_BLOCK = 128
MODP_MIN_DIM = 120


class BudgetExceeded(Exception):
    """Raised internally when the time budget runs out mid-exploration."""


def spanning_vectors(n: int, d: TriDegree, index: dict[SuperMonomial, int]):
    """Ideal spanning vectors of tri-degree d, one per generator * monomial."""
    for _name, e, gen in ideal_generators(n):
        rem = TriDegree(d.a - e.a, d.b - e.b, d.c - e.c)
        if rem.a < 0 or rem.b < 0 or rem.c < 0:
            continue
        for m in enumerate_monomials(n, rem):
            vec: dict[int, int] = {}
            for gm, coeff in gen.terms.items():
                prod = mono_mul(gm, m)
                if prod is None:
                    continue
                sign, pm = prod
                i = index[pm]
                s = vec.get(i, 0) + sign * coeff
                if s:
                    vec[i] = s
                elif i in vec:
                    del vec[i]
            if vec:
                yield vec


def _modp_full_rank_core(mat, dim: int, p: int, block: int) -> bool:
    import numpy as np

    k = mat.shape[0]
    if k < dim:
        return False
    # Lazy reduction: off-panel entries are only reduced when consumed.
    # Each block update adds at most block * p^2 < 2^47 in magnitude, so with
    # at most 63 pending blocks everything stays exact in float64.
    lazy = (dim + block - 1) // block <= 63
    top = 0  # rows [0, top) are retired pivot rows
    for r0 in range(0, dim, block):
        e = min(r0 + block, dim)
        bb = e - r0
        # Select bb active rows independent on the panel columns.  Candidate
        # rows are taken in slabs; each slab is reduced against the current
        # Gauss-Jordan panel echelon with one matrix product, then surviving
        # rows are inserted one at a time.
        ech = np.zeros((bb, bb), dtype=np.float64)
        lead: list[int] = []
        piv_abs: list[int] = []
        start = top
        while start < k and len(lead) < bb:
            stop = min(k, start + 1024)
            slab = np.mod(mat[start:stop, r0:e], p)
            if lead:
                factors = slab[:, lead].copy()
                slab -= np.dot(factors, ech[: len(lead)])
                np.mod(slab, p, out=slab)
            fresh = len(lead)
            for local in np.nonzero(np.any(slab, axis=1))[0]:
                row = slab[local]
                for s in range(fresh, len(lead)):
                    f = row[lead[s]]
                    if f:
                        row = (row - f * ech[s]) % p
                nz = np.nonzero(row)[0]
                if nz.size == 0:
                    continue
                c = int(nz[0])
                row = (row * pow(int(row[c]), p - 2, p)) % p
                # keep the echelon reduced so slab reduction is one product
                for s in range(len(lead)):
                    f = ech[s, c]
                    if f:
                        ech[s] = (ech[s] - f * row) % p
                ech[len(lead)] = row
                lead.append(c)
                piv_abs.append(start + int(local))
                if len(lead) == bb:
                    break
            start = stop
        if len(lead) < bb:
            # A column dependency among the remaining columns: not full rank
            # mod p (any column subset of a full-column-rank matrix is free).
            return False
        # piv_abs is ascending with piv_abs[j] >= top + j, so these swaps
        # never displace a later pivot row.
        for j, i_abs in enumerate(piv_abs):
            pos = top + j
            if i_abs != pos:
                mat[[pos, i_abs]] = mat[[i_abs, pos]]
        # Reduce the pivot block to the identity on the panel columns, then
        # clear the panel from every remaining active row in one update.
        new_top = top + bb
        pivot_rows = np.mod(mat[top:new_top, r0:], p)
        inv = _modp_inverse(pivot_rows[:, :bb], p)
        reduced = np.dot(inv, pivot_rows)
        np.mod(reduced, p, out=reduced)
        mat[top:new_top, r0:] = reduced
        rest = mat[new_top:, r0:]
        if rest.shape[0]:
            factors = np.mod(rest[:, :bb], p)
            rest -= np.dot(factors, reduced)
            rest[:, :bb] = 0.0
            if not lazy:
                np.mod(rest, p, out=rest)
        top = new_top
    return True


def _modp_inverse(panel, p: int):
    """Gauss-Jordan inverse of a square matrix mod p (float64, exact)."""
    import numpy as np

    bb = panel.shape[0]
    aug = np.concatenate([panel % p, np.eye(bb)], axis=1)
    for j in range(bb):
        nz = np.nonzero(aug[j:, j])[0]
        if nz.size == 0:
            raise ConsistencyError("panel not invertible")
        i = j + int(nz[0])
        if i != j:
            aug[[j, i]] = aug[[i, j]]
        aug[j] = (aug[j] * pow(int(aug[j, j]), p - 2, p)) % p
        for i in range(bb):
            if i != j and aug[i, j]:
                aug[i] = (aug[i] - aug[i, j] * aug[j]) % p
    return aug[:, bb:]


def _fill_matrix(vectors, dim: int, p: int):
    import numpy as np

    # column-major: the elimination works on column blocks
    mat = np.zeros((len(vectors), dim), dtype=np.float64, order="F")
    for r, vec in enumerate(vectors):
        for c, val in vec.items():
            mat[r, c] = val % p
    return mat


def _modp_is_full_rank(vectors: list[dict[int, int]], dim: int,
                       p: int = MODP_PRIME, block: int = MODP_BLOCK) -> bool:
    """True only if the vectors certifiably span all dim coordinates.

    Works modulo p, which can only lower the rank, so a full-rank answer is
    exact; False just means "not certified".
    """
    k = len(vectors)
    if k < dim:
        return False
    if k * dim > 120_000_000:
        # memory guard for very large components: certify from a stratified
        # sample or let exact elimination decide
        take = min(k, 2 * dim + 16)
        sample = [vectors[(i * k) // take] for i in range(take)]
        return _modp_full_rank_core(_fill_matrix(sample, dim, p), dim, p, block)
    return _modp_full_rank_core(_fill_matrix(vectors, dim, p), dim, p, block)


@dataclass
class IdealComponentBasis:
    """Echelon basis of one ideal component in monomial coordinates."""

    degree: TriDegree
    monomials: tuple[SuperMonomial, ...]
    rank: int
    pivots: list[int] = field(default_factory=list)
    rows: list[dict[int, int]] = field(default_factory=list)
    certified_full: bool = False

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def echelon(self) -> Echelon:
        ech = Echelon()
        ech.pivots = {j: row for j, row in zip(self.pivots, self.rows)}
        return ech

    def contains(self, vec: dict[int, int]) -> bool:
        return not self.echelon().residual(dict(vec))


def ideal_component(n: int, d: TriDegree, use_modp: bool = True,
                    expect_full: bool = False) -> IdealComponentBasis:
    """Basis of the span { g * m } inside the component of tri-degree d."""
    monos = enumerate_monomials(n, d)
    dim = len(monos)
    if dim == 0:
        return IdealComponentBasis(d, monos, 0)
    index = {m: i for i, m in enumerate(monos)}

    if use_modp and (expect_full or dim >= MODP_MIN_DIM):
        vectors = list(spanning_vectors(n, d, index))
        if _modp_is_full_rank(vectors, dim):
            return IdealComponentBasis(d, monos, dim, certified_full=True)
        source = vectors
    else:
        source = spanning_vectors(n, d, index)

    ech = Echelon()
    for vec in source:
        ech.insert(dict(vec))
        if ech.rank == dim:
            break
    if ech.rank < dim:
        ech.reduce_fully()
    pairs = ech.basis_rows()
    return IdealComponentBasis(
        d, monos, ech.rank, [j for j, _ in pairs], [row for _, row in pairs]
    )


def signed_coordinate_map(sigma: Permutation, monomials, index) -> list[tuple[int, int]]:
    """Per-coordinate (image index, sign) of the diagonal S_n action."""
    out = []
    for m in monomials:
        sign, image = apply_perm_mono(sigma, m)
        out.append((index[image], sign))
    return out


def apply_signed_map(cmap: list[tuple[int, int]], vec: dict[int, int]) -> dict[int, int]:
    return {cmap[i][0]: cmap[i][1] * val for i, val in vec.items()}


def trace_regular(sigma: Permutation, n: int, d: TriDegree) -> int:
    """Trace of the signed action of sigma on the full component R^(a,b,c).

    A monomial is (up to sign) fixed iff its x and y exponents are constant
    on the cycles of sigma and its theta set is a union of cycles; the sign
    is the sort parity of sigma on the theta set, i.e. the product of
    (-1)^(length-1) over the cycles used.
    """
    lengths = [len(c) for c in cycles_of(sigma)]
    return (
        _cycle_exponent_count(lengths, d.a)
        * _cycle_exponent_count(lengths, d.b)
        * _theta_signed_count(lengths, d.c)
    )


def _cycle_exponent_count(lengths: list[int], total: int) -> int:
    dp = [0] * (total + 1)
    dp[0] = 1
    for ell in lengths:
        for s in range(ell, total + 1):
            dp[s] += dp[s - ell]
    return dp[total]


def _theta_signed_count(lengths: list[int], c: int) -> int:
    dp = [0] * (c + 1)
    dp[0] = 1
    for ell in lengths:
        sign = -1 if (ell - 1) % 2 else 1
        for s in range(c, ell - 1, -1):
            dp[s] += sign * dp[s - ell]
    return dp[c]


@dataclass
class ComponentCharacters:
    """Quotient character values of one tri-graded component."""

    n: int
    degree: TriDegree
    dim: int  # ambient component dimension
    rank: int  # ideal component rank
    chars: dict[Partition, int] = field(default_factory=dict)

    @property
    def dim_quotient(self) -> int:
        return self.dim - self.rank


def _restricted_trace_signed(basis: IdealComponentBasis, cmap) -> object:
    """Trace of a signed coordinate permutation on the ideal component."""
    inverse = [None] * len(cmap)
    for i, (j, sign) in enumerate(cmap):
        inverse[j] = (i, sign)
    total = 0
    for j, row in zip(basis.pivots, basis.rows):
        i, sign = inverse[j]
        val = row.get(i, 0)
        if val:
            total += RAT(sign * val, row[j])
    return normalize_scalar(total)


def component_characters(n: int, d: TriDegree, use_modp: bool = True,
                         expect_full: bool = False) -> ComponentCharacters:
    """All quotient character values chi_M(mu) at tri-degree d."""
    monos = enumerate_monomials(n, d)
    dim = len(monos)
    mus = partitions_of(n)
    if dim == 0:
        return ComponentCharacters(n, d, 0, 0, {mu: 0 for mu in mus})
    basis = ideal_component(n, d, use_modp=use_modp, expect_full=expect_full)
    if basis.rank == dim:
        return ComponentCharacters(n, d, dim, dim, {mu: 0 for mu in mus})
    index = {m: i for i, m in enumerate(monos)}
    chars = {}
    for mu in mus:
        sigma = perm_of_cycle_type(mu)
        full = trace_regular(sigma, n, d)
        if all(p == 1 for p in mu):
            ideal_tr = basis.rank
        else:
            cmap = signed_coordinate_map(sigma, monos, index)
            ideal_tr = _restricted_trace_signed(basis, cmap)
        value = full - ideal_tr
        if not isinstance(value, int):
            if value.denominator != 1:
                raise ConsistencyError(
                    f"non-integer character at {d} for type {mu}: {value}"
                )
            value = int(value)
        chars[mu] = value
    if chars[(1,) * n] != dim - basis.rank:
        raise ConsistencyError(f"identity character mismatch at {d}")
    return ComponentCharacters(n, d, dim, basis.rank, chars)


def character_quotient(mu: Partition, n: int, d: TriDegree) -> int:
    """chi_M(mu) at tri-degree d: ambient trace minus ideal trace."""
    if sum(mu) != n:
        raise ValueError(f"mu must be a partition of {n}: {mu}")
    return component_characters(n, d).chars[tuple(mu)]


def _component_worker(args) -> ComponentCharacters:
    n, d, use_modp, expect_full = args
    return component_characters(n, TriDegree(*d), use_modp, expect_full)


@dataclass
class ThetaRowResult:
    c: int
    components: dict[tuple[int, int], ComponentCharacters] = field(default_factory=dict)
    closed: bool = False


@dataclass
class ModuleSideResult:
    n: int
    series: FrobeniusSeries
    components: dict[TriDegree, ComponentCharacters]
    closed: bool
    rows: dict[int, ThetaRowResult]

    def hilbert(self) -> dict[TriDegree, int]:
        return {
            d: comp.dim_quotient
            for d, comp in sorted(self.components.items())
            if comp.dim_quotient
        }


def explore_theta_row(
    n: int,
    c: int,
    compute_many,
    extra_band: int = 1,
    forced: set[tuple[int, int]] = frozenset(),
    max_ab: int | None = None,
    deadline: float | None = None,
) -> ThetaRowResult:
    """Explore the (a, b) lattice at fixed theta-degree c.

    A cell is computed when it is forced, is the origin, or sits within
    extra_band steps above a computed zero bordering the nonzero support.
    Finding a nonzero component strictly beyond a zero predecessor would
    contradict the monotone vanishing law and raises ConsistencyError.
    """
    if max_ab is None:
        max_ab = n * (n - 1) + 2
    row = ThetaRowResult(c)
    reach: dict[tuple[int, int], int] = {}
    max_forced = max((a + b for (a, b) in forced), default=-1)
    band = 0
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"budget exhausted at c={c}, band {band}")
        cells = []
        for a in range(band + 1):
            b = band - a
            lvl = None
            if (a, b) == (0, 0):
                lvl = 0
            else:
                for pred in ((a - 1, b), (a, b - 1)):
                    if pred[0] < 0 or pred[1] < 0 or pred not in row.components:
                        continue
                    p_lvl = 0 if row.components[pred].dim_quotient > 0 else reach[pred] + 1
                    lvl = p_lvl if lvl is None else min(lvl, p_lvl)
            if (a, b) in forced:
                lvl = 0
            if lvl is not None and lvl <= extra_band:
                cells.append(((a, b), lvl))
        if not cells:
            if band > max_forced:
                row.closed = True
                return row
            band += 1
            continue
        if band > max_ab:
            return row  # not closed: budget on degree exhausted
        computed = compute_many(
            [(n, (ab[0], ab[1], c)) for ab, _ in cells]
        )
        for (ab, lvl), comp in zip(cells, computed):
            row.components[ab] = comp
            reach[ab] = 0 if comp.dim_quotient > 0 else lvl
            if comp.dim_quotient > 0 and lvl > 0 and ab not in forced:
                raise ConsistencyError(
                    f"nonzero component beyond the zero frontier at {ab}, c={c}"
                )
        band += 1


def assemble_series(n: int, components) -> FrobeniusSeries:
    """Schur expansion from per-component characters via the p_mu pairing.

    coeff(lam) gains q^a t^b z^c * sum_mu chi(mu) chi^lam(mu) / z_mu per
    component; every multiplicity must come out an integer.
    """
    table = character_table(n)
    mus = partitions_of(n)
    weights = {mu: z_mu(mu) for mu in mus}
    series = FrobeniusSeries(n)
    acc: dict[Partition, dict] = {lam: {} for lam in mus}
    for d, comp in sorted(components.items()):
        if comp.dim_quotient == 0:
            continue
        for lam in mus:
            total = 0
            for mu in mus:
                chi = comp.chars[mu]
                if chi:
                    total += RAT(chi * table.value(lam, mu), weights[mu])
            if total:
                if not isinstance(total, int) and total.denominator != 1:
                    raise ConsistencyError(
                        f"non-integer multiplicity at {d} for {lam}: {total}"
                    )
                acc[lam][(d.a, d.b, d.c)] = int(total)
    for lam, terms in acc.items():
        if terms:
            series.set_coefficient(lam, QTZPoly(terms))
    return series


def frobenius_module(
    n: int,
    extra_band: int = 1,
    forced: set[TriDegree] = frozenset(),
    threads: int = 1,
    use_modp: bool = True,
    max_ab: int | None = None,
    budget_seconds: float | None = None,
    component_cache=None,
    expect_support: set[TriDegree] | None = None,
) -> ModuleSideResult:
    """Compute the qtz-graded Frobenius series of the quotient module.

    expect_support only tunes the full-rank prefilter (cells outside it are
    tried mod p first); it never influences results.  component_cache, when
    given, must provide get(n, degree) and put(component).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    deadline = time.monotonic() + budget_seconds if budget_seconds is not None else None
    pool = None
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        pool = ProcessPoolExecutor(max_workers=threads)

    def compute_many(specs):
        jobs = []
        out: dict[int, ComponentCharacters] = {}
        for i, (nn, d3) in enumerate(specs):
            d = TriDegree(*d3)
            cached = component_cache.get(nn, d) if component_cache is not None else None
            if cached is not None:
                out[i] = cached
                continue
            expect_full = expect_support is not None and d not in expect_support
            jobs.append((i, (nn, d3, use_modp, expect_full)))
        if pool is not None:
            results = list(pool.map(_component_worker, [args for _, args in jobs]))
        else:
            results = [_component_worker(args) for _, args in jobs]
        for (i, _), comp in zip(jobs, results):
            out[i] = comp
            if component_cache is not None:
                component_cache.put(comp)
        return [out[i] for i in range(len(specs))]

    rows: dict[int, ThetaRowResult] = {}
    try:
        for c in range(n + 1):
            forced_ab = {(d.a, d.b) for d in forced if d.c == c}
            rows[c] = explore_theta_row(
                n,
                c,
                compute_many,
                extra_band=extra_band,
                forced=forced_ab,
                max_ab=max_ab,
                deadline=deadline,
            )
    except BudgetExceeded:
        pass
    finally:
        if pool is not None:
            pool.shutdown()

    components: dict[TriDegree, ComponentCharacters] = {}
    for c, row in rows.items():
        for (a, b), comp in row.components.items():
            components[TriDegree(a, b, c)] = comp
    closed = len(rows) == n + 1 and all(row.closed for row in rows.values())
    series = assemble_series(n, components)
    return ModuleSideResult(n, series, components, closed, rows)


def support_frontier(n: int, c: int, extra_band: int = 1,
                     use_modp: bool = True) -> set[TriDegree]:
    """Tri-degrees with nonzero quotient at fixed theta-degree c."""
    if not 0 <= c <= n:
        raise ValueError(f"need 0 <= c <= n, got c={c}")

    def compute_many(specs):
        return [component_characters(nn, TriDegree(*d3), use_modp) for nn, d3 in specs]

    row = explore_theta_row(n, c, compute_many, extra_band=extra_band)
    return {
        TriDegree(a, b, c)
        for (a, b), comp in row.components.items()
        if comp.dim_quotient > 0
    }
