"""Cospectrality conditions for the bundled base pair, the corollary-style
signature generator, and brute-force search for cospectral lift pairs.

The two conditions are implemented as exact group-element equations rather
than per-character complex equations: the underlying identity must hold for
every character, and by character orthogonality that is equivalent to a
multiset equality of group elements, which is exact and fast to test.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import fixtures
from .algebra import (
    AbelianGroup,
    GroupSpec,
    compose,
    format_group,
    inverse,
    parse_group,
)
from .graphs import Graph, degree_sequence
from .isomorphism import canonical_form
from .lifts import NonAbelianSignature, Signature, build_lift, make_signature
from .spectra import charpoly, cospectral


class WrongBaseGraph(ValueError):
    """A condition check was given a signature on the wrong base graph."""


class Condition1Violated(ValueError):
    """check_condition2 requires check_condition1 to hold first."""


class BudgetExceeded(RuntimeError):
    """The signature space is larger than the configured enumeration budget."""


@dataclass(frozen=True)
class FixturePair:
    """The bundled 6-vertex cospectral pair with its named-edge dictionaries."""

    g: Graph
    h: Graph
    g_edges: dict = field(default_factory=dict)
    h_edges: dict = field(default_factory=dict)


def fixture_pair() -> FixturePair:
    return FixturePair(
        fixtures.BASE_G,
        fixtures.BASE_H,
        dict(fixtures.G_EDGE_NAMES),
        dict(fixtures.H_EDGE_NAMES),
    )


def _require_abelian(s: Signature) -> None:
    if not s.is_abelian():
        raise NonAbelianSignature("condition checks require an abelian signature")


def _require_base(s: Signature, base: Graph, side: str) -> None:
    if s.base != base:
        raise WrongBaseGraph(f"signature is not on the bundled base graph {side}")


def check_condition1(sg: Signature) -> bool:
    """First cospectrality condition on the G side:
    s(2,4) * s(4,5) = s(2,3) * s(3,5)."""
    _require_abelian(sg)
    _require_base(sg, fixtures.BASE_G, "G")
    gr = sg.group
    lhs = compose(gr, sg.get(2, 4), sg.get(4, 5))
    rhs = compose(gr, sg.get(2, 3), sg.get(3, 5))
    return lhs == rhs


def _alpha(sg: Signature):
    gr = sg.group
    return compose(gr, compose(gr, sg.get(3, 4), sg.get(2, 3)), inverse(gr, sg.get(2, 4)))


def _beta_gamma(sh: Signature):
    gr = sh.group
    beta = compose(gr, compose(gr, sh.get(3, 5), sh.get(5, 6)), inverse(gr, sh.get(3, 6)))
    gamma = compose(gr, compose(gr, sh.get(1, 2), sh.get(2, 3)), inverse(gr, sh.get(1, 3)))
    return beta, gamma


def check_condition2(sg: Signature, sh: Signature) -> bool:
    """Second cospectrality condition, assuming the first one holds:
    with alpha = x*v*w^-1 on the G side and beta = y1*r1*z1^-1,
    gamma = u1*w1*v1^-1 on the H side, the multisets
    {alpha, alpha^-1, alpha, alpha^-1} and {beta, beta^-1, gamma, gamma^-1}
    must be equal."""
    _require_abelian(sg)
    _require_abelian(sh)
    _require_base(sg, fixtures.BASE_G, "G")
    _require_base(sh, fixtures.BASE_H, "H")
    if sg.group != sh.group:
        raise WrongBaseGraph("the two signatures use different groups")
    if not check_condition1(sg):
        raise Condition1Violated("the first condition does not hold for the G-side signature")
    gr = sg.group
    alpha = _alpha(sg)
    beta, gamma = _beta_gamma(sh)
    left = Counter([alpha, inverse(gr, alpha)] * 2)
    right = Counter([beta, inverse(gr, beta), gamma, inverse(gr, gamma)])
    return left == right


def conditions_hold(sg: Signature, sh: Signature) -> bool:
    """Both conditions, without raising when the first fails."""
    return check_condition1(sg) and check_condition2(sg, sh)


def corollary_generate(
    gr: AbelianGroup,
    u=None,
    v=None,
    w=None,
    x=None,
    y=None,
    r=None,
    v1=None,
    x1=None,
) -> tuple[Signature, Signature]:
    """Generate a signature pair from the free parameters of the substitution
    z := v*y*w^-1, u1 = y1 = x, w1 = r1 = v, z1 = w.

    Unset parameters default to the identity. The result always passes the
    first condition; it passes the second when v1 is chosen as w. Callers are
    expected to verify cospectrality directly rather than trust the
    substitution: this is a candidate generator.
    """
    ident = gr.identity()
    u = ident if u is None else u
    v = ident if v is None else v
    w = ident if w is None else w
    x = ident if x is None else x
    y = ident if y is None else y
    r = ident if r is None else r
    v1 = ident if v1 is None else v1
    x1 = ident if x1 is None else x1
    z = compose(gr, compose(gr, v, y), inverse(gr, w))
    sg = make_signature(
        fixtures.BASE_G,
        gr,
        {
            (1, 2): u,
            (2, 3): v,
            (2, 4): w,
            (3, 4): x,
            (3, 5): y,
            (4, 5): z,
            (5, 6): r,
        },
    )
    sh = make_signature(
        fixtures.BASE_H,
        gr,
        {
            (1, 2): x,
            (1, 3): v1,
            (2, 3): v,
            (3, 4): x1,
            (3, 5): x,
            (3, 6): w,
            (5, 6): v,
        },
    )
    return sg, sh


# ---------------------------------------------------------------------------
# Brute-force search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchOptions:
    filter_by_theorem: bool = False
    budget: int = 10**6
    jobs: int = 1


@dataclass(frozen=True)
class SearchResult:
    rank_g: int
    rank_h: int
    sig_g: Signature
    sig_h: Signature
    charpoly: tuple[int, ...]
    conditions_satisfied: bool | None
    non_isomorphic: bool


def signature_count(base: Graph, gr: GroupSpec) -> int:
    return gr.order() ** len(base.edges)


def signature_from_rank(base: Graph, gr: GroupSpec, rank: int) -> Signature:
    """Signature with lexicographic index `rank`: the first canonical edge is
    the most significant digit, elements in enumeration order."""
    elems = gr.elements()
    k = len(elems)
    m = len(base.edges)
    if not 0 <= rank < k**m:
        raise ValueError(f"rank {rank} outside 0..{k ** m - 1}")
    digits = []
    for _ in range(m):
        rank, d = divmod(rank, k)
        digits.append(d)
    digits.reverse()
    return Signature(base, gr, {e: elems[d] for e, d in zip(base.edges, digits)})


def rank_of_signature(s: Signature) -> int:
    elems = s.group.elements()
    index = {e: i for i, e in enumerate(elems)}
    rank = 0
    for edge in s.base.edges:
        rank = rank * len(elems) + index[s.assignments[edge]]
    return rank


def _scan_ranks(args) -> list[tuple[int, tuple[int, ...]]]:
    """Worker: charpoly for each listed signature rank. Top level so process
    pools can pickle it."""
    n, edges, group_text, ranks = args
    base = Graph(n, edges)
    gr = parse_group(group_text)
    out = []
    for rank in ranks:
        sig = signature_from_rank(base, gr, rank)
        lift = build_lift(base, sig)
        out.append((rank, tuple(charpoly(lift))))
    return out


def _scan_side(base: Graph, gr: GroupSpec, ranks: list[int], jobs: int):
    spec = (base.n, base.edges, format_group(gr))
    if jobs <= 1 or len(ranks) < 4:
        return _scan_ranks((*spec, tuple(ranks)))
    chunk = max(1, -(-len(ranks) // (jobs * 4)))
    parts = [
        (*spec, tuple(ranks[lo : lo + chunk])) for lo in range(0, len(ranks), chunk)
    ]
    from concurrent.futures import ProcessPoolExecutor

    rows: list = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_ranks, parts):
            rows.extend(part)
    rows.sort(key=lambda r: r[0])
    return rows


def search(
    g: Graph, h: Graph, gr: AbelianGroup, options: SearchOptions = SearchOptions()
) -> list[SearchResult]:
    """Enumerate all signatures on both bases and list every pair whose lifts
    are cospectral, in lexicographic (rank_g, rank_h) order.

    Charpolys are computed once per signature per side and joined by exact
    coefficient equality (dict join: hash plus full comparison). The
    enumeration is partitioned into contiguous rank ranges when jobs > 1;
    the merge is rank-sorted, so output is independent of the worker count.

    Every vertex of a lift inherits the degree of its base vertex, so lifts
    of bases with different degree sequences are never isomorphic; canonical
    forms are computed only when the degree test cannot decide.
    """
    if not isinstance(gr, AbelianGroup):
        raise NonAbelianSignature("search enumerates abelian signature spaces")
    if not cospectral(g, h):
        raise ValueError("search requires cospectral base graphs")
    pair = fixture_pair()
    on_fixture = g == pair.g and h == pair.h
    if options.filter_by_theorem and not on_fixture:
        raise WrongBaseGraph(
            "filter_by_theorem is only available on the bundled base pair"
        )
    total_g = signature_count(g, gr)
    total_h = signature_count(h, gr)
    if max(total_g, total_h) > options.budget:
        raise BudgetExceeded(
            f"{max(total_g, total_h)} signatures per side exceeds the budget of "
            f"{options.budget}; scanned 0"
        )

    sig_g_cache: dict[int, Signature] = {}
    sig_h_cache: dict[int, Signature] = {}

    def sig_of(cache, base, rank):
        if rank not in cache:
            cache[rank] = signature_from_rank(base, gr, rank)
        return cache[rank]

    same_degrees = degree_sequence(g) == degree_sequence(h)
    canon_g_cache: dict[int, tuple] = {}
    canon_h_cache: dict[int, tuple] = {}

    def canon_of(cache, sig_cache, base, rank):
        if rank not in cache:
            lifted = build_lift(base, sig_of(sig_cache, base, rank))
            cache[rank] = canonical_form(lifted).edges
        return cache[rank]

    cond_info_g: dict[int, tuple[bool, tuple]] = {}
    compat_h: dict[int, frozenset] = {}
    if on_fixture:
        elems = gr.elements()
        for rank in range(total_g):
            sg = sig_of(sig_g_cache, g, rank)
            cond_info_g[rank] = (check_condition1(sg), _alpha(sg))
        for rank in range(total_h):
            sh = sig_of(sig_h_cache, h, rank)
            beta, gamma = _beta_gamma(sh)
            right = Counter([beta, inverse(gr, beta), gamma, inverse(gr, gamma)])
            ok = frozenset(
                a for a in elems if Counter([a, inverse(gr, a)] * 2) == right
            )
            compat_h[rank] = ok

    # Condition metadata is cheap; charpolys are not. With the filter on,
    # only ranks that can appear in a filtered result are scanned.
    if options.filter_by_theorem:
        ranks_g = [rank for rank in range(total_g) if cond_info_g[rank][0]]
        ranks_h = [rank for rank in range(total_h) if compat_h[rank]]
    else:
        ranks_g = list(range(total_g))
        ranks_h = list(range(total_h))
    rows_g = _scan_side(g, gr, ranks_g, options.jobs)
    rows_h = _scan_side(h, gr, ranks_h, options.jobs)

    by_poly: dict[tuple[int, ...], list[int]] = {}
    for rank, poly in rows_h:
        by_poly.setdefault(poly, []).append(rank)

    results: list[SearchResult] = []
    for rank_g, poly in rows_g:
        mates = by_poly.get(poly)
        if not mates:
            continue
        for rank_h in mates:
            if on_fixture:
                c1, alpha = cond_info_g[rank_g]
                cond: bool | None = c1 and alpha in compat_h[rank_h]
            else:
                cond = None
            if options.filter_by_theorem and not cond:
                continue
            if same_degrees:
                non_iso = canon_of(canon_g_cache, sig_g_cache, g, rank_g) != canon_of(
                    canon_h_cache, sig_h_cache, h, rank_h
                )
            else:
                non_iso = True
            results.append(
                SearchResult(
                    rank_g,
                    rank_h,
                    sig_of(sig_g_cache, g, rank_g),
                    sig_of(sig_h_cache, h, rank_h),
                    poly,
                    cond,
                    non_iso,
                )
            )
    return results
