"""End-to-end consistency checks behind ``f4verma verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from .exact import SignClass, sign_class
from .fixtures import assign_names, load_fixtures, match_fixtures
from .multiplet import (
    MultipletGraph,
    arrow_labels,
    generate,
    is_weakly_connected,
    ks_pairing,
    orbit_quotient_oracle,
)
from .parabolic import MAXIMAL_SL3_SL2, classify_roots, discrete_series_check, ks_dual
from .rootsys import epsilon_coords, weyl_order
from .verma import f4_root_system, hc_param, rho_in_root_basis

# root lists as printed for F4, simple-root coordinates
REFERENCE_LONG_ROOTS = {
    (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 1, 2, 0), (1, 1, 2, 0), (1, 2, 2, 0),
    (0, 1, 2, 2), (1, 1, 2, 2), (1, 2, 2, 2), (1, 2, 4, 2), (1, 3, 4, 2), (2, 3, 4, 2),
}
REFERENCE_SHORT_ROOTS = {
    (0, 0, 1, 0), (0, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1), (1, 1, 1, 0), (0, 1, 1, 1),
    (1, 1, 1, 1), (0, 1, 2, 1), (1, 2, 2, 1), (1, 1, 2, 1), (1, 2, 3, 1), (1, 2, 3, 2),
}
EXPECTED_LEVELS = [1, 1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 8, 7, 7, 6, 5, 4, 3, 2, 1, 1]
EXPECTED_RHO = (8, 15, 21, 11)
EXPECTED_WEYL = 1152


def f4_epsilon_positive_set() -> set[tuple[Fraction, ...]]:
    """The positive roots written directly in the orthonormal basis."""
    out: set[tuple[Fraction, ...]] = set()
    unit = [tuple(Fraction(int(k == i)) for k in range(4)) for i in range(4)]
    out.update(unit)
    for j in range(4):
        for k in range(j + 1, 4):
            for s in (1, -1):
                out.add(tuple(unit[j][t] + s * unit[k][t] for t in range(4)))
    half = Fraction(1, 2)
    for s2 in (1, -1):
        for s3 in (1, -1):
            for s4 in (1, -1):
                out.add((half, s2 * half, s3 * half, s4 * half))
    return out


@dataclass
class Check:
    name: str
    passed: bool
    detail: str


def _check(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except (KeyError, ValueError) as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, ok, detail)


def run_checks(
    labels: Sequence[int] | None = None, fixtures_path: str | Path | None = None
) -> tuple[list[Check], MultipletGraph]:
    rs = f4_root_system()
    p = MAXIMAL_SL3_SL2
    checks: list[Check] = []

    def roots():
        longs, shorts = set(rs.long_roots()), set(rs.short_roots())
        eps = {epsilon_coords(r) for r in rs.positive}
        ok = (
            len(rs.positive) == 24
            and longs == REFERENCE_LONG_ROOTS
            and shorts == REFERENCE_SHORT_ROOTS
            and eps == f4_epsilon_positive_set()
        )
        return ok, f"{len(rs.positive)} ({len(longs)} long, {len(shorts)} short); epsilon images {'equal' if eps == f4_epsilon_positive_set() else 'differ'}"

    checks.append(_check("root system", roots))

    def rho():
        got = rho_in_root_basis(rs)
        return got == EXPECTED_RHO, "rho = " + str(tuple(int(x) if x.denominator == 1 else x for x in got))

    checks.append(_check("rho", rho))

    def weyl():
        w, a2, a1 = weyl_order(rs.data), weyl_order(rs.data, {1, 2}), weyl_order(rs.data, {4})
        return (w, a2, a1) == (EXPECTED_WEYL, 6, 2), f"|W|={w}; |W(A2)|={a2}; |W(A1)|={a1}"

    checks.append(_check("weyl order", weyl))

    def parab():
        part = classify_roots(rs, p)
        ok = set(part.m_compact) == {(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1)}
        ok = ok and len(part.m_noncompact) == 20
        return ok, f"{len(part.m_compact)} M-compact, {len(part.m_noncompact)} M-noncompact"

    checks.append(_check("parabolic", parab))

    g = generate(None, p, rs)
    entries = load_fixtures(fixtures_path)
    report = match_fixtures(g, entries)
    assign_names(g, report)

    def size():
        hist = g.level_histogram()
        return len(g.nodes) == 96 and hist == EXPECTED_LEVELS, f"{len(g.nodes)} nodes; levels {hist}"

    checks.append(_check("multiplet size", size))

    def oracle():
        orb = orbit_quotient_oracle(p, rs)
        equal = orb == {n.weight for n in g.nodes}
        return equal and len(orb) == 96, f"oracle set {'equal' if equal else 'differs'} ({len(orb)} = {EXPECTED_WEYL}/12)"

    checks.append(_check("orbit oracle", oracle))

    def fixtures():
        detail = report.summary()
        fixes = [f"{r.entry.index}->{r.reading.tag}" for r in report.corrections()]
        if fixes:
            detail += "; corrections confirmed: " + ", ".join(fixes)
        if not report.ok:
            detail += "; unmatched: " + " | ".join(report.failures())
        return report.ok, detail

    checks.append(_check("fixtures", fixtures))

    def ks():
        pairs = ks_pairing(g)
        lv = {n.id: n.level for n in g.nodes}
        ok = len(pairs) == 48 and all(lv[a] + lv[b] == 20 for a, b in pairs)
        return ok, f"{len(pairs)} KS pairs, levels sum to 20: {ok}"

    checks.append(_check("ks duality", ks))

    def arrows():
        rep = arrow_labels(g)
        labels_ok = all(
            e.arrow_level in (1, 2, 3, 4) and e.degree == hc_param(g.nodes[e.src].weight, e.root)
            for e in rep.labeled
        )
        conn = is_weakly_connected(g)
        return rep.ok and labels_ok and conn, (
            f"{len(rep.labeled)} diagram edges, {len(rep.violations)} level violations, connected: {conn}"
        )

    checks.append(_check("arrows", arrows))

    def definite():
        for n in g.nodes:
            for beta in rs.positive:
                if sign_class(hc_param(n.weight, beta, rs)) not in (SignClass.POSITIVE, SignClass.NEGATIVE):
                    return False, f"node {n.id} at {beta}"
        return True, "all Harish-Chandra forms sign-definite"

    checks.append(_check("sign definiteness", definite))

    def conformal():
        top = g.node_by_name("χ^-_0")
        dual = g.node_by_name("χ^+_0")
        if ks_dual(top.signature) != dual.signature:
            return False, "χ^+_0 is not the KS dual of χ^-_0"
        ds = discrete_series_check(dual.weight, p, rs)
        parts = [f"noncompact entries of χ^+_0 negative: {ds}"]
        ok = ds and not discrete_series_check(top.weight, p, rs)
        at = tuple(labels) if labels is not None else (1, 1, 1, 1)
        d_minus = top.signature.d.evaluate(at)
        d_plus = dual.signature.d.evaluate(at)
        if at == (1, 1, 1, 1):
            ok = ok and d_minus == 0 and d_plus == 7
        ok = ok and d_minus + d_plus == 7
        parts.append(f"d(χ^-_0)={d_minus}, d(χ^+_0)={d_plus} at {list(at)}")
        return ok, "; ".join(parts)

    checks.append(_check("conformal weight", conformal))

    if labels is not None:
        def concrete():
            gc = generate(labels, p, rs)
            rc = match_fixtures(gc, entries)
            same = len(gc.nodes) == 96 and len(gc.diagram_edges) == len(g.diagram_edges)
            return same and rc.ok, f"labels {list(labels)}: {len(gc.nodes)} nodes, {rc.summary()}"

        checks.append(_check("concrete labels", concrete))

    return checks, g


def summary_line(checks: list[Check]) -> str:
    by = {c.name: c for c in checks}
    parts = []
    if "fixtures" in by:
        parts.append(by["fixtures"].detail.split(";")[0])
    if "orbit oracle" in by:
        parts.append("oracle set equal" if by["orbit oracle"].passed else "oracle set differs")
    if "weyl order" in by:
        parts.append(by["weyl order"].detail.split(";")[0])
    return "; ".join(parts)
