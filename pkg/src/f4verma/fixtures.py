"""Transcribed signature table and its matching against a generated graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .exact import LinForm
from .multiplet import MultipletGraph, enumeration_side, symbolic_reference
from .parabolic import Side

FIXTURE_RESOURCE = "f4_signatures.txt"


class FixtureFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Reading:
    """One candidate reading of a printed line, normalised to the minus member."""

    tag: str
    n1: LinForm
    n2: LinForm
    c: LinForm
    n4: LinForm
    note: str = ""
    line: int = 0

    def minus_key(self) -> tuple[LinForm, ...]:
        return (self.n1, self.n2, self.c, self.n4)

    def plus_key(self) -> tuple[LinForm, ...]:
        # (n1, n2)^- = (n2, n1) and the Knapp-Stein sign flip of c
        return (self.n2, self.n1, -self.c, self.n4)

    def evaluate(self, params) -> Reading:
        n1, n2, c, n4 = (f.substitute(params) for f in self.minus_key())
        return Reading(self.tag, n1, n2, c, n4, self.note, self.line)


@dataclass
class FixtureEntry:
    index: str  # "k" or "k,l"
    readings: list[Reading] = field(default_factory=list)

    @property
    def k(self) -> int:
        return int(self.index.split(",")[0])

    def name(self, side: Side) -> str:
        sub = self.index if "," not in self.index and len(self.index) == 1 else "{" + self.index + "}"
        return f"χ^{side}_{sub}"


def parse_fixtures(text: str) -> list[FixtureEntry]:
    entries: dict[str, FixtureEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) not in (7, 8):
            raise FixtureFormatError(f"line {lineno}: expected 7 or 8 columns, got {len(cols)}")
        index, side, *forms, tag = cols[:7]
        note = cols[7] if len(cols) == 8 else ""
        if side not in ("-", "+"):
            raise FixtureFormatError(f"line {lineno}: side must be '-' or '+', got {side!r}")
        try:
            n1, n2, c, n4 = (LinForm.parse(f) for f in forms)
        except ValueError as exc:
            raise FixtureFormatError(f"line {lineno}: {exc}") from exc
        if side == "+":
            # printed as {(n1, n2)^-, c, n4}: the minus member has the same pair and -c
            c = -c
        entry = entries.setdefault(index, FixtureEntry(index))
        entry.readings.append(Reading(tag, n1, n2, c, n4, note, lineno))
    return list(entries.values())


def load_fixtures(path: str | Path | None = None) -> list[FixtureEntry]:
    if path is None:
        text = resources.files("f4verma.data").joinpath(FIXTURE_RESOURCE).read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_fixtures(text)


@dataclass
class EntryResult:
    entry: FixtureEntry
    confirmed: list[Reading]
    rejected: list[Reading]
    minus_node: int | None
    plus_node: int | None
    problem: str = ""

    @property
    def ok(self) -> bool:
        return not self.problem

    @property
    def reading(self) -> Reading | None:
        return self.confirmed[0] if self.confirmed else None


@dataclass
class MatchReport:
    results: list[EntryResult]
    unmatched_nodes: list[int]
    total_nodes: int
    names: dict[int, tuple[str, Side]]

    @property
    def matched(self) -> int:
        return len(self.names)

    @property
    def ok(self) -> bool:
        return (
            all(r.ok for r in self.results)
            and not self.unmatched_nodes
            and self.matched == self.total_nodes
        )

    def corrections(self) -> list[EntryResult]:
        """Entries confirmed under a reading other than the literal one."""
        return [r for r in self.results if r.reading is not None and r.reading.tag != "literal"]

    def failures(self) -> list[str]:
        out = [f"{r.entry.name('-')}: {r.problem}" for r in self.results if not r.ok]
        out += [f"node {i}: no fixture signature" for i in self.unmatched_nodes]
        return out

    def summary(self) -> str:
        return f"{self.matched}/{self.total_nodes} signatures matched"


def match_fixtures(g: MultipletGraph, entries: list[FixtureEntry]) -> MatchReport:
    """Pair every graph signature with a fixture signature.

    For concrete graphs the fixture forms are evaluated at the labels, and
    only readings confirmed on the symbolic graph are tried: special label
    values can make a rejected reading collide with another signature.
    """
    allowed = None
    if g.params is not None:
        sym = match_fixtures(symbolic_reference(g.parabolic), entries)
        allowed = {(r.entry.index, rd.line, rd.tag) for r in sym.results for rd in r.confirmed}
    by_sig: dict[tuple, int] = {n.signature.entries(): n.id for n in g.nodes}
    names: dict[int, tuple[str, Side]] = {}
    results = []
    for entry in entries:
        confirmed, rejected, hits = [], [], set()
        for rd in entry.readings:
            if allowed is not None and (entry.index, rd.line, rd.tag) not in allowed:
                rejected.append(rd)
                continue
            probe = rd if g.params is None else rd.evaluate(g.params)
            lo, hi = by_sig.get(probe.minus_key()), by_sig.get(probe.plus_key())
            if lo is not None and hi is not None and lo != hi:
                confirmed.append(rd)
                hits.add((lo, hi))
            else:
                rejected.append(rd)
        res = EntryResult(entry, confirmed, rejected, None, None)
        if not confirmed:
            shown = "; ".join(
                f"[{rd.tag}] -: {{{', '.join(map(str, rd.minus_key()))}}}"
                f" +: {{{', '.join(map(str, rd.plus_key()))}}}"
                for rd in entry.readings
            )
            res.problem = f"no reading matches a generated signature ({shown})"
        elif len(hits) > 1:
            res.problem = f"readings match different nodes {sorted(hits)}"
        else:
            lo, hi = hits.pop()
            res.minus_node, res.plus_node = lo, hi
            for node, side in ((lo, "-"), (hi, "+")):
                if node in names:
                    res.problem = f"node {node} already named {names[node][0]}"
                else:
                    names[node] = (entry.name(side), side)
        results.append(res)
    unmatched = [n.id for n in g.nodes if n.id not in names]
    return MatchReport(results, unmatched, len(g.nodes), names)


def assign_names(g: MultipletGraph, report: MatchReport) -> MultipletGraph:
    """Attach chi-style names and sides to matched nodes (in place)."""
    for n in g.nodes:
        if n.id in report.names:
            n.name, n.side = report.names[n.id]
        else:
            n.name, n.side = None, enumeration_side(n.level)
    return g
