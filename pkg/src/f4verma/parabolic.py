"""The maximal parabolic with M = sl(3,R) + sl(2,R) and its signatures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .exact import LinForm, SignClass, linsum, render_linform, sign_class
from .rootsys import RootSystem, RootVector
from .verma import Weight, f4_root_system, hc_param, root_basis

Side = Literal["-", "+"]

# real dimensions of the split form and its maximal compact subalgebra
DIM_F4 = 52
DIM_K = 24  # sp(3) + su(2) = 21 + 3
DIM_Q = 28
DIM_A = 1
DIM_N = 20
CONFORMAL_SHIFT = Fraction(7, 2)


class OutsideGenericRegime(ValueError):
    """Raised when a form that must be sign-definite is not."""


@dataclass(frozen=True)
class ParabolicSpec:
    """Simple roots spanning M, and the functional giving ``c`` from labels.

    ``c = -(sum_j c_weights[j] * l_j)``.
    """

    m_simple: frozenset[int] = frozenset({1, 2, 4})
    c_weights: tuple[Fraction, ...] = (Fraction(1), Fraction(1), Fraction(1), Fraction(1, 2))
    # root whose Gram pairing reproduces the c functional, for cross-checks
    c_root: RootVector = (1, 1, 2, 1)
    name: str = "sl(3,R)+sl(2,R)"

    def c_of(self, labels: tuple[LinForm, ...]) -> LinForm:
        return -linsum(k * l for k, l in zip(self.c_weights, labels))


MAXIMAL_SL3_SL2 = ParabolicSpec()


@dataclass(frozen=True)
class RootPartition:
    m_compact: tuple[RootVector, ...]
    m_noncompact: tuple[RootVector, ...]


def classify_roots(rs: RootSystem | None = None, p: ParabolicSpec = MAXIMAL_SL3_SL2) -> RootPartition:
    rs = rs or f4_root_system()
    compact = tuple(
        r for r in rs.positive if all(c == 0 for k, c in enumerate(r) if k + 1 not in p.m_simple)
    )
    noncompact = tuple(r for r in rs.positive if r not in compact)
    return RootPartition(compact, noncompact)


def _side_of(c: LinForm) -> Side:
    if c.is_constant:
        if c.const == 0:
            raise OutsideGenericRegime("c = 0")
        return "-" if c.const < 0 else "+"
    cls = sign_class(c)
    if cls is SignClass.NEGATIVE:
        return "-"
    if cls is SignClass.POSITIVE:
        return "+"
    raise OutsideGenericRegime(f"c = {c} is {cls.value}")


@dataclass(frozen=True)
class Signature:
    """Induction data {n1, n2, c, n4}.

    ``n1, n2`` are always the labels at alpha_1, alpha_2 in that order;
    ``side`` follows the sign of ``c``.
    """

    n1: LinForm
    n2: LinForm
    c: LinForm
    n4: LinForm
    side: Side = field(default="-")

    @property
    def d(self) -> LinForm:
        """Conformal weight."""
        return self.c + CONFORMAL_SHIFT

    def entries(self) -> tuple[LinForm, LinForm, LinForm, LinForm]:
        return (self.n1, self.n2, self.c, self.n4)

    def evaluate(self, assignment) -> Signature:
        n1, n2, c, n4 = (f.substitute(assignment) for f in self.entries())
        return Signature(n1, n2, c, n4, _side_of(c))

    def __str__(self) -> str:
        return "{" + ", ".join(render_linform(f) for f in self.entries()) + "}"


def make_signature(n1: LinForm, n2: LinForm, c: LinForm, n4: LinForm) -> Signature:
    return Signature(n1, n2, c, n4, _side_of(c))


def signature(w: Weight, p: ParabolicSpec = MAXIMAL_SL3_SL2) -> Signature:
    l1, l2, _, l4 = w.labels
    return make_signature(l1, l2, p.c_of(w.labels), l4)


def c_from_gram(w: Weight, p: ParabolicSpec = MAXIMAL_SL3_SL2, rs: RootSystem | None = None) -> LinForm:
    """c = -(Lambda + rho, c_root), computed through root-basis coordinates."""
    rs = rs or f4_root_system()
    coords = root_basis(w, rs)
    g = rs.data.gram
    return -linsum(
        coords[i] * g[i][j] * p.c_root[j] for i in range(4) for j in range(4)
    )


def ks_dual(s: Signature) -> Signature:
    """Knapp-Stein partner: swap the sl(3) labels and negate c."""
    return Signature(s.n2, s.n1, -s.c, s.n4, "+" if s.side == "-" else "-")


def signature_to_json(s: Signature) -> dict:
    return {
        "n1": render_linform(s.n1),
        "n2": render_linform(s.n2),
        "c": render_linform(s.c),
        "n4": render_linform(s.n4),
        "d": render_linform(s.d),
        "side": s.side,
    }


def signature_from_json(obj: dict) -> Signature:
    s = Signature(*(LinForm.parse(obj[k]) for k in ("n1", "n2", "c", "n4")), side=obj["side"])
    if _side_of(s.c) != s.side:
        raise ValueError(f"side {s.side!r} contradicts c = {s.c}")
    return s


def discrete_series_check(
    w: Weight, p: ParabolicSpec = MAXIMAL_SL3_SL2, rs: RootSystem | None = None
) -> bool:
    """True iff every M-noncompact Harish-Chandra parameter is negative.

    Raises OutsideGenericRegime if one of them has no definite sign.
    """
    rs = rs or f4_root_system()
    for beta in classify_roots(rs, p).m_noncompact:
        m = hc_param(w, beta, rs)
        if m.is_constant:
            if m.const >= 0:
                return False
            continue
        cls = sign_class(m)
        if cls is SignClass.MIXED or cls is SignClass.ZERO:
            raise OutsideGenericRegime(f"m_beta = {m} at {beta} is indeterminate")
        if cls is not SignClass.NEGATIVE:
            return False
    return True
