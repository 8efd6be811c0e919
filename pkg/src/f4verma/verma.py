"""Weights in the Lambda+rho convention and the shifted Weyl action.

A :class:`Weight` is stored only through its Dynkin labels
``l_j = (Lambda + rho, alpha_j^vee)``, each a :class:`LinForm`.  Everything
else (Harish-Chandra parameters, reflections, root-basis coordinates)
is linear in these labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import LinForm, SignClass, format_rational, lincomb, render_linform, sign_class
from .rootsys import RootSystem, RootVector, build_f4, coroot_coords, positive_roots


@lru_cache(maxsize=None)
def f4_root_system() -> RootSystem:
    return positive_roots(build_f4())


class AssignmentDependent(ValueError):
    """A Harish-Chandra form whose sign depends on the label values."""

    def __init__(self, form: LinForm, root: RootVector):
        super().__init__(f"m_beta = {form} at beta = {root} has mixed sign")
        self.form = form
        self.root = root


@dataclass(frozen=True)
class Weight:
    labels: tuple[LinForm, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != 4:
            raise ValueError("a weight needs 4 labels")

    @classmethod
    def top(cls) -> Weight:
        """Symbolic top weight with labels (m1, m2, m3, m4)."""
        return cls(tuple(LinForm.basis(n) for n in range(1, 5)))

    @classmethod
    def rho(cls) -> Weight:
        return cls.concrete((1, 1, 1, 1))

    @classmethod
    def concrete(cls, values: Sequence[int | Fraction]) -> Weight:
        return cls(tuple(LinForm.constant(v) for v in values))

    @property
    def is_concrete(self) -> bool:
        return all(f.is_constant for f in self.labels)

    def evaluate(self, assignment: Sequence[int | Fraction]) -> Weight:
        return Weight(tuple(f.substitute(assignment) for f in self.labels))

    def values(self) -> tuple[Fraction, ...]:
        if not self.is_concrete:
            raise ValueError("symbolic weight has no numeric labels")
        return tuple(f.const for f in self.labels)

    def __str__(self) -> str:
        return "(" + ", ".join(render_linform(f) for f in self.labels) + ")"


def hc_param(w: Weight, beta: Sequence[int], rs: RootSystem | None = None) -> LinForm:
    """m_beta = (Lambda + rho, beta^vee) as a form in the labels."""
    rs = rs or f4_root_system()
    return lincomb(coroot_coords(rs, beta), w.labels)


def _inverse_cartan(rs: RootSystem) -> list[list[Fraction]]:
    n = rs.data.rank
    a = [[Fraction(rs.data.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular Cartan matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def root_basis(w: Weight, rs: RootSystem | None = None) -> tuple[LinForm, ...]:
    """Coordinates of Lambda+rho over the simple roots.

    Solves ``l_j = sum_i c_i <alpha_i, alpha_j^vee> = (A c)_j``.
    """
    rs = rs or f4_root_system()
    inv = _inverse_cartan(rs)
    return tuple(lincomb(inv[i], w.labels) for i in range(4))


def rho_in_root_basis(rs: RootSystem | None = None) -> tuple[Fraction, ...]:
    return tuple(f.const for f in root_basis(Weight.rho(), rs))


def reducibility_degree(
    w: Weight,
    beta: Sequence[int],
    assignment: Sequence[int] | None = None,
    rs: RootSystem | None = None,
) -> LinForm | int | None:
    """Degree m of the embedding along beta, or None when irreducible along beta.

    Symbolic mode returns the form m_beta when it is a positive integer for
    every positive-integer assignment; a mixed-sign form raises
    :class:`AssignmentDependent`.  With ``assignment`` (or a concrete
    weight) the evaluated value is returned if it is a positive integer.
    """
    m = hc_param(w, beta, rs)
    if assignment is not None:
        m = m.substitute(assignment)
    if m.is_constant:
        v = m.const
        return int(v) if v > 0 and v.denominator == 1 else None
    cls = sign_class(m)
    if cls is SignClass.MIXED:
        raise AssignmentDependent(m, tuple(beta))
    if cls is SignClass.POSITIVE and all(c.denominator == 1 for c in m.coeffs):
        return m
    return None


def shifted_reflect(w: Weight, beta: Sequence[int], rs: RootSystem | None = None) -> Weight:
    """Labels of s_beta(Lambda + rho): l'_j = l_j - m_beta <beta, alpha_j^vee>."""
    rs = rs or f4_root_system()
    m = hc_param(w, beta, rs)
    return Weight(
        tuple(
            lincomb((1, -rs.data.pairing(beta, j + 1)), (l, m))
            for j, l in enumerate(w.labels)
        )
    )


def weight_to_json(w: Weight, rs: RootSystem | None = None) -> dict:
    out: dict = {"labels": [render_linform(f) for f in w.labels]}
    if w.is_concrete:
        rho = rho_in_root_basis(rs)
        lam = [c.const - r for c, r in zip(root_basis(w, rs), rho)]
        out["root_basis"] = [format_rational(x) for x in lam]
    return out


def weight_from_json(obj: dict) -> Weight:
    return Weight(tuple(LinForm.parse(s) for s in obj["labels"]))
