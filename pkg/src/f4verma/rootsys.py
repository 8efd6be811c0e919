"""Cartan data, root generation and Weyl group action.

The algorithms take any finite-type Cartan matrix together with the half
norms ``d_i = (alpha_i, alpha_i)/2``; only F4 is wired up as a constructor.
Roots are integer vectors over the simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

RootVector = tuple[int, ...]
SATURATION_SWEEP_CAP = 100
ORBIT_CAP = 1_000_000


@dataclass(frozen=True)
class CartanData:
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    halfnorm: tuple[Fraction, ...]
    name: str = ""

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        # (alpha_i, alpha_j) = d_i * a_ij
        return tuple(
            tuple(self.halfnorm[i] * self.cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def inner(self, x: Sequence[Fraction | int], y: Sequence[Fraction | int]) -> Fraction:
        g = self.gram
        return sum(
            (x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def norm(self, x: Sequence[Fraction | int]) -> Fraction:
        return self.inner(x, x)

    def simple(self, i: int) -> RootVector:
        """Simple root alpha_i, 1-based."""
        return tuple(int(k == i - 1) for k in range(self.rank))

    def pairing(self, x: Sequence[Fraction | int], i: int) -> Fraction:
        """<x, alpha_i^vee> = 2 (x, alpha_i) / (alpha_i, alpha_i)."""
        return sum(
            (x[k] * self.cartan[i - 1][k] for k in range(self.rank)), Fraction(0)
        )


def build_f4() -> CartanData:
    return CartanData(
        rank=4,
        cartan=(
            (2, -1, 0, 0),
            (-1, 2, -1, 0),
            (0, -2, 2, -1),
            (0, 0, -1, 2),
        ),
        halfnorm=(Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 2)),
        name="F4",
    )


def root_order_key(r: RootVector) -> tuple:
    return (sum(r), r)


@dataclass(frozen=True)
class RootSystem:
    data: CartanData
    positive: tuple[RootVector, ...]
    norms: dict[RootVector, Fraction] = field(compare=False, hash=False)

    def __post_init__(self) -> None:
        coroots = {}
        for r in self.positive:
            half = self.norms[r] / 2
            k = tuple(n * d / half for n, d in zip(r, self.data.halfnorm))
            coroots[r] = k
            coroots[tuple(-x for x in r)] = tuple(-x for x in k)
        object.__setattr__(self, "_coroots", coroots)

    def __contains__(self, r: object) -> bool:
        return r in self.norms or (
            isinstance(r, tuple) and tuple(-x for x in r) in self.norms
        )

    def __len__(self) -> int:
        return len(self.positive)

    @property
    def all_roots(self) -> tuple[RootVector, ...]:
        return self.positive + tuple(tuple(-x for x in r) for r in self.positive)

    def long_roots(self) -> tuple[RootVector, ...]:
        top = max(self.norms.values())
        return tuple(r for r in self.positive if self.norms[r] == top)

    def short_roots(self) -> tuple[RootVector, ...]:
        top = max(self.norms.values())
        return tuple(r for r in self.positive if self.norms[r] != top)

    def is_long(self, r: RootVector) -> bool:
        return self.data.norm(r) == max(self.norms.values())


def simple_reflection(data: CartanData, i: int, beta: Sequence[int]) -> RootVector:
    """s_i(beta) = beta - <beta, alpha_i^vee> alpha_i."""
    if not 1 <= i <= data.rank:
        raise ValueError(f"simple root index {i} out of range")
    p = data.pairing(beta, i)
    out = list(beta)
    out[i - 1] -= p
    return tuple(int(x) for x in out)


def positive_roots(data: CartanData, simple_subset: Iterable[int] | None = None) -> RootSystem:
    """Saturate the simple roots under simple reflections.

    Reflections that leave the positive cone (only s_i(alpha_i)) are
    dropped.  Raises RuntimeError if no fixed point is reached within
    ``SATURATION_SWEEP_CAP`` sweeps.
    """
    idx = sorted(set(simple_subset)) if simple_subset is not None else list(
        range(1, data.rank + 1)
    )
    found = {data.simple(i) for i in idx}
    frontier = set(found)
    for _ in range(SATURATION_SWEEP_CAP):
        new = set()
        for r in frontier:
            for i in idx:
                s = simple_reflection(data, i, r)
                if all(x >= 0 for x in s) and any(s) and s not in found:
                    new.add(s)
        if not new:
            break
        found |= new
        frontier = new
    else:
        raise RuntimeError("root saturation did not terminate; Cartan data not of finite type?")
    positive = tuple(sorted(found, key=root_order_key))
    return RootSystem(data, positive, {r: data.norm(r) for r in positive})


def _require_root(rs: RootSystem, beta: Sequence[int]) -> RootVector:
    b = tuple(int(x) for x in beta)
    if b not in rs:
        raise ValueError(f"{b} is not a root of {rs.data.name or 'the root system'}")
    return b


def coroot_coords(rs: RootSystem, beta: Sequence[int]) -> tuple[Fraction, ...]:
    """Coordinates of beta^vee over the simple coroots."""
    k = rs._coroots.get(tuple(beta))  # type: ignore[attr-defined]
    if k is None:
        _require_root(rs, beta)
    return k


def weyl_order(data: CartanData, simple_subset: Iterable[int] | None = None) -> int:
    """Order of the (parabolic) Weyl group, by orbit enumeration of rho.

    rho pairs to 1 with every simple coroot, so it is regular and its
    orbit is in bijection with the group.
    """
    idx = sorted(set(simple_subset)) if simple_subset is not None else list(
        range(1, data.rank + 1)
    )
    # vectors are kept in the fundamental-weight basis: coordinates are the
    # pairings with the simple coroots
    start = tuple(1 for _ in range(data.rank))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in idx:
                w = _reflect_weight(data, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > ORBIT_CAP:
                        raise RuntimeError("Weyl orbit exceeds enumeration cap")
        frontier = nxt
    return len(seen)


def _reflect_weight(data: CartanData, i: int, v: tuple) -> tuple:
    # in fundamental-weight coordinates: v'_j = v_j - v_i * a_ji
    vi = v[i - 1]
    return tuple(v[j] - vi * data.cartan[j][i - 1] for j in range(data.rank))


def subsystem(rs: RootSystem, simple_subset: Iterable[int]) -> RootSystem:
    """Positive roots supported on the chosen simple roots."""
    keep = set(simple_subset)
    if not keep <= set(range(1, rs.data.rank + 1)):
        raise ValueError(f"bad simple subset {sorted(keep)}")
    pos = tuple(
        r for r in rs.positive if all(c == 0 for k, c in enumerate(r) if k + 1 not in keep)
    )
    return RootSystem(rs.data, pos, {r: rs.norms[r] for r in pos})


# -- orthonormal model of F4 -------------------------------------------

F4_SIMPLE_EPSILON: tuple[tuple[Fraction, ...], ...] = (
    (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
)


def epsilon_coords(beta: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Image of a simple-root-basis vector in the eps_1..eps_4 basis of F4."""
    return tuple(
        sum((beta[i] * F4_SIMPLE_EPSILON[i][k] for i in range(4)), Fraction(0))
        for k in range(4)
    )


def epsilon_inner(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


# -- export --------------------------------------------------------------


def roots_to_json(rs: RootSystem) -> list[dict]:
    from .exact import format_rational

    top = max(rs.norms.values())
    return [
        {
            "coords": list(r),
            "norm": format_rational(rs.norms[r]),
            "length_class": "long" if rs.norms[r] == top else "short",
            "epsilon": [format_rational(x) for x in epsilon_coords(r)],
        }
        for r in rs.positive
    ]


def roots_from_json(records: list[dict], data: CartanData | None = None) -> RootSystem:
    data = data or build_f4()
    positive = tuple(tuple(int(x) for x in rec["coords"]) for rec in records)
    norms = {r: Fraction(rec["norm"]) for r, rec in zip(positive, records)}
    for r, q in norms.items():
        if data.norm(r) != q:
            raise ValueError(f"stored norm {q} of {r} disagrees with the Cartan data")
    return RootSystem(data, positive, norms)
