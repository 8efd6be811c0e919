"""Exact scalars and degree-one forms in the multiplet parameters m1..m4.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with a positive denominator).  A :class:`LinForm` is
``c1*m1 + c2*m2 + c3*m3 + c4*m4 + const`` with rational coefficients.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
NPARAMS = 4

Scalar = Union[int, Fraction]


def rational(value: Scalar | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact data.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SignClass(enum.Enum):
    """Sign behaviour of a homogeneous form over all positive labels."""

    POSITIVE = "GenericPositive"
    NEGATIVE = "GenericNegative"
    ZERO = "Zero"
    MIXED = "Mixed"


@dataclass(frozen=True)
class LinForm:
    coeffs: tuple[Fraction, ...]
    const: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if len(self.coeffs) != NPARAMS:
            raise ValueError(f"expected {NPARAMS} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(rational(c) for c in self.coeffs))
        object.__setattr__(self, "const", rational(self.const))

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...], const: Fraction) -> LinForm:
        # trusted constructor for arithmetic results, skips coercion
        f = object.__new__(cls)
        object.__setattr__(f, "coeffs", coeffs)
        object.__setattr__(f, "const", const)
        return f

    @classmethod
    def basis(cls, n: int) -> LinForm:
        """The form ``m_n`` (1-based)."""
        if not 1 <= n <= NPARAMS:
            raise ValueError(f"parameter index {n} out of range")
        return cls(tuple(Fraction(int(k == n - 1)) for k in range(NPARAMS)))

    @classmethod
    def constant(cls, value: Scalar) -> LinForm:
        return cls((Fraction(0),) * NPARAMS, rational(value))

    @classmethod
    def zero(cls) -> LinForm:
        return cls.constant(0)

    @classmethod
    def parse(cls, text: str) -> LinForm:
        return parse_linform(text)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: LinForm | Scalar) -> LinForm:
        other = _as_form(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return LinForm._raw(
            (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]),
            self.const + other.const,
        )

    __radd__ = __add__

    def __neg__(self) -> LinForm:
        return LinForm._raw(tuple(-a for a in self.coeffs), -self.const)

    def __sub__(self, other: LinForm | Scalar) -> LinForm:
        other = _as_form(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LinForm:
        return (-self) + other

    def __mul__(self, other: LinForm | Scalar) -> LinForm:
        if isinstance(other, LinForm):
            # products stay degree one only when a factor is constant
            if other.is_constant:
                return self * other.const
            if self.is_constant:
                return other * self.const
            raise ValueError("product of two non-constant forms is not linear")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            k = Fraction(other)
            return LinForm._raw(tuple(a * k for a in self.coeffs), self.const * k)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: LinForm | Scalar) -> LinForm:
        if isinstance(other, LinForm):
            if not other.is_constant:
                raise ValueError("division by a non-constant form")
            other = other.const
        k = rational(other)
        if k == 0:
            raise ZeroDivisionError("division of a form by zero")
        return self * (1 / k)

    # -- queries ------------------------------------------------------

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_homogeneous(self) -> bool:
        return self.const == 0

    def basis_index(self) -> int | None:
        """Return ``n`` if this form is exactly ``m_n``, else None."""
        if self.const != 0:
            return None
        nonzero = [i for i, c in enumerate(self.coeffs) if c != 0]
        if len(nonzero) == 1 and self.coeffs[nonzero[0]] == 1:
            return nonzero[0] + 1
        return None

    def evaluate(self, assignment: Sequence[Scalar]) -> Fraction:
        if len(assignment) != NPARAMS:
            raise ValueError(f"assignment needs {NPARAMS} values")
        return self.const + sum(
            (c * rational(v) for c, v in zip(self.coeffs, assignment)), Fraction(0)
        )

    def substitute(self, assignment: Sequence[Scalar]) -> LinForm:
        return LinForm.constant(self.evaluate(assignment))

    def __str__(self) -> str:
        return render_linform(self)

    def __repr__(self) -> str:
        return f"LinForm({render_linform(self)!r})"


def _as_form(x: object) -> LinForm:
    if isinstance(x, LinForm):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LinForm.constant(x)
    return NotImplemented  # type: ignore[return-value]


def linsum(forms: Iterable[LinForm]) -> LinForm:
    total = LinForm.zero()
    for f in forms:
        total = total + f
    return total


def lincomb(scalars: Iterable[Scalar], forms: Iterable[LinForm]) -> LinForm:
    """sum_j k_j * f_j, skipping zero terms."""
    acc = [0, 0, 0, 0]
    const = 0
    for k, f in zip(scalars, forms):
        if not k:
            continue
        for i, c in enumerate(f.coeffs):
            if c:
                acc[i] += k * c
        if f.const:
            const += k * f.const
    return LinForm._raw(tuple(Fraction(x) for x in acc), Fraction(const))


def sign_class(f: LinForm) -> SignClass:
    """Classify a homogeneous form by its sign on positive labels.

    Raises ValueError for a nonzero constant term.
    """
    if f.const != 0:
        raise ValueError(f"sign_class needs a homogeneous form, got {f}")
    pos = any(c > 0 for c in f.coeffs)
    neg = any(c < 0 for c in f.coeffs)
    if pos and neg:
        return SignClass.MIXED
    if pos:
        return SignClass.POSITIVE
    if neg:
        return SignClass.NEGATIVE
    return SignClass.ZERO


# -- text form ---------------------------------------------------------


def render_linform(f: LinForm) -> str:
    """Canonical text: terms m1..m4 then the constant, e.g. ``m1+m2+1/2*m4``."""
    parts: list[str] = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = f"m{i + 1}" if mag == 1 else f"{format_rational(mag)}*m{i + 1}"
        parts.append(sign + body)
    if f.const != 0 or not parts:
        sign = "-" if f.const < 0 else "+"
        parts.append(sign + format_rational(abs(f.const)))
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<coef>\d+(?:/\d+)?)(?:\*?m(?P<idx1>\d))?
      | m(?P<idx2>\d)
    )
    """,
    re.VERBOSE,
)


def parse_linform(text: str) -> LinForm:
    """Inverse of :func:`render_linform`; also accepts ``2m1`` and spaces."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty form")
    coeffs = [Fraction(0)] * NPARAMS
    const = Fraction(0)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (pos > 0 and m.group("sign") is None):
            raise ValueError(f"cannot parse form {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        idx = m.group("idx1") or m.group("idx2")
        if idx is None:
            const += sign * coef
        else:
            i = int(idx)
            if not 1 <= i <= NPARAMS:
                raise ValueError(f"unknown parameter m{i} in {text!r}")
            coeffs[i - 1] += sign * coef
        pos = m.end()
    return LinForm(tuple(coeffs), const)


M1, M2, M3, M4 = (LinForm.basis(n) for n in range(1, NPARAMS + 1))
