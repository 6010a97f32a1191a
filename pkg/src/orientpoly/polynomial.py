"""Exact univariate and bivariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContractViolation, InterpolationInconsistencyError


def _frac(c) -> Fraction:
    if isinstance(c, str):
        return Fraction(c.strip())
    return Fraction(c)


def format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RationalPolynomial:
    """Polynomial with :class:`~fractions.Fraction` coefficients, low degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        self.coeffs = _trim([_frac(c) for c in coeffs])
        self.var = var

    @classmethod
    def constant(cls, c, var="t"):
        return cls([c], var)

    @classmethod
    def variable(cls, var="t"):
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1, var="t"):
        p = cls([lead], var)
        for a in roots:
            p = p * cls([-_frac(a), 1], var)
        return p

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = RationalPolynomial([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Exact Horner evaluation at an int/Fraction (or another polynomial)."""
        acc = 0 if not isinstance(x, RationalPolynomial) else RationalPolynomial([], x.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(acc, RationalPolynomial) else Fraction(acc)

    def compose_linear(self, a, b) -> RationalPolynomial:
        """Substitute ``t -> a*t + b``."""
        return self(RationalPolynomial([b, a], self.var))

    def negate_variable(self) -> RationalPolynomial:
        """``p(-t)``."""
        return RationalPolynomial([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.var)

    def shift(self, c) -> RationalPolynomial:
        """``p(t + c)``."""
        return self.compose_linear(1, c)

    def integer_coefficients(self) -> list[int] | None:
        if all(c.denominator == 1 for c in self.coeffs):
            return [int(c) for c in self.coeffs]
        return None

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> RationalPolynomial:
        return cls([_frac(c) for c in data["coeffs"]], data.get("var", "t"))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_fraction(mag)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                body = mono if mag == 1 else f"{format_fraction(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"RationalPolynomial({[format_fraction(c) for c in self.coeffs]!r}, var={self.var!r})"


def interpolate(points: Sequence[tuple[int, int]], degree: int, var: str = "t") -> RationalPolynomial:
    """Exact interpolating polynomial of degree at most ``degree``.

    The first ``degree + 1`` distinct arguments determine the polynomial
    (Newton divided differences); every remaining point must then agree,
    otherwise :class:`InterpolationInconsistencyError` is raised.
    """
    seen: dict[Fraction, Fraction] = {}
    for x, y in points:
        x, y = _frac(x), _frac(y)
        if x in seen and seen[x] != y:
            raise InterpolationInconsistencyError(f"two values given at argument {x}")
        seen[x] = y
    nodes = list(seen.items())
    if len(nodes) < degree + 1:
        raise ContractViolation(f"need {degree + 1} distinct arguments, got {len(nodes)}")
    base = nodes[: degree + 1]
    xs = [x for x, _ in base]
    dd = [y for _, y in base]
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    p = RationalPolynomial([dd[-1]], var)
    for i in range(len(xs) - 2, -1, -1):
        p = p * RationalPolynomial([-xs[i], 1], var) + dd[i]
    for x, y in nodes[degree + 1:]:
        if p(x) != y:
            raise InterpolationInconsistencyError(
                f"value {y} at {x} disagrees with degree-{degree} fit {p(x)}"
            )
    return p


class BivariatePolynomial:
    """Rational polynomial in ``x`` and ``y``; ``coeffs[i][j]`` multiplies ``x^i y^j``."""

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs: Iterable[Iterable] = (), vars=("x", "y")):
        self.coeffs = self._canon(coeffs)
        self.vars = tuple(vars)

    @staticmethod
    def _canon(coeffs) -> tuple[tuple[Fraction, ...], ...]:
        rows = [[_frac(c) for c in row] for row in coeffs]
        width = max((len(r) for r in rows), default=0)
        rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
        while rows and all(c == 0 for c in rows[-1]):
            rows.pop()
        while rows and all(r[-1] == 0 for r in rows):
            rows = [r[:-1] for r in rows]
        return tuple(tuple(r) for r in rows)

    @classmethod
    def from_terms(cls, terms: dict) -> BivariatePolynomial:
        if not terms:
            return cls()
        dx = max(i for i, _ in terms) + 1
        dy = max(j for _, j in terms) + 1
        rows = [[0] * dy for _ in range(dx)]
        for (i, j), c in terms.items():
            rows[i][j] += c
        return cls(rows)

    def terms(self) -> dict:
        return {(i, j): c for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c}

    def __add__(self, other):
        t = self.terms()
        for k, c in other.terms().items():
            t[k] = t.get(k, 0) + c
        return BivariatePolynomial.from_terms(t)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial.from_terms({k: c * other for k, c in self.terms().items()})
        out: dict = {}
        for (i, j), a in self.terms().items():
            for (k, l), b in other.terms().items():
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + a * b
        return BivariatePolynomial.from_terms(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x, y) -> Fraction:
        return sum((c * Fraction(x) ** i * Fraction(y) ** j for (i, j), c in self.terms().items()), Fraction(0))

    def at_y(self, y, var: str | None = None) -> RationalPolynomial:
        """Univariate polynomial in ``x`` after fixing ``y``."""
        y = _frac(y)
        return RationalPolynomial(
            [sum((c * y ** j for j, c in enumerate(row)), Fraction(0)) for row in self.coeffs],
            var or self.vars[0],
        )

    def at_x(self, x, var: str | None = None) -> RationalPolynomial:
        x = _frac(x)
        width = len(self.coeffs[0]) if self.coeffs else 0
        return RationalPolynomial(
            [sum((row[j] * x ** i for i, row in enumerate(self.coeffs)), Fraction(0)) for j in range(width)],
            var or self.vars[1],
        )

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "coeffs": [[format_fraction(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> BivariatePolynomial:
        return cls(data["coeffs"], data.get("vars", ("x", "y")))

    def __str__(self):
        t = self.terms()
        if not t:
            return "0"
        x, y = self.vars
        parts = []
        for (i, j) in sorted(t, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = t[(i, j)]
            mono = "*".join(
                s for s in (
                    (x if i == 1 else f"{x}^{i}") if i else "",
                    (y if j == 1 else f"{y}^{j}") if j else "",
                ) if s
            )
            mag = abs(c)
            body = (format_fraction(mag) if not mono else (mono if mag == 1 else f"{format_fraction(mag)}*{mono}"))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self):
        return f"BivariatePolynomial({str(self)!r})"
