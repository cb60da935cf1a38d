"""Exact polynomial arithmetic.

Univariate polynomials with integer coefficients (dense), two-variable
Laurent polynomials (sparse), falling factorials, shifts, root
multiplicities and Sturm-based real-root isolation.  Rationals are plain
:class:`fractions.Fraction` values; nothing here ever touches a float.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from math import gcd
from typing import Union

Number = Union[int, Fraction]

__all__ = [
    "IntPolynomial",
    "BivarLaurent",
    "RealRoot",
    "PolynomialError",
    "poly_arith",
    "falling_factorial",
    "shift",
    "root_multiplicity",
    "has_factor",
    "apex_transform",
    "evaluate",
    "sturm_real_roots",
    "bivar_specialize",
    "LAMBDA",
]


class PolynomialError(ValueError):
    pass


class IntPolynomial:
    """Dense univariate polynomial in ``λ`` with arbitrary-precision integer
    coefficients.  ``coeffs[i]`` is the coefficient of ``λ**i``; the zero
    polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # ring operations

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _as_poly(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise PolynomialError("negative power")
        result, base = IntPolynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: Number) -> Number:
        """Exact Horner evaluation; ints stay ints, Fractions stay Fractions."""
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, c: int) -> IntPolynomial:
        """Return ``p(λ + c)`` (Taylor shift by repeated synthetic division)."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] += c * cs[j + 1]
        return IntPolynomial(cs)

    def divmod_linear(self, c: int) -> tuple[IntPolynomial, int]:
        """Synthetic division by ``(λ - c)``; returns (quotient, remainder)."""
        if not self.coeffs:
            return IntPolynomial(), 0
        q = [0] * (len(self.coeffs) - 1)
        acc = 0
        for i in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * c + self.coeffs[i]
            q[i - 1] = acc
        return IntPolynomial(q), acc * c + self.coeffs[0]

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division; requires the divisor's leading coefficient to divide
        every intermediate leading term (always true for monic divisors)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lc = other.degree, other.leading
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            t = rem[i]
            if t == 0:
                continue
            if t % lc:
                raise PolynomialError("division leaves non-integer quotient")
            t //= lc
            q[i - db] = t
            for j, c in enumerate(other.coeffs):
                rem[i - db + j] -= t * c
        return IntPolynomial(q), IntPolynomial(rem)

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise PolynomialError(f"{other} does not divide {self}")
        return q

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return self.exact_div(other)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    # text forms

    def to_text(self) -> str:
        return " ".join(["poly", str(self.degree), *map(str, self.coeffs)])

    @classmethod
    def from_text(cls, text: str) -> IntPolynomial:
        parts = text.split()
        if not parts or parts[0] != "poly":
            raise PolynomialError("expected 'poly <deg> c0 ... cdeg'")
        try:
            deg = int(parts[1])
            cs = [int(t) for t in parts[2:]]
        except (IndexError, ValueError) as exc:
            raise PolynomialError(f"malformed polynomial line: {text!r}") from exc
        if len(cs) != deg + 1 or (cs and cs[-1] == 0):
            raise PolynomialError(f"degree {deg} does not match {len(cs)} coefficients")
        return cls(cs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "λ" if i == 1 else f"λ^{i}"
                body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


LAMBDA = IntPolynomial([0, 1])


def _as_poly(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


def poly_arith(p: IntPolynomial, q: IntPolynomial, op: str) -> IntPolynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def falling_factorial(k: int) -> IntPolynomial:
    """``(λ)_k = λ(λ-1)...(λ-k+1)``, with ``(λ)_0 = 1``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return IntPolynomial.from_roots(range(k))


def shift(p: IntPolynomial, c: int) -> IntPolynomial:
    return p.shift(c)


def root_multiplicity(p: IntPolynomial, c: int) -> int:
    if p.is_zero():
        raise PolynomialError("undefined multiplicity of the zero polynomial")
    k = 0
    while True:
        q, r = p.divmod_linear(c)
        if r:
            return k
        p, k = q, k + 1


def has_factor(p: IntPolynomial, c: int, k: int) -> bool:
    """Whether ``(λ-c)**k`` divides ``p``; the zero polynomial has every factor."""
    return p.is_zero() or root_multiplicity(p, c) >= k


def apex_transform(indep_coeffs: Sequence[int], n: int) -> IntPolynomial:
    """``λ * sum_k a_k (λ-1)**(n-k)``: the polynomial clearing of
    ``λ(λ-1)^n I(G, 1/(λ-1))`` for ``I = sum a_k x^k``."""
    coeffs = list(indep_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 > n:
        raise PolynomialError("independence degree exceeds order")
    lm1 = IntPolynomial([-1, 1])
    total = IntPolynomial()
    for k, a in enumerate(coeffs):
        if a:
            total = total + (lm1 ** (n - k)) * a
    return LAMBDA * total


def evaluate(p: IntPolynomial, q: Number) -> Fraction:
    return Fraction(p(Fraction(q)))


# ---------------------------------------------------------------------------
# real roots


class RealRoot:
    """A real root isolated in the closed interval ``[lo, hi]``."""

    __slots__ = ("lo", "hi", "multiplicity")

    def __init__(self, lo: Fraction, hi: Fraction, multiplicity: int):
        self.lo, self.hi, self.multiplicity = lo, hi, multiplicity

    @property
    def exact(self) -> Fraction | None:
        return self.lo if self.lo == self.hi else None

    def contains(self, x: Number) -> bool:
        return self.lo <= x <= self.hi

    def __repr__(self) -> str:
        return f"RealRoot([{self.lo}, {self.hi}], mult={self.multiplicity})"


# Fraction-coefficient helpers; lists are ascending, no trailing zeros.

def _qtrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db, lc = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        t = a[i] / lc
        if t:
            q[i - db] = t
            for j, c in enumerate(b):
                a[i - db + j] -= t * c
    return _qtrim(q), _qtrim(a[:db] if db else [])


def _qmonic(a: list[Fraction]) -> list[Fraction]:
    lc = a[-1]
    return [c / lc for c in a]


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a)


def _qderiv(a: list[Fraction]) -> list[Fraction]:
    return _qtrim([i * c for i, c in enumerate(a)][1:])


def _qeval(a: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _square_free_parts(p: IntPolynomial) -> list[tuple[list[Fraction], int]]:
    """Yun's decomposition: ``p = c * prod f_i**i`` with squarefree, pairwise
    coprime, monic ``f_i``; returns the non-constant ``(f_i, i)``."""
    f = [Fraction(c) for c in p.coeffs]
    df = _qderiv(f)
    if not df:
        return []
    a = _qgcd(f, df)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(df, a)[0]
    d = _qtrim([x - y for x, y in _zip_pad(c, _qderiv(b))])
    parts, i = [], 1
    while len(b) > 1:
        a = _qgcd(b, d) if d else _qmonic(b)
        if len(a) > 1:
            parts.append((a, i))
        b = _qdivmod(b, a)[0]
        c = _qdivmod(d, a)[0] if d else []
        d = _qtrim([x - y for x, y in _zip_pad(c, _qderiv(b))])
        i += 1
    return parts


def _zip_pad(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    zero = Fraction(0)
    return ((a[i] if i < len(a) else zero, b[i] if i < len(b) else zero) for i in range(n))


def _sturm_chain(f: list[Fraction]) -> list[list[Fraction]]:
    chain = [f, _qderiv(f)]
    while True:
        r = _qdivmod(chain[-2], chain[-1])[1]
        if not r:
            return chain
        chain.append([-c for c in r])


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    changes, prev = 0, 0
    for g in chain:
        v = _qeval(g, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _cauchy_power_of_two(f: list[Fraction]) -> Fraction:
    bound = 1 + max(abs(c / f[-1]) for c in f[:-1]) if len(f) > 1 else Fraction(1)
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def _isolate(f: list[Fraction], width: Fraction) -> list[tuple[Fraction, Fraction]]:
    # counts use the half-open convention: roots in (lo, hi] = V(lo) - V(hi)
    chain = _sturm_chain(f)
    bound = _cauchy_power_of_two(f)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _sign_changes(chain, -bound), _sign_changes(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            if _qeval(f, hi) == 0:
                out.append((hi, hi))
                continue
            if hi - lo <= width:
                out.append((lo, hi))
                continue
        mid = (lo + hi) / 2
        vmid = _sign_changes(chain, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    return out


def sturm_real_roots(p: IntPolynomial, precision_bits: int = 32) -> list[RealRoot]:
    """Isolate every distinct real root of ``p``.

    Each root comes back as a closed rational interval of width at most
    ``2**-precision_bits`` (degenerate when the root is hit exactly) tagged
    with its multiplicity.  Sorted by position.
    """
    if p.is_zero():
        raise PolynomialError("cannot isolate roots of the zero polynomial")
    if precision_bits < 1:
        raise ValueError("precision_bits must be positive")
    width = Fraction(1, 2**precision_bits)
    roots = []
    for f, mult in _square_free_parts(p):
        roots.extend(RealRoot(lo, hi, mult) for lo, hi in _isolate(f, width))
    roots.sort(key=lambda r: r.lo)
    return roots


# ---------------------------------------------------------------------------
# two-variable Laurent polynomials


class BivarLaurent:
    """Sparse polynomial in ``x, y`` with integer coefficients; exponents may be
    negative.  A one-variable Laurent polynomial in ``λ`` is stored with every
    ``y`` exponent equal to zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            (int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c
        }

    @classmethod
    def constant(cls, c: int) -> BivarLaurent:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BivarLaurent:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivarLaurent:
        return cls({(0, 1): 1})

    @classmethod
    def laurent(cls, coeffs: Mapping[int, int]) -> BivarLaurent:
        """One-variable Laurent polynomial ``sum c * λ**e`` (stored in x)."""
        return cls({(e, 0): c for e, c in coeffs.items()})

    @property
    def is_ordinary(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: BivarLaurent | int) -> BivarLaurent:
        other = _as_bivar(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivarLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> BivarLaurent:
        return BivarLaurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BivarLaurent | int) -> BivarLaurent:
        return self + (-_as_bivar(other))

    def __rsub__(self, other: int) -> BivarLaurent:
        return _as_bivar(other) - self

    def __mul__(self, other: BivarLaurent | int) -> BivarLaurent:
        other = _as_bivar(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BivarLaurent:
        if k < 0:
            if len(self.terms) != 1:
                raise PolynomialError("negative power of a non-monomial")
            ((i, j), c), = self.terms.items()
            if abs(c) != 1:
                raise PolynomialError("negative power of a non-unit monomial")
            return BivarLaurent({(i * k, j * k): c ** (-k)})
        result, base = BivarLaurent.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivarLaurent.constant(other)
        if not isinstance(other, BivarLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __call__(self, x: Number, y: Number) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            if (x == 0 and i < 0) or (y == 0 and j < 0):
                raise ZeroDivisionError(f"term x^{i} y^{j} undefined at ({x}, {y})")
            total += c * x**i * y**j
        return total

    def substitute(self, x_sub: BivarLaurent, y_sub: BivarLaurent) -> BivarLaurent:
        """Compose: replace ``x`` by ``x_sub`` and ``y`` by ``y_sub``."""
        total = BivarLaurent()
        xp: dict[int, BivarLaurent] = {}
        yp: dict[int, BivarLaurent] = {}
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x_sub**i
            if j not in yp:
                yp[j] = y_sub**j
            total = total + xp[i] * yp[j] * c
        return total

    def to_lines(self) -> list[str]:
        return [f"t {i} {j} {c}" for (i, j), c in sorted(self.terms.items())]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> BivarLaurent:
        terms: dict[tuple[int, int], int] = {}
        for line in lines:
            parts = line.split()
            if not parts:
                continue
            if parts[0] != "t" or len(parts) != 4:
                raise PolynomialError(f"malformed term line: {line!r}")
            i, j, c = map(int, parts[1:])
            terms[(i, j)] = terms.get((i, j), 0) + c
        return cls(terms)

    def __repr__(self) -> str:
        return f"BivarLaurent({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "".join(
                s if e == 1 else f"{s}^{e}" for s, e in (("x", i), ("y", j)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_bivar(p: BivarLaurent | int) -> BivarLaurent:
    return p if isinstance(p, BivarLaurent) else BivarLaurent.constant(p)


def bivar_specialize(
    T: BivarLaurent,
    x_sub: BivarLaurent,
    y_sub: BivarLaurent,
    monomial_shift: int,
    sign: int,
) -> IntPolynomial:
    """Evaluate ``sign * λ**monomial_shift * T(x_sub, y_sub)`` where both
    substitutions are Laurent polynomials in ``λ``; the result must be an
    honest polynomial."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    val = T.substitute(x_sub, y_sub) * BivarLaurent({(monomial_shift, 0): sign})
    if any(j for _, j in val.terms):
        raise PolynomialError("substitutions must be univariate in λ")
    if any(i < 0 for i, _ in val.terms):
        raise PolynomialError("specialization not polynomial")
    deg = max((i for i, _ in val.terms), default=-1)
    cs = [0] * (deg + 1)
    for (i, _), c in val.terms.items():
        cs[i] = c
    return IntPolynomial(cs)
