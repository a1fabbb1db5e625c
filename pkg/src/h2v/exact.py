"""Exact bivariate polynomial algebra over the Gaussian rationals.

Every algebraic identity satisfied by the holomorphic Hermite polynomials
``H_{m,n}`` (and by their real-variable companions ``H^nat_{m,n}``) is
checked here as an equality of polynomials, coefficient by coefficient, with
no floating point anywhere.

Polynomials are sparse maps ``(e1, e2) -> GaussianRational`` in the
indeterminates ``X1, X2``.  Univariate polynomials (1D Hermite, Laguerre)
are plain tuples of :class:`fractions.Fraction`, lowest degree first.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from numbers import Rational
from typing import Iterable, Iterator, Mapping

__all__ = [
    "GaussianRational",
    "BiPoly",
    "ExpWeightedPoly",
    "I",
    "bipoly_arith",
    "bipoly_diff",
    "bipoly_subst_linear",
    "hermite_exact_direct",
    "hermite_exact_recurrence",
    "hermite_exact_via_1d",
    "hermite1d_exact",
    "laguerre_exact",
    "compose_univariate",
    "natural_hermite_exact",
    "check_natural_link",
    "rodrigues_exact",
    "raising_lowering_exact",
    "laguerre_identity_exact",
    "coefficient_identity",
    "coefficient_sum",
]


class GaussianRational:
    """Exact complex rational ``(a + b*i) / d``.

    Stored with one shared positive denominator ``d`` and
    ``gcd(a, b, d) == 1``; the per-part fractions (``re``, ``im`` and their
    numerators/denominators) are derived and always in lowest terms.
    Instances are treated as immutable.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._a = re.numerator * (d // re.denominator)
        self._b = im.numerator * (d // im.denominator)
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        # d > 0 assumed; reduce by the common gcd
        if d != 1:
            g = gcd(a, b, d)
            if g != 1:
                a //= g
                b //= g
                d //= g
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        """Convert ints, rationals, floats and complex numbers exactly."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, (Rational, float)):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @classmethod
    def i_power(cls, k: int) -> "GaussianRational":
        return _I_POWERS[k % 4]

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    def is_real(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        """True for Gaussian integers."""
        return self._d == 1

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, d1)
        return GaussianRational._raw(
            self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, int):
                return GaussianRational._raw(self._a * other, self._b * other, self._d)
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return GaussianRational._raw(
            a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        a, b, d = other._a, other._b, other._d
        norm = a * a + b * b
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        # 1/((a+bi)/d) = d (a - bi) / (a^2 + b^2)
        inv = GaussianRational._raw(d * a, -d * b, norm)
        return self * inv

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational._raw(1, 0, 1) / self ** (-k)
        result = GaussianRational._raw(1, 0, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        return hash((self._a, self._b, self._d))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self._b == 0:
            return str(self.re)
        if self._a == 0:
            return f"{self.im}i"
        sign = "-" if self._b < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)
_I_POWERS = (ONE, I, GaussianRational._raw(-1, 0, 1), GaussianRational._raw(0, -1, 1))


def _glex(key):
    e1, e2 = key
    return (e1 + e2, e1)


class BiPoly:
    """Sparse polynomial in ``X1, X2`` with Gaussian-rational coefficients.

    Zero coefficients are never stored and iteration runs in graded-lex
    order (total degree, then exponent of ``X1``), so equal polynomials
    print and serialize identically.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (e1, e2), c in (terms or {}).items():
            if e1 < 0 or e2 < 0:
                raise ValueError(f"negative exponent in {(e1, e2)}")
            c = GaussianRational.coerce(c)
            if c:
                clean[(int(e1), int(e2))] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: _glex(kv[0])))

    @classmethod
    def _from_clean(cls, terms: dict) -> "BiPoly":
        obj = object.__new__(cls)
        obj._terms = dict(sorted(((k, v) for k, v in terms.items() if v), key=lambda kv: _glex(kv[0])))
        return obj

    @classmethod
    def const(cls, c=1) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> "BiPoly":
        return cls({(e1, e2): c})

    @classmethod
    def x1(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def x2(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._from_clean({})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], GaussianRational]]:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, e1: int, e2: int) -> GaussianRational:
        return self._terms.get((e1, e2), ZERO)

    @property
    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((e1 + e2 for e1, e2 in self._terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __neg__(self):
        return BiPoly._from_clean({k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out[k] + v if k in out else v
        return BiPoly._from_clean(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            try:
                c = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
            return BiPoly._from_clean({k: v * c for k, v in self._terms.items()})
        out: dict = {}
        for (a1, a2), u in self._terms.items():
            for (b1, b2), v in other._terms.items():
                k = (a1 + b1, a2 + b2)
                p = u * v
                out[k] = out[k] + p if k in out else p
        return BiPoly._from_clean(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, var: str) -> "BiPoly":
        """Formal partial derivative in ``"z1"`` (first slot) or ``"z2"``."""
        idx = _var_index(var)
        out = {}
        for (e1, e2), c in self._terms.items():
            e = (e1, e2)[idx]
            if e == 0:
                continue
            key = (e1 - 1, e2) if idx == 0 else (e1, e2 - 1)
            out[key] = c * e
        return BiPoly._from_clean(out)

    def subst(self, l1: "BiPoly", l2: "BiPoly") -> "BiPoly":
        """Composition ``p(l1(Y1, Y2), l2(Y1, Y2))``."""
        l1 = l1 if isinstance(l1, BiPoly) else BiPoly.const(l1)
        l2 = l2 if isinstance(l2, BiPoly) else BiPoly.const(l2)
        max1 = max((e1 for e1, _ in self._terms), default=0)
        max2 = max((e2 for _, e2 in self._terms), default=0)
        pow1 = [BiPoly.const(1)]
        for _ in range(max1):
            pow1.append(pow1[-1] * l1)
        pow2 = [BiPoly.const(1)]
        for _ in range(max2):
            pow2.append(pow2[-1] * l2)
        out: dict = {}
        for (e1, e2), c in self._terms.items():
            for (b1, b2), u in pow1[e1]._terms.items():
                uc = u * c
                for (d1, d2), v in pow2[e2]._terms.items():
                    k = (b1 + d1, b2 + d2)
                    p = uc * v
                    out[k] = out[k] + p if k in out else p
        return BiPoly._from_clean(out)

    def swap(self) -> "BiPoly":
        """Exchange the roles of ``X1`` and ``X2``."""
        return BiPoly._from_clean({(e2, e1): c for (e1, e2), c in self._terms.items()})

    def evaluate(self, z1, z2) -> GaussianRational:
        """Exact value at a point; floats are converted exactly first."""
        z1 = GaussianRational.coerce(z1)
        z2 = GaussianRational.coerce(z2)
        # Horner in X2 inside Horner in X1
        rows: dict[int, dict[int, GaussianRational]] = {}
        for (e1, e2), c in self._terms.items():
            rows.setdefault(e1, {})[e2] = c
        total = ZERO
        for e1 in range(max(rows, default=0), -1, -1):
            row = rows.get(e1, {})
            inner = ZERO
            for e2 in range(max(row, default=0), -1, -1):
                inner = inner * z2 + row.get(e2, ZERO)
            total = total * z1 + inner
        return total

    def __call__(self, z1, z2) -> GaussianRational:
        return self.evaluate(z1, z2)

    def to_dict(self) -> dict:
        return {
            "terms": [
                {
                    "e1": e1,
                    "e2": e2,
                    "re": f"{c.re.numerator}/{c.re.denominator}",
                    "im": f"{c.im.numerator}/{c.im.denominator}",
                }
                for (e1, e2), c in self._terms.items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "BiPoly":
        terms = {}
        for t in data["terms"]:
            terms[(int(t["e1"]), int(t["e2"]))] = GaussianRational(Fraction(t["re"]), Fraction(t["im"]))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        if not self._terms:
            return "BiPoly(0)"
        parts = []
        for (e1, e2), c in self._terms.items():
            mono = "*".join(
                s for s in (_pow_str("X1", e1), _pow_str("X2", e2)) if s
            )
            coef = f"({c})" if mono else f"({c})"
            parts.append(f"{coef}*{mono}" if mono else coef)
        return "BiPoly(" + " + ".join(parts) + ")"


def _pow_str(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _var_index(var: str) -> int:
    if var in ("z1", "x1", "X1", 1):
        return 0
    if var in ("z2", "x2", "X2", 2):
        return 1
    raise ValueError(f"unknown variable {var!r}; expected 'z1' or 'z2'")


def bipoly_arith(a: BiPoly, b: BiPoly, op: str) -> BiPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unsupported op {op!r}")


def bipoly_diff(p: BiPoly, var: str) -> BiPoly:
    return p.diff(var)


def bipoly_subst_linear(p: BiPoly, l1: BiPoly, l2: BiPoly) -> BiPoly:
    """Substitute linear forms in ``(Y1, Y2)`` for ``X1`` and ``X2``."""
    for name, form in (("l1", l1), ("l2", l2)):
        if isinstance(form, BiPoly) and form.total_degree > 1:
            raise ValueError(f"{name} is not a linear form (degree {form.total_degree})")
    return p.subst(l1, l2)


class ExpWeightedPoly:
    """The object ``poly * exp(sign * z1 * z2)`` with ``sign`` in ``{+1, -1}``.

    Closed under both partial derivatives, which is all the Rodrigues-type
    identities need.
    """

    __slots__ = ("poly", "weight_sign")

    def __init__(self, poly: BiPoly, weight_sign: int = -1):
        if weight_sign not in (1, -1):
            raise ValueError("weight_sign must be +1 or -1")
        self.poly = poly if isinstance(poly, BiPoly) else BiPoly.const(poly)
        self.weight_sign = weight_sign

    def diff(self, var: str, times: int = 1) -> "ExpWeightedPoly":
        idx = _var_index(var)
        other = BiPoly.x2() if idx == 0 else BiPoly.x1()
        p = self.poly
        for _ in range(times):
            # d/dz1 (P e^{s z1 z2}) = (dP/dz1 + s z2 P) e^{s z1 z2}
            p = p.diff(var) + other * p * self.weight_sign
        return ExpWeightedPoly(p, self.weight_sign)

    def __mul__(self, c):
        if isinstance(c, ExpWeightedPoly):
            raise TypeError("product of two weighted objects changes the weight")
        return ExpWeightedPoly(self.poly * c, self.weight_sign)

    __rmul__ = __mul__

    def __add__(self, other: "ExpWeightedPoly"):
        if other.weight_sign != self.weight_sign:
            raise ValueError("cannot add objects with different exponential weights")
        return ExpWeightedPoly(self.poly + other.poly, self.weight_sign)

    def __sub__(self, other: "ExpWeightedPoly"):
        return self + other * -1

    def __eq__(self, other):
        if not isinstance(other, ExpWeightedPoly):
            return NotImplemented
        return self.weight_sign == other.weight_sign and self.poly == other.poly

    def __hash__(self):
        return hash((self.poly, self.weight_sign))

    def __repr__(self):
        return f"ExpWeightedPoly({self.poly!r}, weight_sign={self.weight_sign:+d})"


# --- univariate helpers ----------------------------------------------------


def hermite1d_exact(n: int) -> tuple[Fraction, ...]:
    """Physicists' Hermite polynomial ``H_n`` (leading coefficient ``2**n``)."""
    return _hermite1d(n)


@lru_cache(maxsize=None)
def _hermite1d(n: int) -> tuple[Fraction, ...]:
    if n < 0:
        raise ValueError("degree must be non-negative")
    prev: list[Fraction] = [Fraction(1)]
    if n == 0:
        return tuple(prev)
    cur = [Fraction(0), Fraction(2)]
    for k in range(1, n):
        nxt = [Fraction(0)] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= 2 * k * c
        prev, cur = cur, nxt
    return tuple(cur)


def laguerre_exact(n: int, k: int = 0) -> tuple[Fraction, ...]:
    """Associated Laguerre polynomial ``L_n^{(k)}`` for integer ``k >= 0``."""
    return _laguerre(n, k)


@lru_cache(maxsize=None)
def _laguerre(n: int, k: int) -> tuple[Fraction, ...]:
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    prev = [Fraction(1)]
    if n == 0:
        return tuple(prev)
    cur = [Fraction(k + 1), Fraction(-1)]
    for j in range(1, n):
        # (j+1) L_{j+1} = (2j+1+k-x) L_j - (j+k) L_{j-1}
        nxt = [Fraction(0)] * (j + 2)
        for i, c in enumerate(cur):
            nxt[i] += (2 * j + 1 + k) * c
            nxt[i + 1] -= c
        for i, c in enumerate(prev):
            nxt[i] -= (j + k) * c
        prev, cur = cur, [c / (j + 1) for c in nxt]
    return tuple(cur)


def compose_univariate(coeffs: Iterable, arg: BiPoly) -> BiPoly:
    """Evaluate a univariate polynomial at a bivariate polynomial (Horner)."""
    coeffs = list(coeffs)
    out = BiPoly.zero()
    for c in reversed(coeffs):
        out = out * arg + c
    return out


# --- the polynomials --------------------------------------------------------


def hermite_exact_direct(m: int, n: int) -> BiPoly:
    """``H_{m,n}`` from the finite sum over ``k <= min(m, n)``; zero for negative indices."""
    if m < 0 or n < 0:
        return BiPoly.zero()
    terms = {}
    for k in range(min(m, n) + 1):
        terms[(m - k, n - k)] = comb(m, k) * comb(n, k) * (-1) ** k * factorial(k)
    return BiPoly(terms)


def hermite_exact_recurrence(m: int, n: int) -> BiPoly:
    """``H_{m,n}`` built by the two-term ladder starting from ``H_{0,0} = 1``."""
    if m < 0 or n < 0:
        return BiPoly.zero()
    return _hermite_table(m, n)[m][n]


@lru_cache(maxsize=8)
def _hermite_table(m: int, n: int) -> list[list[BiPoly]]:
    x1, x2 = BiPoly.x1(), BiPoly.x2()
    table = [[BiPoly.zero()] * (n + 1) for _ in range(m + 1)]
    table[0][0] = BiPoly.const(1)
    for j in range(n):
        # H_{0,j+1} = z2 H_{0,j} - 0 * H_{-1,j}
        table[0][j + 1] = x2 * table[0][j]
    for i in range(m):
        for j in range(n + 1):
            nxt = x1 * table[i][j]
            if j:
                nxt = nxt - table[i][j - 1] * j
            table[i + 1][j] = nxt
    return table


def _hermite1d_at(n: int, arg: BiPoly, cache: dict) -> BiPoly:
    if n not in cache:
        cache[n] = compose_univariate(hermite1d_exact(n), arg)
    return cache[n]


def hermite_exact_via_1d(m: int, n: int) -> BiPoly:
    """``H_{m,n}`` assembled from 1D Hermite polynomials.

    The double sum over ``k, l`` is first formed in the auxiliary variables
    ``A = (X1+X2)/2`` and ``B = (X1-X2)/(2i)``, where each summand is a cheap
    product of univariate polynomials, and ``A, B`` are substituted once at
    the end.
    """
    if m < 0 or n < 0:
        return BiPoly.zero()
    big_n = m + n
    a_var, b_var = BiPoly.x1(), BiPoly.x2()
    ha: dict = {}
    hb: dict = {}
    acc = BiPoly.zero()
    for k in range(m + 1):
        for l in range(n + 1):
            c = (
                GaussianRational.i_power(m - k)
                * GaussianRational.i_power(3 * (n - l))  # (-i)^(n-l)
                * (comb(m, k) * comb(n, l))
            )
            acc = acc + _hermite1d_at(k + l, a_var, ha) * _hermite1d_at(big_n - k - l, b_var, hb) * c
    acc = acc * GaussianRational(Fraction(1, 2**big_n))
    half = GaussianRational(Fraction(1, 2))
    a_form = (BiPoly.x1() + BiPoly.x2()) * half
    b_form = (BiPoly.x1() - BiPoly.x2()) * (half * GaussianRational.i_power(3))  # 1/(2i) = -i/2
    return acc.subst(a_form, b_form)


def natural_hermite_exact(m: int, n: int) -> BiPoly:
    """``H^nat_{m,n}`` from its triple-sum expansion in ``(u, v)``."""
    if m < 0 or n < 0:
        return BiPoly.zero()
    fm_fn = factorial(m) * factorial(n)
    terms: dict = {}
    for k in range(min(m, n) + 1):
        for i in range(m - k + 1):
            for j in range(n - k + 1):
                coef = GaussianRational(
                    Fraction(fm_fn, factorial(k) * factorial(i) * factorial(j)
                             * factorial(m - k - i) * factorial(n - k - j))
                ) * GaussianRational.i_power(m + k - i - j)
                key = (n - k - j + i, m - k - i + j)
                terms[key] = terms[key] + coef if key in terms else coef
    return BiPoly._from_clean(terms)


_HALF = GaussianRational(Fraction(1, 2))


def _forward_forms() -> tuple[BiPoly, BiPoly]:
    # X1 -> Y1 + i Y2, X2 -> Y1 - i Y2
    y1, y2 = BiPoly.x1(), BiPoly.x2()
    return y1 + y2 * I, y1 - y2 * I


def _reverse_forms() -> tuple[BiPoly, BiPoly]:
    # X1 -> (Y1 + Y2)/2, X2 -> (Y1 - Y2)/(2i)
    y1, y2 = BiPoly.x1(), BiPoly.x2()
    return (y1 + y2) * _HALF, (y1 - y2) * (_HALF * GaussianRational.i_power(3))


def check_natural_link(m: int, n: int) -> bool:
    """Both substitution identities linking ``H_{m,n}`` and ``H^nat_{m,n}``."""
    h = hermite_exact_direct(m, n)
    nat = natural_hermite_exact(m, n)
    forward = bipoly_subst_linear(h, *_forward_forms())
    reverse = bipoly_subst_linear(nat, *_reverse_forms())
    return nat == forward and h == reverse


def _mixed_derivative(obj: ExpWeightedPoly, d1: int, d2: int) -> ExpWeightedPoly:
    return obj.diff("z1", d1).diff("z2", d2)


def rodrigues_exact(m: int, n: int) -> bool:
    """Full and partial Rodrigues formulas plus the Leibniz consequence.

    The derivative orders are swapped relative to the indices: ``n``
    derivatives in ``z1`` and ``m`` in ``z2`` produce ``H_{m,n}``.
    """
    h = hermite_exact_direct(m, n)
    gauss = ExpWeightedPoly(BiPoly.const(1), -1)
    sign = (-1) ** (m + n)
    full = _mixed_derivative(gauss, n, m).poly * sign
    if full != h:
        return False
    # (-1)^m e^{z1 z2} d^m/dz2^m (z2^n e^{-z1 z2})
    part2 = ExpWeightedPoly(BiPoly.monomial(0, n), -1).diff("z2", m).poly * (-1) ** m
    if part2 != h:
        return False
    part1 = ExpWeightedPoly(BiPoly.monomial(m, 0), -1).diff("z1", n).poly * (-1) ** n
    if part1 != h:
        return False
    # d^{n+m}/dz1^n dz2^m (-z1 e^{-z1 z2})
    lhs = _mixed_derivative(ExpWeightedPoly(-BiPoly.x1(), -1), n, m)
    rhs = _mixed_derivative(gauss, n, m) * -BiPoly.x1()
    if n:
        rhs = rhs + _mixed_derivative(gauss, n - 1, m) * (-n)
    return lhs == rhs


def raising_lowering_exact(m: int, n: int) -> bool:
    """Raising and lowering operator identities, with ``H`` zero at negative indices."""
    h = hermite_exact_direct(m, n)
    x1, x2 = BiPoly.x1(), BiPoly.x2()
    return (
        x1 * h - h.diff("z2") == hermite_exact_direct(m + 1, n)
        and x2 * h - h.diff("z1") == hermite_exact_direct(m, n + 1)
        and h.diff("z2") == hermite_exact_direct(m, n - 1) * n
        and h.diff("z1") == hermite_exact_direct(m - 1, n) * m
    )


def laguerre_identity_exact(m: int, n: int) -> bool:
    """``H_{m,n}(x+iy, x-iy)`` against its Laguerre and 1D-Hermite forms.

    Here ``X1, X2`` stand for the real indeterminates ``x, y``.
    """
    x, y = BiPoly.x1(), BiPoly.x2()
    z, zbar = x + y * I, x - y * I
    lhs = hermite_exact_direct(m, n).subst(z, zbar)
    r2 = x * x + y * y
    if m >= n:
        rhs = z ** (m - n) * compose_univariate(laguerre_exact(n, m - n), r2) * ((-1) ** n * factorial(n))
    else:
        rhs = zbar ** (n - m) * compose_univariate(laguerre_exact(m, n - m), r2) * ((-1) ** m * factorial(m))
    if lhs != rhs:
        return False
    hx: dict = {}
    hy: dict = {}
    acc = BiPoly.zero()
    for k in range(m + 1):
        for l in range(n + 1):
            c = (
                GaussianRational.i_power(m - k)
                * GaussianRational.i_power(3 * (n - l))
                * (comb(m, k) * comb(n, l))
            )
            acc = acc + _hermite1d_at(k + l, x, hx) * _hermite1d_at(m + n - k - l, y, hy) * c
    acc = acc * GaussianRational(Fraction(1, 2 ** (m + n)))
    return acc == lhs


def coefficient_sum(m: int, n: int, p: int, q: int) -> GaussianRational:
    """Exact value of the quadruple binomial sum behind orthogonality.

    The first Kronecker delta pins ``j = k + l - i``; the second then holds
    iff ``m + n == p + q``.  The unit ``i^a (-i)^b`` is tracked as an exponent
    of ``i`` so the accumulation stays in Gaussian integers until the final
    dyadic scaling.
    """
    if m + n != p + q:
        return ZERO
    acc_re = acc_im = 0
    for k in range(m + 1):
        for l in range(n + 1):
            kl = k + l
            base = comb(m, k) * comb(n, l) * factorial(kl) * factorial(n + m - kl)
            for i in range(p + 1):
                j = kl - i
                if j < 0 or j > q:
                    continue
                term = base * comb(p, i) * comb(q, j)
                # i^(m-k+q-j) * (-i)^(n-l+p-i) = i^(m-k+q-j + 3(n-l+p-i))
                e = (m - k + q - j + 3 * (n - l + p - i)) % 4
                if e == 0:
                    acc_re += term
                elif e == 1:
                    acc_im += term
                elif e == 2:
                    acc_re -= term
                else:
                    acc_im -= term
    return GaussianRational(Fraction(acc_re, 2 ** (q + p)), Fraction(acc_im, 2 ** (q + p)))


def coefficient_identity(m: int, n: int, p: int, q: int) -> bool:
    """The binomial sum equals ``m! n!`` on the diagonal and vanishes elsewhere."""
    expected = factorial(m) * factorial(n) if (m == p and n == q) else 0
    return coefficient_sum(m, n, p, q) == expected
