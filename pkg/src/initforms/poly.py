"""Exact multivariate polynomials over Q.

``Poly`` is an element of Q[x1..xn] stored as a map exponent-tuple -> Fraction
with no zero coefficients, so equality of term maps is equality of polynomials.
``ZPoly`` is an element of Q[x1..xn][z], stored as z-power -> Poly. Variables
are 0-indexed in the API and printed 1-indexed (``x1``, ``x2``, ...).
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    ArityMismatch,
    DivisionByZeroPoly,
    PolySyntaxError,
    TooManyPolys,
    VarOutOfRange,
    ZNotAllowed,
)

Exponent = tuple
Scalar = Union[int, Fraction]


def grlex_key(e: Exponent):
    return (sum(e), e)


def _norm(c):
    # integral coefficients are kept as int: same value, much faster arithmetic
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _normalized(terms):
    return {e: _norm(c) for e, c in terms.items() if c}


class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping] = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars or any(a < 0 for a in e):
                raise ValueError(f"bad exponent {e} for {nvars} variables")
            c = _norm(Fraction(c))
            if c:
                clean[e] = c
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars):
        c = _norm(Fraction(c))
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i, nvars):
        """The variable x_{i+1} (0-based ``i``)."""
        if not 0 <= i < nvars:
            raise VarOutOfRange(f"variable index {i + 1} outside 1..{nvars}")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, e, c=1):
        return cls(len(e), {tuple(e): c})

    @classmethod
    def gens(cls, nvars):
        return [cls.var(i, nvars) for i in range(nvars)]

    # -- inspection -----------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def support(self):
        return frozenset(self._terms)

    def coefficient(self, e) -> Fraction:
        return Fraction(self._terms.get(tuple(e), 0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self):
        return len(self._terms) == 1

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading_term(self):
        """Leading (exponent, coefficient) under graded-lex order."""
        if not self._terms:
            raise DivisionByZeroPoly("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, Fraction(self._terms[e])

    def vars_used(self):
        used = set()
        for e in self._terms:
            used.update(i for i, a in enumerate(e) if a)
        return used

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = _norm(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(Fraction(other))
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {e: _norm(c * other) for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, _normalized(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Poly({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- calculus and substitution --------------------------------------

    def diff(self, j: int):
        out = {}
        for e, c in self._terms.items():
            a = e[j]
            if a:
                e2 = list(e)
                e2[j] = a - 1
                out[tuple(e2)] = _norm(c * a)
        return Poly._raw(self.nvars, out)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, a in zip(point, e):
                if a:
                    t *= x**a
            total += t
        return Fraction(total)

    def embed(self, m: int):
        """View in Q[x1..xm], m >= nvars, by index identity."""
        if m < self.nvars:
            raise ArityMismatch(f"cannot embed {self.nvars} variables into {m}")
        pad = (0,) * (m - self.nvars)
        return Poly._raw(m, {e + pad: c for e, c in self._terms.items()})

    def truncate(self, n: int):
        """Inverse of ``embed`` for polynomials free of x_{n+1}.. ."""
        if any(any(e[n:]) for e in self._terms):
            raise ArityMismatch(f"polynomial involves variables beyond x{n}")
        return Poly._raw(n, {e[:n]: c for e, c in self._terms.items()})

    def compose(self, images: Sequence["Poly"]):
        """Substitute x_i -> images[i]; all images share one ring."""
        if len(images) != self.nvars:
            raise ArityMismatch(f"{len(images)} images for {self.nvars} variables")
        if not images:
            raise ArityMismatch("no images")
        m = images[0].nvars
        if any(g.nvars != m for g in images):
            raise ArityMismatch("images live in different rings")
        powers = [{0: Poly.const(1, m), 1: g} for g in images]

        def power(i, a):
            cache = powers[i]
            if a not in cache:
                cache[a] = power(i, a // 2) * power(i, a - a // 2)
            return cache[a]

        out = Poly.zero(m)
        for e, c in self._terms.items():
            t = Poly.const(c, m)
            for i, a in enumerate(e):
                if a:
                    t = t * power(i, a)
            out = out + t
        return out


class ZPoly:
    """Element sum_j p_j z^j of Q[x1..xn][z]."""

    __slots__ = ("nvars", "_coeffs")

    def __init__(self, nvars: int, coeffs: Optional[Mapping[int, Poly]] = None):
        clean = {}
        for j, p in (coeffs or {}).items():
            if j < 0:
                raise ValueError("negative z-power")
            if p.nvars != nvars:
                raise ArityMismatch(f"coefficient in {p.nvars} variables, expected {nvars}")
            if p:
                clean[int(j)] = p
        self.nvars = nvars
        self._coeffs = clean

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p.nvars, {0: p})

    @classmethod
    def from_flat(cls, p: Poly):
        """Read a Poly in nvars+1 variables, the last being z."""
        n = p.nvars - 1
        groups = {}
        for e, c in p.terms.items():
            groups.setdefault(e[n], {})[e[:n]] = c
        return cls(n, {j: Poly._raw(n, t) for j, t in groups.items()})

    @classmethod
    def z(cls, nvars):
        return cls(nvars, {1: Poly.const(1, nvars)})

    def flat(self, extra: int = 1):
        """As a Poly in nvars+extra variables; z is variable index nvars."""
        out = {}
        tail = (0,) * (extra - 1)
        for j, p in self._coeffs.items():
            for e, c in p.terms.items():
                out[e + (j,) + tail] = c
        return Poly._raw(self.nvars + extra, out)

    @property
    def zcoeffs(self):
        return MappingProxyType(self._coeffs)

    def coeff(self, j: int):
        return self._coeffs.get(j, Poly.zero(self.nvars))

    def constant_term(self):
        """p(0), the image under z -> 0."""
        return self.coeff(0)

    def z_degree(self):
        return max(self._coeffs, default=-1)

    def is_z_free(self):
        return all(j == 0 for j in self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def to_poly(self):
        if not self.is_z_free():
            raise ZNotAllowed(f"{self} involves z")
        return self.constant_term()

    def _other(self, other):
        if isinstance(other, ZPoly):
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            return ZPoly.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return ZPoly.from_poly(Poly.const(other, self.nvars))
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return ZPoly.from_flat(self.flat() + other.flat())

    __radd__ = __add__

    def __neg__(self):
        return ZPoly(self.nvars, {j: -p for j, p in self._coeffs.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return ZPoly.from_flat(self.flat() * other.flat())

    __rmul__ = __mul__

    def __pow__(self, k):
        return ZPoly.from_flat(self.flat() ** k)

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.nvars == other.nvars and self._coeffs == other._coeffs
        if isinstance(other, Poly):
            return self.is_z_free() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"ZPoly({self.nvars}, {format_zpoly(self)!r})"

    def __str__(self):
        return format_zpoly(self)


@dataclass(frozen=True)
class AlgebraHom:
    """Q-algebra map Q[x1..xn] -> Q[x1..xm][z] given by the images of the x_i."""

    src_nvars: int
    images: tuple

    def __post_init__(self):
        images = tuple(g if isinstance(g, ZPoly) else ZPoly.from_poly(g) for g in self.images)
        if len(images) != self.src_nvars:
            raise ArityMismatch(f"{len(images)} images for {self.src_nvars} variables")
        if images and any(g.nvars != images[0].nvars for g in images):
            raise ArityMismatch("images live in different rings")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_images(cls, images):
        return cls(len(images), tuple(images))

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(Poly.gens(n)))

    @property
    def target_nvars(self):
        return self.images[0].nvars

    def is_z_free(self):
        return all(g.is_z_free() for g in self.images)

    def poly_images(self):
        return [g.to_poly() for g in self.images]

    def __call__(self, f: Poly) -> ZPoly:
        return substitute(self, f)


def substitute(h: AlgebraHom, f: Poly) -> ZPoly:
    if f.nvars != h.src_nvars:
        raise ArityMismatch(f"homomorphism expects {h.src_nvars} variables, got {f.nvars}")
    return ZPoly.from_flat(f.compose([g.flat() for g in h.images]))


# -- formatting ---------------------------------------------------------------


def _format_terms(items, names):
    if not items:
        return "0"
    parts = []
    for k, (e, c) in enumerate(items):
        factors = []
        for name, a in zip(names, e):
            if a == 1:
                factors.append(name)
            elif a:
                factors.append(f"{name}^{a}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def format_poly(p: Poly) -> str:
    names = [f"x{i + 1}" for i in range(p.nvars)]
    return _format_terms(p.sorted_terms(), names)


def format_zpoly(p: ZPoly) -> str:
    names = [f"x{i + 1}" for i in range(p.nvars)] + ["z"]
    items = []
    for j in sorted(p.zcoeffs):
        items.extend((e + (j,), c) for e, c in p.coeff(j).sorted_terms())
    return _format_terms(items, names)


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+|z)|(?P<op>[-+*^/]))")


def _tokenize(text):
    pos = 0
    tokens = []
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN_RE.match(stripped, pos)
        if not m:
            while stripped[pos].isspace():
                pos += 1
            raise PolySyntaxError(f"unexpected character {stripped[pos]!r}", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(stripped)))
    return tokens


class _Parser:
    def __init__(self, text, nvars):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.uses_z = False

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, self.text, tok[2])

    def expect_nat(self):
        tok = self.take()
        if tok[0] != "int":
            self.fail("expected a natural number", tok)
        return int(tok[1])

    def poly(self):
        terms = []
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        terms.append((sign, self.term()))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            terms.append((sign, self.term()))
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return terms

    def term(self):
        tok = self.peek()
        coeff = Fraction(1)
        factors = []
        if tok[0] == "int":
            self.take()
            num = int(tok[1])
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                dtok = self.peek()
                den = self.expect_nat()
                if den == 0:
                    self.fail("zero denominator", dtok)
            coeff = Fraction(num, den)
        elif tok[0] == "var":
            factors.append(self.factor())
        else:
            self.fail("expected a coefficient or variable")
        while self.peek()[:2] == ("op", "*"):
            self.take()
            if self.peek()[0] != "var":
                self.fail("expected a variable")
            factors.append(self.factor())
        return coeff, factors

    def factor(self):
        tok = self.take()
        name = tok[1]
        if name == "z":
            self.uses_z = True
            index = None
        else:
            index = int(name[1:])
            if index < 1 or (self.nvars is not None and index > self.nvars):
                raise VarOutOfRange(
                    f"variable {name} outside x1..x{self.nvars} at position {tok[2]}"
                )
        power = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            power = self.expect_nat()
        return index, power


def parse_poly(text: str, nvars: Optional[int] = None, allow_z: bool = False):
    """Parse an expression into a Poly, or into a ZPoly when ``allow_z``.

    ``nvars=None`` infers the variable count from the largest index used.
    """
    parser = _Parser(text, nvars)
    raw = parser.poly()
    if parser.uses_z and not allow_z:
        raise ZNotAllowed(f"z is not allowed in {text!r}")
    if nvars is None:
        top = [i for _, (_, fs) in raw for i, _ in fs if i is not None]
        nvars = max(top, default=1)
    width = nvars + 1
    out = Poly.zero(width)
    for sign, (coeff, factors) in raw:
        e = [0] * width
        for index, power in factors:
            e[nvars if index is None else index - 1] += power
        out = out + Poly._raw(width, {tuple(e): sign * coeff} if coeff else {})
    z = ZPoly.from_flat(out)
    return z if allow_z else z.constant_term()


def parse_zpoly(text: str, nvars: Optional[int] = None) -> ZPoly:
    return parse_poly(text, nvars, allow_z=True)


def parse_many(texts: Iterable[str], nvars: Optional[int] = None, allow_z=False):
    """Parse several expressions into one common ring."""
    texts = list(texts)
    if nvars is None:
        nvars = max((_max_index(t) for t in texts), default=1)
    return [parse_poly(t, nvars, allow_z) for t in texts]


def _max_index(text):
    return max((int(m) for m in re.findall(r"x(\d+)", text)), default=1)


# -- division, Jacobians, independence ---------------------------------------


def exact_divide(g: Poly, f: Poly) -> Optional[Poly]:
    """Return q with f == g*q, or None when g does not divide f."""
    if g.nvars != f.nvars:
        raise ArityMismatch(f"{g.nvars} vs {f.nvars} variables")
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    lt_e, lt_c = g.leading_term()
    q = {}
    r = f
    while not r.is_zero():
        e, c = r.leading_term()
        diff = tuple(a - b for a, b in zip(e, lt_e))
        if any(a < 0 for a in diff):
            # the leading term of r can never be cancelled, so remainder != 0
            return None
        t = c / lt_c
        q[diff] = t
        r = r - g * Poly._raw(g.nvars, {diff: t})
    return Poly._raw(f.nvars, q)


def divides(g: Poly, f: Poly) -> bool:
    return exact_divide(g, f) is not None


def jacobian(polys: Sequence[Poly]):
    if not polys:
        return []
    m = polys[0].nvars
    if any(p.nvars != m for p in polys):
        raise ArityMismatch("polynomials live in different rings")
    return [[p.diff(j) for j in range(m)] for p in polys]


def _rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _det(matrix):
    """Symbolic determinant by Laplace expansion along the first row."""
    n = len(matrix)
    memo = {}

    def minor(row, cols):
        if row == n:
            return Poly.const(1, matrix[0][0].nvars)
        if cols in memo:
            return memo[cols]
        total = Poly.zero(matrix[0][0].nvars)
        for k, c in enumerate(cols):
            entry = matrix[row][c]
            if entry:
                sub = minor(row + 1, cols[:k] + cols[k + 1 :])
                total = total + entry * sub if k % 2 == 0 else total - entry * sub
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def algebraically_independent(polys: Sequence[Poly], trials: int = 8, seed: int = 0) -> bool:
    """Jacobian criterion (characteristic zero).

    Random integer evaluations screen for full rank first; otherwise every
    maximal minor is expanded symbolically, so the answer is deterministic.
    """
    polys = list(polys)
    if not polys:
        return True
    m = polys[0].nvars
    if len(polys) > m:
        raise TooManyPolys(f"{len(polys)} polynomials in {m} variables are always dependent")
    jac = jacobian(polys)
    n = len(polys)
    rng = random.Random(seed)
    for _ in range(trials):
        point = [rng.randint(1, 10**4) for _ in range(m)]
        if _rank([[entry.evaluate(point) for entry in row] for row in jac]) == n:
            return True
    for cols in itertools.combinations(range(m), n):
        if _det([[row[c] for c in cols] for row in jac]):
            return True
    return False
