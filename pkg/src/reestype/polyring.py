"""Sparse multivariate polynomials over the rationals.

Monomials are plain exponent tuples; a :class:`Polynomial` maps exponent
tuples to nonzero :class:`~fractions.Fraction` coefficients inside a
:class:`VariableContext`.  Term orders are exposed as sort keys so the
Groebner kernels can work on raw dictionaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from operator import add, sub
from typing import Callable, Iterable, Mapping

from .errors import ContextMismatchError, ReesError

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**31 - 1


def _top_exponent(f) -> int:
    return max((max(e, default=0) for e in f.terms), default=0)


def _check_exponents(exp: Monomial) -> Monomial:
    for e in exp:
        if e < 0:
            raise ValueError(f"negative exponent in {exp}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return exp


# -- monomial helpers -------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(map(sub, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# -- variable contexts ------------------------------------------------------

@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names, optionally split into two blocks.

    ``names[:block_split]`` is the coefficient block (the variables of the
    base ring) and ``names[block_split:]`` the presentation block.
    """

    names: tuple
    block_split: int | None = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not isinstance(n, str) or not n:
                raise ValueError(f"invalid variable name {n!r}")
        if self.block_split is not None and not 0 <= self.block_split <= len(names):
            raise ValueError(f"block_split {self.block_split} out of range for {len(names)} variables")

    def __len__(self):
        return len(self.names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def one(self) -> Monomial:
        return (0,) * len(self.names)

    def gen(self, name: str) -> "Polynomial":
        exp = [0] * len(self.names)
        exp[self.index(name)] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def gens(self) -> tuple:
        return tuple(self.gen(n) for n in self.names)

    def drop_leading(self, k: int) -> "VariableContext":
        bs = self.block_split
        if bs is not None:
            bs = bs - k if bs >= k else None
        return VariableContext(self.names[k:], bs)

    def presentation_indices(self) -> range:
        if self.block_split is None:
            raise ReesError("context has no block_split; presentation block undefined")
        return range(self.block_split, len(self.names))

    def __str__(self):
        return "[" + ", ".join(self.names) + "]"


# -- term orders ------------------------------------------------------------

def _lex_key(e):
    return e


def _degrevlex_key(e):
    # partial sums e_1, e_1+e_2, ...: larger is bigger under degrevlex
    # (total degree first, then smaller trailing exponent wins)
    acc = 0
    out = []
    for x in e:
        acc += x
        out.append(acc)
    out.reverse()
    return tuple(out)


class _KeyCache(dict):
    __slots__ = ("fn",)

    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, e):
        if len(self) > 1_000_000:
            self.clear()
        v = self[e] = self.fn(e)
        return v


_INNER = {"lex": _lex_key, "degrevlex": _degrevlex_key}


class TermOrder:
    """A monomial order, given by a sort key on exponent tuples.

    ``block(k, inner)`` compares the first ``k`` exponents under ``inner``
    and breaks ties on the remaining exponents under ``inner``; it is an
    elimination order for the first ``k`` variables.
    """

    __slots__ = ("kind", "block_size", "inner", "_raw", "_cache")

    def __init__(self, kind: str, block_size: int | None = None, inner: str = "degrevlex"):
        if kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"unknown term order {kind!r}")
        if inner not in _INNER:
            raise ValueError(f"unknown inner order {inner!r}")
        if kind == "block" and (block_size is None or block_size < 0):
            raise ValueError("block order needs a non-negative block size")
        self.kind = kind
        self.block_size = block_size if kind == "block" else None
        self.inner = inner if kind == "block" else None
        if kind == "block":
            k = block_size
            f = _INNER[inner]
            self._raw = lambda e: (f(e[:k]), f(e[k:]))
        else:
            self._raw = _INNER[kind]
        self._cache = None

    @classmethod
    def lex(cls) -> "TermOrder":
        return cls("lex")

    @classmethod
    def degrevlex(cls) -> "TermOrder":
        return cls("degrevlex")

    @classmethod
    def block(cls, k: int, inner: str = "degrevlex") -> "TermOrder":
        return cls("block", k, inner)

    @classmethod
    def from_name(cls, name: str) -> "TermOrder":
        return cls(name)

    @property
    def key(self) -> Callable[[Monomial], object]:
        """Memoised sort key; larger key means larger monomial."""
        if self.kind == "lex":
            return _lex_key
        if self._cache is None:
            self._cache = _KeyCache(self._raw)
        return self._cache.__getitem__

    def clear_cache(self):
        self._cache = None

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        if len(m1) != len(m2):
            raise ContextMismatchError(f"monomials of different lengths: {m1}, {m2}")
        k1, k2 = self._raw(m1), self._raw(m2)
        return (k1 > k2) - (k1 < k2)

    def _ident(self):
        return (self.kind, self.block_size, self.inner)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.kind == "block":
            return f"TermOrder.block({self.block_size}, {self.inner!r})"
        return f"TermOrder.{self.kind}()"


def monomial_compare(m1: Monomial, m2: Monomial, order: TermOrder) -> int:
    """-1, 0 or 1 as m1 is less than, equal to or greater than m2."""
    return order.compare(m1, m2)


DEGREVLEX = TermOrder.degrevlex()


# -- polynomials ------------------------------------------------------------

def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficient must be int, str or Fraction, not {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VariableContext, terms: Mapping | None = None, *, _trusted: bool = False):
        self.ctx = ctx
        if _trusted:
            self.terms = terms
        else:
            n = len(ctx)
            clean = {}
            for exp, c in (terms or {}).items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ContextMismatchError(f"monomial {exp} does not fit context {ctx}")
                _check_exponents(exp)
                c = _coerce(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
            self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {}, _trusted=True)

    @classmethod
    def constant(cls, ctx, c):
        c = _coerce(c)
        return cls(ctx, {ctx.one(): c} if c else {}, _trusted=True)

    @classmethod
    def monomial(cls, ctx, exp, c=1):
        return cls(ctx, {tuple(exp): c})

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        """True for a single term (any nonzero coefficient)."""
        return len(self.terms) == 1

    def monomials(self):
        return self.terms.keys()

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degrees(self, weights) -> set:
        return {sum(w * x for w, x in zip(weights, e)) for e in self.terms}

    def is_homogeneous(self, weights=None) -> bool:
        if weights is None:
            weights = (1,) * len(self.ctx)
        return len(self.weighted_degrees(weights)) <= 1

    def leading_monomial(self, order: TermOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: TermOrder = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: TermOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        c = self.leading_coefficient(order)
        if c == 1:
            return self
        return Polynomial(self.ctx, {e: v / c for e, v in self.terms.items()}, _trusted=True)

    # arithmetic
    def _check(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"contexts differ: {self.ctx} vs {other.ctx}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ctx, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.terms and other.terms and _top_exponent(self) + _top_exponent(other) > MAX_EXPONENT:
            for e1 in self.terms:
                for e2 in other.terms:
                    _check_exponents(tuple(map(add, e1, e2)))
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ctx, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        for e in result.terms:
            _check_exponents(e)
        return result

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.ctx)
        return Polynomial(self.ctx, {e: v * c for e, v in self.terms.items()}, _trusted=True)

    def mul_monomial(self, m: Monomial, c=1) -> "Polynomial":
        c = _coerce(c)
        return Polynomial(self.ctx, {tuple(map(add, e, m)): v * c for e, v in self.terms.items()}, _trusted=True)

    # comparison
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    # change of ring
    def embed(self, target: VariableContext, positions=None) -> "Polynomial":
        """Re-home this polynomial in ``target``.

        ``positions[i]`` is the target index of source variable ``i``; by
        default variables are matched by name.
        """
        if positions is None:
            positions = [target.index(n) for n in self.ctx.names]
        n = len(target)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                if x:
                    ne[positions[i]] += x
            out[tuple(ne)] = c
        return Polynomial(target, out, _trusted=True)

    def substitute(self, images, target: VariableContext) -> "Polynomial":
        """Evaluate at ``images`` (one polynomial in ``target`` per variable)."""
        images = list(images)
        if len(images) != len(self.ctx):
            raise ContextMismatchError("need one image per variable")
        result = Polynomial.zero(target)
        powers = [dict() for _ in images]

        def power(i, k):
            if k not in powers[i]:
                powers[i][k] = images[i] ** k
            return powers[i][k]

        for e, c in self.terms.items():
            t = Polynomial.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    # printing
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, ctx={self.ctx})"


def format_monomial(exp: Monomial, names) -> str:
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: TermOrder = DEGREVLEX) -> str:
    if not f.terms:
        return "0"
    out = []
    for i, (exp, c) in enumerate(f.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(exp, f.ctx.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def x_degree_components(f: Polynomial, ctx: VariableContext | None = None) -> dict:
    """Split ``f`` by total degree in the presentation-block variables."""
    ctx = ctx or f.ctx
    ctx.presentation_indices()
    k = ctx.block_split
    parts: dict = {}
    for e, c in f.terms.items():
        d = sum(e[k:])
        parts.setdefault(d, {})[e] = c
    return {d: Polynomial(f.ctx, t, _trusted=True) for d, t in sorted(parts.items())}


def x_degree(f: Polynomial) -> int:
    """Presentation-block degree of an X-homogeneous polynomial."""
    comps = x_degree_components(f)
    if len(comps) != 1:
        raise ReesError(f"polynomial is not homogeneous in the presentation block: {f}")
    return next(iter(comps))


def products_of_degree(polys: Iterable[Polynomial], n: int) -> list:
    """All products of ``n`` factors drawn (with repetition) from ``polys``."""
    polys = list(polys)
    out = []
    for combo in combinations_with_replacement(range(len(polys)), n):
        p = polys[combo[0]]
        for i in combo[1:]:
            p = p * polys[i]
        out.append(p)
    return out
