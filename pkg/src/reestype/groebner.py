"""Buchberger's algorithm and the ideal operations built on it.

The kernel works on raw ``{exponent tuple: Fraction}`` dictionaries; the
public functions wrap and unwrap :class:`Polynomial` values.  Pairs are
chosen by the normal strategy (smallest sugar degree, then smallest lcm)
and pruned with the Gebauer-Moeller form of Buchberger's two criteria.
"""

from __future__ import annotations

import contextvars
import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from operator import add, sub

from .errors import ContextMismatchError, ResourceLimitExceeded
from .polyring import DEGREVLEX, Polynomial, TermOrder, VariableContext

__all__ = [
    "Budget", "limits", "Ideal", "GroebnerBasis", "groebner_basis", "normal_form",
    "ideal_member", "ideal_contains", "eliminate", "ideal_intersect", "ideal_product",
    "ideal_power", "ideal_equal", "is_unit_ideal",
]


# -- resource budget --------------------------------------------------------

@dataclass
class Budget:
    """Caps on a Groebner computation; ``None`` means unlimited."""

    seconds: float | None = None
    max_basis: int | None = 20000
    deadline: float | None = field(default=None, init=False)

    def start(self):
        if self.seconds is not None:
            self.deadline = time.monotonic() + self.seconds
        return self

    def check(self, basis_size=0):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitExceeded(f"time budget of {self.seconds}s exceeded")
        if self.max_basis is not None and basis_size > self.max_basis:
            raise ResourceLimitExceeded(f"basis grew past {self.max_basis} elements")


_budget: contextvars.ContextVar = contextvars.ContextVar("groebner_budget", default=None)


@contextmanager
def limits(seconds: float | None = None, max_basis: int | None = 20000):
    """Run the enclosed computations under a shared time/size budget."""
    token = _budget.set(Budget(seconds, max_basis).start())
    try:
        yield
    finally:
        _budget.reset(token)


def _current_budget() -> Budget:
    b = _budget.get()
    return b if b is not None else Budget()


# -- raw kernel -------------------------------------------------------------

def _support(e):
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _monic(f, lm):
    c = f[lm]
    if c == 1:
        return f
    return {e: v / c for e, v in f.items()}


def _find_divisor(m, msk, lms, masks, active):
    for i in active:
        if masks[i] & ~msk:
            continue
        if _divides(lms[i], m):
            return i
    return -1


def _reduce(f, polys, lms, masks, active, key, full=True, budget=None):
    """Reduce ``f`` (a fresh dict, mutated) modulo the active polynomials.

    Every active polynomial must be monic.  With ``full=False`` only the
    leading term is reduced and the partially reduced dict is returned.
    """
    rem = {}
    steps = 0
    while f:
        steps += 1
        if budget is not None and not steps & 15:
            budget.check()
        lm = max(f, key=key)
        i = _find_divisor(lm, _support(lm), lms, masks, active)
        if i < 0:
            if not full:
                return f
            rem[lm] = f.pop(lm)
            continue
        c = f[lm]
        q = tuple(map(sub, lm, lms[i]))
        for e, gc in polys[i].items():
            ne = tuple(map(add, e, q))
            v = f.get(ne, 0) - c * gc
            if v:
                f[ne] = v
            else:
                f.pop(ne, None)
    return rem


class _Basis:
    """Mutable state of one Buchberger run."""

    def __init__(self, key):
        self.key = key
        self.polys = []
        self.lms = []
        self.masks = []
        self.sugar = []
        self.active = []
        self.pairs = []  # (sugar, lcm degree, lcm key, i, j, lcm)

    def add(self, f, sugar):
        """Insert monic ``f`` and update pairs (Gebauer-Moeller)."""
        key = self.key
        lm = max(f, key=key)
        f = _monic(f, lm)
        k = len(self.polys)
        self.polys.append(f)
        self.lms.append(lm)
        self.masks.append(_support(lm))
        self.sugar.append(sugar)
        lms = self.lms

        # new pairs (i, k), filtered by the chain criterion among themselves
        cand = []
        for i in self.active:
            lc = tuple(map(max, lms[i], lm))
            coprime = not (self.masks[i] & self.masks[k])
            cand.append((i, lc, coprime))
        kept = []
        for idx, (i, lc, coprime) in enumerate(cand):
            if coprime:
                kept.append((i, lc, True))
                continue
            dominated = False
            for jdx, (j, lc2, cop2) in enumerate(cand):
                if jdx == idx:
                    continue
                if _divides(lc2, lc) and (lc2 != lc or jdx < idx):
                    dominated = True
                    break
            if not dominated:
                kept.append((i, lc, False))
        # drop coprime-criterion pairs only after they served as witnesses
        new_pairs = []
        for i, lc, coprime in kept:
            if coprime:
                continue
            s = max(self.sugar[i] - sum(lms[i]), sugar - sum(lm)) + sum(lc)
            new_pairs.append((s, sum(lc), key(lc), i, k, lc))

        # prune old pairs whose lcm is divisible by lm(f) strictly
        if self.pairs:
            pruned = []
            for p in self.pairs:
                i, j, lc = p[3], p[4], p[5]
                if _divides(lm, lc):
                    li = tuple(map(max, lms[i], lm))
                    lj = tuple(map(max, lms[j], lm))
                    if li != lc and lj != lc:
                        continue
                pruned.append(p)
            self.pairs = pruned
        self.pairs.extend(new_pairs)

        self.active = [i for i in self.active if not _divides(lm, lms[i])]
        self.active.append(k)

    def spoly(self, i, j, lc):
        fi, fj = self.polys[i], self.polys[j]
        qi = tuple(map(sub, lc, self.lms[i]))
        qj = tuple(map(sub, lc, self.lms[j]))
        out = {}
        for e, c in fi.items():
            out[tuple(map(add, e, qi))] = c
        for e, c in fj.items():
            ne = tuple(map(add, e, qj))
            v = out.get(ne, 0) - c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return out


def _sugar_of(f):
    return max(sum(e) for e in f)


def _buchberger(gens, key, budget, seed=(), normal=False):
    """Groebner basis of ``seed + gens`` as a list of monic dicts.

    ``seed`` must already be a Groebner basis (its internal pairs are
    skipped).  The result is not yet inter-reduced.  Pairs are taken by
    sugar, or by least lcm when ``normal`` is set: under lex the sugar
    strategy lets coefficients explode.
    """
    if normal:
        def select(t):
            return B.pairs[t][2]
    else:
        def select(t):
            return B.pairs[t][:3]
    B = _Basis(key)
    for g in seed:
        B.add(dict(g), _sugar_of(g))
    B.pairs = []
    for g in gens:
        g = _reduce(dict(g), B.polys, B.lms, B.masks, B.active, key, full=False, budget=budget)
        if g:
            B.add(g, _sugar_of(g))
    steps = 0
    while B.pairs:
        steps += 1
        if steps % 32 == 0:
            budget.check(len(B.polys))
        best = min(range(len(B.pairs)), key=select)
        p = B.pairs[best]
        B.pairs[best] = B.pairs[-1]
        B.pairs.pop()
        s_sugar, _, _, i, j, lc = p
        h = B.spoly(i, j, lc)
        h = _reduce(h, B.polys, B.lms, B.masks, B.active, key, budget=budget)
        if h:
            B.add(h, max(s_sugar, _sugar_of(h)))
    budget.check(len(B.polys))
    return [B.polys[i] for i in B.active], B


def _interreduce(basis, key, budget=None):
    """Reduced (minimal, tail-reduced, monic) form of a Groebner basis."""
    items = []
    for f in basis:
        lm = max(f, key=key)
        items.append((lm, f))
    items.sort(key=lambda t: key(t[0]))
    minimal = []
    for lm, f in items:
        if not any(_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, f))
    lms = [m for m, _ in minimal]
    masks = [_support(m) for m in lms]
    polys = [_monic(f, m) for m, f in minimal]
    out = []
    for idx, (lm, f) in enumerate(minimal):
        others = [i for i in range(len(minimal)) if i != idx]
        tail = dict(polys[idx])
        c = tail.pop(lm)
        tail = _reduce(tail, polys, lms, masks, others, key, budget=budget)
        tail[lm] = c
        out.append(_monic(tail, lm))
    out.sort(key=lambda f: key(max(f, key=key)), reverse=True)
    return out


# -- public types -----------------------------------------------------------

class Ideal:
    """An ideal given by generators in a shared context.

    An empty generator tuple stands for the zero ideal.
    """

    __slots__ = ("ctx", "gens", "_hash")

    def __init__(self, ctx: VariableContext, gens=()):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be Polynomials")
            if g.ctx != ctx:
                raise ContextMismatchError(f"generator {g} not in context {ctx}")
        self.ctx = ctx
        self.gens = tuple(g for g in gens if g)
        self._hash = None

    @classmethod
    def of(cls, *gens):
        if not gens:
            raise ValueError("Ideal.of needs at least one generator")
        return cls(gens[0].ctx, gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def embed(self, target: VariableContext, positions=None) -> "Ideal":
        return Ideal(target, [g.embed(target, positions) for g in self.gens])

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ctx == other.ctx and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.gens))
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    ctx: VariableContext
    order: TermOrder
    elements: tuple
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def ideal(self) -> Ideal:
        return Ideal(self.ctx, self.elements)


def _canonical(ideal: Ideal) -> Ideal:
    # scale to monic under degrevlex and drop repeats so equal generator
    # sets share cache entries regardless of ordering
    seen = {}
    for g in ideal.gens:
        m = g.monic()
        seen.setdefault(m, None)
    return Ideal(ideal.ctx, sorted(seen, key=lambda g: sorted(g.terms.items())))


@lru_cache(maxsize=4096)
def _cached_basis(ideal: Ideal, order: TermOrder) -> GroebnerBasis:
    return _compute_basis(ideal, order, _current_budget())


def _compute_basis(ideal, order, budget, seed=None):
    key = TermOrder(order.kind, order.block_size, order.inner or "degrevlex").key
    gens = [g.terms for g in ideal.gens]
    seed_terms = [g.terms for g in seed.elements] if seed is not None else ()
    if not gens and not seed_terms:
        return GroebnerBasis(ideal.ctx, order, ())
    normal = order.kind == "lex" or (order.kind == "block" and order.inner == "lex")
    raw, _ = _buchberger(gens, key, budget, seed_terms, normal)
    red = _interreduce(raw, key, budget)
    elems = tuple(Polynomial(ideal.ctx, f, _trusted=True) for f in red)
    return GroebnerBasis(ideal.ctx, order, elems, True)


def groebner_basis(ideal: Ideal, order: TermOrder | None = None, *, seed: GroebnerBasis | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order``.

    ``seed`` is an already computed basis (same order) of a sub-ideal; its
    own S-pairs are not revisited.
    """
    if order is None:
        order = seed.order if seed is not None else DEGREVLEX
    if seed is not None and seed.order != order:
        raise ContextMismatchError("seed basis was computed under a different order")
    if seed is not None:
        if seed.ctx != ideal.ctx:
            raise ContextMismatchError("seed basis has a different order or context")
        return _compute_basis(ideal, order, _current_budget(), seed)
    return _cached_basis(_canonical(ideal), order)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G``."""
    if f.ctx != G.ctx:
        raise ContextMismatchError(f"{f} not in context {G.ctx}")
    key = G.order.key
    polys = [g.terms for g in G.elements]
    lms = [max(p, key=key) for p in polys]
    masks = [_support(m) for m in lms]
    rem = _reduce(dict(f.terms), polys, lms, masks, range(len(polys)), key, full=True)
    return Polynomial(f.ctx, rem, _trusted=True)


def ideal_member(f: Polynomial, ideal: Ideal | GroebnerBasis, order: TermOrder = DEGREVLEX) -> bool:
    if not f:
        return True
    G = ideal if isinstance(ideal, GroebnerBasis) else groebner_basis(ideal, order)
    return not normal_form(f, G)


def ideal_contains(big: Ideal, small: Ideal, order: TermOrder = DEGREVLEX) -> bool:
    """True iff ``small`` is contained in ``big``."""
    _same_ctx(big, small)
    if small.is_zero():
        return True
    G = groebner_basis(big, order)
    return all(not normal_form(g, G) for g in small.gens)


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder = DEGREVLEX) -> bool:
    _same_ctx(I, J)
    return ideal_contains(I, J, order) and ideal_contains(J, I, order)


def is_unit_ideal(I: Ideal) -> bool:
    return bool(I.gens) and groebner_basis(I).is_unit()


def _same_ctx(I, J):
    if I.ctx != J.ctx:
        raise ContextMismatchError(f"ideals live in different contexts: {I.ctx} vs {J.ctx}")


def eliminate(ideal: Ideal, k: int, inner: str = "degrevlex") -> Ideal:
    """Generators of the intersection of ``ideal`` with the ring of the
    variables after the first ``k``; the result lives in the smaller context."""
    if not 0 <= k <= len(ideal.ctx):
        raise ValueError(f"cannot eliminate {k} of {len(ideal.ctx)} variables")
    order = TermOrder.block(k, inner)
    G = groebner_basis(ideal, order)
    target = ideal.ctx.drop_leading(k)
    kept = []
    for g in G.elements:
        if any(any(e[:k]) for e in g.terms):
            continue
        kept.append(Polynomial(target, {e[k:]: c for e, c in g.terms.items()}, _trusted=True))
    return Ideal(target, kept)


def _fresh_name(ctx, stem):
    name = stem
    i = 0
    while name in ctx.names:
        i += 1
        name = f"{stem}{i}"
    return name


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the u-free part of <u*I, (1-u)*J>."""
    _same_ctx(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ctx, ())
    u = _fresh_name(I.ctx, "u")
    big = VariableContext((u,) + I.ctx.names)
    pos = list(range(1, len(big)))
    uu = big.gen(u)
    one_minus_u = Polynomial.constant(big, 1) - uu
    gens = [uu * g.embed(big, pos) for g in I.gens] + [one_minus_u * g.embed(big, pos) for g in J.gens]
    out = eliminate(Ideal(big, gens), 1)
    return Ideal(I.ctx, [Polynomial(I.ctx, g.terms, _trusted=True) for g in out.gens])


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ctx(I, J)
    return Ideal(I.ctx, _dedupe(f * g for f in I.gens for g in J.gens))


def _dedupe(polys):
    seen = {}
    for p in polys:
        if p:
            seen.setdefault(p.monic(), None)
    return list(seen)


_power_lock = threading.Lock()
_power_cache: dict = {}


def ideal_power(I: Ideal, n: int) -> Ideal:
    """I^n from products of n generators; I^0 is the unit ideal."""
    if n < 0:
        raise ValueError("power must be non-negative")
    if n == 0:
        return Ideal(I.ctx, [Polynomial.constant(I.ctx, 1)])
    if n == 1:
        return I
    with _power_lock:
        hit = _power_cache.get((I, n))
    if hit is not None:
        return hit
    gens = list(I.gens)
    if all(len(g.terms) == 1 for g in gens):
        res = _monomial_power(I, n)
    else:
        prods = []
        for combo in combinations_with_replacement(range(len(gens)), n):
            p = gens[combo[0]]
            for i in combo[1:]:
                p = p * gens[i]
            prods.append(p)
        res = Ideal(I.ctx, _dedupe(prods))
    with _power_lock:
        if len(_power_cache) > 2048:
            _power_cache.clear()
        _power_cache[(I, n)] = res
    return res


def _monomial_power(I, n):
    # monomial generators: keep only divisibility-minimal products
    from .monomial import MonomialIdeal, mono_power

    M = mono_power(MonomialIdeal.from_ideal(I), n)
    return M.to_ideal()


def clear_caches():
    _cached_basis.cache_clear()
    with _power_lock:
        _power_cache.clear()
