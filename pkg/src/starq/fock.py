"""Exact oracle: the differential-operator module on twisted Laurent forms.

For a base exponent vector m the space F_m consists of finite combinations
of monomials x_1^{e_1} .. x_n^{e_n} ξ_S with e ≡ m (mod Z^n) and total
degree sum(e) + |S| equal to sum(m).  A block matrix pair (A, B) acts by

    sum_ij a_ij (x_i ∂x_j + ξ_i ∂ξ_j) + b_ij (x_i ∂ξ_j + ξ_i ∂x_j),

which is a homomorphism from the block superalgebra, so the module is a
faithful playground for checking classification claims: every weight
space in its support has dimension exactly 2^n, half even and half odd.

Coefficients live in the field of rational functions of the declared
parameters (differentiating x^(c+k) produces polynomials in c), realized
as sympy expressions; all linear algebra is exact.

Submodule spans are resolved on a finite window of the weight-offset
lattice by applying the simple generators until stable; if an application
ever leaves the window the closure raises instead of under-approximating,
so a completed closure is the exact submodule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from .errors import WindowTooSmall
from .scalars import Scalar
from .weights import Weight

MonomialKey = Tuple[Tuple[int, ...], int]  # (integer exponent offsets, xi bitmask)


def _sym(scalar: Scalar):
    expr = sympy.Rational(scalar.rational.numerator, scalar.rational.denominator)
    for name, coeff in scalar.formal:
        expr += sympy.Rational(coeff.numerator, coeff.denominator) * sympy.Symbol(name)
    return expr


def _is_zero(expr) -> bool:
    return sympy.cancel(expr) == 0


@dataclass(frozen=True)
class FockSpace:
    """Ambient data: base exponents; the total degree sum(base) is conserved."""

    base: Tuple[Scalar, ...]

    @staticmethod
    def of(values: Iterable) -> "FockSpace":
        return FockSpace(
            tuple(v if isinstance(v, Scalar) else Scalar.of(v) for v in values)
        )

    @property
    def n(self) -> int:
        return len(self.base)

    def exponent(self, key: MonomialKey, idx: int) -> Scalar:
        """Exponent of x_{idx+1} in the monomial (0-based idx)."""
        return self.base[idx] + Scalar.of(key[0][idx])

    def monomial_weight(self, key: MonomialKey) -> Weight:
        offs, mask = key
        return Weight(tuple(
            self.base[i] + Scalar.of(offs[i] + ((mask >> i) & 1))
            for i in range(self.n)
        ))

    def weight_offsets(self, key: MonomialKey) -> Tuple[int, ...]:
        offs, mask = key
        return tuple(offs[i] + ((mask >> i) & 1) for i in range(self.n))

    def offsets_of(self, nu: Weight) -> Optional[Tuple[int, ...]]:
        """Integer offsets of nu from the base, if nu sits on the lattice."""
        shifts = []
        for i in range(self.n):
            k = (nu.coords[i] - self.base[i]).as_integer()
            if k is None:
                return None
            shifts.append(k)
        return tuple(shifts) if sum(shifts) == 0 else None

    def monomials_at(self, nu: Weight) -> List[MonomialKey]:
        """All monomials of weight nu: exactly one per xi subset."""
        shifts = self.offsets_of(nu)
        if shifts is None:
            return []
        out = []
        for mask in range(1 << self.n):
            offs = tuple(shifts[i] - ((mask >> i) & 1) for i in range(self.n))
            out.append((offs, mask))
        return sorted(out)

    def monomial_str(self, key: MonomialKey) -> str:
        offs, mask = key
        parts = []
        for i in range(self.n):
            e = self.base[i] + Scalar.of(offs[i])
            if e.is_zero():
                continue
            if e.is_integer() and e.rational == 1:
                parts.append(f"x{i + 1}")
            elif e.is_integer() and e.rational > 0:
                parts.append(f"x{i + 1}^{e}")
            else:
                parts.append(f"x{i + 1}^({e})")
        for i in range(self.n):
            if (mask >> i) & 1:
                parts.append(f"xi{i + 1}")
        return " ".join(parts) if parts else "1"


class FockElement:
    """Finite exact combination of monomials of one space."""

    def __init__(self, space: FockSpace,
                 terms: Optional[Dict[MonomialKey, object]] = None):
        self.space = space
        self.terms: Dict[MonomialKey, object] = {}
        for key, coeff in (terms or {}).items():
            c = sympy.expand(coeff)
            if c != 0:
                self.terms[key] = c

    @staticmethod
    def monomial(space: FockSpace, offsets: Sequence[int], xi: Sequence[int] = (),
                 coeff=1) -> "FockElement":
        mask = 0
        for i in xi:
            mask |= 1 << (i - 1)
        return FockElement(space, {(tuple(offsets), mask): sympy.sympify(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockElement") -> "FockElement":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return FockElement(self.space, out)

    def __sub__(self, other: "FockElement") -> "FockElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "FockElement":
        return FockElement(
            self.space, {k: c * sympy.sympify(factor) for k, c in self.terms.items()}
        )

    def parity(self) -> Optional[int]:
        parities = {key[1].bit_count() % 2 for key in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def weight(self) -> Optional[Weight]:
        weights = {self.space.monomial_weight(k) for k in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def __eq__(self, other) -> bool:
        return isinstance(other, FockElement) and (self - other).is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = sympy.cancel(self.terms[key])
            mono = self.space.monomial_str(key)
            if c == 1:
                parts.append(f"+ {mono}")
            elif c == -1:
                parts.append(f"- {mono}")
            else:
                parts.append(f"+ ({c}) {mono}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"FockElement({self})"


# -- generators ----------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """A block-matrix element: even entries A, odd entries B (1-based, sparse)."""

    n: int
    even: Tuple[Tuple[int, int, int], ...] = ()
    odd: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def parity(self) -> Optional[int]:
        if self.even and not self.odd:
            return 0
        if self.odd and not self.even:
            return 1
        return None


def gen_e(n: int, i: int) -> Generator:
    return Generator(n, even=((i, i + 1, 1),))


def gen_f(n: int, i: int) -> Generator:
    return Generator(n, even=((i + 1, i, 1),))


def gen_odd_e(n: int, i: int) -> Generator:
    return Generator(n, odd=((i, i + 1, 1),))


def gen_odd_f(n: int, i: int) -> Generator:
    return Generator(n, odd=((i + 1, i, 1),))


def gen_h(n: int, j: int) -> Generator:
    return Generator(n, even=((j, j, 1),))


def gen_odd_h(n: int, j: int) -> Generator:
    return Generator(n, odd=((j, j, 1),))


def simple_generators(n: int) -> List[Generator]:
    gens: List[Generator] = []
    for i in range(1, n):
        gens += [gen_e(n, i), gen_f(n, i), gen_odd_e(n, i), gen_odd_f(n, i)]
    for j in range(1, n + 1):
        gens += [gen_h(n, j), gen_odd_h(n, j)]
    return gens


def bracket(g: Generator, h: Generator) -> Generator:
    """Superbracket as matrix data: [A,A'] and odd-odd anticommutators land
    in the even block, mixed products in the odd one."""
    even: Dict[Tuple[int, int], int] = {}
    odd: Dict[Tuple[int, int], int] = {}

    def mat(entries):
        m: Dict[Tuple[int, int], int] = {}
        for i, j, c in entries:
            m[(i, j)] = m.get((i, j), 0) + c
        return m

    def mul_into(acc, m1, m2, sign=1):
        for (i, k1), c1 in m1.items():
            for (k2, j), c2 in m2.items():
                if k1 == k2:
                    acc[(i, j)] = acc.get((i, j), 0) + sign * c1 * c2

    a1, b1, a2, b2 = mat(g.even), mat(g.odd), mat(h.even), mat(h.odd)
    mul_into(even, a1, a2)
    mul_into(even, a2, a1, -1)
    mul_into(odd, a1, b2)
    mul_into(odd, b2, a1, -1)
    mul_into(odd, b1, a2)
    mul_into(odd, a2, b1, -1)
    mul_into(even, b1, b2)
    mul_into(even, b2, b1)
    return Generator(
        g.n,
        even=tuple((i, j, c) for (i, j), c in sorted(even.items()) if c != 0),
        odd=tuple((i, j, c) for (i, j), c in sorted(odd.items()) if c != 0),
    )


def _xi_sign(mask: int, pos: int) -> int:
    """Koszul sign for crossing the xi factors below slot ``pos`` (0-based)."""
    below = mask & ((1 << pos) - 1)
    return -1 if below.bit_count() % 2 else 1


def apply(g: Generator, v: FockElement) -> FockElement:
    """Exact image of v under the differential operator attached to g."""
    space = v.space
    out: Dict[MonomialKey, object] = {}

    def add(key: MonomialKey, coeff) -> None:
        out[key] = out.get(key, 0) + coeff

    for (offs, mask), coeff in v.terms.items():
        for i, j, c in g.even:
            ib, jb = i - 1, j - 1
            # x_i d/dx_j
            e_j = _sym(space.exponent((offs, mask), jb))
            if e_j != 0:
                new = list(offs)
                new[jb] -= 1
                new[ib] += 1
                add((tuple(new), mask), coeff * c * e_j)
            # xi_i d/dxi_j
            if (mask >> jb) & 1:
                removed = mask & ~(1 << jb)
                if not (removed >> ib) & 1:
                    sign = _xi_sign(mask, jb) * _xi_sign(removed, ib)
                    add((offs, removed | (1 << ib)), coeff * c * sign)
        for i, j, c in g.odd:
            ib, jb = i - 1, j - 1
            # x_i d/dxi_j
            if (mask >> jb) & 1:
                removed = mask & ~(1 << jb)
                new = list(offs)
                new[ib] += 1
                add((tuple(new), removed), coeff * c * _xi_sign(mask, jb))
            # xi_i d/dx_j
            e_j = _sym(space.exponent((offs, mask), jb))
            if e_j != 0 and not (mask >> ib) & 1:
                new = list(offs)
                new[jb] -= 1
                add((tuple(new), mask | (1 << ib)), coeff * c * e_j * _xi_sign(mask, ib))
    return FockElement(space, out)


def super_commutator_defect(g: Generator, h: Generator, v: FockElement) -> FockElement:
    """apply([g,h]) − (apply(g)apply(h) − (−1)^{|g||h|} apply(h)apply(g)) at v."""
    sign = -1 if (g.parity == 1 and h.parity == 1) else 1
    direct = apply(bracket(g, h), v)
    composed = apply(g, apply(h, v)) - apply(h, apply(g, v)).scale(sign)
    return direct - composed


def weight_space_dim(mu: Weight, nu: Weight) -> int:
    """2^n when nu lies on the support lattice of F_mu, else 0."""
    return (1 << mu.n) if FockSpace(mu.coords).offsets_of(nu) is not None else 0


# -- windowed weight-space linear algebra ---------------------------------------


class _Span:
    """Row-reduced span over the fixed monomial basis of one weight space."""

    def __init__(self, basis: List[MonomialKey]):
        self.basis = basis
        self.index = {k: p for p, k in enumerate(basis)}
        self.rows: List[List[object]] = []
        self.pivots: List[int] = []

    def vector_of(self, elem: FockElement) -> List[object]:
        vec = [sympy.Integer(0)] * len(self.basis)
        for key, coeff in elem.terms.items():
            vec[self.index[key]] += coeff
        return vec

    def reduce(self, vec: List[object]) -> List[object]:
        vec = [sympy.cancel(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if vec[p] != 0:
                factor = sympy.cancel(vec[p] / row[p])
                vec = [sympy.cancel(a - factor * b) for a, b in zip(vec, row)]
        return vec

    def insert(self, vec: List[object]) -> bool:
        vec = self.reduce(vec)
        for p, x in enumerate(vec):
            if x != 0:
                self.rows.append(vec)
                self.pivots.append(p)
                order = sorted(range(len(self.pivots)), key=lambda r: self.pivots[r])
                self.rows = [self.rows[r] for r in order]
                self.pivots = [self.pivots[r] for r in order]
                return True
        return False

    def contains(self, vec: List[object]) -> bool:
        return all(_is_zero(x) for x in self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)


class SubmoduleWindow:
    """Exact submodule slices on the window max|t| <= window of weight offsets."""

    def __init__(self, space: FockSpace, generators: Sequence[FockElement],
                 window: int):
        self.space = space
        self.window = window
        self.spans: Dict[Tuple[int, ...], _Span] = {}
        self._close(generators)

    def span_at(self, wkey: Tuple[int, ...]) -> _Span:
        if wkey not in self.spans:
            nu = Weight(tuple(
                self.space.base[i] + Scalar.of(wkey[i]) for i in range(self.space.n)
            ))
            self.spans[wkey] = _Span(self.space.monomials_at(nu))
        return self.spans[wkey]

    def inside(self, wkey: Tuple[int, ...]) -> bool:
        return max(abs(t) for t in wkey) <= self.window

    def _close(self, generators: Sequence[FockElement]) -> None:
        ops = simple_generators(self.space.n)
        queue: List[FockElement] = []
        for g in generators:
            if g.is_zero():
                continue
            wkey = self.space.weight_offsets(next(iter(g.terms)))
            if not self.inside(wkey):
                raise WindowTooSmall(f"generator weight offset {wkey} outside window")
            span = self.span_at(wkey)
            if span.insert(span.vector_of(g)):
                queue.append(g)
        while queue:
            elem = queue.pop()
            for op in ops:
                image = apply(op, elem)
                if not image.terms:
                    continue
                wkey = self.space.weight_offsets(next(iter(image.terms)))
                if not self.inside(wkey):
                    raise WindowTooSmall(
                        f"submodule closure escaped the window at offset {wkey}"
                    )
                span = self.span_at(wkey)
                if span.insert(span.vector_of(image)):
                    queue.append(image)

    def contains(self, elem: FockElement) -> bool:
        if elem.is_zero():
            return True
        wkey = self.space.weight_offsets(next(iter(elem.terms)))
        if not self.inside(wkey):
            return False
        span = self.span_at(wkey)
        return span.contains(span.vector_of(elem))


def find_primitive(space: FockSpace, quotient_generators: Sequence[FockElement],
                   nu: Weight, window: int) -> List[FockElement]:
    """Basis of weight-nu vectors primitive modulo the given submodule.

    Finds all v in the nu weight space whose images under every simple
    raising generator, even and odd, fall inside the submodule generated
    by ``quotient_generators``; the results are reduced modulo the
    submodule slice at nu, so members of the submodule itself drop out.
    Raises when the window cannot hold the submodule closure.
    """
    n = space.n
    sub = SubmoduleWindow(space, quotient_generators, window)
    basis = space.monomials_at(nu)
    if not basis:
        return []
    nu_offsets = space.offsets_of(nu)
    raising = [g for i in range(1, n) for g in (gen_e(n, i), gen_odd_e(n, i))]
    # target span per raising generator; outside the window the submodule
    # slice is zero (the closure did not escape), so use an empty span
    blocks: List[_Span] = []
    for g in raising:
        step = g.even or g.odd
        i = step[0][0]
        target = Weight(tuple(
            nu.coords[p] + Scalar.of((1 if p == i - 1 else 0) - (1 if p == i else 0))
            for p in range(n)
        ))
        toffs = space.offsets_of(target)
        if toffs is not None and sub.inside(toffs):
            blocks.append(sub.span_at(toffs))
        else:
            blocks.append(_Span(space.monomials_at(target)))
    columns: List[List[object]] = []
    for key in basis:
        unit = FockElement(space, {key: sympy.Integer(1)})
        col: List[object] = []
        for g, span in zip(raising, blocks):
            image = apply(g, unit)
            col.extend(span.reduce(span.vector_of(image)))
        columns.append(col)
    matrix = sympy.Matrix([
        [columns[j][r] for j in range(len(basis))] for r in range(len(columns[0]))
    ])
    nu_span = sub.span_at(nu_offsets)
    out = []
    for vec in matrix.nullspace():
        reduced = nu_span.reduce([sympy.cancel(x) for x in vec])
        if all(_is_zero(x) for x in reduced):
            continue
        lead = next(x for x in reduced if not _is_zero(x))
        normalized = [sympy.cancel(x / lead) for x in reduced]
        out.append(FockElement(
            space, {basis[p]: normalized[p] for p in range(len(basis))}
        ))
    out.sort(key=lambda e: sorted(e.terms))
    return out


# -- the odd intertwining operator ----------------------------------------------


def apply_odd_intertwiner(v: FockElement) -> FockElement:
    """Image under sum_i (x_i d/dxi_i − xi_i d/dx_i), an odd weight-zero map."""
    space = v.space
    out: Dict[MonomialKey, object] = {}

    def add(key, coeff):
        out[key] = out.get(key, 0) + coeff

    for (offs, mask), coeff in v.terms.items():
        for i in range(space.n):
            if (mask >> i) & 1:
                removed = mask & ~(1 << i)
                new = list(offs)
                new[i] += 1
                add((tuple(new), removed), coeff * _xi_sign(mask, i))
            else:
                e_i = _sym(space.exponent((offs, mask), i))
                if e_i != 0:
                    new = list(offs)
                    new[i] -= 1
                    add((tuple(new), mask | (1 << i)), -coeff * e_i * _xi_sign(mask, i))
    return FockElement(space, out)


def random_monomial(space: FockSpace, rng: random.Random, spread: int = 3) -> FockElement:
    """Deterministic sample monomial on the degree lattice of the space."""
    n = space.n
    mask = rng.randrange(1 << n)
    offs = [rng.randint(-spread, spread) for _ in range(n)]
    offs[rng.randrange(n)] -= sum(offs) + mask.bit_count()
    return FockElement(space, {(tuple(offs), mask): sympy.Integer(1)})


def check_odd_symmetry(n: int, samples: int = 50, seed: int = 0) -> Dict:
    """Report on the odd operator J: supercommutation with sampled
    generators and J^2 = 0 on the degree-zero space."""
    rng = random.Random(seed)
    space = FockSpace.of([0] * n)
    gens = simple_generators(n)
    failures = []
    for _ in range(samples):
        v = random_monomial(space, rng)
        g = gens[rng.randrange(len(gens))]
        sign = -1 if g.parity == 1 else 1
        defect = apply_odd_intertwiner(apply(g, v)) - apply(
            g, apply_odd_intertwiner(v)
        ).scale(sign)
        if not defect.is_zero():
            failures.append({"kind": "commutator", "witness": str(v)})
        if not apply_odd_intertwiner(apply_odd_intertwiner(v)).is_zero():
            failures.append({"kind": "square", "witness": str(v)})
    return {
        "check": "odd_symmetry",
        "status": "pass" if not failures else "fail",
        "samples": samples,
        "witnesses": failures[:5],
    }
