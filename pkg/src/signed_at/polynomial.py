"""Exact expansion of the signed graph polynomial.

For edges ``uv`` with ``u < v`` in the vertex ordering the polynomial is the
product of ``(x_u - sign(uv) * x_v)``.  Coefficients are Python ints, so no
overflow is possible however large ``2**|E|`` gets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import SignedGraph
from .limits import InvalidArgumentError, check_cap, expansion_cap


@dataclass(frozen=True)
class SignedPolynomial:
    nvars: int
    degree: int
    terms: dict = field(compare=True)  # exponent tuple -> nonzero int

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise InvalidArgumentError("point dimension mismatch")
        total = 0
        for mono, c in self.terms.items():
            t = c
            for x, e in zip(point, mono):
                if e:
                    t *= x**e
            total += t
        return total


def expand(g: SignedGraph, cap: int | None = None) -> SignedPolynomial:
    """Expand the graph polynomial of ``g`` exactly."""
    check_cap(g.m, cap, expansion_cap, "polynomial expansion")
    n = g.n
    base = g.m + 1
    # exponent vectors packed as base-(|E|+1) integers; no digit can overflow
    weight = [base**i for i in range(n)]
    terms = {0: 1}
    for i, j, s in g.edges:
        wi, wj = weight[i], weight[j]
        nxt: dict = {}
        for key, c in terms.items():
            a = key + wi
            nxt[a] = nxt.get(a, 0) + c
            b = key + wj
            nxt[b] = nxt.get(b, 0) - s * c
        terms = {k: c for k, c in nxt.items() if c}
    out = {}
    for key, c in terms.items():
        mono = []
        for _ in range(n):
            key, r = divmod(key, base)
            mono.append(r)
        out[tuple(mono)] = c
    return SignedPolynomial(n, g.m, out)


def evaluate_product(g: SignedGraph, point: Sequence[int]) -> int:
    """Evaluate the factored form directly, without expanding."""
    out = 1
    for i, j, s in g.edges:
        out *= point[i] - s * point[j]
    return out


def coefficient(p: SignedPolynomial, d: Sequence[int]) -> int:
    d = tuple(d)
    if len(d) != p.nvars:
        raise InvalidArgumentError(f"exponent vector has length {len(d)}, expected {p.nvars}")
    return p.terms.get(d, 0)


@dataclass(frozen=True)
class ATResult:
    """Alon-Tarsi number with its witness.

    ``witness`` is an exponent vector (polynomial route) or an
    :class:`~signed_at.orientation.Orientation` (orientation route).  A nonzero
    coefficient with every exponent below ``k`` implies the graph is
    ``k``-choosable (Combinatorial Nullstellensatz), recorded in ``implies``.
    """

    k: int
    witness: object
    method: str
    coefficient: int | None = None

    @property
    def implies(self) -> str:
        return f"{self.k}-choosable"


def at_number_poly(g: SignedGraph, cap: int | None = None) -> ATResult:
    p = expand(g, cap=cap)
    best = None
    for mono, c in p.terms.items():
        key = (max(mono, default=0), mono)
        if best is None or key < best[0]:
            best = (key, c)
    (top, mono), c = best
    return ATResult(top + 1, mono, "polynomial", c)


def dumps(p: SignedPolynomial) -> str:
    """One line per term: comma separated exponents, a space, the coefficient."""
    lines = [",".join(map(str, mono)) + " " + str(c) for mono, c in p.items()]
    return "\n".join(lines) + ("\n" if lines else "")


def loads(text: str) -> SignedPolynomial:
    terms = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        exps, coef = line.rstrip().rsplit(" ", 1)
        exps = exps.strip()
        mono = tuple(int(x) for x in exps.split(",")) if exps else ()
        terms[mono] = int(coef)
    if not terms:
        raise InvalidArgumentError("empty polynomial dump")
    nvars = {len(m) for m in terms}
    degs = {sum(m) for m in terms}
    if len(nvars) != 1 or len(degs) != 1:
        raise InvalidArgumentError("dump is not a homogeneous polynomial in a fixed number of variables")
    return SignedPolynomial(nvars.pop(), degs.pop(), terms)
