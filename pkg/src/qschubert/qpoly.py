"""The ring of symmetric polynomials in n variables, in the e-basis.

Elements are integer combinations of products e_{lam_1} e_{lam_2} ...,
keyed by the partition of subscripts; e_k vanishes for k > n, so keys
have parts at most n.  On top of this the module builds the family of
Pfaffian polynomials indexed by partitions with parts at most n: a
single subscript gives e_k itself, a pair (i, j) is defined by

    pf(i, j) = e_i e_j + 2 * sum_{k=1}^{n-i} (-1)^k e_{i+k} e_{j-k},

and longer indices are expanded as a Pfaffian of the pair values.  These
form a free integer basis of the ring; converting into that basis is an
exact unitriangular solve, and the resulting structure constants carry
the Schubert calculus of the maximal isotropic Grassmannians.
"""

from __future__ import annotations

from .combinat import (Partition, is_strict, partition,
                       partitions_with_parts_at_most, skew_component_stats,
                       horizontal_strip_additions)


class ContractViolation(RuntimeError):
    """An internal identity the engine guarantees failed to hold."""


class EPoly:
    """Integer polynomial in e_1..e_n, keyed by partitions of subscripts."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[Partition, int] | None = None):
        self.n = n
        clean = {}
        for key, c in (coeffs or {}).items():
            if c == 0:
                continue
            key = partition(key)
            if key and key[0] > n:
                raise ValueError(f"key {key} has a part above n={n}")
            clean[key] = clean.get(key, 0) + c
        self.coeffs = {k: c for k, c in clean.items() if c != 0}

    @classmethod
    def monomial(cls, n: int, lam, coeff: int = 1) -> "EPoly":
        return cls(n, {partition(lam): coeff})

    @classmethod
    def zero(cls, n: int) -> "EPoly":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "EPoly":
        return cls(n, {(): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "EPoly") -> "EPoly":
        if self.n != other.n:
            raise ValueError("mixed variable counts")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return EPoly(self.n, out)

    def __sub__(self, other: "EPoly") -> "EPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "EPoly":
        return EPoly(self.n, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "EPoly") -> "EPoly":
        if self.n != other.n:
            raise ValueError("mixed variable counts")
        out: dict[Partition, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                out[key] = out.get(key, 0) + c1 * c2
        return EPoly(self.n, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, EPoly) and self.n == other.n
                and self.coeffs == other.coeffs)

    def homogeneous_weight(self) -> int | None:
        """Common weight of all keys, None for 0; raises if inhomogeneous."""
        if not self.coeffs:
            return None
        weights = {sum(k) for k in self.coeffs}
        if len(weights) > 1:
            raise ValueError(f"inhomogeneous element, weights {sorted(weights)}")
        return weights.pop()

    def __repr__(self) -> str:
        if not self.coeffs:
            return "EPoly(0)"
        terms = " + ".join(f"{c}*e{list(k)}" for k, c in sorted(self.coeffs.items()))
        return f"EPoly({terms})"


_pair_cache: dict[tuple, EPoly] = {}
_qt_cache: dict[tuple, EPoly] = {}


def _pair_epoly(i: int, j: int, n: int) -> EPoly:
    """The two-subscript Pfaffian polynomial, valid for i >= j >= 0."""
    key = (i, j, n)
    hit = _pair_cache.get(key)
    if hit is not None:
        return hit
    if j == 0:
        out = EPoly.one(n) if i == 0 else qtilde_epoly((i,), n)
    elif i > n:
        out = EPoly.zero(n)
    else:
        terms = {(i, j) if i >= j else (j, i): 1} if j <= n else {}
        out = EPoly(n, terms)
        for k in range(1, n - i + 1):
            lo = j - k
            if lo < 0:
                break
            key2 = (i + k,) if lo == 0 else (i + k, lo)
            out = out + EPoly.monomial(n, key2, 2 * (-1) ** k)
    _pair_cache[key] = out
    return out


def qtilde_epoly(lam, n: int) -> EPoly:
    """Expand the Pfaffian polynomial with index ``lam`` in the e-basis.

    Defined for arbitrary partitions; vanishes when a part exceeds n.
    Indices of length >= 3 are expanded by Pfaffian Laplace expansion
    along pairs containing the last entry, padding with a zero part when
    the length is odd.
    """
    lam = partition(lam)
    key = (lam, n)
    hit = _qt_cache.get(key)
    if hit is not None:
        return hit
    if lam and lam[0] > n:
        out = EPoly.zero(n)
    elif len(lam) == 0:
        out = EPoly.one(n)
    elif len(lam) == 1:
        out = EPoly.monomial(n, lam)
    elif len(lam) == 2:
        out = _pair_epoly(lam[0], lam[1], n)
    else:
        parts = lam if len(lam) % 2 == 0 else lam + (0,)
        r = len(parts)
        out = EPoly.zero(n)
        for j in range(r - 1):
            rest = parts[:j] + parts[j + 1:r - 1]
            term = _pair_epoly(parts[j], parts[r - 1], n) * qtilde_epoly(rest, n)
            out = out + term.scale((-1) ** j)
    _qt_cache[key] = out
    return out


def qtilde_pfaffian_first_row(lam, n: int) -> EPoly:
    """Same Pfaffian expanded along pairs containing the first entry.

    Exists to cross-check that different Laplace expansions agree.
    """
    lam = partition(lam)
    if lam and lam[0] > n:
        return EPoly.zero(n)
    if len(lam) <= 2:
        return qtilde_epoly(lam, n)
    parts = lam if len(lam) % 2 == 0 else lam + (0,)
    r = len(parts)
    out = EPoly.zero(n)
    for j in range(1, r):
        rest = parts[1:j] + parts[j + 1:]
        term = _pair_epoly(parts[0], parts[j], n) * qtilde_pfaffian_first_row(rest, n)
        out = out + term.scale((-1) ** (j - 1))
    return out


_transition_cache: dict[tuple, tuple] = {}


def _transition(n: int, w: int):
    """Rows of the basis-to-e transition matrix in weight w, plus the basis
    ordered descending; asserts unitriangularity with unit pivots."""
    key = (n, w)
    hit = _transition_cache.get(key)
    if hit is not None:
        return hit
    basis = sorted(partitions_with_parts_at_most(w, n), reverse=True)
    rows = {}
    for nu in basis:
        row = qtilde_epoly(nu, n)
        if row.coeffs.get(nu) != 1:
            raise ContractViolation(f"pivot at {nu} is {row.coeffs.get(nu)}, not 1")
        for mu in row.coeffs:
            if mu < nu:
                raise ContractViolation(f"row {nu} reaches below the diagonal at {mu}")
        rows[nu] = row
    result = (basis, rows)
    _transition_cache[key] = result
    return result


def expand_in_qtilde(f: EPoly, n: int) -> dict[Partition, int]:
    """Coefficients of a homogeneous element in the Pfaffian-polynomial basis.

    Solved by back-substitution over the integers: the least key of the
    residual can only come from the basis element with that index.
    """
    if f.n != n:
        raise ValueError("element lives in a different variable count")
    w = f.homogeneous_weight()
    if w is None:
        return {}
    _, rows = _transition(n, w)
    residual = dict(f.coeffs)
    out: dict[Partition, int] = {}
    while residual:
        nu = min(residual)
        c = residual[nu]
        out[nu] = c
        for mu, v in rows[nu].coeffs.items():
            newc = residual.get(mu, 0) - c * v
            if newc:
                residual[mu] = newc
            else:
                residual.pop(mu, None)
    return out


def qtilde_structure(lam, mu, n: int) -> dict[Partition, int]:
    """Structure constants of the product of two basis elements."""
    lam = partition(lam)
    mu = partition(mu)
    if (lam and lam[0] > n) or (mu and mu[0] > n):
        raise ValueError(f"parts must be at most n={n}")
    return expand_in_qtilde(qtilde_epoly(lam, n) * qtilde_epoly(mu, n), n)


def ptilde_structure(lam, mu, n: int) -> dict[Partition, int]:
    """Structure constants after rescaling each index by 2^(-length).

    The rescaled constants are 2^(len(nu)-len(lam)-len(mu)) times the
    plain ones and are always integers; a failure of divisibility means
    the engine is broken, not bad input.
    """
    lam = partition(lam)
    mu = partition(mu)
    shift = len(lam) + len(mu)
    out = {}
    for nu, c in qtilde_structure(lam, mu, n).items():
        exp = len(nu) - shift
        if exp >= 0:
            out[nu] = c * (1 << exp)
        else:
            q, r = divmod(c, 1 << -exp)
            if r:
                raise ContractViolation(
                    f"coefficient {c} at {nu} is not divisible by 2^{-exp}")
            out[nu] = q
    return out


def qtilde_pieri(lam, p: int, n: int) -> dict[Partition, int]:
    """Pieri expansion of a strict index times a single subscript.

    Sums 2^N(lam, mu) over all mu with parts at most n (not necessarily
    strict) obtained by adding p boxes, no two in one column, where N
    counts the components of mu/lam avoiding the first column.
    """
    lam = partition(lam)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not strict")
    if not 0 <= p <= n:
        raise ValueError(f"p={p} out of range 0..{n}")
    out = {}
    for mu in horizontal_strip_additions(lam, p, max_part=n):
        _, off = skew_component_stats(lam, mu)
        out[mu] = 1 << off
    return out


def clear_caches():
    _pair_cache.clear()
    _qt_cache.clear()
    _transition_cache.clear()
