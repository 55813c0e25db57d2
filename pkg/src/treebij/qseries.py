"""Polynomials in ``q`` with integer coefficients, Gaussian binomials, and
checks of the q-multisum binomial identity and its two supporting identities.

Every identity is evaluated as an exact polynomial equality; no floating
point and no Laurent terms are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InputError, InvariantError
from .partitions import conjugate, n_lambda, partitions


class QPolynomial:
    """Dense polynomial in ``q``; ``coeffs[k]`` is the coefficient of ``q^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise InputError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coeff])

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, x in enumerate(b):
            out[k] += x
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "QPolynomial":
        return QPolynomial.constant(other) - self

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPolynomial":
        out = QPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by ``q^k``."""
        if k < 0:
            raise InputError(f"negative shift {k}")
        if not self.coeffs:
            return self
        return QPolynomial([0] * k + list(self.coeffs))

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient of an exact division over the integers; raises if there is a remainder."""
        d = other.coeffs
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        if len(rem) < len(d):
            if any(rem):
                raise ArithmeticError("division leaves a remainder")
            return QPolynomial()
        quot = [0] * (len(rem) - len(d) + 1)
        lead = d[-1]
        for k in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[k + len(d) - 1], lead)
            if r:
                raise ArithmeticError("division is not exact over the integers")
            quot[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        if any(rem):
            raise ArithmeticError("division leaves a remainder")
        return QPolynomial(quot)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)


ZERO = QPolynomial()
ONE = QPolynomial.constant(1)


def q_int(n: int) -> QPolynomial:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise InputError("q_int needs n >= 0")
    return QPolynomial([1] * n)


def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise InputError("q_factorial needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial by the recurrence ``[n, k] = [n-1, k-1] + q^k [n-1, k]``.

    Zero when ``k < 0`` or ``k > n`` (including negative ``n``).
    """
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_pochhammer(n: int) -> QPolynomial:
    """``(q; q)_n = (1 - q)(1 - q^2)...(1 - q^n)``."""
    out = ONE
    for j in range(1, n + 1):
        out = out * QPolynomial([1] + [0] * (j - 1) + [-1])
    return out


def q_binomial_product(n: int, k: int) -> QPolynomial:
    """Gaussian binomial from the ``(q;q)`` quotient; independent of :func:`q_binomial`."""
    if k < 0 or k > n:
        return ZERO
    return q_pochhammer(n).exact_div(q_pochhammer(k) * q_pochhammer(n - k))


def q_multinomial(n: int, parts: Sequence[int]) -> QPolynomial:
    """``(q;q)_n / prod (q;q)_{e_j}`` as a product of Gaussian binomials."""
    parts = list(parts)
    if any(e < 0 for e in parts):
        raise InputError(f"negative part in {parts}")
    if sum(parts) != n:
        raise InputError(f"parts {parts} do not sum to {n}")
    out = ONE
    acc = 0
    for e in parts:
        acc += e
        out = out * q_binomial(acc, e)
    return out


def _multiplicities(conj: Sequence[int], n: int) -> list[int]:
    """``e_i = lambda'_i - lambda'_{i+1}`` with ``lambda'_0 = n``."""
    ext = [n] + list(conj) + [0]
    return [ext[i] - ext[i + 1] for i in range(len(ext) - 1)]


def qbis_terms(m: int, n: int, p: int, l: int) -> dict[tuple[int, tuple[int, ...]], QPolynomial]:
    """Nonzero summands of the polynomial form of the q-identity, keyed by ``(i, lambda)``."""
    terms: dict[tuple[int, tuple[int, ...]], QPolynomial] = {}
    for lam in partitions(m - 1, max_len=n):
        conj = conjugate(lam)
        e = _multiplicities(conj, n)
        nl = n_lambda(lam)
        for i, ei in enumerate(e):
            if ei < 1:
                continue
            exp = (p + 1) * (m - i - 1) + 2 * nl - 2 * sum(c - 1 for c in conj[:i])
            if exp < 0:
                raise InvariantError(f"negative exponent at i={i}, lambda={lam}")
            reduced = list(e)
            reduced[i] -= 1
            term = (q_binomial(p + i - l, p) * q_multinomial(n - 1, reduced)).shift(exp)
            if not term.is_zero():
                terms[(i, lam)] = term
    return terms


def _check_params(m: int, n: int, p: int, l: int) -> None:
    if m < 1 or n < 1 or p < 0 or l < 0:
        raise InputError("need m, n >= 1 and p, l >= 0")


def thm4_check(m: int, n: int, p: int, l: int) -> tuple[QPolynomial, QPolynomial]:
    """Both sides of the q-multisum identity in its polynomial form.

    ``lhs = sum_i sum_lambda q^(...) [p+i-l, p] [n-1; e_0, ..., e_i - 1, ...]``
    and ``rhs = [n+m-2+p-l, n-1+p]``.
    """
    _check_params(m, n, p, l)
    lhs = ZERO
    for term in qbis_terms(m, n, p, l).values():
        lhs = lhs + term
    return lhs, q_binomial(n + m - 2 + p - l, n - 1 + p)


def thm4_gen_check(m: int, n: int, p: int, l: int) -> tuple[QPolynomial, QPolynomial]:
    """Both sides of the identity in its original form, with the ``[e_i]_q`` factor.

    The split exponent ``(p+1)(m-1) + 2n(lambda)`` plus ``(1-p)i - 2 sum lambda'_k``
    is combined before building the monomial; the combined exponent is
    nonnegative whenever ``e_i >= 1``, and terms with ``e_i = 0`` vanish.
    """
    _check_params(m, n, p, l)
    lhs = ZERO
    for lam in partitions(m - 1, max_len=n):
        conj = conjugate(lam)
        e = _multiplicities(conj, n)
        base = (p + 1) * (m - 1) + 2 * n_lambda(lam)
        mult = q_multinomial(n, e)
        for i, ei in enumerate(e):
            if ei == 0:
                continue
            exp = base + (1 - p) * i - 2 * sum(conj[:i])
            if exp < 0:
                raise InvariantError(f"negative exponent at i={i}, lambda={lam}")
            lhs = lhs + (mult * q_binomial(i + p - l, p) * q_int(ei)).shift(exp)
    return lhs, q_int(n) * q_binomial(n + m - 2 + p - l, n - 1 + p)


def bridge_check(n: int, e: Sequence[int], i: int) -> tuple[QPolynomial, QPolynomial]:
    """``[n; e_0, e_1, ...] [e_i]_q`` against ``[n]_q [n-1; ..., e_i - 1, ...]``."""
    e = list(e)
    if not 0 <= i < len(e) or e[i] < 1:
        raise InputError(f"need e_{i} >= 1")
    reduced = list(e)
    reduced[i] -= 1
    return q_multinomial(n, e) * q_int(e[i]), q_int(n) * q_multinomial(n - 1, reduced)


def bridge_cases(m: int, n: int) -> Iterable[tuple[list[int], int]]:
    """Every ``(e, i)`` with ``e`` from a partition of ``m - 1`` into at most ``n`` parts and ``e_i >= 1``."""
    for lam in partitions(m - 1, max_len=n):
        e = _multiplicities(conjugate(lam), n)
        for i, ei in enumerate(e):
            if ei >= 1:
                yield e, i


def eq_lemma_check(n: int, k: int) -> tuple[QPolynomial, QPolynomial]:
    """``[n+k-1, k]`` against ``sum_{lambda |- k, l(lambda) <= n} q^(2 n(lambda)) [n; e_0, e_1, ...]``."""
    if n < 1 or k < 0:
        raise InputError("need n >= 1 and k >= 0")
    rhs = ZERO
    for lam in partitions(k, max_len=n):
        e = _multiplicities(conjugate(lam), n)
        rhs = rhs + q_multinomial(n, e).shift(2 * n_lambda(lam))
    return q_binomial(n + k - 1, k), rhs


def eq_simple_check(n: int, m: int, p: int, l: int) -> tuple[QPolynomial, QPolynomial]:
    """``sum_t [p+t-l, p] [n+m-3-t, n-2] q^((p+1)(m-1-t))`` against ``[n+p+m-2-l, m-1-l]``."""
    if n < 2 or m < 1 or p < 0 or l < 0:
        raise InputError("need n >= 2, m >= 1 and p, l >= 0")
    lhs = ZERO
    # the second factor vanishes once t > m - 1
    for t in range(m):
        term = q_binomial(p + t - l, p) * q_binomial(n + m - 3 - t, n - 2)
        if not term.is_zero():
            lhs = lhs + term.shift((p + 1) * (m - 1 - t))
    return lhs, q_binomial(n + p + m - 2 - l, m - 1 - l)


# -- successive Durfee squares ------------------------------------------------

@dataclass(frozen=True)
class RectanglePartition:
    """A partition inside a box of at most ``rows`` parts, each at most ``cols``."""

    parts: tuple[int, ...]
    rows: int
    cols: int

    def __post_init__(self):
        parts = tuple(x for x in self.parts if x)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"{parts} is not weakly decreasing")
        if any(x < 0 for x in parts):
            raise InputError("negative part")
        if len(parts) > self.rows or (parts and parts[0] > self.cols):
            raise InputError(f"{parts} does not fit a {self.rows} x {self.cols} rectangle")
        object.__setattr__(self, "parts", parts)


@dataclass(frozen=True)
class DurfeeDecomposition:
    """Pieces of a partition in the ``(m-1-l) x (n-1+p)`` box.

    ``corner`` is the full ``(m-i-1) x p`` rectangle at the top left;
    ``lower`` the rows below it (an ``(i-l) x p`` box partition); ``mu`` the
    sizes of successive Durfee squares of the part right of column ``p``;
    ``blocks[j]`` the partition right of the ``j``-th square, which fits a
    ``mu_j x (mu_{j-1} - mu_j)`` box with ``mu_0 = n - 1``.
    """

    i: int
    mu: tuple[int, ...]
    lower: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    corner: int

    def weight(self) -> int:
        return self.corner + sum(self.lower) + sum(s * s for s in self.mu) + sum(map(sum, self.blocks))


def durfee_box(m: int, n: int, p: int, l: int) -> tuple[int, int]:
    """(rows, cols) of the box: ``(m - 1 - l, n - 1 + p)``."""
    return m - 1 - l, n - 1 + p


def durfee_decompose(lam: RectanglePartition | Sequence[int], m: int, n: int, p: int, l: int) -> DurfeeDecomposition:
    _check_params(m, n, p, l)
    rows, cols = durfee_box(m, n, p, l)
    parts = lam.parts if isinstance(lam, RectanglePartition) else tuple(lam)
    if rows < 0:
        raise InputError("empty box: m - 1 - l < 0")
    parts = RectanglePartition(parts, rows, cols).parts
    wide = [x - p for x in parts if x > p]
    k = len(wide)
    i = m - k - 1
    lower = tuple(parts[k:])
    mu: list[int] = []
    blocks: list[tuple[int, ...]] = []
    start, bound = 0, n - 1
    while start < k:
        s = 0
        while start + s < k and wide[start + s] >= s + 1:
            s += 1
        rest = tuple(x - s for x in wide[start:start + s] if x > s)
        if rest and rest[0] > bound - s:
            raise InvariantError(f"block {rest} exceeds its {s} x {bound - s} box")
        mu.append(s)
        blocks.append(rest)
        start += s
        bound = s
    return DurfeeDecomposition(i, tuple(mu), lower, tuple(blocks), p * k)


def durfee_compose(d: DurfeeDecomposition, m: int, n: int, p: int, l: int) -> tuple[int, ...]:
    """Inverse of :func:`durfee_decompose`."""
    _check_params(m, n, p, l)
    rows, cols = durfee_box(m, n, p, l)
    k = m - d.i - 1
    if sum(d.mu) != k or len(d.blocks) != len(d.mu):
        raise InputError("mu must have total m - i - 1 and one block per square")
    wide: list[int] = []
    bound = n - 1
    for s, block in zip(d.mu, d.blocks):
        if s > bound or len(block) > s or (block and block[0] > bound - s):
            raise InputError(f"block {block} does not fit its {s} x {bound - s} box")
        padded = list(block) + [0] * (s - len(block))
        wide.extend(s + x for x in padded)
        bound = s
    if any(x > p for x in d.lower) or len(d.lower) > rows - k:
        raise InputError("lower part does not fit")
    parts = tuple(x + p for x in wide) + tuple(d.lower)
    return RectanglePartition(parts, rows, cols).parts


def durfee_label(i: int, mu: Sequence[int]) -> tuple[int, ...]:
    """The partition ``kappa`` of ``m - 1`` indexing the summand that ``(i, mu)`` feeds.

    ``kappa'_j = mu_j + 1`` for ``j <= i`` and ``mu_j`` beyond.
    """
    width = max(i, len(mu))
    padded = list(mu) + [0] * (width - len(mu))
    conj = [x + 1 if j < i else x for j, x in enumerate(padded)]
    if any(a < b for a, b in zip(conj, conj[1:])):
        raise InvariantError(f"(i={i}, mu={tuple(mu)}) does not give a partition")
    return conjugate([x for x in conj if x])


def durfee_regroup(m: int, n: int, p: int, l: int) -> dict[tuple[int, tuple[int, ...]], QPolynomial]:
    """Sum ``q^|lambda|`` over the box, grouped by the summand each ``lambda`` feeds."""
    rows, cols = durfee_box(m, n, p, l)
    groups: dict[tuple[int, tuple[int, ...]], QPolynomial] = {}
    if rows < 0:
        return groups
    for size in range(rows * cols + 1):
        for lam in partitions(size, max_len=rows, max_part=cols):
            d = durfee_decompose(lam, m, n, p, l)
            key = (d.i, durfee_label(d.i, d.mu))
            groups[key] = groups.get(key, ZERO) + QPolynomial.monomial(size)
    return groups
