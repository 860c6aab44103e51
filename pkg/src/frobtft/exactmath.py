"""Exact arithmetic in cyclotomic fields and dense exact linear algebra.

Elements of Q(zeta_N) are stored as rational coefficient vectors in the power
basis 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial, so that
equality is plain tuple comparison.  Matrices and tensors are numpy arrays of
dtype ``object`` whose entries are gmpy2 ``mpq`` or ``Scalar``; rational data
stays in ``mpq`` which is much faster than the generic field path.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from itertools import count
from typing import Any, Hashable, Iterable, Sequence

import numpy as np
from gmpy2 import mpq

from .errors import ConductorMismatch, InputError, MissingSqrtWitness

DEFAULT_CONDUCTOR = 120

Number = Any  # int | Fraction | mpq | Scalar


# ---------------------------------------------------------------------------
# cyclotomic field tables
# ---------------------------------------------------------------------------


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, lowest degree first, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise InputError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


class _Field:
    """Reduction tables for one conductor."""

    def __init__(self, n: int):
        self.n = n
        phi = len(cyclotomic_polynomial(n)) - 1
        self.phi = phi
        low = cyclotomic_polynomial(n)[:-1]
        # powers[k] = z^k in the power basis, for 0 <= k < max(n, 2 phi)
        powers = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(max(n, 2 * phi)):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [v - top * c for v, c in zip(vec, low)]
        self.powers = powers

    def reduce_high(self, prod: list) -> tuple:
        phi = self.phi
        out = prod[:phi]
        for d in range(phi, len(prod)):
            c = prod[d]
            if c:
                for i, p in enumerate(self.powers[d]):
                    if p:
                        out[i] += c * p
        return tuple(out)


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def euler_phi(n: int) -> int:
    return _field(n).phi


Q = mpq
_MPQ = type(mpq(0))
_RATIONAL = (int, Fraction, _MPQ)
_ZERO = mpq(0)
_ONE = mpq(1)


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------


class Scalar:
    """Element of the cyclotomic field Q(zeta_N).

    Rational scalars mix freely with any conductor, as do ``int``, ``Fraction``
    and ``mpq`` operands.  Combining two irrational scalars of different
    conductors raises ``ConductorMismatch``; use :meth:`lift` to embed into a
    common field first.
    """

    __slots__ = ("conductor", "coeffs", "_rational")

    def __init__(self, coeffs: Iterable[Number], conductor: int = DEFAULT_CONDUCTOR):
        f = _field(conductor)
        cs = tuple(mpq(c) for c in coeffs)
        if len(cs) != f.phi:
            raise InputError(
                f"conductor {conductor} needs {f.phi} coefficients, got {len(cs)}"
            )
        self.conductor = conductor
        self.coeffs = cs
        self._rational = not any(cs[1:])

    # construction -----------------------------------------------------

    @classmethod
    def rational(cls, q: Number, conductor: int = 1) -> "Scalar":
        vec = [_ZERO] * euler_phi(conductor)
        vec[0] = mpq(q)
        return cls(vec, conductor)

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "Scalar":
        """The root of unity exp(2 pi i k / N)."""
        f = _field(conductor)
        return cls(f.powers[k % conductor], conductor)

    @classmethod
    def coerce(cls, x: Number, conductor: int = 1) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls.rational(x, conductor)

    # inspection -------------------------------------------------------

    def is_rational(self) -> bool:
        return self._rational

    def to_rational(self) -> Any:
        if not self._rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(
            float(c) * complex(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
            for k, c in enumerate(self.coeffs)
            if c
        )

    # arithmetic -------------------------------------------------------

    def _other(self, other: Number) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.conductor == self.conductor:
                return other
            if other._rational:
                return Scalar.rational(other.coeffs[0], self.conductor)
            if self._rational:
                return None  # caller swaps roles
            raise ConductorMismatch(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )
        if isinstance(other, _RATIONAL):
            return Scalar.rational(other, self.conductor)
        return NotImplemented  # type: ignore[return-value]

    def _promote(self, other: Number) -> tuple["Scalar", "Scalar"]:
        o = self._other(other)
        if o is NotImplemented:
            raise TypeError
        if o is None:
            return Scalar.rational(self.coeffs[0], other.conductor), other
        return self, o

    def __add__(self, other: Number) -> "Scalar":
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        return Scalar([x + y for x, y in zip(a.coeffs, b.coeffs)], a.conductor)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar([-x for x in self.coeffs], self.conductor)

    def __pos__(self) -> "Scalar":
        return self

    def __sub__(self, other: Number) -> "Scalar":
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        return Scalar([x - y for x, y in zip(a.coeffs, b.coeffs)], a.conductor)

    def __rsub__(self, other: Number) -> "Scalar":
        return (-self) + other

    def __mul__(self, other: Number) -> "Scalar":
        if isinstance(other, _RATIONAL):
            return Scalar([x * other for x in self.coeffs], self.conductor)
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        if b._rational:
            c = b.coeffs[0]
            return Scalar([x * c for x in a.coeffs], a.conductor)
        if a._rational:
            c = a.coeffs[0]
            return Scalar([x * c for x in b.coeffs], a.conductor)
        f = _field(a.conductor)
        prod = [_ZERO] * (2 * f.phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Scalar(f.reduce_high(prod), a.conductor)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero scalar")
        if self._rational:
            return Scalar.rational(1 / self.coeffs[0], self.conductor)
        f = _field(self.conductor)
        # column j of the multiplication matrix is self * z^j
        cols = []
        for j in range(f.phi):
            cols.append((self * Scalar(f.powers[j], self.conductor)).coeffs)
        mat = np.array(cols, dtype=object).T
        rhs = np.array([[_ONE]] + [[_ZERO]] * (f.phi - 1), dtype=object)
        sol = solve(mat, rhs)
        return Scalar(sol[:, 0], self.conductor)

    def __truediv__(self, other: Number) -> "Scalar":
        if isinstance(other, _RATIONAL):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar([x / other for x in self.coeffs], self.conductor)
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Number) -> "Scalar":
        return self.inverse() * other

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Scalar":
        """Complex conjugate, i.e. the Galois automorphism z -> z^-1."""
        f = _field(self.conductor)
        out = [_ZERO] * f.phi
        for k, c in enumerate(self.coeffs):
            if c:
                for i, p in enumerate(f.powers[(-k) % self.conductor]):
                    if p:
                        out[i] += c * p
        return Scalar(out, self.conductor)

    def lift(self, conductor: int) -> "Scalar":
        """Embed into Q(zeta_M) for a multiple M of the current conductor."""
        if conductor % self.conductor:
            raise ConductorMismatch(
                f"cannot lift conductor {self.conductor} to {conductor}"
            )
        step = conductor // self.conductor
        out = Scalar.rational(0, conductor)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + Scalar.zeta(conductor, k * step) * c
        return out

    # comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _RATIONAL):
            return self._rational and self.coeffs[0] == other
        if isinstance(other, Scalar):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            if self._rational and other._rational:
                return self.coeffs[0] == other.coeffs[0]
            n = math.lcm(self.conductor, other.conductor)
            return self.lift(n).coeffs == other.lift(n).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._rational:
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    # formatting -------------------------------------------------------

    def __repr__(self) -> str:
        return f"Scalar({self}, N={self.conductor})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mon = "z" if k == 1 else f"z^{k}"
                terms.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}


_TERM = re.compile(r"^\s*([+-]?)\s*([0-9/]*)\s*\*?\s*(z(?:\^(-?\d+))?)?\s*$")


def _parse_expr(text: str, conductor: int) -> Scalar:
    # sums of terms like "1/2", "-z^3", "2*z", "3/4 z^5"
    pieces = re.split(r"(?<=[0-9z)])\s*(?=[+-])", text.strip())
    total = Scalar.rational(0, conductor)
    for piece in pieces:
        m = _TERM.match(piece)
        if not m or not (m.group(2) or m.group(3)):
            raise InputError(f"cannot parse scalar {text!r}")
        sign, coef, mon, power = m.groups()
        c = mpq(coef) if coef else _ONE
        if sign == "-":
            c = -c
        if mon:
            k = int(power) if power is not None else 1
            total = total + Scalar.zeta(conductor, k) * c
        else:
            total = total + c
    return total


def parse_scalar(obj: Any, conductor: int = 1) -> Scalar:
    """Read a scalar from its JSON form.

    Accepted forms: ``{"conductor": N, "coeffs": [...]}``, a bare coefficient
    list in the ambient conductor, a number, or an expression string such as
    ``"1/2 - z^3"`` where ``z`` is the primitive root of the ambient field.
    """
    if isinstance(obj, Scalar):
        return obj
    if isinstance(obj, dict):
        try:
            n = int(obj["conductor"])
            coeffs = obj["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad scalar object {obj!r}") from exc
        s = Scalar([mpq(c) for c in coeffs], n)
        if n != conductor and conductor != 1:
            s = s.lift(conductor)
        return s
    if isinstance(obj, list):
        return Scalar([mpq(c) for c in obj], conductor)
    if isinstance(obj, bool):
        raise InputError(f"bad scalar {obj!r}")
    if isinstance(obj, _RATIONAL):
        return Scalar.rational(obj, conductor)
    if isinstance(obj, str):
        try:
            return Scalar.rational(mpq(obj), conductor)
        except ValueError:
            return _parse_expr(obj, conductor)
    raise InputError(f"bad scalar {obj!r}")


def simplify(x: Number) -> Number:
    """Collapse rational scalars to ``mpq`` (keeps numpy fast paths)."""
    if isinstance(x, Scalar) and x.is_rational():
        return x.coeffs[0]
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    return x


def scalar_json(x: Number) -> Any:
    if isinstance(x, Scalar):
        if x.is_rational():
            return str(x.coeffs[0])
        return x.to_json()
    return str(mpq(x))


# ---------------------------------------------------------------------------
# declared square roots
# ---------------------------------------------------------------------------


class SqrtRegistry:
    """Records square-root choices so that each radicand has one value.

    The registry is the only mutable state in the package; confine it to one
    thread or guard it externally.
    """

    def __init__(self) -> None:
        self._choices: dict[Any, Any] = {}

    def declare(self, x: Number, witness: Number) -> Number:
        if witness * witness != x:
            raise InputError(f"sqrt witness {witness} does not square to {x}")
        key = simplify(x)
        if key in self._choices:
            return self._choices[key]
        self._choices[key] = witness
        return witness

    def sqrt(self, x: Number) -> Number:
        try:
            return self._choices[simplify(x)]
        except KeyError:
            raise MissingSqrtWitness(f"missing sqrt witness for {x}") from None

    def __contains__(self, x: Number) -> bool:
        return simplify(x) in self._choices

    def clear(self) -> None:
        self._choices.clear()


DEFAULT_REGISTRY = SqrtRegistry()


def declared_sqrt(x: Number, witness: Number, registry: SqrtRegistry | None = None) -> Number:
    """Check ``witness**2 == x`` and return the recorded choice for ``x``."""
    reg = DEFAULT_REGISTRY if registry is None else registry
    return reg.declare(x, witness)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def exact_array(data: Any, shape: Sequence[int] | None = None) -> np.ndarray:
    """Object array with ints turned into ``mpq`` and rational Scalars collapsed."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    flat = arr.reshape(-1)
    for i in range(flat.size):
        flat[i] = simplify(flat[i])
    return arr


def zeros(shape: Sequence[int] | int) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(_ZERO)
    return arr


def identity(n: int) -> np.ndarray:
    arr = zeros((n, n))
    for i in range(n):
        arr[i, i] = _ONE
    return arr


def is_zero(x: Any) -> bool:
    if isinstance(x, np.ndarray):
        return all(v == 0 for v in x.reshape(-1))
    return x == 0


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over the field, with pivot columns."""
    a = exact_array(m).copy()
    if a.ndim != 2:
        raise InputError("rref needs a matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        p = a[r, c]
        if p != 1:
            inv = 1 / p
            a[r] = [simplify(x * inv) for x in a[r]]
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                a[i] = [simplify(x - f * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def kernel(m: np.ndarray) -> np.ndarray:
    """Basis of the null space, one vector per column."""
    m = np.asarray(m, dtype=object)
    rows, cols = m.shape
    if rows == 0:
        return identity(cols)
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    k = zeros((cols, len(free)))
    for j, f in enumerate(free):
        k[f, j] = _ONE
        for i, p in enumerate(pivots):
            k[p, j] = simplify(-r[i, f])
    return k


def column_basis(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Column-reduced echelon basis of the column space.

    Returns ``(B, pivot_rows)``: the columns of ``B`` span the column space of
    ``m`` and ``B[pivot_rows]`` is the identity, so coordinates of any vector
    in the span are read off at the pivot rows.
    """
    m = np.asarray(m, dtype=object)
    r, pivots = rref(m.T)
    return r[: len(pivots)].T.copy(), list(pivots)


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """One solution of ``a @ x == b``; free variables are set to zero."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    rows, cols = a.shape
    r, pivots = rref(np.concatenate([a, b], axis=1))
    if any(p >= cols for p in pivots):
        raise InputError("linear system is inconsistent")
    x = zeros((cols, b.shape[1]))
    for i, p in enumerate(pivots):
        x[p] = r[i, cols:]
    return x[:, 0] if vec else x


def inverse(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    n = a.shape[0]
    if a.shape != (n, n):
        raise InputError("inverse needs a square matrix")
    r, pivots = rref(np.concatenate([a, identity(n)], axis=1))
    if pivots[:n] != list(range(n)) or (len(pivots) > n and pivots[n] < n):
        raise InputError("matrix is singular")
    return r[:, n:].copy()


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.ndim == 2 and b.ndim == 2:
        # skeletal morphisms are mostly zero, so only visit nonzero entries
        if a.shape[1] != b.shape[0]:
            raise InputError(f"shape mismatch {a.shape} @ {b.shape}")
        out = zeros((a.shape[0], b.shape[1]))
        brows = [
            [(j, v) for j, v in enumerate(b[k]) if v != 0] for k in range(b.shape[0])
        ]
        for i in range(a.shape[0]):
            row = out[i]
            for k, x in enumerate(a[i]):
                if x != 0:
                    for j, v in brows[k]:
                        row[j] = row[j] + x * v
            for j in range(b.shape[1]):
                row[j] = simplify(row[j])
        return out
    out = np.dot(a, b)
    if isinstance(out, np.ndarray):
        flat = out.reshape(-1)
        for i in range(flat.size):
            flat[i] = simplify(flat[i])
        return out
    return simplify(out)


# ---------------------------------------------------------------------------
# tensors
# ---------------------------------------------------------------------------


class Tensor:
    """Object array with optional semantic tags per axis."""

    def __init__(self, data: Any, labels: Sequence[Hashable] | None = None):
        self.data = np.asarray(data, dtype=object)
        if labels is None:
            labels = tuple(range(self.data.ndim))
        labels = tuple(labels)
        if len(labels) != self.data.ndim:
            raise InputError("one label per axis required")
        self.labels = labels

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for x, y in zip(self.data.reshape(-1), other.data.reshape(-1))
        )

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape}, labels={self.labels})"


def contract(t1: Tensor, t2: Tensor, pairs: Sequence[tuple[int, int]]) -> Tensor:
    """Contract axis ``i`` of ``t1`` with axis ``j`` of ``t2`` for each pair."""
    ax1 = [i for i, _ in pairs]
    ax2 = [j for _, j in pairs]
    for i, j in pairs:
        if t1.shape[i] != t2.shape[j]:
            raise InputError(
                f"dimension mismatch: axis {i} has {t1.shape[i]}, axis {j} has {t2.shape[j]}"
            )
    data = np.tensordot(t1.data, t2.data, axes=(ax1, ax2)) if pairs else np.multiply.outer(t1.data, t2.data)
    data = np.asarray(data, dtype=object)
    labels = [l for k, l in enumerate(t1.labels) if k not in ax1]
    labels += [l for k, l in enumerate(t2.labels) if k not in ax2]
    return Tensor(data, labels)


def _self_trace(data: np.ndarray, legs: list) -> tuple[np.ndarray, list]:
    while True:
        seen: dict = {}
        hit = None
        for k, l in enumerate(legs):
            if l in seen:
                hit = (seen[l], k)
                break
            seen[l] = k
        if hit is None:
            return data, legs
        i, j = hit
        data = np.asarray(np.trace(data, axis1=i, axis2=j), dtype=object)
        legs = [l for k, l in enumerate(legs) if k not in hit]


def contract_network(
    tensors: Sequence[tuple[np.ndarray, Sequence[Hashable]]],
    open_legs: Sequence[Hashable] = (),
) -> Any:
    """Contract a tensor network given as ``(array, leg_labels)`` pairs.

    Every label shared by two tensors (or repeated within one) is summed.
    Labels in ``open_legs`` must occur exactly once and become the axes of the
    result, in that order.  A greedy order keeps intermediate tensors small.
    """
    work = []
    for data, legs in tensors:
        data = np.asarray(data, dtype=object)
        legs = list(legs)
        if data.ndim != len(legs):
            raise InputError("leg count does not match tensor rank")
        work.append(_self_trace(data, legs))
    ids = count()
    pool = {next(ids): item for item in work}

    def size_after(a: int, b: int) -> int:
        (da, la), (db, lb) = pool[a], pool[b]
        shared = set(la) & set(lb)
        s = 1
        for d, l in zip(da.shape, la):
            if l not in shared:
                s *= d
        for d, l in zip(db.shape, lb):
            if l not in shared:
                s *= d
        return s

    while True:
        best = None
        keys = sorted(pool)
        for x in range(len(keys)):
            for y in range(x + 1, len(keys)):
                a, b = keys[x], keys[y]
                if set(pool[a][1]) & set(pool[b][1]):
                    cand = (size_after(a, b), a, b)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            break
        _, a, b = best
        (da, la), (db, lb) = pool.pop(a), pool.pop(b)
        shared = [l for l in la if l in set(lb)]
        ax1 = [la.index(l) for l in shared]
        ax2 = [lb.index(l) for l in shared]
        data = np.asarray(np.tensordot(da, db, axes=(ax1, ax2)), dtype=object)
        legs = [l for l in la if l not in shared] + [l for l in lb if l not in shared]
        pool[next(ids)] = _self_trace(data, legs)

    data, legs = None, []
    for key in sorted(pool):
        d, l = pool[key]
        if data is None:
            data, legs = d, list(l)
        else:
            data = np.asarray(np.multiply.outer(data, d), dtype=object)
            legs += list(l)
    if data is None:
        data = np.asarray(_ONE, dtype=object)
    if sorted(map(repr, legs)) != sorted(map(repr, open_legs)) or len(legs) != len(open_legs):
        raise InputError(f"open legs {legs} do not match requested {list(open_legs)}")
    if not legs:
        return simplify(data.reshape(()).item() if isinstance(data, np.ndarray) else data)
    perm = [legs.index(l) for l in open_legs]
    out = np.transpose(data, perm).copy()
    flat = out.reshape(-1)
    for i in range(flat.size):
        flat[i] = simplify(flat[i])
    return out
