"""Exact arithmetic in GF(p^e).

An element c_0 + c_1 x + ... + c_{e-1} x^{e-1} over GF(p) is packed into the
integer code sum(c_i * p**i), so equality of elements is equality of codes and
every element is always in canonical reduced form.  A :class:`FieldCtx` owns
the defining modulus, the distinguished generator ``alpha`` of the
multiplicative group, and (whenever q <= 2**20) full log/antilog tables that
make multiplication, inversion, powering and discrete logarithms O(1) and let
the linear-algebra layer run vectorised over numpy arrays of codes.  Fields
above the table threshold fall back to polynomial multiplication with modular
reduction and baby-step/giant-step logarithms.

Defaults are deterministic so that element encodings are reproducible across
runs: the modulus is the lexicographically smallest monic irreducible of
degree e (coefficients compared constant term first) and ``alpha`` is the
first element of multiplicative order q - 1 in the same coefficient order.
Both can be overridden, which is how serialized field descriptors round-trip.

Contexts are immutable after construction; every operation is a pure function
of (context, inputs) and safe to use from concurrent tasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DegreeMismatchError,
    MalformedDescriptorError,
    NoPreimageError,
    NotADivisorError,
    NotInSubfieldError,
    NotPrimeError,
    ReducibleModulusError,
    ZeroElementError,
)

# Log/antilog tables are built up to this field size; 5^8 = 390625 sits below.
LOG_TABLE_LIMIT = 1 << 20

# Fields beyond this are rejected outright (exponent arithmetic contract).
MAX_FIELD_SIZE = 1 << 31

# Type alias for the Galois-form level; functions validate 0 <= l <= e-1.
GaloisLevel = int

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3 * 10**24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n stays below 2**31 here)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over GF(p): coefficient lists, constant first.
# Used only before tables exist (modulus search, alpha search, big-q fallback).
# ---------------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    # m monic of degree >= 1
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
    return _ptrim(a)


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a: Sequence[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while n:
        if n & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        n >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # reduce a mod b after making b monic
        inv = pow(b[-1], -1, p)
        b = [c * inv % p for c in b]
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) (degree >= 1).

    Checks x^(p^e) == x (mod f) together with gcd(x^(p^(e/t)) - x, f) = 1 for
    every prime t dividing e.
    """
    f = list(coeffs)
    e = len(f) - 1
    if e < 1 or f[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    if e == 1:
        return True
    # powers[i] = x^(p^i) mod f, built by iterated p-th powers
    power = _pmod([0, 1], f, p)
    powers = [power]
    for _ in range(e):
        power = _ppowmod(power, p, f, p)
        powers.append(power)
    x = [0, 1]
    # x^(p^e) must come back to x
    if _ptrim([(c1 - c2) % p for c1, c2 in _pad_sub(powers[e], x, p)]):
        return False
    for t in factorize(e):
        g = [(c1 - c2) % p for c1, c2 in _pad_sub(powers[e // t], x, p)]
        if len(_pgcd(f, _ptrim(g), p)) != 1:
            return False
    return True


def _pad_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[tuple[int, int]]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Low-degree coefficients are compared first, i.e. candidates are ordered by
    the tuple (c_0, c_1, ..., c_{e-1}).  Returns the full coefficient list of
    length e + 1 (constant first, leading 1 last).
    """
    if e == 1:
        return (0, 1)
    for rank in range(p**e):
        digits = []
        m = rank
        for _ in range(e):
            digits.append(m % p)
            m //= p
        # digits currently hold (c_{e-1}, ..., c_0); reverse so that rank
        # order enumerates tuples (c_0, ..., c_{e-1}) ascending
        coeffs = digits[::-1] + [1]
        if coeffs[0] == 0:
            continue  # divisible by x
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found (unreachable)")


def _rank_to_code(rank: int, p: int, e: int) -> int:
    """Map an enumeration rank to the element whose coefficient tuple
    (c_0, ..., c_{e-1}) is the rank-th tuple in ascending lex order."""
    code = 0
    for i in range(e):  # peel least significant digit = c_{e-1-i}
        code += (rank % p) * p ** (e - 1 - i)
        rank //= p
    return code


@dataclass(frozen=True)
class PrimePower:
    """A validated prime power q = p^e."""

    p: int
    e: int
    q: int

    @classmethod
    def make(cls, p: int, e: int) -> "PrimePower":
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"p = {p} is not prime")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"exponent e = {e} must be a positive integer")
        q = p**e
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"q = p^e = {q} exceeds the supported limit 2^31")
        return cls(p, e, q)


class FieldElement:
    """One element of a specific FieldCtx, always in canonical reduced form."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: "FieldCtx", code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.code_to_coeffs(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.ctx is self.ctx
            and other.code == self.code
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.code))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.add(self.code, other.code))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.sub(self.code, other.code))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.mul(self.code, other.code))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.mul(self.code, self.ctx.inv(other.code)))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.pow(self.code, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.ctx.q}), coeffs={list(self.coeffs)})"


class FieldCtx:
    """A concrete model of GF(p^e); construct through :func:`field_new`."""

    def __init__(
        self,
        pp: PrimePower,
        modulus: tuple[int, ...],
        alpha_coeffs: tuple[int, ...] | None = None,
    ):
        self.pp = pp
        self.p = pp.p
        self.e = pp.e
        self.q = pp.q
        self.modulus = modulus
        self._mod_list = list(modulus)
        self._ppow = np.array([self.p**i for i in range(self.e)], dtype=np.int64)
        self._qm1_factors = tuple(sorted(factorize(self.q - 1))) if self.q > 2 else ()
        self.has_tables = self.q <= LOG_TABLE_LIMIT
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._bsgs_baby: dict[int, int] | None = None
        self._bsgs_step = 0
        if alpha_coeffs is None:
            self._alpha_code = self._find_alpha()
        else:
            code = self.coeffs_to_code(alpha_coeffs)
            if code == 0 or self.order(code) != self.q - 1:
                raise ValueError("supplied alpha does not have multiplicative order q - 1")
            self._alpha_code = code
        if self.has_tables:
            self._build_tables()

    def _find_alpha(self) -> int:
        """First element of order q - 1 in ascending coefficient-lex order."""
        if self.q == 2:
            return 1
        targets = [(self.q - 1) // f for f in self._qm1_factors]
        for rank in range(1, self.q):
            code = _rank_to_code(rank, self.p, self.e)
            if code == 0:
                continue
            if all(self._slow_pow(code, t) != 1 for t in targets):
                return code
        raise AssertionError("no primitive element found (unreachable)")

    # -- construction helpers -------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        pa = self.code_to_coeffs(a)
        pb = self.code_to_coeffs(b)
        return self.coeffs_to_code(
            _pmulmod(_ptrim(list(pa)), _ptrim(list(pb)), self._mod_list, self.p)
        )

    def _slow_pow(self, a: int, n: int) -> int:
        result = self.coeffs_to_code([1])
        base = a
        while n:
            if n & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            n >>= 1
        return result

    def _mul_matrix(self, g: int) -> np.ndarray:
        """e x e matrix over GF(p) for v -> coeffs(g * poly(v)), row-vector side."""
        mat = np.zeros((self.e, self.e), dtype=np.int64)
        for j in range(self.e):
            prod = self._slow_mul(g, self.p**j)
            mat[j, :] = self.code_to_coeffs(prod)
        return mat

    def _build_tables(self) -> None:
        q = self.q
        exp = np.empty(q - 1, dtype=np.int64)
        block = min(1024, q - 1)
        val = 1
        for i in range(block):
            exp[i] = val
            val = self._slow_mul(val, self._alpha_code)
        if q - 1 > block:
            step_mat = self._mul_matrix(self._slow_pow(self._alpha_code, block))
            coeffs = (exp[:block, None] // self._ppow) % self.p
            pos = block
            while pos < q - 1:
                coeffs = (coeffs @ step_mat) % self.p
                n = min(block, q - 1 - pos)
                exp[pos : pos + n] = coeffs[:n] @ self._ppow
                pos += n
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        if log[0] != -1 or np.any(log[1:] < 0):
            raise AssertionError("alpha does not generate the multiplicative group")
        self._exp = exp
        self._log = log

    # -- element constructors ---------------------------------------------------

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, self._alpha_code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} out of range for GF({self.q})")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.e:
            raise ValueError("coefficient vector longer than the extension degree")
        return FieldElement(self, self.coeffs_to_code([c % self.p for c in coeffs]))

    def scalar(self, n: int) -> FieldElement:
        """Embedding of the integers through the prime subfield."""
        return FieldElement(self, n % self.p)

    def alpha_pow(self, i: int) -> FieldElement:
        return FieldElement(self, self.alpha_pow_code(i))

    def alpha_pow_code(self, i: int) -> int:
        i %= self.q - 1 if self.q > 2 else 1
        if self._exp is not None:
            return int(self._exp[i])
        return self._slow_pow(self._alpha_code, i)

    def elements(self) -> Iterator[FieldElement]:
        for code in range(self.q):
            yield FieldElement(self, code)

    def code_to_coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def coeffs_to_code(self, coeffs: Sequence[int]) -> int:
        code = 0
        for i, c in enumerate(coeffs):
            code += c * self.p**i
        return code

    # -- scalar arithmetic on codes ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out = 0
        mult = 1
        for _ in range(self.e):
            out += (-a % self.p) * mult
            a //= self.p
            mult *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroElementError("zero has no multiplicative inverse")
        if self._exp is not None:
            return int(self._exp[(-int(self._log[a])) % (self.q - 1)])
        return self._slow_pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroElementError("zero cannot be raised to a negative power")
            return 0
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) * (n % (self.q - 1))) % (self.q - 1)])
        return self._slow_pow(a, n % (self.q - 1))

    def power_p(self, a: int, j: int) -> int:
        """Raise to the p^j power (j >= 0, not range-checked: p^e acts as identity)."""
        if a == 0:
            return 0
        return self.pow(a, pow(self.p, j, self.q - 1) if self.q > 2 else 0)

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroElementError("the discrete logarithm of zero is undefined")
        if self._log is not None:
            return int(self._log[a])
        return self._bsgs(a)

    def _bsgs(self, a: int) -> int:
        n = self.q - 1
        m = math.isqrt(n - 1) + 1
        if self._bsgs_baby is None:
            baby: dict[int, int] = {}
            val = 1
            for j in range(m):
                baby.setdefault(val, j)
                val = self._slow_mul(val, self._alpha_code)
            self._bsgs_baby = baby
            self._bsgs_step = self._slow_pow(self.inv(self._alpha_code), m)
        giant = self._bsgs_step
        cur = a
        for i in range(m + 1):
            j = self._bsgs_baby.get(cur)
            if j is not None:
                return (i * m + j) % n
            cur = self._slow_mul(cur, giant)
        raise AssertionError("BSGS failed (alpha not primitive?)")

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroElementError("zero has no multiplicative order")
        t = self.q - 1
        for f in self._qm1_factors:
            while t % f == 0 and self.pow(a, t // f) == 1:
                t //= f
        return t

    # -- vectorised arithmetic on int64 arrays of codes ---------------------------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._exp is None:
            return self._map2(self.add, a, b)
        da = (a[..., None] // self._ppow) % self.p
        db = (b[..., None] // self._ppow) % self.p
        return ((da + db) % self.p) @ self._ppow

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.array(a, dtype=np.int64, copy=True)
        if self._exp is None:
            return self._map1(self.neg, a)
        da = (a[..., None] // self._ppow) % self.p
        return ((-da) % self.p) @ self._ppow

    def sub_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._exp is None:
            return self._map2(self.sub, a, b)
        da = (a[..., None] // self._ppow) % self.p
        db = (b[..., None] // self._ppow) % self.p
        return ((da - db) % self.p) @ self._ppow

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._exp is None:
            return self._map2(self.mul, a, b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_arr(self, a: np.ndarray, n: int) -> np.ndarray:
        """Entrywise a^n for a fixed exponent n >= 0 (zeros stay zero)."""
        if n == 0:
            return np.ones_like(np.asarray(a, dtype=np.int64))
        if self._exp is None:
            return self._map1(lambda x: self.pow(x, n), a)
        a = np.asarray(a, dtype=np.int64)
        out = self._exp[(self._log[a] * (n % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def power_p_arr(self, a: np.ndarray, j: int) -> np.ndarray:
        n = pow(self.p, j, self.q - 1) if self.q > 2 else 1
        return self.pow_arr(a, n if n else self.q - 1)

    def sum_arr(self, a: np.ndarray, axis: int) -> np.ndarray:
        """Field sum along one axis."""
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self._exp is None:
            out = np.zeros(np.delete(a.shape, axis), dtype=np.int64)
            for sl in np.rollaxis(a, axis):
                out = self._map2(self.add, out, sl)
            return out
        digits = (a[..., None] // self._ppow) % self.p
        return (digits.sum(axis=axis) % self.p) @ self._ppow

    def _map1(self, fn, a):
        a = np.asarray(a, dtype=np.int64)
        flat = [fn(int(x)) for x in a.reshape(-1)]
        return np.array(flat, dtype=np.int64).reshape(a.shape)

    def _map2(self, fn, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        flat = [fn(int(x), int(y)) for x, y in zip(a.reshape(-1), b.reshape(-1))]
        return np.array(flat, dtype=np.int64).reshape(a.shape)

    # -- subfields ----------------------------------------------------------------

    def subfield_codes(self, l: GaloisLevel) -> list[int]:
        """All of GF(p^l) inside this field: zero, then ascending powers of its
        generator (requires l >= 1 and l | e)."""
        if l < 1 or self.e % l:
            raise NotInSubfieldError(f"GF({self.p}^{l}) is not a subfield of GF({self.q})")
        sub_order = self.p**l - 1
        gen = (self.q - 1) // sub_order
        return [0] + [self.alpha_pow_code(gen * i) for i in range(1, sub_order + 1)]

    def in_subfield(self, code: int, l: GaloisLevel) -> bool:
        """Membership test x in GF(p^l): fixed point of the l-fold Frobenius."""
        if l < 1 or self.e % l:
            raise NotInSubfieldError(f"GF({self.p}^{l}) is not a subfield of GF({self.q})")
        return self.power_p(code, l) == code

    def check_level(self, l: GaloisLevel) -> None:
        if not 0 <= l <= self.e - 1:
            raise ValueError(f"Galois level l = {l} out of range [0, {self.e - 1}]")

    def __repr__(self) -> str:
        return f"FieldCtx(GF({self.p}^{self.e}), modulus={list(self.modulus)})"


# ---------------------------------------------------------------------------
# Context construction (cached so repeated requests share tables).
# ---------------------------------------------------------------------------

_CTX_CACHE: dict[tuple, FieldCtx] = {}


def field_new(
    p: int,
    e: int,
    modulus: Sequence[int] | None = None,
    alpha: Sequence[int] | None = None,
) -> FieldCtx:
    """Build (or fetch the cached) GF(p^e) context.

    ``modulus`` is a full coefficient list of length e + 1, constant term
    first, monic; ``alpha`` a coefficient vector overriding the default
    primitive element.  Both default to the deterministic choices documented
    in the module docstring.
    """
    pp = PrimePower.make(p, e)
    mod_key = tuple(int(c) for c in modulus) if modulus is not None else None
    alpha_key = None
    if alpha is not None:
        alpha_key = tuple(int(c) for c in alpha)
        if len(alpha_key) > e or any(not 0 <= c < p for c in alpha_key):
            raise ValueError("alpha coefficients out of range")
        alpha_key = alpha_key + (0,) * (e - len(alpha_key))

    request_key = (p, e, mod_key, alpha_key)
    ctx = _CTX_CACHE.get(request_key)
    if ctx is not None:
        return ctx

    if mod_key is None:
        mod = default_modulus(p, e)
    else:
        mod = mod_key
        if len(mod) != e + 1 or mod[-1] != 1:
            raise DegreeMismatchError(
                f"modulus must be monic of degree {e} (got coefficients {list(mod)})"
            )
        if any(not 0 <= c < p for c in mod):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(list(mod), p):
            raise ReducibleModulusError(f"{list(mod)} is reducible over GF({p})")

    ctx = _CTX_CACHE.get((p, e, mod, alpha_key))
    if ctx is None:
        ctx = FieldCtx(pp, mod, alpha_key)
        # deduplicate against the fully resolved identity so that descriptors
        # naming the default modulus/alpha round-trip to the same context
        resolved_key = (p, e, mod, tuple(ctx.alpha.coeffs))
        ctx = _CTX_CACHE.setdefault(resolved_key, ctx)
        _CTX_CACHE[(p, e, mod, alpha_key)] = ctx
    _CTX_CACHE[request_key] = ctx
    return ctx


# ---------------------------------------------------------------------------
# Public operations mirroring the context methods on FieldElement values.
# ---------------------------------------------------------------------------

def frobenius(ctx: FieldCtx, x: FieldElement, l: GaloisLevel) -> FieldElement:
    """x^(p^l); the l-fold Frobenius automorphism."""
    ctx.check_level(l)
    return FieldElement(ctx, ctx.power_p(x.code, l))


def element_order(ctx: FieldCtx, x: FieldElement) -> int:
    """Smallest t >= 1 with x^t = 1."""
    return ctx.order(x.code)


def nth_root_of_unity(ctx: FieldCtx, n: int) -> FieldElement:
    """The canonical primitive n-th root of unity alpha^((q-1)/n)."""
    if n < 1 or (ctx.q - 1) % n:
        raise NotADivisorError(f"n = {n} does not divide q - 1 = {ctx.q - 1}")
    return ctx.alpha_pow((ctx.q - 1) // n)


def discrete_log(ctx: FieldCtx, x: FieldElement) -> int:
    """The unique t in [0, q-1) with alpha^t = x."""
    return ctx.dlog(x.code)


def power_preimage(ctx: FieldCtx, u: FieldElement, t: int) -> FieldElement:
    """Deterministic v with v^t = u: v = alpha^s for the smallest
    nonnegative s solving s*t = dlog(u) mod (q-1)."""
    if u.code == 0:
        raise ZeroElementError("zero has no root under the power map")
    n = ctx.q - 1
    d = ctx.dlog(u.code)
    t_red = t % n or n
    g = math.gcd(t_red, n)
    if d % g:
        raise NoPreimageError(f"no v with v^{t} equal to the given element")
    m = n // g
    s = (d // g) * pow(t_red // g, -1, m) % m if m > 1 else 0
    return ctx.alpha_pow(s)


def galois_norm_preimage(ctx: FieldCtx, u: FieldElement, l: GaloisLevel) -> FieldElement:
    """Deterministic v with v^(p^l + 1) = u for u in GF(p^l)^*.

    Solvable for every such u exactly when 2l | e (p odd); when the defining
    congruence has no solution NoPreimageError is raised.
    """
    if u.code == 0:
        raise ZeroElementError("u must be a nonzero subfield element")
    if l < 1 or ctx.e % l:
        raise NotInSubfieldError(f"GF({ctx.p}^{l}) is not a subfield of GF({ctx.q})")
    if not ctx.in_subfield(u.code, l):
        raise NotInSubfieldError("u is not fixed by the level-l Frobenius")
    return power_preimage(ctx, u, ctx.p**l + 1)


# ---------------------------------------------------------------------------
# JSON descriptor fragment.
# ---------------------------------------------------------------------------

def field_to_json(ctx: FieldCtx) -> dict:
    return {
        "p": ctx.p,
        "e": ctx.e,
        "modulus": list(ctx.modulus),
        "alpha": list(ctx.alpha.coeffs),
    }


def field_from_json(obj: dict) -> FieldCtx:
    try:
        p = int(obj["p"])
        e = int(obj["e"])
        modulus = [int(c) for c in obj["modulus"]]
        alpha = [int(c) for c in obj["alpha"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDescriptorError(f"bad field descriptor: {exc}") from exc
    try:
        return field_new(p, e, modulus=modulus, alpha=alpha)
    except (NotPrimeError, ReducibleModulusError, DegreeMismatchError, ValueError) as exc:
        raise MalformedDescriptorError(f"bad field descriptor: {exc}") from exc
