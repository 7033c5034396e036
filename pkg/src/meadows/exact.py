"""Exact arithmetic in the square-root closure of the rationals.

Values are *constructible reals*: rationals closed under field operations and
real square roots, with every partial operation totalized the meadow way:

* ``inv(0) == 0`` (and therefore ``x / 0 == 0``),
* ``sign(0) == 0``,
* ``ssqrt`` is the *signed* square root: ``ssqrt(x) == -ssqrt(-x)`` for
  negative ``x`` and ``ssqrt(0) == 0``.

A :class:`Session` owns a tower of real quadratic extensions
``Q = F_0 < F_1 < ... < F_d`` where ``F_k = F_{k-1}(sqrt(r_k))`` for a
radicand ``r_k`` that is strictly positive and not a square in ``F_{k-1}``.
A value of depth ``k`` is stored as its coordinate vector of ``2**k``
rationals over the basis of products of adjoined roots; coordinate ``i``
multiplies the product of ``sqrt(r_{j+1})`` over the set bits ``j`` of ``i``.
Because every radicand is a non-square one level down, the basis is linearly
independent over Q, so representations are unique and equality is coordinate
equality.

Sessions are mutable (``ssqrt`` may adjoin a new level) and are meant to be
confined to one thread; values from different sessions must never be mixed,
and attempting to do so raises :class:`SessionMismatch`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Optional, Union

Scalar = Union[int, Fraction]

#: A sign is one of -1, 0, +1.
SignValue = int

#: Coordinate vector of length 2**depth.
Vec = "tuple[Fraction, ...]"

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class SessionMismatch(ValueError):
    """Raised when values from different sessions are combined."""


class TowerInvariantError(AssertionError):
    """Internal invariant breach: a session radicand is a square one level down.

    This is unreachable when the tower is grown exclusively through
    :meth:`Real.ssqrt`; it exists so that corruption fails loudly instead of
    producing wrong signs.
    """


# ---------------------------------------------------------------------------
# Raw coordinate-vector arithmetic.
#
# Vectors always have length 2**k for the level k they live at; the level is
# recovered from the length, so no explicit depth bookkeeping is threaded
# through.  ``rads`` is the session's radicand list (radicand for level k+1 is
# ``rads[k]``, a vector of length 2**k, stored untrimmed).
# ---------------------------------------------------------------------------


def _zeros(n: int) -> tuple:
    return (_ZERO,) * n


def _is_zero(a: tuple) -> bool:
    return all(c == 0 for c in a)


def _vadd(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _vneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def _vscale(a: tuple, q: Fraction) -> tuple:
    return tuple(q * x for x in a)


def _radicand_for(rads: tuple, n: int) -> tuple:
    # vector length n == 2**k lives at level k; its top split uses rads[k-1]
    return rads[n.bit_length() - 2]


def _vmul(rads: tuple, a: tuple, b: tuple) -> tuple:
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    if _is_zero(a) or _is_zero(b):
        return _zeros(n)
    h = n // 2
    u1, v1 = a[:h], a[h:]
    u2, v2 = b[:h], b[h:]
    z1, z2 = _is_zero(v1), _is_zero(v2)
    if z1 and z2:
        return _vmul(rads, u1, u2) + _zeros(h)
    if z2:  # b has no top component
        return _vmul(rads, u1, u2) + _vmul(rads, v1, u2)
    if z1:
        return _vmul(rads, u1, u2) + _vmul(rads, u1, v2)
    r = _radicand_for(rads, n)
    lo = _vadd(_vmul(rads, u1, u2), _vmul(rads, _vmul(rads, v1, v2), r))
    hi = _vadd(_vmul(rads, u1, v2), _vmul(rads, v1, u2))
    return lo + hi


def _vinv(rads: tuple, a: tuple) -> tuple:
    """Totalized inverse: the inverse of the zero vector is zero."""
    n = len(a)
    if n == 1:
        c = a[0]
        return (_ONE / c if c else _ZERO,)
    h = n // 2
    u, v = a[:h], a[h:]
    if _is_zero(v):
        return _vinv(rads, u) + _zeros(h)
    r = _radicand_for(rads, n)
    # 1/(u + v*sqrt(r)) = (u - v*sqrt(r)) / (u^2 - v^2*r); the denominator is
    # nonzero for nonzero input, else r would be a square one level down.
    den = _vsub(_vmul(rads, u, u), _vmul(rads, _vmul(rads, v, v), r))
    if _is_zero(den):
        raise TowerInvariantError("conjugate norm vanished on a nonzero value")
    di = _vinv(rads, den)
    return _vmul(rads, u, di) + _vneg(_vmul(rads, v, di))


def _vsign(rads: tuple, a: tuple) -> SignValue:
    n = len(a)
    if n == 1:
        c = a[0]
        return (c > 0) - (c < 0)
    h = n // 2
    u, v = a[:h], a[h:]
    if _is_zero(v):
        return _vsign(rads, u)
    if _is_zero(u):
        return _vsign(rads, v)  # sqrt(r) > 0, so v*sqrt(r) has v's sign
    su = _vsign(rads, u)
    sv = _vsign(rads, v)
    if su == sv:
        return su
    # Signs differ and both parts are nonzero: compare |u| against
    # |v|*sqrt(r) by comparing u^2 against v^2*r one level down.
    r = _radicand_for(rads, n)
    t = _vsub(_vmul(rads, u, u), _vmul(rads, _vmul(rads, v, v), r))
    st = _vsign(rads, t)
    if st == 0:
        raise TowerInvariantError("u^2 == v^2 * r with opposite-sign parts")
    return su if st > 0 else sv


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a positive rational, or None if irrational."""
    rn = isqrt(q.numerator)
    if rn * rn != q.numerator:
        return None
    rd = isqrt(q.denominator)
    if rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def _vsqrt_in_tower(rads: tuple, y: tuple) -> Optional[tuple]:
    """A root ``w`` with ``w*w == y`` inside the existing tower, or None.

    ``y`` must be strictly positive.  The returned root is some root (not
    necessarily the positive one); callers normalize the sign.
    """
    n = len(y)
    if n == 1:
        w = _rational_sqrt(y[0])
        return None if w is None else (w,)
    h = n // 2
    u, v = y[:h], y[h:]
    r = _radicand_for(rads, n)
    if _is_zero(v):
        w = _vsqrt_in_tower(rads, u)
        if w is not None:
            return w + _zeros(h)
        # y == c^2 * r for some lower-tower c iff y/r is a lower square.
        q = _vmul(rads, u, _vinv(rads, r))
        c = _vsqrt_in_tower(rads, q)
        if c is not None:
            return _zeros(h) + c
        return None
    # A root a + b*sqrt(r) with v == 2ab != 0 forces a, b != 0 and
    # (a^2 - b^2*r)^2 == u^2 - v^2*r, so u^2 - v^2*r must be a lower square.
    m = _vsub(_vmul(rads, u, u), _vmul(rads, _vmul(rads, v, v), r))
    sm = _vsign(rads, m)
    if sm == 0:
        raise TowerInvariantError("u^2 == v^2 * r while testing for a root")
    if sm < 0:
        return None
    s = _vsqrt_in_tower(rads, m)
    if s is None:
        return None
    if _vsign(rads, s) < 0:
        s = _vneg(s)
    # One of (u+s)/2, (u-s)/2 equals a^2 (the other is b^2*r, never a lower
    # square since r is not).  b is recovered from v == 2ab.
    for cand in (_vscale(_vadd(u, s), _HALF), _vscale(_vsub(u, s), _HALF)):
        if _is_zero(cand) or _vsign(rads, cand) < 0:
            continue
        c = _vsqrt_in_tower(rads, cand)
        if c is None or _is_zero(c):
            continue
        b = _vmul(rads, v, _vinv(rads, _vscale(c, Fraction(2))))
        root = c + b
        if _vmul(rads, root, root) == tuple(y):
            return root
    return None


def _square_free_split(n: int) -> tuple[int, int]:
    """Write ``n == m*m*f`` with ``f`` square-free (best effort) and return ``(m, f)``.

    Trial division is capped, so for adversarially large inputs ``f`` may keep
    a hidden square factor; that only costs normalization, never correctness,
    because root deduplication is decided by the in-tower search.
    """
    m, f = 1, 1
    d = 2
    while d * d * d <= n and d <= 1_000_000:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            m *= d ** (e // 2)
            if e % 2:
                f *= d
        d += 1 if d == 2 else 2
    # The leftover has at most two prime factors (within the cap): it is
    # either 1, p, p*q (square-free) or p^2 (a perfect square).
    r = isqrt(n)
    if r * r == n:
        m *= r
    else:
        f *= n
    return m, f


def _normalize_radicand(y: tuple) -> tuple[Fraction, tuple]:
    """Split positive ``y`` as ``coeff**2 * rad`` with a tidier radicand.

    The rational content of ``y`` is pulled out and reduced square-free so
    that e.g. the root of 8 is stored as ``2 * sqrt(2)`` rather than
    ``sqrt(8)``.  Returns ``(coeff, rad)`` with ``coeff > 0``.
    """
    num = 0
    den = 1
    for c in y:
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    content = Fraction(num, den)  # positive: y is positive so some coord != 0
    y1 = _vscale(y, 1 / content)  # integer coordinates, content 1
    a, b = content.numerator, content.denominator
    m, f = _square_free_split(a * b)  # a*b == m*m*f
    return Fraction(m, b), _vscale(y1, Fraction(f))


# ---------------------------------------------------------------------------
# Public classes.
# ---------------------------------------------------------------------------


class Session:
    """A growable tower of real quadratic extensions of the rationals.

    All values produced through one session share its tower, which is what
    makes equality decidable by coordinate comparison: every adjoined
    radicand is checked to be positive and not already a square, so the root
    of equal radicands is reused instead of duplicated.

    Sessions are not thread-safe; confine each one to a single thread.
    """

    __slots__ = ("_radicands",)

    def __init__(self) -> None:
        self._radicands: list[tuple] = []

    @property
    def depth(self) -> int:
        """Number of adjoined square roots."""
        return len(self._radicands)

    @property
    def radicands(self) -> tuple:
        """Radicand coordinate vectors, level k+1 at index k (read-only)."""
        return tuple(self._radicands)

    def rational(self, p: Scalar = 0, q: int = 1) -> Real:
        """The value ``p/q``. ``q == 0`` yields 0, matching ``x * inv(0)``."""
        if q == 0:
            return Real(self, (_ZERO,))
        return Real(self, (Fraction(p, q),))

    def value(self, x: Union[Real, Scalar]) -> Real:
        """Coerce an int or Fraction into this session; pass Reals through."""
        if isinstance(x, Real):
            if x._session is not self:
                raise SessionMismatch("value belongs to a different session")
            return x
        return self.rational(x)

    @property
    def zero(self) -> Real:
        return self.rational(0)

    @property
    def one(self) -> Real:
        return self.rational(1)

    def radicand_value(self, level: int) -> Real:
        """The radicand adjoined at ``level`` (1-based) as a value."""
        if not 1 <= level <= self.depth:
            raise ValueError(f"no radicand at level {level}")
        return Real(self, self._radicands[level - 1])

    def check_invariants(self) -> None:
        """Re-verify the tower: every radicand positive and not a lower square."""
        rads = tuple(self._radicands)
        for k, rad in enumerate(rads, start=1):
            if len(rad) != 1 << (k - 1):
                raise TowerInvariantError(f"level {k} radicand has wrong arity")
            if _vsign(rads, rad) <= 0:
                raise TowerInvariantError(f"level {k} radicand is not positive")
            if _vsqrt_in_tower(rads, rad) is not None:
                raise TowerInvariantError(f"level {k} radicand is a lower square")

    def _adjoin(self, rad: tuple) -> None:
        if len(rad) != 1 << self.depth:
            raise TowerInvariantError("adjoined radicand has wrong arity")
        self._radicands.append(rad)

    def __repr__(self) -> str:
        return f"Session(depth={self.depth})"


class Real:
    """An exact constructible real tied to a :class:`Session`.

    Supports the ring operators, zero-totalized division, and the totalized
    extras :meth:`inv`, :meth:`sign` and :meth:`ssqrt`.  Comparisons are
    exact.  Instances are immutable and hashable.
    """

    __slots__ = ("_session", "_coords")

    def __init__(self, session: Session, coords: tuple) -> None:
        n = len(coords)
        if n & (n - 1):
            raise ValueError("coordinate vector length must be a power of two")
        # Trim zero top halves so depth is minimal and equal values share
        # identical coordinates.
        while n > 1 and _is_zero(coords[n // 2 :]):
            coords = coords[: n // 2]
            n //= 2
        self._session = session
        self._coords = tuple(coords)

    # -- structure ---------------------------------------------------------

    @property
    def session(self) -> Session:
        return self._session

    @property
    def depth(self) -> int:
        return len(self._coords).bit_length() - 1

    @property
    def coords(self) -> tuple:
        """Coordinates over the root-product basis, trimmed to minimal depth."""
        return self._coords

    def is_zero(self) -> bool:
        return self._coords == (_ZERO,)

    def is_rational(self) -> bool:
        return len(self._coords) == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is irrational")
        return self._coords[0]

    def _lift(self, depth: int) -> tuple:
        n = len(self._coords)
        want = 1 << depth
        if n > want:
            raise ValueError("cannot lower a value's level")
        return self._coords + _zeros(want - n)

    def _rads(self) -> tuple:
        return tuple(self._session._radicands)

    def _peer(self, other: object) -> Optional[Real]:
        if isinstance(other, Real):
            if other._session is not self._session:
                raise SessionMismatch("cannot mix values from different sessions")
            return other
        if isinstance(other, (int, Fraction)):
            return self._session.rational(other)
        return None

    def _make(self, coords: tuple) -> Real:
        return Real(self._session, coords)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: object) -> Real:
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        d = max(self.depth, peer.depth)
        return self._make(_vadd(self._lift(d), peer._lift(d)))

    __radd__ = __add__

    def __neg__(self) -> Real:
        return self._make(_vneg(self._coords))

    def __pos__(self) -> Real:
        return self

    def __sub__(self, other: object) -> Real:
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        d = max(self.depth, peer.depth)
        return self._make(_vsub(self._lift(d), peer._lift(d)))

    def __rsub__(self, other: object) -> Real:
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return peer - self

    def __mul__(self, other: object) -> Real:
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        d = max(self.depth, peer.depth)
        return self._make(_vmul(self._rads(), self._lift(d), peer._lift(d)))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Real:
        """Totalized division: ``x / 0 == 0``."""
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return self * peer.inv()

    def __rtruediv__(self, other: object) -> Real:
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return peer * self.inv()

    def __pow__(self, n: int) -> Real:
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return self._session.one
        out = self
        for _ in range(abs(n) - 1):
            out = out * self
        return out.inv() if n < 0 else out

    def inv(self) -> Real:
        """Totalized multiplicative inverse: ``inv(0) == 0``."""
        return self._make(_vinv(self._rads(), self._coords))

    # -- order and equality --------------------------------------------------

    def sign(self) -> SignValue:
        """Exact sign in {-1, 0, +1}; 0 only for the zero value."""
        return _vsign(self._rads(), self._coords)

    def compare(self, other: Union[Real, Scalar]) -> SignValue:
        peer = self._peer(other)
        if peer is None:
            raise TypeError(f"cannot compare Real with {type(other).__name__}")
        return (self - peer).sign()

    def __eq__(self, other: object) -> bool:
        peer = self._peer(other)
        if peer is None:
            return NotImplemented
        return self._coords == peer._coords

    def __hash__(self) -> int:
        return hash((id(self._session), self._coords))

    def __lt__(self, other: object) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: object) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: object) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: object) -> bool:
        return self.compare(other) >= 0

    # -- roots and meadow extras ---------------------------------------------

    def ssqrt(self) -> Real:
        """Signed square root: the positive root of ``|x|`` carrying ``sign(x)``.

        Reuses a root already expressible in the session tower when one
        exists; otherwise adjoins a new level whose radicand is positive and
        reduced by its square rational content.
        """
        sg = self.sign()
        if sg == 0:
            return self
        y = self if sg > 0 else -self
        rads = self._rads()
        full = y._lift(self._session.depth)
        w = _vsqrt_in_tower(rads, full)
        if w is not None:
            root = self._make(w)
            if root.sign() < 0:
                root = -root
            return root if sg > 0 else -root
        coeff, rad = _normalize_radicand(full)
        half = len(full)
        self._session._adjoin(rad)
        root = self._make(_zeros(half) + (coeff,) + _zeros(half - 1))
        return root if sg > 0 else -root

    def pseudo_unit(self) -> Real:
        """``x * inv(x)``: exactly 1 for nonzero values, 0 at zero."""
        return self * self.inv()

    def pseudo_zero(self) -> Real:
        """``1 - x * inv(x)``: exactly 0 for nonzero values, 1 at zero."""
        return self._session.one - self.pseudo_unit()

    # -- presentation ----------------------------------------------------------

    def approx_decimal(self, digits: int = 10) -> str:
        """Certified decimal string within 10**-digits of the exact value.

        Computed by interval refinement with rational endpoints; see
        :mod:`meadows.approx`.  The kernel's own sign decisions are never
        consulted, which makes this an independent cross-check channel.
        """
        from . import approx

        return approx.approx_decimal(self, digits)

    def serialize(self) -> str:
        """Canonical closed-term string; see :func:`meadows.simplify.value_to_term`."""
        from .simplify import value_to_term
        from .terms import render

        return render(value_to_term(self))

    def __repr__(self) -> str:
        return f"Real({self.serialize()})"

    def __str__(self) -> str:
        return self.serialize()
