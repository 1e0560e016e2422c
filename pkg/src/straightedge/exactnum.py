"""Exact arithmetic on constructible real numbers.

A constructible real is any number reachable from the rationals by the four
field operations and square roots of nonnegative values -- exactly the
lengths a straightedge and compass can produce.  Values are stored as
recursive quadratic extensions: a number is either a plain rational or
``a + b*sqrt(r)`` where ``a``, ``b`` and the radicand ``r`` are themselves
constructible numbers from strictly shallower extensions.

Everything here is decided symbolically: `sign` (and hence equality and
ordering) recurses on the tree, and `approx` produces correctly rounded
decimals by exact interval refinement.  No floating point is used anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt, lcm

__all__ = [
    "Constructible",
    "ZERO",
    "ONE",
    "sign",
    "sqrt",
    "approx",
    "parse",
]


class Constructible:
    """Immutable constructible real.

    Two shapes share one class:

    * rational: ``r is None`` and the value is the Fraction in ``a``;
    * extension: ``a``, ``b``, ``r`` are Constructible and the value is
      ``a + b*sqrt(r)`` with ``b != 0`` and ``r > 0``.

    Radicands are canonicalized by :func:`sqrt` (integer coordinates with
    squarefree content, one-level denesting of ``sqrt(a + b*sqrt(r))`` with
    rational parts), so values produced by arithmetic have a deterministic
    shape and equal values in a common tower compare structurally equal.
    Mathematical equality is always decided by ``sign(x - y)``.
    """

    __slots__ = ("a", "b", "r", "_key", "_depth", "_sign", "_hash")

    def __init__(self, a, b=None, r=None):
        # Internal constructor; use Constructible.of(), arithmetic and sqrt().
        self.a = a
        self.b = b
        self.r = r
        self._key = None
        self._depth = None
        self._sign = None
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def of(cls, x) -> "Constructible":
        if isinstance(x, Constructible):
            return x
        if isinstance(x, (int, Fraction)):
            return _rational(Fraction(x))
        if isinstance(x, str):
            return parse(x)
        if isinstance(x, float):
            raise TypeError("floats are inexact; pass an int, Fraction or string")
        raise TypeError(f"cannot make a Constructible from {type(x).__name__}")

    @property
    def is_rational(self) -> bool:
        return self.r is None

    def as_fraction(self) -> Fraction:
        if self.r is None:
            return self.a
        raise ValueError("value is not represented as a rational")

    # -- rendering / parsing ----------------------------------------------

    def __str__(self) -> str:
        return _render(self)

    def __repr__(self) -> str:
        return f"Constructible({_render(self)!r})"

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self is other:
            return True
        if self.r is None and other.r is None:
            return self.a == other.a
        if _render(self) == _render(other):
            return True
        return sign(self - other) == 0

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return sign(self - other) < 0

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return sign(self - other) <= 0

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return sign(self - other) > 0

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return sign(self - other) >= 0

    def __hash__(self) -> int:
        # Equal values render equal 24-digit decimals (approx is correctly
        # rounded), so this is consistent with __eq__ between Constructibles.
        if self._hash is None:
            self._hash = hash(("Constructible", approx(self, 24)))
        return self._hash

    def __bool__(self) -> bool:
        return sign(self) != 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.r is None and other.r is None:
            return _rational(self.a + other.a)
        return _tower_binary(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.r is None and other.r is None:
            return _rational(self.a - other.a)
        return _tower_binary(self, other, "sub")

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        if self.r is None:
            return _rational(-self.a)
        return Constructible(-self.a, -self.b, self.r)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if sign(self) < 0 else self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.r is None and other.r is None:
            return _rational(self.a * other.a)
        if self.r is None:
            return _scaled(other, self.a)
        if other.r is None:
            return _scaled(self, other.a)
        return _tower_binary(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if sign(other) == 0:
            raise ZeroDivisionError("division by a zero constructible number")
        if other.r is None:
            if self.r is None:
                return _rational(self.a / other.a)
            return _scaled(self, 1 / other.a)
        return _tower_binary(self, other, "div")

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __float__(self) -> float:
        return float(approx(self, 20))


def _coerce(x):
    if isinstance(x, Constructible):
        return x
    if isinstance(x, (int, Fraction)):
        return _rational(Fraction(x))
    return None


def _rational(q: Fraction) -> Constructible:
    return Constructible(q)


ZERO = _rational(Fraction(0))
ONE = _rational(Fraction(1))


# -- structural helpers ------------------------------------------------------


def _depth(x: Constructible) -> int:
    if x._depth is None:
        if x.r is None:
            x._depth = 0
        else:
            x._depth = 1 + max(_depth(x.a), _depth(x.b), _depth(x.r))
    return x._depth


def _render(x: Constructible) -> str:
    if x._key is None:
        if x.r is None:
            x._key = str(x.a)
        else:
            b = x.b
            if b.r is None and b.a < 0:
                op, bs = " - ", _render(_rational(-b.a))
            else:
                op, bs = " + ", _render(b)
            x._key = f"({_render(x.a)}{op}{bs}*sqrt({_render(x.r)}))"
    return x._key


def _radicand_order(x: Constructible) -> tuple:
    return (_depth(x), _render(x))


def _collect_radicands(x: Constructible, acc: dict) -> None:
    if x.r is not None:
        _collect_radicands(x.a, acc)
        _collect_radicands(x.b, acc)
        key = _render(x.r)
        if key not in acc:
            acc[key] = x.r
            _collect_radicands(x.r, acc)


# -- dense tower arithmetic ---------------------------------------------------
#
# For a binary operation the two operands are lifted into one common tower:
# the sorted union of every radicand appearing in either value.  Over a chain
# (r_1, ..., r_k) a dense value is a nested pair tree with Fraction leaves;
# level i splits into (lo, hi) meaning lo + hi*sqrt(r_i).  Sorting radicands
# by (depth, rendering) guarantees each radicand only ever depends on earlier
# entries of the chain.

_ZEROS_CACHE: list = [Fraction(0)]


def _zeros(k: int):
    while len(_ZEROS_CACHE) <= k:
        prev = _ZEROS_CACHE[-1]
        _ZEROS_CACHE.append((prev, prev))
    return _ZEROS_CACHE[k]


def _const_dense(q: Fraction, k: int):
    t = q
    for i in range(k):
        t = (t, _zeros(i))
    return t


def _to_dense(x: Constructible, chain: tuple) -> object:
    if x.r is None:
        return _const_dense(x.a, len(chain))
    key = _render(x.r)
    i = next(j for j in range(len(chain)) if _render(chain[j]) == key)
    t = (_to_dense(x.a, chain[:i]), _to_dense(x.b, chain[:i]))
    for j in range(i + 1, len(chain)):
        t = (t, _zeros(j))
    return t


def _dadd(u, v, k):
    if k == 0:
        return u + v
    return (_dadd(u[0], v[0], k - 1), _dadd(u[1], v[1], k - 1))


def _dsub(u, v, k):
    if k == 0:
        return u - v
    return (_dsub(u[0], v[0], k - 1), _dsub(u[1], v[1], k - 1))


def _dneg(u, k):
    if k == 0:
        return -u
    return (_dneg(u[0], k - 1), _dneg(u[1], k - 1))


def _dmul(u, v, emb, k):
    if k == 0:
        return u * v
    a1, b1 = u
    a2, b2 = v
    cross = _dmul(b1, b2, emb, k - 1)
    lo = _dadd(_dmul(a1, a2, emb, k - 1), _dmul(cross, emb[k - 1], emb, k - 1), k - 1)
    hi = _dadd(_dmul(a1, b2, emb, k - 1), _dmul(b1, a2, emb, k - 1), k - 1)
    return (lo, hi)


def _dinv(u, chain, emb, k):
    if k == 0:
        return 1 / u
    c, d = u
    den = _dsub(
        _dmul(c, c, emb, k - 1),
        _dmul(_dmul(d, d, emb, k - 1), emb[k - 1], emb, k - 1),
        k - 1,
    )
    if sign(_normalize(den, chain[: k - 1])) == 0:
        # Degenerate chain: c - d*sqrt(r) = 0, so the value equals 2c.
        half = _dscale(_dinv(c, chain, emb, k - 1), Fraction(1, 2), k - 1)
        return (half, _zeros(k - 1))
    inv_den = _dinv(den, chain, emb, k - 1)
    return (_dmul(c, inv_den, emb, k - 1), _dneg(_dmul(d, inv_den, emb, k - 1), k - 1))


def _dscale(u, f: Fraction, k):
    if k == 0:
        return u * f
    return (_dscale(u[0], f, k - 1), _dscale(u[1], f, k - 1))


def _normalize(u, chain: tuple) -> Constructible:
    if not chain:
        return _rational(u)
    lo = _normalize(u[0], chain[:-1])
    hi = _normalize(u[1], chain[:-1])
    if sign(hi) == 0:
        return lo
    return Constructible(lo, hi, chain[-1])


def _merged_chain(x: Constructible, y: Constructible) -> tuple:
    acc: dict = {}
    _collect_radicands(x, acc)
    _collect_radicands(y, acc)
    return tuple(sorted(acc.values(), key=_radicand_order))


def _tower_binary(x: Constructible, y: Constructible, op: str) -> Constructible:
    chain = _merged_chain(x, y)
    emb = tuple(_to_dense(chain[i], chain[:i]) for i in range(len(chain)))
    k = len(chain)
    u = _to_dense(x, chain)
    v = _to_dense(y, chain)
    if op == "add":
        w = _dadd(u, v, k)
    elif op == "sub":
        w = _dsub(u, v, k)
    elif op == "mul":
        w = _dmul(u, v, emb, k)
    else:  # div; caller already rejected a zero divisor
        w = _dmul(u, _dinv(v, chain, emb, k), emb, k)
    return _normalize(w, chain)


def _scaled(x: Constructible, f: Fraction) -> Constructible:
    # Multiply by a nonzero rational without rebuilding the tower.
    if f == 0:
        return ZERO
    if x.r is None:
        return _rational(x.a * f)
    return Constructible(_scaled(x.a, f), _scaled(x.b, f), x.r)


# -- sign, equality ----------------------------------------------------------


def sign(x) -> int:
    """Exact sign of ``x``: -1, 0 or +1, decided without floating point.

    For ``a + b*sqrt(r)`` with disagreeing coefficient signs the comparison
    ``a^2`` versus ``b^2*r`` is recursed, which strictly shrinks the set of
    radicands involved, so the recursion always terminates.
    """
    x = Constructible.of(x)
    if x._sign is None:
        if x.r is None:
            q = x.a
            x._sign = (q > 0) - (q < 0)
        else:
            sa = sign(x.a)
            sb = sign(x.b)
            if sb == 0:
                x._sign = sa
            elif sa == 0:
                x._sign = sb
            elif sa == sb:
                x._sign = sa
            else:
                x._sign = sa * sign(x.a * x.a - x.b * x.b * x.r)
    return x._sign


# -- square roots ------------------------------------------------------------


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write n = inner * outer**2 with inner squarefree; return (inner, outer)."""
    s = isqrt(n)
    if s * s == n:
        return 1, s
    inner, outer = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            outer *= d ** (e // 2)
            if e % 2:
                inner *= d
        d = 3 if d == 2 else d + 2
    return inner * n, outer


def _fraction_sqrt(f: Fraction):
    sn = isqrt(f.numerator)
    sd = isqrt(f.denominator)
    if sn * sn == f.numerator and sd * sd == f.denominator:
        return Fraction(sn, sd)
    return None


def _coefficient_leaves(x: Constructible, acc: list) -> None:
    if x.r is None:
        acc.append(x.a)
    else:
        _coefficient_leaves(x.a, acc)
        _coefficient_leaves(x.b, acc)


def _content(x: Constructible) -> Fraction:
    leaves: list = []
    _coefficient_leaves(x, leaves)
    num = 0
    den = 1
    for f in leaves:
        if f:
            num = gcd(num, abs(f.numerator))
            den = lcm(den, f.denominator)
    return Fraction(num, den)


def _sqrt_within(x: Constructible):
    """A square root of ``x`` living in x's own tower, or None.

    For ``x = a + b*sqrt(r)`` a root ``c + d*sqrt(r)`` exists exactly when
    ``delta = a^2 - b^2*r`` has a root ``s`` in the base tower and one of
    ``(a +- s)/2`` is a square there too; both subproblems are strictly
    shallower, so the search terminates.  This keeps radicands that are
    perfect squares inside their own tower from ever being adjoined.
    """
    if sign(x) < 0:
        return None
    if x.r is None:
        f = _fraction_sqrt(x.a)
        return _rational(f) if f is not None else None
    a, b, r = x.a, x.b, x.r
    s = _sqrt_within(a * a - b * b * r)
    if s is None:
        return None
    for c_sq in ((a + s) / 2, (a - s) / 2):
        if sign(c_sq) <= 0:
            continue
        c = _sqrt_within(c_sq)
        if c is None or sign(c) == 0:
            continue
        d = b / (2 * c)
        root = Constructible(c, d, r) if sign(d) != 0 else c
        return root if sign(root) >= 0 else -root
    return None


def sqrt(x) -> Constructible:
    """Exact nonnegative square root of a nonnegative constructible number.

    Before a new extension level is created the radicand is canonicalized:
    rational square content is pulled out (so e.g. sqrt(5/4) = sqrt(5)/2 and
    radicands differing by a rational square coincide), rational perfect
    squares collapse, and sqrt(a + b*sqrt(r)) with rational a, b, r denests
    to sqrt(u) + sqrt(v) whenever u + v = a, 4uv = b^2*r has a rational
    solution.  Deeper denestings are intentionally not attempted.
    """
    x = Constructible.of(x)
    s = sign(x)
    if s < 0:
        raise ValueError("square root of a negative constructible number")
    if s == 0:
        return ZERO
    if x.r is None:
        q = x.a
        inner, outer = _squarefree_split(q.numerator * q.denominator)
        if inner == 1:
            return _rational(Fraction(outer, q.denominator))
        return Constructible(
            ZERO, _rational(Fraction(outer, q.denominator)), _rational(Fraction(inner))
        )
    within = _sqrt_within(x)
    if within is not None:
        return within
    content = _content(x)
    primitive = _scaled(x, 1 / content)
    inner, outer = _squarefree_split(content.numerator * content.denominator)
    coef = Fraction(outer, content.denominator)
    radicand = _scaled(primitive, Fraction(inner)) if inner != 1 else primitive
    if (
        radicand.r is not None
        and radicand.a.r is None
        and radicand.b.r is None
        and radicand.r.r is None
    ):
        a, b, rr = radicand.a.a, radicand.b.a, radicand.r.a
        delta = a * a - b * b * rr
        if delta > 0:
            e = _fraction_sqrt(delta)
            if e is not None:
                u = (a + e) / 2
                v = (a - e) / 2
                if u >= 0 and v >= 0:
                    root_v = sqrt(_rational(v))
                    cand = sqrt(_rational(u)) + (root_v if b > 0 else -root_v)
                    return _scaled(cand, coef)
    return Constructible(ZERO, _rational(coef), radicand)


# -- decimal approximation ----------------------------------------------------


def _isqrt_bounds(lo: Fraction, hi: Fraction, k: int) -> tuple[Fraction, Fraction]:
    sc = 1 << k
    if lo < 0:
        lo = Fraction(0)
    ls = Fraction(isqrt((lo.numerator * sc * sc) // lo.denominator), sc)
    hs = Fraction(isqrt((hi.numerator * sc * sc) // hi.denominator) + 1, sc)
    return ls, hs


def _interval(x: Constructible, k: int) -> tuple[Fraction, Fraction]:
    if x.r is None:
        return x.a, x.a
    la, ha = _interval(x.a, k)
    lb, hb = _interval(x.b, k)
    lr, hr = _interval(x.r, k)
    ls, hs = _isqrt_bounds(lr, hr, k)
    products = (lb * ls, lb * hs, hb * ls, hb * hs)
    return la + min(products), ha + max(products)


def _floor(x: Constructible) -> int:
    if x.r is None:
        return x.a.numerator // x.a.denominator
    k = 32
    flo = fhi = None
    while k <= 4096:
        lo, hi = _interval(x, k)
        flo = lo.numerator // lo.denominator
        fhi = hi.numerator // hi.denominator
        if flo == fhi:
            return flo
        k *= 2
    # The value sits on (or extremely near) an integer: settle it exactly.
    if sign(x - fhi) >= 0:
        return fhi
    return fhi - 1


def _round_half_away(x: Constructible) -> int:
    n = _floor(x)
    frac = x - n
    c = sign(frac - Fraction(1, 2))
    if c > 0:
        return n + 1
    if c < 0:
        return n
    return n + 1 if sign(x) > 0 else n


def approx(x, digits: int) -> str:
    """Correctly rounded decimal string of ``x`` with ``digits`` places.

    The absolute error is below 10**-digits; exact ties round away from
    zero.  Rounding is driven by exact interval refinement, so the output
    depends only on the value, never on its representation.
    """
    x = Constructible.of(x)
    if digits < 1:
        raise ValueError("digits must be >= 1")
    n = _round_half_away(_scaled(x, Fraction(10**digits)))
    body = str(abs(n)).rjust(digits + 1, "0")
    sign_str = "-" if n < 0 else ""
    return f"{sign_str}{body[:-digits]}.{body[-digits:]}"


# -- canonical text parsing ----------------------------------------------------

_NUMBER = re.compile(r"-?\d+(?:/\d+)?")


def parse(text: str) -> Constructible:
    """Parse the canonical rendering: rationals as ``p/q`` and extensions as
    ``(a + b*sqrt(r))`` (or ``(a - b*sqrt(r))``), recursively."""
    value, rest = _parse_value(text.strip())
    if rest.strip():
        raise ValueError(f"trailing input {rest!r}")
    return value


def _expect(s: str, token: str) -> str:
    s = s.lstrip()
    if not s.startswith(token):
        raise ValueError(f"expected {token!r} at {s[:20]!r}")
    return s[len(token):]


def _parse_value(s: str) -> tuple[Constructible, str]:
    s = s.lstrip()
    if s.startswith("("):
        a, s = _parse_value(s[1:])
        s = s.lstrip()
        if s.startswith("+"):
            negative = False
        elif s.startswith("-"):
            negative = True
        else:
            raise ValueError(f"expected '+' or '-' at {s[:20]!r}")
        b, s = _parse_value(s[1:])
        s = _expect(s, "*sqrt(")
        r, s = _parse_value(s)
        s = _expect(s, ")")
        s = _expect(s, ")")
        term = b * sqrt(r)
        return (a - term if negative else a + term), s
    m = _NUMBER.match(s)
    if not m:
        raise ValueError(f"expected a rational at {s[:20]!r}")
    return _rational(Fraction(m.group())), s[m.end():]
