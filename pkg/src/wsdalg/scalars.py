"""Exact scalar arithmetic: Gaussian rationals and prime fields containing i.

Every certified computation in this package runs either over Q(i), with
numerators and denominators as arbitrary-precision integers, or over a prime
field F_p with p = 1 (mod 4), where -1 has a square root and

    Q(i) -> F_p,   i |-> root_i,

is a ring homomorphism on every Gaussian rational whose denominators are
prime to p.  Floating point never enters a certified value; the closure
engine stores F_p residues in float64 words purely as exact small integers.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "GaussRational",
    "ModScalar",
    "PrimeCollision",
    "DEFAULT_PRIMES",
    "ZERO",
    "ONE",
    "I",
    "gauss",
    "mod_project",
    "root_of_minus_one",
    "is_prime",
]


class PrimeCollision(ArithmeticError):
    """A denominator vanished mod p; the caller should retry with another prime."""


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def root_of_minus_one(p: int) -> int:
    """Smallest positive square root of -1 mod p, for prime p = 1 (mod 4).

    Found by exponentiation: g^((p-1)/4) is a root of -1 for any
    quadratic non-residue g; scanning g upward and folding r -> min(r, p-r)
    makes the choice deterministic.
    """
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"p must be a prime = 1 (mod 4), got {p}")
    for g in range(2, p):
        r = pow(g, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return min(r, p - r)
    raise ArithmeticError(f"no root of -1 mod {p}")  # unreachable for valid p


# Default primes for the modular rank engine.  Both are = 1 (mod 4) and are
# the two largest primes for which a balanced residue dot product of length
# 8448 stays below 2^53, so float64 matrix products are exact:
#     8448 * ((p-1)/2)^2 + p < 2^53.
DEFAULT_PRIMES = (2065121, 2065117)


class GaussRational:
    """An exact Gaussian rational re + im*i with Fraction components.

    Values are immutable and hashable; arithmetic always returns canonical
    reduced form (Fraction keeps gcd(|num|, den) = 1 and den >= 1).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Fraction) else Fraction(re))
        object.__setattr__(self, "im", im if isinstance(im, Fraction) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- ring/field operations -------------------------------------------

    def __add__(self, other) -> "GaussRational":
        other = gauss(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussRational":
        other = gauss(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussRational":
        return gauss(other) - self

    def __mul__(self, other) -> "GaussRational":
        other = gauss(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRational":
        other = gauss(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return GaussRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> "GaussRational":
        return gauss(other) / self

    def __pow__(self, n: int) -> "GaussRational":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """z * conj(z); always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates & hashing --------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- formatting -------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


def gauss(value) -> GaussRational:
    """Coerce an int, Fraction or GaussRational to GaussRational."""
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRational(value, 0)
    raise TypeError(f"cannot coerce {type(value).__name__} to GaussRational")


ZERO = GaussRational(0, 0)
ONE = GaussRational(1, 0)
I = GaussRational(0, 1)


class ModScalar:
    """An element of F_p with the chosen square root of -1 attached.

    p must be = 1 (mod 4); root_i satisfies root_i^2 + 1 = 0 (mod p).
    Instances are immutable; mixing scalars from different primes raises.
    """

    __slots__ = ("residue", "p", "root_i")

    def __init__(self, residue: int, p: int, root_i: int | None = None):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residue", residue % p)
        object.__setattr__(
            self, "root_i", root_of_minus_one(p) if root_i is None else root_i
        )

    def __setattr__(self, name, value):
        raise AttributeError("ModScalar is immutable")

    def _coerce(self, other) -> "ModScalar":
        if isinstance(other, ModScalar):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return ModScalar(other, self.p, self.root_i)
        raise TypeError(f"cannot coerce {type(other).__name__} to ModScalar")

    def __add__(self, other):
        other = self._coerce(other)
        return ModScalar(self.residue + other.residue, self.p, self.root_i)

    __radd__ = __add__

    def __neg__(self):
        return ModScalar(-self.residue, self.p, self.root_i)

    def __sub__(self, other):
        other = self._coerce(other)
        return ModScalar(self.residue - other.residue, self.p, self.root_i)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return ModScalar(self.residue * other.residue, self.p, self.root_i)

    __rmul__ = __mul__

    def inverse(self) -> "ModScalar":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return ModScalar(pow(self.residue, -1, self.p), self.p, self.root_i)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        if isinstance(other, ModScalar):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __repr__(self):
        return f"ModScalar({self.residue}, {self.p})"


def mod_project(z: GaussRational | int | Fraction, p: int, root_i: int | None = None) -> ModScalar:
    """Project a Gaussian rational to F_p, sending i to root_i.

    Raises PrimeCollision when a denominator is divisible by p, in which
    case the caller retries with a different prime.
    """
    z = gauss(z)
    if root_i is None:
        root_i = root_of_minus_one(p)
    if z.re.denominator % p == 0 or z.im.denominator % p == 0:
        raise PrimeCollision(f"denominator divisible by {p}")
    re = z.re.numerator * pow(z.re.denominator, -1, p)
    im = z.im.numerator * pow(z.im.denominator, -1, p)
    return ModScalar(re + im * root_i, p, root_i)
