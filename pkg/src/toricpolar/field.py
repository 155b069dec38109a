"""Prime fields F_p used as exact coefficient domains.

Elements are plain Python ints reduced into [0, p).  The field object
carries the modulus, a few arithmetic helpers and the term kernel chosen
for this modulus (compiled or pure Python).
"""

from . import _kernel
from .errors import PreconditionError

DEFAULT_PRIME = 2147483647  # 2^31 - 1, Mersenne

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n below 3.3 * 10^24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
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


class PrimeField:
    """The field F_p together with the term kernel used for its arithmetic."""

    __slots__ = ("p", "kernel", "backend")

    def __init__(self, p: int = DEFAULT_PRIME, backend: str | None = None):
        if not is_prime(p):
            raise PreconditionError(f"modulus {p} is not prime")
        if p == 2:
            raise PreconditionError("modulus 2 is too small for the degree "
                                    "ranges handled here")
        self.p = p
        self.kernel = _kernel.kernel_for(p, backend)
        self.backend = "cython" if self.kernel.__name__.endswith("_c") else "python"

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def symmetric(self, a: int) -> int:
        """Representative of a in (-p/2, p/2], for readable printing."""
        a %= self.p
        return a if a <= self.p // 2 else a - self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"
