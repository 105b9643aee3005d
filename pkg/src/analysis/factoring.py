"""Prime factorization, square-structure tags and roundness reports."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from sympy import factorint, isprime, pollard_rho, primerange
from sympy.ntheory.primetest import mr

from config.constants import (
    DETERMINISTIC_PRIME_BOUND,
    MILLER_RABIN_ROUNDS,
    STRUCTURE_NONE,
    STRUCTURE_POW2_TIMES_ODD_SQUARE,
    STRUCTURE_SQUARE,
    STRUCTURE_SQUARE_TIMES_SMALL,
    STRUCTURE_TWO_TIMES_SQUARE,
)
from config.settings import settings
from src.contracts.models import FactoredCount, RoundnessReport
from src.utils.logging import log_event

_MR_BASES = tuple(primerange(2, 1000))[:MILLER_RABIN_ROUNDS]


def is_prime(value: int) -> bool:
    """Deterministic below 2^64; BPSW plus Miller-Rabin on many fixed bases above."""
    if value < DETERMINISTIC_PRIME_BOUND:
        return bool(isprime(value))
    return bool(isprime(value)) and bool(mr(value, _MR_BASES))


def _trial_divide(value: int, primes: dict[int, int]) -> int:
    """Strip primes below the trial limit; return the cofactor."""
    for prime in primerange(2, settings.FACTOR_TRIAL_LIMIT + 1):
        if prime * prime > value:
            break
        while value % prime == 0:
            primes[prime] = primes.get(prime, 0) + 1
            value //= prime
    if 1 < value <= settings.FACTOR_TRIAL_LIMIT**2:
        primes[value] = primes.get(value, 0) + 1
        value = 1
    return value


def _split(value: int, primes: dict[int, int]) -> None:
    """Factor a cofactor free of small primes by seeded Pollard rho."""
    if value == 1:
        return
    if is_prime(value):
        primes[value] = primes.get(value, 0) + 1
        return
    root = isqrt(value)
    if root * root == value:
        _split(root, primes)
        _split(root, primes)
        return
    divisor = None
    for attempt in range(settings.FACTOR_RHO_RETRIES):
        divisor = pollard_rho(
            value,
            s=2 + attempt,
            a=1 + attempt,
            retries=0,
            seed=settings.FACTOR_RHO_SEED + attempt,
        )
        if divisor:
            break
    if not divisor:
        # Rho exhausted its schedule; sympy's full pipeline is deterministic too.
        for prime, exponent in factorint(value).items():
            primes[int(prime)] = primes.get(int(prime), 0) + int(exponent)
        return
    divisor = int(divisor)
    _split(divisor, primes)
    _split(value // divisor, primes)


def prime_factors(value: int) -> tuple[tuple[int, int], ...]:
    """(prime, exponent) pairs sorted by prime."""
    if value < 1:
        raise ValueError(f"cannot factor {value}")
    primes: dict[int, int] = {}
    _split(_trial_divide(value, primes), primes)
    return tuple(sorted(primes.items()))


def _odd_square_free(factors: tuple[tuple[int, int], ...]) -> int:
    """Product of odd primes with odd exponent."""
    result = 1
    for prime, exponent in factors:
        if prime != 2 and exponent % 2:
            result *= prime
    return result


def square_free_part(value: int) -> int:
    """Square-free part of value / 2^v2(value)."""
    return _odd_square_free(prime_factors(value))


def classify(value: int, factors: tuple[tuple[int, int], ...]) -> tuple[str, int | None]:
    """Structure tag and its parameter for a factored value."""
    exponents = dict(factors)
    two = exponents.pop(2, 0)
    odd_square = all(exponent % 2 == 0 for exponent in exponents.values())
    if odd_square and two % 2 == 0:
        return STRUCTURE_SQUARE, None
    if odd_square and not exponents:
        return STRUCTURE_TWO_TIMES_SQUARE, None
    if odd_square:
        return STRUCTURE_POW2_TIMES_ODD_SQUARE, two
    square_free = 1
    for prime, exponent in factors:
        if exponent % 2:
            square_free *= prime
    if square_free <= settings.SQUARE_FREE_SMALL_LIMIT and value // square_free > 1:
        return STRUCTURE_SQUARE_TIMES_SMALL, square_free
    return STRUCTURE_NONE, None


def factorize(value: int) -> FactoredCount:
    """Full factorization with its square-structure tag."""
    factors = prime_factors(value)
    structure, parameter = classify(value, factors)
    log_event("factored", value=value, primes=len(factors), structure=structure)
    return FactoredCount(value=value, factors=factors, structure=structure, structure_param=parameter)


def render_factored(factored: FactoredCount) -> str:
    """'p1^e1 * p2^e2 * ...' sorted by prime; '1' for the empty product."""
    if not factored.factors:
        return "1"
    return " * ".join(
        str(prime) if exponent == 1 else f"{prime}^{exponent}" for prime, exponent in factored.factors
    )


def render_structure(factored: FactoredCount) -> str:
    """Tag with its parameter, e.g. POW2_TIMES_ODD_SQUARE(1)."""
    if factored.structure_param is None:
        return factored.structure
    return f"{factored.structure}({factored.structure_param})"


def roundness_report(factored: FactoredCount, parameter: int) -> RoundnessReport:
    """Largest prime over n, flagged when it exceeds the configured multiple of n."""
    largest = factored.largest_prime
    ratio = Fraction(largest, parameter) if largest is not None else None
    return RoundnessReport(
        parameter=parameter,
        largest_prime=largest,
        ratio=ratio,
        structure=factored.structure,
        structure_param=factored.structure_param,
        square_free=_odd_square_free(factored.factors),
        outlier=largest is not None and largest > settings.ROUNDNESS_OUTLIER_RATIO * parameter,
    )
