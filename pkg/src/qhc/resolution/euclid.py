"""Euclid's algorithm on the weights and the divisor chain it predicts.

For coprime weights ``p <= q`` with ``q/p = [s_1; s_2, ..., s_m]`` the minimal
resolution of the pencil ``y^p = c * x^q`` takes ``N = s_1 + ... + s_m`` blowups.
Listed along the chain, the last line of every odd block ``k`` sits at position
``s_1 + s_3 + ... + s_k`` and the last line of every even block ``k`` at
``N - (s_2 + s_4 + ... + s_k) + 1``. The last line of block ``m`` is the ``-1``
line, the last line of block ``m - 1`` has ``-(s_m + 1)``, the last line of any
earlier block ``k`` has ``-(s_{k+1} + 2)``, and every other line has ``-2``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple


class ChainError(ValueError):
    """Raised for weights that are not coprime and for chains no weights produce."""


class EuclidStep(NamedTuple):
    """One division ``q_j = s_j * p_j + r_j``."""

    q: int
    p: int
    s: int
    r: int

    def __str__(self) -> str:
        return f"({self.q},{self.p},{self.s},{self.r})"


@dataclass(frozen=True)
class EuclidChain:
    """Euclid's algorithm run on ``(q, p)``."""

    p: int
    q: int
    steps: tuple[EuclidStep, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def quotients(self) -> tuple[int, ...]:
        return tuple(step.s for step in self.steps)

    @property
    def blowups(self) -> int:
        """``N``, the number of lines of the minimal resolution."""
        return sum(self.quotients)

    def __str__(self) -> str:
        return "[" + ",".join(str(step) for step in self.steps) + "]"


def _require_weights(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise ChainError(f"weights must be positive, got ({p},{q})")
    if p > q:
        raise ChainError(f"weights must satisfy p <= q, got ({p},{q})")
    if gcd(p, q) != 1:
        raise ChainError(f"weights ({p},{q}) are not coprime")


def euclid_chain(p: int, q: int) -> EuclidChain:
    """Run Euclid's algorithm on ``q`` and ``p``.

    Raises:
        ChainError: Unless ``1 <= p <= q`` and ``gcd(p, q) = 1``.
    """
    _require_weights(p, q)
    steps: list[EuclidStep] = []
    a, b = q, p
    while b:
        s, r = divmod(a, b)
        steps.append(EuclidStep(a, b, s, r))
        a, b = b, r
    return EuclidChain(p, q, tuple(steps))


def chain_self_intersections(p: int, q: int) -> list[int]:
    """Self-intersections of the minimal resolution of ``y^p = c * x^q``, in chain order.

    The chain starts at the first blown-up line.

    Raises:
        ChainError: Unless ``1 <= p <= q`` and ``gcd(p, q) = 1``.
    """
    euclid = euclid_chain(p, q)
    s = euclid.quotients
    m, total = len(s), euclid.blowups
    chain = [-2] * total
    odd_sum = even_sum = 0
    for k in range(1, m + 1):
        if k % 2:
            odd_sum += s[k - 1]
            position = odd_sum
        else:
            even_sum += s[k - 1]
            position = total - even_sum + 1
        if k == m:
            chain[position - 1] = -1
        elif k == m - 1:
            chain[position - 1] = -(s[k] + 1)
        else:
            chain[position - 1] = -(s[k] + 2)
    return chain


def chain_arms(chain: Sequence[int]) -> tuple[list[int], list[int]]:
    """The sub-chains on either side of the single ``-1`` line.

    Raises:
        ChainError: If the chain does not contain exactly one ``-1``.
    """
    if list(chain).count(-1) != 1:
        raise ChainError(f"chain {list(chain)} must contain exactly one -1")
    split = list(chain).index(-1)
    return list(chain[:split]), list(chain[split + 1 :])


def continuant(arm: Sequence[int]) -> int:
    """Numerator of the negative continued fraction ``[a_1, ..., a_k]`` with ``a_i = -c_i``.

    The empty arm has continuant 1.
    """
    previous, current = 0, 1
    for c in arm:
        previous, current = current, -c * current - previous
    return current


def weights_from_chain(chain: Sequence[int]) -> tuple[int, int]:
    """Recover the coprime weights ``(p, q)`` of a chain.

    The arm continuants are ``q`` on the side of the first line and ``p`` on the
    other; the answer is accepted only if it reproduces the chain up to reversal.

    Raises:
        ChainError: If no coprime pair produces ``chain``.
    """
    chain = list(chain)
    if not chain or any(c > -1 for c in chain):
        raise ChainError(f"chain {chain} must be a nonempty list of negative integers")
    left, right = chain_arms(chain)
    p, q = sorted((continuant(right), continuant(left)))
    if p < 1 or gcd(p, q) != 1:
        raise ChainError(f"chain {chain} is not the chain of any coprime weights")
    expected = chain_self_intersections(p, q)
    if chain not in (expected, expected[::-1]):
        raise ChainError(f"chain {chain} is not the chain of any coprime weights")
    return p, q
