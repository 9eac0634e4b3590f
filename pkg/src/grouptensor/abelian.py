"""Structure of finite abelian groups and a bilinear tensor-square oracle.

For an abelian group the tensor square reduces to the integral tensor
product of the underlying abelian group, which is computable directly from
a primary cyclic decomposition: if ``G = C_{q1} x ... x C_{qk}`` with prime
power ``qi`` then ``G (x) G = prod_{i,j} C_{gcd(qi, qj)}`` and ``x (x) y``
vanishes exactly when ``x_i * y_j = 0 (mod gcd(qi, qj))`` for every pair of
coordinates.  This path never touches the coset enumerator, so it serves as
an independent oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import ConsistencyError
from .groups import (
    FiniteGroup,
    element_orders,
    prime_factors,
    quotient,
    subgroup_as_group,
    subgroup_generated,
)


@dataclass(frozen=True)
class AbelianTensorOracle:
    """Order and pairwise-triviality matrix of the tensor square of an abelian group."""

    order: int
    trivial: tuple[tuple[bool, ...], ...]


def abelian_basis(group: FiniteGroup) -> list[int]:
    """Independent generators of prime-power order whose spans give all of G.

    Works prime by prime: inside each Sylow subgroup an element of maximal
    order generates a direct summand; a basis of the quotient is lifted and
    corrected by a power of that element so the lifts have the right order.
    """
    if not group.is_abelian():
        raise ValueError("abelian basis requested for a nonabelian group")
    if group.order == 1:
        return []
    basis: list[int] = []
    orders = element_orders(group)
    for p in prime_factors(group.order):
        sylow = [a for a in group.elements() if _is_power_of(orders[a], p)]
        sgrp, embed = subgroup_as_group(subgroup_generated(group, sylow))
        for b in _p_group_basis(sgrp):
            basis.append(embed[b])
    return basis


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _p_group_basis(group: FiniteGroup) -> list[int]:
    if group.order == 1:
        return []
    orders = element_orders(group)
    x = max(group.elements(), key=lambda a: (orders[a], -a))
    cyc = subgroup_generated(group, (x,))
    if cyc.order == group.order:
        return [x]
    q, proj = quotient(group, cyc)
    basis = [x]
    for ybar in _p_group_basis(q):
        y = min(g for g in group.elements() if proj[g] == ybar)
        m = q.element_order(ybar)
        target = group.power(y, m)  # lands in <x>; divide it out
        t = next(t for t in range(orders[x]) if group.power(x, t) == target)
        if t % m != 0:
            raise ConsistencyError("basis lift correction is not divisible")
        y = group.mul[y][group.power(group.inv[x], t // m)]
        if group.element_order(y) != m:
            raise ConsistencyError("corrected basis lift has the wrong order")
        basis.append(y)
    return basis


def abelian_coordinates(
    group: FiniteGroup,
) -> tuple[list[int], list[int], dict[int, tuple[int, ...]]]:
    """Basis, basis orders, and the coordinate tuple of every element."""
    basis = abelian_basis(group)
    orders = [group.element_order(b) for b in basis]
    coords: dict[int, tuple[int, ...]] = {}
    stack = [(0, ())]
    for b, q in zip(basis, orders):
        stack = [
            (group.mul[elem][group.power(b, e)], tup + (e,))
            for elem, tup in stack
            for e in range(q)
        ]
    for elem, tup in stack:
        if elem in coords:
            raise ConsistencyError("abelian basis is not independent")
        coords[elem] = tup
    if len(coords) != group.order:
        raise ConsistencyError("abelian basis does not span the group")
    return basis, orders, coords


def abelian_tensor_square_oracle(group: FiniteGroup) -> AbelianTensorOracle:
    """Tensor square of an abelian group straight from its cyclic decomposition."""
    _, orders, coords = abelian_coordinates(group)
    k = len(orders)
    pair_mod = [[gcd(orders[i], orders[j]) for j in range(k)] for i in range(k)]
    order = prod(pair_mod[i][j] for i in range(k) for j in range(k)) if k else 1

    def is_trivial(x: int, y: int) -> bool:
        cx, cy = coords[x], coords[y]
        return all(
            (cx[i] * cy[j]) % pair_mod[i][j] == 0 for i in range(k) for j in range(k)
        )

    trivial = tuple(
        tuple(is_trivial(x, y) for y in group.elements()) for x in group.elements()
    )
    return AbelianTensorOracle(order=order, trivial=trivial)
