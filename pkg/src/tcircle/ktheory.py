"""Rational rank arithmetic for the K-theory of finite cyclic groups.

The rationalized K-groups of the integral group ring of a cyclic group of
order k decompose over the divisors d | k into contributions of the rings of
cyclotomic integers Z[zeta_d].  Their ranks are the classical number-theoretic
ones: rank 1 in degree 0, the Dirichlet unit rank r1 + r2 - 1 in degree 1,
and in higher degrees the Borel ranks determined by the place counts of the
d-th cyclotomic field.  The top component (d = k) is the complement of all
proper-subgroup contributions, and summing it over divisor chains reproduces
the closed-form Whitehead rank floor(k/2) + 1 - d(k), which serves as an
independent cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


def _phi(k: int) -> int:
    result = k
    n = k
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


def _divisors(k: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
        d += 1
    return small + large[::-1]


def _check_args(k: int, t: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError("group order k must be a positive integer")
    if not isinstance(t, int) or t < 0:
        raise ValueError("degree t must be a non-negative integer")


def cyclotomic_rank(k: int, t: int) -> int:
    """Rank of the degree-t rationalized K-group of the k-th cyclotomic integers."""
    _check_args(k, t)
    if k <= 2:
        r1, r2 = 1, 0
    else:
        r1, r2 = 0, _phi(k) // 2
    if t == 0:
        return 1
    if t == 1:
        return r1 + r2 - 1
    if t % 2 == 0:
        return 0
    if t % 4 == 1:
        return r1 + r2
    return r2


def theta_dim(k: int, t: int) -> int:
    """Dimension of the top cyclotomic summand of K_t of the group ring of C_k.

    This is the part complementary to everything induced from proper
    subgroups, i.e. the contribution of the primitive k-th roots of unity.
    """
    return cyclotomic_rank(k, t)


def group_ring_rank(k: int, t: int) -> int:
    """Rank of the full degree-t rationalized K-group of the group ring of C_k."""
    _check_args(k, t)
    return sum(cyclotomic_rank(d, t) for d in _divisors(k))


def wh_rank(k: int) -> int:
    """Rational rank of the Whitehead group of the cyclic group of order k.

    Equals floor(k/2) + 1 - (number of divisors of k); zero exactly for
    k in {1, 2, 3, 4, 6}.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("group order k must be a positive integer")
    return k // 2 + 1 - len(_divisors(k))


def h_bt_dim(s: int) -> int:
    """Dimension of the degree-s rational homology of the classifying space.

    The rational cohomology is a polynomial ring on two degree-2 classes, so
    even degrees carry s/2 + 1 monomials and odd degrees vanish.
    """
    if not isinstance(s, int) or s < 0:
        raise ValueError("degree s must be a non-negative integer")
    return s // 2 + 1 if s % 2 == 0 else 0


def wh_growth_chain(j_max: int) -> list[int]:
    """Whitehead ranks along the divisibility chain 2 | 4 | 8 | ...

    The terms 2^(j-1) - j grow without bound, witnessing that the colimit
    over the divisibility poset is infinite dimensional.
    """
    if not isinstance(j_max, int) or j_max < 1:
        raise ValueError("chain length must be a positive integer")
    return [wh_rank(2**j) for j in range(1, j_max + 1)]


def subfin_morphism_count(k: int, l: int) -> int:
    """Number of finite-subgroup-category morphisms from order k to order l.

    There is exactly one when k divides l (the unique order-k subgroup,
    reached by a conjugation unique up to inner automorphisms), else none.
    """
    if not isinstance(k, int) or k < 1 or not isinstance(l, int) or l < 1:
        raise ValueError("orders must be positive integers")
    return 1 if l % k == 0 else 0


@dataclass(frozen=True)
class RankTable:
    """Nonzero assembly-source contributions in total degree n, truncated at k_max.

    Rows are (k, s, t, dim) with s + t = n, s, t >= 0, ordered by (k, s);
    dim = h_bt_dim(s) * theta_dim(k, t).  Negative-degree summands are
    excluded, recorded by t_min = 0 in the serialized form.
    """

    n: int
    k_max: int
    rows: tuple
    total: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k_max": self.k_max,
            "t_min": 0,
            "rows": [{"k": k, "s": s, "t": t, "dim": dim} for k, s, t, dim in self.rows],
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    def to_text(self, color: bool = False) -> str:
        header = f"{'k':>4} {'s':>4} {'t':>4} {'dim':>6}"
        if color:
            header = f"\x1b[1m{header}\x1b[0m"
        lines = [header]
        for k, s, t, dim in self.rows:
            lines.append(f"{k:>4} {s:>4} {t:>4} {dim:>6}")
        lines.append(f"total {self.total}")
        return "\n".join(lines)


def fj_source_table(n: int, k_max: int) -> RankTable:
    """Tabulate the assembly-source dimensions in total degree n for k <= k_max."""
    if not isinstance(n, int):
        raise ValueError("degree n must be an integer")
    if not isinstance(k_max, int) or k_max < 1:
        raise ValueError("k_max must be a positive integer")
    rows = []
    total = 0
    for k in range(1, k_max + 1):
        for s in range(0, max(n, -1) + 1):
            t = n - s
            if t < 0:
                continue
            dim = h_bt_dim(s) * theta_dim(k, t)
            if dim:
                rows.append((k, s, t, dim))
                total += dim
    return RankTable(n=n, k_max=k_max, rows=tuple(rows), total=total)
