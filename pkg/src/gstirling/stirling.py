"""Generalized Stirling matrices S^{a,e} and restricted-growth sequences.

For sequences a = (a_1..a_n), e = (e_1..e_n) the matrix S^{a,e} is the
(n+1)x(n+1) unit lower-triangular change of basis defined by

    prod_{i<=m} (x - e_i) = sum_k S(m,k) * prod_{i<=k} (x - a_i).

Three independent constructions live here (recurrence, explicit subset sum,
symmetric-function formula); the fourth (planar-network path matrix) lives in
the network module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .core import RationalLike, SequencePair, TriMatrix, _coerce


@dataclass(frozen=True)
class RgsViolation:
    """First failure of the growth condition: e_{index} > a_{level} where
    level is the cap pointer frozen at the failure.  1-based."""

    index: int
    level: int


@dataclass(frozen=True)
class RgsReport:
    is_rgs: bool
    cap_indices: tuple[int, ...]
    violation: Optional[RgsViolation]


def rgs_check(sp: SequencePair) -> RgsReport:
    """Decide whether e is a restricted-growth sequence relative to a.

    The cap pointer starts at f(1) = 1 and advances by one exactly when
    e_i = a_{f(i)}; the condition is e_i <= a_{f(i)} for every i.  On the
    first violation the pointer freezes and the report records (index,
    level).  Requires a non-decreasing.
    """
    if not sp.a_nondecreasing:
        raise ValueError("rgs_check requires a non-decreasing a-sequence")
    f = 1
    caps = []
    violation = None
    for i in range(1, sp.n + 1):
        caps.append(f)
        if violation is not None:
            continue
        cap = sp.a[f - 1]
        ei = sp.e[i - 1]
        if ei > cap:
            violation = RgsViolation(index=i, level=f)
        elif ei == cap:
            f += 1
    return RgsReport(is_rgs=violation is None, cap_indices=tuple(caps), violation=violation)


def rgs_check_integer(e: Sequence[int]) -> bool:
    """Classical restricted-growth string test: e_1 = 0 and
    e_{i+1} <= 1 + max(e_1..e_i), over non-negative integers."""
    if len(e) == 0:
        return True
    if any(v < 0 for v in e):
        raise ValueError("integer restricted-growth strings are non-negative")
    if e[0] != 0:
        return False
    top = 0
    for v in e[1:]:
        if v > top + 1:
            return False
        top = max(top, v)
    return True


def stirling_recurrence(sp: SequencePair) -> TriMatrix:
    """Fill the triangle by S(m,k) = S(m-1,k-1) + (a_{k+1} - e_m) S(m-1,k),
    with S(0,0) = 1, S(m,m) = 1, and S(m,0) = prod_{i<=m}(a_1 - e_i)."""
    n = sp.n
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = rows[m - 1]
        row = [prev[0] * (sp.a[0] - sp.e[m - 1])]
        for k in range(1, m):
            row.append(prev[k - 1] + (sp.a[k] - sp.e[m - 1]) * prev[k])
        row.append(Fraction(1))
        rows.append(row)
    return TriMatrix(tuple(tuple(r) for r in rows))


def _subset_sum_matrix(
    a: Sequence[Fraction], e: Sequence[Fraction], n: int, factor
) -> TriMatrix:
    """Shared DP for the explicit subset sums.  Scanning s = 1..n and letting
    T[s][j] count subsets {s_1<..<s_j} of {1..s} with s as an optional last
    element gives T[s][j] = T[s-1][j] + factor(s, j) * T[s-1][j-1], where
    factor(s, j) is the weight of s when it is the j-th chosen element."""
    rows: list[list[Fraction]] = [[Fraction(1)]]
    table = [Fraction(1)]
    for s in range(1, n + 1):
        nxt = [Fraction(0)] * (s + 1)
        nxt[0] = Fraction(1)
        for j in range(1, s + 1):
            nxt[j] = (table[j] if j < s else Fraction(0)) + factor(s, j) * table[j - 1]
        table = nxt
        rows.append([table[s - k] for k in range(s + 1)])
    return TriMatrix(tuple(tuple(r) for r in rows))


def stirling_explicit(sp: SequencePair, naive: bool = False) -> TriMatrix:
    """Explicit formula S(m,k) = sum over (m-k)-subsets {s_1<..<s_{m-k}} of
    {1..m} of prod_i (a_{s_i - i + 1} - e_{s_i}).

    The default evaluates the sum by dynamic programming; naive=True
    enumerates the subsets directly and serves as an independent oracle.
    """
    n = sp.n
    if naive:
        rows = []
        for m in range(n + 1):
            row = []
            for k in range(m + 1):
                total = Fraction(0)
                for sub in combinations(range(1, m + 1), m - k):
                    prod = Fraction(1)
                    for i, s in enumerate(sub, start=1):
                        prod *= sp.a[s - i] - sp.e[s - 1]
                    total += prod
                row.append(total)
            rows.append(tuple(row))
        return TriMatrix(tuple(rows))
    return _subset_sum_matrix(
        sp.a, sp.e, n, lambda s, j: sp.a[s - j] - sp.e[s - 1]
    )


def stirling_inverse_explicit(sp: SequencePair, naive: bool = False) -> TriMatrix:
    """Signed inverse entries s(m,k) with
    (-1)^{m-k} s(m,k) = sum over (m-k)-subsets of prod_i (a_{s_i} - e_{s_i - i + 1});
    S^{a,e} and (s(m,k)) multiply to the identity.  Equals S^{e,a} entrywise."""
    n = sp.n
    if naive:
        rows = []
        for m in range(n + 1):
            row = []
            for k in range(m + 1):
                total = Fraction(0)
                for sub in combinations(range(1, m + 1), m - k):
                    prod = Fraction(1)
                    for i, s in enumerate(sub, start=1):
                        prod *= sp.a[s - 1] - sp.e[s - i]
                    total += prod
                row.append(Fraction(-1) ** (m - k) * total)
            rows.append(tuple(row))
        return TriMatrix(tuple(rows))
    unsigned = _subset_sum_matrix(
        sp.a, sp.e, n, lambda s, j: sp.a[s - 1] - sp.e[s - j]
    )
    return TriMatrix(
        tuple(
            tuple((-1) ** (m - k) * unsigned.rows[m][k] for k in range(m + 1))
            for m in range(n + 1)
        )
    )


def _elementary_table(values: Sequence[Fraction], n: int) -> list[list[Fraction]]:
    """E[t][d] = elementary symmetric s_d(values[0..t-1])."""
    table = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for t in range(n + 1):
        table[t][0] = Fraction(1)
    for t in range(1, n + 1):
        for d in range(1, t + 1):
            table[t][d] = table[t - 1][d] + values[t - 1] * table[t - 1][d - 1]
    return table


def _homogeneous_table(values: Sequence[Fraction], n: int) -> list[list[Fraction]]:
    """H[t][d] = complete homogeneous h_d(values[0..t-1]); h_d of zero
    variables is 0 for d > 0."""
    table = [[Fraction(0)] * (n + 1) for _ in range(len(values) + 1)]
    table[0][0] = Fraction(1)
    for t in range(1, len(values) + 1):
        table[t][0] = Fraction(1)
        for d in range(1, n + 1):
            table[t][d] = table[t - 1][d] + values[t - 1] * table[t][d - 1]
    return table


def stirling_symmetric(sp: SequencePair) -> TriMatrix:
    """Symmetric-function route:
    S(m,k) = sum_l (-1)^l h_{m-k-l}(a_1..a_{k+1}) s_l(e_1..e_m)."""
    n = sp.n
    hom = _homogeneous_table(sp.a, n)
    elem = _elementary_table(sp.e, n)
    rows = []
    for m in range(n + 1):
        row = []
        for k in range(m + 1):
            total = Fraction(0)
            for l in range(m - k + 1):
                d = m - k - l
                # h_0 = 1 regardless of variable count; d >= 1 forces k+1 <= n.
                h = Fraction(1) if d == 0 else hom[k + 1][d]
                total += (-1) ** l * h * elem[m][l]
            row.append(total)
        rows.append(tuple(row))
    return TriMatrix(tuple(rows))


_PRESETS = {
    "binomial": (lambda i: 0, lambda i: -1),
    "stirling2": (lambda i: i - 1, lambda i: 0),
    "stirling1": (lambda i: 0, lambda i: -(i - 1)),
    "lah": (lambda i: i - 1, lambda i: -(i - 1)),
}


def preset(name: str, n: int) -> SequencePair:
    """Classical instances: binomial (a=0, e=-1), stirling2 (a_i=i-1, e=0),
    stirling1 (a=0, e_i=-(i-1)), lah (a_i=i-1, e_i=-(i-1))."""
    if name not in _PRESETS:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(_PRESETS)}")
    if n < 0:
        raise ValueError("n must be non-negative")
    fa, fe = _PRESETS[name]
    return SequencePair(
        tuple(Fraction(fa(i)) for i in range(1, n + 1)),
        tuple(Fraction(fe(i)) for i in range(1, n + 1)),
    )


PRESET_NAMES = tuple(sorted(_PRESETS))


def eulerian_matrix(n: int) -> TriMatrix:
    """Eulerian triangle A(m,k) = #{permutations of [m] with k ascents}:
    A(m,k) = (m-k) A(m-1,k-1) + (k+1) A(m-1,k), A(0,0) = 1, and A(m,k) = 0
    for k >= m when m >= 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = rows[m - 1]

        def at(k: int) -> Fraction:
            if k < 0 or k > m - 1:
                return Fraction(0)
            return prev[k]

        row = [(m - k) * at(k - 1) + (k + 1) * at(k) for k in range(m)]
        row.append(Fraction(0))
        rows.append(row)
    return TriMatrix(tuple(tuple(r) for r in rows))


def sequence_pair(
    a: Iterable[RationalLike], e: Iterable[RationalLike]
) -> SequencePair:
    """Convenience constructor accepting ints, strings, or Fractions."""
    return SequencePair(_coerce(a), _coerce(e))
