"""Minimality of the three-CNOT encoder P_3, by counting and by search.

CNOT-only circuits are basis permutations, represented here as index tables.
Writing each column index in binary, mismatch_count totals the differing
bits against another table; one CNOT changes at most 4 of the 24 bit
positions at n=3, so P_3's 12 mismatches force at least 3 gates.  The
exhaustive search over short CNOT words confirms the bound is tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch
from .gates import Circuit, circuit_permutation, cnot_op, cnot_perm

CnotPair = tuple[int, int]


@dataclass(frozen=True)
class PermutationTable:
    n: int
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(x) for x in self.perm))
        if sorted(self.perm) != list(range(1 << self.n)):
            raise DimensionMismatch(
                f"perm is not a bijection on 0..{(1 << self.n) - 1}"
            )


def identity_table(n: int) -> PermutationTable:
    return PermutationTable(n, tuple(range(1 << n)))


def cnot_table(n: int, control: int, target: int) -> PermutationTable:
    return PermutationTable(n, tuple(cnot_perm(n, control, target)))


def compose(first: PermutationTable, second: PermutationTable) -> PermutationTable:
    """Table of applying `first` then `second`."""
    if first.n != second.n:
        raise DimensionMismatch(f"tables on n={first.n} and n={second.n}")
    return PermutationTable(first.n, tuple(second.perm[s] for s in first.perm))


def circuit_table(circuit: Circuit) -> PermutationTable:
    """Table of a CNOT-only circuit (raises on other gates)."""
    return PermutationTable(circuit.n_qubits, tuple(circuit_permutation(circuit)))


def mismatch_count(a: PermutationTable, b: PermutationTable) -> int:
    """Total differing binary digits between corresponding columns."""
    if a.n != b.n:
        raise DimensionMismatch(f"tables on n={a.n} and n={b.n}")
    return sum((x ^ y).bit_count() for x, y in zip(a.perm, b.perm))


def cnot_pairs(n: int) -> list[CnotPair]:
    """All n(n-1) ordered (control, target) pairs, in deterministic order."""
    return [(c, t) for c in range(n) for t in range(n) if t != c]


def all_cnots(n: int) -> list[PermutationTable]:
    """Tables for every ordered CNOT pair, aligned with cnot_pairs(n)."""
    return [cnot_table(n, c, t) for c, t in cnot_pairs(n)]


def word_table(n: int, word) -> PermutationTable:
    """Table of a CNOT word given as (control, target) pairs in application order."""
    table = identity_table(n)
    for c, t in word:
        table = compose(table, cnot_table(n, c, t))
    return table


def word_circuit(n: int, word) -> Circuit:
    return Circuit(n, tuple(cnot_op(c, t) for c, t in word))


def exhaustive_search(
    target: PermutationTable, max_len: int
) -> list[CnotPair] | None:
    """Shortest CNOT word of length <= max_len composing to target, or None.

    Enumerates words in lexicographic order over the cnot_pairs alphabet,
    shortest first, and returns the first exact match.
    """
    if max_len > 4:
        raise ValueError(f"max_len must be <= 4, got {max_len}")
    pairs = cnot_pairs(target.n)
    tables = all_cnots(target.n)
    ident = identity_table(target.n)
    if target == ident:
        return []
    for length in range(1, max_len + 1):
        for choice in product(range(len(pairs)), repeat=length):
            table = ident
            for g in choice:
                table = compose(table, tables[g])
            if table == target:
                return [pairs[g] for g in choice]
    return None


def counting_lower_bound(target: PermutationTable) -> int:
    """ceil(mismatch_count(I, target) / 4): one CNOT fixes at most 4 bits."""
    return -(-mismatch_count(identity_table(target.n), target) // 4)
