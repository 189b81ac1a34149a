"""Exact-integer block-complexity machinery: the closed form, the
recurrence system, its coefficient solution, vacant-place accounting,
and the conjectured 2D paper-folding formula.

Everything here is plain Python integers (arbitrary precision); no
floating point enters any code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

A1 = 56
B1 = 124


class DomainError(ValueError):
    """Argument outside an operation's stated domain."""


def floor_log2(n: int) -> int:
    """The unique e with 2^e <= n < 2^(e+1), via bit operations."""
    if n <= 0:
        raise DomainError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


def closed_form_A(n: int) -> int:
    """Distinct n-by-n blocks of a one-infinite-supertile Robinson tiling,
    in closed form.  Valid for n >= 2 only; the n=1 restricted base
    quantity is not a block count."""
    if n < 2:
        raise DomainError(f"closed_form_A needs n >= 2, got {n}")
    p = 1 << floor_log2(n)
    return 32 * n * n + 72 * n * p - 48 * p * p


@dataclass
class RecurrenceTable:
    """Memo of the halving recurrences for the block counts A_n and the
    off-grid restricted counts B_n.

    A_1 = 56 is the restricted 2x2 base quantity, not the number of 1x1
    blocks; closed_form_A guards its own n >= 2 domain accordingly.
    """

    memo_A: dict = field(default_factory=lambda: {1: A1})
    memo_B: dict = field(default_factory=lambda: {1: B1})

    def A(self, n: int) -> int:
        if n < 1:
            raise DomainError(f"recurrence_A needs n >= 1, got {n}")
        got = self.memo_A.get(n)
        if got is None:
            h, odd = divmod(n, 2)
            if odd:
                got = self.A(h) + self.A(h + 1) + 2 * self.B(h)
            else:
                got = 4 * self.A(h)
            self.memo_A[n] = got
        return got

    def B(self, n: int) -> int:
        if n < 1:
            raise DomainError(f"recurrence_B needs n >= 1, got {n}")
        got = self.memo_B.get(n)
        if got is None:
            h, odd = divmod(n, 2)
            if odd:
                got = 2 * self.A(h + 1) + 2 * self.B(h)
            else:
                got = 2 * self.A(h) + 2 * self.B(h)
            self.memo_B[n] = got
        return got

    def check(self) -> None:
        """Re-assert every memoised value against its defining recurrence."""
        for n, value in self.memo_A.items():
            if n == 1:
                assert value == A1
            elif n % 2:
                assert value == self.A(n // 2) + self.A(n // 2 + 1) + 2 * self.B(n // 2)
            else:
                assert value == 4 * self.A(n // 2)
        for n, value in self.memo_B.items():
            if n == 1:
                assert value == B1
            elif n % 2:
                assert value == 2 * self.A(n // 2 + 1) + 2 * self.B(n // 2)
            else:
                assert value == 2 * self.A(n // 2) + 2 * self.B(n // 2)


def recurrence_A(n: int, table: RecurrenceTable | None = None) -> int:
    """A_n by the halving recurrences (A_1 = 56 base)."""
    return (table or RecurrenceTable()).A(n)


def recurrence_B(n: int, table: RecurrenceTable | None = None) -> int:
    """B_n by the halving recurrences (B_1 = 124 base)."""
    return (table or RecurrenceTable()).B(n)


def coeff_a(n: int) -> int:
    """Multiplier of the A_1 base in the recurrence solution."""
    if n < 1:
        raise DomainError(f"coeff_a needs n >= 1, got {n}")
    p = 1 << floor_log2(n)
    return 5 * n * n - 12 * n * p + 8 * p * p


def coeff_b(n: int) -> int:
    """Multiplier of the B_1 base in the recurrence solution."""
    if n < 1:
        raise DomainError(f"coeff_b needs n >= 1, got {n}")
    p = 1 << floor_log2(n)
    return -2 * n * n + 6 * n * p - 4 * p * p


@dataclass(frozen=True)
class DecompositionTrace:
    """Leaf multiplicities when the recurrence tree for A_n is unrolled
    down to the A_1 / B_1 bases."""

    n: int
    a_leaves: int
    b_leaves: int

    def value(self) -> int:
        return self.a_leaves * A1 + self.b_leaves * B1


class _TraceTable:
    def __init__(self):
        self.memo_A = {1: (1, 0)}
        self.memo_B = {1: (0, 1)}

    def A(self, n):
        got = self.memo_A.get(n)
        if got is None:
            h, odd = divmod(n, 2)
            if odd:
                xa, xb = self.A(h)
                ya, yb = self.A(h + 1)
                za, zb = self.B(h)
                got = (xa + ya + 2 * za, xb + yb + 2 * zb)
            else:
                xa, xb = self.A(h)
                got = (4 * xa, 4 * xb)
            self.memo_A[n] = got
        return got

    def B(self, n):
        got = self.memo_B.get(n)
        if got is None:
            h, odd = divmod(n, 2)
            za, zb = self.B(h)
            xa, xb = self.A(h + 1) if odd else self.A(h)
            got = (2 * xa + 2 * za, 2 * xb + 2 * zb)
            self.memo_B[n] = got
        return got


def decomposition_trace(n: int, _table: _TraceTable | None = None) -> DecompositionTrace:
    """Unroll the recurrence tree symbolically, counting with multiplicity
    how many leaves resolve to A_1 and to B_1."""
    if n < 1:
        raise DomainError(f"decomposition_trace needs n >= 1, got {n}")
    a, b = (_table or _TraceTable()).A(n)
    return DecompositionTrace(n, a, b)


@dataclass(frozen=True)
class VacantShape:
    """Vacant-place grid dimensions after the first placement step."""

    rows: int
    cols: int


_FIRST_STEP_CHOICES = ((1, 1), (2, 2), (1, 2), (2, 1))


def vacant_places(n: int, first_step_choice) -> VacantShape:
    """Vacant places left in an n-square after placing the first-rank
    corner lattice at the given 2x2 offset.  Even n leaves k x k for all
    four choices; odd n = 2k+1 leaves k x k, (k+1) x (k+1), or the two
    mixed shapes (the [2,1] shape is the transpose of [1,2], a fixed
    orientation convention)."""
    if n < 2:
        raise DomainError(f"vacant_places needs n >= 2, got {n}")
    choice = tuple(first_step_choice)
    if choice not in _FIRST_STEP_CHOICES:
        raise DomainError(f"first_step_choice must be one of {_FIRST_STEP_CHOICES}")
    k, odd = divmod(n, 2)
    if not odd:
        return VacantShape(k, k)
    if choice == (1, 1):
        return VacantShape(k, k)
    if choice == (2, 2):
        return VacantShape(k + 1, k + 1)
    if choice == (1, 2):
        return VacantShape(k, k + 1)
    return VacantShape(k + 1, k)


def paperfolding_P(n: int) -> int:
    """The conjectured (Gaehler-Nilsson) count of distinct n-by-n blocks
    of the 2D paper-folding sequence.  Evaluated, not asserted: the
    formula is a conjecture in its source."""
    if n < 3:
        raise DomainError(f"paperfolding_P needs n >= 3, got {n}")
    p = 1 << floor_log2(n)
    return 12 * n * n + 24 * n * p - 16 * p * p - 4


VERIFY_CSV_HEADER = "n,closed_form,recurrence,oracle,match"


def verify_row(n: int, closed: int, recur: int, oracle=None, match=None) -> str:
    """One CSV row for a verify run; the oracle column is empty when the
    brute-force count was not computed."""
    if match is None:
        match = closed == recur and (oracle is None or oracle == closed)
    oracle_text = "" if oracle is None else str(oracle)
    return f"{n},{closed},{recur},{oracle_text},{str(bool(match)).lower()}"
