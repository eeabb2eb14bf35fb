"""Arithmetic progressions, covering systems, and exact verification.

The progression a mod m is the set {a + km : k in Z}.  A covering system is
a finite list of progressions whose union is Z; it is *distinct* when all
moduli differ.  Verification scans a bytearray over one full period [0, L)
with L = lcm of the moduli, which is exhaustive and trivially auditable.
Densities (sum of 1/m) are exact rationals throughout: the downstream
filters compare against 1 with strict inequality, and floats would corrupt
candidate lists.

File format (bit-exact): one progression per line, `<residue> <modulus>`
separated by a single space, newline-terminated.  `#` lines and blank lines
are ignored on input.  Output is canonical: ascending (modulus, residue),
no comments, ASCII decimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from cover_workbench.numth import lcm_all

# Verification allocates one byte per integer in [0, L); refuse absurd lcms.
MAX_PERIOD = 100_000_000


@dataclass(frozen=True)
class Progression:
    """The residue class `residue mod modulus`, normalized to 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.modulus, self.residue)

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def covers(p: Progression, b: int) -> bool:
    """True iff b lies in the progression."""
    return (b - p.residue) % p.modulus == 0


@dataclass(frozen=True)
class CoveringSystem:
    """A finite list of progressions in canonical order (ascending modulus, residue)."""

    progressions: tuple[Progression, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.progressions, key=lambda p: p.sort_key))
        object.__setattr__(self, "progressions", ordered)

    @classmethod
    def of(cls, pairs) -> "CoveringSystem":
        """Build from (residue, modulus) pairs."""
        return cls(tuple(Progression(a, m) for a, m in pairs))

    @cached_property
    def L(self) -> int:
        """lcm of all moduli (1 for the empty system)."""
        return lcm_all(p.modulus for p in self.progressions)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(p.modulus for p in self.progressions)

    def __len__(self) -> int:
        return len(self.progressions)

    def __iter__(self):
        return iter(self.progressions)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    witness: int | None  # least uncovered integer in [0, L), None when valid
    distinct: bool
    min_modulus: int
    max_modulus: int
    density: Fraction  # exact sum of 1/m over all progressions
    n: int
    L: int


def _coverage_map(system: CoveringSystem) -> bytearray:
    L = system.L
    if L > MAX_PERIOD:
        raise ValueError(f"lcm of moduli is {L}, beyond the verification bound {MAX_PERIOD}")
    cov = bytearray(L)
    for p in system.progressions:
        cov[p.residue :: p.modulus] = b"\x01" * len(range(p.residue, L, p.modulus))
    return cov


def verify(system: CoveringSystem) -> VerificationReport:
    """Exhaustively check coverage of [0, L) and report the least uncovered witness.

    Every integer is congruent mod L to one in [0, L), so coverage of the
    window is equivalent to coverage of Z.
    """
    if not system.progressions:
        raise ValueError("cannot verify an empty system")
    witness = _coverage_map(system).find(0)
    moduli = system.moduli
    return VerificationReport(
        valid=witness == -1,
        witness=None if witness == -1 else witness,
        distinct=len(set(moduli)) == len(moduli),
        min_modulus=min(moduli),
        max_modulus=max(moduli),
        density=sum(Fraction(1, m) for m in moduli),
        n=len(moduli),
        L=system.L,
    )


def translate(system: CoveringSystem, t: int) -> CoveringSystem:
    """Shift every progression by t (the system C + t); validity is preserved."""
    return CoveringSystem(
        tuple(Progression(p.residue + t, p.modulus) for p in system.progressions)
    )


def parse(text: str) -> CoveringSystem:
    """Parse the covering-system file format; residues are normalized."""
    progs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<residue> <modulus>', got {raw!r}")
        try:
            a, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if m <= 0:
            raise ValueError(f"line {lineno}: modulus must be positive, got {m}")
        progs.append(Progression(a, m))
    return CoveringSystem(tuple(progs))


def serialize(system: CoveringSystem) -> str:
    """Canonical text form; parse(serialize(s)) == s."""
    return "".join(f"{p.residue} {p.modulus}\n" for p in system.progressions)
