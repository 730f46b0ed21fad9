"""Residual-quadratic branch construction, pruning and difference-table scans.

Starting from an eligible N with mod-25 root r, the substitution
x = 25*t + r turns the question "is N - x^2 a square divisible by 25?"
into "is Q(t) = (N - r^2)/25 - 2r*t - 25*t^2 a perfect square?".

Q is then refined by splitting t into residue classes: the even class
t = 2s (divided through by 4 whenever all coefficients allow, which
keeps the quadratic coefficient at 25), and the odd classes t = 4s + 1
and t = 4s - 1.  When the even class does not divide through, it is
split once more into t = 4s and t = 4s + 2.  Each child quadratic is
checked over a full period mod 8: if it only ever takes values outside
the square residues {0, 1, 4} the branch is pruned (values always
5 mod 8, values always oddly even, or some other non-residue pattern)
and never scanned.

Surviving branches are scanned incrementally: successive values of a
downward parabola differ by first differences that grow by exactly
2*gamma per step, so each row costs one subtraction.  Every nonnegative
value is square-tested; hits map back through the substitution chain to
a representation N = x^2 + y^2.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .arith import check_magnitude, is_perfect_square, isqrt

#: quadratic coefficient of refinable branches (the residual's 25)
_REFINABLE_GAMMA = 25

#: refinement recursion depth cap beyond the initial split
MAX_REFINE_DEPTH = 4


class InternalConsistencyError(RuntimeError):
    """A scan result failed its own cross-check; indicates a bug."""


class PruneReason(Enum):
    ALWAYS_FIVE_MOD_8 = "always_five_mod_8"
    ODDLY_EVEN = "oddly_even"
    OTHER_NON_RESIDUE = "other_non_residue"


@dataclass(frozen=True)
class Quadratic:
    """Q(t) = m - beta*t - gamma*t^2 with gamma > 0 (downward parabola)."""

    m: int
    beta: int
    gamma: int

    def __post_init__(self) -> None:
        if self.gamma <= 0:
            raise ValueError("quadratic coefficient must be positive")

    def value_at(self, t: int) -> int:
        return self.m - self.beta * t - self.gamma * t * t

    def __str__(self) -> str:
        s = str(self.m)
        if self.beta:
            s += f" - {self.beta} t" if self.beta > 0 else f" + {-self.beta} t"
        return s + f" - {self.gamma} t^2"


@dataclass(frozen=True)
class AffineStep:
    """One substitution t_outer = scale * t_inner + offset."""

    scale: int
    offset: int


@dataclass(frozen=True)
class SubstitutionChain:
    """Affine steps mapping a branch variable back to x, plus the square
    divisor taken out of the residual (25 times a power of 4).

    steps are ordered outermost first; the root step is x = 25*t + r.
    """

    steps: tuple[AffineStep, ...]
    divisor: int

    def apply(self, t: int) -> int:
        """Map an inner-variable value to the (signed) outer x."""
        for step in reversed(self.steps):
            t = step.scale * t + step.offset
        return t


@dataclass(frozen=True)
class ScanBranch:
    name: str
    quadratic: Quadratic
    chain: SubstitutionChain
    prune_reason: PruneReason | None
    depth: int

    @property
    def scannable(self) -> bool:
        return self.prune_reason is None

    def describe(self) -> str:
        s = f"branch {self.name}: Q(t) = {self.quadratic}"
        if self.prune_reason is not None:
            s += f" [pruned: {self.prune_reason.value}]"
        return s


@dataclass(frozen=True)
class ScanHit:
    """A perfect square found during a branch scan."""

    branch: ScanBranch
    t: int
    value: int
    root: int


@dataclass(frozen=True)
class TableRow:
    """One visited t: cumulative subtrahend, first difference into this
    row (None on the starting row), and the running value.

    Consecutive differences on one side of the start differ by exactly
    2*gamma.
    """

    t: int
    subtrahend: int
    difference: int | None
    running_value: int


def _prune_reason(q: Quadratic) -> PruneReason | None:
    """Check q over one full period mod 8.

    If no value can be a square residue, report why: always 5 (mod 8),
    always oddly even (2 mod 4), or some other non-residue pattern.
    """
    values = {q.value_at(t) % 8 for t in range(8)}
    if values & {0, 1, 4}:
        return None
    if values == {5}:
        return PruneReason.ALWAYS_FIVE_MOD_8
    if all(v % 4 == 2 for v in values):
        return PruneReason.ODDLY_EVEN
    return PruneReason.OTHER_NON_RESIDUE


_ROOT_CHILD_NAMES = {"e": "A", "e0": "A0", "e2": "A2", "o1": "B", "o3": "C"}


def _child_name(parent: str, tag: str) -> str:
    if parent == "Q":
        return _ROOT_CHILD_NAMES[tag]
    return f"{parent}.{tag}"


def _substitute(branch: ScanBranch, scale: int, offset: int, tag: str) -> ScanBranch:
    """Substitute t = scale*s + offset into the branch quadratic."""
    q = branch.quadratic
    child = Quadratic(
        m=q.m - q.beta * offset - q.gamma * offset * offset,
        beta=scale * (q.beta + 2 * q.gamma * offset),
        gamma=scale * scale * q.gamma,
    )
    chain = SubstitutionChain(
        steps=branch.chain.steps + (AffineStep(scale, offset),),
        divisor=branch.chain.divisor,
    )
    return ScanBranch(
        name=_child_name(branch.name, tag),
        quadratic=child,
        chain=chain,
        prune_reason=_prune_reason(child),
        depth=branch.depth + 1,
    )


def _reduce4(branch: ScanBranch) -> ScanBranch:
    """Divide the quadratic by 4 while all coefficients allow, folding
    each factor into the chain's square divisor."""
    q = branch.quadratic
    divisor = branch.chain.divisor
    while q.m % 4 == 0 and q.beta % 4 == 0 and q.gamma % 4 == 0:
        q = Quadratic(q.m // 4, q.beta // 4, q.gamma // 4)
        divisor *= 4
    if divisor == branch.chain.divisor:
        return branch
    return replace(
        branch,
        quadratic=q,
        chain=replace(branch.chain, divisor=divisor),
        prune_reason=_prune_reason(q),
    )


def initial_quadratic(n: int, r: int) -> ScanBranch:
    """Root branch for n with mod-25 root r:
    Q(t) = (n - r^2)/25 - 2r*t - 25*t^2, divisor 25, via x = 25*t + r.

    Signed t covers both root classes r and 25 - r.
    """
    check_magnitude(n)
    if not 0 <= r < 25 or (n - r * r) % 25 != 0:
        raise ValueError(f"{r} is not a square root of {n} mod 25")
    q = Quadratic(m=(n - r * r) // 25, beta=2 * r, gamma=25)
    chain = SubstitutionChain(steps=(AffineStep(25, r),), divisor=25)
    return ScanBranch(
        name="Q", quadratic=q, chain=chain, prune_reason=_prune_reason(q), depth=0
    )


def refine(branch: ScanBranch) -> list[ScanBranch]:
    """Split a branch's t-domain into residue classes.

    Children partition the parent domain exactly.  The even class is
    divided by 4 when possible; otherwise it is split again into the
    classes t = 0 and t = 2 (mod 4).  The odd classes t = 1 and
    t = 3 (mod 4) are always emitted, each divided by 4 when possible.
    """
    even = _reduce4(_substitute(branch, 2, 0, "e"))
    if even.chain.divisor > branch.chain.divisor:
        children = [even]
    else:
        children = [
            _reduce4(_substitute(branch, 4, 0, "e0")),
            _reduce4(_substitute(branch, 4, 2, "e2")),
        ]
    children.append(_reduce4(_substitute(branch, 4, 1, "o1")))
    children.append(_reduce4(_substitute(branch, 4, -1, "o3")))
    return children


def expand_branches(root: ScanBranch, *, respect_pruning: bool = True) -> list[ScanBranch]:
    """Refine the root into its leaf branches (depth-first order).

    A branch is refined while its quadratic coefficient is still 25
    (the residual scale, where parity splits keep paying off) and the
    depth cap allows; everything else is a leaf, pruned or scannable.
    With respect_pruning=False, pruned status is ignored for the
    refinement decision (used by the pruning-equivalence checks).
    """
    leaves: list[ScanBranch] = []

    def walk(br: ScanBranch) -> None:
        refinable = (
            br.quadratic.gamma == _REFINABLE_GAMMA
            and br.depth < MAX_REFINE_DEPTH
            and (br.scannable or not respect_pruning)
        )
        if not refinable:
            leaves.append(br)
            return
        for child in refine(br):
            walk(child)

    walk(root)
    return leaves


def _scan_start(q: Quadratic) -> int | None:
    """Starting t for the scan, or None if Q is everywhere negative.

    Normally 0 (matching the hand tables).  When Q(0) < 0 the only
    possible nonnegative region hugs the vertex -beta/(2*gamma), so try
    the two integers around it.
    """
    if q.value_at(0) >= 0:
        return 0
    lo = -q.beta // (2 * q.gamma)
    best = max((lo, lo + 1), key=q.value_at)
    return best if q.value_at(best) >= 0 else None


def scan_branch(branch: ScanBranch) -> tuple[list[ScanHit], list[TableRow]]:
    """Visit every integer t with Q(t) >= 0 and collect the perfect
    squares among the values.

    The running value is maintained by subtracting first differences
    that grow by 2*gamma per step; the direct evaluation is kept only
    as a per-row cross-check.  Rows are returned sorted by t; the
    starting row is the one with difference None.
    """
    q = branch.quadratic
    t0 = _scan_start(q)
    if t0 is None:
        return [], []

    hits: list[ScanHit] = []
    rows: list[TableRow] = []

    def visit(t: int, value: int, difference: int | None) -> None:
        if value != q.value_at(t):
            raise InternalConsistencyError(
                f"incremental value {value} != Q({t}) on branch {branch.name}"
            )
        rows.append(TableRow(t, q.m - value, difference, value))
        root = is_perfect_square(value)
        if root is not None:
            hits.append(ScanHit(branch, t, value, root))

    head = q.value_at(t0)
    visit(t0, head, None)
    for direction in (1, -1):
        # first difference leaving t0 in this direction
        diff = direction * q.beta + q.gamma * (2 * direction * t0 + 1)
        value, t = head, t0
        while True:
            nxt = value - diff
            if nxt < 0:
                break
            t += direction
            visit(t, nxt, diff)
            value = nxt
            diff += 2 * q.gamma

    rows.sort(key=lambda r: r.t)
    hits.sort(key=lambda h: h.t)
    return hits, rows


def recover_xy(hit: ScanHit, n: int) -> tuple[int, int]:
    """Map a scan hit back to the representation n = x^2 + y^2
    (y the member divisible by 5)."""
    chain = hit.branch.chain
    x = abs(chain.apply(hit.t))
    y = isqrt(chain.divisor) * hit.root
    if x * x + y * y != n:
        raise InternalConsistencyError(
            f"hit at t={hit.t} on branch {hit.branch.name} does not reconstruct {n}"
        )
    return x, y
