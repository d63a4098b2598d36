"""Length planning and recipe execution.

A length L is reachable for shift parameter N exactly when N divides L
and L/N factors into integers all at most N.  The planner turns a set
of target lengths into a deterministic Recipe: one generation step
(cell sizes = the leading factors), then one elongation round per
remaining factor.  Power-of-two cell sizes get Walsh-Hadamard
matrices, everything else the DFT of matching dimension.

Recipes are plain data and fully explicit: executing the same recipe
twice yields identical families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .construct import (
    ConstructionError,
    cosf_to_ccc,
    elongate_cosf,
    enlarge_ccc,
    generate_cosf,
    group_by_length,
    trivial_cosf,
)
from .corr import CheckReport, is_ccc, is_n_co_sf
from .matrices import MatrixSpec
from .model import SequenceFamily


class UnconstructibleError(ValueError):
    """Target length cannot be produced by this construction framework.

    Carries the offending target and, when known, the blocking factor.
    Absence of a construction here does not prove the length is
    impossible outright; it is only out of this framework's reach.
    """

    def __init__(self, message: str, target: Optional[int] = None,
                 factor: Optional[int] = None):
        super().__init__(message)
        self.target = target
        self.factor = factor


@dataclass
class SubFamilySpec:
    """How an elongation cell gets its cross-orthogonal sub-family:
    rows of a matrix, a nested recipe, or an inline family."""

    rows: Optional[MatrixSpec] = None
    recipe: Optional["Recipe"] = None
    family: Optional[SequenceFamily] = None

    def resolve(self) -> SequenceFamily:
        picked = [x is not None for x in (self.rows, self.recipe, self.family)]
        if sum(picked) != 1:
            raise ValueError("sub-family spec needs exactly one of "
                             "rows / recipe / family")
        if self.rows is not None:
            return self.rows.build().rows_family()
        if self.recipe is not None:
            return execute(self.recipe, verify=False).family
        return self.family


@dataclass
class RoundSplit:
    """Explicit cells of one length group in one elongation round.
    In-group positions not covered by any cell become singleton cells
    elongated by the trivial one-sequence family (length unchanged)."""

    group: int
    cells: list
    subs: list  # SubFamilySpec per cell


@dataclass
class Round:
    splits: list = field(default_factory=list)


@dataclass
class Post:
    ccc: Optional[MatrixSpec] = None
    enlarge: Optional[list] = None  # list of MatrixSpec


@dataclass
class Recipe:
    n: int
    base_matrix: MatrixSpec
    cells: list
    cell_matrices: list  # MatrixSpec per cell
    rounds: list = field(default_factory=list)
    post: Optional[Post] = None


@dataclass
class StageRecord:
    stage: str
    family_size: int
    set_size: int
    lengths: list
    check: str = ""
    ok: Optional[bool] = None

    def render(self) -> str:
        status = "" if self.ok is None else (" PASS" if self.ok else " FAIL")
        check = f" [{self.check}]{status}" if self.check else ""
        return (f"{self.stage}: {self.family_size} sets x {self.set_size}, "
                f"lengths {self.lengths}{check}")


@dataclass
class ExecutionResult:
    family: SequenceFamily
    log: list
    claimed_kind: str  # 'cosf:N' or 'ccc'

    @property
    def verified(self) -> bool:
        checked = [r.ok for r in self.log if r.ok is not None]
        return bool(checked) and all(checked)

    def render_log(self) -> str:
        return "\n".join(r.render() for r in self.log)


# -- constructibility --------------------------------------------------


def factor_chain(n: int, k: int) -> Optional[list]:
    """Non-increasing factors of k, each in [2, n]; largest-first with
    backtracking.  Returns None when no such factorization exists."""
    if k == 1:
        return []

    def search(rest: int, cap: int):
        for f in range(min(cap, rest), 1, -1):
            if rest % f:
                continue
            if rest == f:
                return [f]
            tail = search(rest // f, f)
            if tail is not None:
                return [f] + tail
        return None

    return search(k, n)


def constructible(n: int, length: int) -> bool:
    """True iff `length` is divisible by n and length/n factors into
    integers all <= n."""
    if n < 1 or length < 1 or length % n:
        return False
    return factor_chain(n, length // n) is not None


def _blocking_factor(n: int, k: int) -> int:
    """Smallest prime factor of k exceeding n (the witness that no
    factorization into parts <= n exists)."""
    p = 2
    rest = k
    worst = None
    while p * p <= rest:
        while rest % p == 0:
            rest //= p
            if p > n and (worst is None or p < worst):
                worst = p
        p += 1
    if rest > 1 and rest > n and (worst is None or rest < worst):
        worst = rest
    return worst


def _cell_matrix(size: int) -> MatrixSpec:
    if size & (size - 1) == 0:
        return MatrixSpec(kind="hadamard", dim=size)
    return MatrixSpec(kind="dft", dim=size)


def plan(n: int, targets) -> Recipe:
    """Recipe whose executed length set contains every target length.

    Each target L is factored as L = N * f0 * f1 * ... with
    N >= f0 >= f1 >= ... ; f0 becomes a generation cell size and every
    later factor one elongation round.  Multiple targets get disjoint
    cells, which requires the sum of their leading factors to fit in N.
    """
    if n < 1:
        raise ValueError("shift parameter must be >= 1")
    targets = sorted(set(int(t) for t in targets))
    if not targets:
        raise ValueError("at least one target length required")
    chains = {}
    for t in targets:
        if t < 1:
            raise UnconstructibleError(
                f"target length must be positive, got {t}", target=t)
        if t % n:
            raise UnconstructibleError(
                f"length {t} is not divisible by {n}", target=t)
        chain = factor_chain(n, t // n)
        if chain is None:
            bad = _blocking_factor(n, t // n)
            raise UnconstructibleError(
                f"length {t} is unconstructible for shift parameter {n}: "
                f"{t}/{n} = {t // n} has factor {bad} > {n}",
                target=t, factor=bad)
        chains[t] = chain if chain else [1]

    firsts = {t: chains[t][0] for t in targets}
    if sum(firsts.values()) > n:
        subset, used = [], 0
        for t in targets:
            if used + firsts[t] <= n:
                subset.append(t)
                used += firsts[t]
        raise UnconstructibleError(
            f"targets {targets} need leading cells {list(firsts.values())} "
            f"summing past {n}; jointly constructible subset: {subset}")

    cells, cell_matrices, state = [], [], []
    next_row = 0
    for t in targets:
        f0 = firsts[t]
        cells.append(list(range(next_row, next_row + f0)))
        cell_matrices.append(_cell_matrix(f0))
        next_row += f0
        state.extend((f0 * n, t) for _ in range(f0))
    for row in range(next_row, n):
        cells.append([row])
        cell_matrices.append(_cell_matrix(1))
        state.append((n, None))

    rounds = []
    depth = 1
    while any(len(chains[t]) > depth for t in targets):
        splits = []
        # group current family order by length, ascending, like the executor
        lengths = sorted({length for length, _ in state})
        groups = {
            length: [i for i, (l, _) in enumerate(state) if l == length]
            for length in lengths
        }
        new_items = {g: [] for g in range(len(lengths))}
        for g, length in enumerate(lengths):
            members = groups[length]
            cells_here, subs_here, covered = [], [], set()
            for t in targets:
                if len(chains[t]) <= depth:
                    continue
                mine = [p for p, i in enumerate(members) if state[i][1] == t]
                if not mine:
                    continue
                f = chains[t][depth]
                take = mine[:f]
                cells_here.append(take)
                subs_here.append(SubFamilySpec(rows=_cell_matrix(f)))
                covered.update(take)
                new_items[g].append((f, [(length * f, t)] * f))
                # members of the old cell beyond the continuing ones go idle
                for p in mine[f:]:
                    state[members[p]] = (length, None)
            if cells_here:
                splits.append(RoundSplit(group=g, cells=cells_here,
                                         subs=subs_here))
            # idle positions keep their length via implicit singletons
            new_items[g].append(
                (0, [(length, state[members[p]][1])
                     for p in range(len(members)) if p not in covered]))
        if not splits:
            break
        rounds.append(Round(splits=splits))
        # rebuild state in executor output order: groups ascending, explicit
        # cells first, then singleton completion in position order
        rebuilt = []
        for g in range(len(lengths)):
            for _, items in new_items[g]:
                rebuilt.extend(items)
        state = rebuilt
        depth += 1

    recipe = Recipe(n=n, base_matrix=MatrixSpec(kind="dft", dim=n),
                    cells=cells, cell_matrices=cell_matrices, rounds=rounds)
    produced = {length for length, _ in state}
    missing = [t for t in targets if t not in produced]
    if missing:
        raise ConstructionError(
            f"internal planning error: targets {missing} absent from "
            f"simulated lengths {sorted(produced)}")
    return recipe


# -- execution ----------------------------------------------------------


def _complete_round(fam: SequenceFamily, rnd: Round):
    """Expand a round into a full level-2 partition plus sub-families,
    filling uncovered positions with singleton identity cells."""
    groups = group_by_length(fam)
    part2, subs = {}, {}
    by_group = {s.group: s for s in rnd.splits}
    unknown = set(by_group) - set(range(len(groups)))
    if unknown:
        raise ConstructionError(
            f"round references groups {sorted(unknown)}; family has "
            f"{len(groups)} length groups")
    trivial = trivial_cosf(fam.mode)
    for g, group in enumerate(groups):
        cells = []
        resolved = []
        split = by_group.get(g)
        covered = set()
        if split is not None:
            if len(split.cells) != len(split.subs):
                raise ConstructionError(
                    f"group {g}: {len(split.cells)} cells vs "
                    f"{len(split.subs)} sub-families")
            for cell, sub in zip(split.cells, split.subs):
                cells.append(list(cell))
                resolved.append(sub.resolve())
                covered.update(cell)
        for pos in range(len(group)):
            if pos not in covered:
                cells.append([pos])
                resolved.append(trivial)
        part2[g] = cells
        subs.update({(g, p2): fam_ for p2, fam_ in enumerate(resolved)})
    return part2, subs


def execute(recipe: Recipe, verify: bool = True) -> ExecutionResult:
    """Run a recipe: generation, elongation rounds, optional CCC map and
    enlargement.  The log records each intermediate family's shape and,
    when `verify` is set, its verification status."""
    log = []
    n = recipe.n
    base = recipe.base_matrix.build()
    if base.dim != n:
        raise ConstructionError(
            f"base matrix is {base.dim}x{base.dim}, recipe says {n}")
    subs = [spec.build() for spec in recipe.cell_matrices]
    fam = generate_cosf(base, recipe.cells, subs)
    _log_stage(log, "generate", fam, f"cosf:{n}", verify)

    for i, rnd in enumerate(recipe.rounds):
        part2, round_subs = _complete_round(fam, rnd)
        fam = elongate_cosf(fam, part2, round_subs)
        _log_stage(log, f"elongate[{i}]", fam, f"cosf:{n}", verify)

    claimed = f"cosf:{n}"
    if recipe.post is not None:
        if recipe.post.ccc is not None:
            fam = cosf_to_ccc(fam, recipe.post.ccc.build())
            claimed = "ccc"
            _log_stage(log, "ccc", fam, "ccc", verify)
        if recipe.post.enlarge:
            if claimed != "ccc":
                raise ConstructionError(
                    "enlargement requires the ccc step first")
            fam = enlarge_ccc(fam, [s.build() for s in recipe.post.enlarge])
            _log_stage(log, "enlarge", fam, "ccc", verify)
    return ExecutionResult(family=fam, log=log, claimed_kind=claimed)


def _log_stage(log, stage, fam, check, verify):
    rec = StageRecord(stage=stage, family_size=fam.family_size,
                      set_size=fam.set_size,
                      lengths=sorted(fam.length_set), check=check)
    if verify:
        rec.ok = run_check(fam, check).ok
    log.append(rec)


def run_check(fam: SequenceFamily, kind: str, tol: float = 1e-9) -> CheckReport:
    """Dispatch 'cosf:N' / 'ccc' to the matching predicate."""
    if kind == "ccc":
        return is_ccc(fam, tol)
    if kind.startswith("cosf:"):
        return is_n_co_sf(fam, int(kind.split(":", 1)[1]), tol)
    raise ValueError(f"unknown check kind {kind!r}")
