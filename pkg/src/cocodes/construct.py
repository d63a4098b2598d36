"""Construction operators for cross-orthogonal families and complete
complementary codes.

Everything here is built from two primitives over unitary-like
matrices: the connection operator (interleaved scalar-times-sequence
concatenation) and the expansion operator (scalar-pattern replication
of a whole set).  The generation step partitions the rows of a base
matrix and connects each cell with a matching small matrix; the
elongation step repeats the idea one level down, on an already
constructed family, with the first partition level forced to group
sequences by length.

Output ordering is always the lexicographic order of the partition
path (cell index, then row index), so constructions are deterministic.
"""

from __future__ import annotations

from math import lcm

from .corr import is_ccc, is_n_co_sf
from .cyclo import CycloNum
from .matrices import UnitaryLike
from .model import (
    EXACT,
    Sequence,
    SequenceFamily,
    SequenceSet,
    concat,
    energy,
    scalars_equal,
    singleton_family,
)


class ConstructionError(ValueError):
    """A construction precondition failed."""


def connect(v: Sequence, cell: SequenceSet) -> Sequence:
    """Connection of a scalar vector with a sequence set:
    (v[k mod len(v)] * a[k mod M]) for k < lcm(M, len(v)), concatenated."""
    m = len(cell)
    nv = len(v)
    k = lcm(m, nv)
    return concat(cell[i % m].scale(v[i % nv]) for i in range(k))


def kron_expand(v: Sequence, cell: SequenceSet) -> SequenceSet:
    """Expansion of an N-sequence set by an M-vector into an MN-sequence
    set; element k is v[k mod M] * c[k div M].  Zero scalars produce
    zero sequences."""
    m = len(v)
    return SequenceSet(
        cell[k // m].scale(v[k % m]) for k in range(m * len(cell))
    )


def entrywise(u: Sequence, v: Sequence) -> Sequence:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return Sequence(a * b for a, b in zip(u, v))


def dyadic_sum(n: int, m: int) -> int:
    """Bitwise exclusive-or; governs which Hadamard row an entrywise
    product of Hadamard rows lands on."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    return n ^ m


def _check_partition(cells, universe_size: int):
    seen = set()
    for idx, cell in enumerate(cells):
        if not cell:
            raise ConstructionError(f"partition cell {idx} is empty")
        for i in cell:
            if not 0 <= i < universe_size:
                raise ConstructionError(
                    f"cell {idx} references index {i} outside 0..{universe_size - 1}")
            if i in seen:
                raise ConstructionError(f"index {i} appears in two cells")
            seen.add(i)
    if len(seen) != universe_size:
        missing = sorted(set(range(universe_size)) - seen)
        raise ConstructionError(f"partition misses indices {missing}")


def generate_cosf(base: UnitaryLike, cells, subs) -> SequenceFamily:
    """Generate an optimal N-shift cross-orthogonal family.

    `cells` is a one-level partition of the row indices of `base`;
    `subs[i]` is a unitary-like matrix whose dimension equals the size
    of `cells[i]`.  Cell i contributes |cell| sequences of length
    |cell| * N, the m-th being sub.row(m) connected with the cell's rows.
    """
    n = base.dim
    cells = [list(c) for c in cells]
    _check_partition(cells, n)
    subs = list(subs)
    if len(subs) != len(cells):
        raise ConstructionError(
            f"{len(cells)} cells but {len(subs)} sub-matrices")
    out = []
    for cell, sub in zip(cells, subs):
        if sub.dim != len(cell):
            raise ConstructionError(
                f"cell {cell} has size {len(cell)} but sub-matrix is "
                f"{sub.dim}x{sub.dim}")
        cell_set = SequenceSet(base.row(i) for i in cell)
        for m in range(sub.dim):
            out.append(connect(sub.row(m), cell_set))
    return singleton_family(out)


def group_by_length(fam: SequenceFamily):
    """Level-1 partition of a single-sequence family: positions grouped
    by sequence length, groups in ascending length order."""
    if fam.set_size != 1:
        raise ConstructionError("expected a family of single-sequence sets")
    by_len = {}
    for pos, ss in enumerate(fam):
        by_len.setdefault(ss.length, []).append(pos)
    return [by_len[length] for length in sorted(by_len)]


def elongate_cosf(fam: SequenceFamily, part2, subs) -> SequenceFamily:
    """Elongate an N-shift cross-orthogonal family.

    The first partition level is derived from the sequence lengths
    (ascending); `part2[p1]` lists the second-level cells of group p1
    as in-group positions, and `subs[(p1, p2)]` is the cross-orthogonal
    family (one sequence per set, family size == cell size) connected
    onto cell (p1, p2).  All sequences of one cell must have equal
    energy; the caller guarantees that `fam` itself is cross-orthogonal.
    """
    groups = group_by_length(fam)
    seqs = [ss[0] for ss in fam]
    part2 = {p1: [list(c) for c in cells] for p1, cells in part2.items()}
    if sorted(part2) != list(range(len(groups))):
        raise ConstructionError(
            f"level-2 partition must cover groups 0..{len(groups) - 1}, "
            f"got {sorted(part2)}")
    out = []
    for p1, group in enumerate(groups):
        cells = part2[p1]
        _check_partition(cells, len(group))
        for p2, cell in enumerate(cells):
            members = [seqs[group[i]] for i in cell]
            e0 = energy(members[0])
            for k, s in enumerate(members[1:], start=1):
                if not scalars_equal(e0, energy(s)):
                    raise ConstructionError(
                        f"cell ({p1},{p2}) mixes energies: member 0 has "
                        f"{e0!r}, member {k} has {energy(s)!r}")
            sub = subs.get((p1, p2))
            if sub is None:
                raise ConstructionError(f"no sub-family for cell ({p1},{p2})")
            _check_sub_family(sub, len(cell), (p1, p2))
            cell_set = SequenceSet(members)
            for m in range(sub.family_size):
                out.append(connect(sub[m][0], cell_set))
    return singleton_family(out)


def _check_sub_family(sub: SequenceFamily, cell_size: int, path):
    if sub.set_size != 1:
        raise ConstructionError(
            f"sub-family at {path} must have single-sequence sets")
    if sub.family_size != cell_size:
        raise ConstructionError(
            f"sub-family at {path} has size {sub.family_size}, cell needs "
            f"{cell_size}")
    for m in range(sub.family_size):
        if len(sub[m][0]) % cell_size:
            raise ConstructionError(
                f"sub-family at {path}: sequence {m} length {len(sub[m][0])} "
                f"is not a multiple of the cell size {cell_size}")
    check = is_n_co_sf(sub, cell_size)
    if not check.ok:
        raise ConstructionError(
            f"sub-family at {path} is not {cell_size}-shift cross-orthogonal:\n"
            + check.render())


def _split_to_units(s: Sequence) -> SequenceSet:
    return SequenceSet(Sequence([x]) for x in s)


def cosf_to_ccc(fam: SequenceFamily, u: UnitaryLike) -> SequenceFamily:
    """Turn an optimal N-shift cross-orthogonal family into an (N,N)-CCC:
    set m collects u.row(n) connected with the length-1 split of the
    m-th sequence, for every n."""
    n = u.dim
    if fam.set_size != 1:
        raise ConstructionError("expected a family of single-sequence sets")
    if fam.family_size != n:
        raise ConstructionError(
            f"family size {fam.family_size} must equal matrix dimension {n}")
    for m in range(n):
        if len(fam[m][0]) % n:
            raise ConstructionError(
                f"sequence {m} length {len(fam[m][0])} not divisible by {n}")
    check = is_n_co_sf(fam, n)
    if not check.ok:
        raise ConstructionError(
            f"input is not {n}-shift cross-orthogonal:\n" + check.render())
    sets = []
    for m in range(n):
        units = _split_to_units(fam[m][0])
        sets.append(SequenceSet(connect(u.row(k), units) for k in range(n)))
    return SequenceFamily(sets)


def ccc_from_unitary(u: UnitaryLike) -> SequenceFamily:
    """The (N,N,{N})-CCC of entrywise row products u.row(m) * u.row(n)."""
    rows = u.rows()
    return SequenceFamily(
        SequenceSet(entrywise(rows[m], rows[n]) for n in range(u.dim))
        for m in range(u.dim)
    )


def enlarge_ccc(fam: SequenceFamily, matrices) -> SequenceFamily:
    """Enlarge an (N,N)-CCC with N unitary-like M x M matrices into an
    (MN,MN)-CCC with the same length set: output set n*M + m is
    matrices[n].row(m) expanded over input set n."""
    matrices = list(matrices)
    n = fam.family_size
    if fam.set_size != n:
        raise ConstructionError(
            f"need a square CCC, got {n} sets of size {fam.set_size}")
    if len(matrices) != n:
        raise ConstructionError(
            f"need exactly {n} matrices, got {len(matrices)}")
    dims = {u.dim for u in matrices}
    if len(dims) != 1:
        raise ConstructionError(f"matrix dimensions differ: {sorted(dims)}")
    check = is_ccc(fam)
    if not check.ok:
        raise ConstructionError("input family is not a CCC:\n" + check.render())
    m_dim = dims.pop()
    sets = []
    for idx in range(n):
        for m in range(m_dim):
            sets.append(kron_expand(matrices[idx].row(m), fam[idx]))
    return SequenceFamily(sets)


def trivial_cosf(mode: str = EXACT) -> SequenceFamily:
    """The one-sequence family {(1)}: connecting with it is the identity."""
    one = CycloNum.from_int(1) if mode == EXACT else 1 + 0j
    return singleton_family([Sequence([one])])
