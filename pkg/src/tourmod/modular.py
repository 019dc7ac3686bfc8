"""Modules, co-modules and the local structure around them.

A module of a tournament is a vertex set whose members are
indistinguishable from outside: every outside vertex either beats all of
them or loses to all of them.  The empty set, the singletons and the full
vertex set are the trivial modules; a tournament whose modules are all
trivial is indecomposable.  A co-module is a set M such that M or its
complement is a nontrivial module; mc(T) denotes the inclusion-minimal
co-modules.  Two sets overlap when they intersect and neither contains
the other; among minimal co-modules each element overlaps at most two
others, and only size-2 modules (twins) overlap anything at all.

Everything here works on bitmask representations and is polynomial in n
except ``nontrivial_modules``, which scans all subsets and is therefore
capped at n <= 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Tournament, VertexSet

__all__ = [
    "CoModule",
    "TransitiveComponentPartition",
    "component_comodule",
    "is_comodule",
    "is_indecomposable",
    "is_module",
    "maximal_nontrivial_modules",
    "minimal_comodules",
    "minimal_nontrivial_modules",
    "nontrivial_modules",
    "overlap_set",
    "smallest_module_containing",
    "tilde",
    "transitive_components",
]

SUBSET_SCAN_BOUND = 16


def _as_mask(T: Tournament, X) -> int:
    if isinstance(X, CoModule):
        X = X.members
    if isinstance(X, VertexSet):
        if X.n != T.n:
            raise ValueError("vertex set belongs to a different vertex count")
        return X.mask
    return VertexSet.from_members(T.n, X).mask


def _is_module_mask(T: Tournament, mask: int) -> bool:
    full = (1 << T.n) - 1
    outside = full & ~mask
    while outside:
        bit = outside & -outside
        outside ^= bit
        rel = T.out_masks[bit.bit_length() - 1] & mask
        if rel and rel != mask:
            return False
    return True


def is_module(T: Tournament, X) -> bool:
    """True when every vertex outside X relates identically to all of X."""
    return _is_module_mask(T, _as_mask(T, X))


def _closure_mask(T: Tournament, mask: int) -> int:
    """Grow ``mask`` by splitter vertices until it becomes a module."""
    full = (1 << T.n) - 1
    changed = True
    while changed:
        changed = False
        outside = full & ~mask
        while outside:
            bit = outside & -outside
            outside ^= bit
            rel = T.out_masks[bit.bit_length() - 1] & mask
            if rel and rel != mask:
                mask |= bit
                changed = True
                break
    return mask


def smallest_module_containing(T: Tournament, S) -> VertexSet:
    """The inclusion-smallest module of T containing the nonempty set S.

    Any vertex distinguishing two members of the current set must belong
    to every module containing S, so repeatedly adding such splitters
    converges to the least module above S.
    """
    mask = _as_mask(T, S)
    if mask == 0:
        raise ValueError("need at least one seed vertex")
    return VertexSet(T.n, _closure_mask(T, mask))


def is_indecomposable(T: Tournament) -> bool:
    """True when the only modules are the trivial ones.

    Every module with two or more vertices contains the closure of one of
    its pairs, so it suffices to check that all pair closures hit V(T).
    """
    if T.n <= 2:
        return True
    full = (1 << T.n) - 1
    for i in range(T.n):
        for j in range(i + 1, T.n):
            if _closure_mask(T, (1 << i) | (1 << j)) != full:
                return False
    return True


def nontrivial_modules(T: Tournament) -> list[VertexSet]:
    """All modules X with 2 <= |X| <= n-1, by full subset scan (n <= 16)."""
    if T.n > SUBSET_SCAN_BOUND:
        raise ValueError(
            f"subset scan limited to n <= {SUBSET_SCAN_BOUND}; use the minimal/"
            "maximal module operations for larger tournaments"
        )
    full = (1 << T.n) - 1
    found = [
        VertexSet(T.n, mask)
        for mask in range(full + 1)
        if 2 <= mask.bit_count() < T.n and _is_module_mask(T, mask)
    ]
    found.sort(key=lambda s: s.key)
    return found


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    items = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in items:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    items = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in items:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


def minimal_nontrivial_modules(T: Tournament) -> list[VertexSet]:
    """Inclusion-minimal nontrivial modules, via pair closures.

    Every nontrivial module contains a pair, and the closure of that pair
    is the smallest module above it, so the minimal nontrivial modules are
    the inclusion-minimal proper pair closures.
    """
    full = (1 << T.n) - 1
    closures = set()
    for i in range(T.n):
        for j in range(i + 1, T.n):
            c = _closure_mask(T, (1 << i) | (1 << j))
            if c != full:
                closures.add(c)
    out = [VertexSet(T.n, m) for m in _minimal_masks(closures)]
    out.sort(key=lambda s: s.key)
    return out


def _modular_partition_avoiding(T: Tournament, v: int) -> list[int]:
    """Coarsest partition of V minus v into modules of T (all avoiding v)."""
    full = (1 << T.n) - 1
    parts = [full & ~(1 << v)]
    changed = True
    while changed:
        changed = False
        for p_i, part in enumerate(parts):
            if part.bit_count() < 2:
                continue
            outside = full & ~part
            while outside:
                bit = outside & -outside
                outside ^= bit
                rel = T.out_masks[bit.bit_length() - 1] & part
                if rel and rel != part:
                    parts[p_i] = rel
                    parts.append(part ^ rel)
                    changed = True
                    break
            if changed:
                break
    return parts


def maximal_nontrivial_modules(T: Tournament) -> list[VertexSet]:
    """Inclusion-maximal nontrivial modules.

    A proper module avoids some vertex v, and the coarsest modular
    partition of V minus v has it inside one class; collecting the classes
    of size >= 2 over every choice of v and keeping the inclusion-maximal
    ones yields exactly the maximal nontrivial modules.
    """
    classes: set[int] = set()
    for v in range(T.n):
        for part in _modular_partition_avoiding(T, v):
            if part.bit_count() >= 2:
                classes.add(part)
    out = [VertexSet(T.n, m) for m in _maximal_masks(classes)]
    out.sort(key=lambda s: s.key)
    return out


def is_comodule(T: Tournament, M) -> bool:
    """True when M or its complement is a nontrivial module of T."""
    mask = _as_mask(T, M)
    full = (1 << T.n) - 1
    if 2 <= mask.bit_count() < T.n and _is_module_mask(T, mask):
        return True
    comp = full & ~mask
    return 2 <= comp.bit_count() < T.n and _is_module_mask(T, comp)


@dataclass(frozen=True)
class CoModule:
    """A minimal co-module together with which side is the module.

    ``kind`` is "module" when the members form a nontrivial module,
    "complement-module" when only the complement does, "both" when both do.
    """

    members: VertexSet
    kind: str

    @property
    def key(self) -> tuple:
        return self.members.key

    def __repr__(self) -> str:
        return f"CoModule({{{', '.join(map(str, self.members.members()))}}}, {self.kind})"


def _comodule_kind(T: Tournament, mask: int) -> str:
    full = (1 << T.n) - 1
    as_module = 2 <= mask.bit_count() < T.n and _is_module_mask(T, mask)
    comp = full & ~mask
    comp_module = 2 <= comp.bit_count() < T.n and _is_module_mask(T, comp)
    if as_module and comp_module:
        return "both"
    if as_module:
        return "module"
    if comp_module:
        return "complement-module"
    raise ValueError("not a co-module")


def minimal_comodules(T: Tournament) -> list[CoModule]:
    """The inclusion-minimal co-modules mc(T); empty iff T is indecomposable.

    A minimal co-module is either a minimal nontrivial module or the
    complement of a maximal one, so filtering that candidate pool for
    inclusion-minimality is exhaustive.
    """
    full = (1 << T.n) - 1
    cands = {s.mask for s in minimal_nontrivial_modules(T)}
    cands |= {full & ~s.mask for s in maximal_nontrivial_modules(T)}
    out = [
        CoModule(VertexSet(T.n, m), _comodule_kind(T, m)) for m in _minimal_masks(cands)
    ]
    out.sort(key=lambda c: c.key)
    return out


def _overlaps(a: int, b: int) -> bool:
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


def overlap_set(T: Tournament, M) -> list[CoModule]:
    """Minimal co-modules overlapping M, which must itself be in mc(T)."""
    mask = _as_mask(T, M)
    mc = minimal_comodules(T)
    if all(c.members.mask != mask for c in mc):
        raise ValueError("argument is not a minimal co-module of the tournament")
    return [c for c in mc if _overlaps(c.members.mask, mask)]


def tilde(T: Tournament, M) -> VertexSet:
    """The distinguished subset of a minimal co-module with at most one overlap.

    With no overlapping minimal co-module this is M itself; with exactly
    one, say M', it is the single shared vertex of M and M'.  Undefined
    (rejected) when two minimal co-modules overlap M.
    """
    mask = _as_mask(T, M)
    over = overlap_set(T, VertexSet(T.n, mask))
    if len(over) > 1:
        raise ValueError("tilde is undefined when two minimal co-modules overlap")
    if not over:
        return VertexSet(T.n, mask)
    shared = mask & over[0].members.mask
    assert shared, "overlapping sets must intersect"
    return VertexSet(T.n, shared)


# ---------------------------------------------------------------------------
# Transitive modules and components.


def _is_transitive_mask(T: Tournament, mask: int) -> bool:
    """T restricted to mask is transitive iff its inner out-degrees are distinct."""
    k = mask.bit_count()
    degs = set()
    rest = mask
    while rest:
        bit = rest & -rest
        rest ^= bit
        degs.add((T.out_masks[bit.bit_length() - 1] & mask).bit_count())
    return len(degs) == k


@dataclass(frozen=True)
class TransitiveComponentPartition:
    """The maximal transitive modules; they partition the vertex set."""

    blocks: tuple[VertexSet, ...]

    def block_of(self, v: int) -> VertexSet:
        for b in self.blocks:
            if v in b:
                return b
        raise ValueError(f"vertex {v} not covered")


def transitive_components(T: Tournament) -> TransitiveComponentPartition:
    """Partition V(T) into maximal transitive modules.

    The union of intersecting transitive modules is again one, so each
    vertex lies in a unique maximal transitive module, reached here by
    greedily absorbing any vertex that keeps the set a transitive module
    (inside a transitive module, every one-vertex interval extension is
    again a module, so single-vertex growth cannot get stuck).
    """
    assigned = 0
    blocks = []
    for v in range(T.n):
        if assigned >> v & 1:
            continue
        mask = 1 << v
        grown = True
        while grown:
            grown = False
            for w in range(T.n):
                if mask >> w & 1:
                    continue
                cand = mask | (1 << w)
                if _is_module_mask(T, cand) and _is_transitive_mask(T, cand):
                    mask = cand
                    grown = True
        blocks.append(VertexSet(T.n, mask))
        assigned |= mask
    return TransitiveComponentPartition(tuple(blocks))


def _transitive_order(T: Tournament, mask: int) -> list[int]:
    """Members of a transitive set, source first (descending inner out-degree)."""
    members = [v for v in range(T.n) if mask >> v & 1]
    members.sort(key=lambda v: -(T.out_masks[v] & mask).bit_count())
    return members


def component_comodule(T: Tournament, C, k: int) -> CoModule:
    """The k-th minimal co-module along a transitive component.

    With the component's vertices written v_0 -> v_1 -> ... in transitive
    order, {v_k, v_{k+1}} is a twin of T, and exactly one of that twin and
    its two singletons is a minimal co-module; that element is returned.
    """
    if T.n < 3:
        raise ValueError("needs a tournament with at least three vertices")
    mask = _as_mask(T, C)
    parts = transitive_components(T)
    if all(b.mask != mask for b in parts.blocks):
        raise ValueError("argument is not a transitive component of the tournament")
    size = mask.bit_count()
    if size < 2:
        raise ValueError("component must have at least two vertices")
    if not 0 <= k <= size - 2:
        raise ValueError(f"index k must lie in 0..{size - 2}, got {k}")
    order = _transitive_order(T, mask)
    twin = (1 << order[k]) | (1 << order[k + 1])
    hits = [c for c in minimal_comodules(T) if c.members.mask & ~twin == 0]
    assert len(hits) == 1, "a twin must contain exactly one minimal co-module"
    return hits[0]
