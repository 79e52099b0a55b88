"""
Automorphisms, orbits and definability with parameters on finite structures.

Over a finite structure a set is first-order definable with parameters p iff it is
invariant under every automorphism fixing p; every orbit of that group is defined by
the complete description of its elements.  This is the criterion used here.
"""
import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from scripts.satisfaction import FiniteStructure, StructureError
from scripts.utils import log_decorator

logger = logging.getLogger(__name__)

SIZE_LIMIT = 10


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Automorphism:
    permutation: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.permutation[a]

    def inverse(self) -> "Automorphism":
        out = [0] * len(self.permutation)
        for a, b in enumerate(self.permutation):
            out[b] = a
        return Automorphism(tuple(out))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        return Automorphism(tuple(self.permutation[b] for b in other.permutation))

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.permutation))

    def as_array(self) -> np.ndarray:
        return np.array(self.permutation, dtype=np.intp)


@dataclass(frozen=True)
class DisagreementWitness:
    pi: Automorphism
    s: int
    t: int
    fixed_params: Tuple[int, ...]

    def to_record(self) -> Dict[str, Any]:
        return {"pi": list(self.pi.permutation), "s": self.s, "t": self.t,
                "fixed_params": list(self.fixed_params)}


def _check_size(S: FiniteStructure, limit: int) -> None:
    if S.size > limit:
        raise SizeLimitError(f"structure of size {S.size} exceeds the search limit {limit}")


def _check_subset(S: FiniteStructure, X: Iterable[int]) -> FrozenSet[int]:
    X = frozenset(int(a) for a in X)
    if any(not 0 <= a < S.size for a in X):
        raise StructureError(f"subset {sorted(X)} is not within the domain of size {S.size}")
    return X


# verification independent of the searches

def is_isomorphism(A: FiniteStructure, B: FiniteStructure, mapping: Sequence[int]) -> bool:
    """mapping[a] is the image of a; checks bijectivity and two-way preservation. Structures must share a signature."""
    _same_signature(A, B)
    m = np.asarray(mapping, dtype=np.intp)
    if A.size != B.size or m.shape != (A.size,) or sorted(m.tolist()) != list(range(B.size)):
        return False
    for name, value in A.constants.items():
        if B.constants.get(name) != m[value]:
            return False
    for name, table in A.functions.items():
        image = B.functions[name][np.ix_(*[m] * table.ndim)]
        if not np.array_equal(image, m[table]):
            return False
    for name, table in A.relations.items():
        if not np.array_equal(B.relations[name][np.ix_(*[m] * table.ndim)], table):
            return False
    return True


def is_automorphism(S: FiniteStructure, permutation: Sequence[int]) -> bool:
    return is_isomorphism(S, S, permutation)


# invariant-based pruning

def element_invariants(S: FiniteStructure) -> List[Tuple]:
    """Per-element data preserved by every isomorphism."""
    invariants: List[list] = [[] for _ in range(S.size)]
    names: Dict[int, List[str]] = {}
    for name, value in S.constants.items():
        names.setdefault(value, []).append(name)
    for a in range(S.size):
        invariants[a].append(tuple(sorted(names.get(a, []))))
    for name in sorted(S.relations):
        table = S.relations[name]
        for axis in range(table.ndim):
            others = tuple(i for i in range(table.ndim) if i != axis)
            counts = table.sum(axis=others) if others else table.astype(int)
            for a in range(S.size):
                invariants[a].append((name, axis, int(counts[a])))
        diagonal = [bool(table[(a,) * table.ndim]) for a in range(S.size)]
        for a in range(S.size):
            invariants[a].append((name, "diag", diagonal[a]))
    for name in sorted(S.functions):
        table = S.functions[name]
        for a in range(S.size):
            invariants[a].append((name, "fixed", int(table[(a,) * table.ndim]) == a))
        preimages = np.bincount(table.ravel(), minlength=S.size)
        for a in range(S.size):
            invariants[a].append((name, "preimages", int(preimages[a])))
    return [tuple(inv) for inv in invariants]


def _consistent(A: FiniteStructure, B: FiniteStructure, sources: List[int], images: List[int]) -> bool:
    """The partial map sources -> images preserves everything decidable on its domain."""
    src = np.array(sources, dtype=np.intp)
    img = np.array(images, dtype=np.intp)
    for name, table in A.relations.items():
        grid = [src] * table.ndim
        if not np.array_equal(table[np.ix_(*grid)], B.relations[name][np.ix_(*[img] * table.ndim)]):
            return False
    lookup = {a: b for a, b in zip(sources, images)}
    taken = set(images)
    for name, table in A.functions.items():
        values = table[np.ix_(*[src] * table.ndim)]
        mapped = B.functions[name][np.ix_(*[img] * table.ndim)]
        for value, image in zip(values.ravel().tolist(), mapped.ravel().tolist()):
            if value in lookup:
                if lookup[value] != image:
                    return False
            elif image in taken:
                return False
    return True


def _search(A: FiniteStructure, B: FiniteStructure, fixed: Dict[int, int],
            first_only: bool) -> List[Tuple[int, ...]]:
    """All isomorphisms A -> B extending fixed, in lexicographic order, by backtracking."""
    if A.size != B.size:
        return []
    inv_a, inv_b = element_invariants(A), element_invariants(B)
    for name, value in A.constants.items():
        target = B.constants[name]
        if fixed.get(value, target) != target:
            return []
        fixed = {**fixed, value: target}
    if any(inv_a[a] != inv_b[b] for a, b in fixed.items()):
        return []
    if len(set(fixed.values())) != len(fixed):
        return []
    found: List[Tuple[int, ...]] = []
    image = [-1] * A.size
    used = [False] * B.size

    def extend(a: int) -> bool:
        if a == A.size:
            if is_isomorphism(A, B, image):
                found.append(tuple(image))
                return first_only
            return False
        options = [fixed[a]] if a in fixed else range(B.size)
        for b in options:
            if used[b] or inv_a[a] != inv_b[b]:
                continue
            if a not in fixed and b in fixed.values():
                continue
            image[a], used[b] = b, True
            if _consistent(A, B, list(range(a + 1)), image[:a + 1]) and extend(a + 1):
                return True
            image[a], used[b] = -1, False
        return False

    extend(0)
    return found


@log_decorator
def automorphisms(S: FiniteStructure, fixed: Sequence[int] = (), limit: int = SIZE_LIMIT) -> List[Automorphism]:
    """The automorphism group (or the pointwise stabilizer of fixed), in lexicographic order."""
    _check_size(S, limit)
    fixed_map = {int(a): int(a) for a in _check_subset(S, fixed)}
    return [Automorphism(p) for p in _search(S, S, fixed_map, first_only=False)]


@log_decorator
def orbits(S: FiniteStructure, params: Sequence[int] = (), limit: int = SIZE_LIMIT) -> List[Tuple[int, ...]]:
    """Orbit partition under the automorphisms fixing params, each orbit sorted, ordered by least element."""
    group = automorphisms(S, params, limit)
    seen, out = set(), []
    for a in range(S.size):
        if a in seen:
            continue
        orbit = tuple(sorted({pi(a) for pi in group}))
        seen.update(orbit)
        out.append(orbit)
    return out


@log_decorator
def definable_with_params(X: Iterable[int], S: FiniteStructure, params: Sequence[int] = (),
                          limit: int = SIZE_LIMIT) -> bool:
    """X is a union of orbits of the automorphisms fixing params."""
    X = _check_subset(S, X)
    return all(set(orbit) <= X or not set(orbit) & X for orbit in orbits(S, params, limit))


@log_decorator
def disagreement_pair(S: FiniteStructure, X: Iterable[int], params: Sequence[int] = (),
                      limit: int = SIZE_LIMIT) -> Optional[DisagreementWitness]:
    """
    The lexicographically least (s, t) with s in X, t outside X and an automorphism
    fixing params that sends t to s, with the least such automorphism; None when X
    is definable with params.
    """
    X = _check_subset(S, X)
    group = automorphisms(S, params, limit)
    outside = [a for a in range(S.size) if a not in X]
    for s in sorted(X):
        for t in outside:
            for pi in group:
                if pi(t) == s:
                    return DisagreementWitness(pi, s, t, tuple(int(a) for a in params))
    return None


def apply_automorphism(X: Iterable[int], pi: Automorphism) -> FrozenSet[int]:
    """Pointwise image of X."""
    return frozenset(pi(a) for a in X)


def expand_with_predicate(S: FiniteStructure, name: str, X: Iterable[int]) -> FiniteStructure:
    """S expanded by a unary relation interpreted as X."""
    return S.with_relation(name, [(a,) for a in sorted(X)])


def _same_signature(A: FiniteStructure, B: FiniteStructure) -> None:
    if not (A.signature.contains(B.signature) and B.signature.contains(A.signature)):
        raise StructureError("structures have different signatures")


@log_decorator
def back_and_forth(A: FiniteStructure, B: FiniteStructure, limit: int = SIZE_LIMIT) -> Optional[Tuple[int, ...]]:
    """
    An isomorphism A -> B by alternately extending a partial isomorphism forth
    (least unmapped element of A) and back (least unmapped element of B), with
    backtracking; None when there is none.
    """
    _same_signature(A, B)
    _check_size(A, limit)
    _check_size(B, limit)
    if A.size != B.size:
        return None
    inv_a, inv_b = element_invariants(A), element_invariants(B)
    forward: Dict[int, int] = {}
    for name, value in A.constants.items():
        target = B.constants[name]
        if value in forward and forward[value] != target:
            return None
        if value not in forward and target in forward.values():
            return None
        forward[value] = target
    if any(inv_a[a] != inv_b[b] for a, b in forward.items()):
        return None

    def consistent(mapping: Dict[int, int]) -> bool:
        sources = sorted(mapping)
        return _consistent(A, B, sources, [mapping[a] for a in sources])

    if not consistent(forward):
        return None

    def extend(mapping: Dict[int, int], forth: bool) -> Optional[Dict[int, int]]:
        if len(mapping) == A.size:
            return mapping
        images = set(mapping.values())
        if forth:
            a = min(x for x in range(A.size) if x not in mapping)
            pairs = [(a, b) for b in range(B.size) if b not in images and inv_a[a] == inv_b[b]]
        else:
            b = min(y for y in range(B.size) if y not in images)
            pairs = [(a, b) for a in range(A.size) if a not in mapping and inv_a[a] == inv_b[b]]
        for a, b in pairs:
            candidate = {**mapping, a: b}
            if consistent(candidate):
                result = extend(candidate, not forth)
                if result is not None:
                    return result
        return None

    result = extend(forward, True)
    if result is None:
        return None
    mapping = tuple(result[a] for a in range(A.size))
    if not is_isomorphism(A, B, mapping):
        logger.error("back-and-forth produced a map that is not an isomorphism")
        return None
    return mapping


# brute-force oracles

def brute_force_automorphisms(S: FiniteStructure) -> List[Automorphism]:
    return [Automorphism(p) for p in permutations(range(S.size)) if is_automorphism(S, p)]


def brute_force_isomorphic(A: FiniteStructure, B: FiniteStructure) -> bool:
    if A.size != B.size:
        return False
    return any(is_isomorphism(A, B, p) for p in permutations(range(B.size)))


def brute_force_definable(X: Iterable[int], S: FiniteStructure, params: Sequence[int] = ()) -> bool:
    X = frozenset(X)
    fixed = set(params)
    return all(apply_automorphism(X, pi) == X for pi in brute_force_automorphisms(S)
               if all(pi(p) == p for p in fixed))
