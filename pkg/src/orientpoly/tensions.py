"""Tensions: recognition, construction from a forest, counting and lifting.

All counting runs over boxes of forest values: a tension is determined by
its values on the BFS spanning forest, so enumerating the forest box and
expanding through the fundamental bonds visits each tension once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import ContractViolation, GuardExceeded
from .graph_core import MultiGraph, _forest, rank_profile, subset_rank
from .orientations import (
    Orientation,
    apply_P,
    apply_Q,
    check_orientation,
    equivalence_class,
    induced_orientation,
    is_acyclic,
)

#: refuse box enumerations with more points than this unless forced
BOX_GUARD = 10**8
_CHUNK = 1 << 16


@dataclass(frozen=True, order=True)
class TensionVector:
    values: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if self.modulus is not None:
            if self.modulus < 1:
                raise ContractViolation("modulus must be positive")
            vals = tuple(v % self.modulus for v in vals)
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, e):
        return self.values[e]

    def __iter__(self):
        return iter(self.values)

    def reduce(self, q: int) -> TensionVector:
        return TensionVector(self.values, q)

    def __str__(self):
        body = " ".join(map(str, self.values))
        return body if self.modulus is None else f"{body} mod {self.modulus}"

    @classmethod
    def parse(cls, text: str) -> TensionVector:
        text = text.strip()
        modulus = None
        if " mod " in f" {text} ":
            text, _, mod = text.rpartition("mod")
            modulus = int(mod)
        vals = [int(tok) for tok in text.replace(",", " ").split()]
        return cls(tuple(vals), modulus)

    def to_json(self) -> dict:
        out: dict = {"values": list(self.values)}
        if self.modulus is not None:
            out["modulus"] = self.modulus
        return out


class BoxCountMode(enum.Enum):
    NOWHERE_ZERO_OPEN = "nowhere_zero_open"  # 0 < |f| < q
    POSITIVE_OPEN = "positive_open"  # 0 < f < q
    NONNEG_CLOSED = "nonneg_closed"  # 0 <= f <= q


def _values(f) -> tuple[int, ...]:
    return f.values if isinstance(f, TensionVector) else tuple(int(v) for v in f)


def forest_expansion(g: MultiGraph, eps: Orientation | None = None) -> np.ndarray:
    """``m x r`` integer matrix sending forest values to the full tension of ``(g, eps)``.

    Column ``j`` is the coupling ``[eps, eps_e]`` for the ``j``-th forest edge
    ``e``, where ``eps_e`` directs the fundamental bond of ``e`` to agree with
    ``eps`` on ``e``.
    """
    fd = _forest(g)
    signs = np.ones(g.m, dtype=np.int64) if eps is None else np.array(eps.signs, dtype=np.int64)
    B = fd.bond_matrix().T.copy() if fd.forest else np.zeros((g.m, 0), dtype=np.int64)
    if fd.forest:
        B *= signs[:, None]
        B *= signs[np.array(fd.forest)][None, :]
    return B


def is_tension(g: MultiGraph, eps: Orientation, f, modulus: int | None = None) -> bool:
    """Every fundamental circuit sum vanishes (over Z, or mod ``modulus``)."""
    if isinstance(f, TensionVector) and modulus is None:
        modulus = f.modulus
    vals = _values(f)
    if len(vals) != g.m:
        raise ContractViolation(f"edge function has {len(vals)} values for {g.m} edges")
    check_orientation(g, eps)
    for circ in _forest(g).circuits.values():
        total = sum(s * eps[x] * vals[x] for x, s in circ.items())
        if (total % modulus if modulus else total) != 0:
            return False
    return True


def tension_from_forest(g: MultiGraph, eps: Orientation, forest_values: Mapping[int, int]) -> TensionVector:
    """Unique tension with the given values on the spanning forest."""
    fd = _forest(g)
    if set(forest_values) != set(fd.forest):
        raise ContractViolation(f"forest values must be keyed by exactly the forest edges {sorted(fd.forest)}")
    check_orientation(g, eps)
    x = np.array([int(forest_values[e]) for e in fd.forest], dtype=object)
    M = forest_expansion(g, eps).astype(object)
    vals = M @ x if fd.forest else np.zeros(g.m, dtype=object)
    return TensionVector(tuple(int(v) for v in vals))


def tension_group_size(g: MultiGraph, q: int, X: Iterable[int] = ()) -> int:
    """Number of ``Z_q`` tensions vanishing on ``X``."""
    if q < 1:
        raise ContractViolation("q must be a positive integer")
    return q ** (rank_profile(g).rank - subset_rank(g, X))


def _box_size(levels: int, r: int) -> int:
    return levels ** r


def _check_box(levels: int, r: int, force: bool) -> None:
    if _box_size(levels, r) > BOX_GUARD and not force:
        raise GuardExceeded(f"box of {levels}^{r} forest assignments exceeds the guard of {BOX_GUARD}")


def box_chunks(values: Sequence[int], r: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """All points of ``values^r`` as int64 arrays of shape ``(k, r)``, lexicographic."""
    vals = np.asarray(values, dtype=np.int64)
    L = len(vals)
    total = L ** r
    if total == 0:
        return
    if r == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.unravel_index(idx, (L,) * r)
        yield np.stack([vals[d] for d in digits], axis=1)


def box_tensions(g: MultiGraph, eps: Orientation | None, values: Sequence[int], force: bool = False) -> Iterator[np.ndarray]:
    """Full edge-value arrays of the tensions whose forest values range over ``values``."""
    M = forest_expansion(g, eps)
    r = M.shape[1]
    _check_box(len(values), r, force)
    for pts in box_chunks(values, r):
        yield pts @ M.T


def count_modular_nowhere_zero(g: MultiGraph, q: int, eps: Orientation | None = None, force: bool = False) -> int:
    """Nowhere-zero ``Z_q`` tensions of ``(g, eps)`` (reference orientation by default)."""
    g.require_loopless("count_modular_nowhere_zero")
    if q < 1:
        raise ContractViolation("q must be a positive integer")
    total = 0
    for vals in box_tensions(g, eps, range(q), force):
        total += int(np.count_nonzero(np.all(vals % q != 0, axis=1)))
    return total


def count_integral_nowhere_zero(g: MultiGraph, q: int, eps: Orientation | None = None, force: bool = False) -> int:
    """Integral tensions with ``0 < |f(x)| < q`` on every edge."""
    g.require_loopless("count_integral_nowhere_zero")
    if q < 1:
        raise ContractViolation("q must be a positive integer")
    # forest edges must already be nonzero
    vals_range = [v for v in range(-(q - 1), q) if v != 0]
    total = 0
    for vals in box_tensions(g, eps, vals_range, force):
        a = np.abs(vals)
        total += int(np.count_nonzero(np.all((a > 0) & (a < q), axis=1)))
    return total


def count_box_tensions(g: MultiGraph, eps: Orientation, q: int, mode: BoxCountMode | str, force: bool = False) -> int:
    """Lattice points of the dilated open/closed tension polytope of ``(g, eps)``."""
    mode = BoxCountMode(mode)
    g.require_loopless("count_box_tensions")
    check_orientation(g, eps)
    if mode is BoxCountMode.NOWHERE_ZERO_OPEN:
        return count_integral_nowhere_zero(g, q, eps, force)
    if mode is BoxCountMode.POSITIVE_OPEN:
        if q < 1:
            raise ContractViolation("q must be a positive integer")
        if not is_acyclic(g, eps):
            return 0
        lo, hi = 1, q - 1
    else:
        if q < 0:
            raise ContractViolation("q must be nonnegative")
        lo, hi = 0, q
    total = 0
    for vals in box_tensions(g, eps, range(lo, hi + 1), force):
        total += int(np.count_nonzero(np.all((vals >= lo) & (vals <= hi), axis=1)))
    return total


def zero_one_tensions(g: MultiGraph, eps: Orientation) -> list[tuple[int, ...]]:
    """All tensions of ``(g, eps)`` with values in ``{0, 1}``."""
    out = []
    for vals in box_tensions(g, eps, (0, 1)):
        ok = np.all((vals == 0) | (vals == 1), axis=1)
        out.extend(tuple(int(v) for v in row) for row in vals[ok])
    return out


def lift_modular_tension(g: MultiGraph, eps: Orientation, ftilde) -> TensionVector:
    """Integral ``q``-tension reducing to the given ``Z_q`` tension.

    A potential ``a: V -> {0..q-1}`` is built along BFS shortest paths from
    each component root (``a(root) = 0``) by adding the path-signed residues
    mod ``q``; the lift is ``f(x) = a(head) - a(tail)`` for the arrow of
    ``eps``.  Its values lie strictly between ``-q`` and ``q``, and an edge
    is zero only when its residue is.
    """
    if not isinstance(ftilde, TensionVector) or ftilde.modulus is None:
        raise ContractViolation("lift needs a TensionVector with a modulus attached")
    q = ftilde.modulus
    check_orientation(g, eps)
    if not is_tension(g, eps, ftilde):
        raise ContractViolation(f"values are not a tension mod {q}")
    fd = _forest(g)
    arcs = eps.arcs(g)
    pot = [0] * g.n
    # parents precede children in depth order
    for v in sorted(range(g.n), key=lambda v: fd.depth[v]):
        e = fd.parent_edge[v]
        if e is None:
            continue
        t, h = arcs[e]
        w = t if h == v else h
        # walking w -> v along e adds the residue when the arrow agrees with the walk
        pot[v] = (pot[w] + (ftilde[e] if t == w else -ftilde[e])) % q
    return TensionVector(tuple(pot[h] - pot[t] for t, h in arcs))


def _check_integral_q_tension(g, eps, f, q, nowhere_zero=True):
    vals = _values(f)
    if len(vals) != g.m:
        raise ContractViolation("edge function has the wrong length")
    if any(abs(v) >= q for v in vals):
        raise ContractViolation(f"values must satisfy |f| < {q}")
    if nowhere_zero and any(v == 0 for v in vals):
        raise ContractViolation("tension must be nowhere-zero")
    if not is_tension(g, eps, vals):
        raise ContractViolation("values are not an integral tension")
    return vals


def modq_fiber(g: MultiGraph, eps: Orientation, f, q: int) -> frozenset[TensionVector]:
    """Integral ``q``-tensions congruent to ``f`` mod ``q``.

    Generated as ``P[eps,alpha] Q[alpha,rho] P[rho,eps] f`` over the class of
    ``rho = eps_f``; each class member gives a distinct fiber element.
    """
    g.require_loopless("modq_fiber")
    check_orientation(g, eps)
    vals = _check_integral_q_tension(g, eps, f, q)
    rho = induced_orientation(eps, vals)
    positive = apply_P(rho, eps, vals)
    out = set()
    for alpha in equivalence_class(g, rho):
        out.add(TensionVector(apply_P(eps, alpha, apply_Q(alpha, rho, positive, q))))
    return frozenset(out)
