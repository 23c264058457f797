"""The resolved (t, k, K) targets and the procedure answering each."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .dx import dx_order
from .graph import BipartiteTournament, Completion, Signature, ordered_completion
from .quad import SpecMode, no_aug
from .tri import one_aug_21, one_aug_3


def acyclic_completion(d: BipartiteTournament) -> Optional[Completion]:
    """Completion with no augmented 3-dicycle: every same-side pair forward along the D_X order."""
    order = dx_order(d)
    if order is None:
        return None
    return ordered_completion(d, {v: i for i, v in enumerate(order)})


@dataclass(frozen=True)
class Case:
    name: str
    t: int
    k: int
    sigs: frozenset[Signature]
    construct: Callable[[BipartiteTournament], Optional[Completion]]
    summary: str

    def decide(self, d: BipartiteTournament) -> bool:
        return self.construct(d) is not None


def _sigs(*pairs: tuple[int, int]) -> frozenset[Signature]:
    return frozenset(Signature(*p) for p in pairs)


CASES: dict[str, Case] = {
    c.name: c
    for c in (
        Case("one21", 1, 3, _sigs((2, 1)), one_aug_21, "exactly one augmented (2,1)-dicycle"),
        Case("one3", 1, 3, _sigs((3, 0), (2, 1)), one_aug_3, "exactly one augmented 3-dicycle"),
        Case("no22", 0, 4, _sigs((2, 2)), lambda d: no_aug(d, SpecMode.D_ONLY), "no augmented (2,2)-dicycle"),
        Case("no31", 0, 4, _sigs((3, 1)), lambda d: no_aug(d, SpecMode.C_ONLY), "no augmented (3,1)-dicycle"),
        Case(
            "no31-22", 0, 4, _sigs((3, 1), (2, 2)), lambda d: no_aug(d, SpecMode.BOTH),
            "no augmented (3,1)- or (2,2)-dicycle",
        ),
        Case("zero21", 0, 3, _sigs((2, 1)), acyclic_completion, "no augmented (2,1)-dicycle"),
        Case("zero3", 0, 3, _sigs((3, 0), (2, 1)), acyclic_completion, "no augmented 3-dicycle"),
    )
}
