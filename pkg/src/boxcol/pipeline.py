"""End-to-end constructions: certificate -> systems -> verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .circular_rep import CircularSystem, build_circular_systems, verify_circular_representation
from .coloring import ColoringCertificate, make_certificate
from .graph import Graph, SplitMix64
from .interval_rep import IntervalSystem, Verification, build_interval_systems, verify_representation
from .ordering import LinearOrder, ReachMode, coloring_number_under_order

MODES = {"interval": ReachMode.WEAK, "circular": ReachMode.STRONG}


@dataclass(frozen=True)
class Representation:
    graph: Graph
    mode: str
    certificate: ColoringCertificate
    systems: tuple[Union[IntervalSystem, CircularSystem], ...]
    verification: Verification

    @property
    def verified(self) -> bool:
        return self.verification.ok

    def bounds(self) -> dict[str, int]:
        """Upper bounds certified by this run.

        ``wcol2_upper``/``col2_upper`` are the coloring numbers under the
        certificate order; ``wcolstar2_upper`` is the number of colors of a
        weak certificate; ``2c``/``3c`` count the emitted systems.
        """
        order = self.certificate.order
        out = {
            "wcol2_upper": coloring_number_under_order(self.graph, order, ReachMode.WEAK, 2),
            "col2_upper": coloring_number_under_order(self.graph, order, ReachMode.STRONG, 2),
        }
        if self.mode == "interval":
            out["wcolstar2_upper"] = self.certificate.c
            out["2c"] = len(self.systems)
        else:
            out["3c"] = len(self.systems)
        return out


def random_order(n: int, seed: int) -> LinearOrder:
    """Fisher-Yates shuffle of ``0..n-1`` driven by :class:`SplitMix64`."""
    rng = SplitMix64(seed)
    seq = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        seq[i], seq[j] = seq[j], seq[i]
    return LinearOrder.from_sequence(seq)


def represent(g: Graph, mode: str = "interval", order: LinearOrder | None = None) -> Representation:
    """Build and verify a 2c interval or 3c circular-arc representation."""
    try:
        reach = MODES[mode]
    except KeyError:
        raise ValueError(f"mode must be 'interval' or 'circular', got {mode!r}") from None
    cert = make_certificate(g, reach, order)
    if mode == "interval":
        systems = build_interval_systems(g, cert)
        check = verify_representation(g, systems)
    else:
        systems = build_circular_systems(g, cert)
        check = verify_circular_representation(g, systems)
    return Representation(g, mode, cert, tuple(systems), check)
