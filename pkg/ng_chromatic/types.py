"""Type definitions shared across the ng_chromatic modules."""

from typing import Dict, Optional, Protocol, Tuple

# A vertex pair (u, v)
Edge = Tuple[int, int]

# Vertex -> color (1-based) or vertex -> label (0-based)
Assignment = Dict[int, int]


class SweepProgress(Protocol):
    """Protocol for sweep progress callbacks."""

    def __call__(self, completed: int, total: Optional[int]) -> None:
        """Called after each finished chunk with the running graph count."""
        ...
