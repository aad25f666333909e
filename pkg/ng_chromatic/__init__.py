"""NG Chromatic - exact Nordhaus-Gaddum checks for distance-two colorings."""

__version__ = "0.1.0"
