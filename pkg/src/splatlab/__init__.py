"""Desk-scale differentiable Gaussian-splatting surface reconstruction lab."""

__version__ = "0.1.0"
