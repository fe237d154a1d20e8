"""plotkit: paper-style figures from spraysim CSV telemetry."""

__version__ = "0.1.0"
