"""Compile XES event logs into object-centric event-data knowledge graphs."""

__version__ = "0.1.0"
