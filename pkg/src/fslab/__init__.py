"""Friends-and-strangers graph laboratory."""

__version__ = "0.1.0"
