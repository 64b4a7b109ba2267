"""Graph classes represented by finite binary languages."""

__version__ = "0.1.0"
