"""Exact symmetric-function identities over cylindric tableaux, checked
against enumeration, together with bijections between the objects those
identities count."""

__version__ = "0.1.0"
