"""Shared exception types."""


class FragmapError(Exception):
    """Base class for all package errors."""


class FormatError(FragmapError):
    """A file or in-memory artifact violates its format or invariants."""


class IncoherentArtifacts(FragmapError):
    """Loaded artifacts (lattice / grouping / model / graphs) disagree."""
