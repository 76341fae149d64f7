"""Run-length BWT index with matching statistics queries."""

try:
    from ._augms import Index, build, build_from_file, load
except ImportError:  # extension built outside the package (development tree)
    from _augms import Index, build, build_from_file, load

__all__ = ["Index", "build", "build_from_file", "load"]
