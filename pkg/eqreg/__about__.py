try:
    # Python 3.8
    from importlib import metadata
except ImportError:
    import importlib_metadata as metadata

try:
    __version__ = metadata.version("eqreg")
except Exception:
    __version__ = "unknown"

# keep in sync with setup.cfg
__license__ = "GPL-3.0-or-later"
