class ResourceError(RuntimeError):
    """A configured size cap was exceeded; the instance is skipped, not failed."""
