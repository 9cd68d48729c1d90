"""State: module-level caches shared by the algebra packages."""
