"""triop test suite."""
