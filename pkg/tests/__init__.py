"""orientedcut test suite."""
