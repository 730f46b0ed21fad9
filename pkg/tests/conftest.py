# makes the tests directory importable for cross-test helpers
