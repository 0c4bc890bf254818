# Placeholder for unit_tests/core
