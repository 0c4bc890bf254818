# Placeholder for unit_tests/cli
