# Placeholder for unit_tests/maslov
