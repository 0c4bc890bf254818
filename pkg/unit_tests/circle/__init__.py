# Placeholder for unit_tests/circle
