# Placeholder for unit_tests/congruence
