# Placeholder for unit_tests/meyer
