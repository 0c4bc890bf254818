# Placeholder for unit_tests/domain
