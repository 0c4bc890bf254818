# Placeholder for unit_tests/bundle
