import sys

from sigcocycles.cli.main import run

sys.exit(run(sys.argv[1:]))
