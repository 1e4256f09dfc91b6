import sys

from hedonic_games.cli import main

sys.exit(main())
