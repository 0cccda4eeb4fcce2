from weightedhodge.cli import entry_point

entry_point()
