"""Command-line interface for the game decomposition toolkit."""
