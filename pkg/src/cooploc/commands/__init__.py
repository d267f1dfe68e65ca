"""Command objects behind the command-line interface."""
