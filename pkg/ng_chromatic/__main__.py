"""Main entry point for the package."""

from ng_chromatic.cli import app

if __name__ == "__main__":
    app()
