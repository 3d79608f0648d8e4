"""Allow ``python -m spinpair`` to behave like the console script."""

from .cli import run

if __name__ == "__main__":
    run()
