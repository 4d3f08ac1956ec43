"""
Plucker - Helper Utilities
Common utility functions used throughout the application
"""
import re
import time

import click

from config import Config

_verbose = Config.VERBOSE


def set_verbose(enabled):
    """Turn progress logging on or off for this process"""
    global _verbose
    _verbose = bool(enabled)


def log(message):
    """Write a progress line to stderr when verbose mode is on"""
    if _verbose:
        click.echo(message, err=True)


def start_timer():
    """Return an opaque start mark for elapsed_ms"""
    return time.perf_counter()


def elapsed_ms(start):
    """Milliseconds elapsed since start_timer(), rounded to 0.1 ms"""
    return round((time.perf_counter() - start) * 1000, 1)


def format_bool(value):
    """Render a verdict as lowercase true/false"""
    return 'true' if value else 'false'


def format_delays(delays):
    """
    Render a delay sequence as a descriptor

    Compact digits when every value is a single digit ("32123"),
    space separated otherwise ("1 12 1").
    """
    if all(1 <= d <= 9 for d in delays):
        return ''.join(str(d) for d in delays)
    return ' '.join(str(d) for d in delays)


def parse_int_list(text, name='list'):
    """
    Parse a comma or whitespace separated list of integers

    Args:
        text: Input such as "1,2,4"
        name: Label used in the error message

    Returns:
        list of ints

    Raises:
        ValueError on empty or malformed input
    """
    tokens = [t for t in re.split(r'[\s,]+', text.strip()) if t]
    if not tokens:
        raise ValueError(f"{name} is empty")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"{name} must contain integers only: {text!r}") from None
