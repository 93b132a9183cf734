# CLI Package
# Command-line verbs, input file loaders and report rendering

from .app import COMMANDS, build_parser, configure_logging, main, run
from .loaders import MODELS, load, read_json
from .reports import RENDERERS, render, render_json

__all__ = [
    'COMMANDS',
    'build_parser',
    'configure_logging',
    'main',
    'run',
    'MODELS',
    'load',
    'read_json',
    'RENDERERS',
    'render',
    'render_json',
]
