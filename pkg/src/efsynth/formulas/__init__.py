"""Formula representations: core first-order ASTs and macro templates."""
from .ast import *  # noqa: F401,F403
from .ast import __all__ as _ast_all
from .builders import *  # noqa: F401,F403
from .builders import __all__ as _builders_all
from .macros import clog2, expand, expanded_size, qr_macro
from .text import STYLES, deserialize, render, serialize

__all__ = [
    *_ast_all, *_builders_all,
    "clog2", "expand", "expanded_size", "qr_macro",
    "STYLES", "deserialize", "render", "serialize",
]
