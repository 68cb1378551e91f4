from .builtins import BUILTINS, build, lookup, presentation_text
from .presentation import (Comm, Gen, Power, PresentationAst, PresentationError, Product,
                           format_presentation, format_word, parse_presentation)
from .realize import UnsupportedPresentation, evaluate, realize
