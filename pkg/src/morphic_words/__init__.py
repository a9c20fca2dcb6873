"""morphic-words: morphisms on finite alphabets and non-uniform presentations of automatic sequences."""

from morphic_words.words import Alphabet, Symbol, Word
from morphic_words.morphism import Coding, IncidenceMatrix, Morphism
from morphic_words.fixedpoint import MorphicPresentation

__all__ = [
    "Alphabet",
    "Coding",
    "IncidenceMatrix",
    "MorphicPresentation",
    "Morphism",
    "Symbol",
    "Word",
]
