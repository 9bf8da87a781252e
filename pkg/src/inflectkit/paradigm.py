"""Paradigm completion with the single-form inflection model.

Each missing cell is generated from the lemma alone; forms already present
in the paradigm are copied through and never consulted.
"""

from __future__ import annotations

from typing import Sequence

from .core import Paradigm, flatten
from .inflector import Model, train


def complete(model: Model, paradigm: Paradigm) -> Paradigm:
    cells = tuple(
        (bundle, form if form is not None else model.inflect(paradigm.lemma, bundle))
        for bundle, form in paradigm.cells
    )
    return Paradigm(paradigm.lemma, cells)


def train_from_paradigms(paradigms: Sequence[Paradigm]) -> Model:
    return train(flatten(paradigms))
