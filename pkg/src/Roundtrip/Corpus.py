import string
from typing import Iterator

import numpy as np

from ..Syntax.Formulas import Eps, L1Formula, NameVar, Not, Or
from ..Syntax.FormulaPrinter import to_text


def name_pool(count: int) -> list[NameVar]:
    """
    Returns the first count name variables a, b, c, ...

    Args:
        count (int): How many variables (1 to 26).

    Returns:
        list[NameVar]: The variables.
    """
    if not 1 <= count <= len(string.ascii_lowercase):
        raise ValueError(f"The number of name variables must be between 1 and 26, got {count}")
    return [NameVar(c) for c in string.ascii_lowercase[:count]]


def corpus_atoms(count: int) -> list[Eps]:
    """Returns every ε-atom over the first count name variables."""
    names = name_pool(count)
    return [Eps(a, b) for a in names for b in names]


def formulas_by_size(count: int, max_size: int) -> list[list[L1Formula]]:
    """
    Builds every L₁ formula over the first count name variables, grouped by
    AST size. Each group is sorted by its unsugared text.

    Args:
        count (int): The number of name variables.
        max_size (int): The largest AST size.

    Returns:
        list[list[L1Formula]]: Entry n holds the formulas of size n (entry 0 is empty).
    """
    groups: list[list[L1Formula]] = [[] for _ in range(max_size + 1)]
    if max_size >= 1:
        groups[1] = list(corpus_atoms(count))
    for n in range(2, max_size + 1):
        group = [Not(f) for f in groups[n - 1]]
        for left_size in range(1, n - 1):
            right_size = n - 1 - left_size
            group.extend(Or(left, right) for left in groups[left_size] for right in groups[right_size])
        groups[n] = group

    return [sorted(group, key=lambda f: to_text(f, sugar=False)) for group in groups]


def enumerate_formulas(count: int, max_size: int) -> Iterator[L1Formula]:
    """
    Enumerates every L₁ formula over the first count name variables with AST
    size at most max_size, by size and then by text.

    Args:
        count (int): The number of name variables.
        max_size (int): The largest AST size.

    Returns:
        Iterator[L1Formula]: The formulas.
    """
    for group in formulas_by_size(count, max_size):
        yield from group


def _random_formula(rng: np.random.Generator, atoms: list[Eps], size: int) -> L1Formula:
    if size <= 1:
        return atoms[rng.integers(len(atoms))]
    if size == 2 or rng.random() < 0.3:
        return Not(_random_formula(rng, atoms, size - 1))
    left_size = int(rng.integers(1, size - 1))
    return Or(_random_formula(rng, atoms, left_size), _random_formula(rng, atoms, size - 1 - left_size))


def sample_formulas(count: int, max_size: int, samples: int, seed: int) -> Iterator[L1Formula]:
    """
    Draws random L₁ formulas over the first count name variables. The same
    seed always gives the same formulas.

    Args:
        count (int): The number of name variables.
        max_size (int): The largest AST size.
        samples (int): How many formulas to draw.
        seed (int): The random seed.

    Returns:
        Iterator[L1Formula]: The formulas.
    """
    rng = np.random.default_rng(seed)
    atoms = corpus_atoms(count)
    for _ in range(samples):
        size = int(rng.integers(1, max_size + 1))
        yield _random_formula(rng, atoms, size)
