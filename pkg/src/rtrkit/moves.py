"""
Presentation moves shared by Montesinos links and Seifert invariants.

Each function works on either dataclass (an ``e`` field plus one tuple of
``Frac``) and returns a new presentation of the same object.
"""
from __future__ import annotations

import dataclasses
import random

from .arith import INFINITY, Frac

__all__ = ["e_shift", "insert_trivial", "remove_trivial", "rotate", "reverse", "random_moves"]


def _parts(obj):
    name = dataclasses.fields(obj)[1].name
    return name, getattr(obj, name)


def e_shift(obj, index: int, sign: int):
    """``(e; ..., p/q, ...) -> (e + sign; ..., p/(q - sign*p), ...)``."""
    name, items = _parts(obj)
    f = items[index]
    new = Frac(f.num, f.den - sign * f.num)
    items = items[:index] + (new,) + items[index + 1:]
    return dataclasses.replace(obj, e=obj.e + sign, **{name: items})


def insert_trivial(obj, index: int):
    name, items = _parts(obj)
    return dataclasses.replace(obj, **{name: items[:index] + (INFINITY,) + items[index:]})


def remove_trivial(obj, index: int):
    name, items = _parts(obj)
    if items[index] != INFINITY:
        raise ValueError("only 1/0 parameters can be removed")
    return dataclasses.replace(obj, **{name: items[:index] + items[index + 1:]})


def rotate(obj, k: int = 1):
    name, items = _parts(obj)
    if not items:
        return obj
    k %= len(items)
    return dataclasses.replace(obj, **{name: items[k:] + items[:k]})


def reverse(obj):
    name, items = _parts(obj)
    return dataclasses.replace(obj, **{name: items[::-1]})


def random_moves(obj, rng: random.Random, length: int):
    """Apply ``length`` uniformly chosen moves; used to build equivalent presentations."""
    for _ in range(length):
        _, items = _parts(obj)
        kind = rng.randrange(5)
        if kind == 0 and items:
            obj = e_shift(obj, rng.randrange(len(items)), rng.choice((1, -1)))
        elif kind == 1:
            obj = insert_trivial(obj, rng.randrange(len(items) + 1))
        elif kind == 2:
            trivial = [i for i, f in enumerate(items) if f == INFINITY]
            if trivial:
                obj = remove_trivial(obj, rng.choice(trivial))
        elif kind == 3:
            obj = rotate(obj, rng.randrange(max(len(items), 1)))
        else:
            obj = reverse(obj)
    return obj
