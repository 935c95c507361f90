"""Hash-consed immutable tree nodes.

Every node class keeps an intern table, so building a node that already
exists returns the existing object.  Structurally equal trees are then
usually identical, and the equality and hashing that dominate the memoised
normaliser and diagram checker are O(1).  Equality still falls back to a
field-wise comparison, so clearing the tables never affects results.
"""

from __future__ import annotations

from operator import attrgetter

_TABLES: list[dict] = []


class Node:
    """Mixin for frozen, slotted dataclasses forming expression trees.

    Subclasses declare a trailing ``_h`` field (``init=False``) and are
    finished with :func:`hashed`.  A subclass with its own ``__post_init__``
    (used for validation) must call ``Node.__post_init__(self)`` last.
    """

    __slots__ = ()
    _keys: tuple[str, ...] = ()

    def __post_init__(self):
        self._fill_hash()


def _no_init(self, *args, **kwargs):
    pass


def hashed(cls):
    keys = tuple(f for f in cls.__dataclass_fields__ if f != "_h")
    nkeys = len(keys)
    cls._keys = keys
    tag = cls.__name__
    setter = object.__setattr__
    make = object.__new__
    table: dict[int, object] = {}  # hash -> node; a collision just evicts
    _TABLES.append(table)
    check = cls.__dict__.get("__post_init__")

    if nkeys == 1:
        key = keys[0]

        def values(self):
            return (getattr(self, key),)
    else:
        values = attrgetter(*keys)

    def fill(self):
        setter(self, "_h", hash((tag, *values(self))))

    def build(args, h, validate):
        self = make(cls)
        for k, v in zip(keys, args):
            setter(self, k, v)
        if validate and check is not None:
            check(self)
        else:
            setter(self, "_h", h)
        table[h] = self
        return self

    def __new__(klass, *args, **kwargs):
        if kwargs or len(args) != nkeys:
            try:
                args = args + tuple(kwargs.pop(k) for k in keys[len(args):])
            except KeyError as exc:
                raise TypeError(f"{tag}() missing argument {exc}") from None
            if kwargs or len(args) != nkeys:
                raise TypeError(f"{tag}() takes {nkeys} arguments")
        h = hash((tag, *args))
        hit = table.get(h)
        if hit is not None and values(hit) == args:
            return hit
        return build(args, h, True)

    if nkeys == 2 and check is None:
        # fast path for the binary nodes the enumerators build by the million
        k0, k1 = keys
        generic_new = __new__

        def __new__(klass, *args, **kwargs):
            if kwargs or len(args) != 2:
                return generic_new(klass, *args, **kwargs)
            a, b = args
            h = hash((tag, a, b))
            hit = table.get(h)
            if hit is not None and getattr(hit, k0) == a and getattr(hit, k1) == b:
                return hit
            self = make(cls)
            setter(self, k0, a)
            setter(self, k1, b)
            setter(self, "_h", h)
            table[h] = self
            return self

    def unchecked(*args):
        h = hash((tag, *args))
        hit = table.get(h)
        if hit is not None and values(hit) == args:
            return hit
        return build(args, h, False)

    def eq(self, other):
        if self is other:
            return True
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self._h == other._h and values(self) == values(other)

    def reduce(self):
        return (cls, values(self))

    cls._fill_hash = fill
    cls._unchecked = staticmethod(unchecked)
    cls.__new__ = __new__
    cls.__init__ = _no_init
    cls.__eq__ = eq
    cls.__hash__ = lambda self: self._h
    cls.__reduce__ = reduce
    return cls


def clear_intern_tables() -> None:
    """Drop every interned node (memory relief between large enumerations)."""
    for t in _TABLES:
        t.clear()
