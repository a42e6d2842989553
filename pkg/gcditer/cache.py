""" Bounded memory for computed gcds, so repeated scans of the same pair do
not redo the polynomial arithmetic.
"""
from collections import OrderedDict

import logging
log = logging.getLogger(__name__)


class InMemoryCacher(object):
    """ Least-recently-used store of computed values
    Args:
        maxentries (int): values kept before the stalest is dropped
    """

    def __init__(self, maxentries=4096):
        self._maxentries = maxentries
        self.hits = 0
        self.misses = 0
        self.empty()

    @property
    def maxentries(self):
        return self._maxentries

    @maxentries.setter
    def maxentries(self, value):
        self._maxentries = value
        while len(self.registry) > value:
            self.expire()

    def __len__(self):
        return len(self.registry)

    def store(self, key, val):
        if key not in self.registry:
            self.registry[key] = val
            if len(self.registry) > self._maxentries:
                self.expire()
        return key

    def get(self, key):
        if key not in self.registry:
            return None
        self.registry.move_to_end(key)
        return self.registry[key]

    def test(self, key):
        return key in self.registry

    def expire(self, key=None):
        """ Drop `key`, or the least recently used entry """
        if key is None:
            if self.registry:
                self.registry.popitem(last=False)
        else:
            self.registry.pop(key, None)

    def empty(self):
        self.registry = OrderedDict()

    def getorcompute(self, key, func):
        """ Return the cached value for `key`, computing and storing
        `func()` on a miss
        """
        if key in self.registry:
            self.hits += 1
            return self.get(key)
        self.misses += 1
        val = func()
        self.store(key, val)
        return val

    def __repr__(self):
        return (f"InMemoryCacher({len(self)}/{self._maxentries} entries, "
                f"{self.hits} hits, {self.misses} misses)")
