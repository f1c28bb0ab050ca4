"""Disjoint sets with union by rank and path compression."""


__all__ = ["UnionFind"]


class UnionFind(object):
    """A partition of hashable items, refined by L{union}.

    @param items: The initial singletons.
    """

    def __init__(self, items=()):
        self.parent = {}
        self.rank = {}
        for item in items:
            self.add(item)

    def add(self, item):
        if item not in self.parent:
            self.parent[item] = item
            self.rank[item] = 0

    def find(self, item):
        """Return the root of the set holding C{item}, adding it if new."""
        self.add(item)
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, first, second):
        first, second = self.find(first), self.find(second)
        if first == second:
            return
        if self.rank[first] < self.rank[second]:
            first, second = second, first
        self.parent[second] = first
        if self.rank[first] == self.rank[second]:
            self.rank[first] += 1

    def classes(self, key=None):
        """Return the sets as sorted lists, ordered by their least member.

        @param key: The sort key for members, as for L{sorted}.
        """
        groups = {}
        for item in self.parent:
            groups.setdefault(self.find(item), []).append(item)
        members = [sorted(group, key=key) for group in groups.values()]
        first = (lambda group: group[0]) if key is None else (
            lambda group: key(group[0]))
        return sorted(members, key=first)

    def __len__(self):
        return sum(1 for item in self.parent if self.parent[item] == item)

    def __contains__(self, item):
        return item in self.parent
