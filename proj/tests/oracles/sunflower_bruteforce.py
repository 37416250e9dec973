#!/usr/bin/env python3
"""Brute-force count of ordered k-petal sunflowers in a family.

Counts ordered k-tuples of pairwise-distinct sets whose pairwise
intersections all equal the common intersection. Written against the
literal definition with plain Python sets.
"""
import itertools
import sys


def is_sunflower(sets):
    kernel = set.intersection(*sets)
    return all(a & b == kernel for a, b in itertools.combinations(sets, 2))


def count(family, k, distinct_only=True):
    total = 0
    for tup in itertools.product(range(len(family)), repeat=k):
        if distinct_only and len(set(tup)) != k:
            continue
        if is_sunflower([family[i] for i in tup]):
            total += 1
    return total


def main():
    m = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    w = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    k = int(sys.argv[3]) if len(sys.argv) > 3 else 3
    family = [set(c) for c in itertools.combinations(range(m), w)]
    print(f"distinct {count(family, k, True)}")
    print(f"literal {count(family, k, False)}")


if __name__ == "__main__":
    main()
