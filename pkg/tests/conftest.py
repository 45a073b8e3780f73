"""Shared test helpers: an independent word-rewriting oracle and generators."""

from __future__ import annotations

import random

import pytest

from qdisc import NCPoly, QScalar

Q2 = QScalar.q_power(2)
ONE_MINUS_Q2 = QScalar.from_int(1) - Q2


def naive_normal_order(word: tuple, coeff: QScalar) -> dict:
    """Normal-order a word of 'z'/'zs' letters by brute-force rewriting.

    Repeatedly replaces the leftmost adjacent ('zs', 'z') pair using
    zs z -> q^2 z zs + (1 - q^2) until every word is sorted.  Deliberately
    knows nothing about the production rewriter: this is the oracle.
    """
    result: dict = {}
    work = [(word, coeff)]
    while work:
        w, c = work.pop()
        for i in range(len(w) - 1):
            if w[i] == "zs" and w[i + 1] == "z":
                swapped = w[:i] + ("z", "zs") + w[i + 2 :]
                dropped = w[:i] + w[i + 2 :]
                work.append((swapped, c * Q2))
                work.append((dropped, c * ONE_MINUS_Q2))
                break
        else:
            key = (w.count("z"), w.count("zs"))
            prev = result.get(key)
            v = c if prev is None else prev + c
            if v.is_zero():
                result.pop(key, None)
            else:
                result[key] = v
    return result


def naive_monomial_product(a: int, b: int, c: int, d: int) -> NCPoly:
    """z^a zs^b * z^c zs^d via the brute-force rewriter."""
    word = ("z",) * a + ("zs",) * b + ("z",) * c + ("zs",) * d
    return NCPoly(naive_normal_order(word, QScalar.from_int(1)))


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture
def rand_ncpoly():
    def make(rng: random.Random, max_exp: int = 3, nterms: int = 3) -> NCPoly:
        out = NCPoly.zero()
        for _ in range(rng.randint(1, nterms)):
            j, k = rng.randint(0, max_exp), rng.randint(0, max_exp)
            c = QScalar.from_int(rng.randint(-3, 3)) * QScalar.q_power(rng.randint(0, 2))
            out = out + NCPoly.monomial(j, k, c)
        return out

    return make
