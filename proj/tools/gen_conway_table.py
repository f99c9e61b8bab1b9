#!/usr/bin/env python3
# Copyright 2026 The agq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Computes Conway polynomials by brute force and prints the C++ table.

Usage: gen_conway_table.py [max_field_size]

A Conway polynomial C(p,n) is the least monic primitive polynomial of
degree n over GF(p), under the ordering on (a_{n-1}, ..., a_0) where
C = x^n + sum_i (-1)^(n-i) a_i x^i, that is compatible with C(p,d) for
every proper divisor d of n. Only fields of the form p^(2m) are emitted.
"""
import sys
from functools import lru_cache


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def polmulmod(a, b, mod, p):
    # Polynomials are coefficient lists, low degree first; mod is monic.
    n = len(mod) - 1
    res = [0] * (2 * n)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for i in range(len(res) - 1, n - 1, -1):
        c = res[i]
        if c:
            for j in range(n + 1):
                res[i - n + j] = (res[i - n + j] - c * mod[j]) % p
    return res[:n]


def polpowmod(base, e, mod, p):
    n = len(mod) - 1
    result = [1] + [0] * (n - 1)
    b = (base + [0] * n)[:n]
    while e:
        if e & 1:
            result = polmulmod(result, b, mod, p)
        b = polmulmod(b, b, mod, p)
        e >>= 1
    return result


def is_primitive(mod, p):
    n = len(mod) - 1
    order = p ** n - 1
    x = [0, 1] + [0] * (n - 2) if n > 1 else [0]
    one = [1] + [0] * (n - 1)
    if n == 1:
        # x mod (x + c) = -c
        g = (-mod[0]) % p
        if g == 0:
            return False
        return all(pow(g, order // r, p) != 1 for r in prime_factors(order)) and pow(g, order, p) == 1
    if polpowmod(x, order, mod, p) != one:
        return False
    return all(polpowmod(x, order // r, mod, p) != one for r in prime_factors(order))


def candidates(p, n):
    # Enumerate (a_{n-1}, ..., a_0) lexicographically.
    total = p ** n
    for idx in range(total):
        digits = []
        v = idx
        for _ in range(n):
            digits.append(v % p)
            v //= p
        a = list(reversed(digits))  # a[0] = a_{n-1}
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for k, ai in enumerate(a):
            i = n - 1 - k
            sign = -1 if (n - i) % 2 else 1
            coeffs[i] = (sign * ai) % p
        yield coeffs


def eval_poly_at(poly_coeffs, elem, mod, p):
    # Horner evaluation of a GF(p)[x] polynomial at an element of GF(p)[x]/mod.
    n = len(mod) - 1
    acc = [0] * n
    for c in reversed(poly_coeffs):
        acc = polmulmod(acc, elem, mod, p)
        acc[0] = (acc[0] + c) % p
    return acc


@lru_cache(maxsize=None)
def conway(p, n):
    divisors = [d for d in range(1, n) if n % d == 0]
    for cand in candidates(p, n):
        if cand[0] == 0:
            continue
        if not is_primitive(cand, p):
            continue
        ok = True
        if n > 1:
            x = [0, 1] + [0] * (n - 2)
            for d in divisors:
                sub = list(conway(p, d))
                e = (p ** n - 1) // (p ** d - 1)
                xe = polpowmod(x, e, cand, p)
                if any(eval_poly_at(sub, xe, cand, p)):
                    ok = False
                    break
        if ok:
            return tuple(cand)
    raise RuntimeError(f"no Conway polynomial for {p}^{n}")


def main():
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 1 << 16
    rows = []
    for p in range(2, limit):
        if not is_prime(p) or p * p > limit:
            continue
        m = 1
        while p ** (2 * m) <= limit:
            rows.append((p, 2 * m, conway(p, 2 * m)))
            m += 1
    for p, n, c in rows:
        body = ", ".join(str(x) for x in c)
        print(f"    {{{p}, {n}, {{{body}}}}},")


if __name__ == "__main__":
    main()
