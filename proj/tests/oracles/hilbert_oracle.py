"""Hilbert symbols (a, b)_p by brute-force solvability of z^2 = a x^2 + b y^2.

a and b are first reduced to square-free integers, after which a primitive
solution modulo p^3 (odd p) or 2^7 lifts to Q_p. Prints one string of
'+'/'-' per place over the grid a, b in [-N, N] minus 0.
"""
import sys


def squarefree(n):
    sign = -1 if n < 0 else 1
    n = abs(n)
    out, d = 1, 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
        if n % d == 0:
            out *= d
            n //= d
        d += 1
    return sign * out * n


def local_symbol(a, b, p):
    if p == 0:
        return -1 if a < 0 and b < 0 else 1
    a, b = squarefree(a), squarefree(b)
    mod = p ** 3 if p != 2 else 2 ** 7
    squares = {}
    for z in range(mod):
        squares.setdefault(z * z % mod, set()).add(z % p == 0)
    for x in range(mod):
        for y in range(mod):
            rhs = (a * x * x + b * y * y) % mod
            if rhs not in squares:
                continue
            if x % p or y % p or False in squares[rhs]:
                return 1
    return -1


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    vals = [v for v in range(-n, n + 1) if v]
    for p in (0, 2, 3, 5, 7):
        row = "".join("+" if local_symbol(a, b, p) == 1 else "-" for a in vals for b in vals)
        print(("inf" if p == 0 else str(p)) + " " + row)
