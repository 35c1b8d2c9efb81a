"""Independent brute-force oracles. Values printed here are frozen into the C++ tests.

Run: python3 tests/oracles/oracles.py
"""
import itertools


def pattern(t):
    return tuple((t[i] > t[j]) - (t[i] < t[j]) for i in range(4) for j in range(i + 1, 4))


def admissible_pattern_count():
    pats = set()
    for t in itertools.product(range(6), repeat=4):
        if t[0] != t[1] and t[2] != t[3]:
            pats.add(pattern(t))
    return len(pats)


def table_index(args, k):
    idx = 0
    for a in args:
        idx = idx * k + a
    return idx


def binary_closure(k, gens, seeds):
    """Subuniverse of X^(k^2) generated by seeds under gens (each gen: (arity, table))."""
    n = 2
    tuples = list(itertools.product(range(k), repeat=n))
    elems = set(seeds)
    changed = True
    while changed:
        changed = False
        cur = list(elems)
        for arity, tab in gens:
            for args in itertools.product(cur, repeat=arity):
                v = tuple(tab[table_index([a[t] for a in args], k)] for t in range(len(tuples)))
                if v not in elems:
                    elems.add(v)
                    changed = True
    return elems


def projections2(k):
    tuples = list(itertools.product(range(k), repeat=2))
    return [tuple(t[0] for t in tuples), tuple(t[1] for t in tuples)]


def all_unary(k):
    return [(1, list(t)) for t in itertools.product(range(k), repeat=k)]


def greedy_canonical(F, box):
    sel = []
    for p in box:
        cand = sel + [p]
        ok = True
        seen = {}
        for t in itertools.product(cand, repeat=4):
            if t[0] == t[1] or t[2] == t[3]:
                continue
            a, b = F(t[0], t[1]), F(t[2], t[3])
            o = (a > b) - (a < b)
            pt = pattern(t)
            if seen.setdefault(pt, o) != o:
                ok = False
                break
        if ok:
            sel.append(p)
    return sel


def ramsey(n, m, r, c):
    subsets = list(itertools.combinations(range(n), r))
    index = {s: i for i, s in enumerate(subsets)}
    msets = [[index[s] for s in itertools.combinations(ms, r)] for ms in itertools.combinations(range(n), m)]
    for col in itertools.product(range(c), repeat=len(subsets)):
        if not any(len({col[i] for i in ms}) <= 1 for ms in msets):
            return False
    return True


def cantor(x, y):
    return (x + y) * (x + y + 1) // 2 + y


def pr(x, y):
    return 2 * cantor(x, y) + 2


if __name__ == "__main__":
    print("admissible 4-tuple order patterns over {0..5}^4:", admissible_pattern_count())
    k = 2
    nand = (2, [1, 1, 1, 0])
    print("carrier 2, cl(NAND) binary slice:", len(binary_closure(k, [nand], projections2(k))))
    print("carrier 2, cl(O1) binary slice:", len(binary_closure(k, all_unary(k), projections2(k))))
    xor = (2, [0, 1, 1, 0])
    land = (2, [0, 0, 0, 1])
    print("carrier 2, cl(O1+XOR) binary slice:", len(binary_closure(k, all_unary(k) + [xor], projections2(k))))
    print("carrier 2, cl(O1+AND) binary slice:", len(binary_closure(k, all_unary(k) + [land], projections2(k))))
    print("greedy canonical, (x+y)%2 on [0,16):", greedy_canonical(lambda x, y: (x + y) % 2, range(16)))
    print("greedy canonical, max on [0,12):", greedy_canonical(max, range(12)))
    print("greedy canonical, pr on [0,24):", greedy_canonical(pr, range(24)))
    print("ramsey (6,3,2,2):", ramsey(6, 3, 2, 2), " (5,3,2,2):", ramsey(5, 3, 2, 2), " (3,2,1,2):", ramsey(3, 2, 1, 2))
    print("pr(0,0) =", pr(0, 0), " pr(1,3) =", pr(1, 3))
    vals = {pr(x, y) for x in range(256) for y in range(256)}
    print("pr distinct on [0,256)^2:", len(vals))
    # hausdorff base size for q=4, |s|<=3
    base = sum(2 ** (2 ** len(s)) for r in range(4) for s in itertools.combinations(range(4), r))
    print("hausdorff base size q=4 |s|<=3:", base)
