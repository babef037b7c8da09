"""Piercing unit-height rectangles with few points.

Run: python3 demos/demo_piercing.py
"""
import time

from cliquesep import SolveConfig, instances, pierce_exact, pierce_ptas
from cliquesep.geometry import format_coord
from cliquesep.oracles import brute_pierce


def main():
    small = instances.generate("rects", 12, 8)
    sol = pierce_exact(small.items)
    opt, _ = brute_pierce(small.items)
    print(f"small instance (n={small.n}): pierce_exact={sol.value}, "
          f"brute force={opt}")
    for p in sol.points:
        print(f"  pierce at ({format_coord(p.x)}, {format_coord(p.y)})")

    big = instances.generate("rects", 250, 9, "clustered")
    t = time.perf_counter()
    exact = pierce_exact(big.items)
    t_exact = time.perf_counter() - t
    t = time.perf_counter()
    approx = pierce_ptas(big.items, SolveConfig(epsilon=0.3))
    t_approx = time.perf_counter() - t
    print(f"\nlarge instance (n={big.n}):")
    print(f"  exact   {exact.value:4d} in {t_exact:.2f}s")
    print(f"  eps=0.3 {approx.value:4d} in {t_approx:.2f}s "
          f"(guarantee {1.3:.1f}x)")


if __name__ == "__main__":
    main()
