"""Capacity versus relative entropy of entanglement along two families.

Writes the sweep data to CSV (plot param/e_r/c/one_plus_er with any tool)
and prints the boundary behavior: the capacity curve stays below 1 + E_R,
touching it only at the ends of the lambda-A family and at the pure end
of the Werner family.
"""
from densecap.verify import sweep_family, write_sweep_csv

for family, lo, hi in (("lambda_a", 0.0, 1.0), ("werner", 0.5, 1.0), ("lambda_b", 0.0, 1.0)):
    rows = sweep_family(family, lo, hi, 0.01)
    path = f"sweep_{family}.csv"
    write_sweep_csv(rows, path)
    gaps = [r.c - r.one_plus_er for r in rows]
    touching = [i for i, g in enumerate(gaps) if abs(g) < 1e-6]
    print(f"{family}: {len(rows)} rows -> {path}")
    print(f"  max (C - (1+E_R)) = {max(gaps):+.3e}")
    print(f"  rows with equality: {touching if len(touching) < 6 else 'all of them'}")
    print(f"  endpoints: (E_R={rows[0].e_r:.4f}, C={rows[0].c:.4f}) .. "
          f"(E_R={rows[-1].e_r:.4f}, C={rows[-1].c:.4f})")
    print()

print("lambda-B is the curious family: C = 1 + E_R identically along it.")
