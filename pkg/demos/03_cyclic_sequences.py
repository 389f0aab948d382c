"""The three maps between neighbouring frames and their exactness.

Each frame (d,e) sits in a triangle of free modules

    F(d,e-1) --iota--> F(d,e) --kappa--> F(d-1,e) --bord--> F(d,e-1)

where iota widens every row by one, kappa drops an empty last row and bord
peels one cell from every row before appending an empty row.  On basis
diagrams each map either produces another even diagram or dies.

Run with: python3 demos/03_cyclic_sequences.py
"""

from wittgrass import (FramedDiagram, map_matrix, peel, shorten,
                       verify_exactness, widen)
from wittgrass.cli import ascii_diagram


def show_move(name, move, dg):
    out = move(dg)
    target = "0" if out is None else f"{out.rows} in {out.d}x{out.e}"
    print(f"  {name}({dg.rows}) = {target}")


print("Single moves on even diagrams:")
show_move("widen", widen, FramedDiagram(2, 2, (1, 1)))
show_move("widen", widen, FramedDiagram(2, 2, (2, 0)))   # one empty row, dies
show_move("shorten", shorten, FramedDiagram(3, 2, (2, 2, 0)))
show_move("shorten", shorten, FramedDiagram(2, 2, (1, 1)))
show_move("peel", peel, FramedDiagram(2, 3, (3, 3)))
show_move("peel", peel, FramedDiagram(2, 3, (2, 2)))
print()

print("peel turns the full 2x3 rectangle into a 3x2 staircase:")
print(ascii_diagram(FramedDiagram(2, 3, (3, 3))))
print("  ->")
print(ascii_diagram(FramedDiagram(3, 2, (2, 2, 0))))
print()

bm = map_matrix("iota", 2, 2)
print("Matrix of iota at the 2x2 frame, rows indexed by F(2,2), columns")
print(f"by F(2,1): {bm.matrix}")
print("Every column hits at most one row, so the maps are partial")
print("bijections on basis diagrams with integer matrix entries 0 and 1.")
print()

report = verify_exactness(3, 3, primes=(2, 3, 5))
print("Exactness at the 3x3 frame, three positions, checked structurally,")
print("over the integers and over three prime fields:")
for pos in report.positions:
    mods = ", ".join(f"mod {p}: {v}" for p, v in pos.mod_p)
    print(f"  at F{pos.frame} after {pos.incoming}, before {pos.outgoing}: "
          f"structural={pos.structural} linear={pos.linear} {mods}")
print(f"  overall: {report.ok}")
print()

print("Frames with d=0 or e=0 carry two point generators pt0, pt1 instead")
print("of diagrams.  The boundary sequences stay exact through them:")
for pivot in [(1, 4), (4, 1), (1, 1)]:
    rep = verify_exactness(*pivot, primes=(2,))
    print(f"  pivot {pivot}: exact={rep.ok}")
print()

bm = map_matrix("kappa", 1, 3)
print("For instance kappa at the 1x3 frame sends the empty diagram to pt0")
print(f"and kills the full row: matrix {bm.matrix} with source labels "
      f"{bm.source.labels()} and target labels {bm.target.labels()}")
