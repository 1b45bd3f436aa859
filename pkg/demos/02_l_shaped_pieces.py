"""
Canonical L-shaped pieces
=========================

An L-shaped piece in canonical position is a 4-vector (x1, x2, x3, x4).
The restriction below keeps one representative per symmetry class.  With
bounds (7, 5, 7, 5) there are 190 representatives.
"""

from phorma import PhormaSpec, build, format_seq, rank, unrank
from phorma.oracle import enumerate_members

B_L = (
    "a1>=a3 & a2>=a4 & a1>=a2 & (a1!=a2 | a3>=a4) "
    "& (a1!=a3 | a2=a4) & (a2!=a4 | a1=a3)"
)
spec = PhormaSpec.from_text((7, 5, 7, 5), B_L)
g = build(spec)

# the members split into 9 classes by order pattern; each class is entered
# at its maximal value sequence and holds class_count members
print(f"{'pattern':>8} {'entry':>6} {'count':>6} {'offset':>6}")
for beta, gamma, c, off in zip(g.patterns, g.gammas, g.class_counts, g.prefix_counts):
    print(f"{format_seq(beta):>8} {format_seq(gamma):>6} {c:>6} {off:>6}")
print("total", g.total)

# the brute-force scan over the 1225-vector box agrees
assert len(enumerate_members(spec)) == g.total

# the vertex table is tiny next to the set it hashes
print("table vertices:", len(g.table))
for key in g.table.cell_keys():
    cell = g.table.cell(*key)
    if len(cell) > 1:
        print("shared cell", key, [format_seq(e.prefix + (key[1],)) for e in cell])

for alpha in [(7, 4, 1, 2), (5, 5, 3, 3), (3, 3, 3, 3), (7, 5, 4, 3)]:
    r = rank(g, alpha)
    print(alpha, "->", r, "->", unrank(g, r))
