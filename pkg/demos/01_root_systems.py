"""
Euler nodes of the irreducible root systems
===========================================

Fundamental coweights h_j are Euler elements exactly when every positive
root pairs with h_j to 0 or 1.  Everything here is exact rational
arithmetic.
"""

from eulerwedge import rootsys

# a root system is built from its family letter and rank
rs = rootsys.root_system("B", 3)
print("B3 has", len(rs.roots), "roots")
print("highest root in simple-root coordinates:",
      [str(c) for c in rootsys.simple_root_coordinates(rs, rootsys.highest_root(rs))])

# Euler nodes: coefficient of the node in the highest root is 1
for fam, n in [("A", 4), ("B", 3), ("C", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8), ("F", 4)]:
    print(f"{fam}{n}: Euler nodes {sorted(rootsys.euler_nodes(rootsys.root_system(fam, n)))}")

# symmetric means -h_j is Weyl conjugate to h_j; the orbit walk decides it,
# the -w0 diagram symmetry gives a second opinion
rs = rootsys.root_system("D", 6)
for j in sorted(rootsys.euler_nodes(rs)):
    print(f"D6 node {j}: orbit says {rootsys.is_symmetric_euler(rs, j)}, "
          f"diagram says {rootsys.is_symmetric_by_diagram(rs, j)}, "
          f"grading dims {rootsys.grading_dimensions(rs, j)}")

# the classify report is what the CLI prints
print(rootsys.classify("E", 7))
