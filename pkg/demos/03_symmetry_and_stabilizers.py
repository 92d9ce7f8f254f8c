"""Automorphism groups, colorings that break them, and the two lifts."""

from symbreak import (
    VertexColoring,
    automorphism_group,
    complete_graph,
    cycle_graph,
    distinguishing_number,
    lift_to_endline,
    lift_to_subdivision,
    endline_graph,
    is_automorphism,
    stabilizer,
    subdivision_graph,
)

C4 = cycle_graph(4)
aut = automorphism_group(C4)
print("Aut(C4) order:", aut.order)
for p in aut:
    print("  ", p)

# A coloring's stabilizer is the subgroup preserving every color.  The
# alternating 2-coloring keeps half the square's symmetries alive, so it is
# proper but not distinguishing.
alternating = VertexColoring((1, 2, 1, 2), 2)
print("stabilizer of (1,2,1,2):", stabilizer(aut, alternating).order)

# Careful: (1,2,3,2) still survives one reflection.  The search returns a
# witness with trivial stabilizer, and two colors never suffice: D(C4) = 3.
survivor = VertexColoring((1, 2, 3, 2), 3)
print("stabilizer of (1,2,3,2):", stabilizer(aut, survivor).order)
d = distinguishing_number(C4)
print(f"D(C4) = {d.value}, witness {d.witness.colors}, stabilizer",
      stabilizer(aut, d.witness).order)

# Automorphisms of the base graph extend to its endline and subdivision
# graphs: pendants follow their anchors, edge vertices follow their edges.
K4 = complete_graph(4)
alpha = (1, 2, 3, 0)
lifted_e = lift_to_endline(alpha, K4)
lifted_s = lift_to_subdivision(alpha, K4)
print("lift to K4+ is an automorphism:", is_automorphism(endline_graph(K4), lifted_e))
print("lift to S(K4) is an automorphism:", is_automorphism(subdivision_graph(K4), lifted_s))

# For non-cycles the lifts are all there is: the subdivision graph has exactly
# the base graph's symmetries.
print("Aut(S(K4)) order:", automorphism_group(subdivision_graph(K4)).order)
print("Aut(K4) order:   ", automorphism_group(K4).order)
