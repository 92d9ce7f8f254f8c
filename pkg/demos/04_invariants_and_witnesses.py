"""The six exact invariants, each returned with a re-checkable witness."""

from symbreak import (
    INVARIANT_FUNCTIONS,
    cycle_graph,
    endline_graph,
    complete_graph,
    is_distinguishing,
    is_proper,
    star_graph,
    subdivision_graph,
)

C6 = cycle_graph(6)
print("hexagon:")
for kind in ("chi", "D", "chiD", "Dp", "chiDp", "Dpp"):
    iv = INVARIANT_FUNCTIONS[kind](C6)
    print(f"  {kind:6s} = {iv.value}  certified={iv.certified}")

# Witnesses are real colorings; the checkers accept them independently of the
# search that produced them.
chid = INVARIANT_FUNCTIONS["chiD"](C6)
print("chiD witness colors:", chid.witness.colors)
print("  proper:", is_proper(C6, chid.witness))
print("  distinguishing:", is_distinguishing(C6, chid.witness))

# Subdividing a star with m legs needs ceil(sqrt(m)) colors to break all leg
# swaps: each leg shows a (spoke color, leaf color) pattern and patterns must
# be pairwise distinct.
for m in (4, 5, 9):
    S = subdivision_graph(star_graph(m))
    print(f"D(S(K1,{m})) =", INVARIANT_FUNCTIONS['D'](S).value)

# The endline graph of K5 has distinguishing number 3: with two colors, two
# of the five pendant legs would carry identical patterns.
K5p = endline_graph(complete_graph(5))
print("D(K5+) =", INVARIANT_FUNCTIONS["D"](K5p).value)
