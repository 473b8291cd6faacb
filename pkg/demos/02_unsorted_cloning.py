"""
Adding words out of order
=========================

Start from the minimal automaton for ``abd`` and ``bad``.  The two words share
the state reached by ``ab`` and ``ba``, whose only continuation is ``d``.
Appending ``e`` to that shared state would also make ``abe`` valid, so the
unsorted builder clones it first.
"""

from dafsa import UnsortedBuilder, canonical_form

builder = UnsortedBuilder()
for w in ["abd", "bad"]:
    builder.add(w)
a = builder.automaton

shared = a.delta_star(a.start, b"ab")
print("shared by ab/ba:", shared == a.delta_star(a.start, b"ba"))
print("confluence:     ", a.is_confluence(shared))
print("states:         ", a.live_count)

builder.add("bae")
print()
print("after bae:", [w.decode() for w in a.enumerate_language()])
print("abe accepted?", b"abe" in a)
print("states:", a.live_count)

# Adding abe makes the ab- and ba- states equivalent again, so the automaton
# gets smaller.
builder.add("abe")
print()
print("after abe:", [w.decode() for w in a.enumerate_language()])
print("states:", a.live_count)
print()
print(canonical_form(a).decode())
