"""
A suffix that reuses its own prefix path
========================================

Adding ``fghdghde`` to the automaton for ``abcde`` and ``fghde`` appends a
suffix whose tail ``ghde`` is equivalent to states on the path of ``fgh``.
Merging the new suffix into one of its own ancestors would create a cycle.
The builder takes every state above the suffix out of the register before it
minimizes, so no ancestor can be picked as a merge target.
"""

from dafsa import UnsortedBuilder, oracle_minimal, canonical_form

builder = UnsortedBuilder(debug=True)  # debug: every arc edit is cycle-checked
for w in ["abcde", "fghde", "fghdghde"]:
    builder.add(w)
a = builder.automaton

print("language:", [w.decode() for w in a.enumerate_language()])
print("acyclic: ", a.check_acyclic())
print("states:  ", a.live_count)
print("same as trie+minimize:",
      canonical_form(a) == canonical_form(oracle_minimal([b"abcde", b"fghde", b"fghdghde"])))

# "fghdgh" lands back on the state reached by "abc".
print("fghdgh ~ abc:", a.delta_star(a.start, b"fghdgh") == a.delta_star(a.start, b"abc"))
