"""
Saving, loading and drawing
===========================

The text format numbers states depth-first from the start state, so two
files are byte-identical exactly when the automata are isomorphic.
"""

import io
import random

from dafsa import build_sorted, build_unsorted, dumps, export_dot, loads

rnd = random.Random(0)
words = sorted({"".join(rnd.choice("abc") for _ in range(rnd.randint(1, 5))) for _ in range(30)})

sorted_build = build_sorted(words)
shuffled = words[:]
rnd.shuffle(shuffled)
unsorted_build = build_unsorted(shuffled)

blob = dumps(sorted_build)
print(blob.decode())
print("identical files from both builders:", blob == dumps(unsorted_build))
print("round trip:", dumps(loads(blob)) == blob)

dot = io.BytesIO()
export_dot(build_sorted(["abd", "bad", "bae"]), dot)
print()
print(dot.getvalue().decode())
# Render with:  dot -Tpng fig.dot -o fig.png
