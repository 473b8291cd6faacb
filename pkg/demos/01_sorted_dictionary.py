"""
Building a dictionary from sorted words
=======================================

The sorted builder never holds the whole trie in memory: at any moment the
automaton is the finished part plus the path of the most recent word.
"""

from dafsa import BuildStats, build_sorted, build_trie, count_words

# French first-group verb endings, in byte order
endings = sorted(
    "er ez ons ent ais ait ions iez aient a as ai erai eras era erons erez "
    "eront erais erait erions eriez eraient".split()
)

stats = BuildStats()
dictionary = build_sorted(endings, stats)

# The trie stores every prefix separately; the minimal automaton shares
# both prefixes and suffixes.
trie = build_trie(endings)
print("trie states:        ", trie.live_count)
print("minimal states:     ", dictionary.live_count)
print("peak while building:", stats.peak_live_states)
print("words accepted:     ", count_words(dictionary))

# Lookup costs one transition per letter.
for word in ["erions", "erion", "aient"]:
    print(f"{word!r:10} ->", word in dictionary)

print()
print("\n".join(stats.as_lines()))
