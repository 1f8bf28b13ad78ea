"""Walk through the path <-> partition dictionary.

A level-1 path is a residue word; its highest lift is a regular partition
carrying the same energy and weight.  This script reproduces the running
example: the word 0,0,0,1,1,0,1,1,1,0 for modulus 2.
"""

from fcl.partitions import format_partition, n_core, residue_data
from fcl.paths import PathWord, energy_weight, fow_classify, is_restricted, to_partition

word = PathWord((0, 0, 0, 1, 1, 0, 1, 1, 1, 0), n=2)
lam = to_partition(word)
print("residue word :", word.gamma)
print("highest lift :", format_partition(lam))

e, wt = energy_weight(word)
m, e2, wt2 = residue_data(lam, 2)
print(f"energy from the word      : {e}")
print(f"energy from the colouring : {e2}")
print(f"weight (both ways)        : {wt} / {wt2}")

print("restricted for j=0?", is_restricted(word, 0))
print("restricted for j=1?", is_restricted(word, 1))
print("border-edge colour :", fow_classify(lam, 2), "(None = never restricted)")

print()
print("a partition that does pass the border-edge test, n=3:")
lam2 = (13, 13, 10, 6, 5, 4, 1, 1)
print(format_partition(lam2), "-> colour", fow_classify(lam2, 3))
core, weight = n_core(lam2, 3)
print("3-core", format_partition(core), "with hook weight", weight)
