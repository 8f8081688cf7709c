"""The uniform Pauli-letter average is always a disentangled product state.

Averaging the four letters twirls away Alice's Bloch vector and every
correlation term, leaving (I/2) x Tr_A W0 no matter what W0 was.  This is
what makes the capacity sit above the relative entropy of entanglement:
the channel average itself lies in the separable set.
"""
import numpy as np

from densecap import random_state, sdc_average_check, to_pauli

print("rank  max|avg - (I/2) x Tr_A W0|   PPT   |r| before   |s| before")
for rank in (1, 2, 3, 4):
    for i in range(3):
        w0 = random_state(seed=(rank, i), rank=rank)
        dec = to_pauli(w0)
        result = sdc_average_check(w0)
        print(
            f"  {rank}       {result.product_form_error:.3e}            "
            f"{str(result.ppt):5s} {np.linalg.norm(dec.r):.4f}      {np.linalg.norm(dec.s):.4f}"
        )

w0 = random_state(seed=7, rank=4)
avg = sdc_average_check(w0).average
dec_avg = to_pauli(avg)
print()
print("Pauli data of one averaged state (Alice side wiped, Bob side kept):")
print("  r =", np.round(dec_avg.r, 12))
print("  s =", np.round(dec_avg.s, 6), " (equals Bob's original Bloch vector)")
print("  t =", np.round(dec_avg.t, 12).tolist())
