"""
Chern characters on the blow-up
===============================

Classes ``v_d = f^*w - d ch(O_C(-1))``, twists by ``e^{-kC}`` and the
dimension of the corresponding moduli spaces.
"""

from fractions import Fraction

from qnk import PRESETS, BaseClass, class_vd, moduli_dimension, quot_expected_dims, twist
from qnk.chern import CH_OC_MINUS_1

print("ch(O_C(-1)) =", CH_OC_MINUS_1)

w = BaseClass(2, 1, 1, Fraction(-5, 2))
p2 = PRESETS["p2"]
for d in range(4):
    v = class_vd(w, d)
    print(f"d={d}: v_d = (rank {v.rank}, {v.c_coeff}C, ch2 {v.ch2}), dim {moduli_dimension(w, d, p2)}")

# M^k(v) is isomorphic to M^0(v . e^{-kC})
v = class_vd(w, 1)
print("twist by e^{-2C}:", twist(v, 2))

# The same dimensions as expected dimensions of Quot schemes over M_S(w)
base = moduli_dimension(w, 0, p2)
print([quot_expected_dims(base, w.rank, d)[1] for d in range(4)])
