"""
Hilbert schemes of points and the blow-up formula
=================================================

Euler characteristics of ``Hilb^n(S)`` depend only on ``e(S)``. Blowing up a
point raises ``e`` by one, which multiplies the generating series by one
more Euler product. We check this coefficientwise for a few surfaces.
"""

from qnk import INFINITY, PRESETS, euler_product_inv, goettsche_series, series_mul

order = 12

# %%
# The generating series for a K3 surface starts 1, 24, 324, 3200, ...
k3 = PRESETS["k3"]
print("Z_K3    :", list(goettsche_series(k3.euler, order)))

# %%
# Blowing up a point: e goes from 24 to 25.
blown_up = goettsche_series(k3.euler + 1, order)
product_form = series_mul(euler_product_inv(INFINITY, 1, order), goettsche_series(k3.euler, order))
print("Z_K3hat :", list(blown_up))
print("agree   :", blown_up == product_form)

# %%
# Between the two ends sit the moduli M^k(1, 0, -n); their series uses only
# the first k factors of the Euler product.
for k in range(4):
    s = series_mul(euler_product_inv(k, 1, order), goettsche_series(3, order))
    print(f"P^2, k={k}:", list(s))
