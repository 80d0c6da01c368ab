"""Independent high-precision oracle for the frozen test values.

Run with `python3 gen_oracles.py`; every value printed here is pasted into
the Rust tests verbatim. Uses mpmath at 50 digits and Python fractions, so it
shares no code path with the crate.
"""
from fractions import Fraction
from math import comb

import mpmath as mp

mp.mp.dps = 50


def bernoulli(m_max):
    b = [Fraction(1)]
    for m in range(1, m_max + 1):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b


def h1(x):
    return (mp.sin(x) / x - mp.cos(x) ** 2) / mp.sin(x) ** 2


def h2(x):
    return (mp.sin(x) - x * mp.cos(x)) / (x * (1 - mp.cos(x)))


def h3(x):
    return (x - mp.sin(x) * mp.cos(x)) / (x * mp.sin(x) ** 2)


def h4(x):
    return (x - mp.sin(x)) * mp.cos(x) / (x - mp.sin(x) * mp.cos(x))


def show(label, v):
    print(f"{label} = {mp.nstr(v, 20)}")


b = bernoulli(8)
print("B2, B4, B6, B8 =", b[2], b[4], b[6], b[8])
from math import factorial as fact
for n in (1, 2):
    print(f"h1 coeff n={n}:", Fraction(int((1 - n) * 2 ** (2 * n + 1) - 2)) * abs(b[2 * n]) / fact(2 * n))
    print(f"h3 coeff n={n}:", Fraction(n * 2 ** (2 * n + 1)) * abs(b[2 * n]) / fact(2 * n))
    print(f"csc coeff n={n}:", Fraction(2 * (2 ** (2 * n - 1) - 1)) * abs(b[2 * n]) / fact(2 * n))
    print(f"cot coeff n={n}:", -Fraction(2 ** (2 * n)) * abs(b[2 * n]) / fact(2 * n))
    print(f"cscsq coeff n={n}:", Fraction(2 ** (2 * n) * (2 * n - 1)) * abs(b[2 * n]) / fact(2 * n))

third = mp.mpf(1) / 3
show("P(2,1)", 1 / (2 * mp.asin(third)))
show("T(2,1)", 1 / (2 * mp.atan(third)))
show("P(9,1) arctan form", 8 / (4 * mp.atan(3) - mp.pi))
show("csc(0.1)", 1 / mp.sin(mp.mpf("0.1")))
show("cot(0.1)", mp.cot(mp.mpf("0.1")))
show("cscsq(0.1)", 1 / mp.sin(mp.mpf("0.1")) ** 2)
show("cscsq(0.5)", 1 / mp.sin(mp.mpf("0.5")) ** 2)

for name, f in (("h1", h1), ("h2", h2), ("h3", h3), ("h4", h4)):
    for x in ("0.01", "0.1", "0.3", "0.5", "1", "2", "3"):
        show(f"{name}({x})", f(mp.mpf(x)))
show("h2(5)", h2(mp.mpf(5)))
show("h2(6)", h2(mp.mpf(6)))

# ratio reductions at (a, b) = (2, 1)
a, b_ = mp.mpf(2), mp.mpf(1)
A = (a + b_) / 2
H = 2 * a * b_ / (a + b_)
C = (a * a + b_ * b_) / (a + b_)
P = (a - b_) / (2 * mp.asin((a - b_) / (a + b_)))
T = (a - b_) / (2 * mp.atan((a - b_) / (a + b_)))
show("ratio prop1.1 (2,1)", (P - H) / (A - H))
show("h1(asin(1/3))", h1(mp.asin(third)))
show("ratio thm5.1 (2,1)", (T - H) / (C - H))
show("1 - h3(atan(1/3))/2", 1 - h3(mp.atan(third)) / 2)

# series of u/asin(u) and u/atan(u)
print("u/asin(u):", mp.taylor(lambda u: u / mp.asin(u) if u != 0 else mp.mpf(1), 0, 8))
print("u/atan(u):", mp.taylor(lambda u: u / mp.atan(u) if u != 0 else mp.mpf(1), 0, 8))

# closed-form sharp constants
pi, r2 = mp.pi, mp.sqrt(2)
show("(4-pi)/((sqrt2-1)pi)", (4 - pi) / ((r2 - 1) * pi))
show("(pi-2sqrt2)/(sqrt2 pi-2sqrt2)", (pi - 2 * r2) / (r2 * pi - 2 * r2))
show("2-4/pi", 2 - 4 / pi)
show("2/pi", 2 / pi)
show("1/pi", 1 / pi)
show("3/(2pi)", 3 / (2 * pi))

# h4 just inside pi: the approach to -1 is linear, -1 + 2*eps/pi
show("h4(pi - 1e-4)", h4(pi - mp.mpf("1e-4")))
