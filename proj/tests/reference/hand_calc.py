#!/usr/bin/env python3
"""Independent scalar evaluation of the hook travel-time model on the bundled
site. Used once to pin the expected values frozen in tests/reference_values.hpp;
it shares no code with the C++ library."""
import itertools
import json
import math
import pathlib

site = json.loads((pathlib.Path(__file__).parents[2] / "data" / "example_site.json").read_text())
D = site["demand_points_m"]
S = site["supply_points_m"]
K = site["crane_positions_m"]
c = site["crane"]
Q = site["demand_quantities_units"]


def parts(s, d, k):
    rd = math.hypot(d[0] - k[0], d[1] - k[1])
    rs = math.hypot(s[0] - k[0], s[1] - k[1])
    chord = math.hypot(s[0] - d[0], s[1] - d[1])
    ta = abs(rd - rs) / c["v_radial_m_per_min"]
    cosine = (rd * rd + rs * rs - chord * chord) / (2 * rd * rs)
    tw = math.acos(max(-1.0, min(1.0, cosine))) / c["v_slew_rad_per_min"]
    th = max(ta, tw) + c["alpha"] * min(ta, tw)
    tv = abs(d[2] - s[2]) / c["v_hoist_m_per_min"]
    return rd, rs, chord, ta, tw, th, tv, max(th, tv) + c["beta"] * min(th, tv)


def t(k, i, j):
    return parts(S[i], D[j], K[k])[-1]


def homogeneous(k, supplies):
    return sum(t(k - 1, supplies[l] - 1, j) * Q[l][j] * c["cost_rate_per_min"]
               for j in range(len(D)) for l in range(len(Q)))


def assignment(k, supplies):
    return sum(t(k - 1, supplies[j] - 1, j) * Q[l][j] * c["cost_rate_per_min"]
               for j in range(len(D)) for l in range(len(Q)))


def per_supply(k, demands):
    return sum(t(k - 1, i, demands[i] - 1) * Q[l][demands[i] - 1] * c["cost_rate_per_min"]
               for i in range(len(S)) for l in range(len(Q)))


if __name__ == "__main__":
    names = ["rho_d", "rho_s", "chord", "t_radial", "t_slew", "t_horizontal", "t_vertical", "t_total"]
    for n, v in zip(names, parts(S[1], D[0], K[7])):
        print(f"supply2/demand1/crane8 {n} = {v!r}")
    print("chord supply5/demand1 =", repr(math.hypot(S[4][0] - D[0][0], S[4][1] - D[0][1])))
    print("homogeneous k8 (2,5,1) =", repr(homogeneous(8, (2, 5, 1))))
    print("homogeneous k2 (3,2,9) =", repr(homogeneous(2, (3, 2, 9))))
    print("assignment k9 (3,7,4,4,3,2,1,1,3) =", repr(assignment(9, (3, 7, 4, 4, 3, 2, 1, 1, 3))))
    print("assignment k8 (7,7,6,4,3,2,1,1,1) =", repr(assignment(8, (7, 7, 6, 4, 3, 2, 1, 1, 1))))
    print("assignment k2 (7,6,5,4,3,2,1,9,8) =", repr(assignment(2, (7, 6, 5, 4, 3, 2, 1, 9, 8))))
    print("per-supply k8 (7,7,6,4,3,2,1,1,1) =", repr(per_supply(8, (7, 7, 6, 4, 3, 2, 1, 1, 1))))
    best = min((homogeneous(k, p), k, p) for k in range(1, 13)
               for p in itertools.permutations(range(1, 10), 3))
    print("homogeneous optimum =", best)
    unb = min((sum(min(t(k, i, j) for i in range(9)) * 60 * c["cost_rate_per_min"] for j in range(9)), k + 1)
              for k in range(12))
    print("unbounded optimum =", unb)
