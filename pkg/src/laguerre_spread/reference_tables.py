"""Reference optimiser results for the bound tables (n = 0..10).

Tables 1 and 3 fix m = 0 (alpha = 0 and 5); tables 2 and 4 optimise (b, m)
jointly. m values are given to three decimals.
"""

ALPHA = {1: 0, 2: 0, 3: 5, 4: 5}
MODE = {1: "m-zero", 2: "joint", 3: "m-zero", 4: "joint"}

B_OPT = {
    1: [1, 3, 4, 6, 7, 8, 9, 10, 11, 12, 13],
    2: [1, 4, 6, 7, 9, 10, 11, 12, 14, 15, 16],
    3: [5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16],
    4: [1, 5, 7, 9, 10, 11, 13, 14, 15, 16, 17],
}

M_OPT = {
    2: [0, -0.332, -0.338, -0.322, -0.332, -0.327, -0.324, -0.321, -0.322, -0.320, -0.319],
    4: [5, 0.288, 0.053, -0.049, -0.098, -0.131, -0.160, -0.177, -0.190, -0.201, -0.210],
}
