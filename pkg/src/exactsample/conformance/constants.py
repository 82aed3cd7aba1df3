"""Reference values for the conformance checks.

Computed offline at 30 significant digits with mpmath (see
``scripts/compute_constants.py``) and frozen here; ``tests/test_constants.py``
re-derives each one independently.
"""

EXP_MINUS_HALF = 0.606530659712633423604
EXP_MINUS_ONE = 0.367879441171442321596
ONE_MINUS_EXP_MINUS_ONE = 0.632120558828557678404
E_MINUS_ONE = 1.71828182845904523536
# mean of a geometric count with success probability exp(-1/2)
GEOMETRIC_HALF_EXP_MEAN = 1.54149408253679828413
EXP_MINUS_0375 = 0.687289278790972198545

# sum_{k>=0} exp(-k^2/2)
GAUSS_INT_NORM = 1.75331414402145277242
# int_0^1 sum_k exp(-(k+x)^2/2) dx = sqrt(2 pi) / 2
HALF_GAUSS_NORM = 1.25331413731550025121
# P(half-normal < 1) = erf(1/sqrt 2)
HALF_GAUSS_BELOW_ONE = 0.682689492137085897170

# standard normal CDF at the dyadic checker points
NORMAL_CDF = {
    -2.0: 0.0227501319481792072003,
    -1.0: 0.158655253931457051415,
    -0.5: 0.308537538725986896362,
    0.0: 0.5,
    0.5: 0.691462461274013103638,
    1.0: 0.841344746068542948585,
    2.0: 0.977249868051820792800,
}

# Laplace(0, rate) CDF keyed by (rate, x)
LAPLACE_CDF = {
    (1, -1.0): 0.183939720585721160798,
    (1, 0.0): 0.5,
    (1, 1.0): 0.816060279414278839202,
    (2, -1.0): 0.0676676416183063459470,
    (2, 0.0): 0.5,
    (2, 1.0): 0.932332358381693654053,
}

# upper 0.001 quantiles of the chi-square law, by degrees of freedom
CHI2_CRIT_001 = {
    1: 10.8275661706627,
    2: 13.8155105579643,
    3: 16.2662361962381,
    4: 18.4668269529032,
    5: 20.5150056524329,
    6: 22.4577444848253,
    7: 24.3218863478569,
    8: 26.1244815583761,
    9: 27.8771648712566,
    10: 29.5882984450744,
    11: 31.2641336202400,
    12: 32.9094904073602,
    13: 34.5281789748709,
    14: 36.1232736803981,
    15: 37.6972982183538,
}
