#pragma once

namespace hyphor {

// Lobachevsky function L(x) = -Integral_0^x ln|2 sin t| dt.
// Odd, pi-periodic, absolute error below 1e-12 everywhere.
double lobachevsky(double x);

// Series evaluator behind lobachevsky(); exposed so the working precision
// can be tightened or relaxed explicitly.
struct LobachevskyEvaluator {
    double tolerance = 1e-14;  // term cutoff; must be <= 1e-12
    int max_terms = 48;

    double operator()(double x) const;
};

}  // namespace hyphor
