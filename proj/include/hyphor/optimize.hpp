#pragma once

#include <functional>
#include <utility>

namespace hyphor {

// Deterministic one-dimensional maximizer: a uniform bracketing grid
// followed by golden-section refinement of the best cell. Ties between
// equal objective values resolve toward smaller x, and an exact endpoint
// maximum is returned exactly.
struct Maximizer1D {
    double lo = 0;
    double hi = 1;
    int grid_points = 1000;   // >= 100
    double refine_tol = 1e-8; // > 0, final bracket width
};

// Returns (argmax, value). Objective errors are rethrown with the offending
// abscissa attached to the message.
std::pair<double, double> maximize(const std::function<double(double)>& f,
                                   const Maximizer1D& m);

struct POptResult {
    double p_lo = 0, p_hi = 0;  // 0.01-aligned interval containing the argmax
    double delta_max = 0;
    double p_argmax = 0;
    bool exceeds_bf_bound = false;  // delta_max > 0.85328
};

// Maximizes p -> optimize_family_36(p).delta over real p in [6.01, 6.99].
// grid_phase in [0, 1) shifts the initial grid by a fraction of one cell
// (stability probe; the refined argmax must not depend on it).
POptResult find_p_opt(double grid_phase = 0.0);

}  // namespace hyphor
