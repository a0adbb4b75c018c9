#pragma once

#include "hyperseries/core.hpp"

namespace hyperseries {

/// Gauss 2F1 with automatic routing: direct series inside the unit disk
/// (with Pfaff/Euler maps chosen to avoid alternating-series cancellation),
/// inverse-argument continuation outside. Values on the cut [1, inf) follow
/// the principal branch of the power prefactors.
Complex eval_2f1(const Complex& a, const Complex& b, const Complex& c,
                 const Complex& z, double tol = 1e-14, long max_terms = 200000);

/// Plain series sum of 2F1 (|z| < 1 or terminating); no transformations.
Complex series_2f1(const Complex& a, const Complex& b, const Complex& c,
                   const Complex& z, double tol = 1e-14, long max_terms = 200000);

}  // namespace hyperseries
