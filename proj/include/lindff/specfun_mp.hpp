// Copyright 2026 The lindff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// specfun_mp.hpp: extended-precision hypergeometric series (MPFR backed)

#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace lindff {

// pFq(a; b; x) by direct series in extended precision. The alternating series
// at large negative x cancels ~2 sqrt(|x|) nats against a peak term of that
// size, so the working precision grows as 3 sqrt(|x|) bits plus guard. The
// peak term may exceed double range; only the converged sum is rounded back.
inline double hyp_series_mp(const std::vector<double>& a, const std::vector<double>& b, double x) {
    const double ax = std::abs(x);
    const mpfr_prec_t prec = mpfr_prec_t(128.0 + 3.0 * std::sqrt(ax));
    const long max_terms = long(4.0 * std::sqrt(ax)) + 400;

    mpfr_t term, sum, ratio, peak, floor_val, abs_term;
    mpfr_inits2(prec, term, sum, ratio, peak, floor_val, abs_term, (mpfr_ptr) nullptr);
    mpfr_set_d(term, 1.0, MPFR_RNDN);
    mpfr_set_d(sum, 1.0, MPFR_RNDN);
    mpfr_set_d(peak, 1.0, MPFR_RNDN);

    bool converged = false;
    for (long k = 0; k < max_terms; ++k) {
        mpfr_set_d(ratio, x, MPFR_RNDN);
        mpfr_div_ui(ratio, ratio, static_cast<unsigned long>(k + 1), MPFR_RNDN);
        for (double ai : a) mpfr_mul_d(ratio, ratio, ai + double(k), MPFR_RNDN);
        for (double bi : b) mpfr_div_d(ratio, ratio, bi + double(k), MPFR_RNDN);
        mpfr_mul(term, term, ratio, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
        mpfr_abs(abs_term, term, MPFR_RNDN);
        if (mpfr_cmp(abs_term, peak) > 0) mpfr_set(peak, abs_term, MPFR_RNDN);
        // Stop once the term falls a full guard band below the peak: the
        // remaining tail is then negligible at the chosen precision.
        mpfr_mul_2si(floor_val, peak, -(long(prec) - 24), MPFR_RNDN);
        if (mpfr_cmp(abs_term, floor_val) < 0) {
            converged = true;
            break;
        }
    }
    const double result = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(term, sum, ratio, peak, floor_val, abs_term, (mpfr_ptr) nullptr);
    if (!converged) throw std::runtime_error("hyp_series_mp: series did not converge");
    return result;
}

}  // namespace lindff
