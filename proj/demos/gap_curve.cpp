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

// Prints the relaxation-rate curve gamma -> x_min for one and four channels,
// next to the weak-coupling (m gamma) and strong-coupling asymptotes
// ((4 gamma)^{-1/3} for one channel, gamma (sqrt(m) - 1)^2 beyond).

#include <lindff/analytic.hpp>

#include <cmath>
#include <cstdio>

int main() {
    using namespace lindff;
    std::printf("%10s %14s %14s %14s %14s\n", "gamma", "x_min(m=1)", "x_min(m=4)", "weak(m=1)",
                "strong(m=1)");
    for (double g = 1e-3; g < 2e4; g *= 10.0) {
        std::printf("%10.4g %14.8f %14.8f %14.8f %14.8f\n", g, nh_gap(g),
                    multi_channel_nh_gap(g, 4), g, std::pow(4.0 * g, -1.0 / 3.0));
    }
    return 0;
}
