/*
   Copyright 2026 The oddball authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Small tour: the magnitude of B^5 three ways, its value at R = 1, and a
// point cloud creeping up on it.

#include <cstdio>
#include <iostream>

#include "oddball/analytic.hpp"
#include "oddball/hankel.hpp"
#include "oddball/schroeder.hpp"
#include "oddball/weights.hpp"

int main() {
    using namespace oddball;
    const unsigned p = 2;  // n = 5

    const auto h = magnitude_hankel(p);
    const auto c = magnitude_cramer(p, true);
    const auto s = magnitude_schroeder(p);
    std::cout << "N_2 = " << h.numerator.to_string() << '\n'
              << "D_2 = " << h.denominator.to_string() << '\n'
              << "routes agree: " << std::boolalpha << (h.magnitude == c.magnitude && h.magnitude == s.magnitude)
              << '\n';

    const Rational one(1);
    const Rational exact = h.magnitude.evaluate(one);
    std::cout << "|B^5_1| = " << exact.get_str() << " ~ " << exact.get_d() << '\n';

    for (unsigned m : {1u, 2u, 3u}) {
        const auto cloud = grid_cloud(5, 1.0, m);
        const auto mag = cloud_magnitude(cloud);
        std::printf("%-18s %5zu points  %.6f\n", cloud.id.c_str(), mag.points, mag.value);
    }
    return 0;
}
