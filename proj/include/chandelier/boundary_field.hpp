#pragma once

#include <array>
#include <cmath>

#include "chandelier/errors.hpp"

namespace chandelier {

// The 8-component boundary field h = (h1,...,h8) on unit semi-ball spin
// classes.  The 16 semi-ball configurations collapse under child permutation
// to 8 classes keyed by (sign of center spin, number of minus children):
//
//   index  center  minus kids   four-spin product
//   0  h1    +        0              +1
//   1  h2    +        1              -1
//   2  h3    +        2              +1
//   3  h4    +        3              -1
//   4  h5    -        0              -1
//   5  h6    -        1              +1
//   6  h7    -        2              -1
//   7  h8    -        3              +1
struct BoundaryField {
    std::array<double, 8> h{};

    static int class_index(int center_spin, int minus_children) {
        if (minus_children < 0 || minus_children > 3)
            throw parameter_error("minus-children count must be in [0,3]");
        return (center_spin > 0 ? 0 : 4) + minus_children;
    }

    // sigma(x)*sigma(y)*sigma(z)*sigma(w) for a configuration in this class.
    static int class_sign(int cls) {
        static constexpr std::array<int, 8> sign = {+1, -1, +1, -1, -1, +1, -1, +1};
        return sign[cls];
    }

    double& operator[](int i) { return h[i]; }
    double operator[](int i) const { return h[i]; }

    bool finite() const {
        for (double x : h)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

}  // namespace chandelier
