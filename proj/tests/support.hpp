#pragma once

#include <doctest.h>

#include "gfharm/field.hpp"
#include "gfharm/operator.hpp"
#include "oracle.hpp"

namespace testing {

inline oracle::Field oracle_for(const gfharm::GaloisField& f) {
    return {f.characteristic(), f.degree(), f.modulus()};
}

inline double distance(const gfharm::OperatorMatrix& a, const oracle::Matrix& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a.value(i, j) - b[static_cast<std::size_t>(i * a.dim() + j)]);
    }
    return std::sqrt(s);
}

struct GridPoint {
    int p;
    int l;
};

inline const std::vector<GridPoint>& small_grid() {
    static const std::vector<GridPoint> g{{3, 1}, {3, 2}, {5, 1}, {3, 3}, {5, 2}, {7, 1}};
    return g;
}

}  // namespace testing
