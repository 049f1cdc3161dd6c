#include "polyaag/builtin_groups.hpp"

#include <stdexcept>

namespace polyaag {

namespace {

IntMatrix scalar_matrix(int d, int v) {
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) {
        m.at(i, i) = v;
    }
    return m;
}

// Multiplication-by-root matrix on the power basis {1, x, ..., x^{d-1}}
// modulo the monic polynomial with the given low-to-high coefficients.
IntMatrix companion_matrix(const std::vector<BigInt>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    IntMatrix m(d);
    for (int i = 0; i + 1 < d; ++i) {
        m.at(i, i + 1) = 1;
    }
    for (int c = 0; c < d; ++c) {
        m.at(d - 1, c) = -coeffs[static_cast<std::size_t>(c)];
    }
    return m;
}

}  // namespace

bool has_builtin_group(int degree) {
    return degree == 1 || degree == 2 || degree == 3;
}

GroupSpec builtin_group_spec(int degree) {
    switch (degree) {
    case 1: {
        // x - 1
        std::vector<BigInt> f = {-1, 1};
        return make_group_spec(1, f, {2}, 0, {scalar_matrix(1, -1)});
    }
    case 2: {
        // x^2 - x - 1
        std::vector<BigInt> f = {-1, -1, 1};
        return make_group_spec(2, f, {2}, 1,
                               {scalar_matrix(2, -1), companion_matrix(f)});
    }
    case 3: {
        // x^3 - x - 1
        std::vector<BigInt> f = {-1, -1, 0, 1};
        return make_group_spec(3, f, {2}, 1,
                               {scalar_matrix(3, -1), companion_matrix(f)});
    }
    default:
        throw std::invalid_argument(
            "no built-in group for degree " + std::to_string(degree) +
            " (degrees 5 and 7 require an external group spec file)");
    }
}

}  // namespace polyaag
