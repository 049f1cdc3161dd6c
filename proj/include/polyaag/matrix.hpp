#ifndef POLYAAG_MATRIX_HPP
#define POLYAAG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "polyaag/bigint.hpp"

namespace polyaag {

// Dense square integer matrix, row-major. Vectors are rows and act on the
// right: apply_row(v, M) = v * M. Row i of an action matrix is the image of
// the i-th integral basis vector.
struct IntMatrix {
    int dim = 0;
    std::vector<BigInt> a;  // dim*dim entries

    IntMatrix() = default;
    explicit IntMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d) {}

    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const BigInt& at(int r, int c) const {
        return a[static_cast<std::size_t>(r) * dim + c];
    }

    static IntMatrix identity(int d);

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_neg(const IntMatrix& x);

std::vector<BigInt> apply_row(const std::vector<BigInt>& v, const IntMatrix& m);

// Exact determinant (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

// Integer inverse; exists iff det = +-1. Returns nullopt otherwise.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

// base^exp for exp >= 0.
IntMatrix mat_pow(const IntMatrix& base, const BigInt& exp);

// base^exp for any sign; base_inv must be the inverse of base.
IntMatrix mat_pow_signed(const IntMatrix& base, const IntMatrix& base_inv,
                         const BigInt& exp);

bool matrices_commute(const IntMatrix& x, const IntMatrix& y);

}  // namespace polyaag

#endif
