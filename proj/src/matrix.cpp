#include "polyaag/matrix.hpp"

#include <stdexcept>

namespace polyaag {

IntMatrix IntMatrix::identity(int d) {
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim != y.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    const int d = x.dim;
    IntMatrix out(d);
    BigInt acc;
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const BigInt& xik = x.at(i, k);
            if (xik == 0) {
                continue;
            }
            for (int j = 0; j < d; ++j) {
                out.at(i, j) += xik * y.at(k, j);
            }
        }
    }
    return out;
}

IntMatrix mat_neg(const IntMatrix& x) {
    IntMatrix out = x;
    for (auto& v : out.a) {
        v = -v;
    }
    return out;
}

std::vector<BigInt> apply_row(const std::vector<BigInt>& v, const IntMatrix& m) {
    if (static_cast<int>(v.size()) != m.dim) {
        throw std::invalid_argument("vector/matrix dimension mismatch");
    }
    const int d = m.dim;
    std::vector<BigInt> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const BigInt& vi = v[static_cast<std::size_t>(i)];
        if (vi == 0) {
            continue;
        }
        for (int j = 0; j < d; ++j) {
            out[static_cast<std::size_t>(j)] += vi * m.at(i, j);
        }
    }
    return out;
}

namespace {

// Rational Gauss-Jordan on [m | I]; returns pair (det, inverse-if-integral).
struct Elimination {
    Rational det;
    std::optional<IntMatrix> inverse;
};

Elimination eliminate(const IntMatrix& m) {
    const int d = m.dim;
    std::vector<std::vector<Rational>> aug(
        static_cast<std::size_t>(d),
        std::vector<Rational>(static_cast<std::size_t>(2 * d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            aug[i][j] = Rational(m.at(i, j));
        }
        aug[i][static_cast<std::size_t>(d + i)] = 1;
    }

    Rational det = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r) {
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            return {Rational(0), std::nullopt};
        }
        if (pivot != col) {
            std::swap(aug[static_cast<std::size_t>(pivot)],
                      aug[static_cast<std::size_t>(col)]);
            det = -det;
        }
        det *= aug[col][col];
        const Rational inv_p = 1 / aug[col][col];
        for (int j = 0; j < 2 * d; ++j) {
            aug[col][j] *= inv_p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || aug[r][col] == 0) {
                continue;
            }
            const Rational factor = aug[r][col];
            for (int j = 0; j < 2 * d; ++j) {
                aug[r][j] -= factor * aug[col][j];
            }
        }
    }

    IntMatrix inv(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Rational v = aug[i][static_cast<std::size_t>(d + j)];
            v.canonicalize();
            if (v.get_den() != 1) {
                return {det, std::nullopt};
            }
            inv.at(i, j) = v.get_num();
        }
    }
    return {det, inv};
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
    Rational det = eliminate(m).det;
    det.canonicalize();
    // Integer input => integer determinant.
    return det.get_num() / det.get_den();
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
    return eliminate(m).inverse;
}

IntMatrix mat_pow(const IntMatrix& base, const BigInt& exp) {
    if (exp < 0) {
        throw std::invalid_argument("mat_pow requires a non-negative exponent");
    }
    IntMatrix result = IntMatrix::identity(base.dim);
    IntMatrix sq = base;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t b = 0; b < bits && exp != 0; ++b) {
        if (mpz_tstbit(exp.get_mpz_t(), b)) {
            result = mat_mul(result, sq);
        }
        if (b + 1 < bits) {
            sq = mat_mul(sq, sq);
        }
    }
    return result;
}

IntMatrix mat_pow_signed(const IntMatrix& base, const IntMatrix& base_inv,
                         const BigInt& exp) {
    if (exp >= 0) {
        return mat_pow(base, exp);
    }
    return mat_pow(base_inv, -exp);
}

bool matrices_commute(const IntMatrix& x, const IntMatrix& y) {
    return mat_mul(x, y) == mat_mul(y, x);
}

}  // namespace polyaag
