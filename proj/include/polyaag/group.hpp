#ifndef POLYAAG_GROUP_HPP
#define POLYAAG_GROUP_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "polyaag/bigint.hpp"
#include "polyaag/matrix.hpp"
#include "polyaag/rng.hpp"
#include "polyaag/word.hpp"

namespace polyaag {

// Platform group G = O x| U for the ring of integers O of K = Q[x]/(f) and a
// subgroup U of its unit group. U is given by generators (torsion first, then
// infinite-order units), each acting on the integral basis of O by an integer
// matrix of determinant +-1; the matrices must commute pairwise.
//
// Generating sequence (fixes the 1-based indices used by words, weights and
// instance files): torsion unit generators, then infinite-order unit
// generators, then the d integral basis vectors of O.
struct GroupSpec {
    int degree = 0;                       // d = deg f
    std::vector<BigInt> poly_coeffs;      // monic f, low-to-high, size d+1
    std::vector<int> torsion_orders;      // one entry per torsion generator
    int unit_rank = 0;                    // infinite-order unit generators
    std::vector<IntMatrix> action_matrices;  // torsion gens then unit gens

    // Derived at construction, never serialized.
    std::vector<IntMatrix> action_inverses;
    std::vector<BigInt> commutator_weights;  // omega, one per generator
    int generator_count = 0;                 // n = #torsion + rank + degree

    int torsion_count() const { return static_cast<int>(torsion_orders.size()); }
    int unit_generator_count() const { return torsion_count() + unit_rank; }

    bool is_torsion_index(int idx0) const { return idx0 < torsion_count(); }
    bool is_unit_index(int idx0) const {
        return idx0 >= torsion_count() && idx0 < unit_generator_count();
    }
    bool is_basis_index(int idx0) const { return idx0 >= unit_generator_count(); }
};

// Collected normal form (torsion exponents, unit exponents, O-coordinates).
// Torsion exponents are canonical representatives in [0, order); two elements
// are equal iff all three component vectors are equal.
struct GroupElement {
    std::vector<int> torsion;
    std::vector<BigInt> units;
    std::vector<BigInt> coords;

    bool operator==(const GroupElement&) const = default;
};

// Validates the raw data (matrix shapes, det +-1, pairwise commutation,
// M^order = I for torsion generators) and computes the derived fields.
GroupSpec make_group_spec(int degree, std::vector<BigInt> poly_coeffs,
                          std::vector<int> torsion_orders, int unit_rank,
                          std::vector<IntMatrix> action_matrices);

GroupSpec load_group_spec(const std::filesystem::path& path);
void save_group_spec(const GroupSpec& spec, const std::filesystem::path& path);
std::string group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const std::string& text);

GroupElement identity(const GroupSpec& spec);
GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b);
GroupElement inverse(const GroupSpec& spec, const GroupElement& a);
GroupElement generator_element(const GroupSpec& spec, int index, int sign);
GroupElement evaluate_word(const GroupSpec& spec, const Word& w);

// Action of e's unit part on O-coordinates (product of generator matrix
// powers; the torsion part contributes too).
IntMatrix unit_action_matrix(const GroupSpec& spec, const GroupElement& e);

// a * b given the precomputed action matrix of b's unit part. Hot path for
// the cost function; equals multiply(spec, a, b).
GroupElement multiply_with_action(const GroupSpec& spec, const GroupElement& a,
                                  const GroupElement& b,
                                  const IntMatrix& b_action);

// Normal-form length: sum of canonical torsion exponents, |unit exponents|
// and |O-coordinates|.
BigInt nf_length(const GroupElement& e);

// Weighted variant: sum omega_j * |exponent_j| over the normal-form exponent
// vector in generating-sequence order.
BigInt weighted_nf_length(const GroupSpec& spec, const GroupElement& e);

// omega_j = sum_k nf_length([g_j, g_k]) with [x,y] = x^{-1} y^{-1} x y.
// Ignores any weights already stored in spec.
std::vector<BigInt> compute_commutator_weights(const GroupSpec& spec);

// Which length the random-word sampler targets. Collected normal-form length
// is the default reading of the generator length bounds; naive free-word
// length is available as a switch.
enum class LengthMode { collected, free_word };

// Freely reduced word whose length (per mode) lies in [length_lo, length_hi].
// Builds candidates by appending uniform random letters with immediate free
// reduction, returning at the first length hit; candidates that grow past a
// cap are rejected and resampled, up to attempt_cap candidates.
Word random_reduced_word(const GroupSpec& spec, const BigInt& length_lo,
                         const BigInt& length_hi, Rng& rng,
                         LengthMode mode = LengthMode::collected,
                         std::size_t attempt_cap = 10000);

// Uniform non-backtracking word with exactly `length` letters.
Word random_word_of_naive_length(const GroupSpec& spec, std::size_t length,
                                 Rng& rng);

}  // namespace polyaag

#endif
