#ifndef POLYAAG_AAG_HPP
#define POLYAAG_AAG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "polyaag/bigint.hpp"
#include "polyaag/group.hpp"

namespace polyaag {

// Instance parameters: N conjugacy equations, private key of length L in the
// subgroup generators, generator lengths in G bounded by [L1, L2].
struct AagParams {
    int equation_count = 20;       // N
    int key_length = 5;            // L
    long generator_length_lo = 10; // L1
    long generator_length_hi = 13; // L2
    LengthMode length_mode = LengthMode::collected;
};

void validate_params(const AagParams& params);

// Six-component candidate cost, compared lexicographically:
// (sum, max, mean) of the unweighted summand lengths, then the same for the
// weighted length function. All components exact rationals.
struct CostVector {
    Rational unweighted_sum;
    Rational unweighted_max;
    Rational unweighted_mean;
    Rational weighted_sum;
    Rational weighted_max;
    Rational weighted_mean;

    static CostVector from_summands(const std::vector<BigInt>& unweighted,
                                    const std::vector<BigInt>& weighted);

    bool is_zero() const { return unweighted_sum == 0; }

    bool operator==(const CostVector&) const = default;
};

// -1 / 0 / +1 lexicographic comparison.
int compare_cost(const CostVector& x, const CostVector& y);

// One attackable key-exchange instance. The planted private key is retained
// only so tests can confirm that zero cost has a witness; attack code never
// reads it. The *_cache fields are derived on construction/load and are what
// make cost evaluation cheap; they are never serialized.
struct AagInstance {
    AagParams params;
    std::uint64_t seed = 0;
    std::vector<Word> a_gens;               // Alice's public subgroup generators
    std::vector<Word> b_gens;               // Bob's
    std::vector<GroupElement> conjugates;   // c_i = collected A^{-1} b_i A
    Word planted_key;

    std::vector<GroupElement> b_elements_cache;
    std::vector<GroupElement> conjugate_inverses_cache;
    std::vector<IntMatrix> b_actions_cache;
    std::vector<IntMatrix> conjugate_inverse_actions_cache;
};

// Samples a fresh instance from the given seed. Degenerate instances (the
// empty word already solves every equation) are resampled, up to 100 times.
AagInstance generate_instance(const GroupSpec& spec, const AagParams& params,
                              std::uint64_t seed);

// c(alpha): per equation the collected alpha^{-1} b_i alpha c_i^{-1}, reduced
// to the six-component length statistics. Pure; safe to call concurrently.
CostVector cost(const GroupSpec& spec, const AagInstance& inst, const Word& alpha);

// True iff collected alpha^{-1} b_i alpha = c_i for every equation.
bool verify_solution(const GroupSpec& spec, const AagInstance& inst,
                     const Word& alpha);

// Collected commutator [A, B] = A^{-1} B^{-1} A B.
GroupElement shared_key(const GroupSpec& spec, const Word& a, const Word& b);

struct LoadedInstance {
    GroupSpec group;
    AagInstance instance;
};

std::string instance_to_json(const GroupSpec& spec, const AagInstance& inst);
LoadedInstance instance_from_json(const std::string& text);
void save_instance(const GroupSpec& spec, const AagInstance& inst,
                   const std::filesystem::path& path);
LoadedInstance load_instance(const std::filesystem::path& path);

// Decimal string for integral components, "num/den" otherwise.
std::string format_rational(const Rational& v);

}  // namespace polyaag

#endif
