#include "polyaag/aag.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polyaag {

namespace {

using ordered_json = nlohmann::ordered_json;

// Rebuilds every *_cache field from the serialized part of the instance.
void finalize_caches(const GroupSpec& spec, AagInstance& inst) {
    const std::size_t n = inst.b_gens.size();
    inst.b_elements_cache.clear();
    inst.conjugate_inverses_cache.clear();
    inst.b_actions_cache.clear();
    inst.conjugate_inverse_actions_cache.clear();
    inst.b_elements_cache.reserve(n);
    inst.conjugate_inverses_cache.reserve(n);
    inst.b_actions_cache.reserve(n);
    inst.conjugate_inverse_actions_cache.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        GroupElement b = evaluate_word(spec, inst.b_gens[i]);
        GroupElement c_inv = inverse(spec, inst.conjugates[i]);
        inst.b_actions_cache.push_back(unit_action_matrix(spec, b));
        inst.conjugate_inverse_actions_cache.push_back(unit_action_matrix(spec, c_inv));
        inst.b_elements_cache.push_back(std::move(b));
        inst.conjugate_inverses_cache.push_back(std::move(c_inv));
    }
}

ordered_json element_to_json(const GroupElement& e) {
    ordered_json j;
    j["torsion"] = e.torsion;
    ordered_json units = ordered_json::array();
    for (const BigInt& v : e.units) units.push_back(to_decimal(v));
    j["units"] = std::move(units);
    ordered_json coords = ordered_json::array();
    for (const BigInt& v : e.coords) coords.push_back(to_decimal(v));
    j["coords"] = std::move(coords);
    return j;
}

GroupElement element_from_json(const ordered_json& j) {
    GroupElement e;
    e.torsion = j.at("torsion").get<std::vector<int>>();
    for (const auto& v : j.at("units")) e.units.push_back(bigint_from_decimal(v.get<std::string>()));
    for (const auto& v : j.at("coords")) e.coords.push_back(bigint_from_decimal(v.get<std::string>()));
    return e;
}

ordered_json word_list_to_json(const std::vector<Word>& words) {
    ordered_json j = ordered_json::array();
    for (const Word& w : words) j.push_back(w.letters);
    return j;
}

std::vector<Word> word_list_from_json(const ordered_json& j) {
    std::vector<Word> words;
    for (const auto& entry : j) words.push_back(Word{entry.get<std::vector<Letter>>()});
    return words;
}

}  // namespace

void validate_params(const AagParams& params) {
    if (params.equation_count < 1) throw std::invalid_argument("aag: N must be >= 1");
    if (params.key_length < 1) throw std::invalid_argument("aag: L must be >= 1");
    if (params.generator_length_lo < 1 ||
        params.generator_length_hi < params.generator_length_lo) {
        throw std::invalid_argument("aag: need 1 <= L1 <= L2");
    }
}

CostVector CostVector::from_summands(const std::vector<BigInt>& unweighted,
                                     const std::vector<BigInt>& weighted) {
    if (unweighted.empty() || unweighted.size() != weighted.size()) {
        throw std::invalid_argument("cost: summand lists empty or mismatched");
    }
    CostVector cv;
    BigInt usum = 0;
    BigInt umax = unweighted.front();
    for (const BigInt& v : unweighted) {
        usum += v;
        if (v > umax) umax = v;
    }
    BigInt wsum = 0;
    BigInt wmax = weighted.front();
    for (const BigInt& v : weighted) {
        wsum += v;
        if (v > wmax) wmax = v;
    }
    const BigInt n(static_cast<unsigned long>(unweighted.size()));
    cv.unweighted_sum = Rational(usum);
    cv.unweighted_max = Rational(umax);
    cv.unweighted_mean = Rational(usum, n);
    cv.unweighted_mean.canonicalize();
    cv.weighted_sum = Rational(wsum);
    cv.weighted_max = Rational(wmax);
    cv.weighted_mean = Rational(wsum, n);
    cv.weighted_mean.canonicalize();
    return cv;
}

int compare_cost(const CostVector& x, const CostVector& y) {
    if (int c = cmp(x.unweighted_sum, y.unweighted_sum); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.unweighted_max, y.unweighted_max); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.unweighted_mean, y.unweighted_mean); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.weighted_sum, y.weighted_sum); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.weighted_max, y.weighted_max); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.weighted_mean, y.weighted_mean); c != 0) return c < 0 ? -1 : 1;
    return 0;
}

AagInstance generate_instance(const GroupSpec& spec, const AagParams& params,
                              std::uint64_t seed) {
    validate_params(params);
    Rng rng(seed);
    constexpr int kResampleCap = 100;
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        AagInstance inst;
        inst.params = params;
        inst.seed = seed;
        const int n = params.equation_count;
        inst.a_gens.reserve(n);
        inst.b_gens.reserve(n);
        for (int i = 0; i < n; ++i) {
            inst.a_gens.push_back(random_reduced_word(spec, params.generator_length_lo,
                                                      params.generator_length_hi, rng,
                                                      params.length_mode));
        }
        for (int i = 0; i < n; ++i) {
            inst.b_gens.push_back(random_reduced_word(spec, params.generator_length_lo,
                                                      params.generator_length_hi, rng,
                                                      params.length_mode));
        }
        Word key;
        for (int i = 0; i < params.key_length; ++i) {
            const int idx = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const bool positive = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
            const Word& gen = inst.a_gens[static_cast<std::size_t>(idx)];
            key = concat_words(key, positive ? gen : invert_word(gen));
        }
        inst.planted_key = key;

        const GroupElement a = evaluate_word(spec, key);
        const GroupElement a_inv = inverse(spec, a);
        const IntMatrix a_action = unit_action_matrix(spec, a);
        bool degenerate = true;
        inst.conjugates.reserve(n);
        for (int i = 0; i < n; ++i) {
            GroupElement b = evaluate_word(spec, inst.b_gens[static_cast<std::size_t>(i)]);
            GroupElement c = multiply_with_action(
                spec, multiply_with_action(spec, a_inv, b, unit_action_matrix(spec, b)),
                a, a_action);
            if (!(c == b)) degenerate = false;
            inst.conjugates.push_back(std::move(c));
        }
        if (degenerate) continue;

        finalize_caches(spec, inst);
        if (!verify_solution(spec, inst, inst.planted_key)) {
            throw std::logic_error("aag: planted key fails its own equations");
        }
        return inst;
    }
    throw std::runtime_error("aag: resample cap hit; every draw was degenerate");
}

CostVector cost(const GroupSpec& spec, const AagInstance& inst, const Word& alpha) {
    const GroupElement e = evaluate_word(spec, alpha);
    const GroupElement e_inv = inverse(spec, e);
    const IntMatrix e_action = unit_action_matrix(spec, e);
    const std::size_t n = inst.b_elements_cache.size();
    std::vector<BigInt> unweighted;
    std::vector<BigInt> weighted;
    unweighted.reserve(n);
    weighted.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        GroupElement x = multiply_with_action(spec, e_inv, inst.b_elements_cache[i],
                                              inst.b_actions_cache[i]);
        x = multiply_with_action(spec, x, e, e_action);
        x = multiply_with_action(spec, x, inst.conjugate_inverses_cache[i],
                                 inst.conjugate_inverse_actions_cache[i]);
        unweighted.push_back(nf_length(x));
        weighted.push_back(weighted_nf_length(spec, x));
    }
    return CostVector::from_summands(unweighted, weighted);
}

bool verify_solution(const GroupSpec& spec, const AagInstance& inst, const Word& alpha) {
    const GroupElement e = evaluate_word(spec, alpha);
    const GroupElement e_inv = inverse(spec, e);
    const IntMatrix e_action = unit_action_matrix(spec, e);
    for (std::size_t i = 0; i < inst.b_elements_cache.size(); ++i) {
        GroupElement x = multiply_with_action(spec, e_inv, inst.b_elements_cache[i],
                                              inst.b_actions_cache[i]);
        x = multiply_with_action(spec, x, e, e_action);
        if (!(x == inst.conjugates[i])) return false;
    }
    return true;
}

GroupElement shared_key(const GroupSpec& spec, const Word& a, const Word& b) {
    const GroupElement ea = evaluate_word(spec, a);
    const GroupElement eb = evaluate_word(spec, b);
    const GroupElement x = multiply(spec, inverse(spec, ea), inverse(spec, eb));
    return multiply(spec, multiply(spec, x, ea), eb);
}

std::string instance_to_json(const GroupSpec& spec, const AagInstance& inst) {
    ordered_json j;
    j["format"] = "aag-instance";
    j["version"] = 1;
    j["group"] = ordered_json::parse(group_spec_to_json(spec));
    ordered_json params;
    params["N"] = inst.params.equation_count;
    params["L"] = inst.params.key_length;
    params["L1"] = inst.params.generator_length_lo;
    params["L2"] = inst.params.generator_length_hi;
    params["length_mode"] =
        inst.params.length_mode == LengthMode::collected ? "collected" : "free";
    j["params"] = std::move(params);
    j["seed"] = std::to_string(inst.seed);
    j["alice_generators"] = word_list_to_json(inst.a_gens);
    j["bob_generators"] = word_list_to_json(inst.b_gens);
    ordered_json conj = ordered_json::array();
    for (const GroupElement& c : inst.conjugates) conj.push_back(element_to_json(c));
    j["conjugates"] = std::move(conj);
    j["planted_private_key"] = inst.planted_key.letters;
    return j.dump(2) + "\n";
}

LoadedInstance instance_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("format").get<std::string>() != "aag-instance") {
        throw std::runtime_error("instance: unexpected format tag");
    }
    if (j.at("version").get<int>() != 1) {
        throw std::runtime_error("instance: unsupported version");
    }
    LoadedInstance loaded;
    loaded.group = group_spec_from_json(j.at("group").dump());
    AagInstance& inst = loaded.instance;
    const ordered_json& params = j.at("params");
    inst.params.equation_count = params.at("N").get<int>();
    inst.params.key_length = params.at("L").get<int>();
    inst.params.generator_length_lo = params.at("L1").get<long>();
    inst.params.generator_length_hi = params.at("L2").get<long>();
    const std::string mode =
        params.value("length_mode", std::string("collected"));
    if (mode == "collected") {
        inst.params.length_mode = LengthMode::collected;
    } else if (mode == "free") {
        inst.params.length_mode = LengthMode::free_word;
    } else {
        throw std::runtime_error("instance: unknown length_mode " + mode);
    }
    validate_params(inst.params);
    inst.seed = std::stoull(j.at("seed").get<std::string>());
    inst.a_gens = word_list_from_json(j.at("alice_generators"));
    inst.b_gens = word_list_from_json(j.at("bob_generators"));
    for (const auto& entry : j.at("conjugates")) {
        inst.conjugates.push_back(element_from_json(entry));
    }
    inst.planted_key = Word{j.at("planted_private_key").get<std::vector<Letter>>()};
    if (inst.b_gens.size() != inst.a_gens.size() ||
        inst.conjugates.size() != inst.b_gens.size() ||
        static_cast<int>(inst.a_gens.size()) != inst.params.equation_count) {
        throw std::runtime_error("instance: inconsistent equation counts");
    }
    for (const Word& w : inst.a_gens) {
        if (!is_freely_reduced(w)) throw std::runtime_error("instance: unreduced generator");
    }
    for (const Word& w : inst.b_gens) {
        if (!is_freely_reduced(w)) throw std::runtime_error("instance: unreduced generator");
    }
    finalize_caches(loaded.group, inst);
    return loaded;
}

void save_instance(const GroupSpec& spec, const AagInstance& inst,
                   const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << instance_to_json(spec, inst);
    if (!out) throw std::runtime_error("short write to " + path.string());
}

LoadedInstance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

std::string format_rational(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace polyaag
