#include "polyaag/group.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polyaag {

namespace {

using json = nlohmann::ordered_json;

int mod_order(long v, int order) {
    long m = v % order;
    if (m < 0) {
        m += order;
    }
    return static_cast<int>(m);
}

// Signed letters enumerated as +1, -1, +2, -2, ... for uniform draws.
Letter letter_from_rank(int rank) {
    const int gen = rank / 2 + 1;
    return rank % 2 == 0 ? gen : -gen;
}

int rank_of_letter(Letter l) {
    const int gen = l > 0 ? l : -l;
    return (gen - 1) * 2 + (l > 0 ? 0 : 1);
}

void apply_letter(const GroupSpec& spec, GroupElement& e, Letter l) {
    const int idx0 = (l > 0 ? l : -l) - 1;
    const int sign = l > 0 ? 1 : -1;
    if (idx0 < 0 || idx0 >= spec.generator_count) {
        throw std::out_of_range("generator index out of range");
    }
    if (spec.is_torsion_index(idx0)) {
        const int order = spec.torsion_orders[static_cast<std::size_t>(idx0)];
        e.torsion[static_cast<std::size_t>(idx0)] =
            mod_order(e.torsion[static_cast<std::size_t>(idx0)] + sign, order);
        const IntMatrix& m = sign > 0
                                 ? spec.action_matrices[static_cast<std::size_t>(idx0)]
                                 : spec.action_inverses[static_cast<std::size_t>(idx0)];
        e.coords = apply_row(e.coords, m);
    } else if (spec.is_unit_index(idx0)) {
        const std::size_t j = static_cast<std::size_t>(idx0 - spec.torsion_count());
        e.units[j] += sign;
        const IntMatrix& m = sign > 0
                                 ? spec.action_matrices[static_cast<std::size_t>(idx0)]
                                 : spec.action_inverses[static_cast<std::size_t>(idx0)];
        e.coords = apply_row(e.coords, m);
    } else {
        const std::size_t k =
            static_cast<std::size_t>(idx0 - spec.unit_generator_count());
        e.coords[k] += sign;
    }
}

std::vector<BigInt> parse_bigint_array(const json& arr, const char* what) {
    if (!arr.is_array()) {
        throw std::runtime_error(std::string("expected array for ") + what);
    }
    std::vector<BigInt> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) {
            throw std::runtime_error(std::string(what) +
                                     " entries must be decimal strings");
        }
        out.push_back(bigint_from_decimal(v.get<std::string>()));
    }
    return out;
}

json bigint_array_to_json(const std::vector<BigInt>& vs) {
    json arr = json::array();
    for (const auto& v : vs) {
        arr.push_back(to_decimal(v));
    }
    return arr;
}

}  // namespace

GroupSpec make_group_spec(int degree, std::vector<BigInt> poly_coeffs,
                          std::vector<int> torsion_orders, int unit_rank,
                          std::vector<IntMatrix> action_matrices) {
    if (degree < 1) {
        throw std::runtime_error("group spec: degree must be >= 1");
    }
    if (poly_coeffs.size() != static_cast<std::size_t>(degree) + 1) {
        throw std::runtime_error("group spec: poly_coeffs must have degree+1 entries");
    }
    if (poly_coeffs.back() != 1) {
        throw std::runtime_error("group spec: defining polynomial must be monic");
    }
    for (int o : torsion_orders) {
        if (o < 1) {
            throw std::runtime_error("group spec: torsion orders must be positive");
        }
    }
    if (unit_rank < 0) {
        throw std::runtime_error("group spec: unit_rank must be >= 0");
    }
    const std::size_t unit_gens = torsion_orders.size() + static_cast<std::size_t>(unit_rank);
    if (action_matrices.size() != unit_gens) {
        throw std::runtime_error(
            "group spec: need one action matrix per torsion and unit generator");
    }

    GroupSpec spec;
    spec.degree = degree;
    spec.poly_coeffs = std::move(poly_coeffs);
    spec.torsion_orders = std::move(torsion_orders);
    spec.unit_rank = unit_rank;
    spec.action_matrices = std::move(action_matrices);
    spec.generator_count = static_cast<int>(unit_gens) + degree;

    spec.action_inverses.reserve(spec.action_matrices.size());
    for (std::size_t i = 0; i < spec.action_matrices.size(); ++i) {
        const IntMatrix& m = spec.action_matrices[i];
        if (m.dim != degree) {
            throw std::runtime_error("group spec: action matrix has wrong dimension");
        }
        const BigInt det = determinant(m);
        if (det != 1 && det != -1) {
            throw std::runtime_error(
                "group spec: action matrix determinant not +-1 (generator " +
                std::to_string(i + 1) + ")");
        }
        auto inv = integer_inverse(m);
        if (!inv) {
            throw std::runtime_error("group spec: action matrix not invertible over Z");
        }
        spec.action_inverses.push_back(std::move(*inv));
    }
    for (std::size_t i = 0; i < spec.action_matrices.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.action_matrices.size(); ++j) {
            if (!matrices_commute(spec.action_matrices[i], spec.action_matrices[j])) {
                throw std::runtime_error(
                    "group spec: action matrices do not commute (generators " +
                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            }
        }
    }
    // Torsion consistency: the action must have the declared order, or the
    // normal form would not define a group.
    for (std::size_t i = 0; i < spec.torsion_orders.size(); ++i) {
        const IntMatrix powed =
            mat_pow(spec.action_matrices[i], BigInt(spec.torsion_orders[i]));
        if (!(powed == IntMatrix::identity(degree))) {
            throw std::runtime_error(
                "group spec: torsion action matrix does not satisfy M^order = I");
        }
    }

    spec.commutator_weights = compute_commutator_weights(spec);
    return spec;
}

GroupElement identity(const GroupSpec& spec) {
    GroupElement e;
    e.torsion.assign(spec.torsion_orders.size(), 0);
    e.units.assign(static_cast<std::size_t>(spec.unit_rank), BigInt(0));
    e.coords.assign(static_cast<std::size_t>(spec.degree), BigInt(0));
    return e;
}

IntMatrix unit_action_matrix(const GroupSpec& spec, const GroupElement& e) {
    IntMatrix m = IntMatrix::identity(spec.degree);
    bool trivial = true;
    for (std::size_t i = 0; i < e.torsion.size(); ++i) {
        if (e.torsion[i] != 0) {
            m = mat_mul(m, mat_pow(spec.action_matrices[i], BigInt(e.torsion[i])));
            trivial = false;
        }
    }
    const std::size_t t = static_cast<std::size_t>(spec.torsion_count());
    for (std::size_t j = 0; j < e.units.size(); ++j) {
        if (e.units[j] != 0) {
            m = mat_mul(m, mat_pow_signed(spec.action_matrices[t + j],
                                          spec.action_inverses[t + j], e.units[j]));
            trivial = false;
        }
    }
    (void)trivial;
    return m;
}

GroupElement multiply_with_action(const GroupSpec& spec, const GroupElement& a,
                                  const GroupElement& b,
                                  const IntMatrix& b_action) {
    GroupElement out;
    out.torsion.resize(a.torsion.size());
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        out.torsion[i] =
            mod_order(a.torsion[i] + b.torsion[i], spec.torsion_orders[i]);
    }
    out.units.resize(a.units.size());
    for (std::size_t j = 0; j < a.units.size(); ++j) {
        out.units[j] = a.units[j] + b.units[j];
    }
    out.coords = apply_row(a.coords, b_action);
    for (std::size_t k = 0; k < out.coords.size(); ++k) {
        out.coords[k] += b.coords[k];
    }
    return out;
}

GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b) {
    return multiply_with_action(spec, a, b, unit_action_matrix(spec, b));
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
    GroupElement out;
    out.torsion.resize(a.torsion.size());
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        out.torsion[i] = mod_order(-a.torsion[i], spec.torsion_orders[i]);
    }
    out.units.resize(a.units.size());
    for (std::size_t j = 0; j < a.units.size(); ++j) {
        out.units[j] = -a.units[j];
    }
    out.coords.assign(a.coords.size(), BigInt(0));
    // Coordinates of the inverse are -v * M(a)^{-1}; M(a)^{-1} is exactly the
    // action of the inverted exponents computed above.
    const IntMatrix inv_action = unit_action_matrix(spec, out);
    std::vector<BigInt> neg = apply_row(a.coords, inv_action);
    for (auto& v : neg) {
        v = -v;
    }
    out.coords = std::move(neg);
    return out;
}

GroupElement generator_element(const GroupSpec& spec, int index, int sign) {
    if (index < 1 || index > spec.generator_count) {
        throw std::out_of_range("generator index out of range");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("generator sign must be +-1");
    }
    GroupElement e = identity(spec);
    apply_letter(spec, e, sign > 0 ? index : -index);
    return e;
}

GroupElement evaluate_word(const GroupSpec& spec, const Word& w) {
    GroupElement e = identity(spec);
    for (Letter l : w.letters) {
        apply_letter(spec, e, l);
    }
    return e;
}

BigInt nf_length(const GroupElement& e) {
    BigInt total = 0;
    for (int t : e.torsion) {
        total += t;
    }
    for (const auto& u : e.units) {
        total += abs(u);
    }
    for (const auto& c : e.coords) {
        total += abs(c);
    }
    return total;
}

BigInt weighted_nf_length(const GroupSpec& spec, const GroupElement& e) {
    const auto& w = spec.commutator_weights;
    BigInt total = 0;
    std::size_t idx = 0;
    for (int t : e.torsion) {
        total += w[idx++] * t;
    }
    for (const auto& u : e.units) {
        total += w[idx++] * abs(u);
    }
    for (const auto& c : e.coords) {
        total += w[idx++] * abs(c);
    }
    return total;
}

std::vector<BigInt> compute_commutator_weights(const GroupSpec& spec) {
    const int n = spec.generator_count;
    std::vector<BigInt> weights(static_cast<std::size_t>(n));
    std::vector<GroupElement> gens;
    std::vector<GroupElement> gen_invs;
    gens.reserve(static_cast<std::size_t>(n));
    gen_invs.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        gens.push_back(generator_element(spec, i, 1));
        gen_invs.push_back(generator_element(spec, i, -1));
    }
    for (int j = 0; j < n; ++j) {
        BigInt total = 0;
        for (int k = 0; k < n; ++k) {
            GroupElement c = multiply(spec, gen_invs[j], gen_invs[k]);
            c = multiply(spec, c, gens[j]);
            c = multiply(spec, c, gens[k]);
            total += nf_length(c);
        }
        weights[static_cast<std::size_t>(j)] = total;
    }
    return weights;
}

Word random_reduced_word(const GroupSpec& spec, const BigInt& length_lo,
                         const BigInt& length_hi, Rng& rng, LengthMode mode,
                         std::size_t attempt_cap) {
    if (length_lo < 1 || length_lo > length_hi) {
        throw std::invalid_argument(
            "random_reduced_word requires 1 <= length_lo <= length_hi");
    }
    const int n = spec.generator_count;
    std::uniform_int_distribution<int> pick(0, 2 * n - 1);

    std::size_t naive_cap = 256;
    if (length_hi.fits_ulong_p()) {
        const unsigned long hi = length_hi.get_ui();
        naive_cap = std::max<std::size_t>(64, 8 * static_cast<std::size_t>(hi) + 32);
    }

    for (std::size_t attempt = 0; attempt < attempt_cap; ++attempt) {
        Word w;
        GroupElement e = identity(spec);
        while (w.size() < naive_cap) {
            const Letter l = letter_from_rank(pick(rng));
            // Multiplying by l tracks the word whether the letter extended it
            // or cancelled the previous one.
            append_reduced(w, l);
            apply_letter(spec, e, l);
            const BigInt len =
                mode == LengthMode::collected ? nf_length(e) : BigInt(w.size());
            if (len >= length_lo && len <= length_hi) {
                return w;
            }
        }
    }
    throw std::runtime_error(
        "random_reduced_word: sampling budget exhausted (infeasible length range?)");
}

Word random_word_of_naive_length(const GroupSpec& spec, std::size_t length,
                                 Rng& rng) {
    const int n = spec.generator_count;
    Word w;
    w.letters.reserve(length);
    if (length == 0) {
        return w;
    }
    std::uniform_int_distribution<int> first(0, 2 * n - 1);
    w.letters.push_back(letter_from_rank(first(rng)));
    std::uniform_int_distribution<int> rest(0, 2 * n - 2);
    while (w.size() < length) {
        const int forbidden = rank_of_letter(-w.letters.back());
        int r = rest(rng);
        if (r >= forbidden) {
            ++r;
        }
        w.letters.push_back(letter_from_rank(r));
    }
    return w;
}

std::string group_spec_to_json(const GroupSpec& spec) {
    json doc;
    doc["format"] = "aag-group";
    doc["version"] = 1;
    doc["degree"] = spec.degree;
    doc["poly_coeffs"] = bigint_array_to_json(spec.poly_coeffs);
    doc["torsion_orders"] = spec.torsion_orders;
    doc["unit_rank"] = spec.unit_rank;
    json mats = json::array();
    for (const auto& m : spec.action_matrices) {
        json rows = json::array();
        for (int r = 0; r < m.dim; ++r) {
            json row = json::array();
            for (int c = 0; c < m.dim; ++c) {
                row.push_back(to_decimal(m.at(r, c)));
            }
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    doc["action_matrices"] = std::move(mats);
    return doc.dump(2) + "\n";
}

GroupSpec group_spec_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("group spec parse failure: ") + e.what());
    }
    try {
        const int degree = doc.at("degree").get<int>();
        std::vector<BigInt> coeffs =
            parse_bigint_array(doc.at("poly_coeffs"), "poly_coeffs");
        std::vector<int> torsion =
            doc.at("torsion_orders").get<std::vector<int>>();
        const int rank = doc.at("unit_rank").get<int>();
        std::vector<IntMatrix> mats;
        for (const auto& rows : doc.at("action_matrices")) {
            IntMatrix m(degree);
            if (static_cast<int>(rows.size()) != degree) {
                throw std::runtime_error("action matrix is not degree x degree");
            }
            for (int r = 0; r < degree; ++r) {
                const auto row = parse_bigint_array(rows.at(r), "action matrix row");
                if (static_cast<int>(row.size()) != degree) {
                    throw std::runtime_error("action matrix is not degree x degree");
                }
                for (int c = 0; c < degree; ++c) {
                    m.at(r, c) = row[static_cast<std::size_t>(c)];
                }
            }
            mats.push_back(std::move(m));
        }
        return make_group_spec(degree, std::move(coeffs), std::move(torsion), rank,
                               std::move(mats));
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("group spec parse failure: ") + e.what());
    }
}

GroupSpec load_group_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open group spec file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return group_spec_from_json(buf.str());
}

void save_group_spec(const GroupSpec& spec, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write group spec file: " + path.string());
    }
    out << group_spec_to_json(spec);
}

}  // namespace polyaag
