#include "polyaag/heuristics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace polyaag {

namespace {

std::size_t draw_index(Rng& rng, std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

// Uniform generator letter: index first, then sign.
Letter draw_letter(const GroupSpec& spec, Rng& rng) {
    const int index = static_cast<int>(draw_index(rng, static_cast<std::size_t>(spec.generator_count))) + 1;
    const bool positive = draw_index(rng, 2) == 0;
    return positive ? index : -index;
}

Word splice(const std::vector<Letter>& letters, std::size_t pos,
            const std::vector<Letter>& insert, std::size_t erase_count) {
    std::vector<Letter> out;
    out.reserve(letters.size() + insert.size());
    out.insert(out.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), insert.begin(), insert.end());
    out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos + erase_count),
               letters.end());
    return free_reduce(out);
}

}  // namespace

Word apply_heuristic(HeuristicId id, const GroupSpec& spec, const AagInstance& inst,
                     const Word& w, Rng& rng) {
    const std::size_t len = w.letters.size();
    switch (id) {
        case HeuristicId::H1: {
            const std::size_t pos = draw_index(rng, len + 1);
            const std::size_t which = draw_index(rng, inst.a_gens.size());
            const bool positive = draw_index(rng, 2) == 0;
            const Word& gen = inst.a_gens[which];
            return splice(w.letters, pos,
                          positive ? gen.letters : invert_word(gen).letters, 0);
        }
        case HeuristicId::H2: {
            const std::size_t pos = draw_index(rng, len + 1);
            const Letter f = draw_letter(spec, rng);
            return splice(w.letters, pos, {f}, 0);
        }
        case HeuristicId::H3: {
            if (len == 0) return w;
            const std::size_t pos = draw_index(rng, len);
            return splice(w.letters, pos, {}, 1);
        }
        case HeuristicId::H4: {
            if (len == 0) return w;
            const std::size_t pos = draw_index(rng, len);
            const Letter f = draw_letter(spec, rng);
            return splice(w.letters, pos, {f}, 1);
        }
        case HeuristicId::H5: {
            if (len == 0) return w;
            const std::size_t pos = draw_index(rng, len);
            const Letter f = draw_letter(spec, rng);
            return splice(w.letters, pos, {-f, w.letters[pos], f}, 1);
        }
        case HeuristicId::H6: {
            if (len == 0) return w;
            const std::size_t p1 = draw_index(rng, len);
            const std::size_t p2 = draw_index(rng, len);
            const std::size_t s = std::min(p1, p2);
            const std::size_t t = std::max(p1, p2);
            const Letter f = draw_letter(spec, rng);
            std::vector<Letter> replacement;
            replacement.reserve(t - s + 3);
            replacement.push_back(-f);
            replacement.insert(replacement.end(),
                               w.letters.begin() + static_cast<std::ptrdiff_t>(s),
                               w.letters.begin() + static_cast<std::ptrdiff_t>(t + 1));
            replacement.push_back(f);
            return splice(w.letters, s, replacement, t - s + 1);
        }
        case HeuristicId::H7: {
            if (len < 2) return w;
            const std::size_t p1 = draw_index(rng, len);
            const std::size_t p2 = draw_index(rng, len);
            std::vector<Letter> letters = w.letters;
            std::swap(letters[p1], letters[p2]);
            return free_reduce(letters);
        }
    }
    throw std::logic_error("apply_heuristic: bad id");
}

Word apply_chain(const HeuristicChain& chain, const GroupSpec& spec,
                 const AagInstance& inst, const Word& w, Rng& rng) {
    if (chain.ids.empty()) throw std::invalid_argument("apply_chain: empty chain");
    Word out = w;
    for (HeuristicId id : chain.ids) out = apply_heuristic(id, spec, inst, out, rng);
    return out;
}

bool is_pure_deletion(const HeuristicChain& chain) {
    return !chain.ids.empty() &&
           std::all_of(chain.ids.begin(), chain.ids.end(),
                       [](HeuristicId id) { return id == HeuristicId::H3; });
}

std::string format_chain(const HeuristicChain& chain) {
    std::string out;
    for (HeuristicId id : chain.ids) {
        out += 'H';
        out += static_cast<char>('0' + static_cast<int>(id));
    }
    return out;
}

HeuristicChain parse_chain(const std::string& text) {
    HeuristicChain chain;
    std::size_t i = 0;
    const auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != 'H' && text[i] != 'h') {
            throw std::invalid_argument("parse_chain: expected 'H' in \"" + text + "\"");
        }
        ++i;
        if (i >= text.size() || text[i] < '1' || text[i] > '7') {
            throw std::invalid_argument("parse_chain: heuristic index must be 1-7 in \"" +
                                        text + "\"");
        }
        const HeuristicId id = static_cast<HeuristicId>(text[i] - '0');
        ++i;
        std::size_t repeat = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw std::invalid_argument("parse_chain: '^' needs a count in \"" + text + "\"");
            }
            repeat = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                repeat = repeat * 10 + static_cast<std::size_t>(text[i] - '0');
                if (repeat > 100000) throw std::invalid_argument("parse_chain: count too large");
                ++i;
            }
            if (repeat == 0) throw std::invalid_argument("parse_chain: count must be >= 1");
        }
        chain.ids.insert(chain.ids.end(), repeat, id);
        skip_space();
    }
    if (chain.ids.empty()) throw std::invalid_argument("parse_chain: empty chain");
    return chain;
}

}  // namespace polyaag
