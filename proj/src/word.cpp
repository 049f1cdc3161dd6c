#include "polyaag/word.hpp"

#include <sstream>
#include <stdexcept>

namespace polyaag {

void append_reduced(Word& w, Letter l) {
    if (l == 0) {
        throw std::invalid_argument("word letter must be nonzero");
    }
    if (!w.letters.empty() && w.letters.back() == -l) {
        w.letters.pop_back();
    } else {
        w.letters.push_back(l);
    }
}

Word free_reduce(std::span<const Letter> letters) {
    Word out;
    out.letters.reserve(letters.size());
    for (Letter l : letters) {
        append_reduced(out, l);
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (w.letters[i] == -w.letters[i + 1]) {
            return false;
        }
    }
    return true;
}

Word invert_word(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        out.letters.push_back(-*it);
    }
    return out;
}

Word concat_words(const Word& a, const Word& b) {
    Word out = a;
    out.letters.reserve(a.size() + b.size());
    for (Letter l : b.letters) {
        append_reduced(out, l);
    }
    return out;
}

Word conjugate_word(const Word& w, Letter g) {
    Word out;
    out.letters.reserve(w.size() + 2);
    append_reduced(out, -g);
    for (Letter l : w.letters) {
        append_reduced(out, l);
    }
    append_reduced(out, g);
    return out;
}

std::string format_word(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i > 0) {
            os << ' ';
        }
        os << w.letters[i];
    }
    return os.str();
}

Word parse_word(const std::string& text) {
    Word out;
    std::istringstream is(text);
    long v = 0;
    while (is >> v) {
        if (v == 0) {
            throw std::invalid_argument("word letter must be nonzero");
        }
        out.letters.push_back(static_cast<Letter>(v));
    }
    if (!is.eof()) {
        throw std::invalid_argument("malformed word text: " + text);
    }
    return out;
}

}  // namespace polyaag
