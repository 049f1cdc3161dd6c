#ifndef POLYAAG_WORD_HPP
#define POLYAAG_WORD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polyaag {

// A letter is a signed 1-based generator index: +i stands for g_i, -i for
// g_i^{-1}. Zero is never a valid letter.
using Letter = std::int32_t;

// Freely reduced word over the group's generating sequence. All word
// utilities keep the no-adjacent-inverse-pair invariant; anything that can
// break it re-reduces before returning.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    bool operator==(const Word&) const = default;
};

inline Letter inverse_letter(Letter l) { return -l; }

// Push one letter, cancelling against the current last letter if they are
// inverse. Keeps an already-reduced word reduced.
void append_reduced(Word& w, Letter l);

Word free_reduce(std::span<const Letter> letters);
inline Word free_reduce(const Word& w) {
    return free_reduce(std::span<const Letter>(w.letters));
}

bool is_freely_reduced(const Word& w);

Word invert_word(const Word& w);
Word concat_words(const Word& a, const Word& b);

// g^{-1} w g, reduced.
Word conjugate_word(const Word& w, Letter g);

// Space-separated signed indices, e.g. "1 -2 3". Empty word prints as "".
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace polyaag

#endif
