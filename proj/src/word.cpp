#include "ncgb/word.hpp"

#include <algorithm>
#include <set>

namespace ncgb {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ArgumentError("alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw ArgumentError("empty generator name");
        if (!seen.insert(n).second) throw ArgumentError("duplicate generator '" + n + "'");
    }
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
}

Word subword(const Word& m, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > m.size()) throw ArgumentError("subword index out of range");
    return Word(m.begin() + static_cast<std::ptrdiff_t>(i - 1), m.begin() + static_cast<std::ptrdiff_t>(j));
}

Word prefix(const Word& m, std::size_t k) {
    if (k > m.size()) throw ArgumentError("prefix length out of range");
    return Word(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k));
}

Word suffix(const Word& m, std::size_t k) {
    if (k > m.size()) throw ArgumentError("suffix length out of range");
    return Word(m.end() - static_cast<std::ptrdiff_t>(k), m.end());
}

Word word_concat(const Word& u, const Word& v) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

Word word_concat(const Word& a, const Word& b, const Word& c) {
    Word w;
    w.reserve(a.size() + b.size() + c.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    w.insert(w.end(), c.begin(), c.end());
    return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool occurs_at(const Word& w, const Word& u, std::size_t pos) {
    if (pos + u.size() > w.size()) return false;
    return std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::vector<std::size_t> occurrences(const Word& w, const Word& u) {
    std::vector<std::size_t> out;
    if (u.size() > w.size()) return out;
    for (std::size_t p = 0; p + u.size() <= w.size(); ++p)
        if (occurs_at(w, u, p)) out.push_back(p);
    return out;
}

bool divides(const Word& u, const Word& w) {
    if (u.size() > w.size()) return false;
    return u.empty() || std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

}  // namespace ncgb
