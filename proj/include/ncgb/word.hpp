#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncgb {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using Rational = mpq_class;

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t column)
        : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Generator names, highest priority first.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// 1-based inclusive positions.
Word subword(const Word& m, std::size_t i, std::size_t j);
Word prefix(const Word& m, std::size_t k);
Word suffix(const Word& m, std::size_t k);
Word word_concat(const Word& u, const Word& v);
Word word_concat(const Word& a, const Word& b, const Word& c);
Word reversed(const Word& w);

// true if u occurs in w starting at position pos (0-based)
bool occurs_at(const Word& w, const Word& u, std::size_t pos);
// 0-based start positions of u inside w, leftmost first
std::vector<std::size_t> occurrences(const Word& w, const Word& u);
bool divides(const Word& u, const Word& w);

}  // namespace ncgb
