#pragma once

#include "ncgb/algebra.hpp"

#include <map>
#include <tuple>

namespace ncgb {

enum class RunStatus { Complete, DegreeCapHit, IterationCapHit };

const char* status_name(RunStatus s);

struct Limits {
    std::size_t max_degree = 20;
    std::size_t max_iterations = 100000;
};

// sum of coeff * left * f_index * right
class LoggedRepresentation {
public:
    using Key = std::tuple<Word, std::size_t, Word>;

    static LoggedRepresentation unit(std::size_t index);

    // this += c * l * other * r
    void add(const LoggedRepresentation& other, const Rational& c, const Word& l = {}, const Word& r = {});
    void add_entry(const Rational& c, const Word& l, std::size_t index, const Word& r);
    LoggedRepresentation scaled(const Rational& c) const;

    const std::map<Key, Rational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Polynomial expand(const std::vector<Polynomial>& inputs, const Ordering& ord) const;
    // replace every f_k by its own representation subs[k]
    LoggedRepresentation substitute(const std::vector<LoggedRepresentation>& subs) const;

private:
    std::map<Key, Rational> entries_;
};

}  // namespace ncgb
