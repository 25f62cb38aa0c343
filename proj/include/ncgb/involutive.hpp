#pragma once

#include "ncgb/common.hpp"

#include <optional>
#include <utility>

namespace ncgb {

// Keys 1..12
enum class DivisionKind {
    Left = 1,
    Right,
    LeftOverlap,
    StrongLeftOverlap,
    TwoSidedLeftOverlap,
    PrefixOnlyLeftOverlap,
    SubwordFreeLeftOverlap,
    RightOverlap,
    StrongRightOverlap,
    TwoSidedRightOverlap,
    SuffixOnlyRightOverlap,
    SubwordFreeRightOverlap,
};

std::optional<DivisionKind> division_from_key(int key);
int division_key(DivisionKind d);
const char* division_name(DivisionKind d);
bool is_global(DivisionKind d);
bool is_right_handed(DivisionKind d);
// the left-handed kind whose mirror image is d
DivisionKind left_counterpart(DivisionKind d);

enum class DivisorMode { Thin, Thick };

struct MultiplicativeTable {
    // [element][letter]
    std::vector<std::vector<bool>> left, right;

    std::size_t size() const { return left.size(); }
    bool operator==(const MultiplicativeTable&) const = default;
};

MultiplicativeTable assign_multiplicative(DivisionKind d, const std::vector<Word>& lms, std::size_t nvars);

struct Placement {
    Word u3, u4;
    bool operator==(const Placement&) const = default;
};

// u1 = u3 * u2 * u4 with the admitted placement of least deg(u3)
std::optional<Placement> involutively_divides(const Word& u2, const Word& u1, const std::vector<bool>& left_mult,
                                              const std::vector<bool>& right_mult, DivisorMode mode);

enum class Side { Left, Right };

// Left division: suffix test; Right division: prefix test.
std::optional<Placement> fast_inv_divides_global(const Word& u2, const Word& u1, Side side);

// 1-based first placement worth testing under thick divisors
std::size_t overlap_skip_offset(const Word& u, const Word& lm, const std::vector<bool>& right_mult);

struct InvDivResult {
    Polynomial remainder;
    LoggedRepresentation log;
    std::size_t steps = 0;
};

// exclude: index of P left out of the divisor list (the table still covers all of P)
InvDivResult inv_divide(const Polynomial& p, const std::vector<Polynomial>& P, const MultiplicativeTable& table,
                        DivisionKind d, DivisorMode mode, std::size_t exclude = static_cast<std::size_t>(-1));

struct AutoreduceResult {
    std::vector<Polynomial> basis;
    std::vector<LoggedRepresentation> logs;
    std::size_t steps = 0;
};

AutoreduceResult autoreduce_logged(const std::vector<Polynomial>& P, const std::vector<LoggedRepresentation>& logs,
                                   DivisionKind d, DivisorMode mode);
std::vector<Polynomial> autoreduce(const std::vector<Polynomial>& P, DivisionKind d, DivisorMode mode);

struct InvolutiveOptions {
    DivisionKind division = DivisionKind::Left;
    DivisorMode mode = DivisorMode::Thin;
    bool logging = false;
    Limits limits;
};

struct InvolutiveStats {
    std::size_t prolongations = 0;
    std::size_t involutive_reductions = 0;
    std::size_t iterations = 0;
    double seconds = 0;
};

struct InvolutiveBasisResult {
    std::vector<Polynomial> basis;
    MultiplicativeTable table;
    std::vector<LoggedRepresentation> logs;
    InvolutiveStats stats;
    RunStatus status = RunStatus::Complete;
};

InvolutiveBasisResult involutive_basis(const std::vector<Polynomial>& F, const InvolutiveOptions& opts = {});

// every prolongation by a nonmultiplicative letter reduces to zero
bool is_locally_involutive(const std::vector<Polynomial>& G, DivisionKind d, DivisorMode mode);

}  // namespace ncgb
