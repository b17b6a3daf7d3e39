#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qi/generic.hpp"
#include "qi/quiver.hpp"

namespace qi {

/// Word in the vertex alphabet, letters as canonical vertex indices. The first
/// letter is the top composition factor.
using Word = std::vector<std::size_t>;

/// If every vertex name is a single character, each non-separator character is a
/// letter ("iij"); otherwise letters are separated by spaces or commas ("v1 v2").
Word parse_word(const Quiver& q, std::string_view text);
std::string format_word(const Quiver& q, const Word& w);
DimVector word_weight(const Quiver& q, const Word& w);

inline constexpr std::uint64_t kDefaultWordBudget = 1'000'000;

/// Degeneration order: generated by w1 a b w2 < w1 b a w2 for a < b. Differing
/// weights give false. BudgetExceeded if more than budget words are visited.
bool word_leq(const Quiver& q, const Word& w, const Word& w2, std::uint64_t budget = kDefaultWordBudget);

/// Defining relations of the monoid, as (lhs, rhs) pairs: for i != j with no arrow
/// j -> i and n arrows i -> j, i^{n+1} j = i^n j i and i j^{n+1} = j i j^n.
std::vector<std::pair<Word, Word>> monoid_relations(const Quiver& q);

enum class MonoidOutcome { Equal, NotEqual, Undecided };
std::string_view to_string(MonoidOutcome o);

struct MonoidComparison {
    MonoidOutcome outcome;
    std::uint64_t explored;  // words visited by the closure
};

/// Congruence closure of w under the relations, breadth first, until w2 shows up,
/// the class is exhausted, or budget words have been visited (Undecided).
MonoidComparison monoid_equal(const Quiver& q, const Word& w, const Word& w2, std::uint64_t budget = kDefaultWordBudget);

/// All words congruent to w, sorted. BudgetExceeded if the class is larger than budget.
std::vector<Word> congruence_class(const Quiver& q, const Word& w, std::uint64_t budget = kDefaultWordBudget);
/// Lexicographically least word of the class.
Word canonical_word(const Quiver& q, const Word& w, std::uint64_t budget = kDefaultWordBudget);

/// Rewrites R_{d^1} * ... * R_{d^s} into R_{e^1} * ... * R_{e^t} with every e^k a
/// Schur root and ext(e^{k+1}, e^k) != 0 whenever ext(e^k, e^{k+1}) != 0.
/// Adjacent factors are merged while ext(right, left) = 0, merged blocks are
/// expanded into their generic decompositions, and remaining bad boundaries are
/// merged and expanded again. Zero parts are dropped.
std::vector<DimVector> schur_normal_form(const GenericCalculus& g, const std::vector<DimVector>& parts);
bool is_schur_normal_form(const GenericCalculus& g, const std::vector<DimVector>& parts);

}  // namespace qi
