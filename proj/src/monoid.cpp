#include "qi/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "qi/errors.hpp"

namespace qi {

namespace {

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : w) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

void check_word(const Quiver& q, const Word& w) {
    for (auto x : w)
        if (x >= q.vertex_count()) throw InputError("word letter out of range");
}

bool is_separator(char c) { return c == ' ' || c == ',' || c == '\t' || c == '(' || c == ')'; }

}  // namespace

Word parse_word(const Quiver& q, std::string_view text) {
    const bool single = std::all_of(q.vertex_names().begin(), q.vertex_names().end(), [](const std::string& s) { return s.size() == 1; });
    Word w;
    auto letter = [&](const std::string& name) {
        auto idx = q.index_of(name);
        if (!idx) throw InputError("unknown vertex '" + name + "' in word");
        w.push_back(*idx);
    };
    std::string token;
    for (char c : text) {
        if (is_separator(c)) {
            if (!token.empty()) letter(token);
            token.clear();
        } else if (single) {
            letter(std::string(1, c));
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty()) letter(token);
    return w;
}

std::string format_word(const Quiver& q, const Word& w) {
    const bool single = std::all_of(q.vertex_names().begin(), q.vertex_names().end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!single && k > 0) out += ' ';
        out += q.name(w[k]);
    }
    return out;
}

DimVector word_weight(const Quiver& q, const Word& w) {
    check_word(q, w);
    std::vector<int> d(q.vertex_count(), 0);
    for (auto x : w) ++d[x];
    return DimVector(std::move(d));
}

bool word_leq(const Quiver& q, const Word& w, const Word& w2, std::uint64_t budget) {
    if (word_weight(q, w) != word_weight(q, w2)) return false;
    if (w == w2) return true;
    // Every move increases the number of inversions, so the search is over a DAG.
    std::unordered_set<Word, WordHash> seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
            if (cur[k] >= cur[k + 1]) continue;
            Word next = cur;
            std::swap(next[k], next[k + 1]);
            if (next == w2) return true;
            if (seen.insert(next).second) {
                if (seen.size() > budget) throw BudgetExceeded("word order search exceeded its budget", seen.size(), budget);
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

std::vector<std::pair<Word, Word>> monoid_relations(const Quiver& q) {
    std::vector<std::pair<Word, Word>> rel;
    const std::size_t nv = q.vertex_count();
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            if (i == j || q.arrow_count(j, i) != 0) continue;
            const auto n = static_cast<std::size_t>(q.arrow_count(i, j));
            Word a(n + 1, i), b(n, i);
            a.push_back(j);
            b.push_back(j);
            b.push_back(i);
            rel.emplace_back(a, b);
            Word c{i}, e{j, i};
            c.insert(c.end(), n + 1, j);
            e.insert(e.end(), n, j);
            rel.emplace_back(c, e);
        }
    return rel;
}

std::string_view to_string(MonoidOutcome o) {
    switch (o) {
        case MonoidOutcome::Equal: return "equal";
        case MonoidOutcome::NotEqual: return "not-equal";
        case MonoidOutcome::Undecided: return "undecided-at-budget";
    }
    return "?";
}

namespace {

// Breadth-first closure under two-sided rewriting with the relations in both
// directions. Stops early when stop(word) is true. Returns false on budget exhaustion.
template <class Stop>
bool closure(const Quiver& q, const Word& start, std::uint64_t budget, std::unordered_set<Word, WordHash>& seen, Stop stop) {
    auto rel = monoid_relations(q);
    std::vector<std::pair<Word, Word>> rules;
    for (const auto& [a, b] : rel) {
        rules.emplace_back(a, b);
        rules.emplace_back(b, a);
    }
    seen.insert(start);
    if (stop(start)) return true;
    std::deque<Word> queue{start};
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& [lhs, rhs] : rules) {
            if (lhs.size() > cur.size()) continue;
            for (std::size_t pos = 0; pos + lhs.size() <= cur.size(); ++pos) {
                if (!std::equal(lhs.begin(), lhs.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
                Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
                next.insert(next.end(), rhs.begin(), rhs.end());
                next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()), cur.end());
                if (!seen.insert(next).second) continue;
                if (stop(next)) return true;
                if (seen.size() >= budget) return false;
                queue.push_back(std::move(next));
            }
        }
    }
    return true;
}

}  // namespace

MonoidComparison monoid_equal(const Quiver& q, const Word& w, const Word& w2, std::uint64_t budget) {
    if (word_weight(q, w) != word_weight(q, w2)) return {MonoidOutcome::NotEqual, 0};
    std::unordered_set<Word, WordHash> seen;
    bool hit = false;
    bool complete = closure(q, w, budget, seen, [&](const Word& x) { return hit = hit || x == w2; });
    if (hit) return {MonoidOutcome::Equal, seen.size()};
    return {complete ? MonoidOutcome::NotEqual : MonoidOutcome::Undecided, seen.size()};
}

std::vector<Word> congruence_class(const Quiver& q, const Word& w, std::uint64_t budget) {
    check_word(q, w);
    std::unordered_set<Word, WordHash> seen;
    if (!closure(q, w, budget, seen, [](const Word&) { return false; }))
        throw BudgetExceeded("congruence class exceeds the word budget", seen.size(), budget);
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Word canonical_word(const Quiver& q, const Word& w, std::uint64_t budget) { return congruence_class(q, w, budget).front(); }

bool is_schur_normal_form(const GenericCalculus& g, const std::vector<DimVector>& parts) {
    for (const auto& p : parts)
        if (p.is_zero() || !g.schur(p)) return false;
    for (std::size_t k = 0; k + 1 < parts.size(); ++k)
        if (g.ext(parts[k], parts[k + 1]) != 0 && g.ext(parts[k + 1], parts[k]) == 0) return false;
    return true;
}

std::vector<DimVector> schur_normal_form(const GenericCalculus& g, const std::vector<DimVector>& parts) {
    std::vector<DimVector> blocks;
    for (const auto& p : parts) {
        if (p.size() != g.quiver().vertex_count()) throw InputError("part does not match the quiver's vertex set");
        if (!p.is_zero()) blocks.push_back(p);
    }
    // R_d * R_e = R_{d+e} when ext(e, d) = 0.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
            if (g.ext(blocks[k + 1], blocks[k]) == 0) {
                blocks[k] = blocks[k] + blocks[k + 1];
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(k + 1));
                merged = true;
                break;
            }
        }
    }
    // R_d is the product of the R_{d^i} of its generic decomposition in any order.
    std::vector<DimVector> out;
    for (const auto& b : blocks) {
        auto dec = g.decomposition(b);
        out.insert(out.end(), dec.begin(), dec.end());
    }
    std::set<std::vector<DimVector>> seen{out};
    for (;;) {
        std::size_t bad = out.size();
        for (std::size_t k = 0; k + 1 < out.size(); ++k)
            if (g.ext(out[k], out[k + 1]) != 0 && g.ext(out[k + 1], out[k]) == 0) {
                bad = k;
                break;
            }
        if (bad == out.size()) break;
        auto dec = g.decomposition(out[bad] + out[bad + 1]);
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(bad), out.begin() + static_cast<std::ptrdiff_t>(bad + 2));
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(bad), dec.begin(), dec.end());
        if (!seen.insert(out).second) throw InternalError("Schur normal form rewriting entered a cycle");
    }
    if (!is_schur_normal_form(g, out)) throw InternalError("Schur normal form violates its defining conditions");
    return out;
}

}  // namespace qi
