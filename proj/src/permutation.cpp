#include "permclass/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace permclass {

Permutation::Permutation(std::vector<int> values) : entries_(std::move(values)) {
    const std::size_t n = entries_.size();
    positions_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = entries_[i];
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw std::invalid_argument("Permutation: value out of range 1..n");
        if (positions_[static_cast<std::size_t>(v) - 1] != 0)
            throw std::invalid_argument("Permutation: duplicate value");
        positions_[static_cast<std::size_t>(v) - 1] = i + 1;
    }
}

Permutation make_permutation(std::vector<int> values) {
    return Permutation(std::move(values));
}

Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<int> inv(n);
    for (std::size_t i = 1; i <= n; ++i)
        inv[static_cast<std::size_t>(p.at(i)) - 1] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation reverse_complement(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<int> rc(n);
    for (std::size_t i = 1; i <= n; ++i)
        rc[i - 1] = static_cast<int>(n) + 1 - p.at(n + 1 - i);
    return Permutation(std::move(rc));
}

long inversion_count(const Permutation& p) {
    const auto& e = p.entries();
    long count = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i] > e[j]) ++count;
    return count;
}

std::pair<long, long> inversions_at(const Permutation& p, std::size_t i) {
    if (i < 1 || i > p.size())
        throw std::out_of_range("inversions_at: index out of range");
    const auto& e = p.entries();
    long left = 0, right = 0;
    for (std::size_t j = 0; j + 1 < i; ++j)
        if (e[j] > e[i - 1]) ++left;
    for (std::size_t j = i; j < e.size(); ++j)
        if (e[j] < e[i - 1]) ++right;
    return {left, right};
}

InversionTable inversion_table(const Permutation& p) {
    const auto& e = p.entries();
    std::vector<int> b(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[j] < e[i]) ++b[i];
    return InversionTable{std::move(b)};
}

bool InversionTable::weakly_decreasing() const {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] < values[i + 1]) return false;
    return true;
}

std::vector<int> InversionTable::partition() const {
    std::vector<int> parts;
    for (int v : values) {
        if (v == 0) break;
        parts.push_back(v);
    }
    return parts;
}

namespace {

// Backtracking over candidate indices: chosen[a] is the index used for
// pattern position a. Feasibility is checked against all previously
// chosen positions.
bool contains_rec(const std::vector<int>& e, const std::vector<int>& pat,
                  std::vector<std::size_t>& chosen, std::size_t a, std::size_t from) {
    const std::size_t m = pat.size();
    if (a == m) return true;
    for (std::size_t i = from; i + (m - a) <= e.size(); ++i) {
        bool ok = true;
        for (std::size_t b = 0; b < a; ++b) {
            const bool pat_less = pat[b] < pat[a];
            const bool val_less = e[chosen[b]] < e[i];
            if (pat_less != val_less) { ok = false; break; }
        }
        if (!ok) continue;
        chosen[a] = i;
        if (contains_rec(e, pat, chosen, a + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool contains(const Permutation& p, const Permutation& pattern) {
    if (pattern.size() > p.size()) return false;
    if (pattern.empty()) return true;
    std::vector<std::size_t> chosen(pattern.size());
    return contains_rec(p.entries(), pattern.entries(), chosen, 0, 0);
}

bool contains_1324(const Permutation& p) {
    const auto& e = p.entries();
    const std::size_t n = e.size();
    if (n < 4) return false;
    // prefix_min[i] = min of e[0..i-1], suffix_max[i] = max of e[i+1..n-1]
    std::vector<int> prefix_min(n + 1, static_cast<int>(n) + 1);
    for (std::size_t i = 0; i < n; ++i)
        prefix_min[i + 1] = std::min(prefix_min[i], e[i]);
    std::vector<int> suffix_max(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        suffix_max[i] = std::max(suffix_max[i + 1], e[i]);
    // e[j] plays the '3', e[k] the '2': need j < k, e[k] < e[j],
    // a smaller '1' before j and a larger '4' after k.
    for (std::size_t j = 0; j < n; ++j) {
        if (prefix_min[j] >= e[j]) continue;
        const int one = prefix_min[j];
        for (std::size_t k = j + 1; k < n; ++k) {
            if (e[k] < e[j] && e[k] > one && suffix_max[k + 1] > e[j])
                return true;
        }
    }
    return false;
}

Permutation direct_sum(std::span<const Permutation> parts) {
    std::vector<int> out;
    int offset = 0;
    for (const auto& part : parts) {
        for (int v : part.entries()) out.push_back(v + offset);
        offset += static_cast<int>(part.size());
    }
    return Permutation(std::move(out));
}

Permutation direct_sum(std::initializer_list<Permutation> parts) {
    return direct_sum(std::span<const Permutation>(parts.begin(), parts.size()));
}

std::vector<Permutation> components(const Permutation& p) {
    std::vector<Permutation> result;
    const auto& e = p.entries();
    int running_max = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        running_max = std::max(running_max, e[i]);
        // A component ends where the prefix 1..i+1 holds exactly the values 1..i+1.
        if (running_max == static_cast<int>(i) + 1) {
            std::vector<int> block(e.begin() + static_cast<long>(start),
                                   e.begin() + static_cast<long>(i) + 1);
            const int base = static_cast<int>(start);
            for (int& v : block) v -= base;
            result.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return result;
}

std::size_t component_count(const Permutation& p) {
    const auto& e = p.entries();
    int running_max = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        running_max = std::max(running_max, e[i]);
        if (running_max == static_cast<int>(i) + 1) ++count;
    }
    return count;
}

Permutation delete_values(const Permutation& p, const std::set<int>& values) {
    for (int v : values)
        if (v < 1 || static_cast<std::size_t>(v) > p.size())
            throw std::out_of_range("delete_values: value out of range");
    std::vector<int> kept;
    kept.reserve(p.size() - values.size());
    for (int v : p.entries())
        if (!values.count(v)) kept.push_back(v);
    // Renumber order-isomorphically: each survivor drops by the number of
    // deleted values below it.
    for (int& v : kept) {
        int below = 0;
        for (int d : values)
            if (d < v) ++below;
        v -= below;
    }
    return Permutation(std::move(kept));
}

Permutation insert(const Permutation& p, std::size_t position, int value) {
    const std::size_t n = p.size();
    if (position < 1 || position > n + 1)
        throw std::out_of_range("insert: position out of range");
    if (value < 1 || static_cast<std::size_t>(value) > n + 1)
        throw std::out_of_range("insert: value out of range");
    std::vector<int> out;
    out.reserve(n + 1);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        if (i == position) {
            out.push_back(value);
        } else {
            const int v = p.at(i < position ? i : i - 1);
            out.push_back(v >= value ? v + 1 : v);
        }
    }
    return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
    std::ostringstream out;
    if (p.size() <= 9) {
        for (int v : p.entries()) out << v;
    } else {
        bool first = true;
        for (int v : p.entries()) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> values;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string token;
        while (std::getline(in, token, ',')) {
            try {
                values.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_permutation: bad token '" + token + "'");
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("parse_permutation: bad digit");
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

}  // namespace permclass
