#include "permclass/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "permclass/series.hpp"

namespace permclass {

unsigned worker_count() {
    if (const char* env = std::getenv("PERMCLASS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

bool contains_seq_rec(const std::vector<int>& e, const std::vector<int>& pat,
                      std::vector<std::size_t>& chosen, std::size_t a, std::size_t from) {
    const std::size_t m = pat.size();
    if (a == m) return true;
    for (std::size_t i = from; i + (m - a) <= e.size(); ++i) {
        bool ok = true;
        for (std::size_t b = 0; b < a; ++b) {
            if ((pat[b] < pat[a]) != (e[chosen[b]] < e[i])) { ok = false; break; }
        }
        if (!ok) continue;
        chosen[a] = i;
        if (contains_seq_rec(e, pat, chosen, a + 1, i + 1)) return true;
    }
    return false;
}

bool contains_seq(const std::vector<int>& e, const std::vector<int>& pat) {
    if (pat.size() > e.size()) return false;
    if (pat.empty()) return true;
    std::vector<std::size_t> chosen(pat.size());
    return contains_seq_rec(e, pat, chosen, 0, 0);
}

// State of one depth-first search over prefixes that avoid the pattern and
// respect the inversion budget. Values are chosen left to right; appending
// value v adds one inversion per unused value smaller than v.
struct Search {
    const std::vector<int>* pattern = nullptr;  // null means specialized 1324
    std::size_t n = 0;
    long budget = 0;
    std::function<void(const Permutation&, long)> sink;  // may be empty
    std::vector<long long>* tally = nullptr;             // counts by inversions

    std::vector<int> prefix;
    uint32_t used = 0;
    long inversions = 0;
    long long visited = 0;

    // 1324 fast path: best132[d] = smallest maximum over 132-occurrences in
    // the length-d prefix (n+1 when none); prefmin[d] = min of that prefix.
    std::vector<int> best132;
    std::vector<int> prefmin;

    void init() {
        prefix.reserve(n);
        best132.assign(n + 1, static_cast<int>(n) + 1);
        prefmin.assign(n + 1, static_cast<int>(n) + 1);
    }

    long added_inversions(int v) const {
        const uint32_t below = used & ((1u << static_cast<unsigned>(v - 1)) - 1);
        const int smaller_total = v - 1;
        return smaller_total - std::popcount(below);
    }

    // Appending v must keep the prefix pattern-free. For 1324 this is exactly
    // v > best132 (v can only act as the final '4'); failure is monotone in v.
    bool creates_occurrence(int v) const {
        const std::size_t d = prefix.size();
        if (!pattern) return v > best132[d];
        std::vector<int> trial(prefix);
        trial.push_back(v);
        return contains_seq(trial, *pattern);
    }

    void push(int v) {
        const std::size_t d = prefix.size();
        prefix.push_back(v);
        used |= 1u << static_cast<unsigned>(v - 1);
        if (!pattern) {
            int best = best132[d];
            // new 132-occurrences end at v (v is the middle value '2'):
            // need e[j] > v with a smaller-than-v entry before position j.
            for (std::size_t j = 0; j < d; ++j)
                if (prefix[j] > v && prefmin[j] < v) best = std::min(best, prefix[j]);
            best132[d + 1] = best;
            prefmin[d + 1] = std::min(prefmin[d], v);
        }
    }

    void pop(int v, long added) {
        prefix.pop_back();
        used &= ~(1u << static_cast<unsigned>(v - 1));
        inversions -= added;
    }

    void run() {
        if (prefix.size() == n) {
            ++visited;
            if (tally) ++(*tally)[static_cast<std::size_t>(inversions)];
            if (sink) sink(Permutation(prefix), inversions);
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (used & (1u << static_cast<unsigned>(v - 1))) continue;
            const long added = added_inversions(v);
            if (inversions + added > budget) break;  // added grows with v
            if (creates_occurrence(v)) {
                if (!pattern) break;  // monotone in v for 1324
                continue;
            }
            inversions += added;
            push(v);
            run();
            pop(v, added);
        }
    }

    // Seeds the search with a prefix; returns false if the prefix itself is
    // pruned (occurrence or budget).
    bool seed(const std::vector<int>& values) {
        for (int v : values) {
            const long added = added_inversions(v);
            if (inversions + added > budget) return false;
            if (creates_occurrence(v)) return false;
            inversions += added;
            push(v);
        }
        return true;
    }
};

struct ShardResult {
    std::vector<std::pair<Permutation, long>> items;  // when collecting
    std::vector<long long> tally;
    long long visited = 0;
};

// Runs the search sharded over fixed-depth prefixes. Shards are processed by
// a worker pool but merged in lexicographic shard order, so the outcome is
// identical for any worker count.
BigInt run_sharded(const Permutation& pattern, std::size_t n, long budget,
                   const std::function<void(const Permutation&, long)>& sink,
                   std::vector<long long>* total_tally) {
    const bool fast_1324 =
        pattern.entries() == std::vector<int>{1, 3, 2, 4};
    const std::vector<int>* pat_seq = fast_1324 ? nullptr : &pattern.entries();

    if (n < 2) {
        Search s;
        s.pattern = pat_seq;
        s.n = n;
        s.budget = budget;
        s.sink = sink;
        s.tally = total_tally;
        s.init();
        s.run();
        return s.visited;
    }

    std::vector<std::pair<int, int>> shards;
    for (int a = 1; a <= static_cast<int>(n); ++a)
        for (int b = 1; b <= static_cast<int>(n); ++b)
            if (a != b) shards.emplace_back(a, b);

    std::vector<ShardResult> results(shards.size());
    std::atomic<std::size_t> next{0};
    const bool collect = static_cast<bool>(sink);

    auto work = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= shards.size()) return;
            Search s;
            s.pattern = pat_seq;
            s.n = n;
            s.budget = budget;
            s.init();
            ShardResult& out = results[idx];
            if (total_tally) {
                out.tally.assign(total_tally->size(), 0);
                s.tally = &out.tally;
            }
            if (collect)
                s.sink = [&out](const Permutation& p, long k) { out.items.emplace_back(p, k); };
            if (s.seed({shards[idx].first, shards[idx].second})) s.run();
            out.visited = s.visited;
        }
    };

    const unsigned workers = std::min<std::size_t>(worker_count(), shards.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    BigInt total = 0;
    for (const auto& r : results) {
        total += r.visited;
        if (total_tally)
            for (std::size_t k = 0; k < r.tally.size(); ++k) (*total_tally)[k] += r.tally[k];
        if (collect)
            for (const auto& [p, k] : r.items) sink(p, k);
    }
    return total;
}

}  // namespace

BigInt enumerate_avoiders(const Permutation& pattern, std::size_t n,
                          std::optional<long> inv_budget,
                          const std::function<void(const Permutation&, long)>& sink) {
    const long full = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
    const long budget = inv_budget ? std::min(*inv_budget, full) : full;
    return run_sharded(pattern, n, budget, sink, nullptr);
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Brute: return "brute";
        case Engine::Pruned: return "pruned";
        case Engine::Closed: return "closed";
    }
    return "?";
}

Engine parse_engine(const std::string& name) {
    if (name == "brute") return Engine::Brute;
    if (name == "pruned") return Engine::Pruned;
    if (name == "closed") return Engine::Closed;
    throw std::invalid_argument("unknown engine: " + name);
}

namespace {

// Full factorial scan with the generic containment test; the independent
// ground truth for the pruned engine. Sharded by the first entry.
std::vector<BigInt> brute_row(const Permutation& pattern, std::size_t n, long k_max) {
    std::vector<BigInt> row(static_cast<std::size_t>(k_max) + 1, 0);
    if (n == 0) {
        if (k_max >= 0) row[0] = pattern.empty() ? 0 : 1;
        return row;
    }
    std::vector<std::vector<long long>> shard_rows(
        n, std::vector<long long>(static_cast<std::size_t>(k_max) + 1, 0));
    std::atomic<std::size_t> next{0};
    const auto& pat = pattern.entries();

    auto work = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= n) return;
            const int first = static_cast<int>(idx) + 1;
            std::vector<int> rest;
            for (int v = 1; v <= static_cast<int>(n); ++v)
                if (v != first) rest.push_back(v);
            std::vector<int> perm(n);
            perm[0] = first;
            auto& counts = shard_rows[idx];
            do {
                std::copy(rest.begin(), rest.end(), perm.begin() + 1);
                long inv = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (perm[i] > perm[j]) ++inv;
                if (inv > k_max) continue;
                if (!contains_seq(perm, pat)) ++counts[static_cast<std::size_t>(inv)];
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    };

    const unsigned workers = std::min<std::size_t>(worker_count(), n);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    for (const auto& shard : shard_rows)
        for (std::size_t k = 0; k < shard.size(); ++k) row[k] += shard[k];
    return row;
}

}  // namespace

std::vector<BigInt> count_by_inversions(const Permutation& pattern, std::size_t n,
                                        long k_max, Engine engine) {
    if (k_max < 0) throw std::invalid_argument("count_by_inversions: negative k_max");
    switch (engine) {
        case Engine::Brute:
            return brute_row(pattern, n, k_max);
        case Engine::Pruned: {
            std::vector<long long> tally(static_cast<std::size_t>(k_max) + 1, 0);
            run_sharded(pattern, n, k_max, {}, &tally);
            std::vector<BigInt> row(tally.size());
            for (std::size_t k = 0; k < tally.size(); ++k) row[k] = tally[k];
            return row;
        }
        case Engine::Closed: {
            if (pattern.entries() != std::vector<int>{1, 3, 2, 4})
                throw std::invalid_argument("closed engine only supports pattern 1324");
            if (k_max > 2 * static_cast<long>(n) - 7)
                throw std::invalid_argument("closed engine outside regime k <= 2n-7");
            std::vector<BigInt> row(static_cast<std::size_t>(k_max) + 1);
            for (long k = 0; k <= k_max; ++k) row[static_cast<std::size_t>(k)] = av_closed(n, k).value;
            return row;
        }
    }
    throw std::logic_error("unreachable");
}

const BigInt* CountTable::find(std::size_t n, long k) const {
    auto it = entries.find({n, k});
    return it == entries.end() ? nullptr : &it->second;
}

std::string CountTable::to_csv() const {
    std::ostringstream out;
    out << "# permclass-table v1\n";
    out << "# pattern=" << to_string(pattern) << " engine=" << engine_name(engine)
        << " budget=" << (inv_budget ? std::to_string(*inv_budget) : std::string("full"))
        << "\n";
    out << "n,k,count\n";
    for (const auto& [key, count] : entries)
        out << key.first << ',' << key.second << ',' << count.str() << '\n';
    return out.str();
}

std::string CountTable::to_json() const {
    nlohmann::json j;
    j["pattern"] = to_string(pattern);
    j["engine"] = engine_name(engine);
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, count] : entries) {
        j["entries"].push_back(
            {{"n", key.first}, {"k", key.second}, {"count", count.str()}});
    }
    return j.dump();
}

CountTable CountTable::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "# permclass-table v1")
        throw std::invalid_argument("CountTable: bad magic line");
    if (!std::getline(in, line) || line.rfind("# pattern=", 0) != 0)
        throw std::invalid_argument("CountTable: bad metadata line");

    CountTable table;
    std::istringstream meta(line.substr(2));
    std::string field;
    while (meta >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = field.substr(0, eq);
        const std::string val = field.substr(eq + 1);
        if (key == "pattern") table.pattern = parse_permutation(val);
        else if (key == "engine") table.engine = parse_engine(val);
        else if (key == "budget" && val != "full") table.inv_budget = std::stol(val);
    }
    if (!std::getline(in, line) || line != "n,k,count")
        throw std::invalid_argument("CountTable: bad header line");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string n_str, k_str, c_str;
        if (!std::getline(row, n_str, ',') || !std::getline(row, k_str, ',') ||
            !std::getline(row, c_str))
            throw std::invalid_argument("CountTable: bad row: " + line);
        table.entries[{std::stoul(n_str), std::stol(k_str)}] = BigInt(c_str);
    }
    return table;
}

CountTable build_table(const Permutation& pattern, std::size_t n_max,
                       std::optional<long> inv_budget, Engine engine) {
    CountTable table;
    table.pattern = pattern;
    table.engine = engine;
    table.inv_budget = inv_budget;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const long full = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
        long k_max = inv_budget ? std::min(*inv_budget, full) : full;
        if (engine == Engine::Closed) k_max = std::min(k_max, 2 * static_cast<long>(n) - 7);
        if (k_max < 0) continue;
        const auto row = count_by_inversions(pattern, n, k_max, engine);
        for (long k = 0; k <= k_max; ++k)
            table.entries[{n, k}] = row[static_cast<std::size_t>(k)];
    }
    return table;
}

BigInt mahonian(std::size_t n, long k) {
    if (k < 0) return 0;
    std::vector<BigInt> ways{1};
    for (std::size_t i = 2; i <= n; ++i) {
        // multiply by 1 + x + ... + x^(i-1)
        std::vector<BigInt> next(ways.size() + i - 1, 0);
        for (std::size_t d = 0; d < ways.size(); ++d)
            for (std::size_t j = 0; j < i; ++j) next[d + j] += ways[d];
        ways = std::move(next);
    }
    return static_cast<std::size_t>(k) < ways.size() ? ways[static_cast<std::size_t>(k)]
                                                     : BigInt(0);
}

MonotonicityReport check_monotonicity(const CountTable& table) {
    MonotonicityReport report;
    for (const auto& [key, count] : table.entries) {
        const auto [n, k] = key;
        const BigInt* above = table.find(n + 1, k);
        if (!above) continue;
        if (*above < count) report.violations.push_back(key);
        if (k <= 2 * static_cast<long>(n) - 7) {
            if (*above - count != diff_closed(n, k).value)
                report.closed_form_mismatches.push_back(key);
        }
    }
    return report;
}

DifferenceReport third_difference(const CountTable& table, long r, std::size_t n) {
    DifferenceReport report;
    report.r = r;
    report.n = n;
    const long base = 2 * static_cast<long>(n) + r;
    const std::pair<std::size_t, long> keys[8] = {
        {n + 3, base - 3}, {n + 2, base - 3}, {n + 2, base - 4}, {n + 1, base - 4},
        {n + 2, base - 5}, {n + 1, base - 5}, {n + 1, base - 6}, {n, base - 6}};
    BigInt vals[8];
    report.complete = true;
    for (int i = 0; i < 8; ++i) {
        if (const BigInt* p = table.find(keys[i].first, keys[i].second)) {
            vals[i] = *p;
            report.comps[keys[i]] = *p;
        } else {
            report.complete = false;
            report.missing.push_back(keys[i]);
        }
    }
    if (report.complete) {
        report.b_value = (vals[0] - vals[1]) - (vals[2] - vals[3]) -
                         ((vals[4] - vals[5]) - (vals[6] - vals[7]));
    }
    return report;
}

std::optional<BigInt> second_difference_start(const CountTable& table, long r) {
    const std::size_t n = static_cast<std::size_t>(10 + r);
    const long base = 2 * static_cast<long>(n) + r;
    const BigInt* a = table.find(n + 2, base - 5);
    const BigInt* b = table.find(n + 1, base - 5);
    const BigInt* c = table.find(n + 1, base - 6);
    const BigInt* d = table.find(n, base - 6);
    if (!a || !b || !c || !d) return std::nullopt;
    return (*a - *b) - (*c - *d);
}

ShapeReport shape_checks(const std::vector<BigInt>& row, std::size_t n) {
    const std::size_t expect = static_cast<std::size_t>(n * (n - 1) / 2) + 1;
    if (row.size() != expect)
        throw std::invalid_argument("shape_checks: incomplete row");
    ShapeReport report;

    bool descending = false;
    report.unimodal = true;
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
        if (row[k + 1] < row[k]) descending = true;
        else if (row[k + 1] > row[k] && descending) { report.unimodal = false; break; }
    }

    auto log_concave = [](const std::vector<BigInt>& seq) {
        for (std::size_t k = 1; k + 1 < seq.size(); ++k)
            if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) return false;
        return true;
    };
    report.log_concave = log_concave(row);
    const std::size_t drop = n >= 1 ? n - 1 : 0;
    report.tail_log_concave = log_concave(std::vector<BigInt>(
        row.begin() + static_cast<long>(std::min(drop, row.size())), row.end()));

    const BigInt top = *std::max_element(row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] == top) report.argmax_positions.push_back(k);
    return report;
}

}  // namespace permclass
