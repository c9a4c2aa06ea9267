#include "permclass/injection.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "permclass/enumerator.hpp"
#include "permclass/structure.hpp"

namespace permclass {

Permutation g(const Permutation& p) {
    if (contains_1324(p)) throw std::invalid_argument("g: permutation contains 1324");
    auto comps = components(p);
    if (comps.size() < 2) throw std::invalid_argument("g: permutation is indecomposable");
    std::vector<Permutation> parts;
    parts.reserve(comps.size() + 1);
    parts.push_back(std::move(comps[0]));
    parts.push_back(identity(1));
    for (std::size_t i = 1; i < comps.size(); ++i) parts.push_back(std::move(comps[i]));
    return direct_sum(std::span<const Permutation>(parts));
}

Permutation g_inverse(const Permutation& s) {
    if (contains_1324(s)) throw std::invalid_argument("g_inverse: permutation contains 1324");
    auto comps = components(s);
    if (comps.size() < 3)
        throw std::invalid_argument("g_inverse: fewer than three components");
    if (comps[1].size() != 1)
        throw std::logic_error("g_inverse: second component is not a singleton");
    std::vector<Permutation> parts;
    parts.reserve(comps.size() - 1);
    parts.push_back(std::move(comps[0]));
    for (std::size_t i = 2; i < comps.size(); ++i) parts.push_back(std::move(comps[i]));
    return direct_sum(std::span<const Permutation>(parts));
}

namespace {

Permutation delete_first_entry(const Permutation& p) {
    return delete_values(p, {p.at(1)});
}

Permutation f_impl(const Permutation& p) {
    if (is_decomposable(delete_first_entry(p)))
        return insert(g(delete_first_entry(p)), 1, p.at(1));
    if (is_decomposable(delete_values(p, {1})))
        return inverse(f_impl(inverse(p)));
    return reverse_complement(f_impl(reverse_complement(p)));
}

Permutation h_impl(const Permutation& s) {
    if (component_count(delete_first_entry(s)) >= 3)
        return insert(g_inverse(delete_first_entry(s)), 1, s.at(1));
    if (component_count(delete_values(s, {1})) >= 3)
        return inverse(h_impl(inverse(s)));
    const Permutation r = reverse_complement(s);
    if (component_count(delete_first_entry(r)) >= 3 ||
        component_count(delete_values(r, {1})) >= 3)
        return reverse_complement(h_impl(r));
    throw std::domain_error("h: no boundary deletion has at least three components");
}

}  // namespace

Permutation f(const Permutation& p) {
    if (!classify_boundary(p).almost_decomposable())
        throw std::invalid_argument("f: permutation is not almost decomposable");
    if (contains_1324(p)) throw std::invalid_argument("f: permutation contains 1324");
    return f_impl(p);
}

Permutation h(const Permutation& s) {
    if (contains_1324(s)) throw std::invalid_argument("h: permutation contains 1324");
    const std::size_t m = s.size();
    if (component_count(s) > 2)
        throw std::invalid_argument("h: more than two components violates Q membership");
    if (m < 2 || s.at(1) == static_cast<int>(m) || s.at(2) == static_cast<int>(m) ||
        s.at(m) == 1 || s.at(m) == 2)
        throw std::invalid_argument("h: extremal entry placement violates Q membership");
    return h_impl(s);
}

const char* remainder_class_name(RemainderClass c) {
    switch (c) {
        case RemainderClass::ClassA: return "a";
        case RemainderClass::ClassB: return "b";
        case RemainderClass::ClassD: return "d";
    }
    return "?";
}

RemainderClass classify_remainder(const Permutation& s) {
    const std::size_t m = s.size();
    if (m == 0) throw std::invalid_argument("classify_remainder: empty permutation");
    if (s.at(1) == static_cast<int>(m) || s.at(m) == 1) return RemainderClass::ClassA;
    if (m >= 2 && (s.at(2) == static_cast<int>(m) || s.at(m) == 2))
        return RemainderClass::ClassB;
    return RemainderClass::ClassD;
}

RemainderDecomposition remainder_set(std::size_t n, long k) {
    RemainderDecomposition out;
    out.n = n;
    out.k = k;
    out.in_regime = k <= 2 * static_cast<long>(n) - 7;

    const Permutation pattern({1, 3, 2, 4});

    std::set<Permutation> images;
    enumerate_avoiders(pattern, n, k, [&](const Permutation& p, long inv) {
        if (inv != k) return;
        const auto cls = classify_boundary(p);
        if (cls.decomposable())
            images.insert(g(p));
        else if (cls.almost_decomposable())
            images.insert(f_impl(p));
    });

    enumerate_avoiders(pattern, n + 1, k, [&](const Permutation& s, long inv) {
        if (inv != k) return;
        if (images.count(s)) return;
        switch (classify_remainder(s)) {
            case RemainderClass::ClassA: out.class_a.push_back(s); break;
            case RemainderClass::ClassB: out.class_b.push_back(s); break;
            case RemainderClass::ClassD: out.class_d.push_back(s); break;
        }
    });
    return out;
}

std::string RemainderDecomposition::to_json() const {
    auto emit = [](std::ostringstream& out, const std::vector<Permutation>& perms) {
        out << '[';
        for (std::size_t i = 0; i < perms.size(); ++i) {
            if (i) out << ',';
            out << '"' << to_string(perms[i]) << '"';
        }
        out << ']';
    };
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"k\":" << k << ",\"in_regime\":" << (in_regime ? "true" : "false")
        << ",\"classes\":{\"a\":";
    emit(out, class_a);
    out << ",\"b\":";
    emit(out, class_b);
    out << ",\"d\":";
    emit(out, class_d);
    out << "}}";
    return out.str();
}

ClassDResult build_class_d(const Permutation& tau, std::size_t n) {
    if (n < 4 || tau.size() != n - 2)
        throw std::invalid_argument("build_class_d: tau must have length n-2");
    if (contains_1324(tau)) throw std::invalid_argument("build_class_d: tau contains 1324");
    const long inv = inversion_count(tau);
    if (inv > static_cast<long>(n) - 4)
        throw std::invalid_argument("build_class_d: too many inversions, tau not decomposable");

    const SumForm1324 form = sum_form_1324(tau);
    const int a = static_cast<int>(form.head.size());
    const int m = static_cast<int>(form.middle_count);

    // pi_1 just above the head-plus-singletons block, pi_n just below it;
    // head keeps the bottom values, tail moves to the top.
    std::vector<int> entries;
    entries.reserve(n);
    entries.push_back(a + m + 2);
    for (int v : form.head.entries()) entries.push_back(v);
    for (int i = 1; i <= m; ++i) entries.push_back(a + i);
    for (int v : form.tail.entries()) entries.push_back(v + a + m + 2);
    entries.push_back(a + m + 1);

    ClassDResult out;
    out.value = Permutation(std::move(entries));
    out.in_regime = inv + static_cast<long>(n) - 1 <= 2 * static_cast<long>(n) - 7;
    return out;
}

}  // namespace permclass
