#include "permclass/structure.hpp"

#include <sstream>

#include "permclass/enumerator.hpp"

namespace permclass {

const char* boundary_deletion_name(BoundaryDeletion d) {
    switch (d) {
        case BoundaryDeletion::DelMinValue: return "del-min";
        case BoundaryDeletion::DelMaxValue: return "del-max";
        case BoundaryDeletion::DelFirstEntry: return "del-first-entry";
        case BoundaryDeletion::DelLastEntry: return "del-last-entry";
    }
    return "?";
}

Permutation apply_boundary_deletion(const Permutation& p, BoundaryDeletion d) {
    if (p.empty()) return p;
    const int n = static_cast<int>(p.size());
    switch (d) {
        case BoundaryDeletion::DelMinValue: return delete_values(p, {1});
        case BoundaryDeletion::DelMaxValue: return delete_values(p, {n});
        case BoundaryDeletion::DelFirstEntry: return delete_values(p, {p.at(1)});
        case BoundaryDeletion::DelLastEntry: return delete_values(p, {p.at(p.size())});
    }
    throw std::logic_error("unreachable");
}

bool is_decomposable(const Permutation& p) {
    return component_count(p) >= 2;
}

SumForm1324 sum_form_1324(const Permutation& p) {
    if (contains_1324(p))
        throw std::invalid_argument("sum_form_1324: permutation contains 1324");
    auto comps = components(p);
    if (comps.size() < 2)
        throw std::invalid_argument("sum_form_1324: permutation is indecomposable");
    for (std::size_t i = 1; i + 1 < comps.size(); ++i) {
        if (comps[i].size() != 1)
            throw std::logic_error("sum_form_1324: non-singleton middle component");
    }
    SumForm1324 form;
    form.head = std::move(comps.front());
    form.tail = std::move(comps.back());
    form.middle_count = comps.size() - 2;
    return form;
}

StructureClass classify_boundary(const Permutation& p) {
    StructureClass result;
    auto comps = components(p);
    if (comps.size() >= 2) {
        result.kind = StructureClass::Kind::Decomposable;
        result.comps = std::move(comps);
        return result;
    }
    if (p.size() <= 1) {
        result.kind = StructureClass::Kind::Neither;
        return result;
    }
    for (BoundaryDeletion d :
         {BoundaryDeletion::DelMinValue, BoundaryDeletion::DelMaxValue,
          BoundaryDeletion::DelFirstEntry, BoundaryDeletion::DelLastEntry}) {
        if (is_decomposable(apply_boundary_deletion(p, d))) result.witnesses.insert(d);
    }
    result.kind = result.witnesses.empty() ? StructureClass::Kind::Neither
                                           : StructureClass::Kind::AlmostDecomposable;
    return result;
}

CornerRegions corner_regions(const Permutation& p) {
    const std::size_t n = p.size();
    if (n == 0) throw std::invalid_argument("corner_regions: empty permutation");
    const int first = p.at(1);
    const int last = p.at(n);
    const std::size_t pos1 = p.position_of(1);
    const std::size_t posn = p.position_of(static_cast<int>(n));
    if (!(first < last && pos1 < posn))
        throw std::invalid_argument(
            "corner_regions: requires pi_1 < pi_n and pi^-1_1 < pi^-1_n");
    CornerRegions regions;
    for (std::size_t i = 1; i < pos1; ++i)
        if (p.at(i) > last) regions.northwest.insert(i);
    for (std::size_t j = posn + 1; j <= n; ++j)
        if (p.at(j) < first) regions.southeast.insert(j);
    return regions;
}

SideRegions side_regions(const Permutation& p, std::size_t anchor) {
    const auto corners = corner_regions(p);
    if (!corners.northwest.count(anchor))
        throw std::invalid_argument("side_regions: anchor not in the northwestern region");
    const std::size_t n = p.size();
    const int first = p.at(1);
    const int last = p.at(n);
    const std::size_t posn = p.position_of(static_cast<int>(n));
    SideRegions regions;
    for (std::size_t j = anchor + 1; j < posn; ++j) {
        const int v = p.at(j);
        if (v > 1 && v < first) regions.southern.insert(j);
        if (v > first && v < last) regions.central.insert(j);
    }
    for (std::size_t j = posn + 1; j < n; ++j) {
        const int v = p.at(j);
        if (v > first && v < last) regions.eastern.insert(j);
    }
    return regions;
}

std::string RemovePointReport::to_json() const {
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"k_max\":" << k_max << ",\"violations\":[";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) out << ',';
        out << '"' << to_string(violations[i]) << '"';
    }
    out << "],\"boundary_neither\":[";
    for (std::size_t i = 0; i < boundary_neither.size(); ++i) {
        if (i) out << ',';
        out << '"' << to_string(boundary_neither[i]) << '"';
    }
    out << "]}";
    return out.str();
}

RemovePointReport verify_almost_decomposability(std::size_t n) {
    RemovePointReport report;
    report.n = n;
    report.k_max = 2 * static_cast<long>(n) - 7;
    const Permutation pattern({1, 3, 2, 4});
    const long budget = 2 * static_cast<long>(n) - 6;  // theorem regime plus boundary
    if (budget < 0) return report;
    enumerate_avoiders(pattern, n, budget, [&](const Permutation& p, long k) {
        const auto cls = classify_boundary(p);
        if (!cls.neither()) return;
        if (k <= report.k_max)
            report.violations.push_back(p);
        else
            report.boundary_neither.push_back(p);
    });
    return report;
}

}  // namespace permclass
