#include "enriques/monodromy.hpp"

#include <algorithm>
#include <set>

#include "enriques/catalog.hpp"
#include "enriques/errors.hpp"
#include "enriques/morse.hpp"

namespace enriques {

std::string_view to_string(Family f) {
    switch (f) {
    case Family::DelPezzo: return "del-pezzo";
    case Family::GrSurface: return "gr-surface";
    case Family::TwoRSurface: return "two-r-surface";
    case Family::Unclassified: return "unclassified";
    }
    return "unclassified";
}

std::optional<Family> family_from_string(std::string_view s) {
    if (s == "del-pezzo") return Family::DelPezzo;
    if (s == "gr-surface") return Family::GrSurface;
    if (s == "two-r-surface") return Family::TwoRSurface;
    if (s == "unclassified") return Family::Unclassified;
    return std::nullopt;
}

Family classify_family(const HalfDecomposition& d) {
    const auto& comps = d.half1.components();
    bool has_v3 = false;
    bool has_v4_up = false;
    for (const auto& c : comps) {
        if (c.shape() != SurfaceComponent::Shape::Nonorientable) continue;
        if (c.crosscaps() == 3) has_v3 = true;
        if (c.crosscaps() >= 4) has_v4_up = true;
    }
    if (comps.size() == 1 && comps.front().crosscaps() >= 3)
        return Family::DelPezzo;
    if (comps.size() >= 2 && has_v3)
        return Family::TwoRSurface;
    if (comps.size() >= 2 && has_v4_up)
        return Family::GrSurface;
    return Family::Unclassified;
}

namespace {

GroupReport report(PermGroup g) {
    GroupId id = identify(g);
    return {std::move(g), std::move(id)};
}

/// Membership gate: d must be a node of the derivative DAG of one of
/// its family's cataloged extremal decompositions.
void require_cataloged(const HalfDecomposition& d, Family fam, const Catalog& catalog) {
    const FamilyEntry* entry = catalog.family(fam);
    if (entry) {
        for (const auto& extremal : entry->extremal) {
            if (extremal.half1 != d.half1) continue;
            if (derive_dag(extremal).contains(d)) return;
        }
    }
    throw NotInCatalogError("decomposition " + d.text() +
                            " is not a derivative of any cataloged extremal type");
}

} // namespace

MonodromyResult monodromy_group(const HalfDecomposition& d, const Catalog& catalog) {
    const Family fam = classify_family(d);
    require_cataloged(d, fam, catalog);

    MonodromyResult result;
    result.family = fam;

    const auto labeled1 = LabeledHalf::from_half(d.half1);
    switch (fam) {
    case Family::DelPezzo:
        result.half1 = report(PermGroup::trivial(static_cast<int>(d.half1.size())));
        break;
    case Family::GrSurface:
        result.half1 = report(young_group(labeled1));
        break;
    case Family::TwoRSurface:
        result.half1 = report(PermGroup::trivial(static_cast<int>(d.half1.size())));
        result.notes.emplace_back(kHalf1OpenQuestionNote);
        break;
    case Family::Unclassified:
        break; // unreachable: require_cataloged rejects unclassified inputs
    }

    const auto young2 = young_group(LabeledHalf::from_half(d.half2));
    if (const ExceptionEntry* ex = catalog.find_exception(d)) {
        result.half2 = report(partition_stabilizer(young2, ex->quarters_half2));
        result.exceptional = true;
        result.quarter_partition = ex->quarters_half2;
    } else {
        result.half2 = report(young2);
    }
    return result;
}

bool is_realizable(const HalfDecomposition& d, int half_index, const Permutation& pi,
                   const Catalog& catalog) {
    if (half_index != 1 && half_index != 2)
        throw ValidationError("half index must be 1 or 2");
    const MonodromyResult r = monodromy_group(d, catalog);
    const Half& half = half_index == 1 ? d.half1 : d.half2;
    const PermGroup& realized = half_index == 1 ? r.half1.group : r.half2.group;
    const auto young = young_group(LabeledHalf::from_half(half));
    if (!young.contains(pi)) return false; // not class-preserving
    return realized.contains(pi);
}

nlohmann::ordered_json MonodromyResult::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(family));
    j["half1"] = group_to_json(half1.group, half1.id);
    j["half2"] = group_to_json(half2.group, half2.id);
    j["exceptional"] = exceptional;
    if (quarter_partition) {
        auto blocks = nlohmann::ordered_json::array();
        for (const auto& b : quarter_partition->blocks()) blocks.push_back(b);
        j["quarters"] = std::move(blocks);
    } else {
        j["quarters"] = nullptr;
    }
    j["notes"] = notes;
    return j;
}

bool VerifyReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const VerifyEntry& e) { return e.pass; });
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.pass; }));
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    auto list = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["check"] = e.description;
        je["pass"] = e.pass;
        je["details"] = e.details;
        list.push_back(std::move(je));
    }
    j["checks"] = std::move(list);
    j["failures"] = failures();
    j["pass"] = all_pass();
    return j;
}

namespace {

std::size_t young_order_by_formula(const Half& h) {
    std::size_t product = 1;
    const auto blocks = LabeledHalf::from_half(h).class_partition();
    for (const auto& b : blocks)
        for (std::size_t k = 2; k <= b.size(); ++k) product *= k;
    return product;
}

bool has_repeated_components(const Half& h) {
    const auto& c = h.components();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] == c[i - 1]) return true;
    return false;
}

} // namespace

VerifyReport verify_catalog(const Catalog& catalog) {
    VerifyReport rep;
    std::set<std::string> seen;

    for (const auto& fam : catalog.families) {
        for (const auto& extremal : fam.extremal) {
            const DerivativeDag dag = derive_dag(extremal);
            for (const auto& node : dag.nodes) {
                if (!seen.insert(node.text()).second) continue;
                const MonodromyResult r = monodromy_group(node, catalog);

                if (r.exceptional) {
                    const ExceptionEntry* ex = catalog.find_exception(node);
                    VerifyEntry e;
                    e.description = "exception " + node.text() + ": stabilizer is " +
                                    ex->named_group.name;
                    const auto expected_order = group_order_of(ex->named_group);
                    const bool order_ok =
                        !expected_order || r.half2.group.order() == *expected_order;
                    e.pass = r.half2.id == ex->named_group && order_ok;
                    e.details = "computed " + r.half2.id.name + " of order " +
                                std::to_string(r.half2.group.order());
                    rep.entries.push_back(std::move(e));
                } else if (has_repeated_components(node.half2)) {
                    VerifyEntry e;
                    e.description = "derivative " + node.text() + ": full Young product on half2";
                    const std::size_t expected = young_order_by_formula(node.half2);
                    e.pass = r.half2.group.order() == expected;
                    e.details = "computed " + r.half2.id.name + " of order " +
                                std::to_string(r.half2.group.order()) + ", expected order " +
                                std::to_string(expected);
                    rep.entries.push_back(std::move(e));
                }

                if (has_repeated_components(node.half1)) {
                    VerifyEntry e;
                    const std::size_t young1 = young_order_by_formula(node.half1);
                    if (fam.tag == Family::TwoRSurface) {
                        e.description = "derivative " + node.text() + ": half1 group trivial";
                        e.pass = r.half1.group.order() == 1 &&
                                 std::find(r.notes.begin(), r.notes.end(),
                                           std::string(kHalf1OpenQuestionNote)) != r.notes.end();
                    } else {
                        e.description =
                            "derivative " + node.text() + ": full Young product on half1";
                        e.pass = r.half1.group.order() == young1;
                    }
                    e.details = "computed " + r.half1.id.name + " of order " +
                                std::to_string(r.half1.group.order());
                    rep.entries.push_back(std::move(e));
                }
            }
        }
    }
    return rep;
}

} // namespace enriques
