#include "enriques/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "enriques/errors.hpp"
#include "enriques/morse.hpp"

namespace enriques {

using nlohmann::ordered_json;

const FamilyEntry* Catalog::family(Family tag) const {
    for (const auto& f : families)
        if (f.tag == tag) return &f;
    return nullptr;
}

const RigidIsotopyCatalog* Catalog::scheme_catalog(SchemeFamily f) const {
    for (const auto& c : scheme_catalogs)
        if (c.family == f) return &c;
    return nullptr;
}

const ExceptionEntry* Catalog::find_exception(const HalfDecomposition& d) const {
    for (const auto& f : families)
        for (const auto& ex : f.exceptions)
            if (ex.decomposition == d) return &ex;
    return nullptr;
}

const RootSchemeEntry* Catalog::root_scheme(std::string_view key) const {
    for (const auto& r : root_schemes)
        if (r.key == key) return &r;
    return nullptr;
}

namespace {

const ordered_json& require_field(const ordered_json& j, const char* name, const char* where) {
    auto it = j.find(name);
    if (it == j.end())
        throw ValidationError(std::string(where) + ": missing field '" + name + "'");
    return *it;
}

std::string require_string(const ordered_json& j, const char* name, const char* where) {
    const auto& v = require_field(j, name, where);
    if (!v.is_string())
        throw ValidationError(std::string(where) + ": field '" + name + "' must be a string");
    return v.get<std::string>();
}

UnorderedPartition parse_quarters(const ordered_json& v, const char* name, const char* where,
                                  std::size_t half_size) {
    if (!v.is_array())
        throw ValidationError(std::string(where) + ": field '" + name +
                              "' must be an array of index arrays");
    std::vector<std::vector<int>> blocks;
    for (const auto& jb : v) {
        if (!jb.is_array())
            throw ValidationError(std::string(where) + ": quarter blocks must be arrays");
        std::vector<int> block;
        for (const auto& ji : jb) {
            if (!ji.is_number_integer())
                throw ValidationError(std::string(where) + ": quarter entries must be indices");
            block.push_back(ji.get<int>());
        }
        blocks.push_back(std::move(block));
    }
    UnorderedPartition p;
    try {
        p = UnorderedPartition{std::move(blocks)};
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(where) + ": " + e.what());
    }
    if (p.max_point() >= static_cast<int>(half_size))
        throw ValidationError(std::string(where) + ": field '" + name +
                              "' indexes a component outside the half");
    return p;
}

void validate_scheme_catalog(const RigidIsotopyCatalog& cat) {
    const char* where = "scheme_catalogs";
    const std::size_t expected = cat.family == SchemeFamily::PlaneQuartic ? 6
                                 : cat.family == SchemeFamily::Sigma2Cubic ? 11
                                                                           : 7;
    if (cat.classes.size() != expected)
        throw ValidationError(std::string(where) + ": the " + std::string(to_string(cat.family)) +
                              " catalog must list exactly " + std::to_string(expected) +
                              " classes, got " + std::to_string(cat.classes.size()));
    std::set<std::string> keys;
    for (const auto& rec : cat.classes) {
        if (!keys.insert(rec.key).second)
            throw ValidationError(std::string(where) + ": duplicate class key '" + rec.key + "'");
        if (cat.family == SchemeFamily::P4QuadricPair) {
            if (parse_half(rec.key).text() != rec.key)
                throw ValidationError(std::string(where) + ": key '" + rec.key +
                                      "' is not canonical half notation");
            continue;
        }
        const Scheme s = parse_scheme(rec.key);
        if (canonical_text(s) != rec.key)
            throw ValidationError(std::string(where) + ": key '" + rec.key +
                                  "' is not canonical scheme notation");
        const bool plane = std::holds_alternative<OvalForest>(s);
        if (plane != (cat.family == SchemeFamily::PlaneQuartic))
            throw ValidationError(std::string(where) + ": key '" + rec.key +
                                  "' has the wrong shape for its family");
        if (cat.family == SchemeFamily::PlaneQuartic) {
            const auto& f = std::get<OvalForest>(s);
            if (f.depth() > 2 || f.oval_count() > 4)
                throw ValidationError(std::string(where) + ": '" + rec.key +
                                      "' cannot be a nonsingular quartic scheme");
        }
    }
}

void validate_catalog(const Catalog& c) {
    std::set<Family> tags;
    std::set<std::string> decompositions;
    for (const auto& fam : c.families) {
        const char* where = "families";
        if (fam.tag == Family::Unclassified)
            throw ValidationError(std::string(where) + ": tag must name one of the three families");
        if (!tags.insert(fam.tag).second)
            throw ValidationError(std::string(where) + ": duplicate family tag");

        for (const auto& d : fam.extremal) {
            if (classify_family(d) != fam.tag)
                throw ValidationError(std::string(where) + ": extremal entry " + d.text() +
                                      " does not belong to family '" +
                                      std::string(to_string(fam.tag)) + "'");
            if (!decompositions.insert(d.text()).second)
                throw ValidationError(std::string(where) + ": duplicate extremal entry " +
                                      d.text());
        }

        std::set<std::string> exception_keys;
        for (const auto& ex : fam.exceptions) {
            const std::string text = ex.decomposition.text();
            if (!exception_keys.insert(text).second)
                throw ValidationError(std::string(where) + ": duplicate exception " + text);
            if (!is_known_group_name(ex.named_group.name))
                throw ValidationError(std::string(where) + ": unknown group name '" +
                                      ex.named_group.name + "' in exception " + text);
            const bool reachable = std::any_of(
                fam.extremal.begin(), fam.extremal.end(), [&](const HalfDecomposition& root) {
                    return root.half1 == ex.decomposition.half1 &&
                           derive_dag(root).contains(ex.decomposition);
                });
            if (!reachable)
                throw ValidationError(std::string(where) + ": exception " + text +
                                      " is not a derivative of any extremal entry of its family");
        }
    }

    std::set<SchemeFamily> scheme_families;
    for (const auto& sc : c.scheme_catalogs) {
        if (!scheme_families.insert(sc.family).second)
            throw ValidationError("scheme_catalogs: duplicate family");
        validate_scheme_catalog(sc);
    }

    std::set<std::string> root_keys;
    for (const auto& r : c.root_schemes)
        if (!root_keys.insert(r.key).second)
            throw ValidationError("root_schemes: duplicate key '" + r.key + "'");
}

SchemeFamily scheme_family_from_field(const std::string& name) {
    if (name == "plane_quartic") return SchemeFamily::PlaneQuartic;
    if (name == "sigma2_cubic") return SchemeFamily::Sigma2Cubic;
    if (name == "p4_quadric_pair") return SchemeFamily::P4QuadricPair;
    throw ValidationError("scheme_catalogs: unknown family field '" + name + "'");
}

std::string scheme_family_field(SchemeFamily f) {
    switch (f) {
    case SchemeFamily::PlaneQuartic: return "plane_quartic";
    case SchemeFamily::Sigma2Cubic: return "sigma2_cubic";
    case SchemeFamily::P4QuadricPair: return "p4_quadric_pair";
    }
    return {};
}

} // namespace

Catalog parse_catalog(std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object()) throw ValidationError("catalog: top level must be an object");

    Catalog c;
    c.version = require_string(doc, "version", "catalog");

    if (auto fit = doc.find("families"); fit != doc.end()) {
        if (!fit->is_array()) throw ValidationError("catalog: 'families' must be an array");
        for (const auto& jf : *fit) {
            FamilyEntry fam;
            const std::string tag = require_string(jf, "tag", "families");
            const auto parsed_tag = family_from_string(tag);
            if (!parsed_tag)
                throw ValidationError("families: unknown tag '" + tag + "'");
            fam.tag = *parsed_tag;

            if (auto xit = jf.find("extremal"); xit != jf.end()) {
                if (!xit->is_array())
                    throw ValidationError("families: 'extremal' must be an array");
                for (const auto& jx : *xit) {
                    if (!jx.is_array() || jx.size() != 2 || !jx[0].is_string() ||
                        !jx[1].is_string())
                        throw ValidationError(
                            "families: extremal entries must be [half1, half2] text pairs");
                    fam.extremal.push_back({parse_half(jx[0].get<std::string>()),
                                            parse_half(jx[1].get<std::string>())});
                }
            }

            if (auto eit = jf.find("exceptions"); eit != jf.end()) {
                if (!eit->is_array())
                    throw ValidationError("families: 'exceptions' must be an array");
                for (const auto& je : *eit) {
                    ExceptionEntry ex;
                    ex.decomposition.half1 = parse_half(require_string(je, "half1", "exceptions"));
                    ex.decomposition.half2 = parse_half(require_string(je, "half2", "exceptions"));
                    ex.quarters_half2 =
                        parse_quarters(require_field(je, "quarters2", "exceptions"), "quarters2",
                                       "exceptions", ex.decomposition.half2.size());
                    ex.named_group = GroupId{require_string(je, "group", "exceptions")};
                    if (auto qit = je.find("quarters1"); qit != je.end())
                        ex.quarters_half1 = parse_quarters(*qit, "quarters1", "exceptions",
                                                           ex.decomposition.half1.size());
                    fam.exceptions.push_back(std::move(ex));
                }
            }
            c.families.push_back(std::move(fam));
        }
    }

    if (auto sit = doc.find("scheme_catalogs"); sit != doc.end()) {
        if (!sit->is_object())
            throw ValidationError("catalog: 'scheme_catalogs' must be an object");
        for (const auto& [field, jclasses] : sit->items()) {
            RigidIsotopyCatalog rc;
            rc.family = scheme_family_from_field(field);
            if (!jclasses.is_array())
                throw ValidationError("scheme_catalogs: each family must map to an array");
            for (const auto& jc : jclasses) {
                SchemeClassRecord rec;
                rec.key = require_string(jc, "key", "scheme_catalogs");
                if (auto ait = jc.find("all_oval_permutations_rigid"); ait != jc.end()) {
                    if (!ait->is_boolean())
                        throw ValidationError(
                            "scheme_catalogs: 'all_oval_permutations_rigid' must be a boolean");
                    rec.all_oval_permutations_rigid = ait->get<bool>();
                }
                rc.classes.push_back(std::move(rec));
            }
            c.scheme_catalogs.push_back(std::move(rc));
        }
    }

    if (auto rit = doc.find("root_schemes"); rit != doc.end()) {
        if (!rit->is_array()) throw ValidationError("catalog: 'root_schemes' must be an array");
        for (const auto& jr : *rit) {
            RootSchemeEntry entry;
            entry.key = require_string(jr, "key", "root_schemes");
            entry.scheme = parse_root_scheme(require_string(jr, "scheme", "root_schemes"));
            if (auto pit = jr.find("provisional"); pit != jr.end()) {
                if (!pit->is_boolean())
                    throw ValidationError("root_schemes: 'provisional' must be a boolean");
                entry.provisional = pit->get<bool>();
            }
            c.root_schemes.push_back(std::move(entry));
        }
    }

    validate_catalog(c);
    return c;
}

Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open catalog file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

std::string catalog_text(const Catalog& c) {
    ordered_json doc;
    doc["version"] = c.version;

    auto jfams = ordered_json::array();
    for (const auto& fam : c.families) {
        ordered_json jf;
        jf["tag"] = std::string(to_string(fam.tag));
        auto jx = ordered_json::array();
        for (const auto& d : fam.extremal)
            jx.push_back(ordered_json::array({d.half1.text(), d.half2.text()}));
        jf["extremal"] = std::move(jx);
        auto jes = ordered_json::array();
        for (const auto& ex : fam.exceptions) {
            ordered_json je;
            je["half1"] = ex.decomposition.half1.text();
            je["half2"] = ex.decomposition.half2.text();
            je["quarters2"] = ex.quarters_half2.blocks();
            je["group"] = ex.named_group.name;
            if (ex.quarters_half1) je["quarters1"] = ex.quarters_half1->blocks();
            jes.push_back(std::move(je));
        }
        jf["exceptions"] = std::move(jes);
        jfams.push_back(std::move(jf));
    }
    doc["families"] = std::move(jfams);

    ordered_json jschemes = ordered_json::object();
    for (const auto& sc : c.scheme_catalogs) {
        auto jclasses = ordered_json::array();
        for (const auto& rec : sc.classes) {
            ordered_json jc;
            jc["key"] = rec.key;
            if (rec.all_oval_permutations_rigid) jc["all_oval_permutations_rigid"] = true;
            jclasses.push_back(std::move(jc));
        }
        jschemes[scheme_family_field(sc.family)] = std::move(jclasses);
    }
    doc["scheme_catalogs"] = std::move(jschemes);

    auto jroots = ordered_json::array();
    for (const auto& r : c.root_schemes) {
        ordered_json jr;
        jr["key"] = r.key;
        jr["scheme"] = r.scheme.text();
        if (r.provisional) jr["provisional"] = true;
        jroots.push_back(std::move(jr));
    }
    doc["root_schemes"] = std::move(jroots);

    return doc.dump(2) + "\n";
}

const Catalog& embedded_default() {
    static const Catalog catalog = parse_catalog(embedded_default_text());
    return catalog;
}

} // namespace enriques
