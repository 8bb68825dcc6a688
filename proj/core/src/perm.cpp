#include "enriques/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "enriques/errors.hpp"

namespace enriques {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
            throw ValidationError("image table is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    auto p = identity(degree);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
    auto p = identity(degree);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos);
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected point index in cycle", pos);
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v >= degree) throw ParseError("point index exceeds degree", pos);
            cycle.push_back(v);
            skip_ws();
        }
        if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
        ++pos; // ')'
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            if (p.images_[from] != from)
                throw ParseError("point repeated across cycles", pos);
            p.images_[from] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(p.images_));
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw ValidationError("degree mismatch in composition");
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(im));
}

int Permutation::order() const {
    int result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(images_[j]);
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::cycle_text() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) {
            seen[i] = true;
            continue;
        }
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(images_[j]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

namespace {

std::vector<Permutation> closure(int degree, const std::vector<Permutation>& generators) {
    std::set<Permutation> elems;
    std::vector<Permutation> queue;
    auto id = Permutation::identity(degree);
    elems.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        const Permutation g = queue.back();
        queue.pop_back();
        for (const auto& h : generators) {
            Permutation gh = g.compose(h);
            if (elems.insert(gh).second) queue.push_back(std::move(gh));
        }
    }
    return {elems.begin(), elems.end()};
}

} // namespace

PermGroup PermGroup::trivial(int degree) {
    return PermGroup(degree, {Permutation::identity(degree)}, {});
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators) {
    std::vector<Permutation> gens;
    for (auto& g : generators) {
        if (g.degree() != degree)
            throw ValidationError("generator degree mismatch");
        if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(std::move(g));
    }
    auto elems = closure(degree, gens);
    return PermGroup(degree, std::move(elems), std::move(gens));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
    for (const auto& e : elements)
        if (e.degree() != degree) throw ValidationError("element degree mismatch");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw ValidationError("a group needs at least the identity");

    // Greedy generating set; the closure it spans must reproduce the
    // input exactly, which verifies the input was closed.
    std::vector<Permutation> gens;
    std::vector<Permutation> span = {Permutation::identity(degree)};
    for (const auto& e : elements) {
        if (std::binary_search(span.begin(), span.end(), e)) continue;
        gens.push_back(e);
        span = closure(degree, gens);
        std::sort(span.begin(), span.end());
    }
    if (span != elements)
        throw ValidationError("element set is not closed under composition");
    return PermGroup(degree, std::move(elements), std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_)
        throw ValidationError("degree mismatch in membership query");
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree_) return false;
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Permutation& e) { return g.contains(e); });
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j)
            if (elements_[i].compose(elements_[j]) != elements_[j].compose(elements_[i]))
                return false;
    return true;
}

std::vector<int> PermGroup::element_orders() const {
    std::vector<int> orders;
    orders.reserve(elements_.size());
    for (const auto& e : elements_) orders.push_back(e.order());
    std::sort(orders.begin(), orders.end());
    return orders;
}

namespace {

std::map<int, int> order_histogram(const std::vector<int>& orders) {
    std::map<int, int> h;
    for (int o : orders) ++h[o];
    return h;
}

} // namespace

GroupId identify(const PermGroup& g) {
    const std::size_t n = g.order();
    const bool abelian = g.is_abelian();
    const auto hist = order_histogram(g.element_orders());
    auto count = [&](int k) {
        auto it = hist.find(k);
        return it == hist.end() ? 0 : it->second;
    };

    switch (n) {
    case 1: return {"1"};
    case 2: return {"Z2"};
    case 3: return {"Z3"};
    case 4: return count(4) > 0 ? GroupId{"Z4"} : GroupId{"Z2xZ2"};
    case 6: return abelian ? GroupId{"Z6"} : GroupId{"S3"};
    case 8:
        if (abelian) {
            if (count(8) > 0) return {"Z8"};
            if (count(4) > 0) return {"Z4xZ2"};
            return {"Z2^3"};
        }
        return count(2) == 5 ? GroupId{"D8"} : GroupId{"Q8"};
    case 12:
        if (!abelian && count(2) == 3 && count(3) == 8) return {"A4"};
        return {"Z12-class"};
    case 24:
        if (!abelian && count(2) == 9 && count(3) == 8 && count(4) == 6) return {"S4"};
        return GroupId::other(n);
    default:
        return GroupId::other(n);
    }
}

std::optional<std::string> classical_alias(const GroupId& id) {
    if (id.name == "Z2") return "S2";
    if (id.name == "1") return "trivial";
    return std::nullopt;
}

std::optional<std::size_t> group_order_of(const GroupId& id) {
    static const std::map<std::string, std::size_t> orders = {
        {"1", 1},    {"Z2", 2},   {"Z3", 3},    {"Z4", 4},  {"Z2xZ2", 4},
        {"S3", 6},   {"Z6", 6},   {"Z8", 8},    {"Z4xZ2", 8}, {"Z2^3", 8},
        {"D8", 8},   {"Q8", 8},   {"A4", 12},   {"S4", 24},
    };
    auto it = orders.find(id.name);
    if (it == orders.end()) return std::nullopt;
    return it->second;
}

bool is_known_group_name(std::string_view name) {
    return group_order_of(GroupId{std::string(name)}).has_value() || name == "Z12-class";
}

UnorderedPartition::UnorderedPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    std::set<int> seen;
    for (auto& b : blocks_) {
        if (b.empty()) throw ValidationError("partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (int p : b) {
            if (p < 0) throw ValidationError("partition points must be >= 0");
            if (!seen.insert(p).second)
                throw ValidationError("partition blocks must be disjoint");
        }
    }
    std::sort(blocks_.begin(), blocks_.end());
}

bool UnorderedPartition::has_block(const std::vector<int>& sorted_block) const {
    return std::binary_search(blocks_.begin(), blocks_.end(), sorted_block);
}

int UnorderedPartition::max_point() const {
    int m = -1;
    for (const auto& b : blocks_)
        for (int p : b) m = std::max(m, p);
    return m;
}

PermGroup young_group(const LabeledHalf& h) {
    const int n = static_cast<int>(h.size());
    std::vector<Permutation> gens;
    for (const auto& block : h.class_partition())
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            gens.push_back(Permutation::transposition(n, block[i], block[i + 1]));
    return PermGroup::generate(n, std::move(gens));
}

PermGroup partition_stabilizer(const PermGroup& g, const UnorderedPartition& p) {
    if (p.max_point() >= g.degree())
        throw ValidationError("partition names a point outside the group's domain");
    std::vector<Permutation> kept;
    for (const auto& pi : g.elements()) {
        bool ok = true;
        for (const auto& block : p.blocks()) {
            std::vector<int> image;
            image.reserve(block.size());
            for (int pt : block) image.push_back(pi(pt));
            std::sort(image.begin(), image.end());
            if (!p.has_block(image)) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(pi);
    }
    return PermGroup::from_elements(g.degree(), std::move(kept));
}

bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }

nlohmann::ordered_json group_to_json(const PermGroup& g, const GroupId& id) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["id"] = id.name;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& p : g.generators()) gens.push_back(p.cycle_text());
    j["generators"] = std::move(gens);
    return j;
}

} // namespace enriques
