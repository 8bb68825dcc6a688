#include "enriques/surface.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

#include "enriques/errors.hpp"

namespace enriques {

SurfaceComponent SurfaceComponent::orientable(int genus) {
    if (genus < 1)
        throw ValidationError("orientable genus must be >= 1 (the sphere is its own variant)");
    return {Shape::Orientable, genus};
}

SurfaceComponent SurfaceComponent::nonorientable(int crosscaps) {
    if (crosscaps < 1)
        throw ValidationError("nonorientable crosscap count must be >= 1");
    return {Shape::Nonorientable, crosscaps};
}

int SurfaceComponent::euler_characteristic() const {
    switch (shape_) {
    case Shape::Sphere: return 2;
    case Shape::Orientable: return 2 - 2 * param_;
    case Shape::Nonorientable: return 2 - param_;
    }
    return 0;
}

int SurfaceComponent::total_betti() const {
    // b0 + b1 + b2 over Z/2 = 4 - chi for closed surfaces, i.e. 2 + 2g or 2 + p.
    switch (shape_) {
    case Shape::Sphere: return 2;
    case Shape::Orientable: return 2 + 2 * param_;
    case Shape::Nonorientable: return 2 + param_;
    }
    return 0;
}

std::string SurfaceComponent::text() const {
    switch (shape_) {
    case Shape::Sphere: return "S";
    case Shape::Orientable: return "Sg" + std::to_string(param_);
    case Shape::Nonorientable: return "V" + std::to_string(param_);
    }
    return {};
}

bool canonical_less(const SurfaceComponent& a, const SurfaceComponent& b) {
    if (a.shape() != b.shape())
        return static_cast<int>(a.shape()) < static_cast<int>(b.shape());
    // Within a shape, larger parameter first (V3 before V1).
    switch (a.shape()) {
    case SurfaceComponent::Shape::Nonorientable: return a.crosscaps() > b.crosscaps();
    case SurfaceComponent::Shape::Orientable: return a.genus() > b.genus();
    case SurfaceComponent::Shape::Sphere: return false;
    }
    return false;
}

Half::Half(std::vector<SurfaceComponent> components) : components_(std::move(components)) {
    std::stable_sort(components_.begin(), components_.end(),
                     [](const SurfaceComponent& a, const SurfaceComponent& b) {
                         return canonical_less(a, b);
                     });
}

int Half::total_betti() const {
    int sum = 0;
    for (const auto& c : components_) sum += c.total_betti();
    return sum;
}

std::optional<int> Half::min_euler() const {
    if (components_.empty()) return std::nullopt;
    int m = std::numeric_limits<int>::max();
    for (const auto& c : components_) m = std::min(m, c.euler_characteristic());
    return m;
}

std::string Half::text() const {
    if (components_.empty()) return "0";
    std::string out;
    std::size_t i = 0;
    while (i < components_.size()) {
        std::size_t j = i;
        while (j < components_.size() && components_[j] == components_[i]) ++j;
        if (!out.empty()) out += " + ";
        const std::size_t count = j - i;
        if (count > 1) out += std::to_string(count);
        out += components_[i].text();
        i = j;
    }
    return out;
}

namespace {

class HalfParser {
public:
    explicit HalfParser(std::string_view in) : in_(in) {}

    Half parse() {
        skip_ws();
        if (pos_ >= in_.size())
            throw ParseError("empty half notation", pos_);
        if (in_[pos_] == '0') {
            ++pos_;
            skip_ws();
            if (pos_ < in_.size())
                throw ParseError("'0' denotes the empty half and stands alone", pos_);
            return Half{};
        }
        std::vector<SurfaceComponent> comps;
        parse_term(comps);
        skip_ws();
        while (pos_ < in_.size()) {
            if (in_[pos_] != '+')
                throw ParseError("expected '+' between terms", pos_);
            ++pos_;
            skip_ws();
            parse_term(comps);
            skip_ws();
        }
        return Half{std::move(comps)};
    }

private:
    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    long parse_nat(const char* what) {
        skip_ws();
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            throw ParseError(std::string("expected ") + what, pos_);
        long value = 0;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            value = value * 10 + (in_[pos_] - '0');
            if (value > 1'000'000)
                throw ParseError(std::string(what) + " out of range", pos_);
            ++pos_;
        }
        return value;
    }

    void parse_term(std::vector<SurfaceComponent>& out) {
        skip_ws();
        long count = 1;
        const std::size_t count_pos = pos_;
        if (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            count = parse_nat("component count");
            if (count == 0)
                throw ParseError("component count must be >= 1", count_pos);
        }
        skip_ws();
        if (pos_ >= in_.size())
            throw ParseError("expected component ('S', 'Sg<n>' or 'V<n>')", pos_);
        const char c = in_[pos_];
        SurfaceComponent comp = SurfaceComponent::sphere();
        if (c == 'V') {
            ++pos_;
            const std::size_t arg_pos = pos_;
            const long p = parse_nat("crosscap count after 'V'");
            if (p == 0)
                throw ParseError("'V0' is malformed; the sphere is written 'S'", arg_pos);
            comp = SurfaceComponent::nonorientable(static_cast<int>(p));
        } else if (c == 'S') {
            ++pos_;
            if (pos_ < in_.size() && in_[pos_] == 'g') {
                ++pos_;
                const std::size_t arg_pos = pos_;
                const long g = parse_nat("genus after 'Sg'");
                if (g == 0)
                    throw ParseError("'Sg0' is malformed; the sphere is written 'S'", arg_pos);
                comp = SurfaceComponent::orientable(static_cast<int>(g));
            }
        } else {
            throw ParseError("expected component ('S', 'Sg<n>' or 'V<n>')", pos_);
        }
        if (count > 64)
            throw ParseError("component count out of range", count_pos);
        for (long i = 0; i < count; ++i) out.push_back(comp);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

} // namespace

Half parse_half(std::string_view text) { return HalfParser(text).parse(); }

std::string HalfDecomposition::text() const {
    return "{" + half1.text() + "} u {" + half2.text() + "}";
}

std::string_view to_string(Kind k) {
    switch (k) {
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Elliptic: return "elliptic";
    case Kind::Undefined: return "undefined";
    }
    return "undefined";
}

Kind surface_kind(const HalfDecomposition& d) {
    const auto m1 = d.half1.min_euler();
    const auto m2 = d.half2.min_euler();
    if (!m1 && !m2) return Kind::Undefined;
    int m = std::numeric_limits<int>::max();
    if (m1) m = std::min(m, *m1);
    if (m2) m = std::min(m, *m2);
    if (m < 0) return Kind::Hyperbolic;
    if (m == 0) return Kind::Parabolic;
    return Kind::Elliptic;
}

LabeledHalf::LabeledHalf(std::vector<LabeledComponent> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& e : entries_) {
        if (!seen.insert(e.label).second)
            throw ValidationError("labels must be pairwise distinct: '" + e.label + "'");
    }
}

LabeledHalf LabeledHalf::from_half(const Half& h) {
    std::vector<LabeledComponent> entries;
    entries.reserve(h.size());
    int i = 0;
    for (const auto& c : h.components())
        entries.push_back({std::to_string(i++), c});
    return LabeledHalf{std::move(entries)};
}

Half LabeledHalf::to_half() const {
    std::vector<SurfaceComponent> comps;
    comps.reserve(entries_.size());
    for (const auto& e : entries_) comps.push_back(e.component);
    return Half{std::move(comps)};
}

std::vector<std::vector<int>> LabeledHalf::class_partition() const {
    // Block per distinct component value, blocks in canonical order.
    std::vector<int> order(entries_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return canonical_less(entries_[a].component, entries_[b].component);
    });
    std::vector<std::vector<int>> blocks;
    for (int pos : order) {
        if (!blocks.empty() &&
            entries_[blocks.back().front()].component == entries_[pos].component) {
            blocks.back().push_back(pos);
        } else {
            blocks.push_back({pos});
        }
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return blocks;
}

std::vector<std::vector<std::string>> homeomorphism_classes(const LabeledHalf& h) {
    std::vector<std::vector<std::string>> out;
    for (const auto& block : h.class_partition()) {
        std::vector<std::string> labels;
        labels.reserve(block.size());
        for (int pos : block) labels.push_back(h.entries()[pos].label);
        std::sort(labels.begin(), labels.end());
        out.push_back(std::move(labels));
    }
    return out;
}

} // namespace enriques
