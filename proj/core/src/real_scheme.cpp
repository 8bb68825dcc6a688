#include "enriques/real_scheme.hpp"

#include <algorithm>
#include <cctype>

#include "enriques/errors.hpp"
#include "enriques/surface.hpp"

namespace enriques {

OvalNode::OvalNode(std::vector<OvalNode> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end(),
              [](const OvalNode& a, const OvalNode& b) { return canonical_less(a, b); });
}

int OvalNode::depth() const {
    int d = 0;
    for (const auto& c : children_) d = std::max(d, c.depth());
    return d + 1;
}

int OvalNode::oval_count() const {
    int n = 1;
    for (const auto& c : children_) n += c.oval_count();
    return n;
}

namespace {

std::string body_text_of(const std::vector<OvalNode>& items, bool has_j) {
    if (items.empty() && !has_j) return "0";
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " u ";
        out += part;
    };
    if (has_j) append("J");
    std::size_t i = 0;
    while (i < items.size()) {
        if (items[i].empty()) {
            std::size_t j = i;
            while (j < items.size() && items[j].empty()) ++j;
            append(std::to_string(j - i));
            i = j;
        } else {
            append(items[i].item_text());
            ++i;
        }
    }
    return out;
}

} // namespace

std::string OvalNode::item_text() const {
    if (children_.empty()) return "1";
    return "1<" + body_text_of(children_, false) + ">";
}

bool canonical_less(const OvalNode& a, const OvalNode& b) {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    if (a.oval_count() != b.oval_count()) return a.oval_count() < b.oval_count();
    return a.item_text() < b.item_text();
}

OvalForest::OvalForest(std::vector<OvalNode> roots, bool has_j)
    : roots_(std::move(roots)), has_j_(has_j) {
    std::sort(roots_.begin(), roots_.end(),
              [](const OvalNode& a, const OvalNode& b) { return canonical_less(a, b); });
}

int OvalForest::oval_count() const {
    int n = 0;
    for (const auto& r : roots_) n += r.oval_count();
    return n;
}

int OvalForest::depth() const {
    int d = 0;
    for (const auto& r : roots_) d = std::max(d, r.depth());
    return d;
}

std::string OvalForest::body_text() const { return body_text_of(roots_, has_j_); }

Sigma2Scheme::Sigma2Scheme(std::vector<OvalForest> zones) : zones_(std::move(zones)) {
    if (zones_.empty())
        throw ValidationError("a quadric-surface scheme needs at least one zone");
}

int Sigma2Scheme::oval_count() const {
    int n = 0;
    for (const auto& z : zones_) n += z.oval_count();
    return n;
}

Sigma2Scheme Sigma2Scheme::reversed() const {
    std::vector<OvalForest> rev(zones_.rbegin(), zones_.rend());
    return Sigma2Scheme{std::move(rev)};
}

namespace {

class SchemeParser {
public:
    explicit SchemeParser(std::string_view in) : in_(in) {}

    Scheme parse() {
        expect('<');
        std::vector<OvalForest> zones;
        zones.push_back(parse_body(/*allow_j=*/true, /*allow_empty=*/true));
        bool barred = false;
        while (peek() == '|') {
            ++pos_;
            barred = true;
            zones.push_back(parse_body(true, true));
        }
        expect('>');
        skip_ws();
        if (pos_ < in_.size()) throw ParseError("unexpected trailing input", pos_);
        if (!barred) {
            if (zones.front().empty() && !explicit_zero_)
                throw ParseError("the empty scheme is written <0>", pos_);
            return zones.front();
        }
        return Sigma2Scheme{std::move(zones)};
    }

private:
    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long parse_nat() {
        skip_ws();
        long v = 0;
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            throw ParseError("expected a number", pos_);
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            v = v * 10 + (in_[pos_] - '0');
            if (v > 10'000) throw ParseError("oval count out of range", pos_);
            ++pos_;
        }
        return v;
    }

    // Body ::= "0" | "J" ["u" Items] | Items ; Items ::= Item ("u" Item)*
    OvalForest parse_body(bool allow_j, bool allow_empty) {
        std::vector<OvalNode> items;
        bool has_j = false;
        char c = peek();
        if (c == '>' || c == '|' || c == '\0') {
            if (!allow_empty)
                throw ParseError("empty body (write 0 for no ovals)", pos_);
            return OvalForest{{}, false};
        }
        if (c == '0') {
            ++pos_;
            explicit_zero_ = true;
            c = peek();
            if (c != '>' && c != '|')
                throw ParseError("'0' denotes an empty zone and stands alone", pos_);
            return OvalForest{{}, false};
        }
        if (c == 'J') {
            if (!allow_j)
                throw ParseError("a one-sided component cannot lie inside an oval", pos_);
            ++pos_;
            has_j = true;
            if (peek() != 'u') return OvalForest{{}, true};
            ++pos_; // 'u'
        }
        parse_item(items);
        while (peek() == 'u') {
            ++pos_;
            parse_item(items);
        }
        return OvalForest{std::move(items), has_j};
    }

    // Item ::= nat | "1" "<" Body ">"
    void parse_item(std::vector<OvalNode>& items) {
        skip_ws();
        const std::size_t start = pos_;
        const long n = parse_nat();
        if (peek() == '<') {
            if (n != 1)
                throw ParseError("only '1<...>' may carry a nested body", start);
            ++pos_;
            OvalForest inner = parse_body(/*allow_j=*/false, /*allow_empty=*/false);
            expect('>');
            items.emplace_back(std::vector<OvalNode>(inner.roots()));
            return;
        }
        if (n == 0)
            throw ParseError("an item must contain at least one oval", start);
        for (long i = 0; i < n; ++i) items.emplace_back();
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    bool explicit_zero_ = false;
};

} // namespace

Scheme parse_scheme(std::string_view text) { return SchemeParser(text).parse(); }

std::string canonical_text(const OvalForest& f) { return "<" + f.body_text() + ">"; }

std::string canonical_text(const Sigma2Scheme& s) {
    const bool all_empty = std::all_of(s.zones().begin(), s.zones().end(),
                                       [](const OvalForest& z) { return z.empty(); });
    std::string out = "<";
    if (all_empty && s.zones().size() >= 3) {
        // The classical spelling for bar-only schemes, e.g. <|||>.
        out.append(static_cast<std::size_t>(s.bars()), '|');
    } else {
        for (std::size_t i = 0; i < s.zones().size(); ++i) {
            if (i > 0) out += '|';
            out += s.zones()[i].body_text();
        }
    }
    out += '>';
    return out;
}

std::string canonical_text(const Scheme& s) {
    return std::visit([](const auto& v) { return canonical_text(v); }, s);
}

bool reversal_equivalent(const Sigma2Scheme& a, const Sigma2Scheme& b) {
    return b == a || b == a.reversed();
}

std::string_view to_string(SchemeFamily f) {
    switch (f) {
    case SchemeFamily::PlaneQuartic: return "plane-quartic";
    case SchemeFamily::Sigma2Cubic: return "sigma2-cubic";
    case SchemeFamily::P4QuadricPair: return "p4-quadric-pair";
    }
    return {};
}

const SchemeClassRecord* catalog_lookup(const RigidIsotopyCatalog& cat, std::string_view key) {
    std::string canon;
    if (cat.family == SchemeFamily::P4QuadricPair) {
        canon = parse_half(key).text();
    } else {
        const Scheme s = parse_scheme(key);
        const bool plane = std::holds_alternative<OvalForest>(s);
        if (plane != (cat.family == SchemeFamily::PlaneQuartic)) return nullptr;
        canon = canonical_text(s);
    }
    for (const auto& rec : cat.classes)
        if (rec.key == canon) return &rec;
    return nullptr;
}

} // namespace enriques
