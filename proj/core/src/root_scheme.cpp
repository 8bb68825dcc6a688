#include "enriques/root_scheme.hpp"

#include <algorithm>
#include <cctype>

#include "enriques/errors.hpp"

namespace enriques {

std::string Mark::text() const {
    switch (kind) {
    case Kind::APoint: return "a:" + std::to_string(value);
    case Kind::DPoint: return "d:" + std::to_string(value);
    case Kind::CircleVertex: return "o";
    }
    return {};
}

bool operator<(const Mark& a, const Mark& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.value < b.value;
}

bool operator<(const RootScheme::Token& a, const RootScheme::Token& b) {
    if (a.segment != b.segment) return !a.segment; // gap < segment
    return std::lexicographical_compare(a.marks.begin(), a.marks.end(),
                                        b.marks.begin(), b.marks.end());
}

RootScheme::RootScheme(std::vector<Token> cycle, std::optional<int> grade)
    : cycle_(std::move(cycle)), grade_(grade) {
    if (grade_ && *grade_ < 1) throw ValidationError("grade must be >= 1");
    if (cycle_.empty()) return;
    int segments = 0;
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
        const auto& next = cycle_[(i + 1) % cycle_.size()];
        if (cycle_[i].segment == next.segment)
            throw ValidationError("segments and gaps must alternate around the cycle");
        if (cycle_[i].segment) ++segments;
        if (!cycle_[i].segment && !cycle_[i].marks.empty())
            throw ValidationError("gaps carry no marks");
    }
    if (segments == 0)
        throw ValidationError("a nonempty root scheme needs at least one segment");
}

int RootScheme::segment_count() const {
    int n = 0;
    for (const auto& t : cycle_) n += t.segment ? 1 : 0;
    return n;
}

std::vector<int> RootScheme::segment_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cycle_.size(); ++i)
        if (cycle_[i].segment) out.push_back(static_cast<int>(i));
    return out;
}

std::string RootScheme::text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
        if (i > 0) out += ' ';
        const auto& t = cycle_[i];
        if (!t.segment) {
            out += '.';
            continue;
        }
        out += '[';
        for (std::size_t m = 0; m < t.marks.size(); ++m) {
            if (m > 0) out += ' ';
            out += t.marks[m].text();
        }
        out += ']';
    }
    out += ')';
    if (grade_) out += "@" + std::to_string(*grade_);
    return out;
}

namespace {

class RootSchemeParser {
public:
    explicit RootSchemeParser(std::string_view in) : in_(in) {}

    RootScheme parse() {
        expect('(');
        std::vector<RootScheme::Token> cycle;
        while (peek() != ')') {
            if (peek() == '\0') throw ParseError("unterminated root scheme", pos_);
            cycle.push_back(parse_token());
        }
        ++pos_; // ')'
        std::optional<int> grade;
        if (peek() == '@') {
            ++pos_;
            grade = static_cast<int>(parse_nat("grade"));
            if (*grade < 1) throw ParseError("grade must be >= 1", pos_);
        }
        skip_ws();
        if (pos_ < in_.size()) throw ParseError("unexpected trailing input", pos_);
        return RootScheme{std::move(cycle), grade};
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
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long parse_nat(const char* what) {
        skip_ws();
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            throw ParseError(std::string("expected ") + what, pos_);
        long v = 0;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            v = v * 10 + (in_[pos_] - '0');
            if (v > 10'000) throw ParseError(std::string(what) + " out of range", pos_);
            ++pos_;
        }
        return v;
    }

    RootScheme::Token parse_token() {
        const char c = peek();
        if (c == '.') {
            ++pos_;
            return {};
        }
        if (c != '[') throw ParseError("expected '[' or '.'", pos_);
        ++pos_;
        RootScheme::Token t;
        t.segment = true;
        while (peek() != ']') {
            if (peek() == '\0') throw ParseError("unterminated segment", pos_);
            t.marks.push_back(parse_mark());
        }
        ++pos_; // ']'
        return t;
    }

    Mark parse_mark() {
        const char c = peek();
        const std::size_t start = pos_;
        if (c == 'o') {
            ++pos_;
            return {Mark::Kind::CircleVertex, 0};
        }
        if (c == 'a' || c == 'd') {
            ++pos_;
            expect(':');
            const long v = parse_nat("multiplicity");
            if (c == 'a') {
                if (v < 1) throw ParseError("a-point multiplicity must be >= 1", start);
                return {Mark::Kind::APoint, static_cast<int>(v)};
            }
            if (v < 2) throw ParseError("d-point multiplicity must be >= 2", start);
            return {Mark::Kind::DPoint, static_cast<int>(v)};
        }
        throw ParseError("expected mark ('a:<n>', 'd:<n>' or 'o')", pos_);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

} // namespace

RootScheme parse_root_scheme(std::string_view text) { return RootSchemeParser(text).parse(); }

RootScheme rotate(const RootScheme& s, int shift) {
    const auto& c = s.cycle();
    const int n = static_cast<int>(c.size());
    if (n == 0) return s;
    std::vector<RootScheme::Token> out(c.size());
    for (int i = 0; i < n; ++i) out[i] = c[static_cast<std::size_t>(((i + shift) % n + n) % n)];
    return RootScheme{std::move(out), s.grade()};
}

RootScheme reflect(const RootScheme& s, int axis) {
    const auto& c = s.cycle();
    const int n = static_cast<int>(c.size());
    if (n == 0) return s;
    std::vector<RootScheme::Token> out(c.size());
    for (int i = 0; i < n; ++i) {
        RootScheme::Token t = c[static_cast<std::size_t>(((axis - i) % n + n) % n)];
        std::reverse(t.marks.begin(), t.marks.end());
        out[i] = std::move(t);
    }
    return RootScheme{std::move(out), s.grade()};
}

namespace {

bool cycle_less(const std::vector<RootScheme::Token>& a, const std::vector<RootScheme::Token>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

RootScheme canonical_form(const RootScheme& s) {
    const int n = static_cast<int>(s.length());
    if (n == 0) return s;
    RootScheme best = s;
    for (int r = 0; r < n; ++r) {
        RootScheme rot = rotate(s, r);
        if (cycle_less(rot.cycle(), best.cycle())) best = rot;
        RootScheme ref = reflect(rot, 0);
        if (cycle_less(ref.cycle(), best.cycle())) best = ref;
    }
    return best;
}

std::string CyclicSymmetry::text() const {
    return (kind == Kind::Rotation ? "rot " : "refl ") + std::to_string(amount);
}

SchemeSymmetries symmetry_group(const RootScheme& s) {
    SchemeSymmetries out;
    const int n = static_cast<int>(s.length());
    const auto segs = s.segment_positions();
    const int m = static_cast<int>(segs.size());

    std::vector<int> seg_index(static_cast<std::size_t>(std::max(n, 1)), -1);
    for (int i = 0; i < m; ++i) seg_index[static_cast<std::size_t>(segs[i])] = i;

    std::vector<Permutation> induced;
    auto record = [&](CyclicSymmetry sym, auto&& position_map) {
        out.symmetries.push_back(sym);
        std::vector<int> images(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            images[static_cast<std::size_t>(i)] = seg_index[static_cast<std::size_t>(position_map(segs[i]))];
        induced.emplace_back(std::move(images));
    };

    if (n == 0) {
        out.symmetries.push_back({CyclicSymmetry::Kind::Rotation, 0, 0});
        out.segment_group = PermGroup::trivial(0);
        return out;
    }

    for (int r = 0; r < n; ++r) {
        if (rotate(s, r).cycle() == s.cycle())
            record({CyclicSymmetry::Kind::Rotation, r, n},
                   [&](int p) { return ((p - r) % n + n) % n; });
    }
    for (int k = 0; k < n; ++k) {
        if (reflect(s, k).cycle() == s.cycle())
            record({CyclicSymmetry::Kind::Reflection, k, n},
                   [&](int p) { return ((k - p) % n + n) % n; });
    }

    out.segment_group = PermGroup::from_elements(m, std::move(induced));
    return out;
}

RootScheme remove_segments(const RootScheme& s, const std::set<int>& segment_indices) {
    const auto segs = s.segment_positions();
    for (int idx : segment_indices) {
        if (idx < 0 || idx >= static_cast<int>(segs.size()))
            throw ValidationError("segment index out of range");
        for (const auto& mark : s.cycle()[static_cast<std::size_t>(segs[static_cast<std::size_t>(idx)])].marks)
            if (mark.kind == Mark::Kind::CircleVertex)
                throw ValidationError("cannot remove a segment containing a circle vertex");
    }
    std::vector<RootScheme::Token> kept;
    int seg_seen = 0;
    for (const auto& t : s.cycle()) {
        if (t.segment && segment_indices.count(seg_seen++)) continue;
        kept.push_back(t);
    }
    // Merge runs of gaps left behind, cyclically.
    std::vector<RootScheme::Token> merged;
    for (const auto& t : kept) {
        if (!t.segment && !merged.empty() && !merged.back().segment) continue;
        merged.push_back(t);
    }
    while (merged.size() > 1 && !merged.front().segment && !merged.back().segment)
        merged.pop_back();
    if (merged.size() == 1 && !merged.front().segment) merged.clear();
    return RootScheme{std::move(merged), s.grade()};
}

RootScheme segments_scheme(int segments, bool vertex_segment) {
    if (segments < 0) throw ValidationError("segment count must be >= 0");
    std::vector<RootScheme::Token> cycle;
    if (vertex_segment) {
        cycle.push_back({true, {Mark{Mark::Kind::CircleVertex, 0}}});
        cycle.push_back({});
    }
    for (int i = 0; i < segments; ++i) {
        cycle.push_back({true, {}});
        cycle.push_back({});
    }
    return RootScheme{std::move(cycle), std::nullopt};
}

} // namespace enriques
