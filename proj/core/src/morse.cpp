#include "enriques/morse.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace enriques {

std::string MorseStep::text() const {
    switch (kind) {
    case Kind::RemoveSphere:
        return "S->0";
    case Kind::ContractOrientableHandle:
        return "Sg" + std::to_string(from) + "->" + (from == 1 ? "S" : "Sg" + std::to_string(from - 1));
    case Kind::ContractNonorientableHandle:
        return "V" + std::to_string(from) + "->V" + std::to_string(from - 2);
    }
    return {};
}

std::string MorseStep::kind_name() const {
    switch (kind) {
    case Kind::RemoveSphere: return "remove-sphere";
    case Kind::ContractOrientableHandle: return "contract-orientable";
    case Kind::ContractNonorientableHandle: return "contract-nonorientable";
    }
    return {};
}

std::vector<std::pair<MorseStep, Half>> simplify_once(const Half& h) {
    std::vector<std::pair<MorseStep, Half>> out;
    const auto& comps = h.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i > 0 && comps[i] == comps[i - 1]) continue; // same move, same multiset
        const auto& c = comps[i];

        MorseStep step;
        SurfaceComponent replacement = SurfaceComponent::sphere();
        bool remove = false;
        switch (c.shape()) {
        case SurfaceComponent::Shape::Sphere:
            step = {MorseStep::Kind::RemoveSphere, 0};
            remove = true;
            break;
        case SurfaceComponent::Shape::Orientable:
            step = {MorseStep::Kind::ContractOrientableHandle, c.genus()};
            replacement = c.genus() == 1 ? SurfaceComponent::sphere()
                                         : SurfaceComponent::orientable(c.genus() - 1);
            break;
        case SurfaceComponent::Shape::Nonorientable:
            if (c.crosscaps() < 3) continue; // V1, V2: no move
            step = {MorseStep::Kind::ContractNonorientableHandle, c.crosscaps()};
            replacement = SurfaceComponent::nonorientable(c.crosscaps() - 2);
            break;
        }

        std::vector<SurfaceComponent> rest;
        rest.reserve(comps.size());
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (j == i) {
                if (!remove) rest.push_back(replacement);
                continue;
            }
            rest.push_back(comps[j]);
        }
        out.emplace_back(step, Half{std::move(rest)});
    }
    return out;
}

bool DerivativeDag::contains(const HalfDecomposition& d) const {
    return std::find(nodes.begin(), nodes.end(), d) != nodes.end();
}

DerivativeDag derive_dag(const HalfDecomposition& root) {
    DerivativeDag dag;
    dag.root = root;
    dag.nodes.push_back(root);

    std::map<std::string, int> index;
    index[root.half2.text()] = 0;

    for (std::size_t current = 0; current < dag.nodes.size(); ++current) {
        const Half h2 = dag.nodes[current].half2;
        for (auto& [step, next] : simplify_once(h2)) {
            const std::string key = next.text();
            auto it = index.find(key);
            int to;
            if (it == index.end()) {
                to = static_cast<int>(dag.nodes.size());
                index.emplace(key, to);
                dag.nodes.push_back({root.half1, next});
            } else {
                to = it->second;
            }
            dag.edges.push_back({static_cast<int>(current), to, step});
        }
    }
    return dag;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string DerivativeDag::to_dot() const {
    std::ostringstream os;
    os << "digraph morse_derivatives {\n";
    os << "  rankdir=LR;\n";
    os << "  label=" << dot_quote("half1 = " + root.half1.text()) << ";\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << "  n" << i << " [label=" << dot_quote(nodes[i].half2.text()) << "];\n";
    for (const auto& e : edges)
        os << "  n" << e.from << " -> n" << e.to
           << " [label=" << dot_quote(e.step.text()) << "];\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json DerivativeDag::to_json() const {
    nlohmann::ordered_json j;
    j["half1"] = root.half1.text();
    j["root"] = root.half2.text();
    auto node_list = nlohmann::ordered_json::array();
    for (const auto& n : nodes) node_list.push_back(n.half2.text());
    j["nodes"] = std::move(node_list);
    auto edge_list = nlohmann::ordered_json::array();
    for (const auto& e : edges) {
        nlohmann::ordered_json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["kind"] = e.step.kind_name();
        je["step"] = e.step.text();
        edge_list.push_back(std::move(je));
    }
    j["edges"] = std::move(edge_list);
    return j;
}

} // namespace enriques
