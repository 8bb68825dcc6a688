#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "enriques/surface.hpp"

namespace enriques {

/// One topological Morse simplification. Each step drops the total
/// Betti number of the half by exactly 2.
struct MorseStep {
    enum class Kind { RemoveSphere, ContractOrientableHandle, ContractNonorientableHandle };

    Kind kind = Kind::RemoveSphere;
    /// Genus (>= 1) or crosscap count (>= 3) of the contracted component.
    int from = 0;

    std::string text() const;      // "S->0", "Sg2->Sg1", "Sg1->S", "V5->V3"
    std::string kind_name() const; // "remove-sphere", ...

    friend bool operator==(const MorseStep&, const MorseStep&) = default;
};

/// All halves reachable in one move: remove one sphere, contract
/// Sg -> Sg-1 (S for g = 1), or contract Vp -> Vp-2 for p >= 3.
/// V1 and V2 admit no move. Results are deduplicated multisets.
std::vector<std::pair<MorseStep, Half>> simplify_once(const Half& h);

/// The derivatives of a decomposition: closure of simplify_once on
/// half2 with half1 frozen. Acyclic since every edge strictly drops
/// total_betti(half2).
struct DerivativeDag {
    struct Edge {
        int from = 0;
        int to = 0;
        MorseStep step;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    HalfDecomposition root;
    std::vector<HalfDecomposition> nodes; // breadth-first from root; nodes[0] == root
    std::vector<Edge> edges;

    bool contains(const HalfDecomposition& d) const;

    std::string to_dot() const;
    nlohmann::ordered_json to_json() const;
};

DerivativeDag derive_dag(const HalfDecomposition& root);

} // namespace enriques
