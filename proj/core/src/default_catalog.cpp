#include "enriques/catalog.hpp"

namespace enriques {

namespace {

// The shipped classification data: extremal decompositions and quarter
// partitions per family, the three rigid-isotopy catalogs, and the
// root schemes the case analysis uses. Quarter blocks index the
// canonical ordering of the half they refine.
constexpr const char* kDefaultCatalogText = R"json({
  "version": "1.0",
  "families": [
    {
      "tag": "del-pezzo",
      "extremal": [
        ["V3", "V1 + 4S"],
        ["V4", "2V1"],
        ["V4", "4S"],
        ["V6", "2S"]
      ],
      "exceptions": [
        {
          "half1": "V3",
          "half2": "V1 + 4S",
          "quarters2": [[0, 1, 2], [3, 4]],
          "group": "Z2xZ2"
        }
      ]
    },
    {
      "tag": "gr-surface",
      "extremal": [
        ["V4 + 2V1", "0"],
        ["V4 + S", "4S"]
      ],
      "exceptions": [
        {
          "half1": "V4 + S",
          "half2": "4S",
          "quarters2": [[0, 1], [2, 3]],
          "group": "D8"
        }
      ]
    },
    {
      "tag": "two-r-surface",
      "extremal": [
        ["V3 + V1", "4S"],
        ["V3 + S", "V1 + 3S"],
        ["V3 + V1 + S", "3S"],
        ["V3 + 2S", "V1 + 2S"],
        ["V3 + V1 + 2S", "2S"]
      ],
      "exceptions": [
        {
          "half1": "V3 + V1",
          "half2": "4S",
          "quarters2": [[0, 1], [2, 3]],
          "group": "D8",
          "quarters1": [[0, 1]]
        },
        {
          "half1": "V3 + S",
          "half2": "V1 + 3S",
          "quarters2": [[0, 1], [2, 3]],
          "group": "Z2",
          "quarters1": [[0, 1]]
        },
        {
          "half1": "V3 + V1 + S",
          "half2": "3S",
          "quarters2": [[0, 1], [2]],
          "group": "Z2",
          "quarters1": [[0, 2], [1]]
        },
        {
          "half1": "V3 + 2S",
          "half2": "V1 + 2S",
          "quarters2": [[0, 1], [2]],
          "group": "1",
          "quarters1": [[0, 1], [2]]
        }
      ]
    }
  ],
  "scheme_catalogs": {
    "plane_quartic": [
      {"key": "<0>"},
      {"key": "<1>"},
      {"key": "<2>", "all_oval_permutations_rigid": true},
      {"key": "<3>", "all_oval_permutations_rigid": true},
      {"key": "<4>", "all_oval_permutations_rigid": true},
      {"key": "<1<1>>"}
    ],
    "sigma2_cubic": [
      {"key": "<1|0>"},
      {"key": "<2|0>"},
      {"key": "<3|0>"},
      {"key": "<4|0>"},
      {"key": "<0|1>"},
      {"key": "<0|2>"},
      {"key": "<0|3>"},
      {"key": "<0|4>"},
      {"key": "<0|0>"},
      {"key": "<1|1>"},
      {"key": "<|||>"}
    ],
    "p4_quadric_pair": [
      {"key": "V6"},
      {"key": "V4"},
      {"key": "V2"},
      {"key": "Sg1"},
      {"key": "2S"},
      {"key": "S"},
      {"key": "0"}
    ]
  },
  "root_schemes": [
    {"key": "segments-2", "scheme": "([] . [] .)"},
    {"key": "segments-3", "scheme": "([] . [] . [] .)"},
    {"key": "segments-4", "scheme": "([] . [] . [] . [] .)"},
    {"key": "grade1-segments-4", "scheme": "([] . [] . [] . [] .)@1", "provisional": true},
    {"key": "grade2-vertex-segments-2", "scheme": "([o] . [] . [] .)@2", "provisional": true},
    {"key": "grade2-vertex-segments-3", "scheme": "([o] . [] . [] . [] .)@2", "provisional": true}
  ]
}
)json";

} // namespace

std::string_view embedded_default_text() { return kDefaultCatalogText; }

} // namespace enriques
