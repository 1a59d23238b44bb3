#pragma once
// The matrices the construction prints, embedded verbatim as the shipped
// matrix files. Stored as data, not code, so a transcription error is a
// one-line diff; the FNV-1a checksums catch accidental edits.

#include <array>
#include <cstdint>
#include <string_view>

namespace trihomo::corpus_data {

inline constexpr std::string_view gluck_spun_torus_T = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, "-2-2n", "3+2n", 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, "-1-2n", "4+2n", 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, "-1-2n", 0, "3+2n", 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "gluck_spun_torus_T",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step1 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, -1, "3+2n", 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, "4+2n", 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, "1+2n", 0, 0, 0, 1, 0],
    [0, "-1-2n", "1+2n", "3+2n", 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step1",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step2 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, -1, 0, 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, "1+2n", 0, 0, 0, 1, 0],
    [0, "-1-2n", "1+2n", 0, 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step2",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step3 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    ["-1-2n", 0, "1+2n", 0, 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, "1+2n", 0, 0, 0, 1, 0],
    ["-1-2n", 0, "1+2n", 0, 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step3",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step4 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    ["-1-2n", 0, "1+2n", 0, 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, "1+2n", 0, 0, 0, 1, 0],
    ["-1-2n", 0, "1+2n", 0, 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step4",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step5 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, "1+2n", "1+2n", 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, "1+2n", 0, 0, 0, 1, 0],
    [0, 0, "1+2n", "1+2n", 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step5",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step6 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, "1+2n", 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, "-1-2n", 1, 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, "1+2n", 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step6",
  "variable": "n"
}
)json";

inline constexpr std::string_view theorem2_step7 = R"json({
  "alpha": [
    [0, 0, -1, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, -1]
  ],
  "beta": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, -1]
  ],
  "gamma": [
    [0, -1, 0, -1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, -1]
  ],
  "genus": 4,
  "label": "theorem2_step7",
  "variable": null
}
)json";

struct EmbeddedMatrix {
    std::string_view name;
    std::string_view text;
    std::uint64_t fnv1a64;
};

inline constexpr std::array<EmbeddedMatrix, 8> all{{
    {"gluck_spun_torus_T", gluck_spun_torus_T, 0x3549e13deada5c29ULL},
    {"theorem2_step1", theorem2_step1, 0x74eda81b926a005eULL},
    {"theorem2_step2", theorem2_step2, 0xc677d9bbed817c63ULL},
    {"theorem2_step3", theorem2_step3, 0x0af25df7cbd192b5ULL},
    {"theorem2_step4", theorem2_step4, 0xcc4ae914273829f2ULL},
    {"theorem2_step5", theorem2_step5, 0xbe89a715a605381dULL},
    {"theorem2_step6", theorem2_step6, 0xb5fb132b3e88027bULL},
    {"theorem2_step7", theorem2_step7, 0xb8e41c22dd0d905eULL},
}};

}  // namespace trihomo::corpus_data
