#pragma once

// The three two-soliton scattering examples (n = 4, 5, 6): the evolution on 27
// cells from t = 0 in the two-line state format, the carrier that reproduces
// it, and the expected modes of the outgoing labels.

#include <string>
#include <vector>

#include "dkr/error.hpp"

namespace dkr::scattering {

inline const std::vector<std::string> k_n4{
    "1 1 1 1 1 2 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "-3 -4 -4 2 2 4 3 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 2 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 -3 -4 -4 2 4 3 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 2 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 -3 -4 -4 4 3 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 -4 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 -3 -4 4 3 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 -4 2 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 -3 -3 3 3 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 2 2 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 2 2 -3 -4 -3 3 3 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 2 2 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 -3 -4 2 -3 3 3 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 2 2 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 -3 -4 2 2 -3 3 3 2 2\n",
};

inline const std::vector<std::string> k_n5{
    "2 2 1 1 1 1 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "-3 5 4 3 2 2 -4 -5 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 2 2 1 1 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 -3 5 4 3 -4 -5 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 2 2 4 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 -3 5 -4 -5 3 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 2 1 2 2 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 5 4 -3 -4 -5 3 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 2 1 1 1 2 2 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 2 5 4 2 2 -3 -4 -5 3 2 2 2 2 2 2\n",
};

inline const std::vector<std::string> k_n6{
    "2 2 1 1 1 1 1 2 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "-3 -5 6 5 4 2 2 -5 -5 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 2 2 1 1 4 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 -3 -5 6 5 -5 -5 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 2 -5 6 2 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 -3 -4 -5 4 4 2 2 2 2 2 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 1 1 1 1 1 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 2 -5 6 -3 -4 -5 4 4 2 2 2 2 2 2 2\n",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 1 1 1\n"
    "2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 -5 6 2 2 2 -3 -4 -5 4 4 2 2\n",
};

struct Example {
    int n;
    int carrier;
    const std::vector<std::string>* rows;
    int slow_mode;  // outgoing shorter soliton
    int fast_mode;  // outgoing longer soliton
};

inline const std::vector<Example>& examples() {
    static const std::vector<Example> ex{{4, 3, &k_n4, -4, -1}, {5, 4, &k_n5, -5, -1}, {6, 5, &k_n6, -7, 0}};
    return ex;
}

inline const Example& example(int n) {
    for (const auto& e : examples())
        if (e.n == n) return e;
    throw DomainError("no scattering example for n = " + std::to_string(n));
}

}  // namespace dkr::scattering
