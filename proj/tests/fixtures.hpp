#pragma once

#include <string>
#include <vector>

#include "kummer/group.hpp"
#include "kummer/rational.hpp"

namespace fixtures {

inline kummer::AffineInvolutionMap map_of(const std::string& signs,
                                          const std::vector<std::string>& translation) {
    std::vector<int> s;
    for (char c : signs) s.push_back(c == '+' ? 1 : -1);
    std::vector<kummer::Rational> t;
    for (const auto& v : translation) t.push_back(kummer::Rational::parse(v));
    return kummer::AffineInvolutionMap(std::move(s), std::move(t));
}

// x -> (-x1, -x2, -x3, -x4, x5, x6, x7)
inline kummer::AffineInvolutionMap alpha() {
    return map_of("----+++", {"0", "0", "0", "0", "0", "0", "0"});
}

// x -> (-x1, 1/2 - x2, x3, x4, -x5, -x6, x7)
inline kummer::AffineInvolutionMap beta() {
    return map_of("--++--+", {"0", "1/2", "0", "0", "0", "0", "0"});
}

// x -> (1/2 - x1, x2, 1/2 - x3, x4, -x5, x6, -x7)
inline kummer::AffineInvolutionMap gamma() {
    return map_of("-+-+-+-", {"1/2", "0", "1/2", "0", "0", "0", "0"});
}

inline kummer::GroupZ2k example3_group() {
    return kummer::make_group({alpha(), beta(), gamma()});
}

}  // namespace fixtures
