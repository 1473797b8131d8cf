#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "crownbetti/monomial_ideal.hpp"

namespace testing {

using namespace crownbetti;

// "x1*y2^3" or "1".
inline Multidegree mono(const VariableSet& vars, const std::string& text) {
    std::vector<std::pair<std::string, Exponent>> powers;
    if (text != "1") {
        std::stringstream in(text);
        std::string factor;
        while (std::getline(in, factor, '*')) {
            const auto caret = factor.find('^');
            if (caret == std::string::npos)
                powers.emplace_back(factor, 1);
            else
                powers.emplace_back(factor.substr(0, caret),
                                    static_cast<Exponent>(std::stoul(factor.substr(caret + 1))));
        }
    }
    return Multidegree::from_powers(vars, powers);
}

inline MonomialIdeal ideal(const VariableSet& vars, const std::vector<std::string>& gens) {
    std::vector<Multidegree> ms;
    for (const auto& g : gens) ms.push_back(mono(vars, g));
    return MonomialIdeal(vars, std::move(ms));
}

}  // namespace testing
