// Prints the momentum polytopes of three projectivized representations.

#include "momentum.hpp"

#include <iostream>

int main() {
    using namespace momentum;
    const std::vector<std::pair<const char*, QVec>> cases = {
        {"A2", QVec::from_ints({2, 1})},
        {"G2", QVec::from_ints({0, 1})},
        {"A3", QVec::from_ints({1, 1, 1})},
    };
    for (const auto& [group, lambda] : cases) {
        auto rs = RootSystem::parse(group);
        BoundedAnswer ans = momentum_polytope_projective(rs, {lambda});
        std::cout << group << ", highest weight " << lambda << ": " << ans.certificate << "\n";
        const Polyhedron& p = ans.exact ? *ans.exact : ans.upper;
        for (const auto& vertex : p.points()) std::cout << "  " << vertex << "\n";
    }
}
