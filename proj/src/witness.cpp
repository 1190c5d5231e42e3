#include "vinc/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

WitnessResult transform_occurrence(const Permutation& host, const Occurrence& occ) {
    if (!check_b_characterization(host, occ))
        throw std::invalid_argument("occurrence does not satisfy the B-characterization");
    const int a = occ.positions[0];
    const int c = occ.positions[2];
    const int d = occ.positions[3];
    const int bar = std::max(host.at(a), host.at(c));
    // Nonempty: position b itself exceeds the bar.
    int e = 0;
    for (int i = c - 1; i >= 1; --i) {
        if (host.at(i) > bar) {
            e = i;
            break;
        }
    }
    return WitnessResult{e, Occurrence{{a, e, e + 1, d}}};
}

std::optional<Occurrence> first_b_occurrence(const Permutation& host) {
    const int n = host.size();
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b)
            for (int c = b + 1; c <= n - 1; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    if (std::max(host.at(a), host.at(c)) <
                        std::min(host.at(b), host.at(d)))
                        return Occurrence{{a, b, c, d}};
                }
    return std::nullopt;
}

}  // namespace vinc
