#pragma once

#include <string>
#include <vector>

#include "cpn/unipoly.hpp"

namespace cpn {

/// Validated holomorphic seed: n >= 2 polynomial components in xi only,
/// not all zero, with constant gcd. The univariate type enforces zero
/// xibar-degree by construction; the gcd check is the exact one over Q(i).
class HoloSeed {
public:
    HoloSeed(int n, std::vector<UniPoly> components);

    int n() const { return n_; }
    const std::vector<UniPoly>& components() const { return comps_; }

private:
    int n_;
    std::vector<UniPoly> comps_;
};

/// Builds a seed from per-component coefficient lists, constant term
/// first, each coefficient in the GaussianRational text form.
HoloSeed seed_from_strings(const std::vector<std::vector<std::string>>& components);

} // namespace cpn
