#include "cpn/seed.hpp"

#include "cpn/errors.hpp"

namespace cpn {

HoloSeed::HoloSeed(int n, std::vector<UniPoly> components) : n_(n), comps_(std::move(components)) {
    if (n_ < 2) throw InvalidSeed("seed dimension must be at least 2, got " + std::to_string(n_));
    if (static_cast<int>(comps_.size()) != n_)
        throw InvalidSeed("expected " + std::to_string(n_) + " components, got " +
                          std::to_string(comps_.size()));

    bool all_zero = true;
    UniPoly g;
    for (const auto& c : comps_) {
        if (!c.is_zero()) all_zero = false;
        g = unipoly_gcd(g, c);
    }
    if (all_zero) throw ZeroSeed("all seed components are zero");
    if (g.degree() > 0) throw InvalidSeed("seed components share a common polynomial factor");
}

HoloSeed seed_from_strings(const std::vector<std::vector<std::string>>& components) {
    std::vector<UniPoly> comps;
    comps.reserve(components.size());
    for (const auto& coeffs : components) {
        std::vector<GaussianRational> c;
        c.reserve(coeffs.size());
        for (const auto& s : coeffs) c.push_back(parse_gaussian_rational(s));
        comps.emplace_back(std::move(c));
    }
    return HoloSeed(static_cast<int>(components.size()), std::move(comps));
}

} // namespace cpn
