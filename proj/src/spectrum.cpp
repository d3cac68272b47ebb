#include "cpn/spectrum.hpp"

#include <algorithm>
#include <ostream>

#include "cpn/errors.hpp"

namespace cpn {

namespace {

Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool member_less(const EigenValue& a, const EigenValue& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.klass != b.klass) return static_cast<int>(a.klass) < static_cast<int>(b.klass);
    return a.k_origin < b.k_origin;
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// a ⊆ b for sorted vectors.
bool subset_of(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

} // namespace

EigenSet::EigenSet(int n, std::vector<EigenValue> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), member_less);
}

std::vector<Rational> EigenSet::dplus() const {
    std::vector<Rational> v;
    for (const auto& m : members_)
        if (m.klass == Klass::Dplus && !m.ghost) v.push_back(m.value);
    return v;
}

std::vector<Rational> EigenSet::dzero() const {
    std::vector<Rational> v;
    for (const auto& m : members_)
        if (m.klass == Klass::Dzero && !m.ghost) v.push_back(m.value);
    return v;
}

std::vector<Rational> EigenSet::dminus() const {
    std::vector<Rational> v;
    for (const auto& m : members_)
        if (m.klass == Klass::Dminus && !m.ghost) v.push_back(m.value);
    return v;
}

std::vector<Rational> EigenSet::S() const {
    std::vector<Rational> v;
    for (const auto& m : members_)
        if (!m.ghost) v.push_back(m.value);
    return sorted_unique(std::move(v));
}

std::vector<EigenValue> EigenSet::ghosts() const {
    std::vector<EigenValue> v;
    for (const auto& m : members_)
        if (m.ghost) v.push_back(m);
    return v;
}

Rational c_of(int k, int n) {
    if (k < 0 || k >= n)
        throw IndexOutOfRange("index " + std::to_string(k) + " outside dimension " + std::to_string(n));
    return frac(1 + 2 * k, n);
}

EigenSet build_S(int n) {
    if (n < 2) throw DimensionTooSmall("eigenvalue sets need dimension at least 2");
    std::vector<EigenValue> members;
    members.reserve(static_cast<std::size_t>(3 * n));
    for (int k = 0; k < n; ++k) {
        const Rational ck = c_of(k, n);
        members.push_back({ck, Klass::Dplus, k, k == n - 1});
        members.push_back({ck - 1, Klass::Dzero, k, false});
        members.push_back({ck - 2, Klass::Dminus, k, k == 0});
    }
    return EigenSet(n, std::move(members));
}

bool verify_symmetry(int n) {
    const EigenSet set = build_S(n);
    const std::vector<Rational> dz = set.dzero();
    const std::vector<Rational> dp = set.dplus();
    const std::vector<Rational> dm = set.dminus();

    auto negated_reversed = [](const std::vector<Rational>& v) {
        std::vector<Rational> out;
        out.reserve(v.size());
        for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(-*it);
        return out;
    };
    return negated_reversed(dz) == dz && negated_reversed(dp) == dm;
}

IntersectionKind verify_intersections(int n) {
    const EigenSet set = build_S(n);
    const std::vector<Rational> dz = set.dzero();
    std::vector<Rational> d = set.dplus();
    const std::vector<Rational> dm = set.dminus();
    d.insert(d.end(), dm.begin(), dm.end());
    d = sorted_unique(std::move(d));

    if (n % 2 == 0) {
        if (subset_of(dz, d)) return IntersectionKind::contained;
        throw PropositionViolated("even dimension without Dzero contained in D");
    }
    if (!intersects(dz, d)) return IntersectionKind::disjoint;
    throw PropositionViolated("odd dimension with Dzero meeting D");
}

std::vector<SpacingSegment> spacing_profile(int n) {
    const std::vector<Rational> s = build_S(n).S();
    std::vector<SpacingSegment> segments;
    if (s.size() < 2) return segments;
    Rational lo = s[0];
    Rational step = s[1] - s[0];
    for (std::size_t i = 2; i < s.size(); ++i) {
        const Rational d = s[i] - s[i - 1];
        if (d != step) {
            segments.push_back({lo, s[i - 1], step});
            lo = s[i - 1];
            step = d;
        }
    }
    segments.push_back({lo, s.back(), step});
    return segments;
}

Cardinality cardinality(int n) {
    const EigenSet set = build_S(n);
    long with_mult = 0;
    for (const auto& m : set.members())
        if (!m.ghost) ++with_mult;
    const Cardinality counts{static_cast<long>(set.S().size()), with_mult};

    const long expect_distinct = (n % 2 == 1) ? 3L * n - 2 : 2L * n - 2;
    if (counts.distinct != expect_distinct || counts.with_multiplicity != 3L * n - 2)
        throw PropositionViolated("cardinality of S(" + std::to_string(n) +
                                  ") deviates from the closed form");
    return counts;
}

EigenSet induct(int n, InductionDirection direction) {
    if (n < 2) throw DimensionTooSmall("induction needs dimension at least 2");
    const int m = n + (direction == InductionDirection::up ? 1 : -1);
    if (m < 2) throw DimensionTooSmall("cannot induct below dimension 2");

    // M points on an interval of length 2: maximal even spacing with an
    // end gap of at least 1/M forces gap exactly 1/M and spacing 2/M.
    const Rational gap = frac(1, m);
    const Rational step = (Rational(2) - 2 * gap) / Rational(m - 1);

    std::vector<EigenValue> members;
    members.reserve(static_cast<std::size_t>(3 * m));
    for (int j = 0; j < m; ++j) {
        const Rational offset = gap + j * step;
        members.push_back({Rational(0) + offset, Klass::Dplus, j, j == m - 1});
        members.push_back({Rational(-1) + offset, Klass::Dzero, j, false});
        members.push_back({Rational(-2) + offset, Klass::Dminus, j, j == 0});
    }
    EigenSet result(m, std::move(members));
    if (!(result == build_S(m)))
        throw PropositionViolated("inductive repositioning disagrees with direct construction");
    return result;
}

FigureData figure_data(int n) {
    const EigenSet set = build_S(n);
    FigureData fig{n, {}, {}};
    fig.markers.reserve(set.members().size());
    for (const auto& m : set.members()) {
        Marker marker = Marker::dot;
        if (m.ghost) marker = Marker::filled_ghost;
        else if (m.klass == Klass::Dzero) marker = Marker::cross;
        fig.markers.push_back({m.value, marker, m.k_origin, m.klass, m.ghost});
    }
    const Rational shift = frac(2, n);
    for (int k = 0; k + 1 < n; ++k) {
        const Rational ck = c_of(k, n);
        for (int d = -2; d <= 0; ++d) {
            const Rational from = ck + d;
            fig.arrows.push_back({from, from + shift, k});
        }
    }
    return fig;
}

namespace {

const char* marker_name(Marker m) {
    switch (m) {
        case Marker::dot: return "dot";
        case Marker::cross: return "cross";
        default: return "filled_ghost";
    }
}

const char* klass_name(Klass k) {
    switch (k) {
        case Klass::Dplus: return "Dplus";
        case Klass::Dzero: return "Dzero";
        default: return "Dminus";
    }
}

double svg_x(const Rational& pos) {
    return 40.0 + (rational_to_double(pos) + 2.0) / 4.0 * 800.0;
}

} // namespace

void write_figure_csv(const FigureData& fig, std::ostream& os) {
    os << "position_num,position_den,marker,k_origin,klass,ghost\n";
    for (const auto& m : fig.markers) {
        os << m.position.get_num().get_str() << "," << m.position.get_den().get_str() << ","
           << marker_name(m.marker) << "," << m.k_origin << "," << klass_name(m.klass) << ","
           << (m.ghost ? 1 : 0) << "\n";
    }
}

void write_figure_svg(const FigureData& fig, std::ostream& os) {
    std::vector<Rational> dots, crosses, ghosts;
    for (const auto& m : fig.markers) {
        if (m.marker == Marker::dot) dots.push_back(m.position);
        else if (m.marker == Marker::cross) crosses.push_back(m.position);
        else ghosts.push_back(m.position);
    }
    std::sort(dots.begin(), dots.end());
    dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
    std::sort(crosses.begin(), crosses.end());
    crosses.erase(std::unique(crosses.begin(), crosses.end()), crosses.end());

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"880\" height=\"200\" "
          "viewBox=\"0 0 880 200\">\n";
    os << "  <defs><marker id=\"tip\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
          "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
    os << "  <line x1=\"40\" y1=\"120\" x2=\"840\" y2=\"120\" stroke=\"black\"/>\n";
    for (int t = -2; t <= 2; ++t) {
        const double x = svg_x(Rational(t));
        os << "  <line x1=\"" << x << "\" y1=\"115\" x2=\"" << x << "\" y2=\"125\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"145\" text-anchor=\"middle\" font-size=\"12\">" << t
           << "</text>\n";
    }
    for (const auto& a : fig.arrows) {
        const double x1 = svg_x(a.from), x2 = svg_x(a.to);
        os << "  <path class=\"arrow\" d=\"M" << x1 << ",114 Q" << (x1 + x2) / 2.0 << ","
           << (90.0 - 8.0 * a.k_from) << " " << x2 << ",114\" fill=\"none\" stroke=\"gray\" "
              "marker-end=\"url(#tip)\"/>\n";
    }
    for (const auto& p : dots) {
        os << "  <circle class=\"dot\" cx=\"" << svg_x(p)
           << "\" cy=\"120\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
    }
    for (const auto& p : crosses) {
        const double x = svg_x(p);
        os << "  <path class=\"cross\" d=\"M" << x - 4 << "," << 116 << " L" << x + 4 << "," << 124
           << " M" << x - 4 << "," << 124 << " L" << x + 4 << "," << 116
           << "\" stroke=\"black\" fill=\"none\"/>\n";
    }
    for (const auto& p : ghosts) {
        os << "  <circle class=\"ghost\" cx=\"" << svg_x(p)
           << "\" cy=\"120\" r=\"5\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
}

} // namespace cpn
