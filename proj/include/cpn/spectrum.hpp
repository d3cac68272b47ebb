#pragma once

#include <iosfwd>
#include <vector>

#include "cpn/rational.hpp"

namespace cpn {

enum class Klass { Dplus, Dzero, Dminus };

/// One eigenvalue position with the factor i normalized out.
struct EigenValue {
    Rational value;
    Klass klass;
    int k_origin;
    bool ghost;

    friend bool operator==(const EigenValue&, const EigenValue&) = default;
};

/// The sorted multiset of eigenvalue positions for dimension n, ghosts
/// flagged. Ghosts are excluded from the derived D and S views.
class EigenSet {
public:
    EigenSet(int n, std::vector<EigenValue> members);

    int n() const { return n_; }
    const std::vector<EigenValue>& members() const { return members_; }

    /// Non-ghost values of one class, sorted.
    std::vector<Rational> dplus() const;
    std::vector<Rational> dzero() const;
    std::vector<Rational> dminus() const;
    /// Sorted distinct non-ghost values.
    std::vector<Rational> S() const;
    std::vector<EigenValue> ghosts() const;

    friend bool operator==(const EigenSet& a, const EigenSet& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    int n_;
    std::vector<EigenValue> members_;
};

/// c_k = (1+2k)/n
Rational c_of(int k, int n);

EigenSet build_S(int n);

/// Negation maps Dzero onto itself and Dplus onto Dminus.
bool verify_symmetry(int n);

enum class IntersectionKind { disjoint, contained };

/// Dzero vs D = Dplus ∪ Dminus: disjoint for odd n, contained for even.
/// Throws PropositionViolated if neither pattern holds.
IntersectionKind verify_intersections(int n);

struct SpacingSegment {
    Rational lo;
    Rational hi;
    Rational step;
    friend bool operator==(const SpacingSegment&, const SpacingSegment&) = default;
};

/// Run-length encoding of consecutive gaps in sorted distinct S.
std::vector<SpacingSegment> spacing_profile(int n);

struct Cardinality {
    long distinct;
    long with_multiplicity;
    friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

/// Counts from the constructed set, checked against the closed forms
/// 3n-2 (odd) / 2n-2 (even) distinct and 3n-2 with multiplicity.
Cardinality cardinality(int n);

enum class InductionDirection { up, down };

/// Repositions one point more (or fewer) per interval under the even
/// spacing and end-gap rules, then checks the result against direct
/// construction. Throws DimensionTooSmall going below n = 2.
EigenSet induct(int n, InductionDirection direction);

enum class Marker { dot, cross, filled_ghost };

struct FigureMarker {
    Rational position;
    Marker marker;
    int k_origin;
    Klass klass;
    bool ghost;
};

struct FigureArrow {
    Rational from;
    Rational to;
    int k_from;
};

struct FigureData {
    int n;
    std::vector<FigureMarker> markers;
    std::vector<FigureArrow> arrows;
};

/// Dots for D members, crosses for Dzero members, filled ghosts, plus
/// the chi arrows S_k -> S_{k+1} (three per transition).
FigureData figure_data(int n);

void write_figure_csv(const FigureData& fig, std::ostream& os);
void write_figure_svg(const FigureData& fig, std::ostream& os);

} // namespace cpn
