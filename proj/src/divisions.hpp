#pragma once

#include <span>
#include <string>
#include <vector>

#include "measures.hpp"
#include "rational.hpp"

namespace fairdiv {

// A partition of X into n connected pieces, one per player.
//
// Cake: n-1 interior cut points 0 <= x1 <= ... <= x_{n-1} <= 1; piece j is
// [x_j, x_{j+1}] with x0 = 0 and x_n = 1.
// Pie: n cut points sorted in [0,1); piece j runs counterclockwise from
// cuts[j] to cuts[j+1], the last piece wrapping back to cuts[0]. When all
// cuts coincide the closing piece is the full circle.
//
// assignment[j] = the player who receives piece j; a permutation of 0..n-1.
// Zero-length pieces are allowed (coincident cuts) and measure 0.
class ConnectedDivision {
  public:
    static ConnectedDivision cake(std::vector<Rational> interior_cuts,
                                  std::vector<int> assignment);
    static ConnectedDivision pie(std::vector<Rational> cuts, std::vector<int> assignment);
    static ConnectedDivision make(Geometry g, std::vector<Rational> cuts,
                                  std::vector<int> assignment);

    Geometry geometry() const { return geometry_; }
    int players() const { return static_cast<int>(assignment_.size()); }
    const std::vector<Rational>& cuts() const { return cuts_; }
    const std::vector<int>& assignment() const { return assignment_; }

    Interval piece(int piece_index) const;
    int piece_of(int player) const;
    Interval share_of(int player) const { return piece(piece_of(player)); }

  private:
    ConnectedDivision(Geometry g, std::vector<Rational> cuts, std::vector<int> assignment);

    Geometry geometry_;
    std::vector<Rational> cuts_; // cake: interior cuts only; pie: all n cuts
    std::vector<int> assignment_;
    std::vector<int> piece_of_; // inverse of assignment_
};

// A partition of X into finite interval unions, one list per player. Shares
// may be empty. Construction checks shape and geometry; disjointness and
// coverage are checked by validate().
class GeneralDivision {
  public:
    static GeneralDivision make(Geometry g, std::vector<std::vector<Interval>> shares);

    Geometry geometry() const { return geometry_; }
    int players() const { return static_cast<int>(shares_.size()); }
    const std::vector<std::vector<Interval>>& shares() const { return shares_; }

  private:
    GeneralDivision(Geometry g, std::vector<std::vector<Interval>> shares)
        : geometry_(g), shares_(std::move(shares)) {}

    Geometry geometry_;
    std::vector<std::vector<Interval>> shares_;
};

struct Violation {
    std::string code; // "overlap" or "coverage"
    std::string message;
};

// Empty list means the division is a genuine partition of X.
std::vector<Violation> validate(const ConnectedDivision& d);
std::vector<Violation> validate(const GeneralDivision& d);

// M[i][j] = mu_i(X_j) where X_j is player j's share. Every row sums to 1.
class SharingMatrix {
  public:
    static SharingMatrix from_rows(std::vector<std::vector<Rational>> rows);

    std::size_t size() const { return rows_.size(); }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    friend bool operator==(const SharingMatrix& a, const SharingMatrix& b) {
        return a.rows_ == b.rows_;
    }

  private:
    explicit SharingMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<Rational>> rows_;
};

SharingMatrix sharing_matrix(const ConnectedDivision& d,
                             std::span<const PiecewiseConstantMeasure> ms);
SharingMatrix sharing_matrix(const GeneralDivision& d,
                             std::span<const PiecewiseConstantMeasure> ms);

// Positive-length pieces become one-interval shares; empty pieces become
// empty shares. Preserves the sharing matrix.
GeneralDivision to_general(const ConnectedDivision& d);

// Shifts every cut by t mod 1 and re-sorts into canonical order, rotating the
// assignment so each player keeps the same arc.
ConnectedDivision pie_rotate(const ConnectedDivision& d, const Rational& t);

// Reads a cake division as a pie division opened at 0: pie cuts are 0 plus
// the interior cuts, pieces and players unchanged. Interior cuts must be < 1.
ConnectedDivision cake_as_pie(const ConnectedDivision& d);

} // namespace fairdiv
