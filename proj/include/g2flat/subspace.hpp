#pragma once

#include "g2flat/matrix.hpp"

namespace g2flat {

/// Linear subspace of Q^n held in canonical form: the basis matrix is the
/// reduced row echelon form of any generating set, so two subspaces are equal
/// iff their representations are entrywise equal.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace span_rows(const Mat& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

private:
    Subspace(std::size_t ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_ = 0;
    Mat basis_;  // rref, rows = dim
};

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);

}  // namespace g2flat
