#pragma once

#include "malg/ratlin/matrix.hpp"
#include "malg/ratlin/rational.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace malg::ratlin {

/**
 * A subspace of Q^n.
 *
 * The basis is the reduced row echelon form of whatever generators were
 * supplied, so two subspaces are equal exactly when their bases are equal.
 * The orthogonal projection onto the subspace is computed once at
 * construction and is always symmetric and idempotent.
 */
class Subspace {
public:
    Subspace() = default;

    /// Dependent generators are reduced first; a generator of the wrong
    /// dimension is an InputError.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace zero(std::size_t ambient_dim) { return span(ambient_dim, {}); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace column_space(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const Matrix& projection() const { return projection_; }

    /// Basis vectors scaled to primitive integer vectors.
    std::vector<std::vector<mpz_class>> integer_basis() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// "{0}" or "span{(1,1,0),(0,0,1)}" using the integer basis.
    std::string to_string() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    Matrix projection_;
};

/// P = G (G^T G)^{-1} G^T for the reduced generators G; the zero matrix for
/// an empty generator list.
Matrix projection_matrix(std::size_t ambient_dim, const std::vector<Vector>& generators);

Subspace orthocomplement(const Subspace& s);

/// Orthocomplement of the span of both orthocomplements.
Subspace intersect(const Subspace& a, const Subspace& b);

bool contains(const Subspace& s, const Vector& v);

}  // namespace malg::ratlin
