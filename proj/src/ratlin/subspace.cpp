#include "malg/ratlin/subspace.hpp"

#include "malg/errors.hpp"
#include "malg/ratlin/ray.hpp"

namespace malg::ratlin {

namespace {

Matrix projection_from_basis(std::size_t n, const std::vector<Vector>& basis) {
    if (basis.empty()) return Matrix::zero(n);
    const Matrix g = Matrix::from_columns(basis, n);
    const Matrix gt = g.transpose();
    return g * inverse(gt * g) * gt;
}

// Basis of {x : row . x = 0 for every row}, read off the RREF.
std::vector<Vector> null_space(const std::vector<Vector>& rref_rows, std::size_t n) {
    std::vector<std::size_t> pivot_col;
    for (const auto& row : rref_rows) {
        std::size_t c = 0;
        while (row[c].is_zero()) ++c;
        pivot_col.push_back(c);
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<Vector> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < rref_rows.size(); ++r) v[pivot_col[r]] = -rref_rows[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    if (ambient_dim == 0) throw InputError("ambient dimension must be positive");
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = rref(generators, ambient_dim);
    s.projection_ = projection_from_basis(ambient_dim, s.basis_);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> unit;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector e(ambient_dim);
        e[i] = 1;
        unit.push_back(std::move(e));
    }
    return span(ambient_dim, unit);
}

Subspace Subspace::column_space(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return span(m.rows(), cols);
}

std::vector<std::vector<mpz_class>> Subspace::integer_basis() const {
    std::vector<std::vector<mpz_class>> out;
    for (const auto& b : basis_) out.push_back(Ray::of(b).direction());
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim_) throw InputError("vector dimension does not match the subspace");
    return projection_ * v == v;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw InputError("subspace dimension mismatch");
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::string Subspace::to_string() const {
    if (basis_.empty()) return "{0}";
    std::string out = "span{";
    bool first = true;
    for (const auto& b : basis_) {
        if (!first) out += ',';
        first = false;
        out += Ray::of(b).to_string();
    }
    return out + "}";
}

Matrix projection_matrix(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    return Subspace::span(ambient_dim, generators).projection();
}

Subspace orthocomplement(const Subspace& s) {
    return Subspace::span(s.ambient_dim(), null_space(s.basis(), s.ambient_dim()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersection of subspaces of different dimension");
    std::vector<Vector> perp = orthocomplement(a).basis();
    const Subspace b_perp = orthocomplement(b);
    for (const auto& v : b_perp.basis()) perp.push_back(v);
    return orthocomplement(Subspace::span(a.ambient_dim(), perp));
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

}  // namespace malg::ratlin
