#include "halg/linalg.hpp"

#include <algorithm>

namespace halg {

QVec qvec_zero(std::size_t n) { return QVec(n, Rat(0)); }

QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

QVec qvec_scale(const Rat& c, const QVec& a) {
    QVec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool qvec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

void QMat::add_row(QVec v) {
    if (data_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw Error("QMat: row length mismatch");
    data_.push_back(std::move(v));
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != cols_) throw Error("QMat::apply: size mismatch");
    QVec out(rows(), Rat(0));
    for (std::size_t r = 0; r < rows(); ++r) {
        Rat acc(0);
        const QVec& row = data_[r];
        for (std::size_t c = 0; c < cols_; ++c)
            if (row[c] != 0 && v[c] != 0) acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

QMat QMat::multiply(const QMat& other) const {
    if (cols_ != other.rows()) throw Error("QMat::multiply: size mismatch");
    QMat out(rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = data_[i][k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols(); ++j) {
                const Rat& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

QMat QMat::transpose() const {
    QMat out(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = data_[r][c];
    return out;
}

std::vector<std::size_t> QMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows() && data_[pivot][col] == 0) ++pivot;
        if (pivot == rows()) continue;
        std::swap(data_[pivot], data_[lead]);
        Rat inv = Rat(1) / data_[lead][col];
        if (inv != 1)
            for (std::size_t c = col; c < cols_; ++c) data_[lead][c] *= inv;
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r == lead) continue;
            const Rat f = data_[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                if (data_[lead][c] != 0) data_[r][c] -= f * data_[lead][c];
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t QMat::rank() const {
    QMat copy = *this;
    return copy.rref().size();
}

std::vector<QVec> QMat::kernel() const {
    QMat copy = *this;
    auto pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> QMat::solve(const QVec& b) const {
    if (b.size() != rows()) throw Error("QMat::solve: size mismatch");
    QMat aug(rows(), cols_ + 1);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = data_[r][c];
        aug.at(r, cols_) = b[r];
    }
    auto pivots = aug.rref();
    QVec x(cols_, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_) return std::nullopt;  // row [0 ... 0 | 1]
        x[pivots[r]] = aug.at(r, cols_);
    }
    return x;
}

QMat identity_matrix(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Subspace::add(const QVec& v) {
    if (v.size() != ambient_) throw Error("Subspace::add: size mismatch");
    QVec w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat& c = w[pivots_[i]];
        if (c != 0) {
            for (std::size_t k = 0; k < ambient_; ++k)
                if (basis_[i][k] != 0) w[k] -= c * basis_[i][k];
        }
    }
    std::size_t p = 0;
    while (p < ambient_ && w[p] == 0) ++p;
    if (p == ambient_) return false;
    Rat inv = Rat(1) / w[p];
    if (inv != 1)
        for (auto& x : w) x *= inv;
    // back-substitute into existing rows, keep rows sorted by pivot
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat c = basis_[i][p];
        if (c != 0)
            for (std::size_t k = 0; k < ambient_; ++k)
                if (w[k] != 0) basis_[i][k] -= c * w[k];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
    return true;
}

bool Subspace::contains(const QVec& v) const {
    QVec w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat& c = w[pivots_[i]];
        if (c != 0)
            for (std::size_t k = 0; k < ambient_; ++k)
                if (basis_[i][k] != 0) w[k] -= c * basis_[i][k];
    }
    return qvec_is_zero(w);
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
    QVec w = v;
    QVec coords(basis_.size(), Rat(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat c = w[pivots_[i]];
        if (c != 0) {
            coords[i] = c;
            for (std::size_t k = 0; k < ambient_; ++k)
                if (basis_[i][k] != 0) w[k] -= c * basis_[i][k];
        }
    }
    if (!qvec_is_zero(w)) return std::nullopt;
    return coords;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVec>& gens) {
    Subspace s(ambient);
    for (const auto& g : gens) s.add(g);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error("Subspace::intersect: ambient mismatch");
    // Kernel trick: rows of [B1; B2] columns-combined; v = x·B1 = y·B2.
    std::size_t d1 = basis_.size(), d2 = o.basis_.size();
    QMat sys(ambient_, d1 + d2);
    for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t r = 0; r < ambient_; ++r) sys.at(r, j) = basis_[j][r];
    for (std::size_t j = 0; j < d2; ++j)
        for (std::size_t r = 0; r < ambient_; ++r) sys.at(r, d1 + j) = -o.basis_[j][r];
    Subspace out(ambient_);
    for (const auto& k : sys.kernel()) {
        QVec v(ambient_, Rat(0));
        for (std::size_t j = 0; j < d1; ++j)
            if (k[j] != 0) v = qvec_add(v, qvec_scale(k[j], basis_[j]));
        out.add(v);
    }
    return out;
}

Subspace Subspace::sum(const Subspace& o) const {
    Subspace out = *this;
    for (const auto& b : o.basis()) out.add(b);
    return out;
}

std::vector<std::size_t> Subspace::complement_coords() const {
    std::vector<bool> piv(ambient_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!piv[i]) out.push_back(i);
    return out;
}

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace relations)
    : ambient_(ambient), rel_(std::move(relations)) {
    if (rel_.ambient() != ambient_) throw Error("QuotientSpace: ambient mismatch");
    coords_ = rel_.complement_coords();
}

QVec QuotientSpace::project(const QVec& v) const {
    // Reduce v modulo the relation rref; what remains is supported on
    // the non-pivot coordinates, which are the quotient basis.
    QVec w = v;
    const auto& basis = rel_.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis[i][p] == 0) ++p;
        const Rat c = w[p];
        if (c != 0)
            for (std::size_t k = 0; k < ambient_; ++k)
                if (basis[i][k] != 0) w[k] -= c * basis[i][k];
    }
    QVec out(coords_.size(), Rat(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = w[coords_[i]];
    return out;
}

QVec QuotientSpace::representative(std::size_t i) const {
    QVec v(ambient_, Rat(0));
    v[coords_.at(i)] = 1;
    return v;
}

}  // namespace halg
