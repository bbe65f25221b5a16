#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "halg/rational.hpp"

namespace halg {

using QVec = std::vector<Rat>;

QVec qvec_zero(std::size_t n);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& a);
bool qvec_is_zero(const QVec& a);

/// Dense matrix over exact rationals. Row-major; small, desk scale.
/// This is also the independent linear-algebra oracle used by tests
/// (brute-force quotients, commutant solves), so it stays simple.
class QMat {
  public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, QVec(cols, Rat(0))) {}

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
    QVec& row(std::size_t r) { return data_[r]; }
    const QVec& row(std::size_t r) const { return data_[r]; }
    void add_row(QVec v);

    QVec apply(const QVec& v) const;        // this * v
    QMat multiply(const QMat& other) const;  // this * other
    QMat transpose() const;

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Basis of the right kernel {v : A v = 0}.
    std::vector<QVec> kernel() const;

    /// One solution of A x = b, if any.
    std::optional<QVec> solve(const QVec& b) const;

    bool operator==(const QMat& o) const { return cols_ == o.cols_ && data_ == o.data_; }

  private:
    std::size_t cols_ = 0;
    std::vector<QVec> data_;
};

QMat identity_matrix(std::size_t n);

/// A linear subspace of Q^n, kept as an rref basis so that equality of
/// subspaces is equality of representations.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVec>& basis() const { return basis_; }

    /// Adds a vector; returns true if it enlarged the space.
    bool add(const QVec& v);
    bool contains(const QVec& v) const;
    /// Coordinates of v in the rref basis, if v lies in the subspace.
    std::optional<QVec> coordinates(const QVec& v) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    static Subspace span(std::size_t ambient, const std::vector<QVec>& gens);
    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    /// A complement basis: standard basis vectors extending this to Q^n.
    std::vector<std::size_t> complement_coords() const;

  private:
    void reinsert(QVec v);
    std::size_t ambient_;
    std::vector<QVec> basis_;             // rref rows, pivots increasing
    std::vector<std::size_t> pivots_;
};

/// Quotient Q^n / W with an explicit basis (the non-pivot coordinates of W)
/// and the projection map.
class QuotientSpace {
  public:
    QuotientSpace(std::size_t ambient, Subspace relations);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return coords_.size(); }
    const Subspace& relations() const { return rel_; }
    /// Ambient coordinates whose images form the quotient basis.
    const std::vector<std::size_t>& basis_coords() const { return coords_; }
    QVec project(const QVec& v) const;
    /// The chosen representative in Q^n of quotient-basis vector i.
    QVec representative(std::size_t i) const;

  private:
    std::size_t ambient_;
    Subspace rel_;
    std::vector<std::size_t> coords_;
};

/// Key <-> dense-index bijection for flattening structured bases.
template <typename Key>
class Indexer {
  public:
    std::size_t add(const Key& k) {
        auto it = index_.find(k);
        if (it != index_.end()) return it->second;
        std::size_t i = keys_.size();
        index_.emplace(k, i);
        keys_.push_back(k);
        return i;
    }
    std::optional<std::size_t> find(const Key& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t at(const Key& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) throw Error("Indexer: unknown key");
        return it->second;
    }
    const Key& key(std::size_t i) const { return keys_.at(i); }
    std::size_t size() const { return keys_.size(); }

  private:
    std::map<Key, std::size_t> index_;
    std::vector<Key> keys_;
};

}  // namespace halg
