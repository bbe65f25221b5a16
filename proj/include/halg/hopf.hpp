#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "halg/rational.hpp"

namespace halg {

/// Index into the fixed basis of H. Group algebras enumerate the group in
/// table order; the polynomial backend indexes by degree of the generator.
using Idx = std::uint32_t;
using IdxTuple = std::vector<Idx>;

class HElement;
class XElement;

/// A computable cocommutative Hopf algebra presented by basis-indexed
/// structure data. All elements are finitely supported over the basis;
/// the polynomial backend is infinite-dimensional but never truncated —
/// verification suites take explicit degree caps instead.
class HopfBackend : public std::enable_shared_from_this<HopfBackend> {
  public:
    enum class Kind { group_algebra, polynomial };

    virtual ~HopfBackend() = default;

    virtual Kind kind() const = 0;
    virtual std::string name() const = 0;
    bool finite() const { return kind() == Kind::group_algebra; }
    /// Basis size for finite backends; throws otherwise.
    virtual std::size_t dim() const = 0;
    Idx unit_index() const { return unit_; }

    virtual std::string basis_name(Idx i) const = 0;
    virtual std::optional<Idx> basis_by_name(const std::string& n) const = 0;

    // Structure data on basis elements.
    virtual HElement mul_basis(Idx a, Idx b) const = 0;
    virtual std::vector<std::tuple<Idx, Idx, Rat>> coproduct_basis(Idx a) const = 0;
    virtual Rat counit_basis(Idx a) const = 0;
    virtual HElement antipode_basis(Idx a) const = 0;
    virtual bool grouplike_basis(Idx a) const = 0;

    // Dual-algebra structure on the dual basis {x_i}.
    virtual XElement x_convolve_basis(Idx a, Idx b) const = 0;
    virtual XElement x_translate_basis(Idx x, Idx f, bool right_side) const = 0;
    virtual XElement x_antipode_basis(Idx x) const = 0;
    /// The counit as the functional sum over group-likes (finite support in X°).
    virtual XElement counit_functional() const = 0;

    /// Basis indices enumerated for verification; finite backends return all,
    /// the polynomial backend returns degrees 0..cap.
    std::vector<Idx> verification_basis(std::size_t degree_cap) const;

    std::shared_ptr<const HopfBackend> self() const { return shared_from_this(); }

  protected:
    Idx unit_ = 0;
};

using BackendPtr = std::shared_ptr<const HopfBackend>;

/// Group algebra of a finite group given by its multiplication table.
class GroupBackend : public HopfBackend {
  public:
    GroupBackend(std::string name, std::vector<std::string> element_names,
                 std::vector<std::vector<Idx>> mul_table);

    static BackendPtr cyclic(unsigned n);      // Z/n, elements 1, g, g^2, ...
    static BackendPtr klein4();

    Kind kind() const override { return Kind::group_algebra; }
    std::string name() const override { return name_; }
    std::size_t dim() const override { return names_.size(); }
    std::string basis_name(Idx i) const override { return names_.at(i); }
    std::optional<Idx> basis_by_name(const std::string& n) const override;

    HElement mul_basis(Idx a, Idx b) const override;
    std::vector<std::tuple<Idx, Idx, Rat>> coproduct_basis(Idx a) const override;
    Rat counit_basis(Idx) const override { return Rat(1); }
    HElement antipode_basis(Idx a) const override;
    bool grouplike_basis(Idx) const override { return true; }

    XElement x_convolve_basis(Idx a, Idx b) const override;
    XElement x_translate_basis(Idx x, Idx f, bool right_side) const override;
    XElement x_antipode_basis(Idx x) const override;
    XElement counit_functional() const override;

    Idx group_mul(Idx a, Idx b) const { return table_[a][b]; }
    Idx group_inv(Idx a) const { return inverse_[a]; }

  private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<Idx>> table_;
    std::vector<Idx> inverse_;
};

/// Q[d] with the generator primitive: Delta(d^n) = sum C(n,k) d^k (x) d^{n-k},
/// S(d^n) = (-d)^n. Infinite basis indexed by degree.
class PolynomialBackend : public HopfBackend {
  public:
    PolynomialBackend() = default;

    Kind kind() const override { return Kind::polynomial; }
    std::string name() const override { return "Q[d]"; }
    std::size_t dim() const override { throw Error("polynomial backend is infinite-dimensional"); }
    std::string basis_name(Idx i) const override;
    std::optional<Idx> basis_by_name(const std::string& n) const override;

    HElement mul_basis(Idx a, Idx b) const override;
    std::vector<std::tuple<Idx, Idx, Rat>> coproduct_basis(Idx a) const override;
    Rat counit_basis(Idx a) const override { return Rat(a == 0 ? 1 : 0); }
    HElement antipode_basis(Idx a) const override;
    bool grouplike_basis(Idx a) const override { return a == 0; }

    XElement x_convolve_basis(Idx a, Idx b) const override;
    XElement x_translate_basis(Idx x, Idx f, bool right_side) const override;
    XElement x_antipode_basis(Idx x) const override;
    XElement counit_functional() const override;
};

/// Wraps a backend with a corrupted antipode value at one basis element.
/// Negative control for the axiom suite.
class MutatedAntipodeBackend : public HopfBackend {
  public:
    MutatedAntipodeBackend(BackendPtr inner, Idx at, Idx value);

    Kind kind() const override { return inner_->kind(); }
    std::string name() const override { return inner_->name() + "[S-mutated]"; }
    std::size_t dim() const override { return inner_->dim(); }
    std::string basis_name(Idx i) const override { return inner_->basis_name(i); }
    std::optional<Idx> basis_by_name(const std::string& n) const override {
        return inner_->basis_by_name(n);
    }
    HElement mul_basis(Idx a, Idx b) const override;
    std::vector<std::tuple<Idx, Idx, Rat>> coproduct_basis(Idx a) const override {
        return inner_->coproduct_basis(a);
    }
    Rat counit_basis(Idx a) const override { return inner_->counit_basis(a); }
    HElement antipode_basis(Idx a) const override;
    bool grouplike_basis(Idx a) const override { return inner_->grouplike_basis(a); }
    XElement x_convolve_basis(Idx a, Idx b) const override;
    XElement x_translate_basis(Idx x, Idx f, bool r) const override;
    XElement x_antipode_basis(Idx x) const override;
    XElement counit_functional() const override;

  private:
    HElement rebase(const HElement& e) const;
    XElement rebase(const XElement& e) const;
    BackendPtr inner_;
    Idx at_, value_;
};

/// Finitely supported coefficient map shared by HElement and XElement.
class CoeffMap {
  public:
    using Map = std::map<Idx, Rat>;

    const Map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(Idx i) const;
    void set(Idx i, Rat c);
    void accumulate(Idx i, const Rat& c);
    bool operator==(const CoeffMap& o) const { return coeffs_ == o.coeffs_; }

  protected:
    Map coeffs_;  // never stores zeros
};

/// Element of H in the fixed basis.
class HElement : public CoeffMap {
  public:
    HElement() = default;
    explicit HElement(BackendPtr h) : h_(std::move(h)) {}
    static HElement basis(BackendPtr h, Idx i);
    static HElement unit(BackendPtr h) { return basis(h, h->unit_index()); }
    static HElement zero(BackendPtr h) { return HElement(std::move(h)); }

    const BackendPtr& backend() const { return h_; }

    HElement operator+(const HElement& o) const;
    HElement operator-(const HElement& o) const;
    HElement operator-() const;
    HElement scaled(const Rat& c) const;
    HElement operator*(const HElement& o) const;  // product in H
    HElement antipode() const;
    Rat counit() const;
    bool operator==(const HElement& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

  private:
    BackendPtr h_;
    friend class XElement;
};

/// Element of X° = span of the dual basis; finite support.
class XElement : public CoeffMap {
  public:
    XElement() = default;
    explicit XElement(BackendPtr h) : h_(std::move(h)) {}
    static XElement basis(BackendPtr h, Idx i);
    static XElement zero(BackendPtr h) { return XElement(std::move(h)); }

    const BackendPtr& backend() const { return h_; }

    XElement operator+(const XElement& o) const;
    XElement operator-(const XElement& o) const;
    XElement scaled(const Rat& c) const;
    bool operator==(const XElement& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

  private:
    BackendPtr h_;
};

/// Plain element of the tensor power H^(x)n over the basis tuples.
class HTensor {
  public:
    using Map = std::map<IdxTuple, Rat>;

    HTensor(BackendPtr h, std::size_t arity) : h_(std::move(h)), arity_(arity) {}
    static HTensor of(const HElement& a);  // arity 1

    std::size_t arity() const { return arity_; }
    const Map& terms() const { return terms_; }
    const BackendPtr& backend() const { return h_; }
    bool is_zero() const { return terms_.empty(); }

    void accumulate(const IdxTuple& t, const Rat& c);
    HTensor operator+(const HTensor& o) const;
    HTensor operator-(const HTensor& o) const;
    HTensor scaled(const Rat& c) const;
    /// Tensor product, concatenating slots.
    HTensor tensor(const HTensor& o) const;
    /// Left-multiply slot `slot` by f.
    HTensor slot_mul_left(std::size_t slot, const HElement& f) const;
    /// Apply the antipode to one slot.
    HTensor slot_antipode(std::size_t slot) const;
    HTensor permuted(const std::vector<std::size_t>& perm) const;
    bool operator==(const HTensor& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  private:
    BackendPtr h_;
    std::size_t arity_;
    Map terms_;
};

// ---- hopf-core operations ----

HElement hopf_product(const HElement& a, const HElement& b);

/// Delta^{n-1}(h) as a plain tensor; n = 1 returns h itself.
HTensor iterated_coproduct(const HElement& h, std::size_t n);

/// Iterated coproduct with the antipode applied at the slots whose sign is -1.
HTensor sweedler_slot(const HElement& h, std::size_t n, const std::vector<int>& signs);

Rat dual_pair(const XElement& x, const HElement& h);

XElement x_convolve(const XElement& x, const XElement& y);

enum class Side { left, right };
/// <x f, g> = <x, g S(f)> for right; <f x, g> = <x, S(f) g> for left.
XElement x_translate(const XElement& x, const HElement& f, Side side);

XElement x_antipode(const XElement& x);

/// Delta(x) in X° (x) X° via the dual-basis expansion; pairs (x S(h_i), x_i).
std::vector<std::pair<XElement, XElement>> x_coproduct(const XElement& x, std::size_t degree_cap);

struct AxiomFailure {
    std::string axiom;
    std::string witness;
};

struct HopfAxiomReport {
    bool pass = true;
    std::vector<AxiomFailure> failures;
    std::size_t degree_cap = 0;  // 0 means exhaustive (finite backend)
};

/// Verifies on every (capped) basis element: coassociativity, counit,
/// antipode, cocommutativity, S flip-compatibility, and the dual-algebra
/// identities x_{(-1)}x_{(2)} = x_{(1)}x_{(-2)} = <x,1> eps and
/// <x_{(1)},1> eps x_{(2)} = x for dual-basis functionals.
HopfAxiomReport check_hopf_axioms(const BackendPtr& h, std::size_t degree_cap = 4);

}  // namespace halg
