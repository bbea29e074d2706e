#ifndef COXTWIST_REPRESENTATION_HPP_
#define COXTWIST_REPRESENTATION_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxtwist/cyclotomic.hpp"
#include "coxtwist/diagram.hpp"

namespace coxtwist {

  // Dense matrix over Z[zeta_N]. Column vectors are rows x 1 matrices.
  class CycMatrix {
   public:
    CycMatrix() = default;
    CycMatrix(std::shared_ptr<CyclotomicRing const> ring,
              std::size_t                           rows,
              std::size_t                           cols);

    static CycMatrix identity(std::shared_ptr<CyclotomicRing const> ring,
                              std::size_t                           n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::shared_ptr<CyclotomicRing const> const& ring_ptr() const noexcept {
      return _ring;
    }

    std::span<std::int64_t const> entry(std::size_t i, std::size_t j) const {
      auto d = _ring->degree();
      return {_data.data() + (i * _cols + j) * d, d};
    }
    std::span<std::int64_t> entry(std::size_t i, std::size_t j) {
      auto d = _ring->degree();
      return {_data.data() + (i * _cols + j) * d, d};
    }
    bool      entry_is_zero(std::size_t i, std::size_t j) const;
    CycNumber number(std::size_t i, std::size_t j) const;
    void      set(std::size_t i, std::size_t j, CyclotomicRing::Coeffs const& c);

    CycMatrix column(std::size_t j) const;
    CycMatrix transpose() const;

    CycMatrix operator*(CycMatrix const& o) const;
    CycMatrix operator-(CycMatrix const& o) const;
    CycMatrix operator+(CycMatrix const& o) const;
    CycMatrix scaled(std::int64_t k) const;
    CycMatrix power(std::uint64_t e) const;

    bool        operator==(CycMatrix const& o) const;
    bool        is_identity() const;
    bool        is_zero() const;
    std::size_t hash() const noexcept;
    int         bits() const noexcept {
      return bit_length(_data);
    }

    std::string to_string() const;

   private:
    std::shared_ptr<CyclotomicRing const> _ring;
    std::size_t                           _rows = 0;
    std::size_t                           _cols = 0;
    std::vector<std::int64_t>             _data;
  };

  struct CycMatrixHash {
    std::size_t operator()(CycMatrix const& m) const noexcept {
      return m.hash();
    }
  };

  using Word = std::vector<std::size_t>;

  // A matrix of the geometric representation, optionally with a word in the
  // generators (positions) whose product it is.
  struct GroupElement {
    CycMatrix           matrix;
    std::optional<Word> word;

    bool operator==(GroupElement const& o) const {
      return matrix == o.matrix;
    }
  };

  struct OracleOptions {
    // Largest cyclotomic modulus N = 2 lcm(labels) accepted by build_rep.
    int max_modulus = 120;
    // Cap on matrix powers when searching for a finite order.
    std::uint64_t order_bound = 10000;
  };

  // The reflection representation of W(M) on the span of simple roots with
  // B(a_i, a_j) = -cos(pi / m_ij) (and -1 for infinite labels). Matrices act
  // on column coordinate vectors; everything is integral over Z[zeta_N] since
  // only 2B enters the reflection formula.
  class GeometricRep {
   public:
    GeometricRep(CoxeterMatrix M, OracleOptions options = {});

    CoxeterMatrix const& diagram() const noexcept {
      return _M;
    }
    OracleOptions const& options() const noexcept {
      return _options;
    }
    std::size_t rank() const noexcept {
      return _M.rank();
    }
    std::shared_ptr<CyclotomicRing const> const& ring() const noexcept {
      return _ring;
    }
    // 2B in the simple-root basis.
    CycMatrix const& gram2() const noexcept {
      return _gram2;
    }
    // B(a_i, a_j).
    CycNumber bilinear(std::size_t i, std::size_t j) const;
    // 2B(u, v) for column vectors.
    CycNumber form2(CycMatrix const& u, CycMatrix const& v) const;

    CycMatrix const& generator(std::size_t i) const {
      return _gens.at(i);
    }

    // s_i * g, touching one row.
    CycMatrix left_multiply(std::size_t i, CycMatrix const& g) const;
    // g * s_i, touching the columns.
    CycMatrix right_multiply(CycMatrix const& g, std::size_t i) const;

    // Upper bound for orders of finite-order elements (computed on demand).
    std::uint64_t finite_order_bound() const;

    // Real-embedding sign of an integral entry vector: the sign of the
    // coordinate of largest magnitude. Used for roots, whose coordinates
    // are all of one sign.
    int root_sign(CycMatrix const& column) const;

   private:
    CoxeterMatrix                         _M;
    OracleOptions                         _options;
    std::shared_ptr<CyclotomicRing const> _ring;
    CycMatrix                             _gram2;
    std::vector<CycMatrix>                _gens;
    std::shared_ptr<std::uint64_t>        _order_bound;
  };

  // Smallest N = 2 lcm(2, finite labels) serving diagram M.
  int required_modulus(CoxeterMatrix const& M);

  GeometricRep build_rep(CoxeterMatrix const& M, OracleOptions options = {});

  // Product of the generators in `word`, left to right.
  GroupElement element(GeometricRep const& rep, Word const& word);
  GroupElement element(GeometricRep const&              rep,
                       std::span<std::string const> word);
  GroupElement identity_element(GeometricRep const& rep);
  GroupElement multiply(GroupElement const& a, GroupElement const& b);
  // Needs a word (or an involution, detected by squaring).
  GroupElement inverse(GeometricRep const& rep, GroupElement const& g);
  // w g w^-1.
  GroupElement conjugate(GeometricRep const& rep,
                         GroupElement const& w,
                         GroupElement const& g);

  std::string format_word(CoxeterMatrix const& M, Word const& w);
  // Whitespace-separated names, or "-" for the empty word.
  Word parse_word(CoxeterMatrix const& M, std::string_view text);

  struct Order {
    enum class Kind { finite, infinite, unknown };
    Kind          kind  = Kind::unknown;
    std::uint64_t value = 0;

    static Order finite(std::uint64_t k) {
      return {Kind::finite, k};
    }
    static Order infinite() {
      return {Kind::infinite, 0};
    }
    static Order unknown() {
      return {Kind::unknown, 0};
    }
    bool is_finite() const {
      return kind == Kind::finite;
    }
    bool is_infinite() const {
      return kind == Kind::infinite;
    }
    std::string to_string() const;
    // Label for a pair of generators with this product order.
    Label to_label() const;

    bool operator==(Order const&) const = default;
  };

  // The root (-1 eigenvector) of g if g is a reflection: g^2 = 1 and
  // g - 1 has rank one. Scaled so that its first nonzero coordinate is 1.
  std::optional<std::vector<CycNumber>> is_reflection(GeometricRep const& rep,
                                                      GroupElement const& g);
  // Same test, returning an integral (unnormalised) root column.
  std::optional<CycMatrix> reflection_root(GeometricRep const& rep,
                                           CycMatrix const&    g);

  // Order of r r2 for reflections r, r2. Infinite exactly when the roots
  // satisfy |B(u, v)| >= |u||v|; otherwise the candidate order from the angle
  // is confirmed by exact matrix powers. Throws PreconditionError for
  // non-reflections.
  Order order_of_product(GeometricRep const& rep,
                         GroupElement const& r,
                         GroupElement const& r2,
                         std::uint64_t       bound);
  Order order_of_product(GeometricRep const& rep,
                         GroupElement const& r,
                         GroupElement const& r2);

  // Order of an arbitrary element: powers up to the finite-order bound of the
  // diagram (every finite-order element is conjugate into a finite standard
  // parabolic subgroup). A power whose trace exceeds the rank proves infinite
  // order. Unknown when `bound` or 64-bit arithmetic runs out first.
  Order element_order(GeometricRep const& rep,
                      GroupElement const& g,
                      std::uint64_t       bound);

  // rho_J by the greedy descent: append s_j while w(a_j) is positive.
  GroupElement longest_element(GeometricRep const& rep, VertexSet J);

  // Nontrivial central involutions of <J>: products of rho_C over non-empty
  // sets of components C of J with trivial opposition involution.
  std::vector<GroupElement> center_of_spherical(GeometricRep const& rep,
                                                VertexSet           J);

  struct Enumeration {
    std::vector<GroupElement> elements;
    bool                      truncated = false;
  };

  // Breadth-first closure under left multiplication by generators.
  Enumeration enumerate_group(GeometricRep const& rep, std::size_t element_cap);
  Enumeration enumerate_group(GeometricRep const& rep,
                              VertexSet           J,
                              std::size_t         element_cap);

}  // namespace coxtwist

#endif  // COXTWIST_REPRESENTATION_HPP_
