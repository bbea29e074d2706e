#ifndef COXTWIST_CLASSIFY_HPP_
#define COXTWIST_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

  enum class Family { A, B, D, E, F, H, I };

  // An irreducible spherical type. I2(3) and I2(4) are always reported as A2
  // and B2; B_n also stands for C_n.
  struct SphericalType {
    Family family    = Family::A;
    int    rank      = 1;
    int    parameter = 0;  // the dihedral label for I2(m), otherwise 0

    std::string to_string() const;
    // |W| for this type.
    std::uint64_t group_order() const;
    // An upper bound for the order of any element of W.
    std::uint64_t max_element_order() const;

    bool operator==(SphericalType const&) const = default;
  };

  SphericalType type_A(int n);
  SphericalType type_B(int n);
  SphericalType type_D(int n);
  SphericalType type_H(int n);
  SphericalType type_I2(int m);

  // Throws PreconditionError unless M is non-empty and connected.
  std::optional<SphericalType> recognize_irreducible(CoxeterMatrix const& M);
  // Same, for the connected subdiagram on C.
  std::optional<SphericalType> recognize_component(CoxeterMatrix const& M,
                                                   VertexSet            C);

  struct SphericalComponent {
    VertexSet     vertices;
    SphericalType type;
  };

  // Irreducible components of M_J with their types, or nothing if one of them
  // is not spherical.
  std::optional<std::vector<SphericalComponent>>
  spherical_decomposition(CoxeterMatrix const& M, VertexSet J);

  bool is_spherical(CoxeterMatrix const& M, VertexSet J);

  // All non-empty spherical subsets of `within`, in increasing bit order.
  std::vector<VertexSet> spherical_subsets(CoxeterMatrix const& M,
                                           VertexSet            within);
  std::vector<VertexSet> spherical_subsets(CoxeterMatrix const& M);

  // Permutation j -> rho_J j rho_J of a spherical J, by positions of M.
  struct Opposition {
    VertexSet                domain;
    std::vector<std::size_t> image;  // identity outside `domain`

    bool is_identity() const;
  };

  Opposition opposition_involution(CoxeterMatrix const& M, VertexSet J);

  // A subset whose induced subdiagram is irreducible of one of `types`.
  std::optional<VertexSet>
  find_subdiagram_of_type(CoxeterMatrix const&              M,
                          std::vector<SphericalType> const& types);

  // Bound on the order of any finite-order element of W(M): every such
  // element is conjugate into a spherical standard parabolic subgroup.
  std::uint64_t finite_order_bound(CoxeterMatrix const& M);

  // "A2", "A1 x I2(5)", ... for a spherical J; "non-spherical" otherwise.
  std::string describe_type(CoxeterMatrix const& M, VertexSet J);

}  // namespace coxtwist

#endif  // COXTWIST_CLASSIFY_HPP_
