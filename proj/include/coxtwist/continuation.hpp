#ifndef COXTWIST_CONTINUATION_HPP_
#define COXTWIST_CONTINUATION_HPP_

#include <optional>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

  struct OddData {
    // Vertices joined to s by a path of odd labels.
    VertexSet odd;
    // odd plus every vertex with a finite label (2 included) to a member of odd.
    VertexSet eodd;
    // The component of the subdiagram on eodd containing s.
    VertexSet own_component;
    // Union of the spherical components of that subdiagram avoiding s.
    VertexSet spherical_rest;
  };

  OddData odd_data(CoxeterMatrix const& M, std::size_t s);

  // A subset of type B3 (= C3) or D4, if there is one.
  std::optional<VertexSet> continuation_obstruction(CoxeterMatrix const& M);

  struct FiniteContinuation {
    // Generators of the finite continuation of s.
    VertexSet generators;
    // Whether the component of s in eodd(s) is spherical (selects the branch).
    bool own_component_spherical = false;
    // Nothing finite sits around s: s is a reflection for every Coxeter
    // generating set.
    bool reflection_rigid = false;
  };

  // Valid only without B3 / D4 subdiagrams; throws PreconditionError otherwise.
  FiniteContinuation finite_continuation(CoxeterMatrix const& M, std::size_t s);

  // Spherical J such that every other vertex commutes with all of J or has
  // infinite labels to all of J. Sorted by bits.
  std::vector<VertexSet> graph_factors(CoxeterMatrix const& M);
  bool                   is_graph_factor(CoxeterMatrix const& M, VertexSet J);

}  // namespace coxtwist

#endif  // COXTWIST_CONTINUATION_HPP_
