#ifndef COXTWIST_CANONICAL_HPP_
#define COXTWIST_CANONICAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

  struct CanonicalForm {
    // Copy of the input over the vertex names v0, v1, ... in canonical order.
    CoxeterMatrix matrix;
    // Input vertex name -> canonical vertex name.
    DiagramIso iso;
    // Upper-triangle label codes of `matrix`, row by row. Equal codes (and
    // equal rank) are equivalent to isomorphic inputs.
    std::vector<int> code;

    // Compact string form of (rank, code), suitable as a hash key.
    std::string key() const;
  };

  // Individualization-refinement over the edge-labelled graph: iterated
  // label-multiset colour refinement, then backtracking over the first
  // smallest non-singleton cell, keeping the lexicographically least code.
  // Automorphisms discovered at leaves prune equivalent branches.
  CanonicalForm canonical_form(CoxeterMatrix const& M);

  std::optional<DiagramIso> find_isomorphism(CoxeterMatrix const& M,
                                             CoxeterMatrix const& M2);

  std::string canonical_name(std::size_t i);

}  // namespace coxtwist

#endif  // COXTWIST_CANONICAL_HPP_
