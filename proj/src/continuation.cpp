#include "coxtwist/continuation.hpp"

#include "coxtwist/classify.hpp"

namespace coxtwist {

  OddData odd_data(CoxeterMatrix const& M, std::size_t s) {
    if (s >= M.rank()) {
      throw Error("vertex position out of range");
    }
    OddData out;
    out.odd.insert(s);
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < M.rank(); ++w) {
        if (w == v || out.odd.contains(w)) {
          continue;
        }
        auto m = M.label(v, w);
        if (m.is_finite() && m.value() % 2 == 1) {
          out.odd.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.eodd = out.odd;
    for (std::size_t t = 0; t < M.rank(); ++t) {
      for (auto u : out.odd.members()) {
        if (t != u && M.label(t, u).is_finite()) {
          out.eodd.insert(t);
        }
      }
    }
    for (auto C : components(M, out.eodd)) {
      if (C.contains(s)) {
        out.own_component = C;
      } else if (is_spherical(M, C)) {
        out.spherical_rest = out.spherical_rest | C;
      }
    }
    return out;
  }

  std::optional<VertexSet> continuation_obstruction(CoxeterMatrix const& M) {
    return find_subdiagram_of_type(M, {type_B(3), type_D(4)});
  }

  FiniteContinuation finite_continuation(CoxeterMatrix const& M, std::size_t s) {
    if (auto bad = continuation_obstruction(M)) {
      throw PreconditionError("finite continuation unavailable: " + M.format(*bad)
                              + " is of type " + describe_type(M, *bad));
    }
    auto const         d = odd_data(M, s);
    FiniteContinuation out;
    out.own_component_spherical = is_spherical(M, d.own_component);
    out.generators = (out.own_component_spherical ? d.own_component : VertexSet{s})
                     | d.spherical_rest;
    out.reflection_rigid = d.spherical_rest.empty() && !out.own_component_spherical;
    return out;
  }

  bool is_graph_factor(CoxeterMatrix const& M, VertexSet J) {
    if (J.empty() || !is_spherical(M, J)) {
      return false;
    }
    for (auto t : (M.all() - J).members()) {
      bool all_commute = true, all_infinite = true;
      for (auto j : J.members()) {
        auto m       = M.label(t, j);
        all_commute  = all_commute && m.commutes();
        all_infinite = all_infinite && m.is_infinite();
      }
      if (!all_commute && !all_infinite) {
        return false;
      }
    }
    return true;
  }

  std::vector<VertexSet> graph_factors(CoxeterMatrix const& M) {
    std::vector<VertexSet> out;
    for (auto J : spherical_subsets(M)) {
      if (is_graph_factor(M, J)) {
        out.push_back(J);
      }
    }
    return out;
  }

}  // namespace coxtwist
