#ifndef COXTWIST_AUTOMORPHISM_HPP_
#define COXTWIST_AUTOMORPHISM_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxtwist/representation.hpp"

namespace coxtwist {

  // Images of the generators under a candidate endomorphism of W.
  struct AutomorphismSpec {
    std::map<std::string, GroupElement> images;
    // Every image is an involution and every finite relation holds.
    bool verified = false;
    // Human-readable list of the checks that failed.
    std::vector<std::string> failures;
  };

  // Substitutes the images into g^2 = 1 and (g_i g_j)^m = 1. Vertices absent
  // from `images` map to themselves.
  AutomorphismSpec verify_relations(GeometricRep const&                        rep,
                                    std::map<std::string, GroupElement> const& images);

  // t -> t z on the odd component of s, identity elsewhere. z must be the
  // identity or a central involution of the spherical rest of eodd(s).
  // Throws PreconditionError otherwise, and Error if s z turns out to be a
  // reflection for nontrivial z.
  AutomorphismSpec build_transvection(GeometricRep const& rep,
                                      std::size_t         s,
                                      GroupElement const& z);

  // Extends `images` (words inside <J>) by the identity outside a graph
  // factor J. Throws PreconditionError if J is not a graph factor or an
  // image uses letters outside J.
  AutomorphismSpec build_local_automorphism(GeometricRep const&                        rep,
                                            VertexSet                                  J,
                                            std::map<std::string, GroupElement> const& images);

  struct DeformationSides {
    VertexSet rest;   // vertices outside {s, t} and its orthogonal complement
    VertexSet s_side; // reachable from s through finite labels inside `rest`
    VertexSet t_side;
  };

  DeformationSides deformation_sides(CoxeterMatrix const& M, std::size_t s, std::size_t t);

  // Conjugates t and the t-side by x (a word in s, t), fixing everything
  // else. Throws PreconditionError when the sides meet, the label is
  // infinite, x leaves <s, t>, or s and x t x^-1 do not generate <s, t>.
  AutomorphismSpec build_angle_deformation(GeometricRep const& rep,
                                           std::size_t         s,
                                           std::size_t         t,
                                           Word const&         x);

  struct SharpAngled {
    enum class Answer { yes, no, unknown };
    Answer answer = Answer::unknown;
    // w with w r w^-1 and w r2 w^-1 both generators.
    std::optional<Word> witness;
    // Yes only because the product has infinite order.
    bool vacuous = false;
  };

  std::string to_string(SharpAngled::Answer a);

  // Bounded search over conjugating words of length <= length_bound.
  SharpAngled is_sharp_angled_pair(GeometricRep const& rep,
                                   GroupElement const& r,
                                   GroupElement const& r2,
                                   std::size_t         length_bound);

}  // namespace coxtwist

#endif  // COXTWIST_AUTOMORPHISM_HPP_
