#ifndef COXTWIST_MOVES_HPP_
#define COXTWIST_MOVES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxtwist/diagram.hpp"
#include "coxtwist/representation.hpp"

namespace coxtwist {

  struct MoveOptions {
    // admissible_pairs refuses diagrams of larger rank (the enumeration is
    // exponential).
    std::size_t rank_cap = 16;
    // Ask the oracle for the labels between K and L instead of writing inf.
    bool hybrid_twist = false;
    OracleOptions oracle;
  };

  // (J, K) with J spherical, K disjoint from J and its orthogonal complement,
  // and only infinite labels between K and the rest L.
  struct AdmissiblePair {
    VertexSet J;
    VertexSet K;
    VertexSet L;

    bool is_trivial() const {
      return K.empty() || L.empty();
    }
    bool operator==(AdmissiblePair const&) const = default;
  };

  // Builds the pair for given J and K, computing L. Throws PreconditionError
  // if the conditions fail.
  AdmissiblePair make_admissible_pair(CoxeterMatrix const& M, VertexSet J, VertexSet K);
  bool           is_admissible(CoxeterMatrix const& M, VertexSet J, VertexSet K);

  // tau has exactly one finite non-commuting neighbour t, with label
  // 2(2k+1) for k >= 1; every s commuting with tau commutes with t.
  struct PseudoTransposition {
    std::size_t tau = 0;
    std::size_t t   = 0;
    int         k   = 1;

    bool operator==(PseudoTransposition const&) const = default;
  };

  struct MoveRecord {
    enum class Kind { twist, reduction };
    Kind kind = Kind::twist;
    // Twist: vertex names of J and K, sorted.
    std::vector<std::string> J;
    std::vector<std::string> K;
    // Reduction: tau is replaced by u (= tau t tau, same position) and rho
    // (the longest element of {tau, t}, appended).
    std::string tau;
    std::string u;
    std::string rho;

    // "twist J={a,b} K={c}" or "reduce tau=a -> u=a_u rho=a_rho".
    std::string to_string() const;
    static MoveRecord parse(std::string_view line);

    bool operator==(MoveRecord const&) const = default;
  };

  std::vector<AdmissiblePair> admissible_pairs(CoxeterMatrix const& M, MoveOptions const& options = {});

  // Same vertex names; J-L labels permuted by the opposition involution of J,
  // K-L labels infinite (or oracle-computed in hybrid mode).
  std::pair<CoxeterMatrix, MoveRecord> apply_twist(CoxeterMatrix const&  M,
                                                   AdmissiblePair const& p,
                                                   MoveOptions const&    options = {});

  std::vector<PseudoTransposition> pseudo_transpositions(CoxeterMatrix const& M);
  std::optional<PseudoTransposition> pseudo_transposition_at(CoxeterMatrix const& M, std::size_t tau);

  // Fresh names are "<tau>_u" and "<tau>_rho", suffixed on collision.
  std::pair<CoxeterMatrix, MoveRecord> apply_reduction(CoxeterMatrix const&       M,
                                                       PseudoTransposition const& pt,
                                                       MoveOptions const&         options = {});
  // With explicit names for the new vertices (used by replay).
  std::pair<CoxeterMatrix, MoveRecord> apply_reduction(CoxeterMatrix const&       M,
                                                       PseudoTransposition const& pt,
                                                       std::string const&         u_name,
                                                       std::string const&         rho_name,
                                                       MoveOptions const&         options = {});

  // Reduces the pseudo-transposition with the smallest name until none is left.
  std::pair<CoxeterMatrix, std::vector<MoveRecord>> reduced_reduction(CoxeterMatrix const& M,
                                                                      MoveOptions const& options = {});

  // Applies recorded moves in order; throws PreconditionError on a move that
  // does not apply.
  CoxeterMatrix replay(CoxeterMatrix const&           M,
                       std::vector<MoveRecord> const& moves,
                       MoveOptions const&             options = {});

  // Oracle check of one twist: the orders of products of the twisted
  // generators {j, x, k, rho_J l rho_J} against the combinatorial labels.
  struct TwistCheck {
    CoxeterMatrix predicted;
    CoxeterMatrix computed;
    // "a b: predicted 3, oracle inf"
    std::vector<std::string> mismatches;

    bool ok() const {
      return mismatches.empty();
    }
  };

  TwistCheck verify_twist(GeometricRep const& rep, AdmissiblePair const& p, MoveOptions const& options = {});

}  // namespace coxtwist

#endif  // COXTWIST_MOVES_HPP_
