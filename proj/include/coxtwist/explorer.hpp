#ifndef COXTWIST_EXPLORER_HPP_
#define COXTWIST_EXPLORER_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxtwist/diagram.hpp"
#include "coxtwist/moves.hpp"
#include "json.hpp"

namespace coxtwist {

  struct ExplorerOptions {
    // Members per explored class.
    std::size_t cap = 10000;
    MoveOptions moves;
  };

  // Closure of a seed under nontrivial twists, one member per isomorphism
  // class. Twists keep vertex names, so every member diagram lives on the
  // seed's vertices and its tree path replays directly from the seed.
  struct TwistClass {
    struct Member {
      CoxeterMatrix              diagram;
      CoxeterMatrix              canonical;
      std::string                key;
      DiagramIso                 iso;  // diagram -> canonical
      std::optional<std::size_t> parent;
      MoveRecord                 move;  // parent diagram -> diagram
      std::size_t                depth = 0;
    };
    struct Edge {
      std::size_t from;
      std::size_t to;
      MoveRecord  move;
    };

    std::vector<CoxeterMatrix>                   seeds;
    std::vector<Member>                          members;
    std::vector<Edge>                            edges;
    std::unordered_map<std::string, std::size_t> index;
    bool                                         truncated = false;

    std::optional<std::size_t> find(CoxeterMatrix const& M) const;
    std::vector<MoveRecord>    path_to(std::size_t member) const;
  };

  TwistClass twist_class(CoxeterMatrix const& M, ExplorerOptions const& options = {});

  // Replays every tree path from the seed and compares with the stored
  // member diagram.
  bool verify_class(TwistClass const& C, MoveOptions const& options = {});

  struct Certificate {
    // Applied to the source: its reductions, then twists.
    std::vector<MoveRecord> moves;
    // Source vertex names -> target vertex names.
    DiagramIso final_iso;
    // Reductions of the target (empty for a plain twist-equivalence).
    std::vector<MoveRecord> target_reductions;
  };

  // relabel(replay(source, moves), final_iso) == replay(target, target_reductions).
  bool verify_certificate(CoxeterMatrix const& source,
                          CoxeterMatrix const& target,
                          Certificate const&   cert,
                          MoveOptions const&   options = {});

  struct Equivalence {
    enum class Kind { equivalent, not_equivalent, unknown };
    Kind                       kind = Kind::unknown;
    std::optional<Certificate> certificate;
    std::string                reason;
  };

  // Bidirectional search from both diagrams, meeting on canonical forms.
  Equivalence twist_equivalent(CoxeterMatrix const&   M,
                               CoxeterMatrix const&   M2,
                               ExplorerOptions const& options = {});

  struct Verdict {
    enum class Answer {
      isomorphic,
      not_isomorphic,
      conditionally_isomorphic,
      conditionally_not_isomorphic,
      inconclusive
    };
    Answer                     answer = Answer::inconclusive;
    std::optional<Certificate> certificate;
    std::string                reason;
    bool                       unconditional = false;
    // Inputs without A3, C3 and H3 subdiagrams: "first", "second", "both"
    // or "none".
    std::string   precondition;
    CoxeterMatrix reduced_first;
    CoxeterMatrix reduced_second;
  };

  std::string to_string(Verdict::Answer a);

  Verdict decide_isomorphism(CoxeterMatrix const&   M,
                             CoxeterMatrix const&   M2,
                             ExplorerOptions const& options = {});

  nlohmann::json to_json(DiagramIso const& iso);
  nlohmann::json to_json(Certificate const& cert);
  nlohmann::json to_json(Verdict const& v);
  nlohmann::json to_json(TwistClass const& C);
  Certificate    certificate_from_json(nlohmann::json const& j);

  // Nodes are members labelled by a hash of their serialization; edges are
  // labelled by move kind.
  std::string to_dot(TwistClass const& C);

}  // namespace coxtwist

#endif  // COXTWIST_EXPLORER_HPP_
