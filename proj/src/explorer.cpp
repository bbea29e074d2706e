#include "coxtwist/explorer.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

#include "coxtwist/canonical.hpp"
#include "coxtwist/classify.hpp"

namespace coxtwist {

  namespace {

    // One side of a search: a growing class plus its expansion cursor.
    struct Exploration {
      TwistClass                                  C;
      std::size_t                                 cursor = 0;
      std::set<std::pair<std::size_t, std::size_t>> seen_edges;

      explicit Exploration(CoxeterMatrix const& seed) {
        C.seeds.push_back(seed);
        add(seed, std::nullopt, {});
      }

      bool exhausted() const {
        return C.truncated || cursor >= C.members.size();
      }
      bool complete() const {
        return !C.truncated && cursor >= C.members.size();
      }
      std::size_t frontier() const {
        return C.members.size() - cursor;
      }

      std::size_t add(CoxeterMatrix const& M, std::optional<std::size_t> parent, MoveRecord move) {
        auto cf = canonical_form(M);
        TwistClass::Member m;
        m.diagram   = M;
        m.key       = cf.key();
        m.canonical = std::move(cf.matrix);
        m.iso       = std::move(cf.iso);
        m.parent    = parent;
        m.move      = std::move(move);
        m.depth     = parent ? C.members[*parent].depth + 1 : 0;
        C.index.emplace(m.key, C.members.size());
        C.members.push_back(std::move(m));
        return C.members.size() - 1;
      }

      void edge(std::size_t from, std::size_t to, MoveRecord const& move) {
        if (from != to && seen_edges.emplace(std::min(from, to), std::max(from, to)).second) {
          C.edges.push_back({from, to, move});
        }
      }

      // Expands the next member. on_new returns true to stop early.
      void step(ExplorerOptions const& options, std::function<bool(std::size_t)> const& on_new) {
        auto const from = cursor++;
        auto const M    = C.members[from].diagram;
        for (auto const& p : admissible_pairs(M, options.moves)) {
          if (p.is_trivial()) {
            continue;
          }
          auto [next, record] = apply_twist(M, p, options.moves);
          auto key            = canonical_form(next).key();
          if (auto it = C.index.find(key); it != C.index.end()) {
            edge(from, it->second, record);
            continue;
          }
          if (C.members.size() >= options.cap) {
            C.truncated = true;
            return;
          }
          auto to = add(next, from, record);
          edge(from, to, record);
          if (on_new && on_new(to)) {
            return;
          }
        }
      }
    };

    MoveRecord translate(MoveRecord r, DiagramIso const& iso) {
      for (auto* names : {&r.J, &r.K}) {
        for (auto& v : *names) {
          v = iso(v);
        }
        std::sort(names->begin(), names->end());
      }
      if (r.kind == MoveRecord::Kind::reduction) {
        r.tau = iso(r.tau);
      }
      return r;
    }

    bool lacks_rank3_obstruction(CoxeterMatrix const& M) {
      return !find_subdiagram_of_type(M, {type_A(3), type_B(3), type_H(3)}).has_value();
    }

    std::string fnv_hex(std::string const& text) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char c : text) {
        h = (h ^ c) * 0x100000001b3ULL;
      }
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
      return buf;
    }

    nlohmann::json records(std::vector<MoveRecord> const& moves) {
      auto out = nlohmann::json::array();
      for (auto const& m : moves) {
        out.push_back(m.to_string());
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Classes
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> TwistClass::find(CoxeterMatrix const& M) const {
    auto it = index.find(canonical_form(M).key());
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<MoveRecord> TwistClass::path_to(std::size_t member) const {
    std::vector<MoveRecord> out;
    for (auto i = std::optional<std::size_t>(member); members.at(*i).parent; i = members[*i].parent) {
      out.push_back(members[*i].move);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  TwistClass twist_class(CoxeterMatrix const& M, ExplorerOptions const& options) {
    Exploration e(M);
    while (!e.exhausted()) {
      e.step(options, nullptr);
    }
    return std::move(e.C);
  }

  bool verify_class(TwistClass const& C, MoveOptions const& options) {
    if (C.seeds.empty()) {
      return C.members.empty();
    }
    for (std::size_t i = 0; i < C.members.size(); ++i) {
      try {
        if (!(replay(C.seeds.front(), C.path_to(i), options) == C.members[i].diagram)) {
          return false;
        }
      } catch (Error const&) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  bool verify_certificate(CoxeterMatrix const& source,
                          CoxeterMatrix const& target,
                          Certificate const&   cert,
                          MoveOptions const&   options) {
    try {
      auto const moved = replay(source, cert.moves, options);
      auto const goal  = replay(target, cert.target_reductions, options);
      return is_isomorphism(moved, goal, cert.final_iso) && relabel(moved, cert.final_iso) == goal;
    } catch (Error const&) {
      return false;
    }
  }

  Equivalence twist_equivalent(CoxeterMatrix const&   M,
                               CoxeterMatrix const&   M2,
                               ExplorerOptions const& options) {
    Equivalence out;
    if (M.rank() != M2.rank() || label_multiset(M) != label_multiset(M2)) {
      out.kind   = Equivalence::Kind::not_equivalent;
      out.reason = M.rank() != M2.rank() ? "ranks differ" : "label multisets differ";
      return out;
    }

    Exploration a(M), b(M2);
    std::optional<std::pair<std::size_t, std::size_t>> meet;
    if (a.C.members[0].key == b.C.members[0].key) {
      meet.emplace(0, 0);
    }
    auto probe = [&meet](Exploration const& here, Exploration const& there, bool here_is_a) {
      return [&meet, h = &here, t = &there, here_is_a](std::size_t i) {
        auto it = t->C.index.find(h->C.members[i].key);
        if (it == t->C.index.end()) {
          return false;
        }
        meet = here_is_a ? std::pair{i, it->second} : std::pair{it->second, i};
        return true;
      };
    };
    auto const on_a = probe(a, b, true);
    auto const on_b = probe(b, a, false);

    while (!meet) {
      if (a.complete() || b.complete()) {
        out.kind   = Equivalence::Kind::not_equivalent;
        out.reason = "twist class exhausted without meeting";
        return out;
      }
      if (a.exhausted() && b.exhausted()) {
        out.kind   = Equivalence::Kind::unknown;
        out.reason = "twist classes truncated at " + std::to_string(options.cap) + " members";
        return out;
      }
      bool const expand_a = !a.exhausted() && (b.exhausted() || a.frontier() <= b.frontier());
      if (expand_a) {
        a.step(options, on_a);
      } else {
        b.step(options, on_b);
      }
    }

    auto const& x   = a.C.members[meet->first];
    auto const& y   = b.C.members[meet->second];
    auto const  psi = y.iso.inverse().compose(x.iso);  // x.diagram -> y.diagram
    auto const  back = psi.inverse();

    Certificate cert;
    cert.moves     = a.C.path_to(meet->first);
    auto from_b    = b.C.path_to(meet->second);
    // Twists are involutions, so B's path read backwards leads from y back to M2.
    for (auto it = from_b.rbegin(); it != from_b.rend(); ++it) {
      cert.moves.push_back(translate(*it, back));
    }
    cert.final_iso = psi;
    if (!verify_certificate(M, M2, cert, options.moves)) {
      throw Error("internal error: twist certificate failed replay");
    }
    out.kind        = Equivalence::Kind::equivalent;
    out.certificate = std::move(cert);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Verdict::Answer a) {
    switch (a) {
      case Verdict::Answer::isomorphic:
        return "Isomorphic";
      case Verdict::Answer::not_isomorphic:
        return "NotIsomorphic";
      case Verdict::Answer::conditionally_isomorphic:
        return "ConditionallyIsomorphic";
      case Verdict::Answer::conditionally_not_isomorphic:
        return "ConditionallyNotIsomorphic";
      case Verdict::Answer::inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
  }

  Verdict decide_isomorphism(CoxeterMatrix const&   M,
                             CoxeterMatrix const&   M2,
                             ExplorerOptions const& options) {
    Verdict v;
    bool const first  = lacks_rank3_obstruction(M);
    bool const second = lacks_rank3_obstruction(M2);
    v.precondition    = first && second ? "both" : first ? "first" : second ? "second" : "none";
    v.unconditional   = first || second;

    std::vector<MoveRecord> trace1, trace2;
    Equivalence             eq;
    try {
      std::tie(v.reduced_first, trace1)  = reduced_reduction(M, options.moves);
      std::tie(v.reduced_second, trace2) = reduced_reduction(M2, options.moves);
      eq = twist_equivalent(v.reduced_first, v.reduced_second, options);
    } catch (ArithmeticLimit const& e) {
      eq.kind   = Equivalence::Kind::unknown;
      eq.reason = e.what();
    } catch (PreconditionError const& e) {
      eq.kind   = Equivalence::Kind::unknown;
      eq.reason = e.what();
    }

    switch (eq.kind) {
      case Equivalence::Kind::equivalent: {
        Certificate cert;
        cert.moves = trace1;
        cert.moves.insert(cert.moves.end(), eq.certificate->moves.begin(), eq.certificate->moves.end());
        cert.final_iso         = eq.certificate->final_iso;
        cert.target_reductions = trace2;
        if (!verify_certificate(M, M2, cert, options.moves)) {
          throw Error("internal error: isomorphism certificate failed replay");
        }
        v.certificate = std::move(cert);
        v.answer = v.unconditional ? Verdict::Answer::isomorphic : Verdict::Answer::conditionally_isomorphic;
        break;
      }
      case Equivalence::Kind::not_equivalent:
        v.answer = v.unconditional ? Verdict::Answer::not_isomorphic
                                   : Verdict::Answer::conditionally_not_isomorphic;
        v.reason = "reduced reductions are not twist-equivalent: " + eq.reason;
        break;
      case Equivalence::Kind::unknown:
        v.answer        = Verdict::Answer::inconclusive;
        v.unconditional = false;
        v.reason        = eq.reason;
        break;
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json to_json(DiagramIso const& iso) {
    auto out = nlohmann::json::object();
    for (auto const& [from, to] : iso.mapping) {
      out[from] = to;
    }
    return out;
  }

  nlohmann::json to_json(Certificate const& cert) {
    return {{"moves", records(cert.moves)},
            {"final_iso", to_json(cert.final_iso)},
            {"target_reductions", records(cert.target_reductions)}};
  }

  Certificate certificate_from_json(nlohmann::json const& j) {
    Certificate cert;
    try {
      for (auto const& m : j.at("moves")) {
        cert.moves.push_back(MoveRecord::parse(m.get<std::string>()));
      }
      for (auto const& [from, to] : j.at("final_iso").items()) {
        cert.final_iso.mapping.emplace(from, to.get<std::string>());
      }
      if (j.contains("target_reductions")) {
        for (auto const& m : j.at("target_reductions")) {
          cert.target_reductions.push_back(MoveRecord::parse(m.get<std::string>()));
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed certificate: ") + e.what());
    }
    return cert;
  }

  nlohmann::json to_json(Verdict const& v) {
    return {{"answer", to_string(v.answer)},
            {"unconditional", v.unconditional},
            {"precondition", v.precondition},
            {"reason", v.reason},
            {"certificate", v.certificate ? to_json(*v.certificate) : nlohmann::json(nullptr)},
            {"reduced_first", serialize(v.reduced_first)},
            {"reduced_second", serialize(v.reduced_second)}};
  }

  nlohmann::json to_json(TwistClass const& C) {
    auto members = nlohmann::json::array();
    for (std::size_t i = 0; i < C.members.size(); ++i) {
      auto const& m = C.members[i];
      members.push_back({{"index", i},
                         {"diagram", serialize(m.diagram)},
                         {"parent", m.parent ? nlohmann::json(*m.parent) : nlohmann::json(nullptr)},
                         {"move", m.parent ? nlohmann::json(m.move.to_string()) : nlohmann::json(nullptr)},
                         {"iso", to_json(m.iso)}});
    }
    return {{"seed", C.seeds.empty() ? "" : serialize(C.seeds.front())},
            {"size", C.members.size()},
            {"truncated", C.truncated},
            {"members", members}};
  }

  std::string to_dot(TwistClass const& C) {
    std::string out = "graph twist_class {\n";
    for (std::size_t i = 0; i < C.members.size(); ++i) {
      out += "  m" + std::to_string(i) + " [label=\"" + fnv_hex(serialize(C.members[i].canonical)) + "\"];\n";
    }
    for (auto const& e : C.edges) {
      out += "  m" + std::to_string(e.from) + " -- m" + std::to_string(e.to) + " [label=\""
             + (e.move.kind == MoveRecord::Kind::twist ? "twist" : "reduce") + "\"];\n";
    }
    return out + "}\n";
  }

}  // namespace coxtwist
