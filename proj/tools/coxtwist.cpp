// coxtwist: command-line front end for diagrams, moves, twist classes and the
// isomorphism decision.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxtwist/canonical.hpp"
#include "coxtwist/classify.hpp"
#include "coxtwist/continuation.hpp"
#include "coxtwist/explorer.hpp"
#include "coxtwist/moves.hpp"
#include "coxtwist/representation.hpp"

using namespace coxtwist;

namespace {

  enum Exit : int {
    kOk             = 0,
    kNotIsomorphic  = 1,
    kConditional    = 2,
    kUsage          = 64,
    kTruncated      = 65,
    kNoInput        = 66,
    kCannotCreate   = 73,
    kFailure        = 70,
  };

  struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Config {
    std::size_t   cap          = 10000;
    std::uint64_t bound        = 10000;
    std::string   format       = "text";
    bool          hybrid_twist = false;
    std::string   output;
    int           max_modulus = 120;
    std::size_t   rank_cap    = 16;
    std::size_t   enum_cap    = 2000;

    OracleOptions oracle() const {
      return {max_modulus, bound};
    }
    MoveOptions moves() const {
      MoveOptions m;
      m.rank_cap     = rank_cap;
      m.hybrid_twist = hybrid_twist;
      m.oracle       = oracle();
      return m;
    }
    ExplorerOptions explorer() const {
      return {cap, moves()};
    }
  };

  CoxeterMatrix load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
  }

  // Names given as "a,b", "{a,b}" or separate tokens.
  VertexSet parse_set(CoxeterMatrix const& M, std::vector<std::string> const& tokens) {
    std::vector<std::string> names;
    for (auto text : tokens) {
      for (auto& c : text) {
        if (c == ',' || c == '{' || c == '}') {
          c = ' ';
        }
      }
      std::istringstream in(text);
      for (std::string name; in >> name;) {
        names.push_back(name);
      }
    }
    return M.vertex_set(names);
  }

  std::string join(std::vector<std::string> const& v, std::string const& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? sep : "") + v[i];
    }
    return out;
  }

  std::string format_iso(DiagramIso const& iso) {
    std::vector<std::string> parts;
    for (auto const& [from, to] : iso.mapping) {
      parts.push_back(from + "->" + to);
    }
    return join(parts, " ");
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(std::ostream& out, std::string const& file) {
    out << serialize(load(file));
    return kOk;
  }

  int cmd_info(std::ostream& out, std::string const& file, Config const& cfg) {
    auto const M = load(file);
    out << "rank: " << M.rank() << '\n';
    std::vector<std::string> comps;
    for (auto const& c : components(M)) {
      comps.push_back(M.format(c) + " " + (is_spherical(M, c) ? describe_type(M, c) : "non-spherical"));
    }
    out << "components: " << join(comps, "; ") << '\n';
    out << "spherical: " << (is_spherical(M, M.all()) ? describe_type(M, M.all()) : "no") << '\n';

    std::vector<std::string> factors;
    for (auto J : graph_factors(M)) {
      factors.push_back(M.format(J));
    }
    out << "graph factors: " << (factors.empty() ? "none" : join(factors, " ")) << '\n';

    std::vector<std::string> pts;
    for (auto const& pt : pseudo_transpositions(M)) {
      pts.push_back(M.name(pt.tau) + " (t=" + M.name(pt.t) + ", k=" + std::to_string(pt.k) + ")");
    }
    out << "pseudo-transpositions: " << (pts.empty() ? "none" : join(pts, ", ")) << '\n';

    if (M.rank() <= cfg.rank_cap) {
      std::size_t nontrivial = 0;
      auto const  pairs      = admissible_pairs(M, cfg.moves());
      for (auto const& p : pairs) {
        nontrivial += p.is_trivial() ? 0 : 1;
      }
      out << "admissible pairs: " << pairs.size() << " (" << nontrivial << " nontrivial)\n";
    } else {
      out << "admissible pairs: skipped (rank above " << cfg.rank_cap << ")\n";
    }

    if (auto bad = continuation_obstruction(M)) {
      out << "FC: unavailable: C3/D4 present at " << M.format(*bad) << '\n';
    } else {
      for (std::size_t s = 0; s < M.rank(); ++s) {
        auto fc = finite_continuation(M, s);
        out << "FC(" << M.name(s) << ")=" << M.format(fc.generators)
            << (fc.reflection_rigid ? " rigid" : "") << '\n';
      }
    }
    return kOk;
  }

  int cmd_reduce(std::ostream& out, std::string const& file, Config const& cfg) {
    auto const M            = load(file);
    auto const [R, trace]   = reduced_reduction(M, cfg.moves());
    if (cfg.format == "json") {
      auto moves = nlohmann::json::array();
      for (auto const& m : trace) {
        moves.push_back(m.to_string());
      }
      out << nlohmann::json{{"diagram", serialize(R)}, {"trace", moves}}.dump(2) << '\n';
      return kOk;
    }
    out << serialize(R);
    for (auto const& m : trace) {
      out << "# " << m.to_string() << '\n';
    }
    return kOk;
  }

  int cmd_class(std::ostream& out, std::string const& file, Config const& cfg) {
    auto const M    = load(file);
    auto const C    = twist_class(M, cfg.explorer());
    auto const seed = C.members.front().key;
    bool       all_isomorphic = true;
    for (auto const& m : C.members) {
      all_isomorphic = all_isomorphic && m.key == seed;
    }
    if (cfg.format == "dot") {
      out << to_dot(C);
    } else if (cfg.format == "json") {
      auto j              = to_json(C);
      j["all_isomorphic"] = all_isomorphic;
      out << j.dump(2) << '\n';
    } else {
      out << "# class size " << C.members.size() << (C.truncated ? " (truncated)" : " (complete)") << '\n';
      out << "# every member is isomorphic to the seed: " << (all_isomorphic ? "yes" : "no") << '\n';
      for (std::size_t i = 0; i < C.members.size(); ++i) {
        auto const& m = C.members[i];
        out << "\n# member " << i;
        if (m.parent) {
          out << " <- " << *m.parent << " by " << m.move.to_string();
        } else {
          out << " (seed)";
        }
        out << '\n' << serialize(m.diagram);
      }
    }
    return C.truncated ? kTruncated : kOk;
  }

  int cmd_iso(std::ostream& out, std::string const& a, std::string const& b, Config const& cfg) {
    auto const M  = load(a);
    auto const M2 = load(b);
    auto const v  = decide_isomorphism(M, M2, cfg.explorer());
    if (cfg.format == "json") {
      out << to_json(v).dump(2) << '\n';
    } else {
      out << "answer: " << to_string(v.answer) << '\n';
      out << "unconditional: " << (v.unconditional ? "yes" : "no") << '\n';
      out << "precondition: " << v.precondition << '\n';
      if (!v.reason.empty()) {
        out << "reason: " << v.reason << '\n';
      }
      if (v.certificate) {
        out << "certificate:\n";
        for (auto const& m : v.certificate->moves) {
          out << "  " << m.to_string() << '\n';
        }
        out << "  final " << format_iso(v.certificate->final_iso) << '\n';
        for (auto const& m : v.certificate->target_reductions) {
          out << "  target " << m.to_string() << '\n';
        }
      }
    }
    switch (v.answer) {
      case Verdict::Answer::isomorphic:
        return kOk;
      case Verdict::Answer::not_isomorphic:
        return kNotIsomorphic;
      default:
        return kConditional;
    }
  }

  int cmd_order(std::ostream& out, std::string const& file, std::vector<std::string> const& words, Config const& cfg) {
    auto const M = load(file);
    std::vector<std::string> parts{""};
    for (auto const& w : words) {
      if (w == "/") {
        parts.emplace_back();
      } else {
        parts.back() += (parts.back().empty() ? "" : " ") + w;
      }
    }
    if (parts.size() > 2 || parts.front().empty() || parts.back().empty()) {
      throw CLI::ValidationError("order", "expected <word> or <word1> / <word2>");
    }
    auto const rep = build_rep(M, cfg.oracle());
    auto const g   = element(rep, parse_word(M, parts.front()));
    Order      o;
    if (parts.size() == 1) {
      o = element_order(rep, g, cfg.bound);
    } else {
      auto const h = element(rep, parse_word(M, parts.back()));
      o = is_reflection(rep, g) && is_reflection(rep, h) ? order_of_product(rep, g, h, cfg.bound)
                                                         : element_order(rep, multiply(g, h), cfg.bound);
    }
    out << o.to_string() << '\n';
    return kOk;
  }

  int cmd_longest(std::ostream& out, std::string const& file, std::vector<std::string> const& J, Config const& cfg) {
    auto const M   = load(file);
    auto const rep = build_rep(M, cfg.oracle());
    out << format_word(M, *longest_element(rep, parse_set(M, J)).word) << '\n';
    return kOk;
  }

  int cmd_fc(std::ostream& out, std::string const& file, std::string const& s) {
    auto const M = load(file);
    if (auto bad = continuation_obstruction(M)) {
      out << "FC(" << s << "): unavailable: C3/D4 present at " << M.format(*bad) << '\n';
      return kFailure;
    }
    auto const fc = finite_continuation(M, M.index_of(s));
    out << "FC(" << s << ")=" << M.format(fc.generators) << '\n';
    out << "branch: " << (fc.own_component_spherical ? "spherical component" : "non-spherical component") << '\n';
    out << "reflection-rigid: " << (fc.reflection_rigid ? "yes" : "no") << '\n';
    return kOk;
  }

  int cmd_verify_twist(std::ostream& out,
                       std::string const& file,
                       std::string const& J,
                       std::string const& K,
                       Config const&      cfg) {
    auto const M     = load(file);
    auto const p     = make_admissible_pair(M, parse_set(M, {J}), parse_set(M, {K}));
    auto const rep   = build_rep(M, cfg.oracle());
    auto const check = verify_twist(rep, p, cfg.moves());
    out << "J=" << M.format(p.J) << " K=" << M.format(p.K) << " L=" << M.format(p.L) << '\n';
    out << serialize(check.predicted);
    for (auto const& m : check.mismatches) {
      out << "mismatch " << m << '\n';
    }
    out << "combinatorial type = oracle type: " << (check.ok() ? "OK" : "MISMATCH") << '\n';
    return check.ok() ? kOk : kFailure;
  }

  int cmd_enumerate(std::ostream& out, std::string const& file, Config const& cfg) {
    auto const M   = load(file);
    auto const rep = build_rep(M, cfg.oracle());
    auto const e   = enumerate_group(rep, cfg.enum_cap);
    if (e.truncated) {
      out << "order: >= " << e.elements.size() << " (truncated)\n";
      return kTruncated;
    }
    out << "order: " << e.elements.size() << '\n';
    return kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter diagram twists, reductions and isomorphism"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;

  app.add_option("--cap", cfg.cap, "Twist class member cap")->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.bound, "Matrix power bound for orders")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--hybrid-twist", cfg.hybrid_twist, "Compute K-L labels with the oracle");
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("--max-modulus", cfg.max_modulus, "Largest cyclotomic modulus")->check(CLI::PositiveNumber);
  app.add_option("--rank-cap", cfg.rank_cap, "Largest rank for admissible pairs")->check(CLI::PositiveNumber);

  std::string file, file2, vertex, J, K;
  std::vector<std::string> words;

  auto* validate = app.add_subcommand("validate", "Parse and print the normalized diagram");
  validate->add_option("file", file)->required();
  auto* info = app.add_subcommand("info", "Components, types, moves and finite continuations");
  info->add_option("file", file)->required();
  auto* reduce = app.add_subcommand("reduce", "Reduced reduction with its trace");
  reduce->add_option("file", file)->required();
  auto* klass = app.add_subcommand("class", "Twist class of a diagram");
  klass->add_option("file", file)->required();
  auto* iso = app.add_subcommand("iso", "Decide whether two Coxeter groups are isomorphic");
  iso->add_option("first", file)->required();
  iso->add_option("second", file2)->required();

  auto* oracle = app.add_subcommand("oracle", "Geometric representation queries");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto* order = oracle->add_subcommand("order", "Order of a word, or of a product of two words split by /");
  order->add_option("file", file)->required();
  order->add_option("words", words)->required();
  auto* longest = oracle->add_subcommand("longest", "Longest element of a spherical subset");
  longest->add_option("file", file)->required();
  longest->add_option("J", words)->required();
  auto* fc = oracle->add_subcommand("fc", "Finite continuation of a vertex");
  fc->add_option("file", file)->required();
  fc->add_option("s", vertex)->required();
  auto* vt = oracle->add_subcommand("verify-twist", "Check one twist against the oracle");
  vt->add_option("file", file)->required();
  vt->add_option("J", J)->required();
  vt->add_option("K", K)->required();
  auto* enumerate = oracle->add_subcommand("enumerate", "Enumerate the group up to --enum-cap elements");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--enum-cap", cfg.enum_cap, "Element cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  std::ostringstream out;
  int                code = kOk;
  try {
    if (*validate) {
      code = cmd_validate(out, file);
    } else if (*info) {
      code = cmd_info(out, file, cfg);
    } else if (*reduce) {
      code = cmd_reduce(out, file, cfg);
    } else if (*klass) {
      code = cmd_class(out, file, cfg);
    } else if (*iso) {
      code = cmd_iso(out, file, file2, cfg);
    } else if (*order) {
      code = cmd_order(out, file, words, cfg);
    } else if (*longest) {
      code = cmd_longest(out, file, words, cfg);
    } else if (*fc) {
      code = cmd_fc(out, file, vertex);
    } else if (*vt) {
      code = cmd_verify_twist(out, file, J, K, cfg);
    } else if (*enumerate) {
      code = cmd_enumerate(out, file, cfg);
    }
  } catch (IoError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoInput;
  } catch (coxtwist::ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (UnknownVertex const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (CLI::ValidationError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (coxtwist::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }

  if (cfg.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file_out(cfg.output);
    if (!(file_out << out.str())) {
      std::cerr << "error: cannot write " << cfg.output << '\n';
      return kCannotCreate;
    }
  }
  return code;
}
