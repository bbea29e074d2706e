#include "coxtwist/moves.hpp"

#include <algorithm>
#include <sstream>

#include "coxtwist/classify.hpp"

namespace coxtwist {

  namespace {

    std::vector<std::string> sorted_names(CoxeterMatrix const& M, VertexSet S) {
      std::vector<std::string> out;
      for (auto i : S.members()) {
        out.push_back(M.name(i));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::string brace(std::vector<std::string> const& names) {
      std::string out = "{";
      for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i == 0 ? "" : ",") + names[i];
      }
      return out + "}";
    }

    std::vector<std::string> unbrace(std::string_view text) {
      if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw Error("expected {names}, found \"" + std::string(text) + "\"");
      }
      std::vector<std::string> out;
      text = text.substr(1, text.size() - 2);
      while (!text.empty()) {
        auto comma = text.find(',');
        out.emplace_back(text.substr(0, comma));
        if (comma == std::string_view::npos) {
          break;
        }
        text.remove_prefix(comma + 1);
      }
      return out;
    }

    std::string_view after(std::string_view token, std::string_view key) {
      if (token.substr(0, key.size()) != key) {
        throw Error("expected " + std::string(key) + "..., found \"" + std::string(token) + "\"");
      }
      return token.substr(key.size());
    }

    std::string fresh_name(CoxeterMatrix const& M, std::string const& base) {
      if (!M.find(base)) {
        return base;
      }
      for (int k = 2;; ++k) {
        auto candidate = base + "_" + std::to_string(k);
        if (!M.find(candidate)) {
          return candidate;
        }
      }
    }

    Label oracle_label(Order const& o, std::string const& what) {
      if (o.kind == Order::Kind::unknown) {
        throw ArithmeticLimit("oracle could not determine the order of " + what);
      }
      return o.to_label();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Records
  ////////////////////////////////////////////////////////////////////////

  std::string MoveRecord::to_string() const {
    if (kind == Kind::twist) {
      return "twist J=" + brace(J) + " K=" + brace(K);
    }
    return "reduce tau=" + tau + " -> u=" + u + " rho=" + rho;
  }

  MoveRecord MoveRecord::parse(std::string_view line) {
    std::istringstream       in{std::string(line)};
    std::vector<std::string> tok;
    for (std::string w; in >> w;) {
      tok.push_back(w);
    }
    MoveRecord r;
    if (tok.size() == 3 && tok[0] == "twist") {
      r.kind = Kind::twist;
      r.J    = unbrace(after(tok[1], "J="));
      r.K    = unbrace(after(tok[2], "K="));
      return r;
    }
    if (tok.size() == 5 && tok[0] == "reduce" && tok[2] == "->") {
      r.kind = Kind::reduction;
      r.tau  = after(tok[1], "tau=");
      r.u    = after(tok[3], "u=");
      r.rho  = after(tok[4], "rho=");
      return r;
    }
    throw Error("unrecognised move \"" + std::string(line) + "\"");
  }

  ////////////////////////////////////////////////////////////////////////
  // Twists
  ////////////////////////////////////////////////////////////////////////

  bool is_admissible(CoxeterMatrix const& M, VertexSet J, VertexSet K) {
    if (J.empty() || !(J | K).is_subset_of(M.all()) || !is_spherical(M, J)) {
      return false;
    }
    auto const P = perp(M, J);
    if (!(K & (J | P)).empty()) {
      return false;
    }
    auto const L = M.all() - J - P - K;
    for (auto k : K.members()) {
      for (auto l : L.members()) {
        if (M.label(k, l).is_finite()) {
          return false;
        }
      }
    }
    return true;
  }

  AdmissiblePair make_admissible_pair(CoxeterMatrix const& M, VertexSet J, VertexSet K) {
    if (!is_admissible(M, J, K)) {
      throw PreconditionError("(" + M.format(J) + ", " + M.format(K) + ") is not admissible");
    }
    return {J, K, M.all() - J - perp(M, J) - K};
  }

  std::vector<AdmissiblePair> admissible_pairs(CoxeterMatrix const& M, MoveOptions const& options) {
    if (M.rank() > options.rank_cap) {
      throw PreconditionError("admissible pairs of a rank " + std::to_string(M.rank())
                              + " diagram exceed the rank cap "
                              + std::to_string(options.rank_cap));
    }
    std::vector<AdmissiblePair> out;
    for (auto J : spherical_subsets(M)) {
      auto const X = M.all() - J - perp(M, J);
      // K is a union of classes of X under "finite label" connectivity.
      std::vector<VertexSet> blocks;
      VertexSet              left = X;
      while (!left.empty()) {
        VertexSet                block{left.first()};
        std::vector<std::size_t> stack{left.first()};
        while (!stack.empty()) {
          auto v = stack.back();
          stack.pop_back();
          for (auto w : (left - block).members()) {
            if (M.label(v, w).is_finite()) {
              block.insert(w);
              stack.push_back(w);
            }
          }
        }
        blocks.push_back(block);
        left = left - block;
      }
      if (blocks.size() < 2) {
        continue;
      }
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << blocks.size()); ++mask) {
        VertexSet K;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          if ((mask >> b) & 1U) {
            K = K | blocks[b];
          }
        }
        out.push_back({J, K, X - K});
      }
    }
    return out;
  }

  TwistCheck verify_twist(GeometricRep const& rep, AdmissiblePair const& p, MoveOptions const& options) {
    auto const& M = rep.diagram();
    TwistCheck  out;
    auto        plain   = options;
    plain.hybrid_twist  = false;
    out.predicted       = apply_twist(M, p, plain).first;
    out.computed        = CoxeterMatrix(std::vector<std::string>(M.vertices().begin(), M.vertices().end()));
    auto const                rho = longest_element(rep, p.J);
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < M.rank(); ++i) {
      auto g = element(rep, Word{i});
      gens.push_back(p.L.contains(i) ? conjugate(rep, rho, g) : g);
    }
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        auto o = order_of_product(rep, gens[i], gens[j], options.oracle.order_bound);
        if (o.kind == Order::Kind::unknown || o.value == 1) {
          out.mismatches.push_back(M.name(i) + " " + M.name(j) + ": predicted "
                                   + out.predicted.label(i, j).to_string() + ", oracle "
                                   + o.to_string());
          continue;
        }
        out.computed.set_label(i, j, o.to_label());
        if (out.computed.label(i, j) != out.predicted.label(i, j)) {
          out.mismatches.push_back(M.name(i) + " " + M.name(j) + ": predicted "
                                   + out.predicted.label(i, j).to_string() + ", oracle "
                                   + o.to_string());
        }
      }
    }
    return out;
  }

  std::pair<CoxeterMatrix, MoveRecord> apply_twist(CoxeterMatrix const&  M,
                                                   AdmissiblePair const& p,
                                                   MoveOptions const&    options) {
    auto const checked = make_admissible_pair(M, p.J, p.K);
    MoveRecord record;
    record.kind = MoveRecord::Kind::twist;
    record.J    = sorted_names(M, p.J);
    record.K    = sorted_names(M, p.K);
    if (checked.is_trivial()) {
      return {M, record};
    }
    auto const sigma = opposition_involution(M, p.J);
    auto       out   = M;
    for (auto j : p.J.members()) {
      for (auto l : checked.L.members()) {
        out.set_label(j, l, M.label(sigma.image[j], l));
      }
    }
    if (options.hybrid_twist) {
      auto const rep   = build_rep(M, options.oracle);
      auto const rho   = longest_element(rep, p.J);
      for (auto k : p.K.members()) {
        for (auto l : checked.L.members()) {
          auto o = order_of_product(rep, element(rep, Word{k}),
                                    conjugate(rep, rho, element(rep, Word{l})),
                                    options.oracle.order_bound);
          out.set_label(k, l, oracle_label(o, M.name(k) + " against the twisted " + M.name(l)));
        }
      }
    }
    return {out, record};
  }

  ////////////////////////////////////////////////////////////////////////
  // Reductions
  ////////////////////////////////////////////////////////////////////////

  std::optional<PseudoTransposition> pseudo_transposition_at(CoxeterMatrix const& M, std::size_t tau) {
    std::optional<std::size_t> t;
    for (std::size_t s = 0; s < M.rank(); ++s) {
      if (s == tau) {
        continue;
      }
      auto m = M.label(tau, s);
      if (m.commutes() || m.is_infinite()) {
        continue;
      }
      if (t || m.value() % 4 != 2 || m.value() < 6) {
        return std::nullopt;
      }
      t = s;
    }
    if (!t) {
      return std::nullopt;
    }
    for (std::size_t s = 0; s < M.rank(); ++s) {
      if (s != tau && s != *t && M.label(tau, s).commutes() && !M.label(s, *t).commutes()) {
        return std::nullopt;
      }
    }
    return PseudoTransposition{tau, *t, (M.label(tau, *t).value() - 2) / 4};
  }

  std::vector<PseudoTransposition> pseudo_transpositions(CoxeterMatrix const& M) {
    std::vector<PseudoTransposition> out;
    for (std::size_t tau = 0; tau < M.rank(); ++tau) {
      if (auto pt = pseudo_transposition_at(M, tau)) {
        out.push_back(*pt);
      }
    }
    return out;
  }

  std::pair<CoxeterMatrix, MoveRecord> apply_reduction(CoxeterMatrix const&       M,
                                                       PseudoTransposition const& pt,
                                                       MoveOptions const&         options) {
    auto const& tau = M.name(pt.tau);
    auto        u   = fresh_name(M, tau + "_u");
    // The second fresh name must also avoid the first.
    auto probe = M;
    probe.add_vertex(u);
    auto rho = fresh_name(probe, tau + "_rho");
    return apply_reduction(M, pt, u, rho, options);
  }

  std::pair<CoxeterMatrix, MoveRecord> apply_reduction(CoxeterMatrix const&       M,
                                                       PseudoTransposition const& pt,
                                                       std::string const&         u_name,
                                                       std::string const&         rho_name,
                                                       MoveOptions const&         options) {
    if (pseudo_transposition_at(M, pt.tau) != pt) {
      throw PreconditionError(M.name(pt.tau) + " is not a pseudo-transposition towards "
                              + M.name(pt.t));
    }
    if (u_name == rho_name || (M.find(u_name) && u_name != M.name(pt.tau))
        || M.find(rho_name) || !is_valid_vertex_name(u_name) || !is_valid_vertex_name(rho_name)) {
      throw PreconditionError("names " + u_name + ", " + rho_name + " are not fresh");
    }
    auto const tau = pt.tau, t = pt.t;
    auto       out = M;
    out.rename(tau, u_name);
    auto const r = out.add_vertex(rho_name);
    out.set_label(t, tau, Label(2 * pt.k + 1));
    out.set_label(t, r, Label(2));
    out.set_label(tau, r, Label(2));

    std::vector<std::size_t> infinite;
    for (std::size_t s = 0; s < M.rank(); ++s) {
      if (s == tau || s == t) {
        continue;
      }
      if (M.label(s, tau).is_infinite()) {
        infinite.push_back(s);
      } else {
        out.set_label(s, tau, Label(2));
        out.set_label(s, r, Label(2));
      }
    }
    if (!infinite.empty()) {
      auto const rep   = build_rep(M, options.oracle);
      auto const u_el  = element(rep, Word{tau, t, tau});
      auto const rho   = longest_element(rep, VertexSet{tau, t});
      for (auto s : infinite) {
        auto const s_el = element(rep, Word{s});
        out.set_label(s, tau,
                      oracle_label(order_of_product(rep, s_el, u_el, options.oracle.order_bound),
                                   M.name(s) + " " + u_name));
        out.set_label(s, r,
                      oracle_label(element_order(rep, multiply(s_el, rho), options.oracle.order_bound),
                                   M.name(s) + " " + rho_name));
      }
    }
    MoveRecord record;
    record.kind = MoveRecord::Kind::reduction;
    record.tau  = M.name(tau);
    record.u    = u_name;
    record.rho  = rho_name;
    return {out, record};
  }

  std::pair<CoxeterMatrix, std::vector<MoveRecord>> reduced_reduction(CoxeterMatrix const& M,
                                                                      MoveOptions const& options) {
    auto                    cur = M;
    std::vector<MoveRecord> trace;
    while (true) {
      auto pts = pseudo_transpositions(cur);
      if (pts.empty()) {
        break;
      }
      if (cur.rank() >= VertexSet::kMaxRank) {
        throw ArithmeticLimit("reduction exceeds the maximum rank");
      }
      auto best = std::min_element(pts.begin(), pts.end(), [&](auto const& a, auto const& b) {
        return cur.name(a.tau) < cur.name(b.tau);
      });
      auto [next, record] = apply_reduction(cur, *best, options);
      cur                 = std::move(next);
      trace.push_back(std::move(record));
    }
    return {cur, trace};
  }

  CoxeterMatrix replay(CoxeterMatrix const&           M,
                       std::vector<MoveRecord> const& moves,
                       MoveOptions const&             options) {
    auto cur = M;
    for (auto const& move : moves) {
      if (move.kind == MoveRecord::Kind::twist) {
        auto J = cur.vertex_set(move.J);
        auto K = cur.vertex_set(move.K);
        cur    = apply_twist(cur, make_admissible_pair(cur, J, K), options).first;
      } else {
        auto pt = pseudo_transposition_at(cur, cur.index_of(move.tau));
        if (!pt) {
          throw PreconditionError(move.tau + " is not a pseudo-transposition");
        }
        cur = apply_reduction(cur, *pt, move.u, move.rho, options).first;
      }
    }
    return cur;
  }

}  // namespace coxtwist
