#include "coxtwist/automorphism.hpp"

#include <deque>
#include <unordered_set>

#include "coxtwist/classify.hpp"
#include "coxtwist/continuation.hpp"

namespace coxtwist {

  AutomorphismSpec verify_relations(GeometricRep const&                        rep,
                                    std::map<std::string, GroupElement> const& images) {
    auto const&               M = rep.diagram();
    AutomorphismSpec          out;
    std::vector<GroupElement> img;
    for (std::size_t i = 0; i < M.rank(); ++i) {
      img.push_back(element(rep, Word{i}));
    }
    for (auto const& [name, g] : images) {
      img[M.index_of(name)] = g;
    }
    for (std::size_t i = 0; i < M.rank(); ++i) {
      out.images.emplace(M.name(i), img[i]);
      auto const& g = img[i].matrix;
      if (g.is_identity() || !(g * g).is_identity()) {
        out.failures.push_back("image of " + M.name(i) + " is not an involution");
      }
    }
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        auto m = M.label(i, j);
        if (m.is_infinite()) {
          continue;
        }
        auto p = img[i].matrix * img[j].matrix;
        if (!p.power(static_cast<std::uint64_t>(m.value())).is_identity()) {
          out.failures.push_back("relation (" + M.name(i) + " " + M.name(j) + ")^"
                                 + m.to_string() + " fails on the images");
        }
      }
    }
    out.verified = out.failures.empty();
    return out;
  }

  AutomorphismSpec build_transvection(GeometricRep const& rep,
                                      std::size_t         s,
                                      GroupElement const& z) {
    auto const& M = rep.diagram();
    auto const  d = odd_data(M, s);
    if (!z.matrix.is_identity()) {
      bool central = false;
      if (!d.spherical_rest.empty()) {
        for (auto const& c : center_of_spherical(rep, d.spherical_rest)) {
          central = central || c.matrix == z.matrix;
        }
      }
      if (!central) {
        throw PreconditionError("z is not a central involution of <"
                                + M.format(d.spherical_rest) + ">");
      }
    }
    std::map<std::string, GroupElement> images;
    for (auto t : d.odd.members()) {
      images.emplace(M.name(t), multiply(element(rep, Word{t}), z));
    }
    auto out = verify_relations(rep, images);
    if (!z.matrix.is_identity() && is_reflection(rep, out.images.at(M.name(s)))) {
      throw Error("internal error: " + M.name(s) + " z is a reflection");
    }
    return out;
  }

  AutomorphismSpec build_local_automorphism(GeometricRep const&                        rep,
                                            VertexSet                                  J,
                                            std::map<std::string, GroupElement> const& images) {
    auto const& M = rep.diagram();
    if (!is_graph_factor(M, J)) {
      throw PreconditionError(M.format(J) + " is not a graph factor");
    }
    for (auto const& [name, g] : images) {
      if (!J.contains(M.index_of(name))) {
        throw PreconditionError("local automorphism moves " + name + " outside "
                                + M.format(J));
      }
      if (!g.word) {
        throw PreconditionError("image of " + name + " needs a word");
      }
      for (auto letter : *g.word) {
        if (!J.contains(letter)) {
          throw PreconditionError("image of " + name + " leaves <" + M.format(J) + ">");
        }
      }
    }
    return verify_relations(rep, images);
  }

  DeformationSides deformation_sides(CoxeterMatrix const& M, std::size_t s, std::size_t t) {
    DeformationSides out;
    VertexSet const  st{s, t};
    out.rest  = M.all() - st - perp(M, st);
    auto side = [&](std::size_t from) {
      VertexSet                reached;
      std::vector<std::size_t> stack{from};
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto y : out.rest.members()) {
          if (y != v && !reached.contains(y) && M.label(v, y).is_finite()) {
            reached.insert(y);
            stack.push_back(y);
          }
        }
      }
      return reached;
    };
    out.s_side = side(s);
    out.t_side = side(t);
    return out;
  }

  AutomorphismSpec build_angle_deformation(GeometricRep const& rep,
                                           std::size_t         s,
                                           std::size_t         t,
                                           Word const&         x) {
    auto const& M = rep.diagram();
    if (s == t || M.label(s, t).is_infinite()) {
      throw PreconditionError("angle deformation needs distinct " + M.name(s) + ", "
                              + M.name(t) + " with a finite label");
    }
    for (auto letter : x) {
      if (letter != s && letter != t) {
        throw PreconditionError("x must be a word in " + M.name(s) + " and " + M.name(t));
      }
    }
    auto const sides = deformation_sides(M, s, t);
    if (!(sides.s_side & sides.t_side).empty()) {
      throw PreconditionError("the two sides of " + M.name(s) + ", " + M.name(t)
                              + " meet in " + M.format(sides.s_side & sides.t_side));
    }
    auto const xe    = element(rep, x);
    auto const image = conjugate(rep, xe, element(rep, Word{t}));
    auto const root  = reflection_root(rep, image.matrix);
    bool       in_span = root.has_value();
    for (std::size_t i = 0; in_span && i < M.rank(); ++i) {
      in_span = i == s || i == t || root->entry_is_zero(i, 0);
    }
    if (!in_span
        || order_of_product(rep, element(rep, Word{s}), image)
               != Order::finite(static_cast<std::uint64_t>(M.label(s, t).value()))) {
      throw PreconditionError(M.name(s) + " and x " + M.name(t) + " x^-1 do not generate <"
                              + M.name(s) + ", " + M.name(t) + ">");
    }
    std::map<std::string, GroupElement> images;
    for (auto r : (sides.t_side | VertexSet{t}).members()) {
      images.emplace(M.name(r), conjugate(rep, xe, element(rep, Word{r})));
    }
    auto out = verify_relations(rep, images);
    for (auto const& [name, g] : out.images) {
      if (!is_reflection(rep, g)) {
        out.failures.push_back("image of " + name + " is not a reflection");
        out.verified = false;
      }
    }
    return out;
  }

  std::string to_string(SharpAngled::Answer a) {
    switch (a) {
      case SharpAngled::Answer::yes:
        return "yes";
      case SharpAngled::Answer::no:
        return "no";
      case SharpAngled::Answer::unknown:
        break;
    }
    return "unknown";
  }

  namespace {

    struct ConjugatePair {
      CycMatrix x, y;
      Word      w;

      bool operator==(ConjugatePair const& o) const {
        return x == o.x && y == o.y;
      }
    };

    struct ConjugatePairHash {
      std::size_t operator()(ConjugatePair const& p) const noexcept {
        return p.x.hash() * 31 + p.y.hash();
      }
    };

  }  // namespace

  SharpAngled is_sharp_angled_pair(GeometricRep const& rep,
                                   GroupElement const& r,
                                   GroupElement const& r2,
                                   std::size_t         length_bound) {
    auto const& M = rep.diagram();
    auto const  o = order_of_product(rep, r, r2);
    SharpAngled out;
    if (o.is_infinite()) {
      out.answer  = SharpAngled::Answer::yes;
      out.vacuous = true;
      return out;
    }
    if (o.is_finite() && o.value >= 2) {
      bool exists = false;
      for (std::size_t i = 0; i < M.rank() && !exists; ++i) {
        for (std::size_t j = i + 1; j < M.rank() && !exists; ++j) {
          exists = M.label(i, j) == Label(static_cast<int>(o.value));
        }
      }
      if (!exists) {
        out.answer = SharpAngled::Answer::no;
        return out;
      }
    }
    auto is_generator = [&](CycMatrix const& m) {
      for (std::size_t i = 0; i < M.rank(); ++i) {
        if (rep.generator(i) == m) {
          return true;
        }
      }
      return false;
    };
    std::unordered_set<ConjugatePair, ConjugatePairHash> seen;
    std::deque<ConjugatePair>                            frontier;
    frontier.push_back({r.matrix, r2.matrix, {}});
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      auto cur = std::move(frontier.front());
      frontier.pop_front();
      if (is_generator(cur.x) && is_generator(cur.y)) {
        out.answer  = SharpAngled::Answer::yes;
        out.witness = cur.w;
        return out;
      }
      if (cur.w.size() >= length_bound) {
        continue;
      }
      for (std::size_t g = 0; g < M.rank(); ++g) {
        ConjugatePair next{rep.right_multiply(rep.left_multiply(g, cur.x), g),
                           rep.right_multiply(rep.left_multiply(g, cur.y), g),
                           {}};
        if (seen.contains(next)) {
          continue;
        }
        next.w = Word{g};
        next.w.insert(next.w.end(), cur.w.begin(), cur.w.end());
        seen.insert(next);
        frontier.push_back(std::move(next));
      }
    }
    return out;
  }

}  // namespace coxtwist
