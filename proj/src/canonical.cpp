#include "coxtwist/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace coxtwist {

  namespace {

    using Cell      = std::vector<std::size_t>;
    using Partition = std::vector<Cell>;
    using Perm      = std::vector<std::size_t>;

    class Canonizer {
     public:
      explicit Canonizer(CoxeterMatrix const& M) : _n(M.rank()), _L(_n * _n) {
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = 0; j < _n; ++j) {
            _L[i * _n + j] = i == j ? 1 : M.label(i, j).code();
          }
        }
      }

      std::pair<std::vector<std::size_t>, std::vector<int>> run() {
        Cell all(_n);
        std::iota(all.begin(), all.end(), 0);
        Partition p;
        if (_n > 0) {
          p.push_back(std::move(all));
        }
        refine(p);
        std::vector<std::size_t> fixed;
        search(std::move(p), fixed);
        return {_best_order, _best_code};
      }

     private:
      int label(std::size_t i, std::size_t j) const {
        return _L[i * _n + j];
      }

      // Splits cells until every vertex in a cell sees the same multiset of
      // (cell, label) pairs.
      void refine(Partition& p) const {
        std::vector<std::size_t> cell_of(_n);
        bool                     changed = true;
        while (changed) {
          changed = false;
          for (std::size_t c = 0; c < p.size(); ++c) {
            for (auto v : p[c]) {
              cell_of[v] = c;
            }
          }
          Partition next;
          next.reserve(p.size());
          for (auto const& cell : p) {
            if (cell.size() == 1) {
              next.push_back(cell);
              continue;
            }
            std::vector<std::pair<std::vector<std::pair<std::size_t, int>>,
                                  std::size_t>>
                sig;
            sig.reserve(cell.size());
            for (auto v : cell) {
              std::vector<std::pair<std::size_t, int>> s;
              s.reserve(_n - 1);
              for (std::size_t w = 0; w < _n; ++w) {
                if (w != v) {
                  s.emplace_back(cell_of[w], label(v, w));
                }
              }
              std::sort(s.begin(), s.end());
              sig.emplace_back(std::move(s), v);
            }
            std::stable_sort(sig.begin(),
                             sig.end(),
                             [](auto const& a, auto const& b) {
                               return a.first < b.first;
                             });
            Cell current{sig[0].second};
            for (std::size_t k = 1; k < sig.size(); ++k) {
              if (sig[k].first != sig[k - 1].first) {
                next.push_back(std::move(current));
                current.clear();
                changed = true;
              }
              current.push_back(sig[k].second);
            }
            next.push_back(std::move(current));
          }
          p = std::move(next);
        }
      }

      std::vector<int> code_of(std::vector<std::size_t> const& order) const {
        std::vector<int> code;
        code.reserve(_n * (_n - 1) / 2);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = i + 1; j < _n; ++j) {
            code.push_back(label(order[i], order[j]));
          }
        }
        return code;
      }

      // Union-find over the cell members under the known automorphisms that
      // fix `fixed` pointwise.
      std::vector<std::size_t> orbits(std::vector<std::size_t> const& fixed) const {
        std::vector<std::size_t> parent(_n);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](std::size_t x) {
          while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x         = parent[x];
          }
          return x;
        };
        for (auto const& g : _automs) {
          bool fixes = std::all_of(
              fixed.begin(), fixed.end(), [&](auto v) { return g[v] == v; });
          if (!fixes) {
            continue;
          }
          for (std::size_t v = 0; v < _n; ++v) {
            auto a = root(v), b = root(g[v]);
            if (a != b) {
              parent[std::max(a, b)] = std::min(a, b);
            }
          }
        }
        for (std::size_t v = 0; v < _n; ++v) {
          parent[v] = root(v);
        }
        return parent;
      }

      void search(Partition p, std::vector<std::size_t>& fixed) {
        std::size_t target = p.size();
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() > 1
              && (target == p.size() || p[c].size() < p[target].size())) {
            target = c;
          }
        }
        if (target == p.size()) {
          leaf(p);
          return;
        }
        Cell                     candidates = p[target];
        std::vector<std::size_t> explored;
        for (auto v : candidates) {
          if (!explored.empty()) {
            auto orb  = orbits(fixed);
            bool skip = std::any_of(explored.begin(),
                                    explored.end(),
                                    [&](auto w) { return orb[w] == orb[v]; });
            if (skip) {
              continue;
            }
          }
          Partition child;
          child.reserve(p.size() + 1);
          for (std::size_t c = 0; c < p.size(); ++c) {
            if (c != target) {
              child.push_back(p[c]);
              continue;
            }
            child.push_back({v});
            Cell rest;
            for (auto w : p[c]) {
              if (w != v) {
                rest.push_back(w);
              }
            }
            child.push_back(std::move(rest));
          }
          refine(child);
          fixed.push_back(v);
          search(std::move(child), fixed);
          fixed.pop_back();
          explored.push_back(v);
        }
      }

      void leaf(Partition const& p) {
        std::vector<std::size_t> order;
        order.reserve(_n);
        for (auto const& c : p) {
          order.push_back(c[0]);
        }
        auto code = code_of(order);
        if (!_have_best || code < _best_code) {
          _have_best  = true;
          _best_code  = std::move(code);
          _best_order = std::move(order);
        } else if (code == _best_code) {
          Perm g(_n);
          for (std::size_t k = 0; k < _n; ++k) {
            g[_best_order[k]] = order[k];
          }
          _automs.push_back(std::move(g));
        }
      }

      std::size_t              _n;
      std::vector<int>         _L;
      bool                     _have_best = false;
      std::vector<int>         _best_code;
      std::vector<std::size_t> _best_order;
      std::vector<Perm>        _automs;
    };

  }  // namespace

  std::string canonical_name(std::size_t i) {
    return "v" + std::to_string(i);
  }

  std::string CanonicalForm::key() const {
    std::string out = std::to_string(matrix.rank());
    out += ':';
    for (auto c : code) {
      if (c == Label::infinity().code()) {
        out += 'i';
      } else {
        out += std::to_string(c);
      }
      out += ',';
    }
    return out;
  }

  CanonicalForm canonical_form(CoxeterMatrix const& M) {
    auto [order, code] = Canonizer(M).run();
    std::vector<std::string> names;
    names.reserve(M.rank());
    CanonicalForm out;
    for (std::size_t k = 0; k < order.size(); ++k) {
      names.push_back(canonical_name(k));
      out.iso.mapping.emplace(M.name(order[k]), names.back());
    }
    out.matrix = CoxeterMatrix(std::move(names));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        out.matrix.set_label(i, j, M.label(order[i], order[j]));
      }
    }
    out.code = std::move(code);
    return out;
  }

  std::optional<DiagramIso> find_isomorphism(CoxeterMatrix const& M,
                                             CoxeterMatrix const& M2) {
    if (M.rank() != M2.rank() || label_multiset(M) != label_multiset(M2)) {
      return std::nullopt;
    }
    auto c1 = canonical_form(M);
    auto c2 = canonical_form(M2);
    if (c1.code != c2.code) {
      return std::nullopt;
    }
    auto iso = c2.iso.inverse().compose(c1.iso);
    if (!is_isomorphism(M, M2, iso)) {
      throw Error("internal error: canonical forms agree but the induced "
                  "bijection does not preserve labels");
    }
    return iso;
  }

}  // namespace coxtwist
