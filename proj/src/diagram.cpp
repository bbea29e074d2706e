#include "coxtwist/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace coxtwist {

  ParseError::ParseError(std::size_t        line,
                         std::size_t        column,
                         std::string const& what)
      : Error("line " + std::to_string(line) + ", column "
              + std::to_string(column) + ": " + what),
        _line(line),
        _column(column) {}

  UnknownVertex::UnknownVertex(std::string const& name)
      : Error("unknown vertex \"" + name + "\"") {}

  ////////////////////////////////////////////////////////////////////////
  // Label
  ////////////////////////////////////////////////////////////////////////

  Label::Label(int m) : _value(m) {
    if (m < 2) {
      throw Error("Coxeter label must be >= 2 or infinity, found "
                  + std::to_string(m));
    }
  }

  int Label::value() const {
    if (is_infinite()) {
      throw Error("label is infinite");
    }
    return _value;
  }

  std::string Label::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(_value);
  }

  ////////////////////////////////////////////////////////////////////////
  // VertexSet
  ////////////////////////////////////////////////////////////////////////

  VertexSet::VertexSet(std::initializer_list<std::size_t> members) {
    for (auto i : members) {
      insert(i);
    }
  }

  VertexSet VertexSet::all(std::size_t n) {
    if (n > kMaxRank) {
      throw Error("diagrams are limited to 64 vertices");
    }
    return VertexSet(n == kMaxRank ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << n) - 1);
  }

  void VertexSet::insert(std::size_t i) {
    if (i >= kMaxRank) {
      throw Error("vertex position out of range");
    }
    _bits |= std::uint64_t{1} << i;
  }

  std::vector<std::size_t> VertexSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto b = _bits; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // DiagramIso
  ////////////////////////////////////////////////////////////////////////

  std::string const& DiagramIso::operator()(std::string const& v) const {
    auto it = mapping.find(v);
    if (it == mapping.end()) {
      throw UnknownVertex(v);
    }
    return it->second;
  }

  DiagramIso DiagramIso::inverse() const {
    DiagramIso out;
    for (auto const& [from, to] : mapping) {
      out.mapping.emplace(to, from);
    }
    return out;
  }

  DiagramIso DiagramIso::compose(DiagramIso const& first) const {
    DiagramIso out;
    for (auto const& [from, mid] : first.mapping) {
      out.mapping.emplace(from, (*this)(mid));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterMatrix
  ////////////////////////////////////////////////////////////////////////

  CoxeterMatrix::CoxeterMatrix(std::vector<std::string> vertices)
      : _names(std::move(vertices)), _labels(_names.size() * _names.size()) {
    if (_names.size() > VertexSet::kMaxRank) {
      throw Error("diagrams are limited to 64 vertices");
    }
    std::set<std::string_view> seen;
    for (auto const& n : _names) {
      if (!is_valid_vertex_name(n)) {
        throw Error("invalid vertex name \"" + n + "\"");
      }
      if (!seen.insert(n).second) {
        throw Error("duplicate vertex \"" + n + "\"");
      }
    }
  }

  std::optional<std::size_t> CoxeterMatrix::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _names.begin());
  }

  std::size_t CoxeterMatrix::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw UnknownVertex(std::string(name));
    }
    return *i;
  }

  VertexSet CoxeterMatrix::vertex_set(std::span<std::string const> names) const {
    VertexSet J;
    for (auto const& n : names) {
      J.insert(index_of(n));
    }
    return J;
  }

  Label CoxeterMatrix::label(std::size_t i, std::size_t j) const {
    if (i >= rank() || j >= rank()) {
      throw Error("vertex position out of range");
    }
    if (i == j) {
      throw Error("the diagonal of a Coxeter matrix carries no label");
    }
    return _labels[i * rank() + j];
  }

  void CoxeterMatrix::set_label(std::size_t i, std::size_t j, Label m) {
    if (i >= rank() || j >= rank() || i == j) {
      throw Error("invalid vertex pair for a label");
    }
    _labels[i * rank() + j] = m;
    _labels[j * rank() + i] = m;
  }

  std::size_t CoxeterMatrix::add_vertex(std::string name) {
    if (!is_valid_vertex_name(name)) {
      throw Error("invalid vertex name \"" + name + "\"");
    }
    if (find(name)) {
      throw Error("duplicate vertex \"" + name + "\"");
    }
    if (rank() + 1 > VertexSet::kMaxRank) {
      throw Error("diagrams are limited to 64 vertices");
    }
    std::size_t const  n = rank();
    std::vector<Label> labels((n + 1) * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        labels[i * (n + 1) + j] = _labels[i * n + j];
      }
    }
    _labels = std::move(labels);
    _names.push_back(std::move(name));
    return n;
  }

  void CoxeterMatrix::rename(std::size_t i, std::string name) {
    if (!is_valid_vertex_name(name)) {
      throw Error("invalid vertex name \"" + name + "\"");
    }
    auto existing = find(name);
    if (existing && *existing != i) {
      throw Error("duplicate vertex \"" + name + "\"");
    }
    _names.at(i) = std::move(name);
  }

  std::string CoxeterMatrix::format(VertexSet J) const {
    std::string out = "{";
    bool        sep = false;
    for (auto i : J.members()) {
      if (sep) {
        out += ',';
      }
      out += name(i);
      sep = true;
    }
    return out + "}";
  }

  bool CoxeterMatrix::operator==(CoxeterMatrix const& other) const {
    if (rank() != other.rank()) {
      return false;
    }
    std::vector<std::size_t> to_other(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      auto j = other.find(_names[i]);
      if (!j) {
        return false;
      }
      to_other[i] = *j;
    }
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = i + 1; j < rank(); ++j) {
        if (label(i, j) != other.label(to_other[i], to_other[j])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_vertex_name(std::string_view name) {
    if (name.empty() || name == "-" || name == "/") {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
             || (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-'
             || c == '\'' || c == ':';
    });
  }

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          ++i;
        }
        if (i > start) {
          out.push_back({line.substr(start, i - start), start + 1});
        }
      }
      return out;
    }

    Label parse_label(Token const& tok, std::size_t line) {
      if (tok.text == "inf") {
        return Label::infinity();
      }
      int  m    = 0;
      auto last = tok.text.data() + tok.text.size();
      auto [ptr, ec] = std::from_chars(tok.text.data(), last, m);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(line,
                         tok.column,
                         "expected an integer label or \"inf\", found \""
                             + std::string(tok.text) + "\"");
      }
      if (m < 3) {
        throw ParseError(line,
                         tok.column,
                         "edge labels must be >= 3 or \"inf\" (label 2 is "
                         "expressed by omitting the edge), found "
                             + std::to_string(m));
      }
      return Label(m);
    }
  }  // namespace

  CoxeterMatrix parse_diagram(std::string_view text) {
    std::optional<CoxeterMatrix>                     M;
    std::set<std::pair<std::size_t, std::size_t>>    edges;
    std::size_t                                      line_no = 0;
    std::size_t                                      pos     = 0;

    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      auto line = text.substr(pos, eol - pos);
      pos       = eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      auto toks = tokenize(line);
      if (toks.empty() || toks[0].text.front() == '#') {
        if (eol == text.size()) {
          break;
        }
        continue;
      }
      auto const& head = toks[0];
      if (head.text == "vertices") {
        if (M) {
          throw ParseError(line_no, head.column, "second \"vertices\" line");
        }
        if (toks.size() == 1) {
          throw ParseError(
              line_no, head.column + head.text.size(), "no vertices listed");
        }
        std::vector<std::string>   names;
        std::set<std::string_view> seen;
        for (std::size_t k = 1; k < toks.size(); ++k) {
          if (!is_valid_vertex_name(toks[k].text)) {
            throw ParseError(line_no,
                             toks[k].column,
                             "invalid vertex name \""
                                 + std::string(toks[k].text) + "\"");
          }
          if (!seen.insert(toks[k].text).second) {
            throw ParseError(line_no,
                             toks[k].column,
                             "duplicate vertex \"" + std::string(toks[k].text)
                                 + "\"");
          }
          names.emplace_back(toks[k].text);
        }
        if (names.size() > VertexSet::kMaxRank) {
          throw ParseError(line_no, head.column, "more than 64 vertices");
        }
        M.emplace(std::move(names));
      } else if (head.text == "edge") {
        if (!M) {
          throw ParseError(
              line_no, head.column, "\"edge\" before the \"vertices\" line");
        }
        if (toks.size() != 4) {
          auto col = toks.size() > 4 ? toks[4].column
                                     : line.size() + 1;
          throw ParseError(
              line_no, col, "expected \"edge <u> <v> <label>\"");
        }
        std::size_t uv[2];
        for (int k = 0; k < 2; ++k) {
          auto i = M->find(toks[1 + k].text);
          if (!i) {
            throw ParseError(line_no,
                             toks[1 + k].column,
                             "unknown vertex \"" + std::string(toks[1 + k].text)
                                 + "\"");
          }
          uv[k] = *i;
        }
        if (uv[0] == uv[1]) {
          throw ParseError(line_no, toks[2].column, "edge from a vertex to itself");
        }
        auto m = parse_label(toks[3], line_no);
        if (!edges.insert(std::minmax(uv[0], uv[1])).second) {
          throw ParseError(line_no, head.column, "duplicate edge");
        }
        M->set_label(uv[0], uv[1], m);
      } else {
        throw ParseError(line_no,
                         head.column,
                         "unknown directive \"" + std::string(head.text)
                             + "\"");
      }
      if (eol == text.size()) {
        break;
      }
    }
    if (!M) {
      throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing \"vertices\" line");
    }
    return std::move(*M);
  }

  std::string serialize(CoxeterMatrix const& M) {
    std::vector<std::size_t> order(M.rank());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return M.name(a) < M.name(b);
    });
    std::ostringstream out;
    out << "vertices";
    for (auto i : order) {
      out << ' ' << M.name(i);
    }
    out << '\n';
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        auto m = M.label(order[a], order[b]);
        if (m.is_edge()) {
          out << "edge " << M.name(order[a]) << ' ' << M.name(order[b]) << ' '
              << m.to_string() << '\n';
        }
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  CoxeterMatrix subdiagram(CoxeterMatrix const& M, VertexSet J) {
    if (!J.is_subset_of(M.all())) {
      throw Error("subset is not contained in the diagram");
    }
    auto                     idx = J.members();
    std::vector<std::string> names;
    names.reserve(idx.size());
    for (auto i : idx) {
      names.push_back(M.name(i));
    }
    CoxeterMatrix out(std::move(names));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        out.set_label(a, b, M.label(idx[a], idx[b]));
      }
    }
    return out;
  }

  VertexSet perp(CoxeterMatrix const& M, VertexSet J) {
    if (!J.is_subset_of(M.all())) {
      throw Error("subset is not contained in the diagram");
    }
    VertexSet out;
    for (std::size_t k = 0; k < M.rank(); ++k) {
      if (J.contains(k)) {
        continue;
      }
      bool ok = true;
      for (auto j : J.members()) {
        if (!M.label(k, j).commutes()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.insert(k);
      }
    }
    return out;
  }

  std::vector<VertexSet> components(CoxeterMatrix const& M, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet              left = within & M.all();
    while (!left.empty()) {
      VertexSet                comp;
      std::vector<std::size_t> stack{left.first()};
      comp.insert(left.first());
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : left.members()) {
          if (!comp.contains(w) && w != v && M.label(v, w).is_edge()) {
            comp.insert(w);
            stack.push_back(w);
          }
        }
      }
      out.push_back(comp);
      left = left - comp;
    }
    return out;
  }

  std::vector<VertexSet> components(CoxeterMatrix const& M) {
    return components(M, M.all());
  }

  CoxeterMatrix relabel(CoxeterMatrix const& M, DiagramIso const& iso) {
    std::vector<std::string> names;
    names.reserve(M.rank());
    for (auto const& v : M.vertices()) {
      names.push_back(iso(v));
    }
    CoxeterMatrix out(std::move(names));
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        out.set_label(i, j, M.label(i, j));
      }
    }
    return out;
  }

  std::vector<Label> label_multiset(CoxeterMatrix const& M) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        out.push_back(M.label(i, j));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_isomorphism(CoxeterMatrix const& M,
                      CoxeterMatrix const& M2,
                      DiagramIso const&    iso) {
    if (M.rank() != M2.rank() || iso.mapping.size() != M.rank()) {
      return false;
    }
    std::vector<std::size_t> image(M.rank());
    std::set<std::size_t>    hit;
    for (std::size_t i = 0; i < M.rank(); ++i) {
      auto it = iso.mapping.find(M.name(i));
      if (it == iso.mapping.end()) {
        return false;
      }
      auto j = M2.find(it->second);
      if (!j || !hit.insert(*j).second) {
        return false;
      }
      image[i] = *j;
    }
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        if (M.label(i, j) != M2.label(image[i], image[j])) {
          return false;
        }
      }
    }
    return true;
  }

  CoxeterMatrix dihedral(int m, std::string a, std::string b) {
    CoxeterMatrix M({std::move(a), std::move(b)});
    M.set_label(0, 1, Label(m));
    return M;
  }

  CoxeterMatrix dihedral_infinite(std::string a, std::string b) {
    CoxeterMatrix M({std::move(a), std::move(b)});
    M.set_label(0, 1, Label::infinity());
    return M;
  }

  CoxeterMatrix disjoint_union(CoxeterMatrix const& A, CoxeterMatrix const& B) {
    std::vector<std::string> names(A.vertices().begin(), A.vertices().end());
    names.insert(names.end(), B.vertices().begin(), B.vertices().end());
    CoxeterMatrix out(std::move(names));
    for (std::size_t i = 0; i < A.rank(); ++i) {
      for (std::size_t j = i + 1; j < A.rank(); ++j) {
        out.set_label(i, j, A.label(i, j));
      }
    }
    auto const off = A.rank();
    for (std::size_t i = 0; i < B.rank(); ++i) {
      for (std::size_t j = i + 1; j < B.rank(); ++j) {
        out.set_label(off + i, off + j, B.label(i, j));
      }
    }
    return out;
  }

}  // namespace coxtwist
