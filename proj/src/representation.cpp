#include "coxtwist/representation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "coxtwist/classify.hpp"
#include "coxtwist/error.hpp"

namespace coxtwist {

  namespace {

    std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticLimit("matrix entry overflow");
      }
      return r;
    }

    std::int64_t narrow(__int128 v) {
      if (v > INT64_MAX || v < INT64_MIN) {
        throw ArithmeticLimit("matrix entry overflow");
      }
      return static_cast<std::int64_t>(v);
    }

    // Throws unless sums of `terms` products of entries with the given bit
    // sizes stay inside the 128-bit accumulator after reduction.
    void guard(CyclotomicRing const& ring, int bits_a, int bits_b, std::size_t terms) {
      auto const d = ring.degree();
      int const  w = bit_length(static_cast<std::int64_t>(terms * d)) + 1;
      if (bits_a + bits_b + w + ring.table_bits()
              + bit_length(static_cast<std::int64_t>(d)) + 1
          > 124) {
        throw ArithmeticLimit("matrix entries exceed 64-bit arithmetic");
      }
    }

    // wide += a * b (plain convolution, no reduction).
    void accumulate(std::span<__int128>            wide,
                    std::span<std::int64_t const> a,
                    std::span<std::int64_t const> b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
          wide[i + j] += static_cast<__int128>(a[i]) * b[j];
        }
      }
    }

    // Sign of a real ring element at the standard embedding, or nothing if
    // the value is too close to zero to decide numerically.
    std::optional<int> numeric_sign(CyclotomicRing const&         ring,
                                    std::span<std::int64_t const> c) {
      long double scale = 0;
      bool        zero  = true;
      for (auto v : c) {
        scale += std::fabs(static_cast<long double>(v));
        zero = zero && v == 0;
      }
      if (zero) {
        return 0;
      }
      auto const value = ring.evaluate(c);
      if (std::fabs(value) <= 1e-12L * scale) {
        return std::nullopt;
      }
      return value > 0 ? 1 : -1;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CycMatrix
  ////////////////////////////////////////////////////////////////////////

  CycMatrix::CycMatrix(std::shared_ptr<CyclotomicRing const> ring,
                       std::size_t                           rows,
                       std::size_t                           cols)
      : _ring(std::move(ring)), _rows(rows), _cols(cols),
        _data(rows * cols * _ring->degree(), 0) {}

  CycMatrix CycMatrix::identity(std::shared_ptr<CyclotomicRing const> ring,
                                std::size_t                           n) {
    CycMatrix m(std::move(ring), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.entry(i, i)[0] = 1;
    }
    return m;
  }

  bool CycMatrix::entry_is_zero(std::size_t i, std::size_t j) const {
    auto e = entry(i, j);
    return std::all_of(e.begin(), e.end(), [](auto c) { return c == 0; });
  }

  CycNumber CycMatrix::number(std::size_t i, std::size_t j) const {
    auto e = entry(i, j);
    return CycNumber(_ring, CyclotomicRing::Coeffs(e.begin(), e.end()));
  }

  void CycMatrix::set(std::size_t i, std::size_t j, CyclotomicRing::Coeffs const& c) {
    std::copy(c.begin(), c.end(), entry(i, j).begin());
  }

  CycMatrix CycMatrix::column(std::size_t j) const {
    CycMatrix out(_ring, _rows, 1);
    for (std::size_t i = 0; i < _rows; ++i) {
      auto e = entry(i, j);
      std::copy(e.begin(), e.end(), out.entry(i, 0).begin());
    }
    return out;
  }

  CycMatrix CycMatrix::transpose() const {
    CycMatrix out(_ring, _cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        auto e = entry(i, j);
        std::copy(e.begin(), e.end(), out.entry(j, i).begin());
      }
    }
    return out;
  }

  CycMatrix CycMatrix::operator*(CycMatrix const& o) const {
    if (_cols != o._rows || _ring != o._ring) {
      throw Error("matrix shapes do not match");
    }
    auto const d = _ring->degree();
    guard(*_ring, bits(), o.bits(), _cols);
    CycMatrix             out(_ring, _rows, o._cols);
    std::vector<__int128> wide(2 * d - 1);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < o._cols; ++j) {
        std::fill(wide.begin(), wide.end(), 0);
        for (std::size_t k = 0; k < _cols; ++k) {
          accumulate(wide, entry(i, k), o.entry(k, j));
        }
        _ring->reduce(wide, out.entry(i, j));
      }
    }
    return out;
  }

  CycMatrix CycMatrix::operator+(CycMatrix const& o) const {
    if (_rows != o._rows || _cols != o._cols) {
      throw Error("matrix shapes do not match");
    }
    auto out = *this;
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] = checked_add(_data[i], o._data[i]);
    }
    return out;
  }

  CycMatrix CycMatrix::operator-(CycMatrix const& o) const {
    return *this + o.scaled(-1);
  }

  CycMatrix CycMatrix::scaled(std::int64_t k) const {
    auto out = *this;
    for (auto& c : out._data) {
      c = narrow(static_cast<__int128>(c) * k);
    }
    return out;
  }

  CycMatrix CycMatrix::power(std::uint64_t e) const {
    auto result = identity(_ring, _rows);
    auto base   = *this;
    while (e != 0) {
      if ((e & 1U) != 0) {
        result = result * base;
      }
      e >>= 1;
      if (e != 0) {
        base = base * base;
      }
    }
    return result;
  }

  bool CycMatrix::operator==(CycMatrix const& o) const {
    return _rows == o._rows && _cols == o._cols && _data == o._data
           && (_data.empty() || _ring->modulus() == o._ring->modulus());
  }

  bool CycMatrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    auto const d = _ring->degree();
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        auto e = entry(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          if (e[k] != ((i == j && k == 0) ? 1 : 0)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool CycMatrix::is_zero() const {
    return std::all_of(_data.begin(), _data.end(), [](auto c) { return c == 0; });
  }

  std::size_t CycMatrix::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : _data) {
      h ^= static_cast<std::uint64_t>(c);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  std::string CycMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < _rows; ++i) {
      out << "[";
      for (std::size_t j = 0; j < _cols; ++j) {
        out << (j == 0 ? "" : ", ") << number(i, j).to_string();
      }
      out << "]\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // GeometricRep
  ////////////////////////////////////////////////////////////////////////

  int required_modulus(CoxeterMatrix const& M) {
    long l = 2;
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        auto m = M.label(i, j);
        if (m.is_finite()) {
          l = std::lcm(l, static_cast<long>(m.value()));
          if (l > (1L << 40)) {
            throw ArithmeticLimit("labels need an unreasonably large cyclotomic field");
          }
        }
      }
    }
    return static_cast<int>(2 * l);
  }

  GeometricRep::GeometricRep(CoxeterMatrix M, OracleOptions options)
      : _M(std::move(M)), _options(options),
        _order_bound(std::make_shared<std::uint64_t>(0)) {
    auto const N = required_modulus(_M);
    if (N > _options.max_modulus) {
      throw ArithmeticLimit("labels need cyclotomic modulus " + std::to_string(N)
                            + " above the limit "
                            + std::to_string(_options.max_modulus));
    }
    _ring      = CyclotomicRing::get(N);
    auto const n = _M.rank();
    _gram2       = CycMatrix(_ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      _gram2.set(i, i, _ring->constant(2));
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        auto m = _M.label(i, j);
        auto c = m.is_infinite() ? _ring->constant(2) : _ring->two_cos_pi_over(m.value());
        for (auto& x : c) {
          x = -x;
        }
        _gram2.set(i, j, c);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto g = CycMatrix::identity(_ring, n);
      // Row i of s_i is e_i - 2B(a_i, .).
      for (std::size_t j = 0; j < n; ++j) {
        auto e = _gram2.entry(i, j);
        auto t = g.entry(i, j);
        for (std::size_t k = 0; k < e.size(); ++k) {
          t[k] -= e[k];
        }
      }
      _gens.push_back(std::move(g));
    }
  }

  CycNumber GeometricRep::bilinear(std::size_t i, std::size_t j) const {
    return _gram2.number(i, j) * CycNumber(_ring, _ring->constant(1), 2);
  }

  CycNumber GeometricRep::form2(CycMatrix const& u, CycMatrix const& v) const {
    auto p = u.transpose() * (_gram2 * v);
    return p.number(0, 0);
  }

  CycMatrix GeometricRep::left_multiply(std::size_t i, CycMatrix const& g) const {
    auto const n = rank();
    auto const d = _ring->degree();
    guard(*_ring, _gram2.bits(), g.bits(), n);
    auto                  out = g;
    std::vector<__int128> wide(2 * d - 1);
    for (std::size_t c = 0; c < g.cols(); ++c) {
      std::fill(wide.begin(), wide.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && _gram2.entry_is_zero(i, j)) {
          continue;
        }
        // row_i' = -row_i - sum_{j != i} 2B_ij row_j  =  row_i - sum_j 2B_ij row_j
        accumulate(wide, _gram2.entry(i, j), g.entry(j, c));
      }
      auto dst = out.entry(i, c);
      std::vector<std::int64_t> tmp(d);
      _ring->reduce(wide, tmp);
      for (std::size_t k = 0; k < d; ++k) {
        dst[k] = checked_add(dst[k], -tmp[k]);
      }
    }
    return out;
  }

  CycMatrix GeometricRep::right_multiply(CycMatrix const& g, std::size_t i) const {
    auto const n = rank();
    auto const d = _ring->degree();
    guard(*_ring, _gram2.bits(), g.bits(), 2);
    auto                      out = g;
    std::vector<__int128>     wide(2 * d - 1);
    std::vector<std::int64_t> tmp(d);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      auto gi = g.entry(r, i);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) {
          continue;
        }
        if (_gram2.entry_is_zero(i, k)) {
          continue;
        }
        std::fill(wide.begin(), wide.end(), 0);
        accumulate(wide, _gram2.entry(i, k), gi);
        _ring->reduce(wide, tmp);
        auto dst = out.entry(r, k);
        for (std::size_t q = 0; q < d; ++q) {
          dst[q] = checked_add(dst[q], -tmp[q]);
        }
      }
      auto dst = out.entry(r, i);
      for (std::size_t q = 0; q < d; ++q) {
        dst[q] = -gi[q];
      }
    }
    return out;
  }

  std::uint64_t GeometricRep::finite_order_bound() const {
    std::atomic_ref<std::uint64_t> slot(*_order_bound);
    auto                           v = slot.load();
    if (v == 0) {
      v = coxtwist::finite_order_bound(_M);
      slot.store(v);
    }
    return v;
  }

  int GeometricRep::root_sign(CycMatrix const& column) const {
    long double best  = 0;
    int         sign  = 0;
    for (std::size_t i = 0; i < column.rows(); ++i) {
      auto v = _ring->evaluate(column.entry(i, 0));
      if (std::fabs(v) > best) {
        best = std::fabs(v);
        sign = v > 0 ? 1 : -1;
      }
    }
    return sign;
  }

  GeometricRep build_rep(CoxeterMatrix const& M, OracleOptions options) {
    GeometricRep rep(M, options);
    auto const   n = M.rank();
    auto const&  G = rep.gram2();
    for (std::size_t i = 0; i < n; ++i) {
      auto const& g = rep.generator(i);
      if (!(g * g).is_identity()) {
        throw Error("internal error: generator " + M.name(i) + " is not an involution");
      }
      if (!(g.transpose() * G * g == G)) {
        throw Error("internal error: generator " + M.name(i)
                    + " does not preserve the bilinear form");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto m = M.label(i, j);
        if (m.is_finite()) {
          auto p = rep.generator(i) * rep.generator(j);
          if (!p.power(static_cast<std::uint64_t>(m.value())).is_identity()) {
            throw Error("internal error: relation (" + M.name(i) + " " + M.name(j)
                        + ")^" + m.to_string() + " fails");
          }
        }
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  GroupElement identity_element(GeometricRep const& rep) {
    return {CycMatrix::identity(rep.ring(), rep.rank()), Word{}};
  }

  GroupElement element(GeometricRep const& rep, Word const& word) {
    auto m = CycMatrix::identity(rep.ring(), rep.rank());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it >= rep.rank()) {
        throw Error("generator index out of range");
      }
      m = rep.left_multiply(*it, m);
    }
    return {std::move(m), word};
  }

  GroupElement element(GeometricRep const& rep, std::span<std::string const> word) {
    Word w;
    for (auto const& name : word) {
      w.push_back(rep.diagram().index_of(name));
    }
    return element(rep, w);
  }

  GroupElement multiply(GroupElement const& a, GroupElement const& b) {
    GroupElement out{a.matrix * b.matrix, std::nullopt};
    if (a.word && b.word) {
      Word w = *a.word;
      w.insert(w.end(), b.word->begin(), b.word->end());
      out.word = std::move(w);
    }
    return out;
  }

  GroupElement inverse(GeometricRep const& rep, GroupElement const& g) {
    if (g.word) {
      Word w(g.word->rbegin(), g.word->rend());
      return element(rep, w);
    }
    if ((g.matrix * g.matrix).is_identity()) {
      return g;
    }
    throw Error("cannot invert an element without a word");
  }

  GroupElement conjugate(GeometricRep const& rep,
                         GroupElement const& w,
                         GroupElement const& g) {
    return multiply(multiply(w, g), inverse(rep, w));
  }

  std::string format_word(CoxeterMatrix const& M, Word const& w) {
    if (w.empty()) {
      return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i == 0 ? "" : " ") + M.name(w[i]);
    }
    return out;
  }

  Word parse_word(CoxeterMatrix const& M, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        tok;
    Word               w;
    std::size_t        count = 0;
    while (in >> tok) {
      ++count;
      if (tok == "-") {
        continue;
      }
      w.push_back(M.index_of(tok));
    }
    if (count > 1 && w.size() != count) {
      throw Error("'-' stands for the empty word and cannot be combined with names");
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders and reflections
  ////////////////////////////////////////////////////////////////////////

  std::string Order::to_string() const {
    switch (kind) {
      case Kind::finite:
        return std::to_string(value);
      case Kind::infinite:
        return "inf";
      case Kind::unknown:
        break;
    }
    return "unknown";
  }

  Label Order::to_label() const {
    if (kind == Kind::infinite) {
      return Label::infinity();
    }
    if (kind == Kind::finite && value >= 2) {
      return Label(static_cast<int>(value));
    }
    throw Error("order " + to_string() + " is not a Coxeter label");
  }

  std::optional<CycMatrix> reflection_root(GeometricRep const& rep, CycMatrix const& g) {
    auto const n = rep.rank();
    if (g.is_identity() || !(g * g).is_identity()) {
      return std::nullopt;
    }
    auto const I = CycMatrix::identity(rep.ring(), n);
    auto const A = I - g;
    // Pivot: a nonzero entry (p, q); then A has rank one iff every column x
    // satisfies x_i c_p = x_p c_i against the pivot column c.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t q = 0; q < n && !pivot; ++q) {
      for (std::size_t p = 0; p < n; ++p) {
        if (!A.entry_is_zero(p, q)) {
          pivot = {p, q};
          break;
        }
      }
    }
    auto const [p, q] = *pivot;
    auto const& ring  = *rep.ring();
    auto const  d     = ring.degree();
    guard(ring, A.bits(), A.bits(), 2);
    std::vector<std::int64_t> lhs(d), rhs(d);
    for (std::size_t x = 0; x < n; ++x) {
      if (x == q) {
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        ring.multiply(A.entry(i, x), A.entry(p, q), lhs);
        ring.multiply(A.entry(p, x), A.entry(i, q), rhs);
        if (lhs != rhs) {
          return std::nullopt;
        }
      }
    }
    return A.column(q);
  }

  std::optional<std::vector<CycNumber>> is_reflection(GeometricRep const& rep,
                                                      GroupElement const& g) {
    auto root = reflection_root(rep, g.matrix);
    if (!root) {
      return std::nullopt;
    }
    std::vector<CycNumber> out;
    std::optional<CycNumber> lead;
    for (std::size_t i = 0; i < root->rows(); ++i) {
      auto v = root->number(i, 0);
      if (!lead && !v.is_zero()) {
        lead = v.inverse();
      }
      out.push_back(v);
    }
    for (auto& v : out) {
      v = v * *lead;
    }
    return out;
  }

  namespace {

    struct PowerSearch {
      std::optional<std::uint64_t> order;
      bool                         overflow = false;
      // Some power has |trace| > rank at the standard embedding, which no
      // finite-order element allows (its eigenvalues are roots of unity).
      bool infinite = false;
    };

    bool trace_exceeds_rank(CycMatrix const& p) {
      auto const& ring  = *p.ring_ptr();
      long double trace = 0;
      long double scale = 0;
      for (std::size_t i = 0; i < p.rows(); ++i) {
        auto const e = p.entry(i, i);
        trace += ring.evaluate(e);
        for (auto v : e) {
          scale += std::fabs(static_cast<long double>(v));
        }
      }
      return std::fabs(trace) > static_cast<long double>(p.rows()) + 1e-6L + 1e-12L * scale;
    }

    // Smallest k <= bound with g^k = 1.
    PowerSearch power_search(CycMatrix const& g, std::uint64_t bound) {
      auto p = g;
      try {
        for (std::uint64_t k = 1; k <= bound; ++k) {
          if (p.is_identity()) {
            return {k, false, false};
          }
          if (trace_exceeds_rank(p)) {
            return {std::nullopt, false, true};
          }
          if (k < bound) {
            p = p * g;
          }
        }
      } catch (ArithmeticLimit const&) {
        return {std::nullopt, true, false};
      }
      return {};
    }

  }  // namespace

  Order order_of_product(GeometricRep const& rep,
                         GroupElement const& r,
                         GroupElement const& r2,
                         std::uint64_t       bound) {
    auto u = reflection_root(rep, r.matrix);
    auto v = reflection_root(rep, r2.matrix);
    if (!u || !v) {
      throw PreconditionError("order_of_product needs two reflections");
    }
    auto const g = r.matrix * r2.matrix;
    if (g.is_identity()) {
      return Order::finite(1);
    }
    // |B(u,v)|^2 >= B(u,u) B(v,v) exactly when <r, r2> is infinite.
    auto const buv = rep.form2(*u, *v);
    auto const c   = buv * buv - rep.form2(*u, *u) * rep.form2(*v, *v);
    if (c.is_zero()) {
      return Order::infinite();
    }
    auto const sign = numeric_sign(c.ring(), c.numerator());
    if (sign && *sign > 0) {
      return Order::infinite();
    }
    auto const found = power_search(g, bound);
    if (found.infinite) {
      return Order::infinite();
    }
    return found.order ? Order::finite(*found.order) : Order::unknown();
  }

  Order order_of_product(GeometricRep const& rep,
                         GroupElement const& r,
                         GroupElement const& r2) {
    return order_of_product(rep, r, r2, rep.options().order_bound);
  }

  Order element_order(GeometricRep const& rep, GroupElement const& g, std::uint64_t bound) {
    auto const limit = rep.finite_order_bound();
    auto const found = power_search(g.matrix, std::min(bound, limit));
    if (found.order) {
      return Order::finite(*found.order);
    }
    if (found.infinite || (!found.overflow && limit <= bound)) {
      return Order::infinite();
    }
    return Order::unknown();
  }

  ////////////////////////////////////////////////////////////////////////
  // Longest elements and centres
  ////////////////////////////////////////////////////////////////////////

  GroupElement longest_element(GeometricRep const& rep, VertexSet J) {
    if (!is_spherical(rep.diagram(), J)) {
      throw PreconditionError("longest element of non-spherical "
                              + rep.diagram().format(J));
    }
    auto        w       = CycMatrix::identity(rep.ring(), rep.rank());
    Word        word;
    auto const  members = J.members();
    std::size_t guard_len = 0;
    auto const  dec       = spherical_decomposition(rep.diagram(), J);
    for (auto const& c : *dec) {
      guard_len += c.type.group_order() > 1 ? c.type.group_order() : 1;
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (auto j : members) {
        if (rep.root_sign(w.column(j)) > 0) {
          w = rep.right_multiply(w, j);
          word.push_back(j);
          grew = true;
          break;
        }
      }
      if (word.size() > guard_len) {
        throw Error("internal error: longest element search did not terminate");
      }
    }
    return {std::move(w), std::move(word)};
  }

  std::vector<GroupElement> center_of_spherical(GeometricRep const& rep, VertexSet J) {
    auto decomposition = spherical_decomposition(rep.diagram(), J);
    if (!decomposition) {
      throw PreconditionError("centre of non-spherical " + rep.diagram().format(J));
    }
    std::vector<GroupElement> central;
    for (auto const& c : *decomposition) {
      if (opposition_involution(rep.diagram(), c.vertices).is_identity()) {
        central.push_back(longest_element(rep, c.vertices));
      }
    }
    std::vector<GroupElement> out;
    auto const                k = central.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      auto g = identity_element(rep);
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) {
          g = multiply(g, central[i]);
        }
      }
      out.push_back(std::move(g));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  Enumeration enumerate_group(GeometricRep const& rep, VertexSet J, std::size_t element_cap) {
    Enumeration                                           out;
    std::unordered_map<CycMatrix, std::size_t, CycMatrixHash> seen;
    auto start = identity_element(rep);
    seen.emplace(start.matrix, 0);
    out.elements.push_back(std::move(start));
    auto const gens = J.members();
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
      for (auto s : gens) {
        auto m = rep.left_multiply(s, out.elements[head].matrix);
        if (seen.contains(m)) {
          continue;
        }
        if (out.elements.size() >= element_cap) {
          out.truncated = true;
          return out;
        }
        Word w{s};
        w.insert(w.end(), out.elements[head].word->begin(),
                 out.elements[head].word->end());
        seen.emplace(m, out.elements.size());
        out.elements.push_back({std::move(m), std::move(w)});
      }
    }
    return out;
  }

  Enumeration enumerate_group(GeometricRep const& rep, std::size_t element_cap) {
    return enumerate_group(rep, rep.diagram().all(), element_cap);
  }

}  // namespace coxtwist
