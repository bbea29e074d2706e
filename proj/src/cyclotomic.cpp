#include "coxtwist/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxtwist/error.hpp"

namespace coxtwist {

  namespace {

    using Poly = std::vector<std::int64_t>;
    using boost::multiprecision::cpp_rational;
    using RPoly = std::vector<cpp_rational>;

    std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticLimit("cyclotomic coefficient overflow");
      }
      return r;
    }

    std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw ArithmeticLimit("cyclotomic coefficient overflow");
      }
      return r;
    }

    std::int64_t narrow(__int128 v) {
      if (v > INT64_MAX || v < INT64_MIN) {
        throw ArithmeticLimit("cyclotomic coefficient overflow");
      }
      return static_cast<std::int64_t>(v);
    }

    void trim(Poly& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    // Exact quotient of p by a monic divisor.
    Poly divide_exact(Poly p, Poly const& divisor) {
      trim(p);
      auto const dd = divisor.size() - 1;
      if (p.size() < divisor.size()) {
        throw Error("internal error: cyclotomic division");
      }
      Poly q(p.size() - dd, 0);
      for (std::size_t k = p.size(); k-- > dd;) {
        auto c          = p[k];
        q[k - dd]       = c;
        for (std::size_t j = 0; j <= dd; ++j) {
          p[k - dd + j] = checked_add(p[k - dd + j], -checked_mul(c, divisor[j]));
        }
      }
      trim(p);
      if (!p.empty()) {
        throw Error("internal error: cyclotomic division left a remainder");
      }
      return q;
    }

    void rtrim(RPoly& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    // Remainder and quotient over Q.
    std::pair<RPoly, RPoly> rdivmod(RPoly a, RPoly const& b) {
      RPoly q;
      rtrim(a);
      if (a.size() >= b.size()) {
        auto const shift = b.size() - 1;
        q.assign(a.size() - shift, 0);
        for (std::size_t k = a.size(); k-- > shift;) {
          auto c          = a[k] / b.back();
          q[k - shift]    = c;
          for (std::size_t j = 0; j < b.size(); ++j) {
            a[k - shift + j] -= c * b[j];
          }
        }
      }
      rtrim(a);
      return {q, a};
    }

    RPoly rmul(RPoly const& a, RPoly const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      RPoly out(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      rtrim(out);
      return out;
    }

    RPoly rsub(RPoly a, RPoly const& b) {
      if (a.size() < b.size()) {
        a.resize(b.size(), 0);
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
      }
      rtrim(a);
      return a;
    }

  }  // namespace

  int bit_length(std::int64_t v) noexcept {
    auto u = v < 0 ? -static_cast<__int128>(v) : static_cast<__int128>(v);
    int  b = 0;
    while (u != 0) {
      ++b;
      u >>= 1;
    }
    return b;
  }

  int bit_length(std::span<std::int64_t const> v) noexcept {
    int b = 0;
    for (auto c : v) {
      b = std::max(b, bit_length(c));
    }
    return b;
  }

  std::vector<std::int64_t> cyclotomic_polynomial(int N) {
    if (N < 1) {
      throw Error("cyclotomic polynomial of non-positive order");
    }
    static std::mutex              mutex;
    static std::map<int, Poly>     cache;
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(N); it != cache.end()) {
        return it->second;
      }
    }
    Poly p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d) {
      if (N % d == 0) {
        p = divide_exact(p, cyclotomic_polynomial(d));
      }
    }
    std::lock_guard lock(mutex);
    cache.emplace(N, p);
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // CyclotomicRing
  ////////////////////////////////////////////////////////////////////////

  CyclotomicRing::CyclotomicRing(int N) : _N(N) {
    if (N < 1) {
      throw Error("cyclotomic modulus must be positive");
    }
    _phi = cyclotomic_polynomial(N);
    _d   = _phi.size() - 1;
    // x^d = -(phi_0 + ... + phi_{d-1} x^{d-1})
    if (_d >= 2) {
      Poly cur(_d);
      for (std::size_t i = 0; i < _d; ++i) {
        cur[i] = -_phi[i];
      }
      _table.push_back(cur);
      for (std::size_t k = 1; k + 1 < _d; ++k) {
        Poly next(_d, 0);
        auto top = cur[_d - 1];
        for (std::size_t i = _d - 1; i >= 1; --i) {
          next[i] = cur[i - 1];
        }
        for (std::size_t i = 0; i < _d; ++i) {
          next[i] = checked_add(next[i], checked_mul(top, -_phi[i]));
        }
        _table.push_back(next);
        cur = std::move(next);
      }
    }
    for (auto const& row : _table) {
      _table_bits = std::max(_table_bits, bit_length(row));
    }
    _cos.resize(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
      _cos[k] = std::cos(2 * std::numbers::pi_v<long double> * k / N);
    }
  }

  std::shared_ptr<CyclotomicRing const> CyclotomicRing::get(int N) {
    static std::mutex                                            mutex;
    static std::map<int, std::shared_ptr<CyclotomicRing const>> cache;
    std::lock_guard                                              lock(mutex);
    auto&                                                        slot = cache[N];
    if (!slot) {
      slot = std::make_shared<CyclotomicRing const>(N);
    }
    return slot;
  }

  CyclotomicRing::Coeffs CyclotomicRing::constant(std::int64_t c) const {
    auto out = zero();
    out[0]   = c;
    return out;
  }

  CyclotomicRing::Coeffs CyclotomicRing::zeta_power(long k) const {
    k %= _N;
    if (k < 0) {
      k += _N;
    }
    if (static_cast<std::size_t>(k) < 2 * _d - 1) {
      std::vector<__int128> wide(2 * _d - 1, 0);
      wide[k] = 1;
      Coeffs out(_d);
      reduce(wide, out);
      return out;
    }
    // Repeated multiplication by x.
    Coeffs out = constant(1);
    Coeffs x   = zero();
    if (_d == 1) {
      x[0] = -_phi[0];
    } else {
      x[1] = 1;
    }
    for (long i = 0; i < k; ++i) {
      Coeffs next(_d);
      multiply(out, x, next);
      out = std::move(next);
    }
    return out;
  }

  CyclotomicRing::Coeffs CyclotomicRing::two_cos_pi_over(int m) const {
    if (m < 1 || _N % (2 * m) != 0) {
      throw Error("2cos(pi/" + std::to_string(m)
                  + ") is not in the cyclotomic ring of order "
                  + std::to_string(_N));
    }
    auto e   = _N / (2 * m);
    auto out = zeta_power(e);
    auto b   = zeta_power(-static_cast<long>(e));
    for (std::size_t i = 0; i < _d; ++i) {
      out[i] = checked_add(out[i], b[i]);
    }
    return out;
  }

  void CyclotomicRing::reduce(std::span<__int128 const> wide,
                              std::span<std::int64_t>   out) const {
    for (std::size_t i = 0; i < _d; ++i) {
      __int128 acc = wide[i];
      for (std::size_t k = 0; k + 1 < _d; ++k) {
        acc += wide[_d + k] * _table[k][i];
      }
      out[i] = narrow(acc);
    }
  }

  void CyclotomicRing::multiply(std::span<std::int64_t const> a,
                                std::span<std::int64_t const> b,
                                std::span<std::int64_t>       out) const {
    int const width = bit_length(static_cast<std::int64_t>(_d)) + 1;
    if (bit_length(a) + bit_length(b) + 2 * width + _table_bits > 124) {
      throw ArithmeticLimit("cyclotomic coefficient overflow");
    }
    std::vector<__int128> wide(2 * _d - 1, 0);
    for (std::size_t i = 0; i < _d; ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < _d; ++j) {
        wide[i + j] += static_cast<__int128>(a[i]) * b[j];
      }
    }
    reduce(wide, out);
  }

  long double CyclotomicRing::evaluate(std::span<std::int64_t const> a) const {
    long double s = 0;
    for (std::size_t i = 0; i < _d; ++i) {
      if (a[i] != 0) {
        s += static_cast<long double>(a[i]) * _cos[i];
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // CycNumber
  ////////////////////////////////////////////////////////////////////////

  CycNumber::CycNumber(std::shared_ptr<CyclotomicRing const> ring,
                       CyclotomicRing::Coeffs                num,
                       std::int64_t                          den)
      : _ring(std::move(ring)), _num(std::move(num)), _den(den) {
    if (_num.size() != _ring->degree()) {
      throw Error("coefficient vector has the wrong length");
    }
    if (_den == 0) {
      throw Error("zero denominator");
    }
    normalize();
  }

  CycNumber CycNumber::integer(std::shared_ptr<CyclotomicRing const> ring,
                               std::int64_t                          v) {
    auto c = ring->constant(v);
    return CycNumber(std::move(ring), std::move(c));
  }

  CycNumber CycNumber::two_cos(std::shared_ptr<CyclotomicRing const> ring,
                               int                                   m) {
    if (m == 0) {
      return integer(std::move(ring), 2);
    }
    auto c = ring->two_cos_pi_over(m);
    return CycNumber(std::move(ring), std::move(c));
  }

  void CycNumber::normalize() {
    if (_den < 0) {
      for (auto& c : _num) {
        c = checked_mul(c, -1);
      }
      _den = checked_mul(_den, -1);
    }
    std::int64_t g = _den;
    for (auto c : _num) {
      g = std::gcd(g, c);
    }
    if (g > 1) {
      for (auto& c : _num) {
        c /= g;
      }
      _den /= g;
    }
  }

  bool CycNumber::is_zero() const {
    return std::all_of(_num.begin(), _num.end(), [](auto c) { return c == 0; });
  }

  CycNumber CycNumber::operator-() const {
    auto out = *this;
    for (auto& c : out._num) {
      c = checked_mul(c, -1);
    }
    return out;
  }

  CycNumber CycNumber::operator+(CycNumber const& o) const {
    if (_ring != o._ring) {
      throw Error("cyclotomic numbers from different rings");
    }
    auto const l  = std::lcm(_den, o._den);
    auto const fa = l / _den, fb = l / o._den;
    CyclotomicRing::Coeffs num(_num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
      num[i] = checked_add(checked_mul(_num[i], fa), checked_mul(o._num[i], fb));
    }
    return CycNumber(_ring, std::move(num), l);
  }

  CycNumber CycNumber::operator-(CycNumber const& o) const {
    return *this + (-o);
  }

  CycNumber CycNumber::operator*(CycNumber const& o) const {
    if (_ring != o._ring) {
      throw Error("cyclotomic numbers from different rings");
    }
    CyclotomicRing::Coeffs num(_num.size());
    _ring->multiply(_num, o._num, num);
    return CycNumber(_ring, std::move(num), checked_mul(_den, o._den));
  }

  CycNumber CycNumber::inverse() const {
    if (is_zero()) {
      throw Error("division by zero in a cyclotomic field");
    }
    // Extended Euclid over Q: s a + t phi = 1.
    RPoly a(_num.begin(), _num.end());
    RPoly phi(_ring->phi().begin(), _ring->phi().end());
    rtrim(a);
    RPoly r0 = phi, r1 = a;
    RPoly s0, s1{cpp_rational(1)};
    while (!r1.empty() && r1.size() > 1) {
      auto [q, r] = rdivmod(r0, r1);
      auto s2     = rsub(s0, rmul(q, s1));
      r0          = std::move(r1);
      r1          = std::move(r);
      s0          = std::move(s1);
      s1          = std::move(s2);
    }
    if (r1.empty()) {
      throw Error("internal error: element shares a factor with Phi_N");
    }
    // r1 is a nonzero constant c: s1 a = c (mod phi).
    auto const c = r1[0];
    s1           = rdivmod(s1, phi).second;
    RPoly inv(_num.size(), 0);
    for (std::size_t i = 0; i < s1.size() && i < inv.size(); ++i) {
      inv[i] = s1[i] / c * _den;
    }
    // Common denominator.
    boost::multiprecision::cpp_int den = 1;
    for (auto const& q : inv) {
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    }
    CyclotomicRing::Coeffs num(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
      boost::multiprecision::cpp_int v = boost::multiprecision::numerator(inv[i])
                                           * (den / boost::multiprecision::denominator(inv[i]));
      if (v > INT64_MAX || v < INT64_MIN) {
        throw ArithmeticLimit("cyclotomic inverse does not fit in 64 bits");
      }
      num[i] = static_cast<std::int64_t>(v);
    }
    if (den > INT64_MAX) {
      throw ArithmeticLimit("cyclotomic inverse does not fit in 64 bits");
    }
    return CycNumber(_ring, std::move(num), static_cast<std::int64_t>(den));
  }

  bool CycNumber::operator==(CycNumber const& o) const {
    return _ring->modulus() == o._ring->modulus() && _den == o._den
           && _num == o._num;
  }

  long double CycNumber::to_long_double() const {
    return _ring->evaluate(_num) / static_cast<long double>(_den);
  }

  std::string CycNumber::to_string() const {
    std::ostringstream out;
    bool               any = false;
    if (_den != 1) {
      out << "(";
    }
    for (std::size_t i = 0; i < _num.size(); ++i) {
      auto c = _num[i];
      if (c == 0) {
        continue;
      }
      if (any) {
        out << (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        out << "-";
      }
      auto a = c < 0 ? -c : c;
      if (i == 0) {
        out << a;
      } else {
        if (a != 1) {
          out << a << "*";
        }
        out << "z" << (i == 1 ? "" : "^" + std::to_string(i));
      }
      any = true;
    }
    if (!any) {
      out << "0";
    }
    if (_den != 1) {
      out << ")/" << _den;
    }
    return out.str();
  }

}  // namespace coxtwist
