#pragma once

// Exact-rational linear algebra, algebras and their monoidal functor on the
// augmented total category, paracyclic duality, and the Hochschild complex.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossed.hpp"
#include "embed.hpp"
#include "interval.hpp"
#include "operad.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace crossed {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// An integer or p/q with q > 0.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start >= s.size()) throw std::invalid_argument("rational: malformed '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("rational: malformed '" + text + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, true));
  const BigInt num = parse_int(text.substr(0, slash), true);
  const BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  return Rational(num, den);
}

using SparseVector = std::map<std::size_t, Rational>;

/// Sparse exact-rational matrix stored by rows; zero entries are never stored.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t i) const { return rows_.at(i); }

  Rational get(std::size_t i, std::size_t j) const {
    const auto& r = rows_.at(i);
    auto it = r.find(j);
    return it == r.end() ? Rational(0) : it->second;
  }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    check(i, j);
    if (v == 0) {
      rows_[i].erase(j);
    } else {
      rows_[i][j] = v;
    }
  }
  void add(std::size_t i, std::size_t j, const Rational& v) {
    check(i, j);
    if (v == 0) return;
    auto& e = rows_[i][j];
    e += v;
    if (e == 0) rows_[i].erase(j);
  }

  std::size_t nonzeros() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.size();
    return c;
  }
  bool is_zero() const { return nonzeros() == 0; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& [k, av] : a.rows_[i]) {
        for (const auto& [j, bv] : b.rows_[k]) c.add(i, j, av * bv);
      }
    }
    return c;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    RationalMatrix c = a;
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (const auto& [j, v] : b.rows_[i]) c.add(i, j, v);
    }
    return c;
  }

  RationalMatrix scaled(const Rational& s) const {
    RationalMatrix c(rows(), cols());
    if (s == 0) return c;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : rows_[i]) c.rows_[i][j] = v * s;
    }
    return c;
  }

  /// Kronecker product with the first factor most significant.
  friend RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& [j, av] : a.rows_[i]) {
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (const auto& [l, bv] : b.rows_[k]) c.rows_[i * b.rows() + k][j * b.cols() + l] = av * bv;
        }
      }
    }
    return c;
  }

  /// Rank by exact Gaussian elimination.
  std::size_t rank() const {
    std::vector<SparseVector> pending(rows_.begin(), rows_.end());
    std::map<std::size_t, SparseVector> pivots;  // leading column -> normalized row
    std::size_t r = 0;
    for (auto& row : pending) {
      while (!row.empty()) {
        const auto lead = row.begin()->first;
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
          const Rational inv = 1 / row.begin()->second;
          for (auto& [j, v] : row) v *= inv;
          pivots.emplace(lead, std::move(row));
          ++r;
          break;
        }
        const Rational factor = row.begin()->second;
        for (const auto& [j, v] : it->second) {
          auto& e = row[j];
          e -= factor * v;
          if (e == 0) row.erase(j);
        }
      }
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows(); ++i) {
      os << "[";
      for (std::size_t j = 0; j < cols(); ++j) os << (j ? " " : "") << rational_to_string(get(i, j));
      os << "]\n";
    }
    return os.str();
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

/// A finite-dimensional associative unital algebra over the rationals:
/// e_i e_j = sum_k c(i,j,k) e_k.
class Algebra {
 public:
  Algebra(std::size_t dim, std::vector<Rational> unit, std::vector<Rational> mul)
      : dim_(dim), unit_(std::move(unit)), mul_(std::move(mul)) {
    if (dim_ == 0) throw std::invalid_argument("algebra: dimension must be positive");
    if (unit_.size() != dim_ || mul_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("algebra: wrong sizes");
    validate();
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Rational>& unit() const { return unit_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return mul_[(i * dim_ + j) * dim_ + k]; }

  SparseVector unit_vector() const {
    SparseVector v;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (unit_[i] != 0) v[i] = unit_[i];
    }
    return v;
  }

  SparseVector product(const SparseVector& a, const SparseVector& b) const {
    SparseVector out;
    for (const auto& [i, av] : a) {
      for (const auto& [j, bv] : b) {
        for (std::size_t k = 0; k < dim_; ++k) {
          const Rational& ck = c(i, j, k);
          if (ck == 0) continue;
          auto& e = out[k];
          e += av * bv * ck;
          if (e == 0) out.erase(k);
        }
      }
    }
    return out;
  }

  /// e_{i_1} ... e_{i_k}; the unit for k = 0.
  SparseVector product_of_basis(const std::vector<std::size_t>& idx) const {
    if (idx.empty()) return unit_vector();
    SparseVector acc{{idx[0], Rational(1)}};
    for (std::size_t t = 1; t < idx.size(); ++t) acc = product(acc, SparseVector{{idx[t], Rational(1)}});
    return acc;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "dim " << dim_ << "\nunit";
    for (const auto& q : unit_) os << " " << rational_to_string(q);
    os << "\n";
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          if (c(i, j, k) != 0) os << "mul " << i << " " << j << " " << k << " " << rational_to_string(c(i, j, k)) << "\n";
        }
      }
    }
    return os.str();
  }

 private:
  void validate() const {
    const SparseVector u = unit_vector();
    for (std::size_t i = 0; i < dim_; ++i) {
      const SparseVector ei{{i, Rational(1)}};
      if (product(u, ei) != ei || product(ei, u) != ei) {
        throw std::invalid_argument("algebra: unit is not a two-sided identity (basis " + std::to_string(i) + ")");
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        const SparseVector ej{{j, Rational(1)}};
        const SparseVector eij = product(ei, ej);
        for (std::size_t k = 0; k < dim_; ++k) {
          const SparseVector ek{{k, Rational(1)}};
          if (product(eij, ek) != product(ei, product(ej, ek))) {
            throw std::invalid_argument("algebra: multiplication is not associative at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
          }
        }
      }
    }
  }

  std::size_t dim_;
  std::vector<Rational> unit_;
  std::vector<Rational> mul_;
};

/// Lines "dim d", "unit q_1 .. q_d", "mul i j k q" (0-based basis indices); '#' starts a comment.
inline Algebra parse_algebra(std::istream& in) {
  std::size_t dim = 0;
  std::vector<Rational> unit;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> entries;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("algebra file: line " + std::to_string(lineno) + ": " + msg);
  };
  auto parse_index = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      fail("bad index '" + s + "'");
    }
    const std::size_t v = std::stoul(s);
    if (v >= dim) fail("index " + s + " out of range");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a);
    try {
      if (key == "dim") {
        if (dim != 0) fail("duplicate dim");
        if (args.size() != 1) fail("dim takes one value");
        const Rational d = parse_rational(args[0]);
        if (d < 1 || boost::multiprecision::denominator(d) != 1) fail("dim must be a positive integer");
        dim = static_cast<std::size_t>(boost::multiprecision::numerator(d));
      } else if (key == "unit") {
        if (dim == 0) fail("unit before dim");
        if (!unit.empty()) fail("duplicate unit");
        if (args.size() != dim) fail("unit needs " + std::to_string(dim) + " entries");
        for (const auto& a : args) unit.push_back(parse_rational(a));
      } else if (key == "mul") {
        if (dim == 0) fail("mul before dim");
        if (args.size() != 4) fail("mul takes i j k q");
        const auto key3 = std::make_tuple(parse_index(args[0]), parse_index(args[1]), parse_index(args[2]));
        if (entries.count(key3)) fail("duplicate structure constant");
        entries[key3] = parse_rational(args[3]);
      } else {
        fail("unknown keyword '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (dim == 0) throw std::runtime_error("algebra file: missing dim");
  if (unit.empty()) throw std::runtime_error("algebra file: missing unit");
  std::vector<Rational> mul(dim * dim * dim);
  for (const auto& [k, v] : entries) mul[(std::get<0>(k) * dim + std::get<1>(k)) * dim + std::get<2>(k)] = v;
  try {
    return Algebra(dim, std::move(unit), std::move(mul));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("algebra file: ") + e.what());
  }
}

inline Algebra parse_algebra_text(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

inline Algebra ground_field() { return Algebra(1, {1}, {1}); }

/// Q[x]/(x^2) with basis (1, x).
inline Algebra dual_numbers() {
  std::vector<Rational> mul(8);
  auto at = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 2 + j) * 2 + k; };
  mul[at(0, 0, 0)] = 1;
  mul[at(0, 1, 1)] = 1;
  mul[at(1, 0, 1)] = 1;
  return Algebra(2, {1, 0}, std::move(mul));
}

/// M_n(Q) with basis E_ab at index a*n + b.
inline Algebra matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  std::vector<Rational> mul(d * d * d);
  std::vector<Rational> unit(d);
  for (std::size_t a = 0; a < n; ++a) {
    unit[a * n + a] = 1;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) mul[((a * n + b) * d + (b * n + c)) * d + (a * n + c)] = 1;
    }
  }
  return Algebra(d, std::move(unit), std::move(mul));
}

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

/// Digits of a tensor basis index, first factor most significant.
inline std::vector<std::size_t> tensor_digits(std::size_t index, std::size_t d, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t t = n; t-- > 0;) {
    digits[t] = index % d;
    index /= d;
  }
  return digits;
}

inline std::size_t tensor_index(const std::vector<std::size_t>& digits, std::size_t d) {
  std::size_t r = 0;
  for (auto v : digits) r = r * d + v;
  return r;
}

}  // namespace detail

/// e_{i_1} (x) ... (x) e_{i_n} -> e_{i_{sigma^-1(1)}} (x) ... (x) e_{i_{sigma^-1(n)}}.
inline RationalMatrix theta_perm(const Permutation& sigma, std::size_t d) {
  const std::size_t n = sigma.degree();
  const std::size_t size = detail::ipow(d, n);
  RationalMatrix m(size, size);
  std::vector<std::size_t> moved(n);
  for (std::size_t col = 0; col < size; ++col) {
    const auto digits = detail::tensor_digits(col, d, n);
    for (std::size_t j = 0; j < n; ++j) moved[static_cast<std::size_t>(sigma(static_cast<int>(j + 1)) - 1)] = digits[j];
    m.set(detail::tensor_index(moved, d), col, 1);
  }
  return m;
}

/// A^{(x) sum w} -> A^{(x) |w|}: the j-th block of w_j factors is multiplied out (w_j = 0 inserts the unit).
inline RationalMatrix block_multiplication(const Algebra& a, const std::vector<int>& widths) {
  const std::size_t d = a.dim();
  std::size_t m = 0;
  for (int w : widths) m += static_cast<std::size_t>(w);
  const std::size_t n = widths.size();
  RationalMatrix out(detail::ipow(d, n), detail::ipow(d, m));
  for (std::size_t col = 0; col < out.cols(); ++col) {
    const auto digits = detail::tensor_digits(col, d, m);
    SparseVector acc{{0, Rational(1)}};
    std::size_t pos = 0;
    for (int w : widths) {
      const std::vector<std::size_t> block(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                           digits.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(w)));
      pos += static_cast<std::size_t>(w);
      const SparseVector v = a.product_of_basis(block);
      SparseVector next;
      for (const auto& [r, rv] : acc) {
        for (const auto& [i, iv] : v) next[r * d + i] += rv * iv;
      }
      acc = std::move(next);
    }
    for (const auto& [r, v] : acc) out.add(r, col, v);
  }
  return out;
}

/// F(phi, x) = (F(mu_{k_1}) (x) ... (x) F(mu_{k_n})) o Theta^x for augmented phi.
inline RationalMatrix monoidal_functor_value(const Algebra& a, const TotalMorphism<Permutation>& m) {
  if (!is_augmented_simplicial(m.phi)) {
    throw std::invalid_argument("monoidal_functor_value: morphism " + m.phi.to_string() + " is not augmented simplicial");
  }
  if (static_cast<int>(m.x.degree()) != m.phi.domain()) {
    throw std::invalid_argument("monoidal_functor_value: permutation degree does not match the domain");
  }
  return block_multiplication(a, m.phi.interior_counts()) * theta_perm(m.x, a.dim());
}

/// (phi_1, x_1) * (phi_2, x_2) = (phi_1 * phi_2, gamma(e_2; x_1, x_2)).
inline TotalMorphism<Permutation> total_join(const TotalMorphism<Permutation>& a, const TotalMorphism<Permutation>& b) {
  return {join(a.phi, b.phi), gamma_sym(Permutation::identity(2), {a.x, b.x})};
}

/// The crossed group used to compose total morphisms over S.
inline const PsiCrossed<SymOperad>& sym_crossed() {
  static const PsiCrossed<SymOperad> g(sym_operad(), -1);
  return g;
}

/// All augmented total morphisms <m> -> <n>.
inline std::vector<TotalMorphism<Permutation>> augmented_total_morphisms(int m, int n) {
  std::vector<TotalMorphism<Permutation>> out;
  for (const auto& phi : hom_enumerate(m, n)) {
    if (!is_augmented_simplicial(phi)) continue;
    for (const auto& x : all_permutations(static_cast<std::size_t>(m))) out.push_back({phi, x});
  }
  return out;
}

/// F(a o b) == F(a) F(b) on composable pairs and F(a * b) == F(a) (x) F(b), degrees <= maxdeg.
inline Report check_monoidal_functor(const Algebra& alg, int maxdeg) {
  Report report("monoidal-functor", maxdeg);
  ScopedTimer timer(report);
  const auto& g = sym_crossed();
  for (int l = 0; l <= maxdeg; ++l) {
    for (int m = 0; m <= maxdeg; ++m) {
      for (const auto& b : augmented_total_morphisms(l, m)) {
        const RationalMatrix fb = monoidal_functor_value(alg, b);
        for (int n = 0; n <= maxdeg; ++n) {
          for (const auto& a : augmented_total_morphisms(m, n)) {
            ++report.checked;
            const auto ab = total_compose(g, a, b);
            if (!(monoidal_functor_value(alg, ab) == monoidal_functor_value(alg, a) * fb)) {
              report.add("functoriality", {l, m, n},
                         {"a=(" + a.phi.to_string() + "," + a.x.to_string() + ")",
                          "b=(" + b.phi.to_string() + "," + b.x.to_string() + ")"});
            }
          }
        }
      }
    }
  }
  for (int m1 = 0; m1 <= maxdeg; ++m1) {
    for (int n1 = 0; n1 <= maxdeg; ++n1) {
      for (int m2 = 0; m1 + m2 <= maxdeg; ++m2) {
        for (int n2 = 0; n1 + n2 <= maxdeg; ++n2) {
          for (const auto& a : augmented_total_morphisms(m1, n1)) {
            for (const auto& b : augmented_total_morphisms(m2, n2)) {
              ++report.checked;
              if (!(monoidal_functor_value(alg, total_join(a, b)) ==
                    kron(monoidal_functor_value(alg, a), monoidal_functor_value(alg, b)))) {
                report.add("monoidality", {m1, n1, m2, n2},
                           {"a=(" + a.phi.to_string() + "," + a.x.to_string() + ")",
                            "b=(" + b.phi.to_string() + "," + b.x.to_string() + ")"});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

/// Strict associativity of the join on total morphisms and the S-symmetry composition formula:
/// (phi, x gamma(u; e_k)) o (phi_1 * .. * phi_n, gamma(e_n; x_i)) ==
/// (phi o (phi_{u^-1(1)} * ..)^x, (phi_{u^-1(1)} * ..)^*(x) gamma(u; x_1..x_n)).
inline Report check_total_symmetry(int n_bound, int deg_bound) {
  Report report("total-symmetry", deg_bound);
  ScopedTimer timer(report);
  const auto& g = sym_crossed();
  std::vector<TotalMorphism<Permutation>> small;
  for (int m = 0; m <= deg_bound; ++m) {
    for (int k = 0; k <= deg_bound; ++k) {
      for (auto& t : augmented_total_morphisms(m, k)) small.push_back(std::move(t));
    }
  }
  auto same = [](const TotalMorphism<Permutation>& a, const TotalMorphism<Permutation>& b) {
    return a.phi == b.phi && a.x == b.x;
  };
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        ++report.checked;
        if (!same(total_join(total_join(a, b), c), total_join(a, total_join(b, c)))) {
          report.add("join-associativity", {}, {a.phi.to_string(), b.phi.to_string(), c.phi.to_string()});
        }
      }
    }
  }
  for (int n = 0; n <= n_bound; ++n) {
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i < choice.size()) {
        for (std::size_t c = 0; c < small.size(); ++c) {
          choice[i] = c;
          self(self, i + 1);
        }
        return;
      }
      std::vector<int> ks, ms;
      std::vector<Permutation> xs;
      TotalMorphism<Permutation> joined{IntervalMorphism::identity(0), Permutation::identity(0)};
      for (auto c : choice) {
        ks.push_back(small[c].phi.codomain());
        ms.push_back(small[c].phi.domain());
        xs.push_back(small[c].x);
        joined = total_join(joined, small[c]);
      }
      int ktotal = 0;
      for (int k : ks) ktotal += k;
      std::vector<Permutation> ek, em;
      for (int k : ks) ek.push_back(Permutation::identity(static_cast<std::size_t>(k)));
      for (int m : ms) em.push_back(Permutation::identity(static_cast<std::size_t>(m)));
      for (int p = 0; p <= deg_bound; ++p) {
        for (const auto& outer : augmented_total_morphisms(ktotal, p)) {
          for (const auto& u : all_permutations(static_cast<std::size_t>(n))) {
            ++report.checked;
            const TotalMorphism<Permutation> left{outer.phi, compose(outer.x, gamma_sym(u, ek))};
            const auto lhs = total_compose(g, left, joined);
            const Permutation uinv = u.inverse();
            std::vector<IntervalMorphism> parts;
            for (int j = 1; j <= n; ++j) parts.push_back(small[choice[static_cast<std::size_t>(uinv(j) - 1)]].phi);
            const IntervalMorphism permuted = n == 0 ? IntervalMorphism::identity(0) : join(parts);
            const TotalMorphism<Permutation> rhs{compose(outer.phi, g.action(permuted, outer.x)),
                                                 compose(g.restrict(permuted, outer.x), gamma_sym(u, xs))};
            if (!same(lhs, rhs)) {
              report.add("symmetry-formula", {n, p},
                         {"phi=" + outer.phi.to_string(), "x=" + outer.x.to_string(), "u=" + u.to_string()});
            }
          }
        }
      }
    };
    rec(rec, 0);
  }
  return report;
}

/// M(x) = (mu_n, x) satisfies M(x) o (M(x_1) * .. * M(x_n)) == M(gamma(x; x_1..x_n)).
inline Report check_M_sym(int bound) {
  Report report("M-sym", bound);
  ScopedTimer timer(report);
  const auto& g = sym_crossed();
  auto M = [](const Permutation& x) {
    return TotalMorphism<Permutation>{mu_of({static_cast<int>(x.degree())}), x};
  };
  for (int n = 0; n <= bound; ++n) {
    detail::for_each_bounded_arity_vector(n, bound, [&](const std::vector<int>& ks) {
      std::vector<std::vector<Permutation>> pools_store;
      for (int k : ks) pools_store.push_back(all_permutations(static_cast<std::size_t>(k)));
      std::vector<const std::vector<Permutation>*> pools;
      for (const auto& s : pools_store) pools.push_back(&s);
      for (const auto& x : all_permutations(static_cast<std::size_t>(n))) {
        detail::for_each_tuple<Permutation>(pools, [&](const std::vector<Permutation>& xs) {
          ++report.checked;
          TotalMorphism<Permutation> joined{IntervalMorphism::identity(0), Permutation::identity(0)};
          for (const auto& xi : xs) joined = total_join(joined, M(xi));
          const auto lhs = total_compose(g, M(x), joined);
          const auto rhs = M(gamma_sym(x, xs));
          if (!(lhs.phi == rhs.phi && lhs.x == rhs.x)) {
            report.add("M-composition", {n}, {"x=" + x.to_string(), "xs=" + detail::describe_all(sym_operad(), xs)});
          }
        });
      }
    });
  }
  return report;
}

/// A morphism m -> n of the paracyclic category: f(0..m), extended by f(i+m+1) = f(i)+n+1.
class ParacyclicMorphism {
 public:
  ParacyclicMorphism(int m, int n, std::vector<long long> values) : m_(m), n_(n), values_(std::move(values)) {
    if (m < 0 || n < 0) throw std::invalid_argument("paracyclic: negative object");
    if (values_.size() != static_cast<std::size_t>(m) + 1) throw std::invalid_argument("paracyclic: need m+1 values");
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] < values_[i - 1]) throw std::invalid_argument("paracyclic: values must be nondecreasing");
    }
    if (values_.back() > values_.front() + n + 1) throw std::invalid_argument("paracyclic: f(m) > f(0)+n+1");
  }

  static ParacyclicMorphism identity(int n) {
    std::vector<long long> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
    return {n, n, std::move(v)};
  }
  /// tau_n: i -> i + 1.
  static ParacyclicMorphism tau(int n) {
    std::vector<long long> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return {n, n, std::move(v)};
  }
  /// The image of an order-preserving map [m] -> [n].
  static ParacyclicMorphism from_simplicial(const std::vector<int>& phi, int n) {
    if (phi.empty()) throw std::invalid_argument("paracyclic: empty simplicial map");
    std::vector<long long> v(phi.begin(), phi.end());
    for (auto x : v) {
      if (x < 0 || x > n) throw std::invalid_argument("paracyclic: simplicial value out of range");
    }
    return {static_cast<int>(phi.size()) - 1, n, std::move(v)};
  }

  int domain() const { return m_; }
  int codomain() const { return n_; }
  const std::vector<long long>& values() const { return values_; }

  long long operator()(long long i) const {
    const long long period = m_ + 1;
    long long q = i / period, r = i % period;
    if (r < 0) {
      r += period;
      --q;
    }
    return values_[static_cast<std::size_t>(r)] + q * (n_ + 1);
  }

  friend bool operator==(const ParacyclicMorphism&, const ParacyclicMorphism&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "L(" << m_ << "->" << n_ << ")[";
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
    os << "]";
    return os.str();
  }

 private:
  int m_, n_;
  std::vector<long long> values_;
};

/// f o g for g: l -> m and f: m -> n.
inline ParacyclicMorphism paracyclic_compose(const ParacyclicMorphism& f, const ParacyclicMorphism& g) {
  if (g.codomain() != f.domain()) throw std::invalid_argument("paracyclic_compose: mismatch");
  std::vector<long long> v;
  for (int i = 0; i <= g.domain(); ++i) v.push_back(f(g(i)));
  return {g.domain(), f.codomain(), std::move(v)};
}

/// The dual n -> m of f: m -> n, j -> min{i | j <= f(i)}.
inline ParacyclicMorphism paracyclic_dual(const ParacyclicMorphism& f) {
  const long long m1 = f.domain() + 1, n1 = f.codomain() + 1;
  auto floor_div = [](long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  std::vector<long long> v;
  for (long long j = 0; j < n1; ++j) {
    // f(q m1) = f(0) + q n1 >= j for q = ceil((j - f(0)) / n1); f((q-1) m1) < j.
    const long long q = -floor_div(f(0) - j, n1);
    long long i = (q - 1) * m1 + 1;
    while (f(i) < j) ++i;
    v.push_back(i);
  }
  return {f.codomain(), f.domain(), std::move(v)};
}

/// Morphisms m -> n with f(0) in [-(n+1), n].
inline std::vector<ParacyclicMorphism> paracyclic_enumerate(int m, int n) {
  std::vector<ParacyclicMorphism> out;
  std::vector<long long> v(static_cast<std::size_t>(m) + 1);
  for (long long a = -(n + 1); a <= n; ++a) {
    v[0] = a;
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == v.size()) {
        out.emplace_back(m, n, v);
        return;
      }
      for (long long x = v[i - 1]; x <= a + n + 1; ++x) {
        v[i] = x;
        self(self, i + 1);
      }
    };
    rec(rec, 1);
  }
  return out;
}

/// The rotation i -> i + power (mod n_points) of S_{n_points}.
inline Permutation cyclic_rotation(std::size_t n_points, long long power) {
  std::vector<int> images(n_points);
  const long long np = static_cast<long long>(n_points);
  for (long long i = 0; i < np; ++i) images[static_cast<std::size_t>(i)] = static_cast<int>((((i + power) % np) + np) % np + 1);
  return Permutation(std::move(images));
}

/// The dual of phi: [m] -> [n] as a total morphism <n+1> -> <m+1>: block widths
/// (phi(0)+n+1-phi(m), phi(1)-phi(0), ..., phi(m)-phi(m-1)) after tau^{n-phi(m)}.
struct DualPair {
  int n = 0;  // source simplicial degree
  int m = 0;  // target simplicial degree
  std::vector<int> widths;
  int tau_power = 0;

  /// The morphism in the total category, with tau realized as the cyclic rotation.
  TotalMorphism<Permutation> as_total() const {
    return {mu_of(widths), cyclic_rotation(static_cast<std::size_t>(n) + 1, tau_power)};
  }

  /// Block index of each point 0..n.
  std::vector<int> fibers() const {
    std::vector<int> block_of_position;
    for (std::size_t b = 0; b < widths.size(); ++b) {
      for (int t = 0; t < widths[b]; ++t) block_of_position.push_back(static_cast<int>(b));
    }
    std::vector<int> out(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(j)] = block_of_position[static_cast<std::size_t>((j + tau_power) % (n + 1))];
    return out;
  }

  friend bool operator==(const DualPair&, const DualPair&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < widths.size(); ++i) s += (i ? "*" : "") + ("mu" + std::to_string(widths[i]));
    return s + ", tau_" + std::to_string(n) + "^" + std::to_string(tau_power) + ")";
  }
};

inline DualPair simplicial_dual_pair(const std::vector<int>& phi, int n) {
  if (phi.empty()) throw std::invalid_argument("simplicial_dual_pair: empty map");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 0 || phi[i] > n || (i > 0 && phi[i] < phi[i - 1])) {
      throw std::invalid_argument("simplicial_dual_pair: not an order-preserving map into [n]");
    }
  }
  DualPair p;
  p.n = n;
  p.m = static_cast<int>(phi.size()) - 1;
  p.widths.push_back(phi.front() + n + 1 - phi.back());
  for (std::size_t i = 1; i < phi.size(); ++i) p.widths.push_back(phi[i] - phi[i - 1]);
  p.tau_power = n - phi.back();
  return p;
}

/// The pair's fibers agree with j -> dual(phi)(j) mod (m+1) on 0..n.
inline bool dual_pair_matches_dual(const std::vector<int>& phi, int n) {
  const DualPair p = simplicial_dual_pair(phi, n);
  const ParacyclicMorphism d = paracyclic_dual(ParacyclicMorphism::from_simplicial(phi, n));
  const long long m1 = p.m + 1;
  const auto fib = p.fibers();
  for (int j = 0; j <= n; ++j) {
    if (((d(j) % m1) + m1) % m1 != fib[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

/// Nondecreasing maps [m] -> [n].
inline std::vector<std::vector<int>> simplicial_maps(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1);
  auto rec = [&](auto& self, std::size_t i, int lo) -> void {
    if (i == v.size()) {
      out.push_back(v);
      return;
    }
    for (int x = lo; x <= n; ++x) {
      v[i] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Dimensions C_0..C_N and boundaries d_n: C_n -> C_{n-1} for n = 1..N. When
/// top_truncated, C_N only serves to compute the homology below it.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> boundaries;  // boundaries[n-1] is d_n
  bool top_truncated = false;

  const RationalMatrix& boundary(int n) const { return boundaries.at(static_cast<std::size_t>(n - 1)); }
};

inline Report check_complex(const ChainComplex& c) {
  Report report("chain-complex", static_cast<int>(c.dims.size()) - 1);
  for (std::size_t n = 1; n <= c.boundaries.size(); ++n) {
    ++report.checked;
    const auto& b = c.boundaries[n - 1];
    if (b.rows() != c.dims[n - 1] || b.cols() != c.dims[n]) report.add("boundary-shape", {static_cast<int>(n)}, {});
  }
  for (std::size_t n = 2; n <= c.boundaries.size(); ++n) {
    ++report.checked;
    if (!(c.boundaries[n - 2] * c.boundaries[n - 1]).is_zero()) {
      report.add("boundary-squared", {static_cast<int>(n)}, {});
    }
  }
  return report;
}

/// d_i: C_n -> C_{n-1} as the functor value on the dual of the i-th coface [n-1] -> [n].
inline RationalMatrix hochschild_face(const Algebra& a, int n, int i) {
  std::vector<int> coface;
  for (int j = 0; j < n; ++j) coface.push_back(j < i ? j : j + 1);
  return monoidal_functor_value(a, simplicial_dual_pair(coface, n).as_total());
}

inline ChainComplex hochschild_complex(const Algebra& a, int top) {
  if (top < 0) throw std::invalid_argument("hochschild_complex: negative degree");
  ChainComplex c;
  c.top_truncated = true;
  for (int n = 0; n <= top; ++n) c.dims.push_back(detail::ipow(a.dim(), static_cast<std::size_t>(n) + 1));
  for (int n = 1; n <= top; ++n) {
    RationalMatrix b(c.dims[static_cast<std::size_t>(n - 1)], c.dims[static_cast<std::size_t>(n)]);
    for (int i = 0; i <= n; ++i) b = b + hochschild_face(a, n, i).scaled(i % 2 == 0 ? 1 : -1);
    c.boundaries.push_back(std::move(b));
  }
  return c;
}

/// b(a_0..a_n) = sum_{i<n} (-1)^i a_0..a_i a_{i+1}..a_n + (-1)^n a_n a_0 (x) a_1..a_{n-1}.
inline RationalMatrix classical_hochschild_boundary(const Algebra& a, int n) {
  if (n < 1) throw std::invalid_argument("classical_hochschild_boundary: n must be at least 1");
  const std::size_t d = a.dim();
  const auto un = static_cast<std::size_t>(n);
  RationalMatrix b(detail::ipow(d, un), detail::ipow(d, un + 1));
  for (std::size_t col = 0; col < b.cols(); ++col) {
    const auto digits = detail::tensor_digits(col, d, un + 1);
    for (std::size_t i = 0; i <= un; ++i) {
      const Rational sign = (i % 2 == 0) ? 1 : -1;
      std::vector<std::size_t> rest;
      std::size_t first = 0, second = 0, slot = 0;
      if (i < un) {
        first = digits[i];
        second = digits[i + 1];
        slot = i;
        for (std::size_t t = 0; t <= un; ++t) {
          if (t != i && t != i + 1) rest.push_back(t);
        }
      } else {
        first = digits[un];
        second = digits[0];
        slot = 0;
        for (std::size_t t = 1; t < un; ++t) rest.push_back(t);
      }
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& ck = a.c(first, second, k);
        if (ck == 0) continue;
        std::vector<std::size_t> out;
        std::size_t r = 0;
        for (std::size_t pos = 0; pos < un; ++pos) {
          if (pos == slot) {
            out.push_back(k);
          } else {
            out.push_back(digits[rest[r++]]);
          }
        }
        b.add(detail::tensor_index(out, d), col, sign * ck);
      }
    }
  }
  return b;
}

inline ChainComplex classical_hochschild_complex(const Algebra& a, int top) {
  ChainComplex c;
  c.top_truncated = true;
  for (int n = 0; n <= top; ++n) c.dims.push_back(detail::ipow(a.dim(), static_cast<std::size_t>(n) + 1));
  for (int n = 1; n <= top; ++n) c.boundaries.push_back(classical_hochschild_boundary(a, n));
  return c;
}

/// dim H_n = dim C_n - rank d_n - rank d_{n+1}; the top degree is omitted when truncated.
inline std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  if (!check_complex(c).passed()) throw std::invalid_argument("homology_dims: not a chain complex");
  std::vector<std::size_t> ranks(c.dims.size() + 1, 0);  // ranks[n] = rank d_n
  for (std::size_t n = 1; n <= c.boundaries.size(); ++n) ranks[n] = c.boundaries[n - 1].rank();
  const std::size_t top = c.top_truncated ? c.dims.size() - 1 : c.dims.size();
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < top; ++n) out.push_back(c.dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

}  // namespace crossed
