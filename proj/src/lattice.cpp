#include "lequiv/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

#include "lequiv/json_util.hpp"

namespace lequiv::lattice {

namespace {

Integer integer_sqrt_exact(Integer const& n, bool& exact) {
  if (n < 0) {
    exact = false;
    return 0;
  }
  Integer r = boost::multiprecision::sqrt(n);
  exact = r * r == n;
  return r;
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (auto const& x : v) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive part");
  for (auto& x : v) x /= g;
  for (auto const& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

// Canonical completion data for one isotropic line.
struct IsotropicFrame {
  std::vector<Integer> e;
  std::vector<Integer> f;  // e·f = t
  Integer residue;
};

std::vector<IsotropicFrame> isotropic_frames(GramMatrix const& g) {
  Integer const t = isotropic_modulus(g);
  std::vector<IsotropicFrame> frames;
  for (auto const& e : isotropic_lines(g)) {
    IntMatrix const basis = complete_to_unimodular(e);
    std::vector<Integer> f = basis.column_vector(1);
    Integer ef = g.pairing(e, f);
    if (abs(ef) != t) throw std::logic_error("isotropic completion has e·f != ±t");
    if (ef < 0) {
      for (auto& x : f) x = -x;
    }
    Integer const f2 = g.pairing(f, f);
    frames.push_back({e, f, mod_floor(f2 / 2, t)});
  }
  return frames;
}

}  // namespace

GramMatrix::GramMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw std::invalid_argument("Gram matrix must be square");
  if (rank() != 2 && rank() != 4) {
    throw std::invalid_argument("Gram matrix must have rank 2 or 4");
  }
  if (!entries_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  for (int i = 0; i < rank(); ++i) {
    if (entries_(i, i) % 2 != 0) throw std::invalid_argument("lattice is not even");
  }
  if (entries_.determinant() == 0) throw std::invalid_argument("lattice is degenerate");
}

Integer GramMatrix::pairing(std::vector<Integer> const& x,
                            std::vector<Integer> const& y) const {
  Integer s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x[i] * entries_(i, j) * y[j];
  return s;
}

Rational reduce_mod(Rational const& r, Integer const& m) {
  // r - m·floor(r/m)
  Integer const num = numerator(r);
  Integer const den = denominator(r);
  Integer const scaled = m * den;
  Integer rem = num % scaled;
  if (rem < 0) rem += scaled;
  return Rational(rem, den);
}

Integer FiniteQuadraticForm::order() const {
  Integer n = 1;
  for (auto const& f : factors) n *= f;
  return n;
}

Rational FiniteQuadraticForm::q(std::vector<Integer> const& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    s += Rational(x[i] * x[i]) * values[i][i];
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      s += Rational(2 * x[i] * x[j]) * values[i][j];
    }
  }
  return reduce_mod(s, 2);
}

Rational FiniteQuadraticForm::b(std::vector<Integer> const& x,
                                std::vector<Integer> const& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) {
      // b(g_i, g_i) = q(g_i)/2 mod 1.
      Rational const bij = i == j ? values[i][i] / 2 : values[i][j];
      s += Rational(x[i] * y[j]) * bij;
    }
  return reduce_mod(s, 1);
}

GramMatrix lambda_gram(Integer const& t, Integer const& d) {
  if (t <= 0) throw std::invalid_argument("Lambda_{t,d} needs t > 0");
  IntMatrix m(2, 2);
  m(0, 0) = 2 * d;
  m(0, 1) = t;
  m(1, 0) = t;
  return GramMatrix(std::move(m));
}

GramMatrix hyperbolic_plane() { return lambda_gram(1, 0); }

GramMatrix direct_sum(GramMatrix const& a, GramMatrix const& b) {
  return GramMatrix(lequiv::direct_sum(a.entries(), b.entries()));
}

Signature signature(GramMatrix const& g) {
  int const n = g.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(g.entries()(i, j));

  Signature s;
  // Symmetric Gaussian elimination (congruence transforms).
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][i] != 0) {
          swap_with = i;
          break;
        }
      if (swap_with >= 0) {
        std::swap(a[k], a[swap_with]);
        for (auto& row : a) std::swap(row[k], row[swap_with]);
      } else {
        int partner = -1;
        for (int j = k + 1; j < n; ++j)
          if (a[k][j] != 0) {
            partner = j;
            break;
          }
        if (partner < 0) throw std::invalid_argument("lattice is degenerate");
        // x_k += x_partner gives a[k][k] = 2·a[k][partner] != 0.
        for (int j = 0; j < n; ++j) a[k][j] += a[partner][j];
        for (int i = 0; i < n; ++i) a[i][k] += a[i][partner];
      }
    }
    Rational const pivot = a[k][k];
    (pivot > 0 ? s.positive : s.negative) += 1;
    for (int i = k + 1; i < n; ++i) {
      Rational const factor = a[i][k] / pivot;
      if (factor == 0) continue;
      for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
      for (int j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return s;
}

FiniteQuadraticForm discriminant_form(GramMatrix const& g) {
  if (g.determinant() == 0) throw std::invalid_argument("lattice is degenerate");
  int const n = g.rank();
  SmithForm const snf = smith_normal_form(g.entries());
  // The dual lattice is V·diag(1/d_i)·Z^n, so V e_i / d_i generate L*/L.
  FiniteQuadraticForm form;
  std::vector<std::vector<Integer>> columns;
  for (int i = 0; i < n; ++i) {
    Integer const di = snf.d(i, i);
    if (di == 1) continue;
    form.factors.push_back(di);
    columns.push_back(snf.v.column_vector(i));
    std::vector<Rational> generator;
    for (auto const& x : columns.back()) generator.emplace_back(x, di);
    form.generators.push_back(std::move(generator));
  }
  std::size_t const r = form.factors.size();
  form.values.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational const pairing(g.pairing(columns[i], columns[j]),
                             form.factors[i] * form.factors[j]);
      form.values[i][j] = i == j ? reduce_mod(pairing, 2) : reduce_mod(pairing, 1);
    }
  return form;
}

namespace {

using Element = std::vector<Integer>;

std::vector<Element> all_elements(std::vector<Integer> const& factors) {
  std::vector<Element> elements{Element(factors.size(), 0)};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Element> next;
    for (auto const& e : elements)
      for (Integer c = 0; c < factors[i]; ++c) {
        Element x = e;
        x[i] = c;
        next.push_back(std::move(x));
      }
    elements = std::move(next);
  }
  return elements;
}

Element reduce(Element x, std::vector<Integer> const& factors) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], factors[i]);
  return x;
}

Integer element_order(Element const& x, std::vector<Integer> const& factors) {
  Integer order = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer const oi = factors[i] / gcd(x[i], factors[i]);
    order = lcm(order, oi);
  }
  return order;
}

std::size_t generated_size(std::vector<Element> const& gens,
                           std::vector<Integer> const& factors) {
  std::set<Element> seen{Element(factors.size(), 0)};
  std::vector<Element> frontier{Element(factors.size(), 0)};
  while (!frontier.empty()) {
    Element const x = frontier.back();
    frontier.pop_back();
    for (auto const& gen : gens) {
      Element y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += gen[i];
      y = reduce(std::move(y), factors);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen.size();
}

}  // namespace

bool is_isomorphic(FiniteQuadraticForm const& a, FiniteQuadraticForm const& b) {
  if (a.order() != b.order()) return false;
  // Invariant factors are canonical, so the groups agree iff these do.
  if (a.factors != b.factors) return false;
  if (a.factors.empty()) return true;
  if (b.order() > 1'000'000) {
    throw std::length_error("discriminant group too large for exhaustive matching");
  }

  std::vector<Element> const elements = all_elements(b.factors);
  std::size_t const r = a.factors.size();
  std::vector<Element> unit(r, Element(r, 0));
  for (std::size_t i = 0; i < r; ++i) unit[i][i] = 1;

  std::vector<Element> images;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == r) {
      return generated_size(images, b.factors) == static_cast<std::size_t>(b.order());
    }
    Rational const target_q = a.q(unit[i]);
    for (auto const& h : elements) {
      if (element_order(h, b.factors) != a.factors[i]) continue;
      if (b.q(h) != target_q) continue;
      bool pairings_match = true;
      for (std::size_t j = 0; j < i && pairings_match; ++j) {
        pairings_match = b.b(h, images[j]) == a.b(unit[i], unit[j]);
      }
      if (!pairings_match) continue;
      images.push_back(h);
      if (self(self, i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

Integer isotropic_modulus(GramMatrix const& g) {
  if (g.rank() != 2) throw std::invalid_argument("expected a rank-2 lattice");
  bool exact = false;
  Integer const t = integer_sqrt_exact(-g.determinant(), exact);
  if (!exact || t == 0) {
    throw std::domain_error("determinant is not of the form -t^2; no isotropic vector");
  }
  return t;
}

std::vector<std::vector<Integer>> isotropic_lines(GramMatrix const& g) {
  Integer const t = isotropic_modulus(g);
  IntMatrix const& m = g.entries();
  Integer const a = m(0, 0);
  Integer const b = m(0, 1);
  Integer const c = m(1, 1);
  // a x^2 + 2b xy + c y^2 = 0 with b^2 - ac = t^2.
  std::vector<std::vector<Integer>> lines;
  if (a == 0) {
    lines.push_back(primitive({1, 0}));
    lines.push_back(primitive({c, -2 * b}));
  } else {
    lines.push_back(primitive({-b + t, a}));
    lines.push_back(primitive({-b - t, a}));
  }
  for (auto const& e : lines) {
    if (g.pairing(e, e) != 0) throw std::logic_error("isotropic solver produced a non-isotropic vector");
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::vector<Integer> canonical_residues(GramMatrix const& g) {
  std::vector<Integer> residues;
  for (auto const& frame : isotropic_frames(g)) residues.push_back(frame.residue);
  std::sort(residues.begin(), residues.end());
  return residues;
}

bool is_isomorphic(GramMatrix const& g1, GramMatrix const& g2) {
  if (g1.rank() != 2 || g2.rank() != 2) {
    throw std::invalid_argument("isomorphism test is implemented for rank 2");
  }
  if (g1.determinant() != g2.determinant()) return false;
  if (!(signature(g1) == signature(g2))) return false;
  return canonical_residues(g1) == canonical_residues(g2);
}

std::optional<IntMatrix> find_isomorphism(GramMatrix const& g1,
                                          GramMatrix const& g2) {
  if (!is_isomorphic(g1, g2)) return std::nullopt;
  Integer const t = isotropic_modulus(g1);
  auto const frames1 = isotropic_frames(g1);
  auto const frames2 = isotropic_frames(g2);
  for (auto const& a : frames1)
    for (auto const& b : frames2) {
      if (a.residue != b.residue) continue;
      // Shift f1 by a multiple of e1 so that f1^2 = f2^2 exactly.
      Integer const gap = g2.pairing(b.f, b.f) - g1.pairing(a.f, a.f);
      Integer const shift = gap / (2 * t);
      std::vector<Integer> f1 = a.f;
      for (int i = 0; i < 2; ++i) f1[i] += shift * a.e[i];
      IntMatrix const p1 = IntMatrix::from_columns({a.e, f1});
      IntMatrix const p2 = IntMatrix::from_columns({b.e, b.f});
      IntMatrix const m = p2 * unimodular_inverse(p1);
      if (m.transpose() * g2.entries() * m == g1.entries()) return m;
    }
  throw std::logic_error("residues agree but no isomorphism was assembled");
}

bool is_isometry(IntMatrix const& m, GramMatrix const& g) {
  if (m.rows() != g.rank() || m.cols() != g.rank()) return false;
  return m.transpose() * g.entries() * m == g.entries();
}

std::vector<IntMatrix> isometry_group(GramMatrix const& g) {
  auto const lines = isotropic_lines(g);
  IntMatrix const frame = IntMatrix::from_columns({lines[0], lines[1]});
  std::vector<IntMatrix> group;
  for (int swap = 0; swap < 2; ++swap)
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        std::vector<Integer> image0 = lines[swap ? 1 : 0];
        std::vector<Integer> image1 = lines[swap ? 0 : 1];
        for (auto& x : image0) x *= s1;
        for (auto& x : image1) x *= s2;
        IntMatrix const images = IntMatrix::from_columns({image0, image1});
        // M·frame = images  <=>  frame^T·M^T = images^T
        auto mt = integral_solve(frame.transpose(), images.transpose());
        if (!mt) continue;
        IntMatrix const m = mt->transpose();
        if (is_isometry(m, g)) group.push_back(m);
      }
  return group;
}

bool same_genus(GramMatrix const& g1, GramMatrix const& g2) {
  if (g1.rank() != g2.rank()) return false;
  if (!(signature(g1) == signature(g2))) return false;
  return is_isomorphic(discriminant_form(g1), discriminant_form(g2));
}

bool classification_validated(Integer const& t) {
  if (t < 3 || t % 2 == 0) return false;
  for (Integer p = 3; p * p <= t; p += 2)
    if (t % p == 0) return false;
  return true;
}

nlohmann::json to_json(GramMatrix const& g) { return lequiv::to_json(g.entries()); }

nlohmann::json to_json(FiniteQuadraticForm const& f) {
  auto factors = nlohmann::json::array();
  for (auto const& x : f.factors) factors.push_back(integer_to_json(x));
  auto q = nlohmann::json::array();
  for (auto const& row : f.values) {
    auto r = nlohmann::json::array();
    for (auto const& v : row) r.push_back(rational_to_string(v));
    q.push_back(std::move(r));
  }
  return {{"factors", factors}, {"q", q}};
}

FiniteQuadraticForm finite_form_from_json(nlohmann::json const& j) {
  FiniteQuadraticForm f;
  for (auto const& x : j.at("factors")) f.factors.push_back(integer_from_json(x));
  for (auto const& row : j.at("q")) {
    std::vector<Rational> r;
    for (auto const& v : row) r.push_back(rational_from_string(v.get<std::string>()));
    f.values.push_back(std::move(r));
  }
  if (f.values.size() != f.factors.size()) {
    throw std::invalid_argument("q matrix does not match the number of factors");
  }
  return f;
}

}  // namespace lequiv::lattice
