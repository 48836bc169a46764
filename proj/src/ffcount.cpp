#include "lequiv/ffcount.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>

namespace lequiv::ffcount {

namespace {

constexpr int kV = 5;       // dim V
constexpr int kPairs = 10;  // dim Λ^2 V
constexpr std::size_t kMaxWitnesses = 8;

using Plucker = std::array<Elem, kPairs>;

// Plücker coordinates p_ij = u_i w_j - u_j w_i, i < j, of a 2 x 5 basis.
Plucker plucker(std::span<Elem const> rows, FiniteField const& f) {
  Plucker p{};
  int idx = 0;
  for (int i = 0; i < kV; ++i)
    for (int j = i + 1; j < kV; ++j) {
      p[idx++] = f.sub(f.mul(rows[i], rows[kV + j]), f.mul(rows[j], rows[kV + i]));
    }
  return p;
}

Plucker upper_entries(TwoForm const& theta) {
  Plucker c{};
  int idx = 0;
  for (int i = 0; i < kV; ++i)
    for (int j = i + 1; j < kV; ++j) c[idx++] = theta.upper(i, j);
  return c;
}

Elem dot(Plucker const& a, Plucker const& b, FiniteField const& f) {
  Elem s = 0;
  for (int i = 0; i < kPairs; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Integer power(int base, int exponent) {
  Integer r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

Integer gaussian_binomial(int k, int n, int q) {
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= power(q, n - i) - 1;
    den *= power(q, i + 1) - 1;
  }
  return num / den;
}

// Normalised coefficient vectors of the projective space P(F^r): first
// nonzero coordinate equal to one.
void for_each_projective_point(FiniteField const& f, int r,
                               std::function<void(std::span<Elem const>)> const& visit) {
  std::vector<Elem> coeffs(r);
  for (int lead = 0; lead < r; ++lead) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[lead] = 1;
    int const free = r - lead - 1;
    // Odometer on coordinates lead+1 .. r-1.
    while (true) {
      visit(coeffs);
      int pos = r - 1;
      while (pos > lead && coeffs[pos] == f.order() - 1) {
        coeffs[pos] = 0;
        --pos;
      }
      if (pos == lead || free == 0) break;
      ++coeffs[pos];
    }
  }
}

FieldMatrix apply(TwoForm const& theta, std::span<Elem const> v, FiniteField const& f) {
  FieldMatrix out(kV, 1);
  for (int i = 0; i < kV; ++i) {
    Elem s = 0;
    for (int j = 0; j < kV; ++j) s = f.add(s, f.mul(theta.matrix()(i, j), v[j]));
    out(i, 0) = s;
  }
  return out;
}

FieldMatrix rows_matrix(std::span<Elem const> rows, int k, int n) {
  FieldMatrix m(k, n);
  std::copy(rows.begin(), rows.end(), m.data.begin());
  return m;
}

void require_five_space(TwoForm const& theta) {
  if (theta.dimension() != kV) throw std::invalid_argument("expected a 2-form on a 5-space");
}

}  // namespace

Subspace::Subspace(FieldMatrix spanning_rows, FiniteField const& f) {
  auto const pivots = reduce_rows(spanning_rows, f);
  basis_ = FieldMatrix(static_cast<int>(pivots.size()), spanning_rows.cols);
  std::copy_n(spanning_rows.data.begin(), basis_.data.size(), basis_.data.begin());
}

TwoForm::TwoForm(FieldMatrix matrix, FiniteField const& f) : matrix_(std::move(matrix)) {
  if (matrix_.rows != matrix_.cols) throw std::invalid_argument("2-form matrix must be square");
  for (int i = 0; i < matrix_.rows; ++i) {
    if (matrix_(i, i) != 0) throw std::invalid_argument("2-form must have zero diagonal");
    for (int j = i + 1; j < matrix_.cols; ++j) {
      if (matrix_(j, i) != f.neg(matrix_(i, j))) {
        throw std::invalid_argument("2-form must be skew-symmetric");
      }
    }
  }
}

TwoForm TwoForm::wedge(int i, int j, int n, FiniteField const& f) {
  FieldMatrix m(n, n);
  m(i, j) = 1;
  m(j, i) = f.neg(1);
  return TwoForm(std::move(m), f);
}

bool TwoForm::is_zero() const {
  return std::all_of(matrix_.data.begin(), matrix_.data.end(), [](Elem e) { return e == 0; });
}

Elem TwoForm::evaluate(std::span<Elem const> u, std::span<Elem const> w,
                       FiniteField const& f) const {
  Elem s = 0;
  for (int i = 0; i < matrix_.rows; ++i) {
    if (u[i] == 0) continue;
    Elem row = 0;
    for (int j = 0; j < matrix_.cols; ++j) row = f.add(row, f.mul(matrix_(i, j), w[j]));
    s = f.add(s, f.mul(u[i], row));
  }
  return s;
}

TwoForm add(TwoForm const& a, TwoForm const& b, FiniteField const& f) {
  FieldMatrix m = a.matrix();
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] = f.add(m.data[i], b.matrix().data[i]);
  return TwoForm(std::move(m), f);
}

TwoForm scale(TwoForm const& a, Elem c, FiniteField const& f) {
  FieldMatrix m = a.matrix();
  for (auto& e : m.data) e = f.mul(e, c);
  return TwoForm(std::move(m), f);
}

TwoForm combine(std::span<TwoForm const> forms, std::span<Elem const> coeffs,
                FiniteField const& f) {
  if (forms.empty()) throw std::invalid_argument("empty linear combination");
  FieldMatrix m(forms[0].dimension(), forms[0].dimension());
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < m.data.size(); ++i) {
      m.data[i] = f.add(m.data[i], f.mul(coeffs[k], forms[k].matrix().data[i]));
    }
  }
  return TwoForm(std::move(m), f);
}

std::vector<std::vector<int>> pivot_patterns(int k, int n) {
  std::vector<std::vector<int>> patterns;
  std::vector<int> current;
  auto walk = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      patterns.push_back(current);
      return;
    }
    for (int c = start; c < n; ++c) {
      current.push_back(c);
      self(self, c + 1);
      current.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(patterns.begin(), patterns.end(), [](auto const& a, auto const& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return patterns;
}

void for_each_subspace(FiniteField const& f, int n, std::vector<int> const& pivots,
                       std::function<void(std::span<Elem const>)> const& visit) {
  int const k = static_cast<int>(pivots.size());
  std::vector<Elem> rows(static_cast<std::size_t>(k) * n, 0);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_slots;
  for (int r = 0; r < k; ++r) {
    rows[r * n + pivots[r]] = 1;
    for (int c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_slots.push_back(static_cast<std::size_t>(r) * n + c);
  }
  Elem const top = static_cast<Elem>(f.order() - 1);
  while (true) {
    visit(rows);
    std::size_t i = 0;
    while (i < free_slots.size() && rows[free_slots[i]] == top) {
      rows[free_slots[i]] = 0;
      ++i;
    }
    if (i == free_slots.size()) return;
    ++rows[free_slots[i]];
  }
}

void for_each_subspace(FiniteField const& f, int k, int n,
                       std::function<void(std::span<Elem const>)> const& visit) {
  check_enumeration_size(f, k, n);
  for (auto const& pivots : pivot_patterns(k, n)) for_each_subspace(f, n, pivots, visit);
}

void check_enumeration_size(FiniteField const& f, int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("Gr(k,n) needs 0 <= k <= n");
  if (f.order() > 16) throw std::length_error("Grassmannian enumeration limited to fields of order <= 16");
  if (n > 8) throw std::length_error("Grassmannian enumeration limited to n <= 8");
  if (gaussian_binomial(k, n, f.order()) > (Integer(1) << 25)) {
    throw std::length_error("Grassmannian has more than 2^25 points");
  }
}

std::uint64_t count_subspaces(FiniteField const& f, int k, int n,
                              std::function<bool(std::span<Elem const>)> const& predicate,
                              int workers) {
  check_enumeration_size(f, k, n);
  auto const patterns = pivot_patterns(k, n);
  auto count_share = [&](int worker, int stride) {
    std::uint64_t count = 0;
    for (std::size_t i = worker; i < patterns.size(); i += stride) {
      for_each_subspace(f, n, patterns[i], [&](std::span<Elem const> rows) {
        if (predicate(rows)) ++count;
      });
    }
    return count;
  };
  if (workers <= 1) return count_share(0, 1);
  std::vector<std::future<std::uint64_t>> shares;
  for (int w = 0; w < workers; ++w) {
    shares.push_back(std::async(std::launch::async, count_share, w, workers));
  }
  std::uint64_t total = 0;
  for (auto& s : shares) total += s.get();
  return total;
}

Integer count_grassmannian(int k, int n, FiniteField const& f, int workers) {
  return count_subspaces(f, k, n, [](std::span<Elem const>) { return true; }, workers);
}

Subspace form_kernel(TwoForm const& theta, FiniteField const& f) {
  return Subspace(nullspace(theta.matrix(), f), f);
}

Integer count_hyperplane_section(TwoForm const& theta, FiniteField const& f, int workers) {
  require_five_space(theta);
  if (theta.is_zero()) throw std::invalid_argument("hyperplane section needs a nonzero form");
  Plucker const coeffs = upper_entries(theta);
  return count_subspaces(
      f, 2, kV,
      [&](std::span<Elem const> rows) { return dot(coeffs, plucker(rows, f), f) == 0; },
      workers);
}

FormSpace::FormSpace(std::vector<TwoForm> forms, FiniteField const& prime_field)
    : forms_(std::move(forms)), p_(prime_field.characteristic()) {
  if (prime_field.degree() != 1) throw std::invalid_argument("form spaces are defined over the prime field");
  if (forms_.size() != 5) throw std::invalid_argument("A must be spanned by five 2-forms");
  FieldMatrix coords(5, kPairs);
  for (int i = 0; i < 5; ++i) {
    require_five_space(forms_[i]);
    auto const c = upper_entries(forms_[i]);
    for (int j = 0; j < kPairs; ++j) {
      if (c[j] >= p_) throw std::invalid_argument("form entries must lie in the prime field");
      coords(i, j) = c[j];
    }
  }
  if (rank(coords, prime_field) != 5) throw std::invalid_argument("A is not five-dimensional");
}

FormSpace FormSpace::from_integers(
    std::vector<std::vector<std::vector<long long>>> const& mats, int p) {
  FiniteField const f(p, 1);
  std::vector<TwoForm> forms;
  for (auto const& mat : mats) {
    int const n = static_cast<int>(mat.size());
    FieldMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(mat[i].size()) != n) throw std::invalid_argument("form matrix must be square");
      for (int j = 0; j < n; ++j) m(i, j) = f.from_integer(mat[i][j]);
    }
    forms.emplace_back(std::move(m), f);
  }
  return FormSpace(std::move(forms), f);
}

FormSpace random_form_space(int p, std::uint64_t seed) {
  FiniteField const f(p, 1);
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<TwoForm> forms;
    FieldMatrix coords(5, kPairs);
    for (int i = 0; i < 5; ++i) {
      FieldMatrix m(kV, kV);
      int idx = 0;
      for (int r = 0; r < kV; ++r)
        for (int c = r + 1; c < kV; ++c) {
          Elem const e = static_cast<Elem>(rng() % static_cast<std::uint64_t>(p));
          m(r, c) = e;
          m(c, r) = f.neg(e);
          coords(i, idx++) = e;
        }
      forms.emplace_back(std::move(m), f);
    }
    if (rank(coords, f) == 5) return FormSpace(std::move(forms), f);
  }
}

std::vector<Subspace> primal_points(FormSpace const& a, FiniteField const& f) {
  if (f.characteristic() != a.characteristic()) throw std::invalid_argument("field characteristic mismatch");
  std::vector<Plucker> coeffs;
  for (auto const& theta : a.forms()) coeffs.push_back(upper_entries(theta));
  std::vector<Subspace> points;
  for_each_subspace(f, 2, kV, [&](std::span<Elem const> rows) {
    Plucker const p = plucker(rows, f);
    for (auto const& c : coeffs)
      if (dot(c, p, f) != 0) return;
    points.emplace_back(rows_matrix(rows, 2, kV), f);
  });
  return points;
}

std::vector<DualPoint> dual_points(FormSpace const& a, FiniteField const& f) {
  if (f.characteristic() != a.characteristic()) throw std::invalid_argument("field characteristic mismatch");
  std::vector<DualPoint> points;
  for_each_projective_point(f, 5, [&](std::span<Elem const> coeffs) {
    TwoForm theta = combine(a.forms(), coeffs, f);
    Subspace kernel = form_kernel(theta, f);
    if (kernel.dimension() == 3) {
      points.push_back({std::vector<Elem>(coeffs.begin(), coeffs.end()), std::move(theta),
                        std::move(kernel)});
    }
  });
  return points;
}

std::vector<Subspace> section_points(FormSpace const& a, FiniteField const& f, Side side) {
  if (side == Side::primal) return primal_points(a, f);
  std::vector<Subspace> planes;
  for (auto const& point : dual_points(a, f)) planes.emplace_back(point.form.matrix(), f);
  return planes;
}

bool SingularityReport::singular_found() const {
  return first_singular_degree().has_value();
}

std::optional<int> SingularityReport::first_singular_degree() const {
  for (auto const& level : levels)
    if (level.singular_points > 0) return level.degree;
  return std::nullopt;
}

SingularityReport detect_singular(FormSpace const& a, int max_ext) {
  if (max_ext < 1 || max_ext > 4) throw std::invalid_argument("max_ext must be in 1..4");
  SingularityReport report;
  report.p = a.characteristic();
  report.max_ext = max_ext;
  for (int m = 1; m <= max_ext; ++m) {
    FiniteField const f(a.characteristic(), m);
    ScreenLevel level;
    level.degree = m;
    level.field = f.describe();
    for (auto const& plane : primal_points(a, f)) {
      ++level.section_points;
      // theta_0 = sum a_j theta_j with theta_0·u = theta_0·w = 0.
      auto const rows = std::span<Elem const>(plane.basis().data);
      FieldMatrix conditions(2 * kV, 5);
      for (int j = 0; j < 5; ++j) {
        FieldMatrix const tu = apply(a.forms()[j], rows.subspan(0, kV), f);
        FieldMatrix const tw = apply(a.forms()[j], rows.subspan(kV, kV), f);
        for (int i = 0; i < kV; ++i) {
          conditions(i, j) = tu(i, 0);
          conditions(kV + i, j) = tw(i, 0);
        }
      }
      FieldMatrix const solutions = nullspace(conditions, f);
      if (solutions.rows == 0) continue;
      ++level.singular_points;
      if (level.witnesses.size() < kMaxWitnesses) {
        level.witnesses.push_back(
            {plane, std::vector<Elem>(solutions.data.begin(), solutions.data.begin() + 5)});
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

TorsorReport torsor_count_test(FormSpace const& a, FiniteField const& f) {
  TorsorReport report;
  report.screen = detect_singular(a, 2);
  report.reliable = !report.screen.singular_found();
  auto const xs = primal_points(a, f);
  auto const ys = dual_points(a, f);
  report.count_x = xs.size();
  report.count_y = ys.size();
  report.counts_equal = report.count_x == report.count_y;
  report.pairing_ok = true;
  for (auto const& x : xs)
    for (auto const& y : ys) {
      FieldMatrix stacked(5, kV);
      std::copy(x.basis().data.begin(), x.basis().data.end(), stacked.data.begin());
      std::copy(y.kernel.basis().data.begin(), y.kernel.basis().data.end(),
                stacked.data.begin() + 2 * kV);
      int const meet = 2 + 3 - rank(stacked, f);
      report.pairing_ok = report.pairing_ok && meet == 1;
      ++report.pairs_checked;
    }
  return report;
}

IncidenceCount count_universal_hyperplane(std::span<TwoForm const> s, FiniteField const& f) {
  IncidenceCount result{0, 0};
  if (s.empty()) return result;
  int const r = static_cast<int>(s.size());
  FieldMatrix coords(r, kPairs);
  std::vector<Plucker> basis;
  for (int i = 0; i < r; ++i) {
    require_five_space(s[i]);
    basis.push_back(upper_entries(s[i]));
    for (int j = 0; j < kPairs; ++j) coords(i, j) = basis.back()[j];
  }
  if (rank(coords, f) != r) throw std::invalid_argument("S must be spanned by independent forms");

  std::vector<Plucker> planes;
  for_each_subspace(f, 2, kV, [&](std::span<Elem const> rows) { planes.push_back(plucker(rows, f)); });

  // Sum over [theta] in S of the number of planes it kills.
  for_each_projective_point(f, r, [&](std::span<Elem const> c) {
    Plucker theta{};
    for (int i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < kPairs; ++j) theta[j] = f.add(theta[j], f.mul(c[i], basis[i][j]));
    }
    for (auto const& p : planes)
      if (dot(theta, p, f) == 0) ++result.formula_side;
  });

  // Over each plane U the fibre is a linear subspace of S cut out by a single
  // linear condition: all of S if every basis form kills U, a hyperplane of S
  // otherwise.
  Integer const q = f.order();
  auto projective_size = [&q](int dim) {
    Integer size = 0, term = 1;
    for (int i = 0; i <= dim; ++i, term *= q) size += term;
    return size;
  };
  Integer const whole = projective_size(r - 1);
  Integer const hyperplane = r >= 2 ? projective_size(r - 2) : Integer(0);
  for (auto const& p : planes) {
    bool killed_by_all = true;
    for (auto const& b : basis) killed_by_all = killed_by_all && dot(b, p, f) == 0;
    result.fibration_side += killed_by_all ? whole : hyperplane;
  }
  return result;
}

IncidenceCount count_universal_hyperplane(FiniteField const& f) {
  if (f.order() != 2 && f.order() != 3) {
    throw std::length_error("the full universal hyperplane count is limited to F_2 and F_3");
  }
  std::vector<TwoForm> basis;
  for (int i = 0; i < kV; ++i)
    for (int j = i + 1; j < kV; ++j) basis.push_back(TwoForm::wedge(i, j, kV, f));
  return count_universal_hyperplane(basis, f);
}

IncidenceCount count_universal_hyperplane(FormSpace const& a, FiniteField const& f) {
  if (f.characteristic() != a.characteristic()) throw std::invalid_argument("field characteristic mismatch");
  return count_universal_hyperplane(std::span<TwoForm const>(a.forms()), f);
}

TwoForm random_form_of_rank(int form_rank, FiniteField const& f, std::mt19937_64& rng) {
  auto draw = [&] { return static_cast<Elem>(rng() % static_cast<std::uint64_t>(f.order())); };
  if (form_rank == 2) {
    while (true) {
      std::array<Elem, kV> u{}, w{};
      for (auto& x : u) x = draw();
      for (auto& x : w) x = draw();
      FieldMatrix m(kV, kV);
      for (int i = 0; i < kV; ++i)
        for (int j = 0; j < kV; ++j) m(i, j) = f.sub(f.mul(u[i], w[j]), f.mul(u[j], w[i]));
      TwoForm theta(std::move(m), f);
      if (!theta.is_zero()) return theta;
    }
  }
  if (form_rank == 4) {
    while (true) {
      FieldMatrix m(kV, kV);
      for (int i = 0; i < kV; ++i)
        for (int j = i + 1; j < kV; ++j) {
          m(i, j) = draw();
          m(j, i) = f.neg(m(i, j));
        }
      if (rank(m, f) == 4) return TwoForm(std::move(m), f);
    }
  }
  throw std::invalid_argument("a nonzero 2-form on a 5-space has rank 2 or 4");
}

nlohmann::json to_json(FieldMatrix const& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(Subspace const& s) { return to_json(s.basis()); }

nlohmann::json to_json(FormSpace const& a) {
  auto arr = nlohmann::json::array();
  for (auto const& theta : a.forms()) arr.push_back(to_json(theta.matrix()));
  return arr;
}

FormSpace form_space_from_json(nlohmann::json const& j, int p) {
  if (!j.is_array()) throw std::invalid_argument("fixture must be an array of five 5x5 matrices");
  std::vector<std::vector<std::vector<long long>>> mats;
  for (auto const& mat : j) mats.push_back(mat.get<std::vector<std::vector<long long>>>());
  return FormSpace::from_integers(mats, p);
}

nlohmann::json to_json(SingularityReport const& r) {
  auto levels = nlohmann::json::array();
  for (auto const& level : r.levels) {
    auto witnesses = nlohmann::json::array();
    for (auto const& w : level.witnesses) {
      witnesses.push_back({{"plane", to_json(w.plane)}, {"theta0_coeffs", w.coeffs}});
    }
    levels.push_back({{"degree", level.degree},
                      {"field", level.field},
                      {"section_points", level.section_points},
                      {"singular_points", level.singular_points},
                      {"witnesses", witnesses}});
  }
  return {{"p", r.p},
          {"screened_up_to_degree", r.max_ext},
          {"singular_found", r.singular_found()},
          {"levels", levels},
          {"note", "an empty screen is not a proof of smoothness over the algebraic closure"}};
}

nlohmann::json to_json(TorsorReport const& r) {
  return {{"count_X", r.count_x},
          {"count_Y", r.count_y},
          {"counts_equal", r.counts_equal},
          {"pairing_ok", r.pairing_ok},
          {"pairs_checked", r.pairs_checked},
          {"reliable", r.reliable},
          {"screen", to_json(r.screen)}};
}

}  // namespace lequiv::ffcount
