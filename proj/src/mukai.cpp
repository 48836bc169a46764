#include "lequiv/mukai.hpp"

#include <stdexcept>

#include "lequiv/json_util.hpp"

namespace lequiv::mukai {

using lattice::GramMatrix;

ExtendedLattice extended_gram(Integer const& t, Integer const& d) {
  GramMatrix const ns = lattice::lambda_gram(t, d);
  IntMatrix const u{{0, -1}, {-1, 0}};
  return {GramMatrix(direct_sum(u, ns.entries())), t, d};
}

MukaiVector jacobian_mukai_vector(Integer const& k) {
  MukaiVector v(4, 0);
  v[kF] = 1;
  v[kE2] = k;
  return v;
}

JacobianLattice jacobian_lattice(Integer const& t, Integer const& d,
                                 Integer const& k) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  if (gcd(t, k) != 1) throw std::invalid_argument("jacobian_ns needs gcd(t, k) = 1");
  ExtendedLattice const lat = extended_gram(t, d);
  IntMatrix const& g = lat.gram.entries();

  MukaiVector const mv = jacobian_mukai_vector(k);
  IntMatrix const v = IntMatrix::column(mv);
  // v^perp = ker(v^T G), saturated.
  IntMatrix const perp = integral_kernel(v.transpose() * g);
  if (perp.cols() != 3) throw std::logic_error("v^perp should have rank 3");

  // Coordinates of v in the kernel basis, then a unimodular frame starting at v.
  auto coords = integral_solve(perp.transpose() * perp, perp.transpose() * v);
  if (!coords || !(perp * *coords == v)) {
    throw std::logic_error("isotropic v does not lie in its own orthogonal complement");
  }
  IntMatrix const frame = complete_to_unimodular(coords->column_vector(0));
  IntMatrix const quotient = perp * frame.block(0, 1, 3, 2);
  GramMatrix gram(quotient.transpose() * g * quotient);
  return {mv, perp, quotient, std::move(gram)};
}

GramMatrix jacobian_ns(Integer const& t, Integer const& d, Integer const& k) {
  return jacobian_lattice(t, d, k).gram;
}

IntMatrix g0_isometry() {
  IntMatrix m(4, 4);
  auto set_image = [&m](int source, std::vector<std::pair<int, int>> terms) {
    for (auto [index, coeff] : terms) m(index, source) = coeff;
  };
  set_image(kE1, {{kE2, 2}, {kF, 1}});
  set_image(kE2, {{kE1, -2}, {kH, -1}});
  set_image(kH, {{kH, 2}, {kE1, 5}});
  set_image(kF, {{kF, -2}, {kE2, -5}});
  if (!lattice::is_isometry(m, extended_gram(5, 0).gram)) {
    throw std::logic_error("g0 is not an isometry of U ⊕ Lambda_{5,0}");
  }
  return m;
}

IntMatrix extend_isometry(IntMatrix const& u_part, IntMatrix const& ns_part) {
  return direct_sum(u_part, ns_part);
}

IntMatrix discriminant_action(IntMatrix const& m, ExtendedLattice const& lat) {
  if (!lattice::is_isometry(m, lat.gram)) {
    throw std::invalid_argument("matrix is not an isometry of the extended lattice");
  }
  Integer const& t = lat.t;
  if (lat.d % t != 0) {
    throw std::invalid_argument("discriminant group is (Z/t)^2 only when t | d");
  }
  IntMatrix action(2, 2);
  for (int gen = 0; gen < 2; ++gen) {
    int const source = gen == 0 ? kH : kF;
    // m(source)/t must lie in N* = U ⊕ (1/t)·NS.
    if (m(kE1, source) % t != 0 || m(kE2, source) % t != 0) {
      throw std::logic_error("image of a discriminant generator left the dual lattice");
    }
    action(0, gen) = mod_floor(m(kH, source), t);
    action(1, gen) = mod_floor(m(kF, source), t);
  }
  return action;
}

std::vector<IntMatrix> allowed_discriminant_actions() {
  return {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{4, 0}, {0, 4}},
          IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 4}, {4, 0}}};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::isomorphic:
      return "isomorphic";
    case Verdict::not_isomorphic:
      return "not_isomorphic";
    case Verdict::not_isomorphic_if_very_general:
      return "not_isomorphic_if_very_general";
  }
  return "unknown";
}

bool VerdictReport::all_checks_pass() const {
  for (auto const& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

nlohmann::json matrices_json(std::vector<IntMatrix> const& ms) {
  auto arr = nlohmann::json::array();
  for (auto const& m : ms) arr.push_back(to_json(m));
  return arr;
}

IntMatrix negate_mod(IntMatrix const& a, Integer const& t) {
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = mod_floor(-a(i, j), t);
  return r;
}

}  // namespace

VerdictReport jac2_isomorphism_verdict(Integer const& d_in) {
  Integer const t = 5;
  int const d = static_cast<int>(mod_floor(d_in, t));
  VerdictReport report;
  report.d = d;
  GramMatrix const ns = lattice::lambda_gram(t, d);
  GramMatrix const jac = jacobian_ns(t, d, 2);
  report.evidence["ns_gram"] = lattice::to_json(ns);
  report.evidence["jac2_gram"] = lattice::to_json(jac);

  if (d == 2 || d == 3) {
    // Lambda_{5,d} is alone in its genus and O(Lambda_{5,d}) = {±1}, so the
    // Fourier-Mukai partner count is one.
    std::vector<int> genus_mates;
    bool genus_single_class = true;
    for (int other = 0; other < 5; ++other) {
      GramMatrix const g = lattice::lambda_gram(t, other);
      if (!lattice::same_genus(ns, g)) continue;
      genus_mates.push_back(other);
      genus_single_class = genus_single_class && lattice::is_isomorphic(ns, g);
    }
    report.checks.push_back({"genus contains a single isomorphism class",
                             genus_single_class, genus_mates, "all isomorphic"});
    auto const group = lattice::isometry_group(ns);
    std::vector<IntMatrix> const plus_minus{IntMatrix::identity(2),
                                            -IntMatrix::identity(2)};
    report.checks.push_back({"isometry group is {±1}", group == plus_minus,
                             matrices_json(group), matrices_json(plus_minus)});
    report.evidence["isometry_group"] = matrices_json(group);
    report.verdict = Verdict::isomorphic;
  } else if (d == 1 || d == 4) {
    bool const iso = lattice::is_isomorphic(ns, jac);
    report.checks.push_back({"NS(X) is not isomorphic to NS(Jac^2 X)", !iso,
                             lattice::canonical_residues(ns).front().str(),
                             lattice::canonical_residues(jac).front().str()});
    report.evidence["ns_residues"] = nlohmann::json::array();
    for (auto const& r : lattice::canonical_residues(ns))
      report.evidence["ns_residues"].push_back(integer_to_json(r));
    report.evidence["jac2_residues"] = nlohmann::json::array();
    for (auto const& r : lattice::canonical_residues(jac))
      report.evidence["jac2_residues"].push_back(integer_to_json(r));
    report.verdict = Verdict::not_isomorphic;
  } else {
    ExtendedLattice const lat = extended_gram(t, 0);
    IntMatrix const g0 = g0_isometry();
    auto const image_e1 = g0.column_vector(kE1);
    MukaiVector const target = jacobian_mukai_vector(2);
    report.checks.push_back({"g0 is an isometry of N(X)",
                             lattice::is_isometry(g0, lat.gram), "g0^T G g0", "G"});
    report.checks.push_back({"g0 sends e1 to F + 2e2", image_e1 == target,
                             to_json(IntMatrix::column(image_e1)),
                             to_json(IntMatrix::column(target))});
    IntMatrix const action = discriminant_action(g0, lat);
    IntMatrix const negated = negate_mod(action, t);
    auto const allowed = allowed_discriminant_actions();
    bool outside = true;
    for (auto const& a : allowed) outside = outside && !(a == action) && !(a == negated);
    report.checks.push_back({"±(g0 on A_{5,0}) avoids {±I, ±swap}", outside,
                             matrices_json({action, negated}), matrices_json(allowed)});
    report.evidence["g0"] = to_json(g0);
    report.evidence["discriminant_action"] = to_json(action);
    report.evidence["allowed_actions"] = matrices_json(allowed);
    report.very_general_assumed = true;
    report.verdict = Verdict::not_isomorphic_if_very_general;
  }
  return report;
}

nlohmann::json to_json(VerdictReport const& r) {
  auto checks = nlohmann::json::array();
  for (auto const& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  nlohmann::json evidence = r.evidence;
  evidence["checks"] = checks;
  evidence["very_general_assumed"] = r.very_general_assumed;
  return {{"d", r.d}, {"verdict", to_string(r.verdict)}, {"evidence", evidence}};
}

}  // namespace lequiv::mukai
