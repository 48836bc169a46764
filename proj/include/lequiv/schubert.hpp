#pragma once

// Schubert calculus on Gr(k,n) restricted to multiplication by the divisor
// class sigma_1 (Pieri's rule), which is all that degree computations need.

#include <compare>
#include <map>
#include <vector>

#include "json.hpp"
#include "lequiv/integer.hpp"

namespace lequiv::schubert {

// Ambient Grassmannian Gr(k,n); partitions live in a k x (n-k) box.
struct Ambient {
  int k = 0;
  int n = 0;

  Ambient() = default;
  Ambient(int k, int n);

  int rows() const { return k; }
  int columns() const { return n - k; }
  int dimension() const { return k * (n - k); }
  friend bool operator==(Ambient const&, Ambient const&) = default;
};

class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless the parts are weakly decreasing,
  // nonnegative, and fit the box.  Trailing zeros are dropped.
  Partition(std::vector<int> parts, Ambient box);

  static Partition empty(Ambient box) { return Partition({}, box); }
  static Partition full(Ambient box);

  std::vector<int> const& parts() const { return parts_; }
  Ambient box() const { return box_; }
  int size() const;
  // Part i, zero past the stored length.
  int part(int i) const;

  // Conjugate partition in the transposed (n-k) x k box of Gr(n-k,n).
  Partition transpose() const;
  // Every partition obtained by adding a single box inside the ambient box.
  std::vector<Partition> addable() const;

  friend bool operator==(Partition const& a, Partition const& b) {
    return a.parts_ == b.parts_ && a.box_ == b.box_;
  }
  friend auto operator<=>(Partition const& a, Partition const& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  Ambient box_;
};

// Integer combination of Schubert classes sigma_lambda on a fixed Gr(k,n).
class SchubertCycle {
 public:
  explicit SchubertCycle(Ambient ambient) : ambient_(ambient) {}
  static SchubertCycle of(Partition const& lambda, Integer coefficient = 1);

  Ambient ambient() const { return ambient_; }
  std::map<Partition, Integer> const& terms() const { return terms_; }
  Integer coefficient(Partition const& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  void add(Partition const& lambda, Integer const& coefficient);
  SchubertCycle& operator+=(SchubertCycle const& o);
  friend SchubertCycle operator+(SchubertCycle a, SchubertCycle const& b) {
    return a += b;
  }
  friend bool operator==(SchubertCycle const& a, SchubertCycle const& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

 private:
  Ambient ambient_;
  std::map<Partition, Integer> terms_;
};

// c · sigma_1.
SchubertCycle pieri_multiply(SchubertCycle const& c);

// Coefficient of the point class in sigma_lambda · sigma_1^(k(n-k) - |lambda|).
Integer degree(Partition const& lambda);
Integer degree(std::vector<int> const& parts, int k, int n);

nlohmann::json to_json(Partition const& p);
nlohmann::json to_json(SchubertCycle const& c);

}  // namespace lequiv::schubert
