#include "lequiv/schubert.hpp"

#include <numeric>
#include <stdexcept>

#include "lequiv/json_util.hpp"

namespace lequiv::schubert {

Ambient::Ambient(int k, int n) : k(k), n(n) {
  if (k < 0 || k > n) throw std::invalid_argument("Gr(k,n) needs 0 <= k <= n");
}

Partition::Partition(std::vector<int> parts, Ambient box)
    : parts_(std::move(parts)), box_(box) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (static_cast<int>(parts_.size()) > box_.rows()) {
    throw std::invalid_argument("partition has more rows than the box");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
    if (parts_[i] > box_.columns()) {
      throw std::invalid_argument("partition part exceeds the box width");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::full(Ambient box) {
  return Partition(std::vector<int>(box.rows(), box.columns()), box);
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
}

Partition Partition::transpose() const {
  Ambient const transposed(box_.n - box_.k, box_.n);
  std::vector<int> conjugate;
  for (int column = 0; column < box_.columns(); ++column) {
    int height = 0;
    while (height < static_cast<int>(parts_.size()) && parts_[height] > column) {
      ++height;
    }
    conjugate.push_back(height);
  }
  return Partition(std::move(conjugate), transposed);
}

std::vector<Partition> Partition::addable() const {
  std::vector<Partition> result;
  for (int row = 0; row < box_.rows(); ++row) {
    int const grown = part(row) + 1;
    if (grown > box_.columns()) continue;
    if (row > 0 && grown > part(row - 1)) continue;
    std::vector<int> next(box_.rows(), 0);
    for (int i = 0; i < box_.rows(); ++i) next[i] = part(i);
    next[row] = grown;
    result.emplace_back(std::move(next), box_);
  }
  return result;
}

SchubertCycle SchubertCycle::of(Partition const& lambda, Integer coefficient) {
  SchubertCycle c(lambda.box());
  c.add(lambda, coefficient);
  return c;
}

Integer SchubertCycle::coefficient(Partition const& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchubertCycle::add(Partition const& lambda, Integer const& coefficient) {
  if (!(lambda.box() == ambient_)) {
    throw std::invalid_argument("partition does not fit the cycle's ambient box");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertCycle& SchubertCycle::operator+=(SchubertCycle const& o) {
  if (!(o.ambient_ == ambient_)) {
    throw std::invalid_argument("cycles live on different Grassmannians");
  }
  for (auto const& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

SchubertCycle pieri_multiply(SchubertCycle const& c) {
  SchubertCycle result(c.ambient());
  for (auto const& [lambda, coefficient] : c.terms()) {
    for (auto const& mu : lambda.addable()) result.add(mu, coefficient);
  }
  return result;
}

Integer degree(Partition const& lambda) {
  Ambient const box = lambda.box();
  SchubertCycle cycle = SchubertCycle::of(lambda);
  for (int step = lambda.size(); step < box.dimension(); ++step) {
    cycle = pieri_multiply(cycle);
  }
  return cycle.coefficient(Partition::full(box));
}

Integer degree(std::vector<int> const& parts, int k, int n) {
  return degree(Partition(parts, Ambient(k, n)));
}

nlohmann::json to_json(Partition const& p) { return p.parts(); }

nlohmann::json to_json(SchubertCycle const& c) {
  auto arr = nlohmann::json::array();
  for (auto const& [lambda, coefficient] : c.terms()) {
    arr.push_back({{"partition", to_json(lambda)},
                   {"coeff", integer_to_json(coefficient)}});
  }
  return arr;
}

}  // namespace lequiv::schubert
