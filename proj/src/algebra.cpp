#include "rdw/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rdw/error.hpp"

namespace rdw {

namespace {

std::vector<AlgebraVector::Term> normalize(std::vector<AlgebraVector::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AlgebraVector::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0.0; });
  return out;
}

void require_same_group(const AlgebraVector& f, const AlgebraVector& g, const char* op) {
  if (!same_group(*f.group(), *g.group())) {
    throw UsageError(std::string(op) + ": operands live in different groups (" +
                     f.group()->name() + " vs " + g.group()->name() + ")");
  }
}

}  // namespace

AlgebraVector::AlgebraVector(GroupHandle group, std::vector<Term> terms)
    : group_(std::move(group)), terms_(normalize(std::move(terms))) {}

AlgebraVector AlgebraVector::delta(GroupHandle group, Element g, double coefficient) {
  return AlgebraVector(std::move(group), {{std::move(g), coefficient}});
}

double AlgebraVector::coefficient(const Element& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const Element& x) { return t.first < x; });
  return (it != terms_.end() && it->first == g) ? it->second : 0.0;
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& other) const {
  require_same_group(*this, other, "add");
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return AlgebraVector(group_, std::move(all));
}

AlgebraVector AlgebraVector::operator*(double scale) const {
  std::vector<Term> scaled = terms_;
  for (auto& t : scaled) t.second *= scale;
  return AlgebraVector(group_, std::move(scaled));
}

AlgebraVector convolve(const AlgebraVector& f, const AlgebraVector& g) {
  require_same_group(f, g, "convolve");
  const Group& group = *f.group();
  std::unordered_map<Element, double, ElementHash> acc;
  acc.reserve(f.support_size() * g.support_size());
  for (const auto& [y, a] : f.terms()) {
    for (const auto& [z, b] : g.terms()) acc[group.multiply(y, z)] += a * b;
  }
  std::vector<AlgebraVector::Term> terms(std::make_move_iterator(acc.begin()),
                                         std::make_move_iterator(acc.end()));
  return AlgebraVector(f.group(), std::move(terms));
}

AlgebraVector adjoint(const AlgebraVector& f) {
  std::vector<AlgebraVector::Term> terms;
  terms.reserve(f.support_size());
  for (const auto& [x, a] : f.terms()) terms.emplace_back(f.group()->invert(x), a);
  return AlgebraVector(f.group(), std::move(terms));
}

bool is_symmetric(const AlgebraVector& f) { return adjoint(f) == f; }

double sobolev_norm(const AlgebraVector& f, double s) {
  double sum = 0.0;
  for (const auto& [x, a] : f.terms()) {
    sum += a * a * std::pow(1.0 + static_cast<double>(f.group()->word_length(x)), s);
  }
  return std::sqrt(sum);
}

std::size_t support_radius(const AlgebraVector& f) {
  std::size_t r = 0;
  for (const auto& t : f.terms()) r = std::max(r, f.group()->word_length(t.first));
  return r;
}

NormReport norms(const AlgebraVector& f, const std::vector<double>& s_values) {
  NormReport report;
  std::vector<std::size_t> lengths;
  lengths.reserve(f.support_size());
  double sq = 0.0;
  for (const auto& [x, a] : f.terms()) {
    report.l1 += std::abs(a);
    sq += a * a;
    lengths.push_back(f.group()->word_length(x));
    report.support_radius = std::max(report.support_radius, lengths.back());
  }
  report.l2 = std::sqrt(sq);
  for (double s : s_values) {
    double sum = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      double a = f.terms()[i].second;
      sum += a * a * std::pow(1.0 + static_cast<double>(lengths[i]), s);
    }
    report.sobolev[s] = std::sqrt(sum);
  }
  return report;
}

}  // namespace rdw
