#ifndef RDW_ALGEBRA_HPP
#define RDW_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rdw/element.hpp"
#include "rdw/group.hpp"

namespace rdw {

/// A finitely supported real function on a group: an element of the group
/// algebra, or a test vector in l^2(G).
///
/// Terms are kept sorted by canonical element order with no zero coefficients.
class AlgebraVector {
 public:
  using Term = std::pair<Element, double>;

  explicit AlgebraVector(GroupHandle group) : group_(std::move(group)) {}
  /// Duplicate elements are summed; resulting zeros are dropped.
  AlgebraVector(GroupHandle group, std::vector<Term> terms);

  static AlgebraVector delta(GroupHandle group, Element g, double coefficient = 1.0);

  const GroupHandle& group() const noexcept { return group_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  double coefficient(const Element& g) const;

  AlgebraVector operator+(const AlgebraVector& other) const;
  AlgebraVector operator*(double scale) const;
  bool operator==(const AlgebraVector& other) const { return terms_ == other.terms_; }

 private:
  GroupHandle group_;
  std::vector<Term> terms_;
};

/// (f*g)(x) = sum_y f(y) g(y^-1 x). Throws UsageError for different groups.
AlgebraVector convolve(const AlgebraVector& f, const AlgebraVector& g);

/// f*(x) = f(x^-1) (real coefficients).
AlgebraVector adjoint(const AlgebraVector& f);

bool is_symmetric(const AlgebraVector& f);

struct NormReport {
  double l1 = 0.0;
  double l2 = 0.0;
  std::map<double, double> sobolev;  // s -> ||f||_{l,s}
  std::size_t support_radius = 0;
};

/// ||f||_{l,s}^2 = sum_x |f(x)|^2 (1 + l(x))^s with l the word length.
double sobolev_norm(const AlgebraVector& f, double s);

/// Exact l1/l2 norms, Sobolev norms at each requested s, and
/// max{ l(x) : f(x) != 0 } (0 for the zero vector).
NormReport norms(const AlgebraVector& f, const std::vector<double>& s_values = {});

std::size_t support_radius(const AlgebraVector& f);

}  // namespace rdw

#endif  // RDW_ALGEBRA_HPP
