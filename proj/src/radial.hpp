// Radial functions on free groups. A function constant on each sphere of the
// Cayley tree is determined by its sphere values, and convolution with a
// radial f preserves radial functions. In the orthonormal basis
// e_m = 1_{S_m} / sqrt|S_m| the compression of lambda(f) to B(R) becomes an
// (R+1) x (R+1) matrix, which is what lets F_k be studied far beyond the
// radius where its balls can be enumerated.
#ifndef RDW_SRC_RADIAL_HPP
#define RDW_SRC_RADIAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "rdw/algebra.hpp"

namespace rdw::detail {

/// Sphere values phi_0..phi_L when f lives on a free group and is constant on
/// every sphere it meets (every sphere it meets must be fully covered).
std::optional<std::vector<double>> radial_profile(const AlgebraVector& f);

/// log |S_n| in F_k.
double log_sphere_size(std::size_t k, std::size_t n);

/// For fixed x with |x| = m: #{ y : |y| = j, |y^-1 x| = n } in F_k.
double sphere_count(std::size_t k, std::size_t j, std::size_t n, std::size_t m);

/// M[m][n] = <e_m, lambda(f) e_n> for m, n <= R.
Eigen::MatrixXd radial_matrix(std::size_t k, const std::vector<double>& phi, std::size_t R);

}  // namespace rdw::detail

#endif  // RDW_SRC_RADIAL_HPP
