#pragma once

#include <Eigen/Dense>

namespace spinstress {

using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix5x6d = Eigen::Matrix<double, 5, 6>;
using Vector5d = Eigen::Matrix<double, 5, 1>;

}  // namespace spinstress
