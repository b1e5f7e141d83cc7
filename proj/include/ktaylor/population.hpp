#pragma once

#include <Eigen/Dense>
#include <string>

namespace ktaylor {

// A labeled collection of D-dimensional samples drawn from one distribution.
// Rows are samples, columns are dimensions.
struct Population {
  std::string label;
  Eigen::MatrixXd samples;  // N x D

  Eigen::Index size() const { return samples.rows(); }
  Eigen::Index dim() const { return samples.cols(); }

  // Throws DataError if the population is empty, has zero columns, or
  // contains a non-finite entry.
  void validate() const;

  // Samples concatenated row by row into a single vector of length N*D.
  Eigen::VectorXd flatten() const;
};

}  // namespace ktaylor
