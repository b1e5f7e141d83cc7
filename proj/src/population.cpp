#include "ktaylor/population.hpp"

#include <cmath>

#include "ktaylor/errors.hpp"

namespace ktaylor {

void Population::validate() const {
  if (samples.rows() < 1) {
    throw DataError("population '" + label + "' is empty");
  }
  if (samples.cols() < 1) {
    throw DataError("population '" + label + "' has zero dimensions");
  }
  if (!samples.allFinite()) {
    throw DataError("population '" + label + "' contains a non-finite value");
  }
}

Eigen::VectorXd Population::flatten() const {
  Eigen::VectorXd out(samples.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    for (Eigen::Index j = 0; j < samples.cols(); ++j) {
      out[k++] = samples(i, j);
    }
  }
  return out;
}

}  // namespace ktaylor
