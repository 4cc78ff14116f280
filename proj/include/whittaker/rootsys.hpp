#ifndef WHITTAKER_ROOTSYS_HPP
#define WHITTAKER_ROOTSYS_HPP

#include "whittaker/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace whittaker {

// One irreducible block of the Cartan matrix.  `global` maps the factor's
// canonical simple-root index to the index in the input matrix.
struct FactorInfo {
  char family = 'A';  // 'A' or 'B' (B covers the B2/C2 block)
  int rank = 0;
  std::vector<int> global;
};

// Convention: cartan(i, j) = value of the simple root alpha_i on the simple
// coroot h_j.  Positive roots are stored as coordinate vectors on the simple
// roots, ordered by (height, then ascending lexicographic coordinates); this
// order is the PBW monomial convention used everywhere downstream.
struct RootSystem {
  Eigen::MatrixXi cartan;
  int rank = 0;
  std::vector<Eigen::VectorXi> positive_roots;
  std::vector<FactorInfo> factors;
  std::string name;

  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  int height(int root) const { return positive_roots[root].sum(); }
  bool is_simple(int root) const { return height(root) == 1; }
  // for simple roots: the simple index; -1 otherwise
  int simple_index(int root) const;
  std::optional<int> index_of(const Eigen::VectorXi& coords) const;
  // alpha(h_j) for the root with the given index
  long root_on_coroot(int root, int j) const;
  std::string root_label(int root) const;  // "a1", "a1+a2", "2a1+a2", ...
};

RootSystem build_root_system(const Eigen::MatrixXi& cartan);

// Known type names: A1, A2, A3, B2, C2, A1xA1, A2xA1, A1xA1xA1 and the
// aliases sl2, sl3, sl4, sp4.
Eigen::MatrixXi cartan_matrix_for(const std::string& type_name);

// Reflection subgroup generated by the chosen simple reflections, as exact
// integer matrices acting on the coroot basis of the Cartan subalgebra.
struct WeylGroup {
  std::vector<Eigen::MatrixXi> elements;
  int order() const { return static_cast<int>(elements.size()); }
};

WeylGroup weyl_group(const RootSystem& rs);
WeylGroup weyl_group(const RootSystem& rs, const std::vector<int>& subset);

Eigen::MatrixXi simple_reflection_matrix(const RootSystem& rs, int i);

// Values of the half-sum of positive roots on the simple coroots.
struct RhoWeight {
  VecQ values;
};

RhoWeight rho(const RootSystem& rs);

}  // namespace whittaker

#endif
