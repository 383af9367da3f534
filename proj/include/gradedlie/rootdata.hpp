// Root data for the configured split groups: root/coroot systems generated by
// reflection closure from the Cartan matrix, Weyl groups as root
// permutations, the apartment A = X_*(S) (x) Q in coroot coordinates, and
// Moy-Prasad affine level functions.
//
// Conventions held throughout the workbench:
//   * cartan[i][j] = <alpha_j, alpha_i^vee>.
//   * Apartment points and cocharacters are rational vectors in the simple
//     coroot basis.
//   * The affine level of the line g_alpha (x) t^n at x is n - alpha(x);
//     Cartan lines sit at level n.  This is the sign convention that makes
//     the weight-shift isomorphism level(x - s*lambda) = level(x) + i*s hold
//     with i = <alpha, lambda>.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/rational.hpp"

namespace glie {

enum class Isogeny { SimplyConnected, Adjoint };

std::string isogeny_str(Isogeny iso);
Isogeny parse_isogeny(const std::string& s);

struct BuildingPoint {
  std::vector<Rat> x;  // coroot-basis coordinates

  bool operator==(const BuildingPoint&) const = default;
};

class RootDatum {
 public:
  // type: one of A1, A2, A3, B2, C2, G2 (B2 is the C2 system with the two
  // simple roots swapped).  Other labels are rejected.
  static RootDatum build(const std::string& type, Isogeny isogeny);

  const std::string& type() const { return type_; }
  Isogeny isogeny() const { return isogeny_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }

  // Root r as integer vector in the simple-root basis; its coroot in the
  // simple-coroot basis.
  const std::vector<int>& root(int r) const { return roots_[r]; }
  const std::vector<int>& coroot(int r) const { return coroots_[r]; }
  int negative_of(int r) const { return neg_[r]; }
  bool is_positive(int r) const { return r < num_positive(); }
  int height(int r) const;

  // Index of the root with the given simple-root coordinates, or -1.
  int find_root(const std::vector<int>& coords) const;

  int cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_j, alpha_i^vee>

  // <root r, alpha_j^vee>
  int pair_simple_coroot(int r, int j) const { return pairing_[r][j]; }

  // alpha_r evaluated on a rational coroot-coordinate vector (a point of the
  // apartment or a cocharacter).
  Rat root_value(int r, const std::vector<Rat>& v) const;

  // Weyl group as permutations of the root list.
  const std::vector<std::vector<int>>& weyl_elements() const { return weyl_; }
  long weyl_order() const { return static_cast<long>(weyl_.size()); }

  // Simple reflection s_i on coroot coordinates.
  std::vector<Rat> reflect(int i, const std::vector<Rat>& v) const;

  // Dominant representative of a cocharacter under the Weyl group.
  std::vector<Rat> dominant(const std::vector<Rat>& lambda) const;

  // Membership of a rational vector in X_*(S) for this isogeny.
  bool is_cocharacter(const std::vector<Rat>& lambda) const;

  // Least m >= 1 with every root value alpha(x) in (1/m)Z.
  long period_m(const BuildingPoint& x) const;

  Rat affine_level(const BuildingPoint& x, int root, long n) const {
    return Rat(n) - root_value(root, x.x);
  }
  // Cartan lines: level n, independent of x.

 private:
  std::string type_;
  Isogeny isogeny_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_, coroots_;
  std::vector<std::vector<int>> pairing_;  // pairing_[r][j] = <alpha_r, alpha_j^vee>
  std::vector<int> neg_;
  std::vector<std::vector<int>> weyl_;  // permutations of roots
};

// One basis line of the Lie algebra: a root line or a Cartan generator.
// Basis order: roots 0..R-1 (positive first, in the documented total order),
// then h_1..h_rank.
struct ChevalleyTerm {
  int line;
  long coeff;
};

class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootDatum& rd);

  const RootDatum& datum() const { return *rd_; }
  int dim() const { return dim_; }
  int num_roots() const { return rd_->num_roots(); }
  bool is_root_line(int line) const { return line < num_roots(); }
  int cartan_line(int i) const { return num_roots() + i; }

  // Structure constant N_{beta,gamma} (0 when beta+gamma is not a root).
  long structure_constant(int root_b, int root_c) const { return nconst_[root_b][root_c]; }

  // Bracket of two basis lines as an integer combination of basis lines.
  const std::vector<ChevalleyTerm>& bracket(int line_a, int line_b) const {
    return table_[line_a * dim_ + line_b];
  }

  // Bracket of integer coefficient vectors.
  std::vector<long> bracket_vec(const std::vector<long>& u, const std::vector<long>& v) const;

 private:
  void verify_jacobi() const;

  const RootDatum* rd_;
  int dim_;
  std::vector<std::vector<long>> nconst_;
  std::vector<std::vector<ChevalleyTerm>> table_;
};

// Parsing/printing of apartment points: array of "p/q" strings.
BuildingPoint parse_building_point(const std::vector<std::string>& coords);
std::vector<std::string> building_point_str(const BuildingPoint& x);

}  // namespace glie
