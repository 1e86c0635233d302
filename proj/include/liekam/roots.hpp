#pragma once

#include <map>
#include <string>
#include <vector>

#include "liekam/rational.hpp"

namespace liekam {

enum class LieType { A, B, C, D, E, F, G };

std::string type_name(LieType t);
LieType type_from_string(const std::string& s);

// Coordinates are stored doubled (2x the L-coordinates) so every root,
// including the half-sum roots of the E series and F4, is an integer vector.
using Coords2 = std::vector<int>;

enum class LengthClass { Long, Short };

struct Root {
  Coords2 c2;                      // doubled L-coordinates
  std::vector<int> simple_coords;  // expansion over the simple roots
  int height = 0;                  // sum of simple_coords
  bool positive = false;
  LengthClass length_class = LengthClass::Long;

  int ip2(const Root& o) const {  // 4 * (this, o) in the L-inner product
    int s = 0;
    for (std::size_t i = 0; i < c2.size(); ++i) s += c2[i] * o.c2[i];
    return s;
  }
  int norm2_times4() const { return ip2(*this); }
  // Cartan integer <this, o^v> = 2(this,o)/(o,o)
  int pairing(const Root& o) const { return 2 * ip2(o) / o.norm2_times4(); }

  std::string str() const;  // e.g. "L1-L2", "2L1", "1/2(L1-L2+L3+L4)"
};

class RootSystem {
 public:
  static RootSystem build(LieType type, int rank);

  LieType lie_type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const Root& root(int i) const { return roots_[i]; }
  const std::vector<int>& simple_indices() const { return simple_; }

  // Index of the root with the given doubled coordinates, or -1.
  int index_of(const Coords2& c2) const;
  int index_of_root(const Root& r) const { return index_of(r.c2); }
  int negative_of(int i) const { return neg_[i]; }
  // Index of roots_[i] + roots_[j]: root index, -2 if the sum is zero, -1 otherwise.
  int sum_index(int i, int j) const { return sum_[i * roots_.size() + j]; }

  int n_positive() const { return n_pos_; }
  // Position of a positive root in the height-then-lex total order.
  int positive_order(int i) const { return pos_order_[i]; }

  Coords2 reflect(const Root& alpha, const Root& beta) const;  // s_alpha(beta)

  std::string name() const { return type_name(type_) + std::to_string(rank_); }

 private:
  LieType type_{};
  int rank_ = 0, ambient_ = 0, n_pos_ = 0;
  std::vector<Root> roots_;
  std::vector<int> simple_;
  std::vector<int> neg_;
  std::vector<int> sum_;
  std::vector<int> pos_order_;
  std::map<Coords2, int> index_;
};

// Parses "L1-L2", "2L3", "-L2", "1/2(L1-L2+L3-L4)" style strings into doubled coords.
Coords2 parse_root_expr(const std::string& s, int ambient);

}  // namespace liekam
