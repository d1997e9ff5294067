#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcox/linalg.hpp"

namespace qcox {

// (a*b)(x) = a(b(x))
struct Permutation {
  std::vector<int> images;
  bool operator==(const Permutation& o) const { return images == o.images; }
};

// Freely reduced word; letters are (generator index, +1 or -1).
struct FreeWord {
  std::vector<std::pair<int, int>> letters;
  bool operator==(const FreeWord& o) const { return letters == o.letters; }
};

using GroupElement = std::variant<Permutation, FreeWord, Matrix>;

class Carrier {
 public:
  enum class Kind { Permutation, Free, Matrix };

  static Carrier permutations(int degree);
  static Carrier free_group(std::vector<std::string> generators);
  static Carrier matrices(int dim);

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  const std::vector<std::string>& generators() const { return gens_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_identity(const GroupElement& a) const { return equal(a, identity()); }
  // throws CarrierMismatch if a does not belong to this carrier
  void validate(const GroupElement& a) const;
  std::string to_string(const GroupElement& a) const;

  FreeWord generator(int i, int exponent = 1) const;
  bool operator==(const Carrier& o) const { return kind_ == o.kind_ && degree_ == o.degree_ && gens_ == o.gens_; }

 private:
  Kind kind_ = Kind::Permutation;
  int degree_ = 0;
  std::vector<std::string> gens_;
};

FreeWord reduce(FreeWord w);

}  // namespace qcox
