#ifndef SEAWEED_ROOTSYS_HPP
#define SEAWEED_ROOTSYS_HPP

#include "seaweed/linalg.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace seaweed {

/// One of the simple types A..G with a rank in its admissible range
/// (A: l >= 1, B: l >= 2, C: l >= 3, D: l >= 4, E: 6..8, F: 4, G: 2).
struct SimpleType {
  char letter = 'A';
  int rank = 1;

  bool operator==(const SimpleType&) const = default;
};

/// Validating constructor; throws std::invalid_argument outside the ranges.
SimpleType simple_type(char letter, int rank);
std::string to_string(const SimpleType& t);

/// Subset of the simple roots, addressed with 1-based Bourbaki indices.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::uint32_t bits) : bits_(bits) {}
  static Subset full(int rank) { return Subset((1u << rank) - 1u); }

  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  Subset& add(int i) {
    bits_ |= 1u << (i - 1);
    return *this;
  }
  Subset& remove(int i) {
    bits_ &= ~(1u << (i - 1));
    return *this;
  }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }

  auto operator<=>(const Subset&) const = default;

private:
  std::uint32_t bits_ = 0;
};

/// Parse "1,3,4" or "none"; 1-based indices, bounded by rank.
Subset parse_subset(const std::string& text, int rank);
std::string format_subset(Subset s);

/// A root in coordinates over the simple roots. For roots produced by a
/// RootSystem the coefficients are all >= 0 or all <= 0.
struct Root {
  std::vector<int> coeffs;
  int height = 0; // sum of coefficients

  bool operator==(const Root&) const = default;
};

/// Immutable catalog of a reduced irreducible root system: the positive
/// roots in a fixed total order (height, then lexicographic on coefficients
/// — this is the total order on R+ used everywhere downstream), the Cartan
/// pairings and the normalized symmetric form.
///
/// A RootSystem is a value handle over shared immutable state: copies are
/// cheap and downstream objects hold their root system by value.
class RootSystem {
public:
  RootSystem() = default; // empty handle; only build_root_system makes a live one

  const SimpleType& type() const { return data_->type; }
  int rank() const { return data_->type.rank; }

  /// cartan()(i, j) = <alpha_i, alpha_j^vee>, 0-based.
  const IntMatrix& cartan() const { return data_->cartan; }

  /// (alpha_i, alpha_j), normalized so short roots have squared length 2.
  /// Integral in this normalization.
  const IntMatrix& symmetric_form() const { return data_->form; }

  const std::vector<Root>& positive_roots() const { return data_->positive; }
  int num_positive() const { return static_cast<int>(data_->positive.size()); }

  /// Index into positive_roots(), or -1 if the vector is not a positive root.
  int positive_index(const std::vector<int>& coeffs) const;
  bool is_root(const std::vector<int>& coeffs) const;

  /// <lam, alpha^vee> = 2(lam, alpha)/(alpha, alpha) as an exact integer;
  /// lam may be any integer vector in root coordinates.
  long pairing_with_coroot(const std::vector<int>& lam, const std::vector<int>& alpha) const;

  /// Half squared length (alpha, alpha)/2 of a positive root, in {1, 2, 3}.
  int half_length(int positive_idx) const { return data_->root_d[positive_idx]; }

  /// Support of a positive root as a subset of the simple roots.
  Subset support(int positive_idx) const { return data_->support[positive_idx]; }

  /// Simple roots adjacent in the Dynkin diagram (0-based).
  bool adjacent(int i, int j) const { return i != j && data_->cartan(i, j) != 0; }

private:
  friend RootSystem build_root_system(SimpleType t);

  struct Data {
    SimpleType type;
    IntMatrix cartan;
    IntMatrix form;
    std::vector<int> simple_d; // (alpha_i, alpha_i)/2
    std::vector<Root> positive;
    std::vector<int> root_d;
    std::vector<Subset> support;
    std::unordered_map<std::uint64_t, int> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Generate the full root system from the Cartan matrix by closure
/// (root strings), in Bourbaki numbering. Deterministic; self-checks the
/// classical positive-root count for the type.
RootSystem build_root_system(SimpleType t);

/// <lam, alpha^vee>; alpha must be a root of rs.
long pairing(const RootSystem& rs, const Root& lam, const Root& alpha);

/// Highest root eps_S of the subsystem generated by a connected nonempty S.
Root highest_root(const RootSystem& rs, Subset s);
int highest_root_index(const RootSystem& rs, Subset s);

/// Dynkin-connected components of S, ordered by least index.
std::vector<Subset> connected_components(const RootSystem& rs, Subset s);

/// True iff a != +-b and neither a+b nor a-b is a root.
bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b);

} // namespace seaweed

#endif
