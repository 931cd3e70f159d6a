#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modinv {

/// Raised when objects from incompatible groups, sides or sections are combined.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical guard (size cap, convergence check) trips.
class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which side of the duality an element or function lives on. A finite
/// abelian group and its dual share one GroupSpec; the tag keeps them apart.
enum class Side { primal, dual };

inline Side opposite(Side s) { return s == Side::primal ? Side::dual : Side::primal; }
const char* to_string(Side s);

/**
 * A finite abelian group Z_{n_1} x ... x Z_{n_k}, factors taken as given.
 *
 * Elements are addressed by a mixed-radix index with the first factor most
 * significant, so index order equals lexicographic order of residue tuples.
 * The residue table and root-of-unity table are shared between copies.
 */
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<int> factors);

  std::span<const int> factors() const { return data_->factors; }
  std::size_t order() const { return data_->order; }
  std::size_t rank() const { return data_->factors.size(); }
  /// Least common multiple of the factors; all pairings are powers of exp(2 pi i / exponent).
  int exponent() const { return data_->exponent; }

  std::size_t index_of(std::span<const int> residues) const;
  std::span<const int> residues_of(std::size_t index) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t subtract(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  /// Integer phase p with <x, xi> = exp(2 pi i p / exponent()).
  int phase(std::size_t x, std::size_t xi) const;
  /// exp(2 pi i p / exponent()), exact at multiples of a quarter turn.
  std::complex<double> root_of_unity(int p) const;
  /// roots()[p] == root_of_unity(p) for 0 <= p < exponent().
  std::span<const std::complex<double>> roots() const { return data_->roots; }
  std::complex<double> pairing_by_index(std::size_t x, std::size_t xi) const {
    return root_of_unity(phase(x, xi));
  }

  bool operator==(const GroupSpec& other) const { return data_->factors == other.data_->factors; }

  std::string describe() const;

 private:
  struct Data {
    std::vector<int> factors;
    std::vector<int> strides;
    std::vector<int> weights;  // exponent / n_j
    std::vector<int> residues;  // order x rank, row-major
    std::vector<std::complex<double>> roots;
    std::size_t order = 1;
    int exponent = 1;
  };
  std::shared_ptr<const Data> data_;
};

/// A residue tuple tagged with the side of the duality it belongs to.
struct GroupElement {
  Side side = Side::primal;
  std::vector<int> residues;

  bool operator==(const GroupElement&) const = default;
};

GroupElement make_element(const GroupSpec& g, Side side, std::vector<int> residues);
GroupElement element_at(const GroupSpec& g, Side side, std::size_t index);
GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& g, const GroupElement& a);

/// <x, xi> = exp(2 pi i sum_j x_j xi_j / n_j). x must be primal, xi dual.
std::complex<double> pairing(const GroupSpec& g, const GroupElement& x, const GroupElement& xi);
std::complex<double> pairing(const GroupSpec& g_x, const GroupElement& x, const GroupSpec& g_xi,
                             const GroupElement& xi);

/// A subgroup of G (or of its dual), stored as sorted element indices.
class Subgroup {
 public:
  Subgroup(GroupSpec parent, Side side, std::vector<GroupElement> generators,
           std::vector<std::size_t> elements);

  const GroupSpec& parent() const { return parent_; }
  Side side() const { return side_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Element indices in increasing mixed-radix order; elements()[0] == 0.
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::size_t index) const { return member_[index]; }

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && side_ == other.side_ && elements_ == other.elements_;
  }

 private:
  GroupSpec parent_;
  Side side_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> elements_;
  std::vector<bool> member_;
};

Subgroup subgroup_from_generators(const GroupSpec& g, Side side, std::vector<GroupElement> gens);
Subgroup trivial_subgroup(const GroupSpec& g, Side side);
Subgroup whole_group(const GroupSpec& g, Side side);

/// Elements of the opposite side pairing trivially with every element of h.
Subgroup annihilator(const Subgroup& h);

/// One representative per coset of parent / subgroup.
class Section {
 public:
  Section(Subgroup subgroup, std::vector<std::size_t> representatives,
          std::vector<std::size_t> coset_of);

  const GroupSpec& parent() const { return subgroup_.parent(); }
  Side side() const { return subgroup_.side(); }
  const Subgroup& subgroup() const { return subgroup_; }
  const std::vector<std::size_t>& representatives() const { return representatives_; }
  std::size_t size() const { return representatives_.size(); }
  /// Position in representatives() of the coset containing `index`.
  std::size_t coset_index(std::size_t index) const { return coset_of_[index]; }

 private:
  Subgroup subgroup_;
  std::vector<std::size_t> representatives_;
  std::vector<std::size_t> coset_of_;
};

/// Scans the parent in index order and keeps the first element of each new
/// coset, so every representative is the index-minimal member of its coset.
Section make_section(const Subgroup& h);

struct CosetSplit {
  GroupElement representative;
  GroupElement offset;  // in the subgroup
};
CosetSplit coset_decompose(const GroupElement& g, const Section& s);

}  // namespace modinv
