#pragma once

// Independent check of the symbolic layer: every generator becomes a sparse
// 0/1 matrix on the basis of a depth-d truncation, and operator identities
// are verified as exact integer matrix identities on interior columns.
//
// A basis vector of length len is interior for an identity whose operator
// words have length at most L when len + L <= d; images of such a vector
// under those words stay inside the truncation, while predecessors never
// get longer.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "permwold/pair.hpp"
#include "permwold/subspace.hpp"
#include "permwold/wold.hpp"

namespace permwold {

/// Exact sparse integer matrix, stored by column.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, std::int64_t>;  // (row, value)

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t size);
  static SparseMatrix diagonal(const std::vector<bool>& mask);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }

  void add(std::size_t row, std::size_t col, std::int64_t value);
  /// Sorted, zero-free entries of one column.
  [[nodiscard]] const std::vector<Entry>& column(std::size_t col) const {
    return columns_[col];
  }
  [[nodiscard]] std::int64_t at(std::size_t row, std::size_t col) const;

  [[nodiscard]] SparseMatrix transpose() const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

struct GeneratorMatrix {
  Family family = Family::S;
  Label label = 1;
  SparseMatrix matrix;

  [[nodiscard]] std::string name() const;
};

struct OracleModel {
  std::variant<std::vector<Elem>, std::vector<PairElem>> basis;
  std::vector<std::string> names;  // printable basis labels
  std::vector<std::size_t> reach;  // depth - length: forward steps that stay in
  std::size_t depth = 0;
  std::size_t base_size = 0;
  std::vector<GeneratorMatrix> generators;
  std::optional<Theta> theta;
  // Membership of each basis vector in the unitary part of S (and T), as
  // computed by the symbolic layer; used for the row-unitary equality check.
  std::vector<bool> s_unitary;
  std::vector<bool> t_unitary;

  [[nodiscard]] std::size_t size() const { return names.size(); }
  [[nodiscard]] bool interior(std::size_t x, std::size_t word_length) const {
    return reach[x] >= word_length;
  }
  [[nodiscard]] std::vector<const GeneratorMatrix*> family(Family f) const;
};

inline constexpr std::size_t kDefaultBasisBudget = 100'000;

/// Throws ResourceError when the truncation would exceed `budget` vectors,
/// std::invalid_argument when depth is 0.
OracleModel materialize(const Presentation& p, std::size_t depth,
                        std::size_t budget = kDefaultBasisBudget);
OracleModel materialize(const CommutingPair& cp, std::size_t depth,
                        std::size_t budget = kDefaultBasisBudget);

std::size_t default_oracle_depth(std::size_t base_size);

struct OracleReport {
  std::vector<std::string> failures;
  // Doubly-commuting displays are reported separately: most pairs are not
  // expected to satisfy them.
  std::vector<std::string> doubly_commuting_failures;
  std::size_t checked_columns = 0;

  [[nodiscard]] bool ok() const { return failures.empty(); }
  [[nodiscard]] bool doubly_commutes() const {
    return doubly_commuting_failures.empty();
  }
};

/// Column structure, G_a^T G_b = δ_ab I within each family, Σ G G^T <= I with
/// equality on the unitary part, and for pairs S_i T_j = T_j' S_i' plus the
/// doubly-commuting displays.
OracleReport verify_relations(const OracleModel& model);

enum class Claim {
  kSInvariant,
  kTInvariant,
  kSReducing,
  kTReducing,
  kSUnitaryOn,
  kSShiftOn,
  kTUnitaryOn,
  kTShiftOn,
};

std::string to_string(Claim claim);

OracleReport verify_subspace(const OracleModel& model,
                             const std::vector<bool>& mask,
                             const std::vector<Claim>& claims);
OracleReport verify_subspace(const OracleModel& model, const SubspaceDesc& sub,
                             const std::vector<Claim>& claims);
OracleReport verify_subspace(const OracleModel& model, const Subspace<PairElem>& sub,
                             const std::vector<Claim>& claims);

}  // namespace permwold
